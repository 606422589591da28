#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hdx/complex.hpp"

namespace hdx {

/// Vertex typing V_0..V_d plus the constant extension counts k_I^J, keyed by
/// type bitmasks (I, J) with I ⊆ J.
struct RegularStructure {
    std::vector<int> types;  // indexed by vertex id
    std::vector<std::size_t> part_sizes;
    std::map<std::pair<unsigned, unsigned>, std::int64_t> table;

    std::int64_t count(unsigned I, unsigned J) const { return table.at({I, J}); }
};

struct RegularityViolation {
    unsigned I = 0, J = 0;
    Face sigma;
    std::string reason;
};

struct RegularityResult {
    std::optional<RegularStructure> structure;
    std::optional<RegularityViolation> violation;

    bool regular() const noexcept { return structure.has_value(); }
};

/// Greedy (d+1)-colouring propagated across shared panels, top faces in
/// canonical order. Throws NoValidTyping.
std::vector<int> infer_types(const Complex& X);

/// Exhaustive regularity check; infers types when none are supplied.
RegularityResult regularity(const Complex& X, std::optional<std::vector<int>> types = std::nullopt);

struct BipartiteTypeGraph {
    int i = 0, j = 0;
    std::vector<VertexId> left, right;
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // (left position, right position)
    std::int64_t left_degree = 0, right_degree = 0;
};

/// X_(i,j): vertices of types i and j with the edges between them. Throws NotBiregular.
BipartiteTypeGraph type_graph(const Complex& X, const RegularStructure& R, int i, int j);

struct EigenDecomposition {
    std::vector<double> values;                // descending
    std::vector<std::vector<double>> vectors;  // vectors[m] pairs with values[m]
    int sweeps = 0;
    double off_diagonal = 0.0;
};

/// Cyclic Jacobi on a dense symmetric n x n matrix (row-major).
EigenDecomposition jacobi_eigen(std::vector<double> matrix, std::size_t n, double tol = 1e-12, int max_sweeps = 100);

struct SpectralReport {
    int i = 0, j = 0;
    double lambda1 = 0.0;
    double lambda2 = 0.0;
    double lambda2_normalized = 0.0;  // max(lambda2, 0) / lambda1
    double expected_lambda1 = 0.0;    // sqrt(k k')
    double residual = 0.0;            // max_m |A v_m - lambda_m v_m|
    bool disconnected = false;
};

SpectralReport lambda2(const BipartiteTypeGraph& G);

struct LambdaReport {
    double value = 0.0;  // lambda(X)
    std::vector<SpectralReport> pairs;
};

/// max over type pairs of the normalized second eigenvalue.
LambdaReport lambda_max(const Complex& X, const RegularStructure& R);

enum class Verdict { Pass, Marginal, Fail };
const char* to_string(Verdict v);

inline constexpr double kMixingSlack = 1e-9;

struct MixingReport {
    Rat lhs;  // ||E(A,B)||
    Rat norm_a, norm_b;
    double lambda = 0.0;
    double rhs = 0.0;  // 2 (d+1)/d (||A|| ||B|| + lambda sqrt(||A|| ||B||))
    Verdict verdict = Verdict::Fail;
};

MixingReport mixing_check(const Complex& X, double lambda, const Cochain& A, const Cochain& B);

struct MixingScanReport {
    std::uint64_t pairs = 0;
    std::uint64_t failures = 0;
    std::uint64_t marginal = 0;
    double worst_slack = 0.0;  // min over pairs of rhs - lhs
    std::uint64_t worst_a = 0, worst_b = 0;  // vertex bitmasks of the tightest pair
};

/// The mixing inequality over every pair (A, B) of vertex sets; needs
/// 2^(2|X(0)|) <= cap.
MixingScanReport mixing_scan(const Complex& X, double lambda, std::uint64_t cap, unsigned threads = 0);

enum class AlphaMode { Exhaustive, Spectral };

struct AlphaReport {
    AlphaMode mode = AlphaMode::Exhaustive;
    std::optional<Rat> exact;        // exhaustive mode
    double value = 0.0;
    std::optional<Cochain> witness;  // maximizing vertex set (exhaustive mode)
};

struct AlphaOptions {
    std::size_t max_vertices = 20;
    bool allow_spectral = true;
    std::optional<std::vector<int>> types;
    unsigned threads = 0;
};

/// Least alpha with ||E(A,A)|| <= 4 (||A||^2 + alpha ||A||) for all A, by
/// exhaustive search; falls back to the spectral certificate lambda(X) for
/// regular complexes above the vertex cap.
AlphaReport skeleton_alpha(const Complex& X, const AlphaOptions& opts = {});
AlphaReport skeleton_alpha_exhaustive(const Complex& X, std::size_t max_vertices = 20, unsigned threads = 0);

}  // namespace hdx
