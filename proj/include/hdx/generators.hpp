#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hdx/complex.hpp"
#include "hdx/f2.hpp"

namespace hdx {

/// Reference SplitMix64 stream: state += golden gamma, then the two
/// xor-shift-multiply rounds.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next() noexcept {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

enum class GenKind { Complete, CompletePartite, Cycle, ProjectiveFlag, LinialMeshulam };

const char* to_string(GenKind k);
GenKind parse_gen_kind(const std::string& s);

struct GenSpec {
    GenKind kind = GenKind::Complete;
    std::int64_t n = 0;
    std::int64_t d = 0;
    std::int64_t m = 0;
    std::int64_t q = 0;
    std::int64_t p_num = 1, p_den = 1;
    std::uint64_t seed = 0;
    std::uint64_t cap = kDefaultCap;

    /// e.g. "complete(n=5,d=2)"
    std::string describe() const;
};

struct Generated {
    Complex complex;
    std::optional<std::vector<int>> types;  // by vertex id
    std::vector<std::vector<std::string>> dropped;  // lower faces removed by purification
};

Complex complete(std::int64_t n, std::int64_t d, std::uint64_t cap = kDefaultCap);
Generated complete_partite(std::int64_t d, std::int64_t m, std::uint64_t cap = kDefaultCap);
Complex cycle(std::int64_t n);
/// Flags of proper nonzero subspaces of F_q^n, q prime; vertex type = dimension - 1.
Generated projective_flag(std::int64_t q, std::int64_t n, std::uint64_t cap = kDefaultCap);
/// Full (d-1)-skeleton on n vertices plus each d-face with probability
/// p_num/p_den, then its pure part.
Generated linial_meshulam(std::int64_t n, std::int64_t d, std::int64_t p_num, std::int64_t p_den, std::uint64_t seed,
                          std::uint64_t cap = kDefaultCap);

Generated generate(const GenSpec& spec);

/// Gaussian binomial [n choose k]_q.
BigInt gaussian_binomial(std::int64_t n, std::int64_t k, std::int64_t q);
bool is_prime(std::int64_t q);

}  // namespace hdx
