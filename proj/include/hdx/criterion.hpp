#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hdx/cohomology.hpp"
#include "hdx/complex.hpp"
#include "hdx/spectral.hpp"

namespace hdx {

/// The constants of the local-to-global criterion for given (d, beta, Q).
struct ConstantsReport {
    int d = 0;
    Rat beta;
    std::int64_t Q = 1;
    std::optional<std::int64_t> q;

    Rat c0;       // beta / ((d+2) 2^(d+2))
    Rat mu;       // ((1/(3(d+2)2^(d+3))) c0^d)^(2^(d+1))
    Rat mu_bar;   // same expression
    Rat eps;      // min(1/Q, mu)
    Rat eps_bar;  // c0^d / 3
    // alpha = mu^(num/den), kept symbolic
    std::uint64_t alpha_exp_num = 0, alpha_exp_den = 0;
    double alpha_log2 = 0.0;
    double alpha_value = 0.0;  // 0 when below double range

    BigInt theta_d;                      // max(2^d (d+1)!, 192 * 11!)
    std::optional<double> log2_Q_dq;     // theta_d * log2((d+1)(q+1))
    std::optional<double> ramanujan_lambda_bound;  // 2^d q^(-(d-1)/2)
};

ConstantsReport constants(int d, const Rat& beta, std::int64_t Q, std::optional<std::int64_t> q = std::nullopt);

/// measured <= mu^(1 + 1/2^(d+1)), decided exactly.
bool alpha_requirement_met(const Rat& measured, const ConstantsReport& c);

struct CriterionOptions {
    EnumerationOptions enumeration;
    std::size_t alpha_max_vertices = 20;
};

struct LinkMeasure {
    Face sigma;                 // empty for X itself
    int link_dim = 0;
    std::optional<ExtRat> beta;  // min_k Exp_b^k(X_sigma), 1 <= |sigma| <= d-1
    int beta_k = -1;             // dimension attaining it
    AlphaReport alpha;
};

struct ConclusionCheck {
    std::string quantity;  // "Exp_z" or "Syst"
    int k = 0;
    ExtRat measured;
    Rat bound;
    bool pass = false;
};

struct IsoCheck {
    int k = 0;
    std::int64_t mass_budget = 0;     // ||A|| <= mu_bar  <=>  mass(A) <= budget
    std::uint64_t candidates = 0;     // nonempty A within the budget
    std::uint64_t locally_minimal = 0;
    std::uint64_t failures = 0;
    bool pass = true;
};

enum class HypothesisVerdict { Met, BetaUnmet, AlphaUnmet, AlphaMarginal };
const char* to_string(HypothesisVerdict v);

struct CriterionReport {
    std::int64_t Q = 0;
    ExtRat beta_star;  // infinity when there are no proper links with cochains to test
    std::optional<Face> beta_witness;
    std::vector<LinkMeasure> links;  // index 0 is X itself
    Rat max_alpha;                   // over exhaustive measurements
    double max_alpha_value = 0.0;    // including spectral certificates
    Rat beta_used;
    std::optional<ConstantsReport> constants;
    HypothesisVerdict verdict = HypothesisVerdict::BetaUnmet;
    std::vector<std::string> reasons;
    std::vector<ConclusionCheck> conclusions;
    std::vector<IsoCheck> iso;
    bool conclusions_checked = false;
    bool conclusions_pass = false;

    bool hypotheses_met() const noexcept { return verdict == HypothesisVerdict::Met; }
};

CriterionReport criterion_report(const Complex& X, const CriterionOptions& opts = {});

/// min over links X_sigma, 1 <= |sigma| <= k+1, of Exp_b^(k-|sigma|)(X_sigma),
/// where dimension -1 contributes 1. The beta the seepage inequality needs.
Rat seep_beta(const Complex& X, int k, const EnumerationOptions& opts = {});

/// max alpha* over the links X_sigma, 0 <= |sigma| <= d-1, by exhaustive search.
Rat max_link_alpha(const Complex& X, std::size_t max_vertices = 20, unsigned threads = 0);

}  // namespace hdx
