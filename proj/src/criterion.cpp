#include "hdx/criterion.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "hdx/minimize.hpp"

namespace hdx {

namespace {

constexpr double kAlphaLogSlack = 1e-12;

BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// Largest beta for which c0 <= 1.
Rat beta_cap(int d) { return Rat((d + 2) * (std::int64_t{1} << (d + 2))); }

enum class Cmp { Below, Above, Marginal };

Cmp compare_alpha_float(double measured, const ConstantsReport& c) {
    if (measured <= 0.0) return Cmp::Below;
    const double lm = std::log2(measured);
    if (lm < c.alpha_log2 - kAlphaLogSlack) return Cmp::Below;
    if (lm > c.alpha_log2 + kAlphaLogSlack) return Cmp::Above;
    return Cmp::Marginal;
}

std::string alpha_text(const AlphaReport& a) {
    if (a.exact) return a.exact->get_str();
    return std::to_string(a.value) + " (spectral)";
}

std::vector<Face> faces_between(const Complex& X, int lo_size, int hi_size) {
    std::vector<Face> out;
    for (int s = lo_size; s <= hi_size; ++s)
        for (const Face& f : X.faces(s - 1)) out.push_back(f);
    return out;
}

IsoCheck iso_scan(const Complex& X, int k, const ConstantsReport& c, const EnumerationOptions& opts) {
    IsoCheck chk;
    chk.k = k;
    const Rat scaled = c.mu_bar * Rat(X.denominator(k));
    const BigInt budget = scaled.get_num() / scaled.get_den();
    chk.mass_budget = fits_int64(budget) ? budget.get_si() : X.denominator(k);

    const std::size_t n = X.num_faces(k);
    std::vector<std::int64_t> w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = X.top_count(k, i);

    std::optional<LocalViews> views;
    Cochain A = X.empty_cochain(k);
    const std::uint64_t limit = opts.cap;
    std::function<void(std::size_t, std::int64_t)> visit = [&](std::size_t from, std::int64_t used) {
        for (std::size_t i = from; i < n; ++i) {
            if (used + w[i] > chk.mass_budget) continue;
            A.insert(i);
            if (++chk.candidates > limit)
                throw Error(ErrorKind::TooLarge, "more than " + std::to_string(limit) + " cochains in C^" +
                                                     std::to_string(k) + " have norm <= mu_bar");
            if (!views) views.emplace(X, k, opts);
            if (views->locally_minimal(A)) {
                ++chk.locally_minimal;
                const Rat lhs = X.norm(coboundary(X, A));
                if (lhs < c.eps_bar * X.norm(A)) {
                    ++chk.failures;
                    chk.pass = false;
                }
            }
            visit(i + 1, used + w[i]);
            A.erase(i);
        }
    };
    visit(0, 0);
    return chk;
}

}  // namespace

ConstantsReport constants(int d, const Rat& beta, std::int64_t Q, std::optional<std::int64_t> q) {
    if (d < 1) throw Error(ErrorKind::BadParam, "constants need d >= 1");
    if (d > 16) throw Error(ErrorKind::BadParam, "constants are evaluated exactly only for d <= 16");
    if (beta <= 0) throw Error(ErrorKind::BadParam, "beta must be positive");
    if (Q < 1) throw Error(ErrorKind::BadParam, "Q must be at least 1");
    if (q && *q < 2) throw Error(ErrorKind::BadParam, "q must be at least 2");

    ConstantsReport r;
    r.d = d;
    r.beta = beta;
    r.Q = Q;
    r.q = q;
    const auto ud = static_cast<unsigned long>(d);
    r.c0 = beta / Rat((d + 2) * (std::int64_t{1} << (d + 2)));
    const Rat c0d = pow(r.c0, ud);
    const Rat inner = c0d / Rat(3 * (d + 2) * (std::int64_t{1} << (d + 3)));
    r.mu = pow(inner, 1UL << (ud + 1));
    r.mu_bar = pow(inner, 1UL << (ud + 1));
    const Rat invQ = make_rat(1, Q);
    r.eps = invQ < r.mu ? invQ : r.mu;
    r.eps_bar = c0d / 3;
    r.alpha_exp_den = 1UL << (ud + 1);
    r.alpha_exp_num = r.alpha_exp_den + 1;
    r.alpha_log2 = log2_of(r.mu) * static_cast<double>(r.alpha_exp_num) / static_cast<double>(r.alpha_exp_den);
    r.alpha_value = std::exp2(r.alpha_log2);

    const BigInt apt = BigInt(1) << ud;
    const BigInt a = apt * factorial(ud + 1);
    const BigInt b = BigInt(192) * factorial(11);
    r.theta_d = a > b ? a : b;
    if (q) {
        r.log2_Q_dq = r.theta_d.get_d() * std::log2(static_cast<double>((d + 1) * (*q + 1)));
        r.ramanujan_lambda_bound = std::exp2(d) * std::pow(static_cast<double>(*q), -(d - 1) / 2.0);
    }
    return r;
}

bool alpha_requirement_met(const Rat& measured, const ConstantsReport& c) {
    if (measured <= 0) return true;
    // measured^den <= mu^num
    return pow(measured, c.alpha_exp_den) <= pow(c.mu, c.alpha_exp_num);
}

const char* to_string(HypothesisVerdict v) {
    switch (v) {
        case HypothesisVerdict::Met: return "met";
        case HypothesisVerdict::BetaUnmet: return "beta requirement not met";
        case HypothesisVerdict::AlphaUnmet: return "alpha requirement not met";
        case HypothesisVerdict::AlphaMarginal: return "alpha requirement marginal";
    }
    return "?";
}

CriterionReport criterion_report(const Complex& X, const CriterionOptions& opts) {
    const int d = X.dim();
    if (d < 1) throw Error(ErrorKind::BadDimension, "the criterion needs d >= 1");
    CriterionReport rep;
    rep.Q = X.max_vertex_link_size();

    AlphaOptions aopts;
    aopts.max_vertices = opts.alpha_max_vertices;
    aopts.threads = opts.enumeration.threads;

    auto measure_alpha = [&](const Complex& L, const std::string& where) {
        try {
            return skeleton_alpha(L, aopts);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::TooLarge && e.kind() != ErrorKind::NoValidTyping) throw;
            throw Error(ErrorKind::TooLarge, "skeleton alpha of " + where + ": " + e.what());
        }
    };

    LinkMeasure whole;
    whole.link_dim = d;
    whole.alpha = measure_alpha(X, "X");
    rep.links.push_back(std::move(whole));

    for (const Face& sigma : faces_between(X, 1, d - 1)) {
        const Link L = link(X, sigma);
        LinkMeasure m;
        m.sigma = sigma;
        m.link_dim = L.complex.dim();
        const std::string where = "the link of " + X.face_label(sigma);
        ExtRat b = ExtRat::infinity();
        for (int k = 0; k < m.link_dim; ++k) {
            ExpansionReport e;
            try {
                e = expansion(L.complex, k, ExpansionMode::Coboundary, opts.enumeration);
            } catch (const Error& err) {
                if (err.kind() != ErrorKind::TooLarge) throw;
                throw Error(ErrorKind::TooLarge, "Exp_b^" + std::to_string(k) + " of " + where + ": " + err.what());
            }
            if (e.value < b) {
                b = e.value;
                m.beta_k = k;
            }
        }
        m.beta = b;
        if (b < rep.beta_star) {
            rep.beta_star = b;
            rep.beta_witness = sigma;
        }
        m.alpha = measure_alpha(L.complex, where);
        rep.links.push_back(std::move(m));
    }

    bool have_exact = false;
    for (const auto& m : rep.links) {
        rep.max_alpha_value = std::max(rep.max_alpha_value, m.alpha.value);
        if (m.alpha.exact && (!have_exact || *m.alpha.exact > rep.max_alpha)) {
            rep.max_alpha = *m.alpha.exact;
            have_exact = true;
        }
    }

    if (!rep.beta_star.is_infinite() && rep.beta_star.value() == 0) {
        rep.verdict = HypothesisVerdict::BetaUnmet;
        rep.reasons.push_back("the link of " + X.face_label(*rep.beta_witness) +
                              " has nonzero cohomology, so its coboundary expansion is 0");
        return rep;
    }

    const Rat cap = beta_cap(d);
    rep.beta_used = rep.beta_star.is_infinite() || rep.beta_star.value() > cap ? cap : rep.beta_star.value();
    rep.constants = constants(d, rep.beta_used, rep.Q);
    const ConstantsReport& c = *rep.constants;

    bool unmet = false, marginal = false;
    for (const auto& m : rep.links) {
        const std::string where = m.sigma.size() == 0 ? "X" : "the link of " + X.face_label(m.sigma);
        Cmp cmp;
        if (m.alpha.exact)
            cmp = alpha_requirement_met(*m.alpha.exact, c) ? Cmp::Below : Cmp::Above;
        else
            cmp = compare_alpha_float(m.alpha.value, c);
        if (cmp == Cmp::Above) {
            unmet = true;
            rep.reasons.push_back("alpha* of " + where + " is " + alpha_text(m.alpha) + ", above the required 2^" +
                                  std::to_string(c.alpha_log2));
        } else if (cmp == Cmp::Marginal) {
            marginal = true;
            rep.reasons.push_back("alpha* of " + where + " is within float slack of the requirement");
        }
    }
    rep.verdict = unmet ? HypothesisVerdict::AlphaUnmet
                        : marginal ? HypothesisVerdict::AlphaMarginal : HypothesisVerdict::Met;
    if (!rep.hypotheses_met()) return rep;

    rep.conclusions_checked = true;
    rep.conclusions_pass = true;
    for (int k = 0; k <= d - 2; ++k) {
        const ExpansionReport e = expansion(X, k, ExpansionMode::Cocycle, opts.enumeration);
        ConclusionCheck chk{"Exp_z", k, e.value, c.eps, e.value >= ExtRat(c.eps)};
        rep.conclusions_pass = rep.conclusions_pass && chk.pass;
        rep.conclusions.push_back(std::move(chk));
    }
    for (int r = 0; r <= d - 1; ++r) {
        const CosystoleReport s = cosystole(X, r, opts.enumeration);
        ConclusionCheck chk{"Syst", r, s.value, c.mu, s.value >= ExtRat(c.mu)};
        rep.conclusions_pass = rep.conclusions_pass && chk.pass;
        rep.conclusions.push_back(std::move(chk));
    }
    for (int k = 0; k <= d - 1; ++k) {
        IsoCheck chk = iso_scan(X, k, c, opts.enumeration);
        rep.conclusions_pass = rep.conclusions_pass && chk.pass;
        rep.iso.push_back(chk);
    }
    return rep;
}

Rat seep_beta(const Complex& X, int k, const EnumerationOptions& opts) {
    if (k < 0 || k >= X.dim()) throw Error(ErrorKind::BadDimension, "seep beta needs 0 <= k <= d-1");
    Rat best(1);  // links of k-faces contribute Exp_b^-1 = 1
    for (const Face& sigma : faces_between(X, 1, k)) {
        const int j = k - static_cast<int>(sigma.size());
        const Link L = link(X, sigma);
        const ExpansionReport e = expansion(L.complex, j, ExpansionMode::Coboundary, opts);
        if (!e.value.is_infinite() && e.value.value() < best) best = e.value.value();
    }
    return best;
}

Rat max_link_alpha(const Complex& X, std::size_t max_vertices, unsigned threads) {
    Rat best = *skeleton_alpha_exhaustive(X, max_vertices, threads).exact;
    for (const Face& sigma : faces_between(X, 1, X.dim() - 1)) {
        const Rat a = *skeleton_alpha_exhaustive(link(X, sigma).complex, max_vertices, threads).exact;
        if (a > best) best = a;
    }
    return best;
}

}  // namespace hdx
