#include "hdx/report.hpp"

#include <cstdio>

namespace hdx {

namespace {

Json big_json(const BigInt& v) {
    if (fits_int64(v)) return static_cast<std::int64_t>(v.get_si());
    return v.get_str();
}

Json bitmask_set(const Complex& X, std::uint64_t mask) {
    Json a = Json::array();
    for (std::size_t v = 0; v < X.num_vertices(); ++v)
        if ((mask >> v) & 1U) a.push_back(X.vertex_name(static_cast<VertexId>(v)));
    return a;
}

Json type_set(unsigned m) {
    Json a = Json::array();
    for (unsigned t = 0; m >> t; ++t)
        if ((m >> t) & 1U) a.push_back(t);
    return a;
}

void flatten(const Json& j, const std::string& path, std::string& out) {
    if (j.is_object()) {
        if (j.empty()) out += path + "\t{}\n";
        for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), out);
    } else if (j.is_array()) {
        if (j.empty()) out += path + "\t[]\n";
        for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", out);
    } else if (j.is_string()) {
        out += path + "\t" + j.get<std::string>() + "\n";
    } else {
        out += path + "\t" + j.dump() + "\n";
    }
}

}  // namespace

Json to_json(const Rat& r) {
    Json j;
    j["num"] = big_json(r.get_num());
    j["den"] = big_json(r.get_den());
    return j;
}

Json to_json(const ExtRat& r) {
    if (r.is_infinite()) return "infinity";
    return to_json(r.value());
}

Json to_json(const Complex& X, const Face& f) {
    Json a = Json::array();
    for (const auto& n : X.face_names(f)) a.push_back(n);
    return a;
}

Json to_json(const Complex& X, const Cochain& c) {
    Json j;
    j["k"] = c.dim();
    Json faces = Json::array();
    for (auto i : c.members()) faces.push_back(to_json(X, X.face(c.dim(), i)));
    j["faces"] = std::move(faces);
    j["norm"] = to_json(X.norm(c));
    return j;
}

Json info_json(const Complex& X) {
    Json j;
    j["dimension"] = X.dim();
    j["vertices"] = X.num_vertices();
    Json faces = Json::array();
    for (int k = 0; k <= X.dim(); ++k) faces.push_back(X.num_faces(k));
    j["faces_per_dimension"] = std::move(faces);
    j["max_vertex_link_size"] = X.max_vertex_link_size();
    Json coh = Json::array();
    for (int k = 0; k <= X.dim(); ++k) {
        const CohomologyDims c = cohomology_dims(X, k);
        coh.push_back({{"k", k}, {"cocycles", c.cocycles}, {"coboundaries", c.coboundaries}, {"cohomology", c.cohomology()}});
    }
    j["cohomology"] = std::move(coh);
    return j;
}

Json to_json(const Complex& X, const ExpansionReport& r) {
    Json j;
    j["k"] = r.k;
    j["mode"] = to_string(r.mode);
    j["value"] = to_json(r.value);
    j["witness"] = r.witness ? to_json(X, *r.witness) : Json(nullptr);
    return j;
}

Json to_json(const Complex& X, const CosystoleReport& r) {
    Json j;
    j["k"] = r.k;
    j["value"] = to_json(r.value);
    j["witness"] = r.witness ? to_json(X, *r.witness) : Json(nullptr);
    return j;
}

Json to_json(const Complex& X, const MinimizeTrace& t) {
    Json j;
    j["initial"] = to_json(X, t.initial);
    j["final"] = to_json(X, t.final);
    j["gamma"] = to_json(X, t.gamma);
    Json steps = Json::array();
    for (const auto& s : t.steps) {
        Json c = Json::array();
        for (const auto& f : s.link_cochain) c.push_back(to_json(X, f));
        steps.push_back({{"sigma", to_json(X, s.sigma)}, {"link_cochain", std::move(c)}, {"lifted", to_json(X, s.lifted)}});
    }
    j["steps"] = std::move(steps);
    return j;
}

Json to_json(const Complex& X, const FatProfile& p) {
    Json j;
    j["k"] = p.k;
    j["eta"] = to_json(p.eta);
    Json levels = Json::array();
    for (int i = -1; i <= p.k; ++i) {
        levels.push_back({{"i", i},
                          {"threshold", i < p.k ? to_json(fatness_threshold(p.eta, p.k, i + 1)) : Json(nullptr)},
                          {"fat", to_json(X, p.S(i))},
                          {"ladder", to_json(X, p.L(i))}});
    }
    j["levels"] = std::move(levels);
    j["upsilon"] = to_json(X, p.upsilon);
    return j;
}

Json to_json(const SeepReport& r) {
    Json j;
    j["k"] = r.k;
    j["eta"] = to_json(r.eta);
    j["beta"] = to_json(r.beta);
    Json rows = Json::array();
    for (const auto& row : r.rows) {
        rows.push_back({{"i", row.i},
                        {"lhs", to_json(row.lhs)},
                        {"delta_norm", to_json(row.delta_norm)},
                        {"ladder_below", to_json(row.ladder_below)},
                        {"upsilon_norm", to_json(row.upsilon_norm)},
                        {"rhs", to_json(row.rhs)},
                        {"pass", row.pass}});
    }
    j["rows"] = std::move(rows);
    j["pass"] = r.pass;
    return j;
}

Json to_json(const UpsilonReport& r) {
    Json j;
    j["k"] = r.k;
    j["eta"] = to_json(r.eta);
    j["link_alpha"] = to_json(r.link_alpha);
    j["alpha_bound"] = to_json(r.alpha_bound);
    j["upsilon_norm"] = to_json(r.upsilon_norm);
    j["rhs"] = to_json(r.rhs);
    j["pass"] = r.pass;
    return j;
}

Json to_json(const Complex& X, const RegularityResult& r) {
    Json j;
    j["regular"] = r.regular();
    if (r.structure) {
        const auto& R = *r.structure;
        Json types;
        for (std::size_t v = 0; v < R.types.size(); ++v) types[X.vertex_name(static_cast<VertexId>(v))] = R.types[v];
        j["types"] = std::move(types);
        j["part_sizes"] = R.part_sizes;
        Json table = Json::array();
        for (const auto& [key, count] : R.table)
            table.push_back({{"I", type_set(key.first)}, {"J", type_set(key.second)}, {"count", count}});
        j["table"] = std::move(table);
    }
    if (r.violation) {
        j["violation"] = {{"I", type_set(r.violation->I)},
                          {"J", type_set(r.violation->J)},
                          {"sigma", to_json(X, r.violation->sigma)},
                          {"reason", r.violation->reason}};
    }
    return j;
}

Json to_json(const SpectralReport& r) {
    Json j;
    j["pair"] = {r.i, r.j};
    j["lambda2_norm"] = r.lambda2_normalized;
    j["lambda1"] = r.lambda1;
    j["lambda2"] = r.lambda2;
    j["expected_lambda1"] = r.expected_lambda1;
    j["residual"] = r.residual;
    j["disconnected"] = r.disconnected;
    return j;
}

Json to_json(const LambdaReport& r) {
    Json j;
    j["lambda"] = r.value;
    Json pairs = Json::array();
    for (const auto& p : r.pairs) pairs.push_back(to_json(p));
    j["pairs"] = std::move(pairs);
    return j;
}

Json to_json(const MixingReport& r) {
    Json j;
    j["lhs"] = to_json(r.lhs);
    j["lhs_value"] = r.lhs.get_d();
    j["norm_a"] = to_json(r.norm_a);
    j["norm_b"] = to_json(r.norm_b);
    j["lambda"] = r.lambda;
    j["rhs"] = r.rhs;
    j["slack"] = kMixingSlack;
    j["verdict"] = to_string(r.verdict);
    return j;
}

Json to_json(const Complex& X, const MixingScanReport& r) {
    Json j;
    j["pairs"] = r.pairs;
    j["failures"] = r.failures;
    j["marginal"] = r.marginal;
    j["worst_slack"] = r.worst_slack;
    j["worst_a"] = bitmask_set(X, r.worst_a);
    j["worst_b"] = bitmask_set(X, r.worst_b);
    j["verdict"] = r.failures ? "fail" : r.marginal ? "marginal" : "pass";
    return j;
}

Json to_json(const Complex& X, const AlphaReport& r) {
    Json j;
    j["mode"] = r.mode == AlphaMode::Exhaustive ? "exhaustive" : "spectral";
    j["alpha"] = r.exact ? to_json(*r.exact) : Json(nullptr);
    j["value"] = r.value;
    j["witness"] = r.witness ? to_json(X, *r.witness) : Json(nullptr);
    return j;
}

Json to_json(const ConstantsReport& c) {
    Json j;
    j["d"] = c.d;
    j["beta"] = to_json(c.beta);
    j["Q"] = c.Q;
    j["q"] = c.q ? Json(*c.q) : Json(nullptr);
    j["c0"] = to_json(c.c0);
    j["mu"] = to_json(c.mu);
    j["mu_bar"] = to_json(c.mu_bar);
    j["mu_log2"] = log2_of(c.mu);
    j["eps"] = to_json(c.eps);
    j["eps_bar"] = to_json(c.eps_bar);
    j["alpha"] = {{"base", "mu"},
                  {"exponent", {{"num", c.alpha_exp_num}, {"den", c.alpha_exp_den}}},
                  {"log2", c.alpha_log2},
                  {"value", c.alpha_value}};
    j["theta_d"] = big_json(c.theta_d);
    j["log2_Q_dq"] = c.log2_Q_dq ? Json(*c.log2_Q_dq) : Json(nullptr);
    j["ramanujan_lambda_bound"] = c.ramanujan_lambda_bound ? Json(*c.ramanujan_lambda_bound) : Json(nullptr);
    return j;
}

Json to_json(const Complex& X, const CriterionReport& r) {
    Json j;
    j["Q"] = r.Q;
    j["beta_star"] = to_json(r.beta_star);
    j["beta_witness"] = r.beta_witness ? to_json(X, *r.beta_witness) : Json(nullptr);
    j["beta_used"] = r.constants ? to_json(r.beta_used) : Json(nullptr);
    Json links = Json::array();
    for (const auto& m : r.links) {
        Json l;
        l["sigma"] = to_json(X, m.sigma);
        l["link_dimension"] = m.link_dim;
        l["beta"] = m.beta ? to_json(*m.beta) : Json(nullptr);
        l["beta_k"] = m.beta ? Json(m.beta_k) : Json(nullptr);
        l["alpha"] = m.alpha.exact ? to_json(*m.alpha.exact) : Json(nullptr);
        l["alpha_value"] = m.alpha.value;
        l["alpha_mode"] = m.alpha.mode == AlphaMode::Exhaustive ? "exhaustive" : "spectral";
        links.push_back(std::move(l));
    }
    j["links"] = std::move(links);
    j["max_alpha"] = to_json(r.max_alpha);
    j["constants"] = r.constants ? to_json(*r.constants) : Json(nullptr);
    j["hypotheses"] = {{"verdict", to_string(r.verdict)}, {"met", r.hypotheses_met()}, {"reasons", r.reasons}};
    if (!r.conclusions_checked) {
        j["conclusions"] = "hypotheses unmet; theorem silent";
    } else {
        Json c;
        Json checks = Json::array();
        for (const auto& chk : r.conclusions)
            checks.push_back({{"quantity", chk.quantity},
                              {"k", chk.k},
                              {"measured", to_json(chk.measured)},
                              {"bound", to_json(chk.bound)},
                              {"pass", chk.pass}});
        c["cosystolic"] = std::move(checks);
        Json iso = Json::array();
        for (const auto& s : r.iso)
            iso.push_back({{"k", s.k},
                           {"mass_budget", s.mass_budget},
                           {"candidates", s.candidates},
                           {"locally_minimal", s.locally_minimal},
                           {"failures", s.failures},
                           {"pass", s.pass}});
        c["isoperimetric"] = std::move(iso);
        c["pass"] = r.conclusions_pass;
        j["conclusions"] = std::move(c);
    }
    return j;
}

std::string fnv1a_hex(const std::string& data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string to_tsv(const Json& j) {
    std::string out;
    flatten(j, "", out);
    return out;
}

}  // namespace hdx
