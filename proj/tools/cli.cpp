#include "cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "hdx/criterion.hpp"
#include "hdx/fat.hpp"
#include "hdx/generators.hpp"
#include "hdx/io.hpp"
#include "hdx/minimize.hpp"
#include "hdx/report.hpp"
#include "hdx/spectral.hpp"

namespace hdx {

namespace {

struct Options {
    // global
    unsigned threads = 0;
    std::optional<std::uint64_t> cap;
    bool acknowledge = false;
    std::string format = "json";
    std::string output;

    // input
    std::string path;
    std::string gen;
    std::optional<std::int64_t> n, d, m, q;
    std::string p = "1/2";
    std::uint64_t seed = 0;
    std::string types;

    // verb specific
    std::string kind;
    std::string out;
    std::optional<int> k;
    std::string mode;
    std::string cochain;
    std::string eta;
    std::string beta;
    bool minimize_first = false;
    std::string set_a, set_b;
    bool exhaustive = false;
    std::size_t max_vertices = 20;
    std::int64_t Q = 1;
};

struct Input {
    Complex X;
    std::optional<std::vector<int>> types;
    std::string source;
};

std::uint64_t cap_of(const Options& o) { return o.cap.value_or(kDefaultCap); }

EnumerationOptions enum_opts(const Options& o) { return {cap_of(o), o.threads}; }

Rat parse_rat(const std::string& text, const std::string& what) {
    std::string s = text;
    const auto dot = s.find('.');
    try {
        if (dot != std::string::npos && s.find('/') == std::string::npos) {
            const std::string frac = s.substr(dot + 1);
            s = s.substr(0, dot) + frac + "/1" + std::string(frac.size(), '0');
        }
        if (s.empty() || s.find_first_not_of("0123456789/-") != std::string::npos) throw std::invalid_argument(s);
        Rat r(s);
        if (r.get_den() == 0) throw std::invalid_argument(s);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw Error(ErrorKind::BadParam, what + " '" + text + "' is not a rational number");
    }
}

std::vector<std::string> words(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string w;
    while (in >> w) out.push_back(w);
    return out;
}

// "a b; b c" -> faces; k from --k or the face size
Cochain parse_cochain(const Complex& X, const std::string& text, std::optional<int> k) {
    std::vector<Face> faces;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ';')) {
        const auto names = words(part);
        if (names.empty()) continue;
        faces.push_back(X.face_from_names(names));
    }
    int dim = k.value_or(-2);
    for (const auto& f : faces) {
        if (dim == -2) dim = f.dim();
        if (f.dim() != dim) throw Error(ErrorKind::BadDimension, "cochain faces of different dimensions");
    }
    if (dim == -2) throw Error(ErrorKind::BadParam, "an empty cochain needs --k");
    return X.cochain_of_faces(dim, faces);
}

Input read_input(const Options& o) {
    Input in;
    if (!o.gen.empty()) {
        GenSpec s;
        s.kind = parse_gen_kind(o.gen);
        s.n = o.n.value_or(0);
        s.d = o.d.value_or(0);
        s.m = o.m.value_or(0);
        s.q = o.q.value_or(0);
        const Rat p = parse_rat(o.p, "--p");
        s.p_num = p.get_num().get_si();
        s.p_den = p.get_den().get_si();
        s.seed = o.seed;
        s.cap = cap_of(o);
        Generated g = generate(s);
        in.X = std::move(g.complex);
        in.types = std::move(g.types);
        in.source = s.describe();
    } else {
        in.X = load_complex(o.path);
        in.types = load_sidecar_types(in.X, o.path);
        in.source = o.path;
    }
    if (!o.types.empty()) in.types = load_types(in.X, o.types);
    return in;
}

void add_input(CLI::App* sub, Options& o) {
    sub->add_option("input", o.path, "complex file (.cx)");
    sub->add_option("--gen", o.gen, "generate the input instead: complete, complete_partite, cycle, projective_flag, linial_meshulam");
    sub->add_option("--n", o.n, "generator n");
    sub->add_option("--d", o.d, "generator d");
    sub->add_option("--m", o.m, "generator part size");
    sub->add_option("--q", o.q, "generator field size (prime)");
    sub->add_option("--p", o.p, "generator face probability");
    sub->add_option("--seed", o.seed, "generator seed");
    sub->add_option("--types", o.types, "type sidecar (defaults to <input>.types when present)");
}

Json options_json(const Options& o, const std::string& verb) {
    Json j;
    j["cap"] = cap_of(o);
    j["format"] = o.format;
    auto put = [&](const char* key, const auto& v) { j[key] = v; };
    if (o.k) put("k", *o.k);
    if (!o.mode.empty()) put("mode", o.mode);
    if (!o.cochain.empty()) put("cochain", o.cochain);
    if (!o.eta.empty()) put("eta", o.eta);
    if (!o.beta.empty()) put("beta", o.beta);
    if (o.minimize_first) put("minimize", true);
    if (!o.set_a.empty()) put("a", o.set_a);
    if (!o.set_b.empty()) put("b", o.set_b);
    if (o.exhaustive) put("exhaustive", true);
    if (verb == "skeleton-alpha" || verb == "criterion") put("max_vertices", o.max_vertices);
    if (!o.types.empty()) put("types", o.types);
    if (!o.out.empty()) put("out", o.out);
    if (verb == "constants") {
        if (o.d) put("d", *o.d);
        put("Q", o.Q);
        if (o.q) put("q", *o.q);
    }
    return j;
}

struct Outcome {
    Json result;
    int status = kExitOk;
};

Outcome verb_generate(const Options& o) {
    if (o.kind.empty()) throw Error(ErrorKind::BadParam, "generate needs --kind");
    GenSpec s;
    s.kind = parse_gen_kind(o.kind);
    s.n = o.n.value_or(0);
    s.d = o.d.value_or(0);
    s.m = o.m.value_or(0);
    s.q = o.q.value_or(0);
    const Rat p = parse_rat(o.p, "--p");
    s.p_num = p.get_num().get_si();
    s.p_den = p.get_den().get_si();
    s.seed = o.seed;
    s.cap = cap_of(o);
    const Generated g = generate(s);
    Json r;
    r["spec"] = s.describe();
    r["info"] = {{"dimension", g.complex.dim()}, {"vertices", g.complex.num_vertices()}};
    Json counts = Json::array();
    for (int k = 0; k <= g.complex.dim(); ++k) counts.push_back(g.complex.num_faces(k));
    r["info"]["faces_per_dimension"] = std::move(counts);
    r["dropped"] = g.dropped;
    r["typed"] = g.types.has_value();
    if (!o.out.empty()) {
        save_complex(g.complex, o.out);
        r["complex_file"] = o.out;
        if (g.types) {
            save_types(g.complex, *g.types, types_sidecar(o.out));
            r["types_file"] = types_sidecar(o.out).string();
        }
    } else {
        r["complex"] = format_complex(g.complex);
    }
    return {r};
}

int need_k(const Options& o) {
    if (!o.k) throw Error(ErrorKind::BadParam, "--k is required");
    return *o.k;
}

Outcome verb_expansion(const Options& o, const Input& in) {
    ExpansionMode mode = ExpansionMode::Coboundary;
    if (o.mode == "cocycle")
        mode = ExpansionMode::Cocycle;
    else if (!o.mode.empty() && o.mode != "coboundary")
        throw Error(ErrorKind::BadParam, "--mode must be coboundary or cocycle");
    return {to_json(in.X, expansion(in.X, need_k(o), mode, enum_opts(o)))};
}

Outcome verb_minimize(const Options& o, const Input& in) {
    const Cochain A = parse_cochain(in.X, o.cochain, o.k);
    const MinimizeTrace t = locally_minimize(in.X, A, enum_opts(o));
    Json r = to_json(in.X, t);
    const Rat q_bound = Rat(in.X.max_vertex_link_size()) * in.X.norm(A);
    r["checks"] = {{"locally_minimal", is_locally_minimal(in.X, t.final, enum_opts(o))},
                   {"norm_decreased", in.X.norm(t.final) <= in.X.norm(A)},
                   {"gamma_within_Q_bound", in.X.norm(t.gamma) <= q_bound},
                   {"Q", in.X.max_vertex_link_size()}};
    return {r};
}

Outcome verb_fat(const Options& o, const Input& in) {
    const Cochain A = parse_cochain(in.X, o.cochain, o.k);
    if (o.eta.empty()) throw Error(ErrorKind::BadParam, "--eta is required");
    return {to_json(in.X, fat_profile(in.X, A, parse_rat(o.eta, "--eta")))};
}

Outcome verb_seep(const Options& o, const Input& in) {
    Cochain A = parse_cochain(in.X, o.cochain, o.k);
    if (o.eta.empty()) throw Error(ErrorKind::BadParam, "--eta is required");
    const Rat eta = parse_rat(o.eta, "--eta");
    Json r;
    if (o.minimize_first) {
        A = locally_minimize(in.X, A, enum_opts(o)).final;
        r["minimized"] = to_json(in.X, A);
    }
    const Rat beta = o.beta.empty() ? seep_beta(in.X, A.dim(), enum_opts(o)) : parse_rat(o.beta, "--beta");
    r["beta_source"] = o.beta.empty() ? "measured" : "given";
    try {
        r["seep"] = to_json(verify_seep(in.X, A, eta, beta, enum_opts(o)));
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::PreconditionUnverified) throw;
        r["seep"] = {{"verdict", "precondition unmet"}, {"reason", e.what()}};
        return {r, kExitUnmet};
    }
    const Rat alpha = max_link_alpha(in.X, 20, o.threads);
    try {
        r["upsilon"] = to_json(verify_upsilon_bound(in.X, A, eta, alpha));
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::HypothesisFailed) throw;
        r["upsilon"] = {{"verdict", "hypothesis unmet"}, {"reason", e.what()}, {"link_alpha", to_json(alpha)}};
    }
    return {r};
}

Outcome verb_spectrum(const Options&, const Input& in) {
    const RegularityResult reg = regularity(in.X, in.types);
    Json r;
    r["regularity"] = to_json(in.X, reg);
    if (!reg.regular()) {
        r["verdict"] = "not regular";
        return {r, kExitUnmet};
    }
    r["spectrum"] = to_json(lambda_max(in.X, *reg.structure));
    return {r};
}

Outcome verb_mixing(const Options& o, const Input& in) {
    const RegularityResult reg = regularity(in.X, in.types);
    Json r;
    if (!reg.regular()) {
        r["regularity"] = to_json(in.X, reg);
        r["verdict"] = "not regular";
        return {r, kExitUnmet};
    }
    const double lambda = lambda_max(in.X, *reg.structure).value;
    r["lambda"] = lambda;
    if (o.exhaustive) {
        r["scan"] = to_json(in.X, mixing_scan(in.X, lambda, cap_of(o), o.threads));
    } else {
        const Cochain A = vertex_set(in.X, words(o.set_a));
        const Cochain B = vertex_set(in.X, words(o.set_b));
        r["a"] = to_json(in.X, A);
        r["b"] = to_json(in.X, B);
        r["check"] = to_json(mixing_check(in.X, lambda, A, B));
    }
    return {r};
}

Outcome verb_alpha(const Options& o, const Input& in) {
    AlphaOptions a;
    a.max_vertices = o.max_vertices;
    a.types = in.types;
    a.threads = o.threads;
    if (o.mode == "exhaustive") {
        return {to_json(in.X, skeleton_alpha_exhaustive(in.X, o.max_vertices, o.threads))};
    } else if (o.mode == "spectral") {
        a.max_vertices = 0;
    } else if (!o.mode.empty() && o.mode != "auto") {
        throw Error(ErrorKind::BadParam, "--mode must be auto, exhaustive or spectral");
    }
    if (a.max_vertices < in.X.num_vertices()) {
        const RegularityResult reg = regularity(in.X, in.types);
        if (!reg.regular()) {
            Json r;
            r["regularity"] = to_json(in.X, reg);
            r["verdict"] = "not regular; no spectral certificate";
            return {r, kExitUnmet};
        }
    }
    return {to_json(in.X, skeleton_alpha(in.X, a))};
}

Outcome verb_constants(const Options& o) {
    if (!o.d) throw Error(ErrorKind::BadParam, "--d is required");
    const Rat beta = o.beta.empty() ? Rat(1) : parse_rat(o.beta, "--beta");
    return {to_json(constants(static_cast<int>(*o.d), beta, o.Q, o.q))};
}

Outcome verb_criterion(const Options& o, const Input& in) {
    CriterionOptions c;
    c.enumeration = enum_opts(o);
    c.alpha_max_vertices = o.max_vertices;
    const CriterionReport rep = criterion_report(in.X, c);
    return {to_json(in.X, rep), rep.hypotheses_met() ? kExitOk : kExitUnmet};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Exact F2 high-dimensional expansion analysis of pure simplicial complexes", "hdx"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kVersion));
    app.add_option("--threads", o.threads, "worker threads (default: HDX_THREADS or 1)");
    app.add_option("--cap", o.cap, "enumeration cap (default 2^24)");
    app.add_flag("--i-know-this-is-exponential", o.acknowledge, "allow --cap above the default");
    app.add_option("--format", o.format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
    app.add_option("--output", o.output, "write the report to this file");

    auto* gen = app.add_subcommand("generate", "build an example complex");
    gen->add_option("--kind", o.kind, "complete, complete_partite, cycle, projective_flag, linial_meshulam")->required();
    gen->add_option("--n", o.n);
    gen->add_option("--d", o.d);
    gen->add_option("--m", o.m);
    gen->add_option("--q", o.q);
    gen->add_option("--p", o.p, "face probability for linial_meshulam, e.g. 1/2");
    gen->add_option("--seed", o.seed);
    gen->add_option("--out", o.out, "write the complex here (and a .types sidecar when typed)");

    auto* info = app.add_subcommand("info", "face counts and cohomology dimensions");
    auto* exp = app.add_subcommand("expansion", "coboundary or cocycle expansion");
    auto* cos = app.add_subcommand("cosystole", "minimal norm of a non-trivial cocycle");
    auto* mini = app.add_subcommand("minimize", "local minimization of a cochain");
    auto* fat = app.add_subcommand("fat-profile", "fat faces, ladders and degenerate faces");
    auto* seep = app.add_subcommand("seep-check", "ladder seepage and degenerate-face bounds");
    auto* spec = app.add_subcommand("spectrum", "regularity and type-graph eigenvalues");
    auto* mix = app.add_subcommand("mixing-check", "one-sided skeleton mixing inequality");
    auto* alpha = app.add_subcommand("skeleton-alpha", "least skeleton-expansion alpha");
    auto* cons = app.add_subcommand("constants", "criterion constants for (d, beta, Q)");
    auto* crit = app.add_subcommand("criterion", "full hypothesis and conclusion report");

    for (auto* s : {info, exp, cos, mini, fat, seep, spec, mix, alpha, crit}) add_input(s, o);
    for (auto* s : {exp, cos, mini, fat, seep}) s->add_option("--k", o.k, "cochain dimension");
    exp->add_option("--mode", o.mode, "coboundary or cocycle");
    for (auto* s : {mini, fat, seep}) s->add_option("--cochain", o.cochain, "faces separated by ';', e.g. \"a b; b c\"");
    for (auto* s : {fat, seep}) s->add_option("--eta", o.eta, "fatness constant in (0,1)");
    seep->add_option("--beta", o.beta, "link expansion bound (default: measured)");
    seep->add_flag("--minimize", o.minimize_first, "locally minimize the cochain first");
    mix->add_option("--a", o.set_a, "vertex set A");
    mix->add_option("--b", o.set_b, "vertex set B");
    mix->add_flag("--exhaustive", o.exhaustive, "check every pair of vertex sets");
    alpha->add_option("--mode", o.mode, "auto, exhaustive or spectral");
    for (auto* s : {alpha, crit}) s->add_option("--max-vertices", o.max_vertices, "vertex cap for exhaustive alpha");
    cons->add_option("--d", o.d)->required();
    cons->add_option("--beta", o.beta, "default 1");
    cons->add_option("--Q", o.Q, "degree bound, default 1");
    cons->add_option("--q", o.q, "field size for the building bounds");
    app.fallthrough();

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForVersion& e) {
        out << kVersion << "\n";
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "hdx: " << e.what() << "\n";
        return kExitError;
    }

    CLI::App* sub = app.get_subcommands().front();
    const std::string verb = sub->get_name();
    try {
        if (o.cap && *o.cap > kDefaultCap && !o.acknowledge)
            throw Error(ErrorKind::BadParam, "--cap above 2^24 needs --i-know-this-is-exponential");
        if (o.cap && *o.cap == 0) throw Error(ErrorKind::BadParam, "--cap must be positive");

        Json doc;
        doc["schema"] = kSchema;
        doc["version"] = kVersion;
        doc["command"] = verb;

        Outcome outcome;
        if (verb == "generate") {
            outcome = verb_generate(o);
            doc["input"] = {{"source", "generator"}};
        } else if (verb == "constants") {
            outcome = verb_constants(o);
            doc["input"] = {{"source", "parameters"}};
        } else {
            if (o.path.empty() == o.gen.empty()) throw Error(ErrorKind::BadParam, "give exactly one of an input file or --gen");
            const Input in = read_input(o);
            std::string canonical = format_complex(in.X);
            if (in.types) canonical += format_types(in.X, *in.types);
            doc["input"] = {{"source", in.source}, {"fnv1a64", fnv1a_hex(canonical)}};
            if (verb == "info") {
                outcome = {info_json(in.X)};
            } else if (verb == "expansion") {
                outcome = verb_expansion(o, in);
            } else if (verb == "cosystole") {
                outcome = {to_json(in.X, cosystole(in.X, need_k(o), enum_opts(o)))};
            } else if (verb == "minimize") {
                outcome = verb_minimize(o, in);
            } else if (verb == "fat-profile") {
                outcome = verb_fat(o, in);
            } else if (verb == "seep-check") {
                outcome = verb_seep(o, in);
            } else if (verb == "spectrum") {
                outcome = verb_spectrum(o, in);
            } else if (verb == "mixing-check") {
                outcome = verb_mixing(o, in);
            } else if (verb == "skeleton-alpha") {
                outcome = verb_alpha(o, in);
            } else {
                outcome = verb_criterion(o, in);
            }
        }
        doc["options"] = options_json(o, verb);
        doc["result"] = std::move(outcome.result);
        doc["exit_status"] = outcome.status;

        const std::string text = o.format == "tsv" ? to_tsv(doc) : doc.dump(2) + "\n";
        if (o.output.empty()) {
            out << text;
        } else {
            std::ofstream f(o.output, std::ios::binary);
            if (!f) throw Error(ErrorKind::BadParam, "cannot write " + o.output);
            f << text;
        }
        return outcome.status;
    } catch (const Error& e) {
        err << "hdx: error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        err << "hdx: error: " << e.what() << "\n";
        return kExitError;
    }
}

}  // namespace hdx
