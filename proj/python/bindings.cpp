#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cli.hpp"
#include "hdx/io.hpp"
#include "hdx/report.hpp"

namespace py = pybind11;
using namespace hdx;

namespace {

// Reports cross the boundary as JSON text; the Python side decodes them.
std::string dump(const Json& j) { return j.dump(); }

Rat rat_of(const std::string& text) {
    Rat r;
    if (r.set_str(text, 10) != 0 || r.get_den() == 0) throw Error(ErrorKind::BadParam, "'" + text + "' is not a rational number");
    r.canonicalize();
    return r;
}

EnumerationOptions enum_opts(std::uint64_t cap, unsigned threads) { return {cap, threads}; }

Cochain cochain_of(const Complex& X, int k, const std::vector<std::vector<std::string>>& faces) {
    if (k < -1 || k > X.dim()) throw Error(ErrorKind::BadDimension, "cochain dimension " + std::to_string(k));
    std::vector<Face> fs;
    for (const auto& f : faces) {
        if (static_cast<int>(f.size()) != k + 1)
            throw Error(ErrorKind::BadDimension, "face of size " + std::to_string(f.size()) + " in a " + std::to_string(k) + "-cochain");
        fs.push_back(X.face_from_names(f));
    }
    return X.cochain_of_faces(k, fs);
}

std::vector<std::vector<std::string>> faces_of(const Complex& X, const Cochain& A) {
    std::vector<std::vector<std::string>> out;
    for (auto i : A.members()) out.push_back(X.face_names(X.face(A.dim(), i)));
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact F2 expansion analysis of pure simplicial complexes.";

    static py::exception<Error> hdx_error(m, "HdxError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            hdx_error(e.what());
        }
    });

    m.attr("DEFAULT_CAP") = kDefaultCap;
    m.attr("SCHEMA") = kSchema;
    m.attr("VERSION") = kVersion;

    py::class_<Complex>(m, "Complex")
        .def(py::init([](const std::vector<std::vector<std::string>>& faces) { return Complex::build(faces); }),
             py::arg("maximal_faces"))
        .def_static("parse", [](const std::string& text) { return parse_complex(text); }, py::arg("text"))
        .def_static("load", [](const std::string& path) { return load_complex(path); }, py::arg("path"))
        .def("format", [](const Complex& X) { return format_complex(X); })
        .def("save", [](const Complex& X, const std::string& path) { save_complex(X, path); }, py::arg("path"))
        .def_property_readonly("dim", &Complex::dim)
        .def_property_readonly("num_vertices", &Complex::num_vertices)
        .def("num_faces", &Complex::num_faces, py::arg("k"))
        .def("faces",
             [](const Complex& X, int k) {
                 std::vector<std::vector<std::string>> out;
                 for (const auto& f : X.faces(k)) out.push_back(X.face_names(f));
                 return out;
             },
             py::arg("k"))
        .def("weight",
             [](const Complex& X, const std::vector<std::string>& face) { return dump(to_json(X.weight(X.face_from_names(face)))); },
             py::arg("face"))
        .def("norm",
             [](const Complex& X, int k, const std::vector<std::vector<std::string>>& faces) {
                 return dump(to_json(X.norm(cochain_of(X, k, faces))));
             },
             py::arg("k"), py::arg("faces"))
        .def("info", [](const Complex& X) { return dump(info_json(X)); })
        .def("__repr__", [](const Complex& X) {
            return "<hdx.Complex dim=" + std::to_string(X.dim()) + " vertices=" + std::to_string(X.num_vertices()) +
                   " top_faces=" + std::to_string(X.num_faces(X.dim())) + ">";
        });

    m.def("generate",
          [](const std::string& kind, std::int64_t n, std::int64_t d, std::int64_t m_, std::int64_t q, const std::string& p,
             std::uint64_t seed, std::uint64_t cap) {
              GenSpec s;
              s.kind = parse_gen_kind(kind);
              s.n = n;
              s.d = d;
              s.m = m_;
              s.q = q;
              const Rat pr = rat_of(p);
              s.p_num = pr.get_num().get_si();
              s.p_den = pr.get_den().get_si();
              s.seed = seed;
              s.cap = cap;
              Generated g = generate(s);
              return std::make_pair(std::move(g.complex), g.types);
          },
          py::arg("kind"), py::arg("n") = 0, py::arg("d") = 0, py::arg("m") = 0, py::arg("q") = 0, py::arg("p") = "1",
          py::arg("seed") = 0, py::arg("cap") = kDefaultCap);

    m.def("coboundary",
          [](const Complex& X, int k, const std::vector<std::vector<std::string>>& faces) {
              return faces_of(X, coboundary(X, cochain_of(X, k, faces)));
          },
          py::arg("complex"), py::arg("k"), py::arg("faces"));

    m.def("expansion",
          [](const Complex& X, int k, const std::string& mode, std::uint64_t cap, unsigned threads) {
              ExpansionMode md;
              if (mode == "coboundary") md = ExpansionMode::Coboundary;
              else if (mode == "cocycle") md = ExpansionMode::Cocycle;
              else throw Error(ErrorKind::BadParam, "mode must be 'coboundary' or 'cocycle'");
              return dump(to_json(X, expansion(X, k, md, enum_opts(cap, threads))));
          },
          py::arg("complex"), py::arg("k"), py::arg("mode") = "coboundary", py::arg("cap") = kDefaultCap,
          py::arg("threads") = 0);

    m.def("cosystole",
          [](const Complex& X, int k, std::uint64_t cap, unsigned threads) {
              return dump(to_json(X, cosystole(X, k, enum_opts(cap, threads))));
          },
          py::arg("complex"), py::arg("k"), py::arg("cap") = kDefaultCap, py::arg("threads") = 0);

    m.def("minimize",
          [](const Complex& X, int k, const std::vector<std::vector<std::string>>& faces, std::uint64_t cap, unsigned threads) {
              return dump(to_json(X, locally_minimize(X, cochain_of(X, k, faces), enum_opts(cap, threads))));
          },
          py::arg("complex"), py::arg("k"), py::arg("faces"), py::arg("cap") = kDefaultCap, py::arg("threads") = 0);

    m.def("fat_profile",
          [](const Complex& X, int k, const std::vector<std::vector<std::string>>& faces, const std::string& eta) {
              return dump(to_json(X, fat_profile(X, cochain_of(X, k, faces), rat_of(eta))));
          },
          py::arg("complex"), py::arg("k"), py::arg("faces"), py::arg("eta"));

    m.def("spectrum",
          [](const Complex& X, std::optional<std::vector<int>> types) {
              const RegularityResult reg = regularity(X, std::move(types));
              Json r;
              r["regularity"] = to_json(X, reg);
              if (reg.regular()) r["spectrum"] = to_json(lambda_max(X, *reg.structure));
              return dump(r);
          },
          py::arg("complex"), py::arg("types") = std::nullopt);

    m.def("constants",
          [](int d, const std::string& beta, std::int64_t Q, std::optional<std::int64_t> q) {
              return dump(to_json(constants(d, rat_of(beta), Q, q)));
          },
          py::arg("d"), py::arg("beta") = "1", py::arg("Q") = 1, py::arg("q") = std::nullopt);

    m.def("criterion",
          [](const Complex& X, std::uint64_t cap, unsigned threads, std::size_t alpha_max_vertices) {
              CriterionOptions o;
              o.enumeration = enum_opts(cap, threads);
              o.alpha_max_vertices = alpha_max_vertices;
              return dump(to_json(X, criterion_report(X, o)));
          },
          py::arg("complex"), py::arg("cap") = kDefaultCap, py::arg("threads") = 0, py::arg("alpha_max_vertices") = 20);

    m.def("run_cli",
          [](const std::vector<std::string>& args) {
              std::ostringstream out, err;
              int code;
              {
                  py::gil_scoped_release release;
                  code = run_cli(args, out, err);
              }
              return py::make_tuple(code, out.str(), err.str());
          },
          py::arg("args"));
}
