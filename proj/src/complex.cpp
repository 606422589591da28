#include "hdx/complex.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>

namespace hdx {

namespace {

std::uint64_t next_complex_id() {
    static std::atomic<std::uint64_t> counter{1};
    return counter.fetch_add(1, std::memory_order_relaxed);
}

bool is_numeric(const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

std::string_view strip_zeros(const std::string& s) {
    std::size_t i = 0;
    while (i + 1 < s.size() && s[i] == '0') ++i;
    return std::string_view(s).substr(i);
}

}  // namespace

bool natural_less(const std::string& a, const std::string& b) {
    bool na = is_numeric(a), nb = is_numeric(b);
    if (na != nb) return na;
    if (na) {
        auto sa = strip_zeros(a), sb = strip_zeros(b);
        if (sa.size() != sb.size()) return sa.size() < sb.size();
        if (sa != sb) return sa < sb;
    }
    return a < b;
}

bool Face::contains(const Face& other) const {
    return std::includes(vertices.begin(), vertices.end(), other.vertices.begin(), other.vertices.end());
}

std::size_t FaceHash::operator()(const Face& f) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto v : f.vertices) {
        h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL;
        h *= 1099511628211ULL;
    }
    return h;
}

Face face_union(const Face& a, const Face& b) {
    Face r;
    std::set_union(a.vertices.begin(), a.vertices.end(), b.vertices.begin(), b.vertices.end(),
                   std::back_inserter(r.vertices));
    return r;
}

Face face_intersection(const Face& a, const Face& b) {
    Face r;
    std::set_intersection(a.vertices.begin(), a.vertices.end(), b.vertices.begin(), b.vertices.end(),
                          std::back_inserter(r.vertices));
    return r;
}

Cochain& Cochain::operator+=(const Cochain& o) {
    if (!compatible(o)) throw Error(ErrorKind::ComplexMismatch, "adding cochains of different complexes or dimensions");
    bits_ ^= o.bits_;
    return *this;
}

bool Cochain::is_subset_of(const Cochain& o) const {
    if (!compatible(o)) throw Error(ErrorKind::ComplexMismatch, "comparing cochains of different complexes or dimensions");
    return bits_.is_subset_of(o.bits_);
}

Complex Complex::build(const std::vector<std::vector<std::string>>& maximal_faces) {
    std::vector<std::string> names;
    bool any = false;
    for (const auto& f : maximal_faces) {
        if (!f.empty()) any = true;
        names.insert(names.end(), f.begin(), f.end());
    }
    if (!any) throw Error(ErrorKind::EmptyInput, "no faces given");
    std::sort(names.begin(), names.end(), natural_less);
    names.erase(std::unique(names.begin(), names.end()), names.end());

    std::unordered_map<std::string, VertexId> ids;
    for (std::size_t i = 0; i < names.size(); ++i) ids.emplace(names[i], static_cast<VertexId>(i));

    std::vector<Face> faces;
    for (const auto& f : maximal_faces) {
        if (f.empty()) continue;
        Face face;
        for (const auto& n : f) face.vertices.push_back(ids.at(n));
        std::sort(face.vertices.begin(), face.vertices.end());
        if (std::adjacent_find(face.vertices.begin(), face.vertices.end()) != face.vertices.end())
            throw Error(ErrorKind::BadParam, "repeated vertex in a face");
        faces.push_back(std::move(face));
    }
    return from_top_faces(std::move(names), std::move(faces));
}

Complex Complex::from_top_faces(std::vector<std::string> vertex_names, std::vector<Face> input) {
    if (input.empty()) throw Error(ErrorKind::EmptyInput, "no faces given");
    std::size_t top_size = 0;
    for (const auto& f : input) top_size = std::max(top_size, f.size());
    if (top_size == 0) throw Error(ErrorKind::EmptyInput, "only the empty face given");
    if (top_size > 30) throw Error(ErrorKind::TooLarge, "face dimension above 29 is not supported");

    Complex X;
    X.id_ = next_complex_id();
    X.dim_ = static_cast<int>(top_size) - 1;
    X.names_ = std::move(vertex_names);
    for (std::size_t i = 0; i < X.names_.size(); ++i) X.name_index_.emplace(X.names_[i], static_cast<VertexId>(i));

    std::set<Face> tops;
    for (auto& f : input)
        if (f.size() == top_size) tops.insert(f);

    const std::size_t levels = top_size + 1;
    std::vector<std::map<Face, std::int64_t>> counts(levels);
    Face sub;
    for (const auto& top : tops) {
        const std::uint32_t subsets = 1U << top_size;
        for (std::uint32_t mask = 0; mask < subsets; ++mask) {
            sub.vertices.clear();
            for (std::size_t b = 0; b < top_size; ++b)
                if (mask & (1U << b)) sub.vertices.push_back(top.vertices[b]);
            ++counts[sub.vertices.size()][sub];
        }
    }

    X.faces_.resize(levels);
    X.index_.resize(levels);
    X.top_counts_.resize(levels);
    for (std::size_t l = 0; l < levels; ++l) {
        for (auto& [face, count] : counts[l]) {
            X.index_[l].emplace(face, X.faces_[l].size());
            X.faces_[l].push_back(face);
            X.top_counts_[l].push_back(count);
        }
    }
    for (const auto& f : input) {
        if (f.size() != top_size && !X.index_[f.size()].contains(f))
            throw Error(ErrorKind::NotPure, "maximal faces of different dimensions (" + std::to_string(f.size() - 1) +
                                                " vs " + std::to_string(X.dim_) + ")");
    }
    for (std::size_t v = 0; v < X.names_.size(); ++v) {
        if (!X.index_[1].contains(Face{{static_cast<VertexId>(v)}}))
            throw Error(ErrorKind::BadParam, "vertex table contains an unused vertex");
    }

    X.facets_.resize(levels);
    X.cofacets_.resize(levels);
    for (std::size_t l = 0; l < levels; ++l) X.cofacets_[l].resize(X.faces_[l].size());
    for (std::size_t l = 1; l < levels; ++l) {
        X.facets_[l].resize(X.faces_[l].size());
        for (std::size_t i = 0; i < X.faces_[l].size(); ++i) {
            const auto& f = X.faces_[l][i];
            for (std::size_t drop = 0; drop < f.size(); ++drop) {
                Face g;
                g.vertices.reserve(f.size() - 1);
                for (std::size_t j = 0; j < f.size(); ++j)
                    if (j != drop) g.vertices.push_back(f.vertices[j]);
                auto gi = X.index_[l - 1].at(g);
                X.facets_[l][i].push_back(static_cast<std::uint32_t>(gi));
                X.cofacets_[l - 1][gi].push_back(static_cast<std::uint32_t>(i));
            }
            std::sort(X.facets_[l][i].begin(), X.facets_[l][i].end());
        }
    }
    for (auto& level : X.cofacets_)
        for (auto& c : level) std::sort(c.begin(), c.end());
    return X;
}

std::size_t Complex::lvl(int k) const {
    if (k < -1 || k > dim_) throw Error(ErrorKind::BadDimension, "dimension " + std::to_string(k) + " outside -1.." + std::to_string(dim_));
    return static_cast<std::size_t>(k + 1);
}

std::optional<VertexId> Complex::find_vertex(const std::string& name) const {
    auto it = name_index_.find(name);
    if (it == name_index_.end()) return std::nullopt;
    return it->second;
}

Face Complex::face_from_names(const std::vector<std::string>& names) const {
    Face f;
    for (const auto& n : names) {
        auto v = find_vertex(n);
        if (!v) throw Error(ErrorKind::UnknownVertex, "unknown vertex '" + n + "'");
        f.vertices.push_back(*v);
    }
    std::sort(f.vertices.begin(), f.vertices.end());
    f.vertices.erase(std::unique(f.vertices.begin(), f.vertices.end()), f.vertices.end());
    return f;
}

std::vector<std::string> Complex::face_names(const Face& f) const {
    std::vector<std::string> out;
    out.reserve(f.size());
    for (auto v : f.vertices) out.push_back(vertex_name(v));
    return out;
}

std::string Complex::face_label(const Face& f) const {
    std::string s = "{";
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) s += ",";
        s += vertex_name(f.vertices[i]);
    }
    return s + "}";
}

std::size_t Complex::num_faces(int k) const { return faces_[lvl(k)].size(); }

std::size_t Complex::total_faces() const {
    std::size_t n = 0;
    for (const auto& l : faces_) n += l.size();
    return n;
}

const std::vector<Face>& Complex::faces(int k) const { return faces_[lvl(k)]; }

std::optional<std::size_t> Complex::find(const Face& f) const {
    if (f.size() >= faces_.size()) return std::nullopt;
    auto it = index_[f.size()].find(f);
    if (it == index_[f.size()].end()) return std::nullopt;
    return it->second;
}

std::size_t Complex::index_of(const Face& f) const {
    auto i = find(f);
    if (!i) throw Error(ErrorKind::FaceNotInComplex, "face of dimension " + std::to_string(f.dim()) + " is not in the complex");
    return *i;
}

std::int64_t Complex::top_count(const Face& f) const { return top_counts_[f.size()][index_of(f)]; }

std::int64_t Complex::denominator(int k) const {
    return binomial(dim_ + 1, k + 1) * static_cast<std::int64_t>(faces_[lvl(dim_)].size());
}

Cochain Complex::empty_cochain(int k) const { return Cochain(id_, k, num_faces(k)); }

Cochain Complex::full_cochain(int k) const {
    Cochain c = empty_cochain(k);
    c.bits().fill();
    return c;
}

Cochain Complex::cochain(int k, std::span<const std::size_t> indices) const {
    Cochain c = empty_cochain(k);
    for (auto i : indices) {
        if (i >= c.universe()) throw Error(ErrorKind::FaceNotInComplex, "face index out of range");
        c.insert(i);
    }
    return c;
}

Cochain Complex::cochain_of_faces(int k, const std::vector<Face>& faces) const {
    Cochain c = empty_cochain(k);
    for (const auto& f : faces) {
        if (f.dim() != k) throw Error(ErrorKind::BadDimension, "face dimension differs from cochain dimension");
        c.insert(index_of(f));
    }
    return c;
}

void Complex::check(const Cochain& c) const {
    if (c.complex_id() != id_) throw Error(ErrorKind::ComplexMismatch, "cochain belongs to another complex");
    if (c.dim() < -1 || c.dim() > dim_ || c.universe() != num_faces(c.dim()))
        throw Error(ErrorKind::ComplexMismatch, "cochain dimension does not match the complex");
}

std::int64_t Complex::mass(const Cochain& c) const {
    check(c);
    const auto& counts = top_counts_[lvl(c.dim())];
    std::int64_t m = 0;
    const auto& b = c.bits();
    for (std::size_t i = b.first(); i != Bits::npos; i = b.next(i + 1)) m += counts[i];
    return m;
}

Rat Complex::weight(int k, std::size_t i) const { return make_rat(top_count(k, i), denominator(k)); }

Rat Complex::weight(const Face& f) const { return make_rat(top_count(f), denominator(f.dim())); }

Rat Complex::norm(const Cochain& c) const { return make_rat(mass(c), denominator(c.dim())); }

std::int64_t Complex::max_vertex_link_size() const {
    std::vector<std::int64_t> per_vertex(names_.size(), 0);
    for (std::size_t l = 1; l < faces_.size(); ++l)
        for (const auto& f : faces_[l])
            for (auto v : f.vertices) ++per_vertex[static_cast<std::size_t>(v)];
    std::int64_t q = 0;
    for (auto c : per_vertex) q = std::max(q, c);
    return q;
}

std::vector<std::vector<std::string>> Complex::top_faces_named() const {
    std::vector<std::vector<std::string>> out;
    for (const auto& f : faces(dim_)) out.push_back(face_names(f));
    return out;
}

bool Complex::same_as(const Complex& other) const {
    return dim_ == other.dim_ && names_ == other.names_ && faces_ == other.faces_ && top_counts_ == other.top_counts_;
}

Complex build_complex(const std::vector<std::vector<std::string>>& maximal_faces) {
    return Complex::build(maximal_faces);
}

Rat weight(const Complex& X, const Face& sigma) { return X.weight(sigma); }

Rat norm(const Complex& X, const Cochain& A) { return X.norm(A); }

Cochain container(const Complex& X, const Cochain& A, int r) {
    X.check(A);
    const int k = A.dim();
    if (r < k || r > X.dim()) throw Error(ErrorKind::BadDimension, "container dimension must satisfy k <= r <= d");
    Cochain cur = A;
    for (int j = k; j < r; ++j) {
        Cochain up = X.empty_cochain(j + 1);
        for (auto i : cur.members())
            for (auto c : X.cofacets(j, i)) up.insert(c);
        cur = std::move(up);
    }
    return cur;
}

Link link(const Complex& X, const Face& sigma) {
    X.index_of(sigma);
    if (sigma.dim() == X.dim()) throw Error(ErrorKind::BadDimension, "the link of a top face is the empty complex");
    Link L;
    L.sigma = sigma;
    if (sigma.size() == 0) {
        L.complex = X;
        for (int j = -1; j <= X.dim(); ++j) {
            std::vector<std::size_t> id(X.num_faces(j));
            for (std::size_t t = 0; t < id.size(); ++t) id[t] = t;
            L.to_global.push_back(std::move(id));
        }
        return L;
    }

    std::vector<char> used(X.num_vertices(), 0);
    std::vector<Face> tops;
    for (const auto& F : X.faces(X.dim())) {
        if (!F.contains(sigma)) continue;
        Face t;
        std::set_difference(F.vertices.begin(), F.vertices.end(), sigma.vertices.begin(), sigma.vertices.end(),
                            std::back_inserter(t.vertices));
        for (auto v : t.vertices) used[static_cast<std::size_t>(v)] = 1;
        tops.push_back(std::move(t));
    }
    std::vector<VertexId> remap(X.num_vertices(), -1);
    std::vector<VertexId> back;
    std::vector<std::string> names;
    for (std::size_t v = 0; v < used.size(); ++v) {
        if (!used[v]) continue;
        remap[v] = static_cast<VertexId>(names.size());
        back.push_back(static_cast<VertexId>(v));
        names.push_back(X.vertex_name(static_cast<VertexId>(v)));
    }
    for (auto& t : tops)
        for (auto& v : t.vertices) v = remap[static_cast<std::size_t>(v)];
    L.complex = Complex::from_top_faces(std::move(names), std::move(tops));

    for (int j = -1; j <= L.complex.dim(); ++j) {
        std::vector<std::size_t> map;
        map.reserve(L.complex.num_faces(j));
        for (const auto& t : L.complex.faces(j)) {
            Face g;
            for (auto v : t.vertices) g.vertices.push_back(back[static_cast<std::size_t>(v)]);
            std::sort(g.vertices.begin(), g.vertices.end());
            map.push_back(X.index_of(face_union(g, sigma)));
        }
        L.to_global.push_back(std::move(map));
    }
    return L;
}

Cochain localize(const Complex& X, const Link& L, const Cochain& A) {
    X.check(A);
    const int j = A.dim() - static_cast<int>(L.sigma.size());
    if (j < -1 || j > L.complex.dim()) throw Error(ErrorKind::BadDimension, "localization needs |sigma| <= k + 1");
    Cochain out = L.complex.empty_cochain(j);
    const auto& map = L.to_global[static_cast<std::size_t>(j + 1)];
    for (std::size_t t = 0; t < map.size(); ++t)
        if (A.contains(map[t])) out.insert(t);
    return out;
}

Cochain lift(const Complex& X, const Link& L, const Cochain& B) {
    L.complex.check(B);
    const int k = B.dim() + static_cast<int>(L.sigma.size());
    Cochain out = X.empty_cochain(k);
    const auto& map = L.to_global[static_cast<std::size_t>(B.dim() + 1)];
    for (auto t : B.members()) out.insert(map[t]);
    return out;
}

Rat local_norm(const Complex& X, const Face& sigma, const Cochain& A) {
    X.check(A);
    const auto s = static_cast<std::int64_t>(sigma.size());
    const int k = A.dim();
    if (k + 1 < s) throw Error(ErrorKind::BadDimension, "localization needs |sigma| <= k + 1");
    const std::int64_t sigma_count = X.top_count(sigma);
    std::int64_t m = 0;
    for (auto i : A.members()) {
        const auto& f = X.face(k, i);
        if (f.contains(sigma)) m += X.top_count(k, i);
    }
    return make_rat(m, binomial(X.dim() + 1 - s, k + 1 - s) * sigma_count);
}

Complex skeleton(const Complex& X, int k) {
    if (k < 0 || k > X.dim()) throw Error(ErrorKind::BadDimension, "skeleton dimension must be in 0..d");
    if (k == X.dim()) return X;
    return Complex::from_top_faces(X.vertex_names(), X.faces(k));
}

Cochain edges_between(const Complex& X, const Cochain& A, const Cochain& B) {
    X.check(A);
    X.check(B);
    if (A.dim() != 0 || B.dim() != 0) throw Error(ErrorKind::BadDimension, "edges_between takes vertex sets");
    if (X.dim() < 1) throw Error(ErrorKind::BadDimension, "complex has no edges");
    Cochain E = X.empty_cochain(1);
    const auto& edges = X.faces(1);
    for (std::size_t e = 0; e < edges.size(); ++e) {
        auto u = static_cast<std::size_t>(edges[e].vertices[0]);
        auto v = static_cast<std::size_t>(edges[e].vertices[1]);
        if ((A.contains(u) && B.contains(v)) || (A.contains(v) && B.contains(u))) E.insert(e);
    }
    return E;
}

Cochain vertex_set(const Complex& X, const std::vector<std::string>& names) {
    Cochain c = X.empty_cochain(0);
    for (const auto& n : names) {
        auto v = X.find_vertex(n);
        if (!v) throw Error(ErrorKind::UnknownVertex, "unknown vertex '" + n + "'");
        c.insert(static_cast<std::size_t>(*v));
    }
    return c;
}

}  // namespace hdx
