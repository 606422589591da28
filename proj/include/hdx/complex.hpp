#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "hdx/bits.hpp"
#include "hdx/error.hpp"
#include "hdx/rational.hpp"

namespace hdx {

using VertexId = std::int32_t;

/// A face is a strictly increasing list of interned vertex ids. The empty
/// list is the (-1)-face.
struct Face {
    std::vector<VertexId> vertices;

    int dim() const noexcept { return static_cast<int>(vertices.size()) - 1; }
    std::size_t size() const noexcept { return vertices.size(); }
    bool contains(const Face& other) const;

    friend bool operator==(const Face&, const Face&) = default;
    friend auto operator<=>(const Face&, const Face&) = default;
};

struct FaceHash {
    std::size_t operator()(const Face& f) const noexcept;
};

Face face_union(const Face& a, const Face& b);
Face face_intersection(const Face& a, const Face& b);

/// Subset of X(k), bound to one complex. Addition is symmetric difference.
class Cochain {
public:
    Cochain() = default;
    Cochain(std::uint64_t complex_id, int k, std::size_t n) : complex_id_(complex_id), k_(k), bits_(n) {}
    Cochain(std::uint64_t complex_id, int k, Bits bits) : complex_id_(complex_id), k_(k), bits_(std::move(bits)) {}

    std::uint64_t complex_id() const noexcept { return complex_id_; }
    int dim() const noexcept { return k_; }
    std::size_t universe() const noexcept { return bits_.size(); }
    const Bits& bits() const noexcept { return bits_; }
    Bits& bits() noexcept { return bits_; }

    bool contains(std::size_t i) const noexcept { return bits_.test(i); }
    void insert(std::size_t i) noexcept { bits_.set(i); }
    void erase(std::size_t i) noexcept { bits_.reset(i); }
    void toggle(std::size_t i) noexcept { bits_.flip(i); }

    bool empty() const noexcept { return bits_.none(); }
    std::size_t count() const noexcept { return bits_.count(); }
    std::vector<std::size_t> members() const { return bits_.indices(); }

    bool compatible(const Cochain& o) const noexcept { return complex_id_ == o.complex_id_ && k_ == o.k_; }

    Cochain& operator+=(const Cochain& o);
    friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }

    bool is_subset_of(const Cochain& o) const;

    friend bool operator==(const Cochain& a, const Cochain& b) {
        return a.complex_id_ == b.complex_id_ && a.k_ == b.k_ && a.bits_ == b.bits_;
    }

private:
    std::uint64_t complex_id_ = 0;
    int k_ = -1;
    Bits bits_;
};

/// Immutable pure d-dimensional simplicial complex. Faces of every dimension
/// -1..d are materialized in canonical order (dimension-major, then
/// lexicographic on vertex ids). Vertex ids follow the natural order of the
/// vertex tokens.
class Complex {
public:
    Complex() = default;

    /// Downward closure of the given maximal faces; throws NotPure/EmptyInput.
    static Complex build(const std::vector<std::vector<std::string>>& maximal_faces);

    /// Closure of `top` over an already interned, naturally ordered vertex table.
    static Complex from_top_faces(std::vector<std::string> vertex_names, std::vector<Face> top);

    std::uint64_t id() const noexcept { return id_; }
    int dim() const noexcept { return dim_; }

    std::size_t num_vertices() const noexcept { return names_.size(); }
    const std::vector<std::string>& vertex_names() const noexcept { return names_; }
    const std::string& vertex_name(VertexId v) const { return names_.at(static_cast<std::size_t>(v)); }
    std::optional<VertexId> find_vertex(const std::string& name) const;
    Face face_from_names(const std::vector<std::string>& names) const;
    std::vector<std::string> face_names(const Face& f) const;
    std::string face_label(const Face& f) const;

    std::size_t num_faces(int k) const;
    std::size_t total_faces() const;
    const std::vector<Face>& faces(int k) const;
    const Face& face(int k, std::size_t i) const { return faces(k)[i]; }
    std::optional<std::size_t> find(const Face& f) const;
    std::size_t index_of(const Face& f) const;  // throws FaceNotInComplex
    bool contains(const Face& f) const { return find(f).has_value(); }

    /// Number of d-faces containing face i of dimension k.
    std::int64_t top_count(int k, std::size_t i) const { return top_counts_[lvl(k)][i]; }
    std::int64_t top_count(const Face& f) const;
    /// C(d+1, k+1) * |X(d)|: every k-weight is top_count / denominator(k).
    std::int64_t denominator(int k) const;

    /// Facets (codim 1 subfaces, indices into X(k-1)) of face i in X(k), k >= 0.
    const std::vector<std::uint32_t>& facets(int k, std::size_t i) const { return facets_[lvl(k)][i]; }
    /// Cofacets (indices into X(k+1)) of face i in X(k), k < d.
    const std::vector<std::uint32_t>& cofacets(int k, std::size_t i) const { return cofacets_[lvl(k)][i]; }

    Cochain empty_cochain(int k) const;
    Cochain full_cochain(int k) const;
    Cochain cochain(int k, std::span<const std::size_t> indices) const;
    Cochain cochain_of_faces(int k, const std::vector<Face>& faces) const;
    void check(const Cochain& c) const;  // throws ComplexMismatch

    std::int64_t mass(const Cochain& c) const;
    Rat weight(int k, std::size_t i) const;
    Rat weight(const Face& f) const;
    Rat norm(const Cochain& c) const;

    /// |X_v| counted with the empty face, maximized over vertices.
    std::int64_t max_vertex_link_size() const;

    /// Maximal faces as token lists, in canonical order.
    std::vector<std::vector<std::string>> top_faces_named() const;

    /// Structural equality (vertex tokens and faces), ignores identity.
    bool same_as(const Complex& other) const;

private:
    std::size_t lvl(int k) const;

    std::uint64_t id_ = 0;
    int dim_ = -1;
    std::vector<std::string> names_;
    std::unordered_map<std::string, VertexId> name_index_;
    std::vector<std::vector<Face>> faces_;  // level k+1
    std::vector<std::unordered_map<Face, std::size_t, FaceHash>> index_;
    std::vector<std::vector<std::int64_t>> top_counts_;
    std::vector<std::vector<std::vector<std::uint32_t>>> facets_;
    std::vector<std::vector<std::vector<std::uint32_t>>> cofacets_;
};

/// Natural token order: numeric tokens by value first, then the rest lexicographically.
bool natural_less(const std::string& a, const std::string& b);

Complex build_complex(const std::vector<std::vector<std::string>>& maximal_faces);

Rat weight(const Complex& X, const Face& sigma);
Rat norm(const Complex& X, const Cochain& A);

/// Gamma^r(A): all r-faces containing a member of A.
Cochain container(const Complex& X, const Cochain& A, int r);

/// The link X_sigma together with the index maps back into X.
struct Link {
    Complex complex;
    Face sigma;
    /// to_global[j+1][t]: index in X(j + |sigma|) of sigma ⊔ (face t of X_sigma(j)).
    std::vector<std::vector<std::size_t>> to_global;

    std::size_t global_index(int j, std::size_t t) const { return to_global[static_cast<std::size_t>(j + 1)][t]; }
};

Link link(const Complex& X, const Face& sigma);

/// I_sigma(A) as a cochain of the link.
Cochain localize(const Complex& X, const Link& L, const Cochain& A);
/// I^sigma(B) as a cochain of X.
Cochain lift(const Complex& X, const Link& L, const Cochain& B);

/// ||I_sigma(A)||_sigma from the top counts of X, without building the link.
Rat local_norm(const Complex& X, const Face& sigma, const Cochain& A);

Complex skeleton(const Complex& X, int k);

/// E(A,B): edges with one endpoint in A and the other in B. A, B are 0-cochains.
Cochain edges_between(const Complex& X, const Cochain& A, const Cochain& B);
Cochain vertex_set(const Complex& X, const std::vector<std::string>& names);

}  // namespace hdx
