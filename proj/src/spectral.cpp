#include "hdx/spectral.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <deque>
#include <mutex>
#include <limits>
#include <numeric>

#include "hdx/f2.hpp"

namespace hdx {

namespace {

unsigned type_mask(const Face& f, const std::vector<int>& types) {
    unsigned m = 0;
    for (auto v : f.vertices) m |= 1U << static_cast<unsigned>(types[static_cast<std::size_t>(v)]);
    return m;
}

std::string mask_label(unsigned m) {
    std::string s = "{";
    bool first = true;
    for (unsigned t = 0; m >> t; ++t) {
        if (!((m >> t) & 1U)) continue;
        if (!first) s += ",";
        s += std::to_string(t);
        first = false;
    }
    return s + "}";
}

struct WeightedEdge {
    unsigned u, v;
    std::int64_t w;
};

std::vector<WeightedEdge> weighted_edges(const Complex& X) {
    std::vector<WeightedEdge> out;
    if (X.dim() < 1) return out;
    for (std::size_t e = 0; e < X.num_faces(1); ++e) {
        const Face& f = X.face(1, e);
        out.push_back({static_cast<unsigned>(f.vertices[0]), static_cast<unsigned>(f.vertices[1]), X.top_count(1, e)});
    }
    return out;
}

// incident[v]: (other endpoint, weight)
std::vector<std::vector<std::pair<unsigned, std::int64_t>>> incidence(const Complex& X) {
    std::vector<std::vector<std::pair<unsigned, std::int64_t>>> inc(X.num_vertices());
    for (const auto& e : weighted_edges(X)) {
        inc[e.u].push_back({e.v, e.w});
        inc[e.v].push_back({e.u, e.w});
    }
    return inc;
}

std::vector<std::int64_t> vertex_masses(const Complex& X) {
    std::vector<std::int64_t> m(X.num_vertices());
    for (std::size_t v = 0; v < m.size(); ++v) m[v] = X.top_count(0, v);
    return m;
}

Cochain vertex_mask_cochain(const Complex& X, std::uint64_t mask) {
    Cochain c = X.empty_cochain(0);
    for (std::size_t v = 0; v < X.num_vertices(); ++v)
        if ((mask >> v) & 1U) c.insert(v);
    return c;
}

}  // namespace

std::vector<int> infer_types(const Complex& X) {
    const int d = X.dim();
    std::vector<int> types(X.num_vertices(), -1);
    const std::size_t ntop = X.num_faces(d);
    std::vector<bool> seen(ntop, false);

    auto colour = [&](std::size_t t) {
        const Face& F = X.face(d, t);
        std::vector<bool> used(static_cast<std::size_t>(d + 1), false);
        for (auto v : F.vertices) {
            const int ty = types[static_cast<std::size_t>(v)];
            if (ty < 0) continue;
            if (used[static_cast<std::size_t>(ty)])
                throw Error(ErrorKind::NoValidTyping,
                            "two vertices of " + X.face_label(F) + " would share type " + std::to_string(ty));
            used[static_cast<std::size_t>(ty)] = true;
        }
        int next = 0;
        for (auto v : F.vertices) {
            if (types[static_cast<std::size_t>(v)] >= 0) continue;
            while (used[static_cast<std::size_t>(next)]) ++next;
            types[static_cast<std::size_t>(v)] = next;
            used[static_cast<std::size_t>(next)] = true;
        }
    };

    for (std::size_t root = 0; root < ntop; ++root) {
        if (seen[root]) continue;
        std::deque<std::size_t> queue{root};
        seen[root] = true;
        while (!queue.empty()) {
            const std::size_t t = queue.front();
            queue.pop_front();
            colour(t);
            if (d == 0) continue;
            for (auto panel : X.facets(d, t))
                for (auto other : X.cofacets(d - 1, panel))
                    if (!seen[other]) {
                        seen[other] = true;
                        queue.push_back(other);
                    }
        }
    }
    return types;
}

RegularityResult regularity(const Complex& X, std::optional<std::vector<int>> supplied) {
    const int d = X.dim();
    if (d < 0) throw Error(ErrorKind::EmptyInput, "empty complex");
    if (d > 20) throw Error(ErrorKind::TooLarge, "regularity check supports d <= 20");
    std::vector<int> types = supplied ? std::move(*supplied) : infer_types(X);
    if (types.size() != X.num_vertices())
        throw Error(ErrorKind::BadParam, "type map covers " + std::to_string(types.size()) + " of " +
                                             std::to_string(X.num_vertices()) + " vertices");
    for (std::size_t v = 0; v < types.size(); ++v)
        if (types[v] < 0 || types[v] > d)
            throw Error(ErrorKind::NoValidTyping, "vertex " + X.vertex_name(static_cast<VertexId>(v)) +
                                                      " has type outside 0.." + std::to_string(d));

    RegularityResult result;
    const unsigned full = (1U << static_cast<unsigned>(d + 1)) - 1;
    for (std::size_t t = 0; t < X.num_faces(d); ++t) {
        const Face& F = X.face(d, t);
        if (type_mask(F, types) != full) {
            result.violation = RegularityViolation{full, full, F, "top face does not carry one vertex of each type"};
            return result;
        }
    }

    // every face is rainbow now; bucket faces by type set
    std::vector<std::vector<std::pair<int, std::size_t>>> by_mask(full + 1);
    for (int k = -1; k <= d; ++k)
        for (std::size_t i = 0; i < X.num_faces(k); ++i) by_mask[type_mask(X.face(k, i), types)].push_back({k, i});

    RegularStructure R;
    R.types = types;
    R.part_sizes.assign(static_cast<std::size_t>(d + 1), 0);
    for (int ty : types) ++R.part_sizes[static_cast<std::size_t>(ty)];

    for (unsigned J = 0; J <= full; ++J) {
        // for each J-face, bump the unique I-subface for every I ⊆ J
        std::map<unsigned, std::map<std::size_t, std::int64_t>> counts;
        for (auto [k, i] : by_mask[J]) {
            const Face& F = X.face(k, i);
            for (unsigned I = J;; I = (I - 1) & J) {
                Face sub;
                for (auto v : F.vertices)
                    if ((I >> static_cast<unsigned>(types[static_cast<std::size_t>(v)])) & 1U) sub.vertices.push_back(v);
                ++counts[I][X.index_of(sub)];
                if (I == 0) break;
            }
        }
        for (unsigned I = J;; I = (I - 1) & J) {
            const auto& faces = by_mask[I];
            if (!faces.empty()) {
                const auto& c = counts[I];
                auto count_of = [&](std::size_t idx) {
                    auto it = c.find(idx);
                    return it == c.end() ? std::int64_t{0} : it->second;
                };
                const std::int64_t expect = count_of(faces.front().second);
                for (auto [k, i] : faces) {
                    if (count_of(i) != expect) {
                        result.violation = RegularityViolation{
                            I, J, X.face(k, i),
                            X.face_label(X.face(k, i)) + " lies in " + std::to_string(count_of(i)) + " faces of type " +
                                mask_label(J) + ", " + X.face_label(X.face(faces.front().first, faces.front().second)) +
                                " in " + std::to_string(expect)};
                        return result;
                    }
                }
                R.table[{I, J}] = expect;
            }
            if (I == 0) break;
        }
    }
    result.structure = std::move(R);
    return result;
}

BipartiteTypeGraph type_graph(const Complex& X, const RegularStructure& R, int i, int j) {
    const int d = X.dim();
    if (i == j || i < 0 || j < 0 || i > d || j > d) throw Error(ErrorKind::BadParam, "type pair must be two distinct types");
    BipartiteTypeGraph G;
    G.i = i;
    G.j = j;
    std::vector<std::size_t> pos(X.num_vertices(), 0);
    for (std::size_t v = 0; v < X.num_vertices(); ++v) {
        if (R.types[v] == i) {
            pos[v] = G.left.size();
            G.left.push_back(static_cast<VertexId>(v));
        } else if (R.types[v] == j) {
            pos[v] = G.right.size();
            G.right.push_back(static_cast<VertexId>(v));
        }
    }
    std::vector<std::int64_t> ldeg(G.left.size(), 0), rdeg(G.right.size(), 0);
    if (d >= 1) {
        for (const Face& e : X.faces(1)) {
            auto a = static_cast<std::size_t>(e.vertices[0]);
            auto b = static_cast<std::size_t>(e.vertices[1]);
            if (R.types[a] == j && R.types[b] == i) std::swap(a, b);
            if (R.types[a] != i || R.types[b] != j) continue;
            G.edges.push_back({pos[a], pos[b]});
            ++ldeg[pos[a]];
            ++rdeg[pos[b]];
        }
    }
    auto uniform = [](const std::vector<std::int64_t>& deg, std::int64_t& out) {
        if (deg.empty()) return false;
        out = deg.front();
        return std::all_of(deg.begin(), deg.end(), [&](std::int64_t x) { return x == out; }) && out > 0;
    };
    if (!uniform(ldeg, G.left_degree) || !uniform(rdeg, G.right_degree))
        throw Error(ErrorKind::NotBiregular,
                    "type graph (" + std::to_string(i) + "," + std::to_string(j) + ") is not biregular");
    return G;
}

EigenDecomposition jacobi_eigen(std::vector<double> a, std::size_t n, double tol, int max_sweeps) {
    if (a.size() != n * n) throw Error(ErrorKind::BadParam, "matrix size mismatch");
    std::vector<double> v(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;
    auto at = [&](std::size_t r, std::size_t c) -> double& { return a[r * n + c]; };
    auto off_norm = [&] {
        double s = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q)
                if (p != q) s += at(p, q) * at(p, q);
        return std::sqrt(s);
    };

    EigenDecomposition out;
    out.off_diagonal = off_norm();
    while (out.off_diagonal > tol && out.sweeps < max_sweeps) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (apq == 0.0) continue;
                const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = at(k, p), akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = at(p, k), aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double vkp = v[k * n + p], vkq = v[k * n + q];
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
        ++out.sweeps;
        out.off_diagonal = off_norm();
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return at(x, x) > at(y, y); });
    for (auto m : order) {
        out.values.push_back(at(m, m));
        std::vector<double> vec(n);
        for (std::size_t k = 0; k < n; ++k) vec[k] = v[k * n + m];
        out.vectors.push_back(std::move(vec));
    }
    return out;
}

SpectralReport lambda2(const BipartiteTypeGraph& G) {
    const std::size_t nl = G.left.size();
    const std::size_t n = nl + G.right.size();
    std::vector<double> adj(n * n, 0.0);
    for (auto [l, r] : G.edges) {
        adj[l * n + (nl + r)] = 1.0;
        adj[(nl + r) * n + l] = 1.0;
    }
    const EigenDecomposition E = jacobi_eigen(adj, n);

    SpectralReport rep;
    rep.i = G.i;
    rep.j = G.j;
    rep.lambda1 = E.values.front();
    rep.lambda2 = n > 1 ? E.values[1] : 0.0;
    rep.expected_lambda1 = std::sqrt(static_cast<double>(G.left_degree * G.right_degree));
    rep.lambda2_normalized = std::max(rep.lambda2, 0.0) / rep.lambda1;
    rep.disconnected = rep.lambda2 >= rep.lambda1 - 1e-9;
    for (std::size_t m = 0; m < n; ++m) {
        double r2 = 0.0;
        for (std::size_t row = 0; row < n; ++row) {
            double s = 0.0;
            for (std::size_t c = 0; c < n; ++c) s += adj[row * n + c] * E.vectors[m][c];
            const double diff = s - E.values[m] * E.vectors[m][row];
            r2 += diff * diff;
        }
        rep.residual = std::max(rep.residual, std::sqrt(r2));
    }
    return rep;
}

LambdaReport lambda_max(const Complex& X, const RegularStructure& R) {
    LambdaReport out;
    const int d = X.dim();
    for (int i = 0; i <= d; ++i) {
        for (int j = i + 1; j <= d; ++j) {
            SpectralReport rep = lambda2(type_graph(X, R, i, j));
            out.value = std::max(out.value, rep.lambda2_normalized);
            out.pairs.push_back(rep);
        }
    }
    return out;
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Marginal: return "marginal";
        case Verdict::Fail: return "fail";
    }
    return "?";
}

namespace {

double mixing_rhs(int d, double a, double b, double lambda) {
    const double ab = a * b;
    return 2.0 * (d + 1) / d * (ab + lambda * std::sqrt(ab));
}

Verdict judge(double lhs, double rhs) {
    if (lhs <= rhs) return Verdict::Pass;
    if (lhs <= rhs + kMixingSlack) return Verdict::Marginal;
    return Verdict::Fail;
}

}  // namespace

MixingReport mixing_check(const Complex& X, double lambda, const Cochain& A, const Cochain& B) {
    X.check(A);
    X.check(B);
    if (A.dim() != 0 || B.dim() != 0) throw Error(ErrorKind::BadDimension, "mixing check takes vertex sets");
    if (X.dim() < 1) throw Error(ErrorKind::BadDimension, "mixing check needs d >= 1");
    MixingReport rep;
    rep.lambda = lambda;
    rep.norm_a = X.norm(A);
    rep.norm_b = X.norm(B);
    rep.lhs = X.norm(edges_between(X, A, B));
    rep.rhs = mixing_rhs(X.dim(), rep.norm_a.get_d(), rep.norm_b.get_d(), lambda);
    rep.verdict = judge(rep.lhs.get_d(), rep.rhs);
    return rep;
}

MixingScanReport mixing_scan(const Complex& X, double lambda, std::uint64_t cap, unsigned threads) {
    if (X.dim() < 1) throw Error(ErrorKind::BadDimension, "mixing check needs d >= 1");
    const std::size_t n = X.num_vertices();
    require_enumerable(static_cast<int>(2 * n), cap, "exhaustive mixing scan");
    const auto inc = incidence(X);
    const auto vm = vertex_masses(X);
    const double D0 = static_cast<double>(X.denominator(0));
    const double D1 = static_cast<double>(X.denominator(1));
    const int d = X.dim();
    const std::uint64_t subsets = std::uint64_t{1} << n;

    MixingScanReport total;
    total.worst_slack = std::numeric_limits<double>::infinity();
    std::mutex mu;
    parallel_ranges(0, subsets, resolve_threads(threads), [&](std::uint64_t lo, std::uint64_t hi, unsigned) {
        MixingScanReport local;
        local.worst_slack = std::numeric_limits<double>::infinity();
        for (std::uint64_t A = lo; A < hi; ++A) {
            std::int64_t ma = 0;
            for (std::size_t v = 0; v < n; ++v)
                if ((A >> v) & 1U) ma += vm[v];
            const double a = ma / D0;
            std::uint64_t B = 0;
            std::int64_t mb = 0, e = 0;
            for (std::uint64_t g = 0; g < subsets; ++g) {
                if (g > 0) {
                    const unsigned x = static_cast<unsigned>(std::countr_zero(g));
                    const bool xa = (A >> x) & 1U;
                    const bool adding = !((B >> x) & 1U);
                    for (auto [y, w] : inc[x]) {
                        const bool ya = (A >> y) & 1U, yb = (B >> y) & 1U;
                        // {x,y} ∈ E(A,B) iff (x∈A ∧ y∈B) ∨ (y∈A ∧ x∈B)
                        const bool was = (xa && yb) || (ya && !adding);
                        const bool now = (xa && yb) || (ya && adding);
                        if (was != now) e += now ? w : -w;
                    }
                    B ^= std::uint64_t{1} << x;
                    mb += adding ? vm[x] : -vm[x];
                }
                const double lhs = e / D1;
                const double rhs = mixing_rhs(d, a, mb / D0, lambda);
                const double slack = rhs - lhs;
                ++local.pairs;
                const Verdict v = judge(lhs, rhs);
                if (v == Verdict::Fail) ++local.failures;
                if (v == Verdict::Marginal) ++local.marginal;
                if (slack < local.worst_slack ||
                    (slack == local.worst_slack && std::pair{A, B} < std::pair{local.worst_a, local.worst_b})) {
                    local.worst_slack = slack;
                    local.worst_a = A;
                    local.worst_b = B;
                }
            }
        }
        std::lock_guard lock(mu);
        total.pairs += local.pairs;
        total.failures += local.failures;
        total.marginal += local.marginal;
        if (local.worst_slack < total.worst_slack ||
            (local.worst_slack == total.worst_slack &&
             std::pair{local.worst_a, local.worst_b} < std::pair{total.worst_a, total.worst_b})) {
            total.worst_slack = local.worst_slack;
            total.worst_a = local.worst_a;
            total.worst_b = local.worst_b;
        }
    });
    return total;
}

AlphaReport skeleton_alpha_exhaustive(const Complex& X, std::size_t max_vertices, unsigned threads) {
    const std::size_t n = X.num_vertices();
    if (n > max_vertices || n > 40)
        throw Error(ErrorKind::TooLarge, "exhaustive skeleton alpha over " + std::to_string(n) +
                                             " vertices exceeds the cap of " + std::to_string(max_vertices));
    AlphaReport rep;
    rep.mode = AlphaMode::Exhaustive;
    if (X.dim() < 1) {
        // no edges: every A gives -||A|| < 0
        rep.exact = Rat(0);
        return rep;
    }
    const auto inc = incidence(X);
    const auto vm = vertex_masses(X);
    const __int128 D0 = X.denominator(0);
    const __int128 D1 = X.denominator(1);
    const std::uint64_t subsets = std::uint64_t{1} << n;

    // alpha(A) = f(A) / (4 D1 D0) with f(A) = (e D0^2 - 4 D1 m^2) / m
    struct Best {
        __int128 num = 0;
        __int128 mass = 0;  // 0 = none yet
        std::uint64_t set = 0;
    };
    auto better = [](const Best& x, const Best& y) {  // x strictly preferred to y
        if (y.mass == 0) return x.mass != 0;
        if (x.mass == 0) return false;
        const __int128 l = x.num * y.mass, r = y.num * x.mass;
        if (l != r) return l > r;
        return x.set < y.set;
    };
    Best best;
    std::mutex mu;
    parallel_ranges(1, subsets, resolve_threads(threads), [&](std::uint64_t lo, std::uint64_t hi, unsigned) {
        Best local;
        // Gray index g visits set g ^ (g >> 1)
        std::uint64_t set = lo ^ (lo >> 1);
        std::int64_t m = 0, e = 0;
        for (std::size_t v = 0; v < n; ++v) {
            if (!((set >> v) & 1U)) continue;
            m += vm[v];
            for (auto [y, w] : inc[v])
                if (y > v && ((set >> y) & 1U)) e += w;
        }
        for (std::uint64_t g = lo; g < hi; ++g) {
            if (g > lo) {
                const unsigned x = static_cast<unsigned>(std::countr_zero(g));
                const bool adding = !((set >> x) & 1U);
                for (auto [y, w] : inc[x])
                    if ((set >> y) & 1U) e += adding ? w : -w;
                set ^= std::uint64_t{1} << x;
                m += adding ? vm[x] : -vm[x];
            }
            Best cand{static_cast<__int128>(e) * D0 * D0 - 4 * D1 * static_cast<__int128>(m) * m, m, set};
            if (better(cand, local)) local = cand;
        }
        std::lock_guard lock(mu);
        if (better(local, best)) best = local;
    });

    auto to_big = [](__int128 x) {
        const bool neg = x < 0;
        unsigned __int128 u = neg ? static_cast<unsigned __int128>(-x) : static_cast<unsigned __int128>(x);
        BigInt r = BigInt(static_cast<unsigned long>(u >> 64));
        r <<= 64;
        r += BigInt(static_cast<unsigned long>(u & ~std::uint64_t{0}));
        return neg ? BigInt(-r) : r;
    };
    Rat value(to_big(best.num), to_big(best.mass * 4 * D1 * D0));
    value.canonicalize();
    rep.exact = value > 0 ? value : Rat(0);
    rep.value = rep.exact->get_d();
    rep.witness = vertex_mask_cochain(X, best.set);
    return rep;
}

AlphaReport skeleton_alpha(const Complex& X, const AlphaOptions& opts) {
    if (X.num_vertices() <= opts.max_vertices) return skeleton_alpha_exhaustive(X, opts.max_vertices, opts.threads);
    if (!opts.allow_spectral)
        throw Error(ErrorKind::TooLarge, "exhaustive skeleton alpha over " + std::to_string(X.num_vertices()) +
                                             " vertices exceeds the cap of " + std::to_string(opts.max_vertices));
    const RegularityResult reg = regularity(X, opts.types);
    if (!reg.regular())
        throw Error(ErrorKind::TooLarge, "too many vertices for exhaustive alpha and the complex is not regular: " +
                                             reg.violation->reason);
    AlphaReport rep;
    rep.mode = AlphaMode::Spectral;
    rep.value = lambda_max(X, *reg.structure).value;
    return rep;
}

}  // namespace hdx
