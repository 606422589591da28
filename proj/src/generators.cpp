#include "hdx/generators.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace hdx {

namespace {

void need(bool ok, const std::string& msg) {
    if (!ok) throw Error(ErrorKind::BadParam, msg);
}

void check_cap(const BigInt& count, std::uint64_t cap, const std::string& what) {
    if (count > BigInt(static_cast<unsigned long>(cap)))
        throw Error(ErrorKind::TooLarge, what + " needs " + count.get_str() + " elements, cap is " + std::to_string(cap));
}

// All k-subsets of 0..n-1 in lexicographic order.
void for_each_subset(std::int64_t n, std::int64_t k, const std::function<void(const std::vector<std::int64_t>&)>& fn) {
    std::vector<std::int64_t> idx(static_cast<std::size_t>(k));
    for (std::int64_t i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    if (k > n) return;
    while (true) {
        fn(idx);
        std::int64_t i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) return;
        ++idx[static_cast<std::size_t>(i)];
        for (std::int64_t j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

std::vector<std::string> numbered(const std::vector<std::int64_t>& idx) {
    std::vector<std::string> out;
    for (auto i : idx) out.push_back(std::to_string(i));
    return out;
}

std::vector<int> types_by_name(const Complex& X, const std::map<std::string, int>& by_name) {
    std::vector<int> t(X.num_vertices());
    for (std::size_t v = 0; v < t.size(); ++v) t[v] = by_name.at(X.vertex_name(static_cast<VertexId>(v)));
    return t;
}

// Subspaces of F_q^n as reduced row-echelon matrices.
using Row = std::vector<std::int64_t>;
using Matrix = std::vector<Row>;

std::int64_t inverse_mod(std::int64_t a, std::int64_t q) {
    std::int64_t r = 1, e = q - 2;
    a %= q;
    while (e) {
        if (e & 1) r = r * a % q;
        a = a * a % q;
        e >>= 1;
    }
    return r;
}

std::size_t rank_mod(Matrix m, std::int64_t q) {
    std::size_t rank = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t piv = rank;
        while (piv < m.size() && m[piv][c] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[rank]);
        const std::int64_t inv = inverse_mod(m[rank][c], q);
        for (auto& x : m[rank]) x = x * inv % q;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == rank || m[r][c] == 0) continue;
            const std::int64_t f = m[r][c];
            for (std::size_t j = 0; j < cols; ++j) m[r][j] = ((m[r][j] - f * m[rank][j]) % q + q) % q;
        }
        ++rank;
    }
    return rank;
}

std::vector<Matrix> rref_subspaces(std::int64_t n, std::int64_t k, std::int64_t q) {
    std::vector<Matrix> out;
    for_each_subset(n, k, [&](const std::vector<std::int64_t>& pivots) {
        std::vector<std::pair<std::size_t, std::size_t>> free;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            for (std::int64_t c = pivots[r] + 1; c < n; ++c)
                if (!std::binary_search(pivots.begin(), pivots.end(), c)) free.push_back({r, static_cast<std::size_t>(c)});
        Matrix m(static_cast<std::size_t>(k), Row(static_cast<std::size_t>(n), 0));
        for (std::size_t r = 0; r < pivots.size(); ++r) m[r][static_cast<std::size_t>(pivots[r])] = 1;
        std::vector<std::int64_t> digits(free.size(), 0);
        while (true) {
            for (std::size_t f = 0; f < free.size(); ++f) m[free[f].first][free[f].second] = digits[f];
            out.push_back(m);
            std::size_t f = 0;
            while (f < digits.size() && ++digits[f] == q) digits[f++] = 0;
            if (f == digits.size()) break;
        }
    });
    return out;
}

std::string subspace_token(const Matrix& m, std::int64_t q) {
    std::string s = std::to_string(m.size()) + ":";
    for (std::size_t r = 0; r < m.size(); ++r) {
        if (r) s += "/";
        for (std::size_t c = 0; c < m[r].size(); ++c) {
            if (q > 10 && c) s += ",";
            s += std::to_string(m[r][c]);
        }
    }
    return s;
}

}  // namespace

const char* to_string(GenKind k) {
    switch (k) {
        case GenKind::Complete: return "complete";
        case GenKind::CompletePartite: return "complete_partite";
        case GenKind::Cycle: return "cycle";
        case GenKind::ProjectiveFlag: return "projective_flag";
        case GenKind::LinialMeshulam: return "linial_meshulam";
    }
    return "?";
}

GenKind parse_gen_kind(const std::string& s) {
    for (auto k : {GenKind::Complete, GenKind::CompletePartite, GenKind::Cycle, GenKind::ProjectiveFlag,
                   GenKind::LinialMeshulam})
        if (s == to_string(k)) return k;
    throw Error(ErrorKind::BadParam, "unknown generator kind '" + s + "'");
}

std::string GenSpec::describe() const {
    const std::string k = to_string(kind);
    switch (kind) {
        case GenKind::Complete: return k + "(n=" + std::to_string(n) + ",d=" + std::to_string(d) + ")";
        case GenKind::CompletePartite: return k + "(d=" + std::to_string(d) + ",m=" + std::to_string(m) + ")";
        case GenKind::Cycle: return k + "(n=" + std::to_string(n) + ")";
        case GenKind::ProjectiveFlag: return k + "(q=" + std::to_string(q) + ",n=" + std::to_string(n) + ")";
        case GenKind::LinialMeshulam:
            return k + "(n=" + std::to_string(n) + ",d=" + std::to_string(d) + ",p=" + std::to_string(p_num) + "/" +
                   std::to_string(p_den) + ",seed=" + std::to_string(seed) + ")";
    }
    return k;
}

bool is_prime(std::int64_t q) {
    if (q < 2) return false;
    for (std::int64_t f = 2; f * f <= q; ++f)
        if (q % f == 0) return false;
    return true;
}

BigInt gaussian_binomial(std::int64_t n, std::int64_t k, std::int64_t q) {
    if (k < 0 || k > n) return 0;
    BigInt num = 1, den = 1;
    const BigInt Q = static_cast<long>(q);
    for (std::int64_t i = 0; i < k; ++i) {
        BigInt a, b;
        mpz_pow_ui(a.get_mpz_t(), Q.get_mpz_t(), static_cast<unsigned long>(n - i));
        mpz_pow_ui(b.get_mpz_t(), Q.get_mpz_t(), static_cast<unsigned long>(i + 1));
        num *= a - 1;
        den *= b - 1;
    }
    return num / den;
}

Complex complete(std::int64_t n, std::int64_t d, std::uint64_t cap) {
    need(d >= 0, "complete: d must be >= 0");
    need(n > d, "complete: n must exceed d");
    check_cap(BigInt(static_cast<long>(binomial(n, d + 1))), cap, "complete(" + std::to_string(n) + "," + std::to_string(d) + ")");
    std::vector<std::vector<std::string>> tops;
    for_each_subset(n, d + 1, [&](const std::vector<std::int64_t>& s) { tops.push_back(numbered(s)); });
    return Complex::build(tops);
}

Generated complete_partite(std::int64_t d, std::int64_t m, std::uint64_t cap) {
    need(d >= 0, "complete_partite: d must be >= 0");
    need(m >= 1, "complete_partite: m must be >= 1");
    BigInt count;
    mpz_ui_pow_ui(count.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(d + 1));
    check_cap(count, cap, "complete_partite");
    auto name = [](std::int64_t part, std::int64_t i) { return std::to_string(part) + ":" + std::to_string(i); };
    std::vector<std::vector<std::string>> tops;
    std::vector<std::int64_t> pick(static_cast<std::size_t>(d + 1), 0);
    while (true) {
        std::vector<std::string> f;
        for (std::int64_t t = 0; t <= d; ++t) f.push_back(name(t, pick[static_cast<std::size_t>(t)]));
        tops.push_back(std::move(f));
        std::int64_t t = d;
        while (t >= 0 && ++pick[static_cast<std::size_t>(t)] == m) pick[static_cast<std::size_t>(t--)] = 0;
        if (t < 0) break;
    }
    Generated g{Complex::build(tops), std::nullopt, {}};
    std::map<std::string, int> by_name;
    for (std::int64_t t = 0; t <= d; ++t)
        for (std::int64_t i = 0; i < m; ++i) by_name[name(t, i)] = static_cast<int>(t);
    g.types = types_by_name(g.complex, by_name);
    return g;
}

Complex cycle(std::int64_t n) {
    need(n >= 3, "cycle: n must be >= 3");
    std::vector<std::vector<std::string>> tops;
    for (std::int64_t i = 0; i < n; ++i) tops.push_back({std::to_string(i), std::to_string((i + 1) % n)});
    return Complex::build(tops);
}

Generated projective_flag(std::int64_t q, std::int64_t n, std::uint64_t cap) {
    need(n >= 2, "projective_flag: n must be >= 2");
    if (!is_prime(q)) throw Error(ErrorKind::NotPrime, "projective_flag: q = " + std::to_string(q) + " is not prime");
    BigInt qn;
    mpz_ui_pow_ui(qn.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(n));
    check_cap(qn, cap, "projective_flag vector enumeration");
    BigInt total = 0;
    for (std::int64_t k = 1; k < n; ++k) total += gaussian_binomial(n, k, q);
    check_cap(total, cap, "projective_flag subspace enumeration");

    std::vector<std::vector<Matrix>> levels(static_cast<std::size_t>(n));
    for (std::int64_t k = 1; k < n; ++k) levels[static_cast<std::size_t>(k)] = rref_subspaces(n, k, q);

    // up[k][i]: subspaces of dimension k+1 containing subspace i of dimension k
    std::vector<std::vector<std::vector<std::size_t>>> up(static_cast<std::size_t>(n));
    for (std::int64_t k = 1; k + 1 < n; ++k) {
        const auto& lo = levels[static_cast<std::size_t>(k)];
        const auto& hi = levels[static_cast<std::size_t>(k + 1)];
        auto& u = up[static_cast<std::size_t>(k)];
        u.resize(lo.size());
        for (std::size_t i = 0; i < lo.size(); ++i) {
            for (std::size_t j = 0; j < hi.size(); ++j) {
                Matrix both = hi[j];
                both.insert(both.end(), lo[i].begin(), lo[i].end());
                if (rank_mod(both, q) == static_cast<std::size_t>(k + 1)) u[i].push_back(j);
            }
        }
    }

    std::vector<std::vector<std::string>> tokens(static_cast<std::size_t>(n));
    std::map<std::string, int> by_name;
    for (std::int64_t k = 1; k < n; ++k)
        for (const auto& m : levels[static_cast<std::size_t>(k)]) {
            tokens[static_cast<std::size_t>(k)].push_back(subspace_token(m, q));
            by_name[tokens[static_cast<std::size_t>(k)].back()] = static_cast<int>(k - 1);
        }

    std::vector<std::vector<std::string>> tops;
    std::vector<std::string> chain;
    std::function<void(std::int64_t, std::size_t)> extend = [&](std::int64_t k, std::size_t i) {
        chain.push_back(tokens[static_cast<std::size_t>(k)][i]);
        if (k + 1 == n) {
            tops.push_back(chain);
            if (tops.size() > cap) throw Error(ErrorKind::TooLarge, "projective_flag: more than " + std::to_string(cap) + " flags");
        } else {
            for (auto j : up[static_cast<std::size_t>(k)][i]) extend(k + 1, j);
        }
        chain.pop_back();
    };
    for (std::size_t i = 0; i < levels[1].size(); ++i) extend(1, i);

    Generated g{Complex::build(tops), std::nullopt, {}};
    g.types = types_by_name(g.complex, by_name);
    return g;
}

Generated linial_meshulam(std::int64_t n, std::int64_t d, std::int64_t p_num, std::int64_t p_den, std::uint64_t seed,
                          std::uint64_t cap) {
    need(d >= 0, "linial_meshulam: d must be >= 0");
    need(n > d, "linial_meshulam: n must exceed d");
    need(p_den > 0 && p_num >= 0 && p_num <= p_den, "linial_meshulam: p must lie in [0,1]");
    check_cap(BigInt(static_cast<long>(binomial(n, d + 1))), cap, "linial_meshulam");

    SplitMix64 rng(seed);
    // keep iff x / 2^64 < p, compared exactly
    const unsigned __int128 threshold = (static_cast<unsigned __int128>(p_num) << 64);
    std::vector<std::vector<std::string>> tops;
    for_each_subset(n, d + 1, [&](const std::vector<std::int64_t>& s) {
        const unsigned __int128 x = rng.next();
        if (x * static_cast<unsigned __int128>(p_den) < threshold) tops.push_back(numbered(s));
    });
    if (tops.empty())
        throw Error(ErrorKind::EmptyInput, "linial_meshulam kept no " + std::to_string(d) + "-faces, the pure part is empty");

    Generated g{Complex::build(tops), std::nullopt, {}};
    for (std::int64_t k = 1; k <= d; ++k) {
        for_each_subset(n, k, [&](const std::vector<std::int64_t>& s) {
            const auto names = numbered(s);
            bool present = true;
            Face f;
            for (const auto& nm : names) {
                auto v = g.complex.find_vertex(nm);
                if (!v) {
                    present = false;
                    break;
                }
                f.vertices.push_back(*v);
            }
            if (present) {
                std::sort(f.vertices.begin(), f.vertices.end());
                present = g.complex.contains(f);
            }
            if (!present) g.dropped.push_back(names);
        });
    }
    return g;
}

Generated generate(const GenSpec& s) {
    switch (s.kind) {
        case GenKind::Complete: return Generated{complete(s.n, s.d, s.cap), std::nullopt, {}};
        case GenKind::CompletePartite: return complete_partite(s.d, s.m, s.cap);
        case GenKind::Cycle: return Generated{cycle(s.n), std::nullopt, {}};
        case GenKind::ProjectiveFlag: return projective_flag(s.q, s.n, s.cap);
        case GenKind::LinialMeshulam: return linial_meshulam(s.n, s.d, s.p_num, s.p_den, s.seed, s.cap);
    }
    throw Error(ErrorKind::BadParam, "unknown generator");
}

}  // namespace hdx
