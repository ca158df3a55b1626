#include "treecount/families.hpp"

#include <bit>
#include <map>
#include <numeric>
#include <sstream>

namespace treecount {

namespace {

BigCount pow_ui(unsigned long base, unsigned long exp) {
    BigCount r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

BigCount pow_big(const BigCount& base, unsigned long exp) {
    BigCount r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

std::string join(const std::vector<unsigned>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s;
}

}  // namespace

BigCount binomial(unsigned long n, unsigned long r) {
    BigCount b;
    mpz_bin_uiui(b.get_mpz_t(), n, r);
    return b;
}

MultiGraph build(const FamilySpec& spec) {
    return std::visit(
        [](const auto& s) -> MultiGraph {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Cone>) {
                MultiGraph g(s.n + 1);
                for (VertexId i = 0; i < s.n; ++i)
                    for (VertexId j = i + 1; j < s.n; ++j) g = g.add_edges(i, j, 1);
                for (VertexId i = 0; i < s.n; ++i) g = g.add_edges(i, s.n, s.m);
                return g;
            } else if constexpr (std::is_same_v<T, ModifiedBipartite>) {
                MultiGraph g(s.n + s.m);
                for (VertexId qi = 0; qi < s.m; ++qi)
                    for (VertexId pj = 0; pj < s.n; ++pj)
                        g = g.add_edges(pj, s.n + qi, qi + 1 == s.m ? s.k : 1);
                return g;
            } else if constexpr (std::is_same_v<T, GeneralizedBipartite>) {
                const auto m = static_cast<VertexId>(s.ks.size());
                MultiGraph g(s.n + m);
                for (VertexId qi = 0; qi < m; ++qi)
                    for (VertexId pj = 0; pj < s.n; ++pj)
                        g = g.add_edges(pj, s.n + qi, s.ks[qi]);
                return g;
            } else if constexpr (std::is_same_v<T, HalfCone>) {
                const auto m = static_cast<VertexId>(s.ks.size());
                MultiGraph g(s.n + m + 1);
                for (VertexId qi = 0; qi < m; ++qi)
                    for (VertexId pj = 0; pj < s.n; ++pj)
                        g = g.add_edges(pj, s.n + qi, s.ks[qi]);
                for (VertexId qi = 0; qi < m; ++qi)
                    g = g.add_edges(s.n + qi, s.n + m, s.k);
                return g;
            } else {
                static_assert(std::is_same_v<T, Multipartite>);
                if (s.parts.size() < 2)
                    throw InvalidPartition("multipartite graph needs at least 2 parts");
                unsigned total = std::accumulate(s.parts.begin(), s.parts.end(), 0u);
                MultiGraph g(total);
                std::vector<unsigned> start(s.parts.size() + 1, 0);
                for (std::size_t i = 0; i < s.parts.size(); ++i)
                    start[i + 1] = start[i] + s.parts[i];
                for (std::size_t a = 0; a < s.parts.size(); ++a)
                    for (std::size_t b = a + 1; b < s.parts.size(); ++b)
                        for (VertexId u = start[a]; u < start[a + 1]; ++u)
                            for (VertexId v = start[b]; v < start[b + 1]; ++v)
                                g = g.add_edges(u, v, 1);
                return g;
            }
        },
        spec);
}

std::string family_name(const FamilySpec& spec) {
    return std::visit(
        [](const auto& s) -> std::string {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Cone>) return "cone";
            else if constexpr (std::is_same_v<T, ModifiedBipartite>) return "modified-bipartite";
            else if constexpr (std::is_same_v<T, GeneralizedBipartite>)
                return "generalized-bipartite";
            else if constexpr (std::is_same_v<T, HalfCone>) return "half-cone";
            else return "multipartite";
        },
        spec);
}

std::string family_params(const FamilySpec& spec) {
    return std::visit(
        [](const auto& s) -> std::string {
            using T = std::decay_t<decltype(s)>;
            std::ostringstream out;
            if constexpr (std::is_same_v<T, Cone>) out << "m=" << s.m << " n=" << s.n;
            else if constexpr (std::is_same_v<T, ModifiedBipartite>)
                out << "k=" << s.k << " m=" << s.m << " n=" << s.n;
            else if constexpr (std::is_same_v<T, GeneralizedBipartite>)
                out << "ks=" << join(s.ks) << " n=" << s.n;
            else if constexpr (std::is_same_v<T, HalfCone>)
                out << "k=" << s.k << " ks=" << join(s.ks) << " n=" << s.n;
            else
                out << "parts=" << join(s.parts);
            return out.str();
        },
        spec);
}

BigCount formula_cone(unsigned m, unsigned n) {
    if (n == 0) return 1;
    return m * pow_ui(m + n, n - 1);
}

BigCount formula_complete(unsigned n) {
    if (n <= 2) return 1;
    return pow_ui(n, n - 2);
}

BigCount formula_modified_bipartite(unsigned k, unsigned m, unsigned n) {
    return k * pow_ui(n, m - 1) * pow_ui(m + k - 1, n - 1);
}

BigCount formula_bipartite(unsigned m, unsigned n) {
    return pow_ui(n, m - 1) * pow_ui(m, n - 1);
}

BigCount formula_generalized_bipartite(const std::vector<unsigned>& ks, unsigned n) {
    BigCount product = 1;
    unsigned long total = 0;
    for (unsigned k : ks) {
        product *= k;
        total += k;
    }
    return pow_ui(n, ks.size() - 1) * product * pow_ui(total, n - 1);
}

BigCount formula_half_cone(unsigned k, const std::vector<unsigned>& ks, unsigned n) {
    unsigned long total = std::accumulate(ks.begin(), ks.end(), 0ul);
    BigCount sum = 0;
    for (std::size_t i = 0; i < ks.size(); ++i) {
        BigCount term = ks[i];
        for (std::size_t j = 0; j < ks.size(); ++j)
            if (j != i) term *= k + static_cast<unsigned long>(ks[j]) * n;
        sum += term;
    }
    return pow_ui(total, n - 1) * k * sum;
}

BigCount formula_half_cone_uniform(unsigned k, unsigned s, unsigned m, unsigned n) {
    return pow_ui(s, n) * pow_ui(m, n) * k * pow_ui(k + static_cast<unsigned long>(s) * n, m - 1);
}

BigCount formula_multipartite(const std::vector<unsigned>& parts) {
    if (parts.size() < 2) throw InvalidPartition("need at least 2 parts");
    unsigned long n = std::accumulate(parts.begin(), parts.end(), 0ul);
    BigCount result = pow_ui(n, parts.size() - 2);
    for (unsigned p : parts) result *= pow_ui(n - p, p - 1);
    return result;
}

BigCount cone_recurrence_dp(unsigned m, unsigned n) {
    std::map<std::pair<unsigned, unsigned>, BigCount> memo;
    auto rec = [&](auto&& self, unsigned mm, unsigned nn) -> BigCount {
        if (nn == 0) return 1;
        if (nn == 1) return mm;
        auto it = memo.find({mm, nn});
        if (it != memo.end()) return it->second;
        BigCount total = 0;
        for (unsigned j = 1; j <= nn; ++j)
            total += binomial(nn, j) * pow_ui(mm, j) * self(self, j, nn - j);
        memo.emplace(std::make_pair(mm, nn), total);
        return total;
    };
    return rec(rec, m, n);
}

BigCount modified_bipartite_recurrence_dp(unsigned k, unsigned m, unsigned n) {
    std::map<std::tuple<unsigned, unsigned, unsigned>, BigCount> memo;
    auto rec = [&](auto&& self, unsigned kk, unsigned mm, unsigned nn) -> BigCount {
        if (nn == 1) return kk;
        if (mm == 1) return pow_ui(kk, nn);
        auto it = memo.find({kk, mm, nn});
        if (it != memo.end()) return it->second;
        BigCount total = 0;
        // swap-and-shrink: identifying j p-vertices turns the pivot side
        // into the new q_m with multiplicity j, on the transposed graph
        for (unsigned j = 1; j <= nn; ++j)
            total += binomial(nn, j) * pow_ui(kk, j) * self(self, j, nn - j + 1, mm - 1);
        memo.emplace(std::make_tuple(kk, mm, nn), total);
        return total;
    };
    return rec(rec, k, m, n);
}

BigCount elementary_symmetric(const std::vector<unsigned>& values, std::size_t r) {
    if (r > values.size()) throw InvalidIndex("symmetric function index out of range");
    std::vector<BigCount> e(r + 1, 0);
    e[0] = 1;
    for (unsigned v : values)
        for (std::size_t i = std::min(r, e.size() - 1); i >= 1; --i) e[i] += v * e[i - 1];
    return e[r];
}

std::pair<BigCount, BigCount> lemma_sum_over_subsets(const std::vector<unsigned>& values,
                                                     std::size_t j) {
    const std::size_t m = values.size();
    if (j < 1 || j > m) throw InvalidIndex("subset size out of range");
    BigCount lhs = 0;
    for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
        if (std::popcount(mask) != static_cast<int>(j)) continue;
        for (std::size_t i = 0; i < m; ++i)
            if (mask & (1ull << i)) lhs += values[i];
    }
    unsigned long total = std::accumulate(values.begin(), values.end(), 0ul);
    BigCount rhs = binomial(m - 1, j - 1) * total;
    return {lhs, rhs};
}

std::pair<BigCount, BigCount> lemma_complement_product_sum(const std::vector<unsigned>& values,
                                                           std::size_t j) {
    const std::size_t m = values.size();
    if (j < 1 || j > m) throw InvalidIndex("subset size out of range");
    BigCount lhs = 0;
    for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
        if (std::popcount(mask) != static_cast<int>(j)) continue;
        BigCount sum = 0, product = 1;
        for (std::size_t i = 0; i < m; ++i) {
            if (mask & (1ull << i))
                sum += values[i];
            else
                product *= values[i];
        }
        lhs += product * sum;
    }
    BigCount rhs = BigCount(m - j + 1) * elementary_symmetric(values, m - j + 1);
    return {lhs, rhs};
}

BigCount half_cone_derivative_identity(unsigned k, const std::vector<unsigned>& ks, unsigned n) {
    const std::size_t m = ks.size();
    BigCount total = 0;
    for (std::size_t j = 1; j <= m; ++j)
        total += pow_ui(k, j) * pow_ui(n, m - j) * BigCount(m - j + 1) *
                 elementary_symmetric(ks, m - j + 1);
    return total;
}

}  // namespace treecount
