#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "treecount/multigraph.hpp"

namespace treecount {

// Graph families. Vertex-order convention for build(): p_1..p_n first,
// then q_1..q_m, then the apex (when present).

/// Apex joined to every vertex of K_n by m parallel edges.
struct Cone {
    unsigned m = 1;
    unsigned n = 0;
};

/// K_{m,n} with the edges at q_m replaced by k parallel edges.
struct ModifiedBipartite {
    unsigned k = 1;
    unsigned m = 1;
    unsigned n = 1;
};

/// Every q_i--p_j pair carries k_i parallel edges.
struct GeneralizedBipartite {
    std::vector<unsigned> ks;
    unsigned n = 1;
};

/// GeneralizedBipartite plus an apex joined to each q_i by k parallel edges.
struct HalfCone {
    unsigned k = 1;
    std::vector<unsigned> ks;
    unsigned n = 1;
};

/// Complete multipartite graph on the given part sizes.
struct Multipartite {
    std::vector<unsigned> parts;
};

using FamilySpec =
    std::variant<Cone, ModifiedBipartite, GeneralizedBipartite, HalfCone, Multipartite>;

MultiGraph build(const FamilySpec& spec);

std::string family_name(const FamilySpec& spec);
std::string family_params(const FamilySpec& spec);

// Closed forms.

/// m(m+n)^(n-1); 1 when n = 0.
BigCount formula_cone(unsigned m, unsigned n);

/// n^(n-2); 1 when n <= 2.
BigCount formula_complete(unsigned n);

/// k n^(m-1) (m+k-1)^(n-1).
BigCount formula_modified_bipartite(unsigned k, unsigned m, unsigned n);

/// n^(m-1) m^(n-1).
BigCount formula_bipartite(unsigned m, unsigned n);

/// n^(m-1) (prod k_i) (sum k_i)^(n-1).
BigCount formula_generalized_bipartite(const std::vector<unsigned>& ks, unsigned n);

/// T^(n-1) k sum_i [ k_i prod_{j != i} (k + k_j n) ], with T = sum k_i.
/// Division-free rearrangement of the product-times-sum closed form.
BigCount formula_half_cone(unsigned k, const std::vector<unsigned>& ks, unsigned n);

/// s^n m^n k (k+sn)^(m-1); the all-equal-k_i case.
BigCount formula_half_cone_uniform(unsigned k, unsigned s, unsigned m, unsigned n);

/// n^(p-2) prod (n-n_i)^(n_i-1) over p >= 2 parts, n = sum n_i.
BigCount formula_multipartite(const std::vector<unsigned>& parts);

// Proof-level recurrences; each must agree with its closed form.

/// t(C^m K_n) = sum_{j=1..n} C(n,j) m^j t(C^j K_{n-j}),
/// bases t(C^j K_0) = 1 and t(C^j K_1) = j.
BigCount cone_recurrence_dp(unsigned m, unsigned n);

/// t(M^k K_{m,n}) = sum_{j=1..n} C(n,j) k^j t(M^j K_{n-j+1,m-1}),
/// bases t(M^k K_{m,1}) = k and t(M^k K_{1,n}) = k^n.
BigCount modified_bipartite_recurrence_dp(unsigned k, unsigned m, unsigned n);

// Symmetric-sum machinery.

/// e_r(values): sum of all r-element products; e_0 = 1.
BigCount elementary_symmetric(const std::vector<unsigned>& values, std::size_t r);

/// Both sides of: sum over j-subsets B of the element sums of B equals
/// C(m-1, j-1) * sum(values). Left side by enumeration.
std::pair<BigCount, BigCount> lemma_sum_over_subsets(const std::vector<unsigned>& values,
                                                     std::size_t j);

/// Both sides of: sum over j-subsets B of (prod of complement)(sum of B)
/// equals (m-j+1) e_{m-j+1}(values). Left side by enumeration.
std::pair<BigCount, BigCount> lemma_complement_product_sum(const std::vector<unsigned>& values,
                                                           std::size_t j);

/// sum_{j=1..m} k^j n^(m-j) (m-j+1) e_{m-j+1}(ks) — the expanded
/// x d/dy prod(x + k_i y) at x=k, y=n. Times T^(n-1) it equals
/// formula_half_cone(k, ks, n).
BigCount half_cone_derivative_identity(unsigned k, const std::vector<unsigned>& ks, unsigned n);

/// Exact C(n, r).
BigCount binomial(unsigned long n, unsigned long r);

}  // namespace treecount
