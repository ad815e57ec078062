#ifndef TWC_CONSTRUCTIONS_HPP
#define TWC_CONSTRUCTIONS_HPP

#include <vector>

#include "twc/multiset.hpp"

namespace twc {

enum class RecipeKind {
    subspace,
    subspace_complement,
    two_subspace,
    partial_spread,
    hyperplane_sum,
    gamma_tight,
    series_S,
    series_P,
    series_K,
};

struct Predicted {
    long long n = 0, s = 0, t = 0, gamma = 0, mu = 0;
};

struct ConstructionRecipe {
    RecipeKind kind;
    std::vector<long long> parameters;
    Predicted predicted;
};

/// chi of the l-space spanned by the first l unit vectors; 1 <= l < k.
/// Values: n = [l]_q, s = [l]_q, t = [l-1]_q, gamma = 1, mu = 0.
PointMultiset subspace(const Geometry& geo, int l);
ConstructionRecipe subspace_recipe(const Geometry& geo, int l);

/// chi_V - chi_S for an l-space S; values are [k-1]_q minus those of chi_S.
PointMultiset subspace_complement(const Geometry& geo, int l);
ConstructionRecipe subspace_complement_recipe(const Geometry& geo, int l);

/// chi_A + q^{a-b} * chi_B for an a-space A and b-space B with dim(A cap B) = i;
/// requires a >= b >= 1, 0 <= i <= b-1, and k = a + b - i.
/// Values {[a-1]_q + q^{a-b}[b-1]_q, same + q^{a-1}}; n = [a]_q + q^{a-b}[b]_q;
/// gamma = q^{a-b} for i = 0 and q^{a-b} + 1 otherwise; mu = 0.
PointMultiset two_subspace(const Geometry& geo, int a, int b, int i);
ConstructionRecipe two_subspace_recipe(const Geometry& geo, int a, int b, int i);

/// Point-index sets of all subspaces of vector dimension m, each sorted,
/// the list sorted lexicographically.
std::vector<std::vector<int>> enumerate_subspaces(const Geometry& geo, int m);

/// Sum of chi over r pairwise-disjoint (k/2)-spaces, r = sum of spread_sizes;
/// requires k even.  Packed greedily over the fixed point order with
/// backtracking bounded by node_budget.
/// Values {r[m-1]_q, r[m-1]_q + q^{m-1}}, n = r[m]_q, with m = k/2; for a full
/// spread the two values collapse to the larger one (chi_V).
PointMultiset partial_spread_sum(const Geometry& geo, const std::vector<long long>& spread_sizes,
                                 long long node_budget = 1000000);
ConstructionRecipe partial_spread_recipe(const Geometry& geo, const std::vector<long long>& spread_sizes);

/// Sum of chi_H over the given hyperplane index set (proper and nonempty);
/// requires k >= 3.  Values {r[k-2]_q + q^{k-2}, r[k-2]_q}.  With reduce_mu,
/// min_P M(P) copies of chi_V are subtracted first.
PointMultiset hyperplane_sum(const Geometry& geo, const std::vector<int>& h_set, bool reduce_mu);
ConstructionRecipe hyperplane_sum_recipe(const Geometry& geo, const std::vector<int>& h_set,
                                         bool reduce_mu);

/// Hyperplane sum over the q^{k-2} hyperplanes through a point P avoiding a
/// point Q, plus one hyperplane avoiding both.  M(P) = q^{k-2}, mu = 0; after
/// canonicalization gamma' attains the upper bound q^{k-2} (gcd 1 guaranteed
/// for k >= 4, or k = 3 with q != 2).
PointMultiset gamma_tight_example(const Geometry& geo);
ConstructionRecipe gamma_tight_recipe(const Geometry& geo);

struct SeriesParams {
    long long n_prime = 0, s0 = 0, t0 = 0;
};

/// Parameter triples of the three parametric series:
///   S (1 <= i <= k-1):            ([i]_q, [i]_q, [i-1]_q)
///   P (k even, 0 < i < q^{k/2}+1): (i[k/2]_q, i[k/2-1]_q + q^{k/2-1}, i[k/2-1]_q)
///   K (q = 2, k even, 0 < i < [k/2]_q):
///       (i(q^{k/2}+1), i(q^{k/2-1}+1), i(q^{k/2-1}+1) - q^{k/2-1})
/// K is parameters-only: no multiset is constructed.
SeriesParams series_params(char kind, long long i, int k, int q);

/// Complement map on set parameters: (n', s0, t0) ->
/// ([k]_q - n', [k-1]_q - t0, [k-1]_q - s0).
SeriesParams complement_params(const SeriesParams& p, int k, int q);

}  // namespace twc

#endif
