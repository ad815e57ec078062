#include "twc/constructions.hpp"

#include <algorithm>
#include <set>

#include "twc/checked.hpp"

namespace twc {

namespace {

// chi of the span of unit vectors e_{lo+1},...,e_{hi} (0-based half-open
// coordinate window [lo, hi)): points supported inside the window.
PointMultiset coordinate_subspace(const Geometry& geo, int lo, int hi) {
    PointMultiset m = PointMultiset::zero(geo);
    for (long long p = 0; p < geo.num_points(); ++p) {
        const Vec& v = geo.point(p);
        bool inside = true;
        for (int c = 0; c < geo.k() && inside; ++c)
            if (v[c] != 0 && (c < lo || c >= hi)) inside = false;
        if (inside) m.mult[p] = 1;
    }
    return m;
}

}  // namespace

PointMultiset subspace(const Geometry& geo, int l) {
    if (l < 1 || l >= geo.k()) throw BadDimension("subspace requires 1 <= l < k");
    return coordinate_subspace(geo, 0, l);
}

ConstructionRecipe subspace_recipe(const Geometry& geo, int l) {
    if (l < 1 || l >= geo.k()) throw BadDimension("subspace requires 1 <= l < k");
    long long q = geo.q();
    return {RecipeKind::subspace,
            {l},
            {gaussian(l, q), gaussian(l, q), gaussian(l - 1, q), 1, 0}};
}

PointMultiset subspace_complement(const Geometry& geo, int l) {
    return l_complement(subspace(geo, l), 1);
}

ConstructionRecipe subspace_complement_recipe(const Geometry& geo, int l) {
    if (l < 1 || l >= geo.k()) throw BadDimension("subspace requires 1 <= l < k");
    long long q = geo.q();
    int k = geo.k();
    return {RecipeKind::subspace_complement,
            {l},
            {gaussian(k, q) - gaussian(l, q), gaussian(k - 1, q) - gaussian(l - 1, q),
             gaussian(k - 1, q) - gaussian(l, q), 1, 0}};
}

PointMultiset two_subspace(const Geometry& geo, int a, int b, int i) {
    if (!(a >= b && b >= 1 && 0 <= i && i <= b - 1))
        throw BadDimension("two_subspace requires a >= b >= 1 and 0 <= i <= b-1");
    if (geo.k() != a + b - i)
        throw BadDimension("two_subspace requires k = a + b - i");
    // A spans the first a coordinates, B the last b; they overlap in i.
    PointMultiset chi_a = coordinate_subspace(geo, 0, a);
    PointMultiset chi_b = coordinate_subspace(geo, a - i, a + b - i);
    return combine(chi_a, chi_b, 1, pow_exact(geo.q(), a - b, "two_subspace"));
}

ConstructionRecipe two_subspace_recipe(const Geometry& geo, int a, int b, int i) {
    if (!(a >= b && b >= 1 && 0 <= i && i <= b - 1) || geo.k() != a + b - i)
        throw BadDimension("two_subspace parameter constraints violated");
    long long q = geo.q();
    long long w = pow_exact(q, a - b, "two_subspace");
    long long t = gaussian(a - 1, q) + w * gaussian(b - 1, q);
    long long s = t + pow_exact(q, a - 1, "two_subspace");
    long long n = gaussian(a, q) + w * gaussian(b, q);
    long long gamma = i == 0 ? w : w + 1;
    return {RecipeKind::two_subspace, {a, b, i}, {n, s, t, gamma, 0}};
}

std::vector<std::vector<int>> enumerate_subspaces(const Geometry& geo, int m) {
    if (m < 1 || m > geo.k()) throw BadDimension("subspace dimension out of range");
    long long N = geo.num_points();
    std::set<std::vector<int>> found;

    // Closure of a basis: all points spanned by the chosen basis points.
    auto closure = [&](const std::vector<int>& basis) {
        std::set<int> pts;
        int d = static_cast<int>(basis.size());
        std::vector<int> coeff(d, 0);
        while (true) {
            int pos = 0;
            while (pos < d && coeff[pos] == geo.q() - 1) coeff[pos++] = 0;
            if (pos == d) break;
            ++coeff[pos];
            Vec v(geo.k(), 0);
            for (int j = 0; j < d; ++j) {
                const Vec& bj = geo.point(basis[j]);
                for (int c = 0; c < geo.k(); ++c)
                    v[c] = static_cast<uint8_t>(
                        geo.field().add(v[c], geo.field().mul(coeff[j], bj[c])));
            }
            pts.insert(static_cast<int>(geo.index_of(v)));
        }
        return std::vector<int>(pts.begin(), pts.end());
    };

    std::vector<int> basis;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(basis.size()) == m) {
            found.insert(closure(basis));
            return;
        }
        for (int p = start; p < N; ++p) {
            basis.push_back(p);
            if (rank_of_points(geo, basis) == static_cast<int>(basis.size())) self(self, p + 1);
            basis.pop_back();
        }
    };
    rec(rec, 0);
    return {found.begin(), found.end()};
}

PointMultiset partial_spread_sum(const Geometry& geo, const std::vector<long long>& spread_sizes,
                                 long long node_budget) {
    int k = geo.k();
    if (k % 2 != 0) throw BadDimension("partial spreads live in PG(2m-1,q); k must be even");
    long long r = 0;
    for (long long sz : spread_sizes) {
        if (sz < 0) throw FormatError("negative spread size");
        r = add_exact(r, sz, "spread");
    }
    if (r < 1) throw FormatError("empty spread request");
    int m = k / 2;
    auto spaces = enumerate_subspaces(geo, m);

    std::vector<char> used(geo.num_points(), 0);
    std::vector<int> chosen;
    long long nodes = 0, best = 0;
    auto fits = [&](const std::vector<int>& sp) {
        return std::none_of(sp.begin(), sp.end(), [&](int p) { return used[p]; });
    };
    auto rec = [&](auto&& self, std::size_t start) -> bool {
        if (static_cast<long long>(chosen.size()) == r) return true;
        if (++nodes > node_budget)
            throw BudgetExceeded("spread packing node budget exhausted at " +
                                 std::to_string(best) + " of " + std::to_string(r) + " spaces");
        for (std::size_t i = start; i < spaces.size(); ++i) {
            if (!fits(spaces[i])) continue;
            for (int p : spaces[i]) used[p] = 1;
            chosen.push_back(static_cast<int>(i));
            best = std::max<long long>(best, chosen.size());
            if (self(self, i + 1)) return true;
            chosen.pop_back();
            for (int p : spaces[i]) used[p] = 0;
        }
        return false;
    };
    if (!rec(rec, 0)) throw SpreadConstructionFailed(r, best);

    PointMultiset out = PointMultiset::zero(geo);
    for (int i : chosen)
        for (int p : spaces[i]) ++out.mult[p];
    return out;
}

ConstructionRecipe partial_spread_recipe(const Geometry& geo, const std::vector<long long>& spread_sizes) {
    int k = geo.k();
    if (k % 2 != 0) throw BadDimension("k must be even");
    long long r = 0;
    for (long long sz : spread_sizes) r = add_exact(r, sz, "spread");
    long long q = geo.q();
    int m = k / 2;
    long long t = mul_exact(r, gaussian(m - 1, q), "spread");
    long long s = t + pow_exact(q, m - 1, "spread");
    long long n = mul_exact(r, gaussian(m, q), "spread");
    bool full = n == gaussian(k, q);  // full spread: chi_V, the two values collapse
    return {RecipeKind::partial_spread,
            {spread_sizes.begin(), spread_sizes.end()},
            {n, s, full ? s : t, 1, full ? 1LL : 0LL}};
}

PointMultiset hyperplane_sum(const Geometry& geo, const std::vector<int>& h_set, bool reduce_mu) {
    if (geo.k() < 3) throw DimensionTooSmall(geo.k(), 3);
    std::set<int> hs(h_set.begin(), h_set.end());
    if (hs.empty() || static_cast<long long>(hs.size()) == geo.num_points())
        throw DegenerateSet("hyperplane set must be proper and nonempty");
    for (int h : hs)
        if (h < 0 || h >= geo.num_points()) throw IndexOutOfRange("hyperplane index");
    PointMultiset m = PointMultiset::zero(geo);
    for (int h : hs)
        for (int p : geo.points_on(h)) ++m.mult[p];
    if (reduce_mu) {
        long long mu = *std::min_element(m.mult.begin(), m.mult.end());
        for (auto& v : m.mult) v -= mu;
    }
    return m;
}

ConstructionRecipe hyperplane_sum_recipe(const Geometry& geo, const std::vector<int>& h_set,
                                         bool reduce_mu) {
    PointMultiset raw = hyperplane_sum(geo, h_set, false);
    std::set<int> hs(h_set.begin(), h_set.end());
    long long r = static_cast<long long>(hs.size());
    long long q = geo.q();
    int k = geo.k();
    long long mu = *std::min_element(raw.mult.begin(), raw.mult.end());
    long long gamma = *std::max_element(raw.mult.begin(), raw.mult.end());
    long long s = mul_exact(r, gaussian(k - 2, q), "hsum") + pow_exact(q, k - 2, "hsum");
    long long t = mul_exact(r, gaussian(k - 2, q), "hsum");
    long long n = mul_exact(r, gaussian(k - 1, q), "hsum");
    Predicted pred;
    if (reduce_mu) {
        long long shift_h = mul_exact(mu, gaussian(k - 1, q), "hsum");
        pred = {n - mul_exact(mu, gaussian(k, q), "hsum"), s - shift_h, t - shift_h, gamma - mu, 0};
    } else {
        pred = {n, s, t, gamma, mu};
    }
    std::vector<long long> params(hs.begin(), hs.end());
    params.push_back(reduce_mu ? 1 : 0);
    return {RecipeKind::hyperplane_sum, std::move(params), pred};
}

namespace {

std::vector<int> gamma_tight_hyperplanes(const Geometry& geo) {
    if (geo.k() < 3) throw DimensionTooSmall(geo.k(), 3);
    long long P = 0, Q = 1;
    std::vector<int> hs;
    for (long long h = 0; h < geo.num_points(); ++h)
        if (geo.incident(P, h) && !geo.incident(Q, h)) hs.push_back(static_cast<int>(h));
    for (long long h = 0; h < geo.num_points(); ++h)
        if (!geo.incident(P, h) && !geo.incident(Q, h)) {
            hs.push_back(static_cast<int>(h));
            break;
        }
    return hs;
}

}  // namespace

PointMultiset gamma_tight_example(const Geometry& geo) {
    return hyperplane_sum(geo, gamma_tight_hyperplanes(geo), false);
}

ConstructionRecipe gamma_tight_recipe(const Geometry& geo) {
    long long q = geo.q();
    int k = geo.k();
    if (k < 3) throw DimensionTooSmall(k, 3);
    long long qk2 = pow_exact(q, k - 2, "gamma_tight");
    long long r = qk2 + 1;
    return {RecipeKind::gamma_tight,
            {k, q},
            {mul_exact(r, gaussian(k - 1, q), "gamma_tight"),
             mul_exact(r, gaussian(k - 2, q), "gamma_tight") + qk2,
             mul_exact(r, gaussian(k - 2, q), "gamma_tight"), qk2, 0}};
}

SeriesParams series_params(char kind, long long i, int k, int q) {
    switch (kind) {
        case 'S': {
            if (i < 1 || i > k - 1) throw IndexOutOfRange("S series requires 1 <= i <= k-1");
            return {gaussian(i, q), gaussian(i, q), gaussian(i - 1, q)};
        }
        case 'P': {
            if (k % 2 != 0) throw BadDimension("P series requires k even");
            long long qk2 = pow_exact(q, k / 2, "series");
            if (i < 1 || i >= qk2 + 1) throw IndexOutOfRange("P series requires 0 < i < q^{k/2}+1");
            long long t0 = mul_exact(i, gaussian(k / 2 - 1, q), "series");
            return {mul_exact(i, gaussian(k / 2, q), "series"),
                    t0 + pow_exact(q, k / 2 - 1, "series"), t0};
        }
        case 'K': {
            if (q != 2) throw BadDimension("K series requires q = 2");
            if (k % 2 != 0) throw BadDimension("K series requires k even");
            if (i < 1 || i >= gaussian(k / 2, q))
                throw IndexOutOfRange("K series requires 0 < i < [k/2]_q");
            long long qh = pow_exact(q, k / 2, "series"), ql = pow_exact(q, k / 2 - 1, "series");
            long long s0 = mul_exact(i, ql + 1, "series");
            return {mul_exact(i, qh + 1, "series"), s0, s0 - ql};
        }
        default:
            throw FormatError("unknown series kind");
    }
}

SeriesParams complement_params(const SeriesParams& p, int k, int q) {
    return {gaussian(k, q) - p.n_prime, gaussian(k - 1, q) - p.t0, gaussian(k - 1, q) - p.s0};
}

}  // namespace twc
