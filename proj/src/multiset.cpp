#include "twc/multiset.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "twc/checked.hpp"

namespace twc {

long long PointMultiset::cardinality() const {
    long long n = 0;
    for (long long x : mult) n = add_exact(n, x, "cardinality");
    return n;
}

PointMultiset PointMultiset::zero(const Geometry& g) {
    return {&g, std::vector<long long>(g.num_points(), 0)};
}

PointMultiset PointMultiset::ambient(const Geometry& g, long long l) {
    return {&g, std::vector<long long>(g.num_points(), l)};
}

long long hyperplane_multiplicity(const PointMultiset& m, long long h) {
    long long sum = 0;
    for (int p : m.geo->points_on(h)) sum = add_exact(sum, m.mult[p], "M(H)");
    return sum;
}

HyperplaneSpectrum spectrum(const PointMultiset& m) {
    std::map<long long, long long> acc;
    for (long long h = 0; h < m.geo->num_points(); ++h) ++acc[hyperplane_multiplicity(m, h)];
    HyperplaneSpectrum s;
    s.entries.assign(acc.begin(), acc.end());
    return s;
}

std::vector<Rational> reconstruct_from_hyperplanes(const std::vector<long long>& values,
                                                   const Geometry& geo) {
    int k = geo.k();
    if (k < 2) throw DimensionTooSmall(k, 2);
    long long n = geo.num_points();
    if (static_cast<long long>(values.size()) != n)
        throw FormatError("hyperplane value vector has wrong length");

    long long total = 0;
    for (long long v : values) total = add_exact(total, v, "reconstruct");
    Rational in_coeff = Rational(1, gaussian(k - 1, geo.q()));
    Rational out_coeff = (in_coeff - 1) / pow_exact(geo.q(), k - 1, "reconstruct");

    std::vector<Rational> out(n);
    for (long long p = 0; p < n; ++p) {
        long long through = 0;
        for (int h : geo.hyperplanes_through(p)) through = add_exact(through, values[h], "reconstruct");
        out[p] = in_coeff * through + out_coeff * (total - through);
    }
    return out;
}

std::vector<Rational> hyperplane_basis_coefficients(const PointMultiset& m) {
    const Geometry& geo = *m.geo;
    int k = geo.k();
    if (k < 2) throw DimensionTooSmall(k, 2);
    long long n = m.cardinality();
    Rational shift = Rational(gaussian(k - 2, geo.q()), gaussian(k - 1, geo.q())) * n;
    long long qk2 = pow_exact(geo.q(), k - 2, "basis");
    std::vector<Rational> alpha(geo.num_points());
    for (long long h = 0; h < geo.num_points(); ++h)
        alpha[h] = (Rational(hyperplane_multiplicity(m, h)) - shift) / qk2;
    return alpha;
}

PointMultiset combine(const PointMultiset& m1, const PointMultiset& m2, long long a, long long b) {
    if (m1.geo != m2.geo) throw FormatError("combine: multisets on different geometries");
    PointMultiset out{m1.geo, std::vector<long long>(m1.mult.size())};
    for (std::size_t i = 0; i < m1.mult.size(); ++i) {
        long long v = add_exact(mul_exact(a, m1.mult[i], "combine"),
                                mul_exact(b, m2.mult[i], "combine"), "combine");
        if (v < 0) throw NegativeMultiplicity(static_cast<long long>(i));
        out.mult[i] = v;
    }
    return out;
}

PointMultiset l_complement(const PointMultiset& m, long long l) {
    long long gamma = m.mult.empty() ? 0 : *std::max_element(m.mult.begin(), m.mult.end());
    if (l < gamma) throw ComplementLevelTooSmall(l, gamma);
    PointMultiset out{m.geo, m.mult};
    for (auto& v : out.mult) v = l - v;
    return out;
}

std::pair<PointMultiset, long long> divide_by_gcd(const PointMultiset& m) {
    long long g = 0;
    for (long long v : m.mult) g = std::gcd(g, v);
    if (g == 0) throw TrivialMultiset();
    PointMultiset out{m.geo, m.mult};
    for (auto& v : out.mult) v /= g;
    return {out, g};
}

MultisetStats stats(const PointMultiset& m) {
    MultisetStats st;
    st.n = m.cardinality();
    if (!m.mult.empty()) {
        st.mu = *std::min_element(m.mult.begin(), m.mult.end());
        st.gamma = *std::max_element(m.mult.begin(), m.mult.end());
    }
    for (std::size_t i = 0; i < m.mult.size(); ++i)
        if (m.mult[i] > 0) st.support.push_back(static_cast<int>(i));
    st.full_support = static_cast<long long>(st.support.size()) == m.geo->num_points();
    st.spanning = rank_of_points(*m.geo, st.support) == m.geo->k();
    if (m.geo->k() >= 2) {
        long long g = 0;
        for (long long h = 0; h < m.geo->num_points(); ++h)
            g = std::gcd(g, st.n - hyperplane_multiplicity(m, h));
        st.divisibility = g;
    } else {
        st.divisibility = st.n;  // k=1: the only nonzero weights equal n
    }
    return st;
}

}  // namespace twc
