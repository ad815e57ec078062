#ifndef TWC_MULTISET_HPP
#define TWC_MULTISET_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <utility>
#include <vector>

#include "twc/geometry.hpp"

namespace twc {

using Rational = boost::multiprecision::cpp_rational;

/// A multiset of points M: P -> N, stored as one multiplicity per point
/// in the global point order.  Values are immutable by convention; every
/// operation below returns a fresh multiset.
struct PointMultiset {
    const Geometry* geo = nullptr;
    std::vector<long long> mult;

    long long cardinality() const;

    static PointMultiset zero(const Geometry& g);
    /// l * chi_V.
    static PointMultiset ambient(const Geometry& g, long long l);
};

/// Hyperplane multiplicity value -> number of hyperplanes attaining it,
/// sorted by value.
struct HyperplaneSpectrum {
    std::vector<std::pair<long long, long long>> entries;

    bool is_two_character() const { return entries.size() == 2; }
    long long s() const { return entries.back().first; }   // larger value
    long long t() const { return entries.front().first; }  // smaller value
};

struct MultisetStats {
    long long n = 0;
    long long mu = 0;     // minimum point multiplicity
    long long gamma = 0;  // maximum point multiplicity
    std::vector<int> support;
    bool full_support = false;
    bool spanning = false;
    long long divisibility = 0;  // gcd of all codeword weights (maximal Delta); 0 for one-character chi_V-free corner cases
};

long long hyperplane_multiplicity(const PointMultiset& m, long long h);

HyperplaneSpectrum spectrum(const PointMultiset& m);

/// Point values from hyperplane values via the inversion formula
///   M(P) = 1/[k-1]_q * sum_{H>=P} M(H) + 1/q^{k-1} * (1/[k-1]_q - 1) * sum_{H!>=P} M(H).
/// Exact rationals; integrality is the caller's concern.  Requires k >= 2.
std::vector<Rational> reconstruct_from_hyperplanes(const std::vector<long long>& values,
                                                   const Geometry& geo);

/// The unique alpha with M = sum_H alpha_H chi_H,
///   alpha_H = (M(H) - n [k-2]_q/[k-1]_q) / q^{k-2}.  Requires k >= 2.
std::vector<Rational> hyperplane_basis_coefficients(const PointMultiset& m);

/// a*M1 + b*M2; throws NegativeMultiplicity on the first violating point.
PointMultiset combine(const PointMultiset& m1, const PointMultiset& m2, long long a, long long b);

/// Pointwise l - M(P); requires l >= gamma(M).
PointMultiset l_complement(const PointMultiset& m, long long l);

/// Divides by the gcd g of all multiplicities; M must be nontrivial.
std::pair<PointMultiset, long long> divide_by_gcd(const PointMultiset& m);

MultisetStats stats(const PointMultiset& m);

}  // namespace twc

#endif
