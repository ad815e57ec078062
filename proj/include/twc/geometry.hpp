#ifndef TWC_GEOMETRY_HPP
#define TWC_GEOMETRY_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "twc/gf.hpp"

namespace twc {

/// Number of points of PG(j-1,q): [j]_q = (q^j - 1)/(q - 1).  gaussian(0,q) = 0.
long long gaussian(long long j, long long q);

using Vec = std::vector<uint8_t>;  // coordinate vector, element codes 0..q-1

/// The projective space PG(k-1,q) with a fixed global ordering.
///
/// Points and hyperplanes share one list of normalized vectors (leftmost
/// nonzero coordinate 1), sorted lexicographically by coordinate codes.
/// A point and the hyperplane with the same normalized vector carry the
/// same index, so the geometric dual is the identity on indices.
/// Incidence uses the standard bilinear form sum_i u_i v_i.
/// Immutable after construction.
class Geometry {
public:
    Geometry(int q, int k, long long size_limit = 1 << 20);

    const Field& field() const { return field_; }
    int q() const { return field_.q(); }
    int k() const { return k_; }
    long long num_points() const { return static_cast<long long>(vectors_.size()); }

    const Vec& point(long long i) const { return vectors_[i]; }
    const Vec& hyperplane(long long i) const { return vectors_[i]; }

    /// Sorted point indices incident with hyperplane h.
    const std::vector<int>& points_on(long long h) const { return points_on_[h]; }
    /// Sorted hyperplane indices through point p.
    const std::vector<int>& hyperplanes_through(long long p) const { return hyps_through_[p]; }

    bool incident(long long p, long long h) const;

    /// Geometric dual: an involution pairing equal-vector point/hyperplane.
    long long dual(long long index) const;

    /// Index of a (not necessarily normalized) nonzero vector's point, or -1.
    long long index_of(const Vec& v) const;

    /// Normalizes v in place (scales so the leftmost nonzero entry is 1).
    void normalize(Vec& v) const;

private:
    Field field_;
    int k_;
    std::vector<Vec> vectors_;
    std::vector<std::vector<int>> points_on_, hyps_through_;
};

Geometry build_geometry(int q, int k, long long size_limit = 1 << 20);

/// Rank over F_q of the span of the given point indices.
int rank_of_points(const Geometry& geo, const std::vector<int>& pts);

}  // namespace twc

#endif
