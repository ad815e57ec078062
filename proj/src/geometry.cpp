#include "twc/geometry.hpp"

#include <algorithm>
#include <map>

#include "twc/checked.hpp"

namespace twc {

long long gaussian(long long j, long long q) {
    if (j < 0) throw IndexOutOfRange("gaussian requires j >= 0");
    long long sum = 0, pw = 1;
    for (long long i = 0; i < j; ++i) {
        sum = add_exact(sum, pw, "gaussian");
        pw = mul_exact(pw, q, "gaussian");
    }
    return sum;
}

Geometry::Geometry(int q, int k, long long size_limit) : field_(q), k_(k) {
    if (k < 1) throw BadDimension("k must be >= 1");
    long long npts = gaussian(k, q);
    if (npts > size_limit)
        throw SizeLimit("PG(" + std::to_string(k - 1) + "," + std::to_string(q) + ") has " +
                        std::to_string(npts) + " points, limit " + std::to_string(size_limit));

    // Enumerate all vectors in lexicographic order; a vector is kept iff its
    // leftmost nonzero coordinate is 1, which selects one representative per
    // point and yields the sorted order directly.
    Vec v(k, 0);
    while (true) {
        int lead = -1;
        for (int i = 0; i < k; ++i)
            if (v[i] != 0) {
                lead = i;
                break;
            }
        if (lead >= 0 && v[lead] == 1) vectors_.push_back(v);
        int pos = k - 1;
        while (pos >= 0 && v[pos] == q - 1) v[pos--] = 0;
        if (pos < 0) break;
        ++v[pos];
    }

    long long n = num_points();
    points_on_.resize(n);
    hyps_through_.resize(n);
    for (long long h = 0; h < n; ++h)
        for (long long p = 0; p < n; ++p)
            if (incident(p, h)) {
                points_on_[h].push_back(static_cast<int>(p));
                hyps_through_[p].push_back(static_cast<int>(h));
            }
}

bool Geometry::incident(long long p, long long h) const {
    const Vec& u = vectors_[p];
    const Vec& w = vectors_[h];
    int acc = 0;
    for (int i = 0; i < k_; ++i) acc = field_.add(acc, field_.mul(u[i], w[i]));
    return acc == 0;
}

long long Geometry::dual(long long index) const {
    if (index < 0 || index >= num_points()) throw IndexOutOfRange("dual index out of range");
    return index;  // shared normalized-vector list
}

void Geometry::normalize(Vec& v) const {
    int lead = -1;
    for (int i = 0; i < k_; ++i)
        if (v[i] != 0) {
            lead = i;
            break;
        }
    if (lead < 0) return;
    int s = field_.inv(v[lead]);
    for (int i = 0; i < k_; ++i) v[i] = static_cast<uint8_t>(field_.mul(s, v[i]));
}

long long Geometry::index_of(const Vec& v) const {
    Vec w = v;
    normalize(w);
    auto it = std::lower_bound(vectors_.begin(), vectors_.end(), w);
    if (it == vectors_.end() || *it != w) return -1;
    return it - vectors_.begin();
}

Geometry build_geometry(int q, int k, long long size_limit) { return Geometry(q, k, size_limit); }

int rank_of_points(const Geometry& geo, const std::vector<int>& pts) {
    const Field& f = geo.field();
    int k = geo.k();
    std::vector<Vec> basis;  // row echelon, pivot columns increasing
    for (int p : pts) {
        Vec v = geo.point(p);
        for (const Vec& b : basis) {
            int lead = 0;
            while (lead < k && b[lead] == 0) ++lead;
            if (lead < k && v[lead] != 0) {
                int c = v[lead];  // b has pivot 1
                for (int i = 0; i < k; ++i) v[i] = static_cast<uint8_t>(f.sub(v[i], f.mul(c, b[i])));
            }
        }
        geo.normalize(v);
        bool zero = std::all_of(v.begin(), v.end(), [](uint8_t x) { return x == 0; });
        if (!zero) {
            basis.push_back(v);
            std::sort(basis.begin(), basis.end(),
                      [k](const Vec& a, const Vec& b) {
                          int la = 0, lb = 0;
                          while (la < k && a[la] == 0) ++la;
                          while (lb < k && b[lb] == 0) ++lb;
                          return la < lb;
                      });
        }
        if (static_cast<int>(basis.size()) == k) break;
    }
    return static_cast<int>(basis.size());
}

}  // namespace twc
