#include "twc/twochar.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "twc/checked.hpp"

namespace twc {

DualPointSet make_dual_pointset(const Geometry& geo, const std::vector<uint8_t>& indicator) {
    if (static_cast<long long>(indicator.size()) != geo.num_points())
        throw FormatError("indicator length does not match point count");
    DualPointSet d;
    d.geo = &geo;
    d.indicator = indicator;
    d.r = std::count(indicator.begin(), indicator.end(), uint8_t{1});
    long long n = geo.num_points();
    d.phi.assign(n, 0);
    for (long long p = 0; p < n; ++p)
        for (int h : geo.hyperplanes_through(p)) d.phi[p] += indicator[h];
    d.m = d.phi.empty() ? 0 : *std::min_element(d.phi.begin(), d.phi.end());
    std::set<long long> sh;
    for (long long v : d.phi) sh.insert(v - d.m);
    d.shifts.assign(sh.begin(), sh.end());
    return d;
}

DualPointSet geometric_dual(const PointMultiset& m) {
    HyperplaneSpectrum sp = spectrum(m);
    if (!sp.is_two_character()) throw NotTwoCharacter(sp.entries.size());
    long long s = sp.s();
    const Geometry& geo = *m.geo;
    std::vector<uint8_t> ind(geo.num_points(), 0);
    for (long long p = 0; p < geo.num_points(); ++p)
        ind[p] = hyperplane_multiplicity(m, geo.dual(p)) == s ? 1 : 0;
    return make_dual_pointset(geo, ind);
}

FeasibilityResult feasible_pair(const DualPointSet& d, long long s, long long t) {
    const Geometry& geo = *d.geo;
    int k = geo.k();
    if (k < 2) throw DimensionTooSmall(k, 2);
    if (s < t || t < 0) throw FormatError("feasible_pair requires s >= t >= 0");
    long long delta = s - t;
    long long gk1 = gaussian(k - 1, geo.q());
    long long gk2 = gaussian(k - 2, geo.q());
    long long qk2 = pow_exact(geo.q(), k - 2, "feasible_pair");

    FeasibilityResult res;
    PointMultiset m{&geo, std::vector<long long>(geo.num_points(), 0)};
    for (long long p = 0; p < geo.num_points(); ++p) {
        Rational val = Rational(t + delta * d.phi[p], gk1) -
                       Rational(delta, qk2) * Rational(gk2, gk1) * (d.r - d.phi[p]);
        if (denominator(val) != 1 || val < 0) {
            res.feasible = false;
            res.violating_point = p;
            res.violating_value = val;
            return res;
        }
        m.mult[p] = static_cast<long long>(numerator(val));
    }
    res.feasible = true;
    res.multiset = std::move(m);
    return res;
}

CanonicalResult canonical_from_pointset(const DualPointSet& d) {
    const Geometry& geo = *d.geo;
    int k = geo.k();
    if (k < 2) throw DimensionTooSmall(k, 2);
    long long N = geo.num_points();
    if (d.r == 0 || d.r == N)
        throw DegenerateSet("dual point set is empty or full (one-character case)");

    long long q = geo.q();
    long long gk = gaussian(k, q), gk1 = gaussian(k - 1, q), gk2 = gaussian(k - 2, q);
    long long qk2 = pow_exact(q, k - 2, "canonical");

    // The hyperplane sum of the marked hyperplanes is exactly phi.
    long long mu = d.m;
    long long g = 0;
    for (long long p = 0; p < N; ++p) g = std::gcd(g, d.phi[p] - mu);
    if (g == 0) throw InternalInconsistency("proper dual set with constant phi");
    if (qk2 % g != 0) throw InternalInconsistency("g does not divide q^{k-2}");

    PointMultiset mprime{&geo, std::vector<long long>(N)};
    for (long long p = 0; p < N; ++p) mprime.mult[p] = (d.phi[p] - mu) / g;

    CanonicalSummary cs;
    cs.g = g;
    cs.mu = mu;
    cs.r = d.r;
    cs.n = mul_exact(d.r, gk1, "canonical");
    cs.gamma = *std::max_element(d.phi.begin(), d.phi.end());
    cs.t = mul_exact(d.r, gk2, "canonical");
    cs.s = cs.t + qk2;
    long long num_n = cs.n - mul_exact(mu, gk, "canonical");
    long long num_t = cs.t - mul_exact(mu, gk1, "canonical");
    if (num_n % g != 0 || num_t % g != 0)
        throw InternalInconsistency("canonical parameters are not integral");
    cs.n_prime = num_n / g;
    cs.t0 = num_t / g;
    cs.delta0 = qk2 / g;
    cs.s0 = cs.t0 + cs.delta0;
    cs.gamma_prime = (cs.gamma - mu) / g;
    cs.u = d.r - q * mu - 1;
    cs.v = 0;
    long long pf = cs.delta0, f = 0;
    while (pf > 1) {
        if (pf % geo.field().p() != 0) throw InternalInconsistency("delta0 is not a p-power");
        pf /= geo.field().p();
        ++f;
    }
    cs.f = f;
    cs.w1 = cs.n_prime - cs.s0;
    cs.w2 = cs.n_prime - cs.t0;
    if (cs.w1 != cs.u * pow_exact(geo.field().p(), f, "canonical"))
        throw InternalInconsistency("weight identity w1 = u*p^f failed");
    return {std::move(mprime), cs};
}

Decomposition decompose(const PointMultiset& m) {
    HyperplaneSpectrum sp = spectrum(m);
    if (sp.entries.size() == 1) {
        // One-character: by the classification this is v * chi_V.
        long long v = m.mult.empty() ? 0 : m.mult[0];
        for (long long x : m.mult)
            if (x != v) throw InternalInconsistency("one-character multiset is not constant");
        return {0, v, PointMultiset::zero(*m.geo)};
    }
    if (sp.entries.size() != 2) throw NotTwoCharacter(sp.entries.size());

    DualPointSet d = geometric_dual(m);
    CanonicalResult canon = canonical_from_pointset(d);
    long long v = *std::min_element(m.mult.begin(), m.mult.end());
    long long gamma = *std::max_element(m.mult.begin(), m.mult.end());
    long long gp = canon.summary.gamma_prime;
    if (gp <= 0 || (gamma - v) % gp != 0)
        throw InternalInconsistency("decomposition: u is not integral");
    long long u = (gamma - v) / gp;
    for (std::size_t i = 0; i < m.mult.size(); ++i)
        if (m.mult[i] != u * canon.m_prime.mult[i] + v)
            throw InternalInconsistency("decomposition does not reassemble the multiset");
    return {u, v, std::move(canon.m_prime)};
}

WeightFormResult verify_weight_form(const PointMultiset& m) {
    HyperplaneSpectrum sp = spectrum(m);
    if (!sp.is_two_character()) throw NotTwoCharacter(sp.entries.size());
    MultisetStats st = stats(m);
    WeightFormResult res;
    long long gcd_mult = 0;
    for (long long x : m.mult) gcd_mult = std::gcd(gcd_mult, x);
    if (!st.spanning) {
        res.reason = "not spanning";
        return res;
    }
    if (gcd_mult != 1) {
        res.reason = "repetitive (point multiplicities share factor " + std::to_string(gcd_mult) + ")";
        return res;
    }
    if (st.full_support) {
        res.reason = "full support";
        return res;
    }

    // Hypotheses hold, so M equals its canonical representative.
    CanonicalSummary cs = canonical_from_pointset(geometric_dual(m)).summary;
    long long p = m.geo->field().p();
    long long pf = pow_exact(p, cs.f, "weight_form");
    long long w1 = st.n - sp.s(), w2 = st.n - sp.t();
    long long u = cs.r - m.geo->q() * cs.mu - 1;
    if (u != cs.u) throw InternalInconsistency("u cross-check failed");
    if (w1 != u * pf || w2 != (u + 1) * pf)
        throw InternalInconsistency("weight factorization failed for an admissible multiset");
    res.applicable = true;
    res.u = u;
    res.f = cs.f;
    res.w1 = w1;
    res.w2 = w2;
    return res;
}

CodeBridgeResult code_bridge(const GeneratorMatrix& gm, const Geometry& geo) {
    if (gm.q != geo.q() || gm.k != geo.k())
        throw FormatError("generator matrix parameters do not match geometry");
    if (static_cast<int>(gm.rows.size()) != gm.k) throw FormatError("generator matrix row count");
    CodeBridgeResult res{PointMultiset::zero(geo), true};
    for (long long j = 0; j < gm.n; ++j) {
        Vec col(gm.k);
        bool zero = true;
        for (int i = 0; i < gm.k; ++i) {
            int e = gm.rows[i][j];
            if (e < 0 || e >= gm.q) throw FormatError("matrix entry out of range");
            col[i] = static_cast<uint8_t>(e);
            if (e != 0) zero = false;
        }
        if (zero) throw ZeroColumn(j);
        long long idx = geo.index_of(col);
        ++res.multiset.mult[idx];
    }
    res.full_rank = stats(res.multiset).spanning;
    return res;
}

std::vector<std::pair<long long, long long>> weight_distribution(const PointMultiset& m) {
    HyperplaneSpectrum sp = spectrum(m);
    long long n = m.cardinality();
    long long qm1 = m.geo->q() - 1;
    std::vector<std::pair<long long, long long>> out;
    for (auto it = sp.entries.rbegin(); it != sp.entries.rend(); ++it)
        out.emplace_back(n - it->first, it->second * qm1);
    return out;  // ascending weight
}

ResidualReport residual_congruence_check(const PointMultiset& m, long long delta) {
    const Geometry& geo = *m.geo;
    int k = geo.k();
    long long q = geo.q();
    if (k < 2) throw DimensionTooSmall(k, 2);
    if (delta <= 0 || delta % q != 0) throw HypothesisViolated("q must divide delta");
    long long n = m.cardinality();

    std::vector<long long> hvals(geo.num_points());
    for (long long h = 0; h < geo.num_points(); ++h) hvals[h] = hyperplane_multiplicity(m, h);

    long long mres = ((n - hvals[0]) % delta + delta) % delta;
    for (long long h = 0; h < geo.num_points(); ++h)
        if (((n - hvals[h]) % delta + delta) % delta != mres)
            throw HypothesisViolated("weights not congruent mod delta, witness hyperplane " +
                                     std::to_string(h));

    ResidualReport rep;
    rep.m_residue = mres;

    long long d = delta;
    int p = geo.field().p();
    bool p_power = true;
    while (d > 1) {
        if (d % p != 0) {
            p_power = false;
            break;
        }
        d /= p;
    }
    if (p_power) {
        if (mres % std::min(delta, q) != 0)
            throw HypothesisViolated("m is not divisible by min(delta, q)");
        rep.min_claim_checked = true;
    }

    // Codimension-2 spaces as intersections of hyperplane pairs, deduplicated
    // by their point sets.
    if (mres % q != 0) throw HypothesisViolated("q does not divide the weight class m");
    long long mq = mres / q, dq = delta / q;
    std::map<std::vector<int>, std::vector<int>> spaces;
    long long N = geo.num_points();
    for (long long h1 = 0; h1 < N; ++h1) {
        const auto& p1 = geo.points_on(h1);
        for (long long h2 = h1 + 1; h2 < N; ++h2) {
            const auto& p2 = geo.points_on(h2);
            std::vector<int> inter;
            std::set_intersection(p1.begin(), p1.end(), p2.begin(), p2.end(),
                                  std::back_inserter(inter));
            auto& hs = spaces[inter];
            if (hs.empty()) {
                hs.push_back(static_cast<int>(h1));
                hs.push_back(static_cast<int>(h2));
            } else {
                if (std::find(hs.begin(), hs.end(), h1) == hs.end()) hs.push_back(static_cast<int>(h1));
                if (std::find(hs.begin(), hs.end(), h2) == hs.end()) hs.push_back(static_cast<int>(h2));
            }
        }
    }
    for (const auto& [pts, hyps] : spaces) {
        long long mk = 0;
        for (int pt : pts) mk += m.mult[pt];
        for (int h : hyps) {
            long long res = hvals[h] - mk;
            if (res == 0) continue;
            if (((res - mq) % dq + dq) % dq != 0)
                throw HypothesisViolated("residual weight " + std::to_string(res) +
                                         " not congruent to m/q mod delta/q");
        }
        ++rep.num_spaces;
    }
    return rep;
}

namespace {

// Coordinates of the span's points in a basis of the span; used to restrict a
// non-spanning point set to its own geometry.
struct SpanMap {
    int dim = 0;
    std::vector<Vec> basis;  // echelon rows, pivot normalized to 1

    explicit SpanMap(const Geometry& geo, const std::vector<int>& pts) {
        const Field& f = geo.field();
        int k = geo.k();
        for (int p : pts) {
            Vec v = geo.point(p);
            reduce(f, k, v);
            if (!is_zero(v)) insert(f, k, v);
        }
        dim = static_cast<int>(basis.size());
    }

    static bool is_zero(const Vec& v) {
        return std::all_of(v.begin(), v.end(), [](uint8_t x) { return x == 0; });
    }

    int pivot(const Vec& b) const {
        for (std::size_t i = 0; i < b.size(); ++i)
            if (b[i] != 0) return static_cast<int>(i);
        return -1;
    }

    void reduce(const Field& f, int k, Vec& v) const {
        for (const Vec& b : basis) {
            int pv = pivot(b);
            if (v[pv] != 0) {
                int c = v[pv];
                for (int i = 0; i < k; ++i) v[i] = static_cast<uint8_t>(f.sub(v[i], f.mul(c, b[i])));
            }
        }
    }

    void insert(const Field& f, int k, Vec v) {
        int pv = pivot(v);
        int s = f.inv(v[pv]);
        for (int i = 0; i < k; ++i) v[i] = static_cast<uint8_t>(f.mul(s, v[i]));
        basis.push_back(v);
        std::sort(basis.begin(), basis.end(), [this](const Vec& a, const Vec& b) {
            return pivot(a) < pivot(b);
        });
    }

    // Coefficient vector x with v = sum x_i basis_i; v must lie in the span.
    Vec coordinates(const Field& f, int k, Vec v) const {
        Vec x(basis.size(), 0);
        for (std::size_t j = 0; j < basis.size(); ++j) {
            int pv = pivot(basis[j]);
            if (v[pv] != 0) {
                int c = v[pv];
                x[j] = static_cast<uint8_t>(c);
                for (int i = 0; i < k; ++i)
                    v[i] = static_cast<uint8_t>(f.sub(v[i], f.mul(c, basis[j][i])));
            }
        }
        if (!is_zero(v)) throw InternalInconsistency("point outside span");
        return x;
    }
};

}  // namespace

GCrosscheck g_crosscheck(const DualPointSet& d) {
    const Geometry& geo = *d.geo;
    GCrosscheck out;

    long long gs = 0;
    for (long long sh : d.shifts) gs = std::gcd(gs, sh);
    out.g_shifts = gs;

    out.g_canonical = canonical_from_pointset(d).summary.g;

    std::vector<int> pts;
    for (long long p = 0; p < geo.num_points(); ++p)
        if (d.indicator[p]) pts.push_back(static_cast<int>(p));

    SpanMap span(geo, pts);
    out.span_dim = span.dim;
    out.spanning = span.dim == geo.k();

    long long gw = 0;
    if (span.dim == 1) {
        gw = d.r;  // the [r,1] repetition code has a single nonzero weight r
    } else if (out.spanning) {
        for (long long h = 0; h < geo.num_points(); ++h) {
            long long on = 0;
            for (int p : pts)
                if (geo.incident(p, h)) ++on;
            gw = std::gcd(gw, d.r - on);
        }
    } else {
        Geometry sub(geo.q(), span.dim);
        std::vector<long long> counts(sub.num_points(), 0);
        for (int p : pts) {
            Vec x = span.coordinates(geo.field(), geo.k(), geo.point(p));
            ++counts[sub.index_of(x)];
        }
        for (long long h = 0; h < sub.num_points(); ++h) {
            long long on = 0;
            for (int p : sub.points_on(h)) on += counts[p];
            gw = std::gcd(gw, d.r - on);
        }
    }
    out.g_weights = gw;

    if (out.g_shifts != out.g_canonical || out.g_weights != out.g_canonical)
        throw InternalInconsistency("the three computations of g disagree");
    out.g = out.g_canonical;
    return out;
}

}  // namespace twc
