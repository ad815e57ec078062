#include "twc/gf.hpp"

#include <algorithm>

namespace twc {
namespace {

// Returns (p, e) with q = p^e, or throws.
std::pair<int, int> factor_prime_power(int q) {
    if (q < 2) throw NotAPrimePower(q);
    int p = 0;
    for (int d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) return {q, 1};  // q itself prime
    int e = 0, m = q;
    while (m % p == 0) {
        m /= p;
        ++e;
    }
    if (m != 1) throw NotAPrimePower(q);
    return {p, e};
}

// Polynomials over F_p as coefficient vectors, c[0] the constant term.
using Poly = std::vector<int>;

Poly poly_from_code(int code, int p, int len) {
    Poly c(len, 0);
    for (int i = 0; i < len; ++i) {
        c[i] = code % p;
        code /= p;
    }
    return c;
}

int poly_eval(const Poly& c, int x, int p) {
    int v = 0;
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) v = (v * x + c[i]) % p;
    return v;
}

// Reduces a (mutable) polynomial modulo the monic modulus.
void poly_mod(Poly& a, const Poly& mod, int p) {
    int dm = static_cast<int>(mod.size()) - 1;
    for (int i = static_cast<int>(a.size()) - 1; i >= dm; --i) {
        int c = a[i];
        if (c == 0) continue;
        for (int j = 0; j <= dm; ++j) {
            int idx = i - dm + j;
            a[idx] = ((a[idx] - c * mod[j]) % p + p) % p;
        }
    }
    a.resize(dm);
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& mod, int p) {
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    poly_mod(r, mod, p);
    return r;
}

int poly_code(const Poly& c, int p) {
    int code = 0;
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) code = code * p + c[i];
    return code;
}

bool is_irreducible(const Poly& f, int p) {
    int deg = static_cast<int>(f.size()) - 1;
    // degree <= 3 suffices here (e <= 3 for q <= 9): irreducible iff no root,
    // except degree 4+ which we check by trial division.
    if (deg <= 3) {
        for (int x = 0; x < p; ++x)
            if (poly_eval(f, x, p) == 0) return false;
        return true;
    }
    for (int d = 1; 2 * d <= deg; ++d) {
        int count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (int code = count; code < 2 * count; ++code) {  // monic of degree d
            Poly g = poly_from_code(code, p, d + 1);
            // trial division
            Poly r = f;
            int dg = d;
            for (int i = static_cast<int>(r.size()) - 1; i >= dg; --i) {
                int c = r[i];
                if (c == 0) continue;
                for (int j = 0; j <= dg; ++j) {
                    int idx = i - dg + j;
                    r[idx] = ((r[idx] - c * g[j]) % p + p) % p;
                }
            }
            bool zero = true;
            for (int i = 0; i < dg; ++i)
                if (r[i] != 0) zero = false;
            if (zero) return false;
        }
    }
    return true;
}

Poly smallest_irreducible(int p, int e) {
    int pe = 1;
    for (int i = 0; i < e; ++i) pe *= p;
    for (int low = 0; low < pe; ++low) {
        Poly f = poly_from_code(low, p, e);
        f.push_back(1);  // monic x^e term
        if (is_irreducible(f, p)) return f;
    }
    throw InternalInconsistency("no irreducible polynomial found");
}

}  // namespace

Field::Field(int q) : q_(q) {
    auto [p, e] = factor_prime_power(q);
    p_ = p;
    e_ = e;
    add_.assign(static_cast<std::size_t>(q) * q, 0);
    mul_.assign(static_cast<std::size_t>(q) * q, 0);
    neg_.assign(q, 0);
    inv_.assign(q, 0);

    if (e == 1) {
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b) {
                add_[a * q + b] = (a + b) % p;
                mul_[a * q + b] = (a * b) % p;
            }
    } else {
        Poly mod = smallest_irreducible(p, e);
        for (int a = 0; a < q; ++a) {
            Poly pa = poly_from_code(a, p, e);
            for (int b = 0; b < q; ++b) {
                Poly pb = poly_from_code(b, p, e);
                Poly s(e, 0);
                for (int i = 0; i < e; ++i) s[i] = (pa[i] + pb[i]) % p;
                add_[a * q + b] = poly_code(s, p);
                mul_[a * q + b] = poly_code(poly_mulmod(pa, pb, mod, p), p);
            }
        }
    }
    for (int a = 0; a < q; ++a) {
        for (int b = 0; b < q; ++b) {
            if (add_[a * q + b] == 0) neg_[a] = b;
            if (a != 0 && mul_[a * q + b] == 1) inv_[a] = b;
        }
    }
}

Field build_field(int q) { return Field(q); }

}  // namespace twc
