#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "twc/gf.hpp"

using twc::Field;

namespace {

// Checks every field axiom by exhaustive enumeration.
void check_axioms(const Field& f) {
    int q = f.q();
    for (int a = 0; a < q; ++a) {
        CHECK(f.add(a, 0) == a);
        CHECK(f.mul(a, 1) == a);
        CHECK(f.mul(a, 0) == 0);
        CHECK(f.add(a, f.neg(a)) == 0);
        if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
        for (int b = 0; b < q; ++b) {
            CHECK(f.add(a, b) == f.add(b, a));
            CHECK(f.mul(a, b) == f.mul(b, a));
            CHECK(f.sub(f.add(a, b), b) == a);
            for (int c = 0; c < q; ++c) {
                CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
                CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
            }
        }
    }
    // No zero divisors.
    for (int a = 1; a < q; ++a)
        for (int b = 1; b < q; ++b) CHECK(f.mul(a, b) != 0);
}

}  // namespace

TEST_CASE("prime fields satisfy the field axioms") {
    for (int q : {2, 3, 5, 7, 11, 13}) {
        CAPTURE(q);
        Field f(q);
        CHECK(f.p() == q);
        CHECK(f.e() == 1);
        check_axioms(f);
        // Prime-field arithmetic is plain modular arithmetic.
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b) {
                CHECK(f.add(a, b) == (a + b) % q);
                CHECK(f.mul(a, b) == (a * b) % q);
            }
    }
}

TEST_CASE("extension fields satisfy the field axioms") {
    for (int q : {4, 8, 9, 16, 25, 27}) {
        CAPTURE(q);
        Field f(q);
        CHECK(f.q() == q);
        CHECK(f.p() * f.e() > f.p());  // e > 1
        check_axioms(f);
        // Characteristic p: adding any element to itself p times gives 0.
        for (int a = 0; a < q; ++a) {
            int s = 0;
            for (int i = 0; i < f.p(); ++i) s = f.add(s, a);
            CHECK(s == 0);
        }
        // The multiplicative group is cyclic of order q-1: some element has
        // full order.
        bool found = false;
        for (int a = 2; a < q && !found; ++a) {
            int x = a, order = 1;
            while (x != 1) {
                x = f.mul(x, a);
                ++order;
            }
            found = order == q - 1;
        }
        CHECK(found);
    }
}

TEST_CASE("frobenius is an automorphism in GF(4)") {
    Field f(4);
    auto frob = [&](int a) { return f.mul(a, a); };
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            CHECK(frob(f.add(a, b)) == f.add(frob(a), frob(b)));
            CHECK(frob(f.mul(a, b)) == f.mul(frob(a), frob(b)));
        }
    // x -> x^2 fixes exactly the prime field.
    std::set<int> fixed;
    for (int a = 0; a < 4; ++a)
        if (frob(a) == a) fixed.insert(a);
    CHECK(fixed == std::set<int>{0, 1});
}

TEST_CASE("non-prime-powers are rejected") {
    for (int q : {0, 1, 6, 10, 12, 15, 100}) {
        CAPTURE(q);
        CHECK_THROWS_AS(Field{q}, twc::NotAPrimePower);
    }
}
