#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "twc/geometry.hpp"

using twc::gaussian;
using twc::Geometry;
using twc::Vec;

TEST_CASE("gaussian coefficients") {
    CHECK(gaussian(0, 2) == 0);
    CHECK(gaussian(1, 2) == 1);
    CHECK(gaussian(2, 2) == 3);
    CHECK(gaussian(3, 2) == 7);
    CHECK(gaussian(4, 2) == 15);
    CHECK(gaussian(12, 2) == 4095);
    CHECK(gaussian(2, 3) == 4);
    CHECK(gaussian(3, 3) == 13);
    CHECK(gaussian(3, 4) == 21);
    // Recurrence [j]_q = q*[j-1]_q + 1.
    for (long long q : {2, 3, 4, 5, 8, 9})
        for (long long j = 1; j <= 10; ++j) CHECK(gaussian(j, q) == q * gaussian(j - 1, q) + 1);
}

TEST_CASE("point counts, normalization and ordering") {
    for (auto [q, k] : {std::pair{2, 3}, {2, 4}, {2, 5}, {3, 3}, {3, 4}, {4, 3}, {5, 3}, {9, 2}}) {
        CAPTURE(q);
        CAPTURE(k);
        Geometry geo(q, k);
        CHECK(geo.num_points() == gaussian(k, q));
        std::set<Vec> seen;
        for (long long i = 0; i < geo.num_points(); ++i) {
            const Vec& v = geo.point(i);
            REQUIRE(static_cast<int>(v.size()) == k);
            // Leftmost nonzero coordinate is 1.
            auto it = std::find_if(v.begin(), v.end(), [](uint8_t c) { return c != 0; });
            REQUIRE(it != v.end());
            CHECK(*it == 1);
            seen.insert(v);
            if (i > 0) CHECK(geo.point(i - 1) < v);  // strictly sorted
            CHECK(geo.index_of(v) == i);
        }
        CHECK(static_cast<long long>(seen.size()) == geo.num_points());
    }
}

TEST_CASE("index_of handles unnormalized and absent vectors") {
    Geometry geo(3, 3);
    // 2*v finds the same point as v.
    for (long long i = 0; i < geo.num_points(); ++i) {
        Vec w = geo.point(i);
        for (auto& c : w) c = static_cast<uint8_t>(geo.field().mul(2, c));
        CHECK(geo.index_of(w) == i);
    }
    CHECK(geo.index_of(Vec(3, 0)) == -1);  // zero vector is no point
    Vec wrong_size(4, 1);
    CHECK(geo.index_of(wrong_size) == -1);
}

TEST_CASE("incidence structure of PG(k-1,q)") {
    for (auto [q, k] : {std::pair{2, 3}, {2, 4}, {3, 3}, {4, 3}, {3, 4}}) {
        CAPTURE(q);
        CAPTURE(k);
        Geometry geo(q, k);
        const twc::Field& f = geo.field();
        long long per_hyp = gaussian(k - 1, q);
        for (long long h = 0; h < geo.num_points(); ++h) {
            // Every hyperplane carries [k-1]_q points; incidence is the
            // vanishing of the bilinear form.
            CHECK(static_cast<long long>(geo.points_on(h).size()) == per_hyp);
            for (long long p = 0; p < geo.num_points(); ++p) {
                int dot = 0;
                for (int c = 0; c < k; ++c)
                    dot = f.add(dot, f.mul(geo.point(p)[c], geo.hyperplane(h)[c]));
                CHECK(geo.incident(p, h) == (dot == 0));
                CHECK(geo.incident(p, h) == geo.incident(h, p));  // symmetric form
            }
        }
        // Every point lies on [k-1]_q hyperplanes; dual is the identity
        // because points and hyperplanes share one vector list.
        for (long long p = 0; p < geo.num_points(); ++p) {
            CHECK(static_cast<long long>(geo.hyperplanes_through(p).size()) == per_hyp);
            CHECK(geo.dual(p) == p);
        }
    }
}

TEST_CASE("two distinct points lie on exactly [k-2]_q common hyperplanes") {
    for (auto [q, k] : {std::pair{2, 4}, {3, 3}, {2, 5}}) {
        CAPTURE(q);
        CAPTURE(k);
        Geometry geo(q, k);
        for (long long p1 = 0; p1 < geo.num_points(); ++p1)
            for (long long p2 = p1 + 1; p2 < geo.num_points(); ++p2) {
                const auto& h1 = geo.hyperplanes_through(p1);
                const auto& h2 = geo.hyperplanes_through(p2);
                std::vector<int> common;
                std::set_intersection(h1.begin(), h1.end(), h2.begin(), h2.end(),
                                      std::back_inserter(common));
                CHECK(static_cast<long long>(common.size()) == gaussian(k - 2, q));
            }
    }
}

TEST_CASE("rank_of_points matches small oracles") {
    Geometry geo(2, 4);
    CHECK(twc::rank_of_points(geo, {}) == 0);
    for (long long p = 0; p < geo.num_points(); ++p)
        CHECK(twc::rank_of_points(geo, {static_cast<int>(p)}) == 1);
    // Oracle: rank of {p1,p2,p3} is 2 iff the three points are collinear,
    // i.e. p3 lies on every hyperplane through p1 and p2.
    for (int p1 = 0; p1 < geo.num_points(); ++p1)
        for (int p2 = p1 + 1; p2 < geo.num_points(); ++p2) {
            CHECK(twc::rank_of_points(geo, {p1, p2}) == 2);
            for (int p3 = p2 + 1; p3 < geo.num_points(); ++p3) {
                bool collinear = true;
                for (int h : geo.hyperplanes_through(p1))
                    if (geo.incident(p2, h) && !geo.incident(p3, h)) {
                        collinear = false;
                        break;
                    }
                CHECK(twc::rank_of_points(geo, {p1, p2, p3}) == (collinear ? 2 : 3));
            }
        }
    // All points span the whole space.
    std::vector<int> all(geo.num_points());
    for (int i = 0; i < geo.num_points(); ++i) all[i] = i;
    CHECK(twc::rank_of_points(geo, all) == 4);
}

TEST_CASE("size limit is enforced") {
    CHECK_THROWS_AS(Geometry(2, 25), twc::SizeLimit);
    CHECK_THROWS_AS(Geometry(2, 5, 10), twc::SizeLimit);
}
