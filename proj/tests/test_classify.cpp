#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "twc/classify.hpp"

using twc::Geometry;
using twc::OrbitRecord;

namespace {

// Materializes the full permutation group generated by the given permutations.
std::set<std::vector<int>> full_group(const std::vector<std::vector<int>>& gens, int n) {
    std::vector<int> id(n);
    for (int i = 0; i < n; ++i) id[i] = i;
    std::set<std::vector<int>> group{id};
    std::vector<std::vector<int>> frontier{id};
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& p : frontier)
            for (const auto& g : gens) {
                std::vector<int> pg(n);
                for (int i = 0; i < n; ++i) pg[i] = g[p[i]];
                if (group.insert(pg).second) next.push_back(pg);
            }
        frontier = std::move(next);
    }
    return group;
}

std::vector<uint8_t> permute(const std::vector<int>& perm, const std::vector<uint8_t>& ind) {
    std::vector<uint8_t> out(ind.size(), 0);
    for (std::size_t i = 0; i < ind.size(); ++i)
        if (ind[i]) out[perm[i]] = 1;
    return out;
}

long long binom(long long n, long long r) {
    long long v = 1;
    for (long long j = 1; j <= r; ++j) v = v * (n - j + 1) / j;
    return v;
}

}  // namespace

TEST_CASE("the generators generate the full projective group") {
    // |PGL(3,2)| = 168, |PGL(4,2)| = 20160 (both act faithfully on points).
    Geometry geo3(2, 3);
    CHECK(full_group(twc::group_generators(geo3), 7).size() == 168);
    Geometry geo4(2, 4);
    CHECK(full_group(twc::group_generators(geo4), 15).size() == 20160);
    // For q = 3, k = 2: PGL(2,3) of order 24 acting on 4 points.
    Geometry geo32(3, 2);
    CHECK(full_group(twc::group_generators(geo32), 4).size() == 24);
}

TEST_CASE("orbit enumeration agrees with a brute-force orbit partition") {
    Geometry geo(2, 3);
    auto group = full_group(twc::group_generators(geo), 7);
    // Brute force: orbit of each subset under the whole group.
    std::map<std::vector<uint8_t>, std::set<std::vector<uint8_t>>> orbit_of;
    std::set<std::vector<uint8_t>> assigned;
    std::vector<std::pair<std::vector<uint8_t>, long long>> expected;  // min member, size
    for (uint32_t mask = 0; mask < (1u << 7); ++mask) {
        std::vector<uint8_t> ind(7, 0);
        for (int i = 0; i < 7; ++i) ind[i] = mask >> i & 1;
        if (assigned.count(ind)) continue;
        std::set<std::vector<uint8_t>> orbit;
        for (const auto& g : group) orbit.insert(permute(g, ind));
        for (const auto& m : orbit) assigned.insert(m);
        // Lex-min indicator: the smaller one has 0 at the first differing
        // position.
        std::vector<uint8_t> best = *orbit.begin();
        auto lex_less = [](const std::vector<uint8_t>& a, const std::vector<uint8_t>& b) {
            for (std::size_t i = 0; i < a.size(); ++i)
                if (a[i] != b[i]) return a[i] == 0;
            return false;
        };
        for (const auto& m : orbit)
            if (lex_less(m, best)) best = m;
        expected.emplace_back(best, static_cast<long long>(orbit.size()));
    }
    std::sort(expected.begin(), expected.end(), [](const auto& a, const auto& b) {
        long long ra = std::count(a.first.begin(), a.first.end(), 1);
        long long rb = std::count(b.first.begin(), b.first.end(), 1);
        if (ra != rb) return ra < rb;
        return a.first < b.first;
    });
    auto records = twc::enumerate_orbits(geo);
    REQUIRE(records.size() == expected.size());
    CHECK(records.size() == 10);  // orbit counts by r: 1,1,1,2,2,1,1,1 plus empty/full
    for (std::size_t i = 0; i < records.size(); ++i) {
        CHECK(records[i].representative == expected[i].first);
        CHECK(records[i].orbit_size == expected[i].second);
    }
}

TEST_CASE("orbit sizes partition the subsets of each cardinality") {
    for (auto [q, k] : {std::pair{2, 3}, {2, 4}, {3, 3}}) {
        CAPTURE(q);
        CAPTURE(k);
        Geometry geo(q, k);
        auto records = twc::enumerate_orbits(geo);
        std::map<long long, long long> total_by_r;
        for (const auto& rec : records) {
            long long r = std::count(rec.representative.begin(), rec.representative.end(), 1);
            total_by_r[r] += rec.orbit_size;
        }
        for (long long r = 0; r <= geo.num_points(); ++r) {
            CAPTURE(r);
            CHECK(total_by_r[r] == binom(geo.num_points(), r));
        }
    }
}

TEST_CASE("r_max restricts the enumeration by cardinality") {
    Geometry geo(2, 3);
    auto all = twc::enumerate_orbits(geo);
    auto small = twc::enumerate_orbits(geo, 3);
    for (const auto& rec : small)
        CHECK(std::count(rec.representative.begin(), rec.representative.end(), 1) <= 3);
    std::size_t expected = 0;
    for (const auto& rec : all)
        if (std::count(rec.representative.begin(), rec.representative.end(), 1) <= 3) ++expected;
    CHECK(small.size() == expected);
}

TEST_CASE("canonical parameters are isomorphism invariants") {
    std::mt19937_64 rng(4242);
    Geometry geo(2, 4);
    auto group = full_group(twc::group_generators(geo), 15);
    std::vector<std::vector<int>> elements(group.begin(), group.end());
    std::uniform_int_distribution<std::size_t> pick(0, elements.size() - 1);
    std::uniform_int_distribution<int> coin(0, 2);
    auto to_json_key = [](const twc::CanonicalSummary& cs) {
        return std::tuple(cs.g, cs.mu, cs.r, cs.n, cs.gamma, cs.s, cs.t, cs.s0, cs.t0,
                          cs.n_prime, cs.gamma_prime, cs.u, cs.f, cs.w1, cs.w2);
    };
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<uint8_t> ind(15, 0);
        for (auto& b : ind) b = coin(rng) == 0;
        long long r = std::count(ind.begin(), ind.end(), 1);
        if (r == 0 || r == 15) continue;
        auto base = twc::canonical_from_pointset(twc::make_dual_pointset(geo, ind));
        for (int rep = 0; rep < 5; ++rep) {
            auto moved = permute(elements[pick(rng)], ind);
            auto other = twc::canonical_from_pointset(twc::make_dual_pointset(geo, moved));
            CHECK(to_json_key(base.summary) == to_json_key(other.summary));
        }
    }
}

TEST_CASE("classification of PG(2,2) and PG(3,2) matches the reference tables") {
    // The reference files keep their source row order, so compare the sorted
    // data lines byte for byte.
    auto load_sorted = [](const std::string& path) {
        std::ifstream in(path);
        REQUIRE(in);
        std::vector<std::string> lines;
        std::string line;
        std::getline(in, line);  // header
        while (std::getline(in, line))
            if (!line.empty()) lines.push_back(line);
        std::sort(lines.begin(), lines.end());
        return lines;
    };
    auto render_sorted = [](const std::vector<twc::ParamRow>& rows) {
        std::istringstream in(twc::emit_table(rows, twc::TableFormat::csv, false));
        std::vector<std::string> lines;
        std::string line;
        std::getline(in, line);  // header
        while (std::getline(in, line))
            if (!line.empty()) lines.push_back(line);
        std::sort(lines.begin(), lines.end());
        return lines;
    };
    Geometry geo3(2, 3);
    CHECK(render_sorted(twc::classify_parameters(geo3)) ==
          load_sorted(TEST_DATA_DIR "/golden_table1.csv"));
    Geometry geo4(2, 4);
    CHECK(render_sorted(twc::classify_parameters(geo4)) ==
          load_sorted(TEST_DATA_DIR "/golden_table2.csv"));
}

TEST_CASE("gamma_max filters the classification") {
    Geometry geo(2, 4);
    auto all = twc::classify_parameters(geo);
    auto filtered = twc::classify_parameters(geo, 1);
    CHECK(filtered.size() < all.size());
    for (const auto& row : filtered) CHECK(row.gamma_prime <= 1);
    std::size_t expected = 0;
    for (const auto& row : all)
        if (row.gamma_prime <= 1) ++expected;
    CHECK(filtered.size() == expected);
}

TEST_CASE("checkpoints round-trip and are written when the budget runs out") {
    Geometry geo(2, 3);
    auto records = twc::enumerate_orbits(geo);
    std::string text = twc::format_checkpoint(records);
    auto parsed = twc::parse_checkpoint(text, geo.num_points());
    REQUIRE(parsed.size() == records.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
        CHECK(parsed[i].representative == records[i].representative);
        CHECK(parsed[i].orbit_size == records[i].orbit_size);
    }
    CHECK_THROWS_AS(twc::parse_checkpoint("3 0110 5\n", 7), twc::FormatError);
    CHECK_THROWS_AS(twc::parse_checkpoint("2 0110100 5\n", 7), twc::FormatError);

    std::string path = "checkpoint_test.txt";
    twc::ClassifyBudget budget{5, path};
    CHECK_THROWS_AS(twc::enumerate_orbits(geo, -1, budget), twc::BudgetExceeded);
    std::ifstream in(path);
    CHECK(in.good());  // the partial checkpoint exists
    std::remove(path.c_str());
}
