#include "twc/classify.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "twc/checked.hpp"

namespace twc {

namespace {

std::vector<int> permutation_of(const Geometry& geo, const std::vector<std::vector<int>>& mat) {
    int k = geo.k();
    const Field& f = geo.field();
    std::vector<int> perm(geo.num_points());
    for (long long p = 0; p < geo.num_points(); ++p) {
        const Vec& v = geo.point(p);
        Vec w(k, 0);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                w[i] = static_cast<uint8_t>(f.add(w[i], f.mul(mat[i][j], v[j])));
        long long img = geo.index_of(w);
        if (img < 0) throw InternalInconsistency("singular group generator");
        perm[p] = static_cast<int>(img);
    }
    return perm;
}

int multiplicative_generator(const Field& f) {
    for (int a = 2; a < f.q(); ++a) {
        int x = a, order = 1;
        while (x != 1) {
            x = f.mul(x, a);
            ++order;
        }
        if (order == f.q() - 1) return a;
    }
    throw InternalInconsistency("no multiplicative generator found");
}

// Lexicographic order on indicators with point i stored at bit i: the smaller
// indicator has a 0 at the first differing position.
bool lex_less(uint64_t a, uint64_t b) {
    uint64_t diff = a ^ b;
    if (diff == 0) return false;
    return ((a >> __builtin_ctzll(diff)) & 1) == 0;
}

uint64_t apply_perm(uint64_t mask, const std::vector<int>& perm) {
    uint64_t out = 0;
    while (mask) {
        int i = __builtin_ctzll(mask);
        mask &= mask - 1;
        out |= uint64_t{1} << perm[i];
    }
    return out;
}

struct OrbitScan {
    uint64_t lex_min;
    long long size;
};

}  // namespace

std::vector<std::vector<int>> group_generators(const Geometry& geo) {
    int k = geo.k();
    std::vector<std::vector<std::vector<int>>> mats;

    std::vector<std::vector<int>> cyc(k, std::vector<int>(k, 0));
    for (int j = 0; j < k; ++j) cyc[(j + 1) % k][j] = 1;
    mats.push_back(cyc);

    std::vector<std::vector<int>> trans(k, std::vector<int>(k, 0));
    for (int i = 0; i < k; ++i) trans[i][i] = 1;
    if (k >= 2) trans[0][1] = 1;
    mats.push_back(trans);

    if (geo.q() > 2) {
        std::vector<std::vector<int>> dil(k, std::vector<int>(k, 0));
        dil[0][0] = multiplicative_generator(geo.field());
        for (int i = 1; i < k; ++i) dil[i][i] = 1;
        mats.push_back(dil);
    }

    std::vector<std::vector<int>> perms;
    for (const auto& m : mats) perms.push_back(permutation_of(geo, m));
    return perms;
}

namespace {

// Closure of a subset under the generator permutations; reports the lex-min
// member and the orbit size, marking every member in the global seen table.
// Charges one budget node per expansion.
OrbitScan scan_orbit(uint64_t mask, const std::vector<std::vector<int>>& gens, long long& nodes,
                     long long max_nodes, std::vector<bool>& seen) {
    seen[mask] = true;
    std::vector<uint64_t> queue{mask};
    uint64_t best = mask;
    long long size = 1;
    while (!queue.empty()) {
        uint64_t cur = queue.back();
        queue.pop_back();
        ++nodes;
        if (max_nodes >= 0 && nodes > max_nodes) throw BudgetExceeded("orbit budget exhausted");
        for (const auto& g : gens) {
            uint64_t img = apply_perm(cur, g);
            if (!seen[img]) {
                seen[img] = true;
                ++size;
                queue.push_back(img);
                if (lex_less(img, best)) best = img;
            }
        }
    }
    return {best, size};
}

std::vector<uint8_t> mask_to_indicator(uint64_t mask, long long n) {
    std::vector<uint8_t> ind(n, 0);
    for (long long i = 0; i < n; ++i)
        if (mask >> i & 1) ind[i] = 1;
    return ind;
}

void maybe_write_checkpoint(const ClassifyBudget& budget, const std::vector<OrbitRecord>& records) {
    if (budget.checkpoint_path.empty()) return;
    std::ofstream out(budget.checkpoint_path);
    out << format_checkpoint(records);
}

}  // namespace

std::vector<OrbitRecord> enumerate_orbits(const Geometry& geo, long long r_max,
                                          const ClassifyBudget& budget) {
    long long n = geo.num_points();
    if (n > 31) throw SizeLimit("orbit enumeration supports at most 31 points");
    auto gens = group_generators(geo);
    long long nodes = 0;

    // Mark-sweep over all subsets: every unseen mask starts the closure of a
    // new orbit, whose lex-min member becomes the representative.  The group
    // action preserves cardinality, so r_max simply skips larger masks.
    std::vector<OrbitRecord> records;
    std::vector<bool> seen(uint64_t{1} << n, false);
    for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
        if (seen[mask]) continue;
        if (r_max >= 0 && __builtin_popcountll(mask) > r_max) continue;
        OrbitScan scan;
        try {
            scan = scan_orbit(mask, gens, nodes, budget.max_nodes, seen);
        } catch (const BudgetExceeded&) {
            maybe_write_checkpoint(budget, records);
            throw;
        }
        records.push_back({mask_to_indicator(scan.lex_min, n), scan.size});
    }

    std::sort(records.begin(), records.end(), [](const OrbitRecord& a, const OrbitRecord& b) {
        long long ra = std::count(a.representative.begin(), a.representative.end(), 1);
        long long rb = std::count(b.representative.begin(), b.representative.end(), 1);
        if (ra != rb) return ra < rb;
        return a.representative < b.representative;
    });
    maybe_write_checkpoint(budget, records);
    return records;
}

ParamRow param_row_from_summary(const CanonicalSummary& cs) {
    ParamRow row;
    row.g = cs.g;
    row.mu = cs.mu;
    row.r = cs.r;
    row.n = cs.n;
    row.gamma = cs.gamma;
    row.s = cs.s;
    row.t = cs.t;
    row.s0 = cs.s0;
    row.t0 = cs.t0;
    row.n_prime = cs.n_prime;
    row.gamma_prime = cs.gamma_prime;
    return row;
}

std::vector<ParamRow> classify_parameters(const Geometry& geo, long long gamma_max,
                                          const ClassifyBudget& budget) {
    auto records = enumerate_orbits(geo, -1, budget);
    std::vector<ParamRow> rows;
    for (const OrbitRecord& rec : records) {
        long long r = std::count(rec.representative.begin(), rec.representative.end(), 1);
        if (r == 0 || r == geo.num_points()) continue;
        DualPointSet d = make_dual_pointset(geo, rec.representative);
        CanonicalSummary cs = canonical_from_pointset(d).summary;
        if (gamma_max >= 0 && cs.gamma_prime > gamma_max) continue;
        rows.push_back(param_row_from_summary(cs));
    }
    sort_rows(rows);
    return rows;
}

std::string format_checkpoint(const std::vector<OrbitRecord>& records) {
    std::ostringstream out;
    for (const OrbitRecord& rec : records) {
        long long r = std::count(rec.representative.begin(), rec.representative.end(), 1);
        out << r << ' ';
        for (uint8_t b : rec.representative) out << (b ? '1' : '0');
        out << ' ' << rec.orbit_size << '\n';
    }
    return out.str();
}

std::vector<OrbitRecord> parse_checkpoint(const std::string& text, long long num_points) {
    std::istringstream in(text);
    std::vector<OrbitRecord> records;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        long long r;
        std::string bits;
        long long size;
        if (!(ls >> r >> bits >> size)) throw FormatError("bad checkpoint line: " + line);
        if (static_cast<long long>(bits.size()) != num_points)
            throw FormatError("checkpoint indicator length mismatch");
        OrbitRecord rec;
        rec.orbit_size = size;
        rec.representative.resize(num_points);
        long long ones = 0;
        for (long long i = 0; i < num_points; ++i) {
            if (bits[i] != '0' && bits[i] != '1') throw FormatError("bad indicator bit");
            rec.representative[i] = bits[i] == '1';
            ones += rec.representative[i];
        }
        if (ones != r) throw FormatError("checkpoint cardinality mismatch");
        records.push_back(std::move(rec));
    }
    return records;
}

}  // namespace twc
