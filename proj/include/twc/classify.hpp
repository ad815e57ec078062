#ifndef TWC_CLASSIFY_HPP
#define TWC_CLASSIFY_HPP

#include <string>
#include <vector>

#include "twc/params.hpp"
#include "twc/twochar.hpp"

namespace twc {

struct OrbitRecord {
    std::vector<uint8_t> representative;  // point-set indicator, lex-min in its orbit
    long long orbit_size = 0;
};

struct ClassifyBudget {
    long long max_nodes = -1;  // orbit-closure expansions; -1 = unlimited
    std::string checkpoint_path;  // written on BudgetExceeded and on completion if set
};

/// Point permutations induced by generators of the projective linear group:
/// a coordinate cycle, the transvection I + E12, and (for q > 2) the dilation
/// diag(alpha, 1, ..., 1) with alpha a generator of the multiplicative group.
std::vector<std::vector<int>> group_generators(const Geometry& geo);

/// One record per orbit of point subsets (all cardinalities, or r <= r_max),
/// produced by a mark-sweep over all indicator bitmasks: each unseen subset
/// starts a closure under the generator permutations, and the lexicographic
/// minimum of the closure becomes the representative.  Requires at most 31
/// points; with a budget, a checkpoint of completed orbits is written before
/// BudgetExceeded is thrown.
std::vector<OrbitRecord> enumerate_orbits(const Geometry& geo, long long r_max = -1,
                                          const ClassifyBudget& budget = {});

/// Distinct canonical two-character multiset parameter rows over all orbit
/// representatives with 0 < r < [k]_q, sorted; gamma_max filters on
/// gamma_prime when >= 0.
std::vector<ParamRow> classify_parameters(const Geometry& geo, long long gamma_max = -1,
                                          const ClassifyBudget& budget = {});

ParamRow param_row_from_summary(const CanonicalSummary& cs);

/// Checkpoint format: one line per record, `r <indicator-bitstring> <orbit_size>`.
std::string format_checkpoint(const std::vector<OrbitRecord>& records);
std::vector<OrbitRecord> parse_checkpoint(const std::string& text, long long num_points);

}  // namespace twc

#endif
