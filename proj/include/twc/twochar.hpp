#ifndef TWC_TWOCHAR_HPP
#define TWC_TWOCHAR_HPP

#include <optional>
#include <string>
#include <vector>

#include "twc/multiset.hpp"

namespace twc {

/// A 0/1 set of points marking, via the geometric dual, the hyperplanes that
/// attain the larger multiplicity s.  phi(P) counts marked hyperplanes through
/// P; shifts is the set {phi(P) - min phi}, always containing 0.
struct DualPointSet {
    const Geometry* geo = nullptr;
    std::vector<uint8_t> indicator;
    long long r = 0;
    std::vector<long long> phi;
    long long m = 0;
    std::vector<long long> shifts;
};

DualPointSet make_dual_pointset(const Geometry& geo, const std::vector<uint8_t>& indicator);

/// Parameters attached to the canonical two-character multiset M' of a dual
/// point set: n, gamma, s, t describe the raw hyperplane sum
/// M = sum_{marked} chi_H = g*M' + mu*chi_V; the primed values describe M'.
/// u, f, w1, w2 carry the weight structure w1 = u*p^f, w2 = (u+1)*p^f with
/// u = r - q*mu - 1 and p^f = q^{k-2}/g; v is the chi_V coefficient (0 for
/// the canonical representative itself).
struct CanonicalSummary {
    long long g = 1, mu = 0, r = 0;
    long long n = 0, gamma = 0, s = 0, t = 0;
    long long s0 = 0, t0 = 0, n_prime = 0, gamma_prime = 0;
    long long u = 0, v = 0, f = 0, w1 = 0, w2 = 0;
    long long delta0 = 1;  // s0 - t0 = q^{k-2}/g
};

/// Requires a two-character multiset; marks P iff M(P^perp) = s.
DualPointSet geometric_dual(const PointMultiset& m);

struct FeasibilityResult {
    bool feasible = false;
    std::optional<PointMultiset> multiset;
    long long violating_point = -1;
    Rational violating_value;
};

/// Evaluates the candidate point multiplicities for hyperplane values (s, t)
/// prescribed by D; feasible iff all are non-negative integers.
FeasibilityResult feasible_pair(const DualPointSet& d, long long s, long long t);

struct CanonicalResult {
    PointMultiset m_prime;
    CanonicalSummary summary;
};

/// Theorem machinery: builds the hyperplane sum of D, reduces by mu*chi_V and
/// the gcd g, and returns the canonical representative with its parameters.
/// D must be proper and nonempty.
CanonicalResult canonical_from_pointset(const DualPointSet& d);

struct Decomposition {
    long long u = 0, v = 0;
    PointMultiset m_prime;
};

/// Unique u, v with M = u*M' + v*chi_V (u = 0 for one-character multisets).
Decomposition decompose(const PointMultiset& m);

struct WeightFormResult {
    bool applicable = false;
    std::string reason;  // which hypothesis fails, when not applicable
    long long u = 0, f = 0, w1 = 0, w2 = 0;
};

/// Checks the two-weight factorization w1 = u*p^f, w2 = (u+1)*p^f for a
/// spanning, non-repetitive two-character multiset without full support.
WeightFormResult verify_weight_form(const PointMultiset& m);

struct GeneratorMatrix {
    int q = 0, k = 0;
    long long n = 0;
    std::vector<std::vector<int>> rows;  // k rows of n entries
};

struct CodeBridgeResult {
    PointMultiset multiset;
    bool full_rank = true;  // false => non-spanning multiset (warning, not error)
};

CodeBridgeResult code_bridge(const GeneratorMatrix& gm, const Geometry& geo);

/// Nonzero-codeword weight distribution {n - M(H) : (q-1) * a_H}.
std::vector<std::pair<long long, long long>> weight_distribution(const PointMultiset& m);

struct ResidualReport {
    long long m_residue = 0;        // common weight class mod delta
    long long num_spaces = 0;       // codimension-2 spaces checked
    bool min_claim_checked = false; // m == 0 mod min(delta, q), when delta is a p-power
};

/// Residual congruence of the final section-5 lemma: for every codimension-2
/// space K the nonzero residual weights M(H) - M(K) over the q+1 hyperplanes
/// H >= K lie in class m/q mod delta/q.  Requires q | delta and weights all
/// congruent mod delta (else HypothesisViolated with a witness).
ResidualReport residual_congruence_check(const PointMultiset& m, long long delta);

struct GCrosscheck {
    long long g = 1;
    long long g_shifts = 1;     // gcd of the phi-shifts
    long long g_weights = 1;    // gcd of the projective code's weights (in the span)
    long long g_canonical = 1;  // gcd from the canonical construction
    bool spanning = true;
    int span_dim = 0;
};

GCrosscheck g_crosscheck(const DualPointSet& d);

}  // namespace twc

#endif
