#ifndef TWC_PARAMS_HPP
#define TWC_PARAMS_HPP

#include <string>
#include <vector>

#include "twc/geometry.hpp"

namespace twc {

/// One candidate parameter row.  Fields with value -1 are untracked (gamma and
/// gamma_prime are only known when the row comes from an explicit multiset).
struct ParamRow {
    long long g = 1, mu = 0, r = 0;
    long long n = 0, gamma = -1, s = 0, t = 0;
    long long s0 = 0, t0 = 0, n_prime = 0, gamma_prime = -1;
    long long a_s = 0, a_t = 0;
    std::string annotation;  // series_S | series_P | series_K | table_row | excluded | open
    std::string citation;

    auto sort_key() const {
        return std::tuple(gamma_prime, n_prime, s0, t0, r, mu, g);
    }
    auto identity() const {
        return std::tuple(g, mu, r, n, gamma, s, t, s0, t0, n_prime, gamma_prime);
    }
};

struct ExclusionEntry {
    int q = 0, k = 0;
    long long n_prime = 0;
    long long g = -1;  // -1: any g
    std::string status;  // excluded | open
    std::string citation;
};

using ExclusionLedger = std::vector<ExclusionEntry>;

/// Loops over 1 <= r <= [k]_q - 1, 0 <= mu <= r[k-2]_q/[k-1]_q and all
/// divisors g of q^{k-2}; keeps (r, mu, g) with n', s0 positive integers,
/// t0 a non-negative integer, n' < [k]_q and a_s, a_t >= 1.  With sets_only
/// the standard equation binom(s0,2) a_s + binom(t0,2) a_t = binom(n',2) [k-2]_q
/// is enforced as well.  Rows come back sorted and deduplicated.
std::vector<ParamRow> enumerate_candidates(int k, int q, bool sets_only);

/// Sorts by (gamma_prime, n_prime, s0, t0, r, mu, g) and removes duplicates.
void sort_rows(std::vector<ParamRow>& rows);

ExclusionLedger parse_exclusions(const std::string& json_text);
ExclusionLedger load_exclusions(const std::string& path);

/// Annotates rows in place: ledger matches become excluded/open with their
/// citation; series parameter matches (including complements) become
/// series_S/P/K; everything else is table_row.
void annotate(std::vector<ParamRow>& rows, const ExclusionLedger& ledger, int k, int q);

enum class TableFormat { csv, json, latex };

/// sets_table selects the set-table schema
/// `r,mu,g,n_prime,s0,t0,a_s,a_t,annotation`; otherwise the multiset schema
/// `g,mu,r,n,gamma,s,t,s0,t0,n_prime,gamma_prime` is used.
std::string emit_table(const std::vector<ParamRow>& rows, TableFormat format, bool sets_table);

/// Inverse of a set-table row: parses `r,mu,g,n_prime,s0,t0,a_s,a_t,annotation`
/// CSV text (with header) back into rows.
std::vector<ParamRow> parse_set_table_csv(const std::string& text);

}  // namespace twc

#endif
