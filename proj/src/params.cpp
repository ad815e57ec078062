#include "twc/params.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "twc/checked.hpp"
#include "twc/constructions.hpp"

namespace twc {

namespace {

long long binom2(long long x) { return x * (x - 1) / 2; }

}  // namespace

std::vector<ParamRow> enumerate_candidates(int k, int q, bool sets_only) {
    if (k < 3) throw BadDimension("candidate enumeration requires k >= 3");
    long long gk = gaussian(k, q), gk1 = gaussian(k - 1, q), gk2 = gaussian(k - 2, q);
    long long qk2 = pow_exact(q, k - 2, "enumerate");

    std::vector<long long> divisors;
    for (long long g = 1; g <= qk2; ++g)
        if (qk2 % g == 0) divisors.push_back(g);

    std::vector<ParamRow> rows;
    for (long long r = 1; r <= gk - 1; ++r) {
        long long n = mul_exact(r, gk1, "enumerate");
        long long t = mul_exact(r, gk2, "enumerate");
        long long s = t + qk2;
        for (long long mu = 0; mu <= t / gk1; ++mu) {
            long long num_n = n - mul_exact(mu, gk, "enumerate");
            long long num_t = t - mul_exact(mu, gk1, "enumerate");
            if (num_t < 0) continue;
            for (long long g : divisors) {
                if (num_n % g != 0 || num_t % g != 0) continue;
                ParamRow row;
                row.g = g;
                row.mu = mu;
                row.r = r;
                row.n = n;
                row.s = s;
                row.t = t;
                row.n_prime = num_n / g;
                row.t0 = num_t / g;
                row.s0 = row.t0 + qk2 / g;
                if (row.n_prime < 1 || row.n_prime >= gk) continue;
                long long as_num = mul_exact(row.n_prime, gk1, "enumerate") -
                                   mul_exact(row.t0, gk, "enumerate");
                long long scaled = mul_exact(as_num, g, "enumerate");
                if (scaled % qk2 != 0) continue;
                row.a_s = scaled / qk2;
                row.a_t = gk - row.a_s;
                if (row.a_s < 1 || row.a_t < 1) continue;
                if (sets_only) {
                    long long lhs = add_exact(mul_exact(binom2(row.s0), row.a_s, "enumerate"),
                                              mul_exact(binom2(row.t0), row.a_t, "enumerate"),
                                              "enumerate");
                    long long rhs = mul_exact(binom2(row.n_prime), gk2, "enumerate");
                    if (lhs != rhs) continue;
                }
                rows.push_back(row);
            }
        }
    }
    sort_rows(rows);
    return rows;
}

void sort_rows(std::vector<ParamRow>& rows) {
    std::sort(rows.begin(), rows.end(),
              [](const ParamRow& a, const ParamRow& b) { return a.sort_key() < b.sort_key(); });
    rows.erase(std::unique(rows.begin(), rows.end(),
                           [](const ParamRow& a, const ParamRow& b) {
                               return a.identity() == b.identity();
                           }),
               rows.end());
}

ExclusionLedger parse_exclusions(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("exclusion ledger is not valid JSON: ") + e.what());
    }
    ExclusionLedger ledger;
    for (const auto& e : j) {
        ExclusionEntry x;
        try {
            x.q = e.at("q").get<int>();
            x.k = e.at("k").get<int>();
            x.n_prime = e.at("n_prime").get<long long>();
            if (e.contains("g")) x.g = e.at("g").get<long long>();
            x.status = e.at("status").get<std::string>();
            x.citation = e.at("citation").get<std::string>();
        } catch (const nlohmann::json::exception& ex) {
            throw FormatError(std::string("bad exclusion entry: ") + ex.what());
        }
        if (x.status != "excluded" && x.status != "open")
            throw FormatError("exclusion status must be excluded or open");
        if (x.citation.empty()) throw FormatError("exclusion entry without citation");
        ledger.push_back(std::move(x));
    }
    return ledger;
}

ExclusionLedger load_exclusions(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_exclusions(ss.str());
}

void annotate(std::vector<ParamRow>& rows, const ExclusionLedger& ledger, int k, int q) {
    // Series parameter triples including complements.
    std::vector<std::pair<SeriesParams, const char*>> series;
    for (int i = 1; i <= k - 1; ++i) {
        SeriesParams sp = series_params('S', i, k, q);
        series.emplace_back(sp, "series_S");
        series.emplace_back(complement_params(sp, k, q), "series_S");
    }
    if (k % 2 == 0) {
        long long qh = pow_exact(q, k / 2, "annotate");
        for (long long i = 1; i < qh + 1; ++i) {
            SeriesParams sp = series_params('P', i, k, q);
            series.emplace_back(sp, "series_P");
            series.emplace_back(complement_params(sp, k, q), "series_P");
        }
        if (q == 2) {
            for (long long i = 1; i < gaussian(k / 2, q); ++i) {
                SeriesParams sp = series_params('K', i, k, q);
                series.emplace_back(sp, "series_K");
                series.emplace_back(complement_params(sp, k, q), "series_K");
            }
        }
    }

    for (ParamRow& row : rows) {
        const ExclusionEntry* hit = nullptr;
        for (const ExclusionEntry& e : ledger)
            if (e.q == q && e.k == k && e.n_prime == row.n_prime && (e.g < 0 || e.g == row.g)) {
                hit = &e;
                break;
            }
        if (hit) {
            row.annotation = hit->status;
            row.citation = hit->citation;
            continue;
        }
        row.annotation = "table_row";
        for (const auto& [sp, name] : series)
            if (sp.n_prime == row.n_prime && sp.s0 == row.s0 && sp.t0 == row.t0) {
                row.annotation = name;
                break;
            }
    }
}

std::string emit_table(const std::vector<ParamRow>& rows, TableFormat format, bool sets_table) {
    std::ostringstream out;
    if (format == TableFormat::json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const ParamRow& r : rows) {
            nlohmann::json j{{"g", r.g},   {"mu", r.mu}, {"r", r.r},
                             {"s0", r.s0}, {"t0", r.t0}, {"n_prime", r.n_prime}};
            if (sets_table) {
                j["a_s"] = r.a_s;
                j["a_t"] = r.a_t;
                if (!r.annotation.empty()) j["annotation"] = r.annotation;
                if (!r.citation.empty()) j["citation"] = r.citation;
            } else {
                j["n"] = r.n;
                j["s"] = r.s;
                j["t"] = r.t;
                if (r.gamma >= 0) j["gamma"] = r.gamma;
                if (r.gamma_prime >= 0) j["gamma_prime"] = r.gamma_prime;
            }
            arr.push_back(std::move(j));
        }
        out << arr.dump(2) << "\n";
        return out.str();
    }
    if (format == TableFormat::csv) {
        if (sets_table) {
            out << "r,mu,g,n_prime,s0,t0,a_s,a_t,annotation\n";
            for (const ParamRow& r : rows)
                out << r.r << ',' << r.mu << ',' << r.g << ',' << r.n_prime << ',' << r.s0 << ','
                    << r.t0 << ',' << r.a_s << ',' << r.a_t << ',' << r.annotation << '\n';
        } else {
            out << "g,mu,r,n,gamma,s,t,s0,t0,n_prime,gamma_prime\n";
            for (const ParamRow& r : rows)
                out << r.g << ',' << r.mu << ',' << r.r << ',' << r.n << ',' << r.gamma << ','
                    << r.s << ',' << r.t << ',' << r.s0 << ',' << r.t0 << ',' << r.n_prime << ','
                    << r.gamma_prime << '\n';
        }
        return out.str();
    }
    // latex: ampersand-separated rows for dropping into a table environment
    for (const ParamRow& r : rows) {
        out << r.r << " & " << r.mu << " & " << r.g << " & " << r.n_prime << " & " << r.s0 << " & "
            << r.t0;
        if (sets_table) out << " & " << r.a_s << " & " << r.a_t << " & " << r.annotation;
        out << " \\\\\n";
    }
    return out.str();
}

std::vector<ParamRow> parse_set_table_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw FormatError("empty csv");
    if (line != "r,mu,g,n_prime,s0,t0,a_s,a_t,annotation")
        throw FormatError("unexpected csv header: " + line);
    std::vector<ParamRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string cell;
        std::vector<std::string> cells;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        if (cells.size() < 8) throw FormatError("short csv row: " + line);
        ParamRow r;
        r.r = std::stoll(cells[0]);
        r.mu = std::stoll(cells[1]);
        r.g = std::stoll(cells[2]);
        r.n_prime = std::stoll(cells[3]);
        r.s0 = std::stoll(cells[4]);
        r.t0 = std::stoll(cells[5]);
        r.a_s = std::stoll(cells[6]);
        r.a_t = std::stoll(cells[7]);
        if (cells.size() > 8) r.annotation = cells[8];
        rows.push_back(std::move(r));
    }
    return rows;
}

}  // namespace twc
