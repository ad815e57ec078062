#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "twc/classify.hpp"
#include "twc/constructions.hpp"
#include "twc/io.hpp"
#include "twc/params.hpp"

namespace {

constexpr const char* kVersion = "twc 1.0 (schema: multiset/1 pointset/1 matrix/1 csv/1 json/1)";

twc::TableFormat parse_format(const std::string& fmt) {
    if (fmt == "csv") return twc::TableFormat::csv;
    if (fmt == "json") return twc::TableFormat::json;
    if (fmt == "latex") return twc::TableFormat::latex;
    throw CLI::ValidationError("--format", "must be csv, json or latex");
}

int run(int argc, char** argv) {
    CLI::App app{"Exact toolkit for two-weight codes and two-character multisets in PG(k-1,q)"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    // params enumerate
    auto* params_cmd = app.add_subcommand("params", "Candidate parameter tables");
    params_cmd->require_subcommand(1);
    auto* enum_cmd = params_cmd->add_subcommand("enumerate", "Enumerate candidate parameters");
    int pq = 2, pk = 4;
    bool sets_only = false, do_annotate = false;
    std::string pformat = "csv", exclusions_path;
    enum_cmd->add_option("--q", pq, "field size")->required();
    enum_cmd->add_option("--k", pk, "ambient dimension")->required();
    enum_cmd->add_flag("--sets-only", sets_only, "apply the standard equations for sets");
    enum_cmd->add_flag("--annotate", do_annotate, "mark series/excluded/open rows");
    enum_cmd->add_option("--format", pformat, "csv|json|latex");
    enum_cmd->add_option("--exclusions", exclusions_path, "exclusion ledger JSON path");

    // classify
    auto* classify_cmd = app.add_subcommand("classify", "Canonical two-character multiset parameters");
    int cq = 2, ck = 3;
    long long gamma_max = -1, budget_nodes = -1;
    std::string checkpoint_path;
    classify_cmd->add_option("--q", cq, "field size")->required();
    classify_cmd->add_option("--k", ck, "ambient dimension")->required();
    classify_cmd->add_option("--gamma-max", gamma_max, "keep rows with gamma' <= G");
    classify_cmd->add_option("--checkpoint", checkpoint_path, "checkpoint file path");
    classify_cmd->add_option("--budget", budget_nodes, "orbit-expansion node budget");

    // canonical
    auto* canonical_cmd = app.add_subcommand("canonical", "Canonical multiset of a point set");
    std::string canonical_in, canonical_format = "json";
    canonical_cmd->add_option("--in", canonical_in, "point-set file")->required();
    canonical_cmd->add_option("--format", canonical_format, "json");

    // dual
    auto* dual_cmd = app.add_subcommand("dual", "Geometric dual point set of a two-character multiset");
    std::string dual_in;
    dual_cmd->add_option("--in", dual_in, "multiset file")->required();

    // spectrum
    auto* spectrum_cmd = app.add_subcommand("spectrum", "Hyperplane multiplicity spectrum");
    std::string spectrum_in;
    spectrum_cmd->add_option("--in", spectrum_in, "multiset or generator matrix file")->required();

    // construct
    auto* construct_cmd = app.add_subcommand("construct", "Named constructions");
    std::string kind;
    std::vector<long long> args;
    int xq = 2, xk = 3;
    bool reduce_mu = false;
    construct_cmd->add_option("kind", kind,
                              "subspace|subspace-complement|two-subspace|partial-spread|"
                              "hyperplane-sum|gamma-tight|series-S|series-P|series-K")
        ->required();
    construct_cmd->add_option("args", args, "integer parameters");
    construct_cmd->add_option("--q", xq, "field size")->required();
    construct_cmd->add_option("--k", xk, "ambient dimension")->required();
    construct_cmd->add_flag("--reduce-mu", reduce_mu, "subtract mu*chi_V (hyperplane-sum)");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Verification pipelines");
    verify_cmd->require_subcommand(1);
    auto* wf_cmd = verify_cmd->add_subcommand("weight-form", "w1 = u p^f, w2 = (u+1) p^f");
    std::string wf_in;
    wf_cmd->add_option("--in", wf_in, "multiset file")->required();
    auto* res_cmd = verify_cmd->add_subcommand("residual", "residual weight congruences");
    std::string res_in;
    long long res_delta = 0;
    res_cmd->add_option("--in", res_in, "multiset file")->required();
    res_cmd->add_option("--delta", res_delta, "divisibility Delta (q | Delta)")->required();
    auto* gx_cmd = verify_cmd->add_subcommand("g-crosscheck", "three computations of g agree");
    std::string gx_in;
    gx_cmd->add_option("--in", gx_in, "point-set file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (enum_cmd->parsed()) {
        auto rows = twc::enumerate_candidates(pk, pq, sets_only);
        if (do_annotate) {
            twc::ExclusionLedger ledger;
            if (!exclusions_path.empty()) ledger = twc::load_exclusions(exclusions_path);
            twc::annotate(rows, ledger, pk, pq);
        }
        std::cout << twc::emit_table(rows, parse_format(pformat), sets_only);
        return 0;
    }
    if (classify_cmd->parsed()) {
        twc::Geometry geo(cq, ck);
        twc::ClassifyBudget budget{budget_nodes, checkpoint_path};
        auto rows = twc::classify_parameters(geo, gamma_max, budget);
        std::cout << twc::emit_table(rows, twc::TableFormat::csv, false);
        return 0;
    }
    if (canonical_cmd->parsed()) {
        if (canonical_format != "json")
            throw CLI::ValidationError("--format", "only json is supported");
        auto loaded = twc::read_pointset_file(canonical_in);
        std::vector<uint8_t> ind(loaded.m.mult.begin(), loaded.m.mult.end());
        auto result = twc::canonical_from_pointset(twc::make_dual_pointset(*loaded.geo, ind));
        std::cout << twc::summary_to_json(result.summary);
        return 0;
    }
    if (dual_cmd->parsed()) {
        auto loaded = twc::read_multiset_file(dual_in);
        twc::DualPointSet d = twc::geometric_dual(loaded.m);
        twc::PointMultiset ind = twc::PointMultiset::zero(*loaded.geo);
        for (std::size_t i = 0; i < d.indicator.size(); ++i) ind.mult[i] = d.indicator[i];
        std::cout << twc::write_multiset(ind);
        return 0;
    }
    if (spectrum_cmd->parsed()) {
        std::ifstream in(spectrum_in);
        if (!in) throw twc::FormatError("cannot open " + spectrum_in);
        std::vector<long long> tokens;
        long long tok;
        while (in >> tok) tokens.push_back(tok);
        if (tokens.size() < 2) throw twc::FormatError("file too short");
        int q = static_cast<int>(tokens[0]), k = static_cast<int>(tokens[1]);
        twc::Geometry geo(q, k);
        twc::PointMultiset m = twc::PointMultiset::zero(geo);
        if (static_cast<long long>(tokens.size()) == 2 + geo.num_points()) {
            for (long long i = 0; i < geo.num_points(); ++i) m.mult[i] = tokens[2 + i];
        } else if (tokens.size() >= 3 &&
                   static_cast<long long>(tokens.size()) == 3 + k * tokens[2]) {
            twc::GeneratorMatrix gm;
            gm.q = q;
            gm.k = k;
            gm.n = tokens[2];
            gm.rows.assign(k, std::vector<int>(gm.n));
            for (int i = 0; i < k; ++i)
                for (long long j = 0; j < gm.n; ++j)
                    gm.rows[i][j] = static_cast<int>(tokens[3 + i * gm.n + j]);
            auto bridge = twc::code_bridge(gm, geo);
            if (!bridge.full_rank)
                std::cerr << "warning: generator matrix does not have full rank\n";
            m = std::move(bridge.multiset);
        } else {
            throw twc::FormatError("token count matches neither a multiset nor a matrix file");
        }
        std::cout << twc::spectrum_to_text(twc::spectrum(m));
        return 0;
    }
    if (construct_cmd->parsed()) {
        if (kind == "series-S" || kind == "series-P" || kind == "series-K") {
            if (args.size() != 1) throw CLI::ValidationError("args", "series take one index");
            auto sp = twc::series_params(kind.back(), args[0], xk, xq);
            std::cout << sp.n_prime << ' ' << sp.s0 << ' ' << sp.t0 << '\n';
            return 0;
        }
        twc::Geometry geo(xq, xk);
        twc::PointMultiset m = twc::PointMultiset::zero(geo);
        if (kind == "subspace") {
            if (args.size() != 1) throw CLI::ValidationError("args", "subspace takes l");
            m = twc::subspace(geo, static_cast<int>(args[0]));
        } else if (kind == "subspace-complement") {
            if (args.size() != 1) throw CLI::ValidationError("args", "takes l");
            m = twc::subspace_complement(geo, static_cast<int>(args[0]));
        } else if (kind == "two-subspace") {
            if (args.size() != 3) throw CLI::ValidationError("args", "takes a b i");
            m = twc::two_subspace(geo, static_cast<int>(args[0]), static_cast<int>(args[1]),
                                  static_cast<int>(args[2]));
        } else if (kind == "partial-spread") {
            if (args.empty()) throw CLI::ValidationError("args", "takes spread sizes");
            m = twc::partial_spread_sum(geo, args);
        } else if (kind == "hyperplane-sum") {
            if (args.empty()) throw CLI::ValidationError("args", "takes hyperplane indices");
            std::vector<int> hs(args.begin(), args.end());
            m = twc::hyperplane_sum(geo, hs, reduce_mu);
        } else if (kind == "gamma-tight") {
            if (!args.empty()) throw CLI::ValidationError("args", "takes no parameters");
            m = twc::gamma_tight_example(geo);
        } else {
            throw CLI::ValidationError("kind", "unknown construction: " + kind);
        }
        std::cout << twc::write_multiset(m);
        return 0;
    }
    if (wf_cmd->parsed()) {
        auto loaded = twc::read_multiset_file(wf_in);
        auto res = twc::verify_weight_form(loaded.m);
        if (res.applicable)
            std::cout << "applicable u=" << res.u << " f=" << res.f << " w1=" << res.w1
                      << " w2=" << res.w2 << '\n';
        else
            std::cout << "not applicable: " << res.reason << '\n';
        return 0;
    }
    if (res_cmd->parsed()) {
        auto loaded = twc::read_multiset_file(res_in);
        auto rep = twc::residual_congruence_check(loaded.m, res_delta);
        std::cout << "ok m=" << rep.m_residue << " codim2_spaces=" << rep.num_spaces
                  << " min_claim_checked=" << (rep.min_claim_checked ? "yes" : "no") << '\n';
        return 0;
    }
    if (gx_cmd->parsed()) {
        auto loaded = twc::read_pointset_file(gx_in);
        std::vector<uint8_t> ind(loaded.m.mult.begin(), loaded.m.mult.end());
        auto gx = twc::g_crosscheck(twc::make_dual_pointset(*loaded.geo, ind));
        std::cout << "ok g=" << gx.g << " span_dim=" << gx.span_dim
                  << (gx.spanning ? "" : " (restricted to span)") << '\n';
        return 0;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const twc::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
