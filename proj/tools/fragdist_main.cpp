#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fragdist/acceptance.hpp"
#include "fragdist/counterexamples.hpp"
#include "fragdist/error.hpp"
#include "fragdist/fragility.hpp"
#include "fragdist/json_io.hpp"
#include "fragdist/metrics.hpp"
#include "fragdist/models.hpp"
#include "fragdist/pmf.hpp"
#include "fragdist/stein.hpp"

namespace {

using nlohmann::json;

// Inline JSON, or a file reference when prefixed with '@'.
json parse_json_arg(const std::string& text, const char* what) {
    std::string payload = text;
    if (!text.empty() && text.front() == '@') {
        std::ifstream in(text.substr(1));
        if (!in)
            fragdist::fail("invalid-parameter",
                           std::string("cannot read parameter file for ") + what);
        payload.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }
    json parsed = json::parse(payload, nullptr, false);
    if (parsed.is_discarded())
        fragdist::fail("invalid-parameter", std::string("malformed JSON for ") + what);
    return parsed;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

double default_tol_from_env() {
    const char* raw = std::getenv("FRAGDIST_TOL");
    if (raw == nullptr) return fragdist::kDefaultTol;
    char* end = nullptr;
    const double v = std::strtod(raw, &end);
    if (end == raw || !(v > 0.0) || !(v < 1.0))
        fragdist::fail("invalid-parameter", "FRAGDIST_TOL must be a real in (0, 1)");
    return v;
}

std::vector<double> parse_rates(const std::string& text) {
    std::vector<double> rates;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t next = text.find(',', pos);
        if (next == std::string::npos) next = text.size();
        const std::string item = text.substr(pos, next - pos);
        char* end = nullptr;
        const double v = std::strtod(item.c_str(), &end);
        if (end == item.c_str()) fragdist::fail("invalid-parameter", "malformed rate list");
        rates.push_back(v);
        pos = next + 1;
    }
    return rates;
}

int run(int argc, char** argv) {
    CLI::App app{"fragility distributions of exceedance counts: exact laws, "
                 "conditional compound Poisson / negative binomial approximations "
                 "and their Stein-factor error bounds"};
    app.require_subcommand(1);
    double tol = default_tol_from_env();
    app.add_option("--tol", tol, "construction tolerance override (default 1e-12, env FRAGDIST_TOL)");

    // fd-limit
    auto* fd_limit_cmd = app.add_subcommand("fd-limit", "limit fragility distribution of order m");
    std::string fd_pi;
    int fd_m = 1;
    fd_limit_cmd->add_option("--pi", fd_pi, "cluster distribution JSON or @file")->required();
    fd_limit_cmd->add_option("--m", fd_m, "order m >= 1")->required();

    // fd-converge
    auto* fd_conv_cmd =
        app.add_subcommand("fd-converge", "TV distance to the limit along decreasing rates (CSV)");
    std::string conv_pi;
    int conv_m = 1;
    std::string conv_rates = "1e-2,1e-3,1e-4,1e-5";
    fd_conv_cmd->add_option("--pi", conv_pi, "cluster distribution JSON")->required();
    fd_conv_cmd->add_option("--m", conv_m, "order m >= 1")->required();
    fd_conv_cmd->add_option("--rates", conv_rates, "comma-separated decreasing rates");

    // stein-factors
    auto* factors_cmd = app.add_subcommand("stein-factors", "Stein factors G_{m,1}, G_{m,2}");
    std::string factors_family, factors_params;
    int factors_m = 0;
    int factors_M = 0;
    bool factors_numeric = false;
    factors_cmd->add_option("--family", factors_family, "poisson|negbin|cp")->required();
    factors_cmd->add_option("--params", factors_params, "family parameters JSON")->required();
    factors_cmd->add_option("--m", factors_m, "conditioning level m >= 0")->required();
    factors_cmd->add_option("--M", factors_M, "truncation (0 = automatic)");
    factors_cmd->add_flag("--numeric", factors_numeric, "solve numerically instead of closed forms");

    // stein-sweep
    auto* sweep_cmd = app.add_subcommand("stein-sweep", "numeric factors for m = 0..m_max (CSV)");
    std::string sweep_family, sweep_params;
    int sweep_m_max = 5;
    int sweep_M = 0;
    sweep_cmd->add_option("--family", sweep_family, "poisson|negbin|cp")->required();
    sweep_cmd->add_option("--params", sweep_params, "family parameters JSON")->required();
    sweep_cmd->add_option("--m-max", sweep_m_max, "largest m");
    sweep_cmd->add_option("--M", sweep_M, "truncation (0 = automatic)");

    // model-pmf
    auto* model_cmd = app.add_subcommand("model-pmf", "exact exceedance-count law of a model");
    std::string model_json;
    model_cmd->add_option("--model", model_json, "model JSON")->required();

    // verify-bound
    auto* verify_cmd =
        app.add_subcommand("verify-bound", "exact conditional TV against the paper bound");
    std::string verify_model, verify_approx;
    int verify_m = 1;
    verify_cmd->add_option("--model", verify_model, "model JSON")->required();
    verify_cmd->add_option("--approx", verify_approx,
                           "approximation JSON (default: the model's canonical approximation)");
    verify_cmd->add_option("--m", verify_m, "conditioning level (default 1)");

    // sample
    auto* sample_cmd = app.add_subcommand("sample", "seeded draws of the exceedance count (CSV)");
    std::string sample_model;
    std::uint64_t sample_seed = 0;
    int sample_count = 0;
    sample_cmd->add_option("--model", sample_model, "model JSON")->required();
    sample_cmd->add_option("--seed", sample_seed, "64-bit seed")->required();
    sample_cmd->add_option("--count", sample_count, "number of draws")->required();

    // counterexample
    auto* osc_cmd = app.add_subcommand("counterexample", "subsequential limits of the ratio functions");
    std::string osc_which;
    int osc_depth = 40;
    std::string osc_format = "json";
    osc_cmd->add_option("--which", osc_which, "r1|biv|tri1|tri2")->required();
    osc_cmd->add_option("--depth", osc_depth, "sequence depth K <= 45");
    osc_cmd->add_option("--format", osc_format, "json|csv");

    // tv
    auto* tv_cmd = app.add_subcommand("tv", "total variation distance between two laws");
    std::string tv_a, tv_b;
    tv_cmd->add_option("--a", tv_a, "first PmfVector JSON")->required();
    tv_cmd->add_option("--b", tv_b, "second PmfVector JSON")->required();

    // reproduce-paper
    auto* repro_cmd =
        app.add_subcommand("reproduce-paper", "run the full verification sweep; exit 0 iff all pass");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            std::cout << app.help() << std::flush;
            return 0;
        }
        std::cerr << e.what() << "\n" << app.help() << std::flush;
        return 2;
    }

    if (fd_limit_cmd->parsed()) {
        const auto pi = fragdist::cluster_from_json(parse_json_arg(fd_pi, "--pi"));
        emit(fragdist::fragility_to_json(fragdist::fd_limit(pi, fd_m)));
        return 0;
    }

    if (fd_conv_cmd->parsed()) {
        const auto pi = fragdist::cluster_from_json(parse_json_arg(conv_pi, "--pi"));
        const auto table = fragdist::fd_convergence_table(pi, conv_m, parse_rates(conv_rates), tol);
        std::cout << "rate,tv\n";
        for (const auto& [rate, tv] : table)
            std::cout << fragdist::format_sig(rate) << "," << fragdist::format_sig(tv) << "\n";
        return 0;
    }

    if (factors_cmd->parsed()) {
        const auto family = fragdist::stein_family_from_name(factors_family);
        const auto params =
            fragdist::stein_params_from_json(family, parse_json_arg(factors_params, "--params"));
        const fragdist::SteinFactors factors =
            factors_numeric ? fragdist::stein_factors_numeric(family, params, factors_m, factors_M)
                            : fragdist::stein_factors_reference(family, params, factors_m);
        emit(fragdist::factors_to_json(family, factors));
        return 0;
    }

    if (sweep_cmd->parsed()) {
        const auto family = fragdist::stein_family_from_name(sweep_family);
        const auto params =
            fragdist::stein_params_from_json(family, parse_json_arg(sweep_params, "--params"));
        const auto table = fragdist::monotonicity_sweep(family, params, sweep_m_max, sweep_M);
        std::cout << "m,G1,G2,method\n";
        for (const auto& row : table.rows)
            std::cout << row.m << "," << fragdist::format_sig(row.G1) << ","
                      << fragdist::format_sig(row.G2) << ",numeric\n";
        return 0;
    }

    if (model_cmd->parsed()) {
        const auto model = fragdist::model_from_json(parse_json_arg(model_json, "--model"));
        emit(fragdist::pmf_to_json(fragdist::model_pmf(model)));
        return 0;
    }

    if (verify_cmd->parsed()) {
        const auto model = fragdist::model_from_json(parse_json_arg(verify_model, "--model"));
        const fragdist::ApproxSpec approx =
            verify_approx.empty() ? fragdist::canonical_approx(model)
                                  : fragdist::approx_from_json(parse_json_arg(verify_approx, "--approx"));
        json out = fragdist::bound_report_to_json(fragdist::verify_bound(model, approx, verify_m));
        out["approx"] = fragdist::approx_to_json(approx);
        emit(out);
        return 0;
    }

    if (sample_cmd->parsed()) {
        const auto model = fragdist::model_from_json(parse_json_arg(sample_model, "--model"));
        const fragdist::SampleBatch batch = fragdist::sample(model, sample_seed, sample_count);
        std::cout << "count\n";
        for (int c : batch.counts) std::cout << c << "\n";
        return 0;
    }

    if (osc_cmd->parsed()) {
        const auto report =
            fragdist::oscillation_report(fragdist::osc_function_from_name(osc_which), osc_depth);
        if (osc_format == "csv") {
            std::cout << "k,value_seqA,value_seqB\n";
            for (std::size_t i = 0; i < report.seq_a.size(); ++i)
                std::cout << (i + 1) << "," << fragdist::format_sig(report.seq_a[i]) << ","
                          << fragdist::format_sig(report.seq_b[i]) << "\n";
        } else if (osc_format == "json") {
            emit(fragdist::oscillation_to_json(report));
        } else {
            fragdist::fail("invalid-parameter", "format must be json or csv");
        }
        return 0;
    }

    if (tv_cmd->parsed()) {
        const auto a = fragdist::pmf_from_json(parse_json_arg(tv_a, "--a"));
        const auto b = fragdist::pmf_from_json(parse_json_arg(tv_b, "--b"));
        emit(fragdist::tv_report_to_json(fragdist::tv_distance(a, b)));
        return 0;
    }

    if (repro_cmd->parsed()) {
        const auto results = fragdist::acceptance::run_all();
        json criteria = json::array();
        for (const auto& r : results)
            criteria.push_back(json{{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        const bool ok = fragdist::acceptance::all_pass(results);
        emit(json{{"criteria", criteria}, {"all_pass", ok}});
        return ok ? 0 : 1;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const fragdist::error& e) {
        std::cerr << json{{"code", e.code()}, {"message", e.what()}}.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << json{{"code", "internal-error"}, {"message", e.what()}}.dump() << "\n";
        return 1;
    }
}
