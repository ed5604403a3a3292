#pragma once

#include <string>

#include <json.hpp>

#include "fragdist/counterexamples.hpp"
#include "fragdist/fragility.hpp"
#include "fragdist/metrics.hpp"
#include "fragdist/models.hpp"
#include "fragdist/pmf.hpp"
#include "fragdist/stein.hpp"

namespace fragdist {

// Numeric output is rounded to 12 significant digits before emission so
// repeated runs are byte-identical and reports stay diff-able.
double round_sig(double v, int digits = 12);
std::string format_sig(double v, int digits = 12);

// {"offset": int, "probs": [...], "tail_mass": real} — the schema shared
// by every module and the CLI. tail_mass defaults to 0 on input.
nlohmann::json pmf_to_json(const PmfVector& pmf);
PmfVector pmf_from_json(const nlohmann::json& j);

// {"pi": [...]}
ClusterDistribution cluster_from_json(const nlohmann::json& j);

// {"model": "independent", "p": [...]}
// {"model": "tworuns", "n": int, "p": real}
// {"model": "zeroinflated", "n": int, "p1": real, "q": real}
ModelSpec model_from_json(const nlohmann::json& j);
nlohmann::json model_to_json(const ModelSpec& model);

// {"family": "poisson", "lambda": real} | {"family": "negbin", "r":, "p":}
// | {"family": "cp", "lambdas": [...]}
ApproxSpec approx_from_json(const nlohmann::json& j);
nlohmann::json approx_to_json(const ApproxSpec& approx);

// Stein parameter payloads reuse the approx schema minus the family tag:
// {"lambda":} | {"r":, "p":} | {"lambdas": [...]}
SteinParams stein_params_from_json(SteinFamily family, const nlohmann::json& j);

nlohmann::json fragility_to_json(const FragilityResult& result);
nlohmann::json factors_to_json(SteinFamily family, const SteinFactors& factors);
nlohmann::json tv_report_to_json(const TvReport& report);
nlohmann::json bound_report_to_json(const BoundReport& report);
nlohmann::json oscillation_to_json(const OscillationReport& report);

}  // namespace fragdist
