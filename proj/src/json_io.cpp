#include "fragdist/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "fragdist/error.hpp"

namespace fragdist {

namespace {

using nlohmann::json;

double require_number(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number())
        fail("invalid-parameter", std::string("missing numeric field '") + key + "'");
    return j[key].get<double>();
}

int require_int(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        fail("invalid-parameter", std::string("missing integer field '") + key + "'");
    return j[key].get<int>();
}

std::vector<double> require_array(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_array())
        fail("invalid-parameter", std::string("missing array field '") + key + "'");
    std::vector<double> out;
    for (const auto& v : j[key]) {
        if (!v.is_number()) fail("invalid-parameter", std::string("non-numeric entry in '") + key + "'");
        out.push_back(v.get<double>());
    }
    return out;
}

json rounded_array(const std::vector<double>& values) {
    json arr = json::array();
    for (double v : values) arr.push_back(round_sig(v));
    return arr;
}

}  // namespace

double round_sig(double v, int digits) {
    if (!std::isfinite(v) || v == 0.0) return v;
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return std::strtod(buf, nullptr);
}

std::string format_sig(double v, int digits) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

json pmf_to_json(const PmfVector& pmf) {
    return json{{"offset", pmf.offset},
                {"probs", rounded_array(pmf.probs)},
                {"tail_mass", round_sig(pmf.tail_mass)}};
}

PmfVector pmf_from_json(const json& j) {
    PmfVector pmf;
    pmf.offset = require_int(j, "offset");
    pmf.probs = require_array(j, "probs");
    pmf.tail_mass = j.contains("tail_mass") ? require_number(j, "tail_mass") : 0.0;
    pmf.validate();
    return pmf;
}

ClusterDistribution cluster_from_json(const json& j) {
    return ClusterDistribution(require_array(j, "pi"));
}

ModelSpec model_from_json(const json& j) {
    if (!j.contains("model") || !j["model"].is_string())
        fail("invalid-parameter", "model JSON needs a 'model' tag");
    const std::string name = j["model"].get<std::string>();
    if (name == "independent") return IndependentExceedanceModel(require_array(j, "p"));
    if (name == "tworuns") return TwoRunsModel(require_int(j, "n"), require_number(j, "p"));
    if (name == "zeroinflated")
        return ZeroInflatedModel(require_int(j, "n"), require_number(j, "p1"),
                                 require_number(j, "q"));
    fail("invalid-parameter", "unknown model '" + name + "'");
}

json model_to_json(const ModelSpec& model) {
    json j{{"model", model_name(model)}};
    if (const auto* im = std::get_if<IndependentExceedanceModel>(&model)) {
        j["p"] = rounded_array(im->p);
    } else if (const auto* tr = std::get_if<TwoRunsModel>(&model)) {
        j["n"] = tr->n;
        j["p"] = round_sig(tr->p);
    } else {
        const auto& zi = std::get<ZeroInflatedModel>(model);
        j["n"] = zi.n;
        j["p1"] = round_sig(zi.p1);
        j["q"] = round_sig(zi.q);
    }
    return j;
}

ApproxSpec approx_from_json(const json& j) {
    if (!j.contains("family") || !j["family"].is_string())
        fail("invalid-parameter", "approximation JSON needs a 'family' tag");
    const std::string family = j["family"].get<std::string>();
    if (family == "poisson") return PoissonApprox{require_number(j, "lambda")};
    if (family == "negbin")
        return NegBinApprox{NegBinParams(require_number(j, "r"), require_number(j, "p"))};
    if (family == "cp") return CpApprox{CompoundPoissonParams(require_array(j, "lambdas"))};
    fail("invalid-parameter", "unknown approximation family '" + family + "'");
}

json approx_to_json(const ApproxSpec& approx) {
    if (const auto* pa = std::get_if<PoissonApprox>(&approx))
        return json{{"family", "poisson"}, {"lambda", round_sig(pa->lambda)}};
    if (const auto* na = std::get_if<NegBinApprox>(&approx))
        return json{{"family", "negbin"}, {"r", round_sig(na->params.r)}, {"p", round_sig(na->params.p)}};
    return json{{"family", "cp"}, {"lambdas", rounded_array(std::get<CpApprox>(approx).params.lambdas)}};
}

SteinParams stein_params_from_json(SteinFamily family, const json& j) {
    switch (family) {
        case SteinFamily::cond_poisson: return require_number(j, "lambda");
        case SteinFamily::cond_negbin:
            return NegBinParams(require_number(j, "r"), require_number(j, "p"));
        case SteinFamily::cond_compound_poisson:
            return CompoundPoissonParams(require_array(j, "lambdas"));
    }
    fail("invalid-parameter", "unknown Stein family");
}

json fragility_to_json(const FragilityResult& result) {
    return json{{"m", result.m}, {"I_m", result.I_m}, {"law", pmf_to_json(result.law)}};
}

json factors_to_json(SteinFamily family, const SteinFactors& factors) {
    return json{{"family", stein_family_name(family)},
                {"m", factors.m},
                {"G1", round_sig(factors.G1)},
                {"G2", round_sig(factors.G2)},
                {"method", stein_method_name(factors.method)}};
}

json tv_report_to_json(const TvReport& report) {
    return json{{"tv", round_sig(report.tv)},
                {"achieving_set", report.achieving_set},
                {"tail_bound", round_sig(report.tail_bound)},
                {"precision_warning", report.precision_warning}};
}

json bound_report_to_json(const BoundReport& report) {
    return json{{"model", report.model},
                {"m", report.m},
                {"exact_tv", round_sig(report.exact_tv)},
                {"paper_bound", round_sig(report.paper_bound)},
                {"ratio", round_sig(report.ratio)},
                {"holds", report.holds}};
}

json oscillation_to_json(const OscillationReport& report) {
    return json{{"function", report.function},
                {"depth", report.depth},
                {"seq_a", rounded_array(report.seq_a)},
                {"seq_b", rounded_array(report.seq_b)},
                {"limit_a", round_sig(report.limit_a)},
                {"limit_b", round_sig(report.limit_b)},
                {"gap", round_sig(report.gap)}};
}

}  // namespace fragdist
