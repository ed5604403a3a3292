#include <doctest.h>

#include "fragdist/error.hpp"
#include "fragdist/json_io.hpp"

using namespace fragdist;
using nlohmann::json;

TEST_CASE("pmf json round trip") {
    const PmfVector original = poisson_pmf(1.5);
    const json encoded = pmf_to_json(original);
    const PmfVector decoded = pmf_from_json(encoded);
    CHECK(decoded.offset == original.offset);
    REQUIRE(decoded.size() == original.size());
    for (int k = original.offset; k <= original.max_point(); ++k)
        CHECK(decoded.at(k) == doctest::Approx(original.at(k)).epsilon(1e-11));
}

TEST_CASE("pmf json defaults and validation") {
    const PmfVector point = pmf_from_json(json::parse(R"({"offset":1,"probs":[1]})"));
    CHECK(point.offset == 1);
    CHECK(point.tail_mass == 0.0);

    CHECK_THROWS_AS(pmf_from_json(json::parse(R"({"probs":[1]})")), error);
    CHECK_THROWS_AS(pmf_from_json(json::parse(R"({"offset":0,"probs":[0.5,0.4]})")), error);
}

TEST_CASE("model and approximation parsing") {
    const ModelSpec independent =
        model_from_json(json::parse(R"({"model":"independent","p":[0.1,0.2]})"));
    CHECK(model_name(independent) == "independent");

    const ModelSpec tworuns = model_from_json(json::parse(R"({"model":"tworuns","n":6,"p":0.2})"));
    CHECK(model_name(tworuns) == "tworuns");

    const ModelSpec zi =
        model_from_json(json::parse(R"({"model":"zeroinflated","n":4,"p1":0.3,"q":0.5})"));
    CHECK(model_name(zi) == "zeroinflated");

    CHECK_THROWS_AS(model_from_json(json::parse(R"({"model":"what"})")), error);
    CHECK_THROWS_AS(model_from_json(json::parse(R"({"model":"tworuns","n":6})")), error);

    const ApproxSpec pn = approx_from_json(json::parse(R"({"family":"poisson","lambda":2})"));
    CHECK(std::get<PoissonApprox>(pn).lambda == 2.0);
    CHECK_THROWS_AS(approx_from_json(json::parse(R"({"family":"negbin","r":2})")), error);

    // Round trips keep the tags.
    CHECK(model_from_json(model_to_json(tworuns)).index() == tworuns.index());
    CHECK(approx_to_json(pn)["family"] == "poisson");
}

TEST_CASE("bound report serializes with all fields populated") {
    const ModelSpec model{IndependentExceedanceModel({0.05, 0.05, 0.05})};
    const json j = bound_report_to_json(verify_bound(model, canonical_approx(model)));
    for (const char* key : {"model", "m", "exact_tv", "paper_bound", "ratio", "holds"})
        CHECK(j.contains(key));
    CHECK(j["holds"].get<bool>());
}

TEST_CASE("numeric output is pinned to 12 significant digits") {
    CHECK(format_sig(1.0 / 3.0) == "0.333333333333");
    CHECK(format_sig(2.0 / 3.0) == "0.666666666667");
    CHECK(round_sig(1.0 / 3.0) == 0.333333333333);
    CHECK(round_sig(0.0) == 0.0);

    const json law = pmf_to_json(PmfVector{0, {1.0 / 3.0, 2.0 / 3.0}, 0.0, 1e-9});
    CHECK(law.dump().find("0.333333333333") != std::string::npos);
}
