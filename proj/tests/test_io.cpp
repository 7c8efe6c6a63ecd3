#include "oracles.hpp"

#include "dyadic/io.hpp"
#include "dyadic/verify.hpp"

#include <doctest.h>

using namespace dyadic;
using io::Json;

TEST_CASE("step function JSON round trip") {
    std::mt19937_64 rng(61);
    const auto f = oracle::random_exact(rng, 3);
    const auto j = io::to_json(f);
    CHECK(j["mode"] == "rational");
    CHECK(std::get<ExactFunction>(io::function_from_json(j)) == f);
    CHECK(io::function_from_json_as<double>(j) == f.to_float());

    const auto g = oracle::random_float(rng, 3);
    const auto jg = io::to_json(g);
    CHECK(jg["values"][0].is_number());
    CHECK(std::get<FloatFunction>(io::function_from_json(jg)) == g);
    CHECK_THROWS_AS((void)io::function_from_json_as<Exact>(jg), DyadicError);

    const auto bad = Json::parse(R"({"depth": 2, "mode": "rational", "values": ["1", "2"]})");
    CHECK_THROWS_AS((void)io::function_from_json(bad), DyadicError);
    const auto junk = Json::parse(R"({"depth": 1, "mode": "rational", "values": ["x", "2"]})");
    CHECK_THROWS_AS((void)io::function_from_json(junk), DyadicError);
    const auto no_mode = Json::parse(R"({"depth": 1, "values": [0.5, 2]})");
    CHECK(std::holds_alternative<FloatFunction>(io::function_from_json(no_mode)));
}

TEST_CASE("spectrum JSON keeps sqrt2 parts exact") {
    const auto f = ExactFunction::from_values({Exact(0), Exact(1), Exact(0), Exact(0)});
    const auto s = analyze(f);
    const auto j = io::to_json(s);
    REQUIRE(j["coeffs"].size() == 2);
    CHECK(j["coeffs"][1]["value"] == "1/4*sqrt2");
    CHECK(std::get<HaarSpectrum<Exact>>(io::spectrum_from_json(j)) == s);
    CHECK(io::dump(io::to_json(synthesize(std::get<HaarSpectrum<Exact>>(io::spectrum_from_json(j))))) ==
          io::dump(io::to_json(f)));
    auto too_fine = j;
    too_fine["coeffs"][0]["level"] = 2;
    CHECK_THROWS_AS((void)io::spectrum_from_json(too_fine), DyadicError);
}

TEST_CASE("symbol and CZ JSON") {
    const auto j = Json::parse(R"({"default": 1, "entries": [{"level": 1, "pos": 1, "value": "5/2"}]})");
    const auto eps = io::symbol_from_json(j);
    CHECK(eps.default_value() == 1.0);
    CHECK(eps.value({1, 1}) == 2.5);
    CHECK(io::to_json(eps)["entries"][0]["value"] == 2.5);

    const auto f = ExactFunction::from_values({Exact(4), Exact(0), Exact(0), Exact(0)});
    const auto cz = io::to_json(cz_decompose(f, Exact(Rational(3, 2))));
    CHECK(cz["height"] == "3/2");
    CHECK(cz["parts"][0]["interval"]["level"] == 1);
    CHECK(cz["parts"][0]["b"]["values"][1] == "-2");
}

TEST_CASE("report JSON has no run-dependent fields") {
    lab::OperatorDescriptor d;
    d.kind = lab::OperatorKind::pi_paraproduct;
    d.alpha = AlphaVector::parse("1");
    d.b = FloatFunction::from_values({2, 0, 0, 0});
    const lab::SamplerSpec spec{lab::SamplerFamily::random_step, 2, std::nullopt, 42};
    const auto report = lab::estimate_operator_norm(d, ExponentTuple::parse("2"), spec, 20);
    const auto j = io::to_json(report);
    CHECK(j["artifact_version"] == io::kArtifactVersion);
    CHECK(j["grid"]["depth"] == 2);
    CHECK(j["descriptor"]["kind"] == "pi_paraproduct");
    CHECK(j["descriptor"]["alpha"] == "1");
    CHECK(j["exponents"]["r"] == "2");
    CHECK(j["seed"] == 42);
    CHECK(j["trials"] == 20);
    CHECK(j["extremal_trials"] == 3);
    CHECK(j["b_norms"]["bmo2"] == doctest::Approx(1.0));
    const auto csv = io::trials_csv(report);
    CHECK(csv.rfind("trial,ratio\n0,", 0) == 0);
}

TEST_CASE("verify suites") {
    for (auto suite : {verify::Suite::decomposition, verify::Suite::localized, verify::Suite::adjoint,
                       verify::Suite::transpose, verify::Suite::multiplier_coeff,
                       verify::Suite::commutator_constant}) {
        CHECK(verify::parse_suite(verify::to_string(suite)) == suite);
        for (auto mode : {ScalarMode::rational, ScalarMode::float64}) {
            const auto r = verify::run_suite({suite, 3, 4, 10, 5, mode});
            CHECK(r.trials == 10);
            CHECK(r.failures == 0);
        }
    }
    CHECK_THROWS_AS((void)verify::run_suite({verify::Suite::decomposition, 1, 4, 10, 5, ScalarMode::rational}),
                    DyadicError);
    CHECK_THROWS_AS((void)verify::run_suite({verify::Suite::localized, 2, 1, 10, 5, ScalarMode::rational}),
                    DyadicError);
    CHECK_THROWS_AS((void)verify::run_suite({verify::Suite::adjoint, 2, 3, 0, 5, ScalarMode::rational}), DyadicError);
    CHECK_THROWS_AS((void)verify::parse_suite("nope"), DyadicError);
}
