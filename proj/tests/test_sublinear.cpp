#include "oracles.hpp"

#include <doctest.h>

using namespace dyadic;

namespace {

ExactFunction ex(std::initializer_list<long> values) {
    std::vector<Exact> v;
    for (long x : values) v.emplace_back(x);
    return ExactFunction::from_values(std::move(v));
}

}  // namespace

TEST_CASE("maximal function") {
    CHECK(maximal(ex({4, 0, 0, 0})) == ex({4, 2, 1, 1}));
    CHECK(maximal(ex({-3, -3})) == ex({3, 3}));
    CHECK(maximal(ex({0, 1})) == ExactFunction::from_values({Exact(Rational(1, 2)), Exact(1)}));

    std::mt19937_64 rng(21);
    for (int t = 0; t < 50; ++t) {
        const auto f = oracle::random_exact(rng, 5);
        const auto g = oracle::random_exact(rng, 5);
        const auto Mf = maximal(f);
        CHECK(Mf == oracle::maximal(f));
        const auto Mg = maximal(g);
        const auto Mfg = maximal(f + g);
        for (std::size_t k = 0; k < f.size(); ++k) {
            CHECK(Mf[k] >= abs(f[k]));
            CHECK(Mfg[k] <= Mf[k] + Mg[k]);
        }
        CHECK(maximal(f * Exact(3)) == Mf * Exact(3));
    }
}

TEST_CASE("square function") {
    const Exact quarter(Rational(1, 4));
    CHECK(square_function_squared(ex({0, 1})) == ExactFunction::constant(1, quarter));
    CHECK(square_function_squared(ex({0, 0, 1, 1})) == ExactFunction::constant(2, quarter));
    CHECK(square_function_squared(ExactFunction::constant(3, Exact(9))).is_zero());
    CHECK(square_function(ex({0, 1}))[0] == doctest::Approx(0.5));

    std::mt19937_64 rng(22);
    for (int t = 0; t < 50; ++t) {
        const auto f = oracle::random_exact(rng, 5);
        const auto S2 = square_function_squared(f);
        CHECK(S2 == oracle::square_squared(f));
        const auto mean = integral(f);
        CHECK(integral(S2) == lp_norm_pow(f, 2) - mean * mean);
    }
}

TEST_CASE("BMO functionals") {
    CHECK(bmo_norm(ex({1, -1}), 1) == doctest::Approx(1.0));
    CHECK(bmo_norm(ex({2, 0, 0, 0}), 1) == doctest::Approx(1.0));
    CHECK(bmo_norm(ex({2, 0, 0, 0}), 2) == doctest::Approx(1.0));
    CHECK(bmo2_via_haar(ex({2, 0, 0, 0})) == doctest::Approx(1.0));
    CHECK(bstar_seminorm(ex({2, 0, 0, 0})) == doctest::Approx(1.0));
    CHECK(bstar_squared(ex({0, 1})) == Exact(Rational(1, 4)));
    CHECK_THROWS_AS((void)bmo_norm(ex({0, 1}), 3), DyadicError);

    const auto h = ExactFunction::haar({1, 0}, 2);
    CHECK(bmo2_via_haar_squared(h) == Exact(2));
    CHECK(bmo2_squared(h) == Exact(2));

    const auto c = ExactFunction::constant(4, Exact(Rational(7, 3)));
    CHECK(bmo1(c).is_zero());
    CHECK(bmo2_squared(c).is_zero());
    CHECK(bstar_squared(c).is_zero());

    std::mt19937_64 rng(23);
    for (int t = 0; t < 100; ++t) {
        const auto b = oracle::random_exact(rng, 4);
        const auto shifted = b + ExactFunction::constant(4, oracle::random_rational(rng));
        CHECK(bmo2_via_haar_squared(b) == bmo2_squared(b));
        CHECK(bstar_squared(b) <= bmo2_squared(b));
        CHECK(bmo1(b) * bmo1(b) <= bmo2_squared(b));
        CHECK(bmo1(shifted) == bmo1(b));
        CHECK(bmo2_squared(shifted) == bmo2_squared(b));
    }
}

TEST_CASE("Calderon-Zygmund decomposition examples") {
    auto cz = cz_decompose(ex({4, 0, 0, 0}), Exact(Rational(3, 2)));
    REQUIRE(cz.parts.size() == 1);
    CHECK(cz.parts[0].interval == DyadicInterval{1, 0});
    CHECK(cz.good == ex({2, 2, 0, 0}));
    CHECK(cz.parts[0].bad == ex({2, -2, 0, 0}));

    cz = cz_decompose(ex({4, 0, 0, 0}), Exact(2));
    REQUIRE(cz.parts.size() == 1);
    CHECK(cz.parts[0].interval == DyadicInterval{2, 0});
    CHECK(cz.good == ex({4, 0, 0, 0}));
    CHECK(cz.parts[0].bad.is_zero());

    cz = cz_decompose(ex({1, -1, 1, 0}), Exact(1));
    CHECK(cz.parts.empty());
    CHECK(cz.good == ex({1, -1, 1, 0}));

    CHECK_THROWS_AS((void)cz_decompose(ex({4, 4, 0, 0}), Exact(1)), DyadicError);
    try {
        (void)cz_decompose(ex({4, 4, 0, 0}), Exact(1));
    } catch (const DyadicError& e) {
        CHECK(e.kind() == ErrorKind::root_exceeds_height);
    }
    CHECK_THROWS_AS((void)cz_decompose(ex({0, 0}), Exact(0)), DyadicError);
}

TEST_CASE("Cauchy-Schwarz square function bound") {
    std::mt19937_64 rng(24);
    for (int t = 0; t < 50; ++t) {
        const auto f = oracle::random_float(rng, 6);
        const auto g = oracle::random_float(rng, 6);
        const auto Sf = square_function(f);
        const auto Sg = square_function(g);
        const DyadicTable<double> tf(f), tg(g);
        for (std::uint64_t leaf = 0; leaf < f.size(); ++leaf) {
            double lhs = 0;
            for (const auto& I : containing_chain(leaf, 6)) {
                if (I.level == 6) continue;
                lhs += std::fabs(tf.coefficient(I) * tg.coefficient(I)) * std::ldexp(1.0, I.level);
            }
            CHECK(Sf[leaf] * Sg[leaf] - lhs >= -1e-12);
        }
    }
}
