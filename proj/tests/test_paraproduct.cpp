#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace dyadic;

namespace {

ExactFunction ex(std::initializer_list<const char*> values) {
    std::vector<Exact> v;
    for (const char* s : values) v.push_back(Exact::parse(s));
    return ExactFunction::from_values(std::move(v));
}

}  // namespace

TEST_CASE("alpha vectors and U_m") {
    const auto a = AlphaVector::parse("011");
    CHECK(a.size() == 3);
    CHECK(a.sigma() == 1);
    CHECK(a.in_um());
    CHECK_FALSE(AlphaVector::parse("11").in_um());
    CHECK(a.to_string() == "011");
    CHECK(a.prepended(0).to_string() == "0011");
    CHECK_THROWS_AS((void)AlphaVector::parse("012"), DyadicError);
    CHECK_THROWS_AS((void)AlphaVector::parse(""), DyadicError);

    CHECK(enumerate_um(1) == std::vector<AlphaVector>{AlphaVector{0}});
    CHECK(enumerate_um(2) == std::vector<AlphaVector>{AlphaVector{0, 1}, AlphaVector{0, 0}, AlphaVector{1, 0}});
    for (int m = 1; m <= 6; ++m) {
        const auto um = enumerate_um(m);
        CHECK(um.size() == (std::size_t{1} << m) - 1);
        std::vector<std::string> names;
        for (const auto& x : um) {
            CHECK(x.in_um());
            CHECK(x.size() == static_cast<std::size_t>(m));
            names.push_back(x.to_string());
        }
        std::sort(names.begin(), names.end());
        CHECK(std::adjacent_find(names.begin(), names.end()) == names.end());
    }
    CHECK_THROWS_AS((void)enumerate_um(0), DyadicError);
}

TEST_CASE("haar powers") {
    CHECK(haar_power<Exact>({0, 0}, 2, 1) == ex({"1", "1"}));
    CHECK(haar_power<Exact>({0, 0}, 3, 1) == ex({"-1", "1"}));
    CHECK(haar_power<Exact>({1, 1}, 2, 2) == ex({"0", "0", "2", "2"}));
    CHECK(haar_power<Exact>({1, 1}, 0, 2) == ExactFunction::constant(2, Exact(1)));
    for (int sigma = 0; sigma <= 5; ++sigma)
        CHECK(haar_power<Exact>({2, 1}, sigma, 4) == oracle::haar_power<Exact>({2, 1}, sigma, 4));
    CHECK_THROWS_AS((void)haar_power<Exact>({2, 0}, 1, 2), DyadicError);
}

TEST_CASE("bilinear paraproduct examples") {
    const std::vector<ExactFunction> fg{ex({"1", "2"}), ex({"3", "4"})};
    CHECK(paraproduct<Exact>(AlphaVector{0, 0}, fg) == ex({"1/4", "1/4"}));
    CHECK(paraproduct<Exact>(AlphaVector{0, 1}, fg) == ex({"-7/4", "7/4"}));
    CHECK(paraproduct<Exact>(AlphaVector{1, 0}, fg) == ex({"-3/4", "3/4"}));
    CHECK(product_decomposition_residual<Exact>(fg).is_zero());
    CHECK(multiplication_decomposition_residual(fg[0], fg[1]).is_zero());
    CHECK(localized_average_residual<Exact>({1, 0}, fg).is_zero());
    CHECK_THROWS_AS((void)paraproduct<Exact>(AlphaVector{0}, fg), DyadicError);
    CHECK_THROWS_AS((void)localized_average_residual<Exact>(DyadicInterval::universe(), fg), DyadicError);
    const std::vector<ExactFunction> one{fg[0]};
    CHECK_THROWS_AS((void)product_decomposition_residual<Exact>(one), DyadicError);
}

TEST_CASE("pi paraproduct examples") {
    const auto b = ex({"0", "1"});
    const std::vector<ExactFunction> f{ex({"2", "4"})};
    CHECK(pi_paraproduct<Exact>(AlphaVector{1}, b, f) == ex({"-3/2", "3/2"}));
    const std::vector<ExactFunction> fg{ex({"2", "4"}), ex({"1", "1"})};
    CHECK(pi_paraproduct<Exact>(AlphaVector{1, 1}, b, fg) == ex({"-3/2", "3/2"}));
    const std::vector<ExactFunction> hh{ex({"-1", "1"}), ex({"-1", "1"})};
    CHECK(pi_paraproduct<Exact>(AlphaVector{0, 0}, b, hh) == ex({"-1/2", "1/2"}));
}

TEST_CASE("adjoint and transpose examples") {
    CHECK(adjoint_residual(ex({"0", "1"}), ex({"2", "4"}), ex({"-1", "1"})).is_zero());
    const std::vector<ExactFunction> fs{ex({"-1", "1"}), ex({"1", "1"})};
    CHECK(transpose_residual<Exact>(AlphaVector{0, 1}, ex({"0", "1"}), ex({"2", "4"}), fs).is_zero());
    CHECK_THROWS_AS((void)transpose_residual<Exact>(AlphaVector{1, 0}, ex({"0", "1"}), ex({"2", "4"}), fs),
                    DyadicError);
}

TEST_CASE("paraproducts agree with the naive oracle") {
    std::mt19937_64 rng(31);
    for (std::size_t m = 1; m <= 3; ++m) {
        for (int depth = 1; depth <= 4; ++depth) {
            const auto fs = oracle::random_tuple<Exact>(rng, m, depth);
            const auto b = oracle::random_exact(rng, depth);
            for (const auto& alpha : oracle::all_alphas(m)) {
                CHECK(paraproduct<Exact>(alpha, fs) == oracle::paraproduct(alpha, fs));
                const auto pi = pi_paraproduct<Exact>(alpha, b, fs);
                CHECK(pi == oracle::pi_paraproduct(alpha, b, fs));
                std::vector<ExactFunction> with_b{b};
                with_b.insert(with_b.end(), fs.begin(), fs.end());
                CHECK(pi == paraproduct<Exact>(alpha.prepended(0), with_b));
            }
        }
    }
}

TEST_CASE("float mode tracks exact mode") {
    std::mt19937_64 rng(32);
    const auto fs = oracle::random_tuple<Exact>(rng, 3, 5);
    std::vector<FloatFunction> ff;
    for (const auto& f : fs) ff.push_back(f.to_float());
    for (const auto& alpha : enumerate_um(3)) {
        const auto exact = paraproduct<Exact>(alpha, fs).to_float();
        const auto approx = paraproduct<double>(alpha, ff);
        for (std::size_t k = 0; k < exact.size(); ++k) CHECK(approx[k] == doctest::Approx(exact[k]).epsilon(1e-12));
    }
}

TEST_CASE("decomposition identities on random rational inputs") {
    std::mt19937_64 rng(33);
    for (std::size_t m = 2; m <= 4; ++m) {
        for (int depth = 1; depth <= 5; ++depth) {
            for (int t = 0; t < 4; ++t) {
                const auto fs = oracle::random_tuple<Exact>(rng, m, depth);
                CHECK(product_decomposition_residual<Exact>(fs).is_zero());
                for (const auto& J : interval_family(depth + 1)) {
                    if (J.is_universe()) continue;
                    CHECK(localized_average_residual<Exact>(J, fs).is_zero());
                }
            }
        }
    }
    for (int t = 0; t < 10; ++t) {
        const auto b = oracle::random_exact(rng, 6);
        const auto f = oracle::random_exact(rng, 6);
        CHECK(multiplication_decomposition_residual(b, f).is_zero());
        CHECK(adjoint_residual(b, f, oracle::random_exact(rng, 6)).is_zero());
    }
}

TEST_CASE("constant inputs leave only the root term") {
    const std::vector<ExactFunction> fs{ExactFunction::constant(3, Exact(2)), ExactFunction::constant(3, Exact(-5))};
    for (const auto& alpha : enumerate_um(2)) CHECK(paraproduct<Exact>(alpha, fs).is_zero());
    CHECK(product_decomposition_residual<Exact>(fs).is_zero());
}

TEST_CASE("permutation symmetry and multilinearity") {
    std::mt19937_64 rng(34);
    for (int t = 0; t < 20; ++t) {
        const std::size_t m = 3;
        const auto fs = oracle::random_tuple<Exact>(rng, m, 4);
        const auto alpha = oracle::random_alpha(rng, m);
        std::vector<std::size_t> perm(m);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<ExactFunction> permuted;
        for (auto k : perm) permuted.push_back(fs[k]);
        CHECK(paraproduct<Exact>(alpha.permuted(perm), permuted) == paraproduct<Exact>(alpha, fs));

        const auto g = oracle::random_exact(rng, 4);
        const Exact c = oracle::random_rational(rng);
        auto mixed = fs;
        mixed[1] = fs[1] * c + g;
        auto only_g = fs;
        only_g[1] = g;
        CHECK(paraproduct<Exact>(alpha, mixed) ==
              paraproduct<Exact>(alpha, fs) * c + paraproduct<Exact>(alpha, only_g));
        const auto b = oracle::random_exact(rng, 4);
        CHECK(pi_paraproduct<Exact>(alpha, b, mixed) ==
              pi_paraproduct<Exact>(alpha, b, fs) * c + pi_paraproduct<Exact>(alpha, b, only_g));
    }
}

TEST_CASE("transpose identity for m = 3") {
    std::mt19937_64 rng(35);
    for (int t = 0; t < 10; ++t) {
        const auto fs = oracle::random_tuple<Exact>(rng, 3, 4);
        CHECK(transpose_residual<Exact>(AlphaVector{0, 1, 1}, oracle::random_exact(rng, 4), oracle::random_exact(rng, 4), fs)
                  .is_zero());
    }
}

TEST_CASE("support of paraproducts with a Haar input") {
    std::mt19937_64 rng(36);
    for (std::size_t m = 1; m <= 3; ++m) {
        for (int t = 0; t < 10; ++t) {
            const int depth = 4;
            auto fs = oracle::random_tuple<Exact>(rng, m, depth);
            const auto I = oracle::random_interval(rng, depth - 1);
            std::uniform_int_distribution<std::size_t> slot(0, m - 1);
            fs[slot(rng)] = ExactFunction::haar(I, depth);
            const auto b = oracle::random_exact(rng, depth);
            for (const auto& alpha : oracle::all_alphas(m)) {
                const auto P = paraproduct<Exact>(alpha, fs);
                const auto pi = pi_paraproduct<Exact>(alpha, b, fs);
                for (std::uint64_t k = 0; k < P.size(); ++k) {
                    if (I.contains_leaf(k, depth)) continue;
                    if (alpha.in_um()) CHECK(P[k].is_zero());
                    CHECK(pi[k].is_zero());
                }
            }
        }
    }
}
