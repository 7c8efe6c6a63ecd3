// Acceptance gate: one PASS/FAIL line per criterion. Exit status 0 only if all pass.
// Optional argument: path to the dyadic CLI, used for the reproducibility check.

#include "oracles.hpp"

#include "dyadic/io.hpp"
#include "dyadic/norm_lab.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>

#include <unistd.h>

using namespace dyadic;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    std::size_t checks = 0;

    void check(bool ok, const std::string& what) {
        ++checks;
        if (!ok && pass) {
            pass = false;
            detail = what;
        }
    }
};

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

ExponentTuple random_exponents(std::mt19937_64& rng, std::size_t m) {
    static const std::vector<Rational> choices{Rational(1), Rational(3, 2), Rational(2), Rational(3),
                                              Rational(4), Rational(5, 2), Rational(6)};
    std::uniform_int_distribution<std::size_t> pick(0, choices.size() - 1);
    std::vector<Rational> p;
    for (std::size_t j = 0; j < m; ++j) p.push_back(choices[pick(rng)]);
    return ExponentTuple(p);
}

bool close(double got, double want, double tol) { return std::fabs(got - want) <= tol * std::max(1.0, std::fabs(want)); }

// 1 ------------------------------------------------------------------------
Outcome exact_decomposition() {
    Outcome o;
    std::mt19937_64 rng(1001);
    for (std::size_t m = 2; m <= 4; ++m) {
        for (int depth = 2; depth <= 6; ++depth) {
            for (int t = 0; t < 100; ++t) {
                const auto fs = oracle::random_tuple<Exact>(rng, m, depth);
                const std::string where = "m=" + std::to_string(m) + " depth=" + std::to_string(depth);
                // Oracle: leafwise product against the paraproduct sum plus the root term.
                StepFunction<Exact> sum = StepFunction<Exact>::constant(depth, Exact(1));
                for (const auto& f : fs) sum *= ExactFunction::constant(depth, oracle::average(f, DyadicInterval::universe()));
                for (const auto& alpha : enumerate_um(static_cast<int>(m))) sum += paraproduct<Exact>(alpha, fs);
                StepFunction<Exact> product = StepFunction<Exact>::constant(depth, Exact(1));
                for (const auto& f : fs) product *= f;
                o.check(sum == product, "leafwise product oracle, " + where);
                o.check(product_decomposition_residual<Exact>(fs).is_zero(), "product residual, " + where);
                const auto J = oracle::random_interval(rng, depth);
                const DyadicInterval Jp = J.is_universe() ? DyadicInterval{1, 0} : J;
                o.check(localized_average_residual<Exact>(Jp, fs).is_zero(), "localized residual, " + where);
            }
            // every proper J once per configuration
            const auto fs = oracle::random_tuple<Exact>(rng, m, depth);
            for (int level = 1; level <= depth; ++level)
                for (std::uint64_t pos = 0; pos < (std::uint64_t{1} << level); ++pos)
                    o.check(localized_average_residual<Exact>({level, pos}, fs).is_zero(), "localized residual, all J");
        }
    }
    return o;
}

// 2 ------------------------------------------------------------------------
Outcome haar_algebra() {
    Outcome o;
    std::mt19937_64 rng(1002);
    for (int depth = 1; depth <= 6; ++depth) {
        for (int t = 0; t < 20; ++t) {
            const auto f = oracle::random_exact(rng, depth);
            const auto s = analyze(f);
            o.check(synthesize(s) == f, "synthesize(analyze(f)) != f");
            o.check(analyze(synthesize(s)) == s, "analyze(synthesize(s)) != s");
            Exact energy = s.mean() * s.mean();
            for (const auto& c : s.coeffs()) energy += c * c;
            o.check(oracle::inner(f, f) == energy, "Parseval");
        }
        const auto family = interval_family(depth);
        const auto one = ExactFunction::constant(depth, Exact(1));
        for (const auto& I : family) {
            const auto hI = oracle::haar<Exact>(I, depth);
            o.check(inner_product(hI, one).is_zero(), "<h_I, 1> != 0");
            for (const auto& J : family)
                o.check(inner_product(hI, oracle::haar<Exact>(J, depth)) == Exact(I == J ? 1 : 0), "orthonormality");
        }
    }
    return o;
}

// 3 ------------------------------------------------------------------------
Outcome multiplier_coefficients() {
    Outcome o;
    std::mt19937_64 rng(1003);
    for (int depth = 1; depth <= 6; ++depth) {
        for (int t = 0; t < 50; ++t) {
            const auto eps = oracle::random_symbol(rng, depth);
            const auto f = oracle::random_exact(rng, depth);
            const auto Tf = linear_multiplier(eps, f);
            for (const auto& I : interval_family(depth))
                o.check(oracle::pairing(Tf, I, 0) == eps.value(I) * oracle::pairing(f, I, 0), "coefficient law at " + I.to_string());
        }
    }
    return o;
}

// 4 ------------------------------------------------------------------------
Outcome extremal_values() {
    Outcome o;
    std::mt19937_64 rng(1004);
    const int depth = 5;
    const double tol = 1e-9;

    // (a) pi paraproduct on its extremal family, sigma(alpha) > 1
    for (const char* a : {"00", "000", "001", "100", "0011", "0101", "0000"}) {
        const auto alpha = AlphaVector::parse(a);
        for (int t = 0; t < 3; ++t) {
            const auto b = oracle::random_float(rng, depth);
            const auto exps = random_exponents(rng, alpha.size());
            for (const auto& J : interval_family(depth)) {
                const auto fs = lab::extremal_pi_family<double>(J, alpha, exps, depth);
                for (std::size_t j = 0; j < fs.size(); ++j)
                    o.check(close(lp_norm(fs[j], Exponent(exps.p(j))), 1.0, 1e-12), "(a) ||f_j|| != 1");
                const double got = lp_quasinorm(pi_paraproduct<double>(alpha, b, fs), Exponent(exps.r()));
                const double want = std::fabs(oracle::pairing(b, J, 0)) * std::exp2(0.5 * J.level);
                o.check(close(got, want, tol), std::string("(a) alpha=") + a + " J=" + J.to_string());
            }
        }
    }

    // (b) multiplier family ratio = |eps_I|
    for (const char* a : {"0", "01", "00", "10", "011", "001", "0110", "0000"}) {
        lab::OperatorDescriptor d;
        d.kind = lab::OperatorKind::multilinear_multiplier;
        d.alpha = AlphaVector::parse(a);
        SymbolSequence<double> eps(std::uniform_real_distribution<double>(-3, 3)(rng));
        for (const auto& I : interval_family(depth)) eps.set(I, std::uniform_real_distribution<double>(-3, 3)(rng));
        d.symbol = eps;
        const auto exps = random_exponents(rng, d.arity());
        for (const auto& I : interval_family(depth)) {
            const auto fs = lab::extremal_multiplier_family<double>(I, d.alpha, depth);
            const auto r = lab::ratio(d, exps, fs, false);
            o.check(r && close(*r, std::fabs(eps.value(I)), tol), std::string("(b) alpha=") + a + " I=" + I.to_string());
        }
    }

    // (c) commutator case two: |I0|^{-1/r} ||(b - <b>_{I0}) 1_{I0}||_r
    for (const char* a : {"10", "00", "101", "001", "110", "0011"}) {
        lab::OperatorDescriptor d;
        d.kind = lab::OperatorKind::commutator;
        d.alpha = AlphaVector::parse(a);
        d.slot = 1;
        d.symbol = SymbolSequence<double>();
        d.b = oracle::random_float(rng, depth);
        const auto exps = random_exponents(rng, d.arity());
        const Exponent r(exps.r());
        for (const auto& I0 : interval_family(depth)) {
            const auto fs = lab::commutator_necessity_family<double>(lab::NecessityCase::two, I0, d.alpha, 1, depth);
            const auto got = lab::ratio(d, exps, fs, false);
            const double mean = oracle::average(*d.b, I0);
            const auto local = (*d.b - FloatFunction::constant(depth, mean)) * oracle::indicator<double>(I0, depth);
            const double want = std::exp2(I0.level / exps.r().get_d()) * lp_quasinorm(local, r);
            o.check(got && close(*got, want, tol), std::string("(c) alpha=") + a + " I0=" + I0.to_string());
        }
    }

    // (d) commutator case one, exact: T(f) = 0 and [b,T]_1(f) = (K / sqrt|P|)^{m-1} sum_{I in I0} b(I) h_I
    for (std::size_t m = 2; m <= 4; ++m) {
        std::vector<std::uint8_t> bits(m, 1);
        bits[0] = 0;
        const AlphaVector alpha(bits);
        const SymbolSequence<Exact> one;
        const auto b = oracle::random_exact(rng, depth);
        for (const auto& I0 : interval_family(depth)) {
            if (I0.is_universe()) continue;
            const auto fs = lab::commutator_necessity_family<Exact>(lab::NecessityCase::one, I0, alpha, 1, depth);
            o.check(multilinear_multiplier<Exact>(one, alpha, fs).is_zero(), "(d) T(f) != 0");
            const DyadicInterval P = I0.parent();
            const Exact K(I0.is_right_child() ? 1 : -1);
            Exact factor(1);
            for (std::size_t j = 1; j < m; ++j) factor *= K * oracle::sqrt2_pow<Exact>(P.level);
            ExactFunction projected(depth);
            for (const auto& I : interval_family(depth))
                if (I0.contains(I)) projected += oracle::haar<Exact>(I, depth) * oracle::pairing(b, I, 0);
            o.check(commutator<Exact>(1, b, one, alpha, fs) == projected * factor,
                    "(d) m=" + std::to_string(m) + " I0=" + I0.to_string());
        }
    }
    return o;
}

// 5 ------------------------------------------------------------------------
Outcome pointwise_dominations() {
    Outcome o;
    std::mt19937_64 rng(1005);
    double worst = 1e300;
    for (int t = 0; t < 100; ++t) {
        const int depth = 2 + t % 7;
        // Cauchy-Schwarz with the square function
        const auto f = oracle::random_float(rng, depth);
        const auto g = oracle::random_float(rng, depth);
        const auto Sf = square_function(f);
        const auto Sg = square_function(g);
        for (std::uint64_t x = 0; x < f.size(); ++x) {
            double lhs = 0;
            for (const auto& I : interval_family(depth)) {
                if (!I.contains_leaf(x, depth)) continue;
                lhs += std::fabs(oracle::pairing(f, I, 0) * oracle::pairing(g, I, 0)) * std::exp2(I.level);
            }
            const double slack = Sf[x] * Sg[x] - lhs;
            worst = std::min(worst, slack);
            o.check(slack >= -1e-12, "Cauchy-Schwarz bound");
        }

        // sigma(alpha) >= 2: |P^alpha| <= prod_{j != j', j''} M f_j * S f_j' * S f_j''
        const std::size_t m = 2 + t % 3;
        AlphaVector alpha;
        do alpha = oracle::random_alpha(rng, m);
        while (alpha.sigma() < 2);
        const auto fs = oracle::random_tuple<double>(rng, m, depth);
        std::vector<std::size_t> zeros;
        for (std::size_t j = 0; j < m; ++j)
            if (alpha[j] == 0) zeros.push_back(j);
        const auto P = paraproduct<double>(alpha, fs);
        auto bound = FloatFunction::constant(depth, 1.0);
        for (std::size_t j = 0; j < m; ++j)
            bound *= (j == zeros[0] || j == zeros[1]) ? square_function(fs[j]) : maximal(fs[j]);
        for (std::uint64_t x = 0; x < P.size(); ++x) {
            const double slack = bound[x] - std::fabs(P[x]);
            worst = std::min(worst, slack);
            o.check(slack >= -1e-12, "maximal/square domination, alpha=" + alpha.to_string());
        }
    }
    if (o.pass) o.detail = "min slack " + fmt(worst);
    return o;
}

// 6 ------------------------------------------------------------------------
Outcome bmo_suite() {
    Outcome o;
    std::mt19937_64 rng(1006);
    for (int t = 0; t < 1000; ++t) {
        const int depth = 1 + t % 6;
        const auto b = oracle::random_exact(rng, depth);
        const Exact b2 = bmo2_squared(b);
        o.check(bmo2_via_haar_squared(b) == b2, "bmo2 via Haar != bmo2");
        o.check(bstar_squared(b) <= b2, "bstar > bmo2");
        const Exact b1 = bmo1(b);
        o.check(b1 * b1 <= b2, "bmo1 > bmo2");
        o.check(close(bmo2_via_haar(b), bmo_norm(b, 2), 1e-12), "float bmo2 forms disagree");
    }
    for (int depth = 1; depth <= 6; ++depth) {
        const auto c = ExactFunction::constant(depth, oracle::random_rational(rng));
        o.check(bmo1(c).is_zero() && bmo2_squared(c).is_zero() && bmo2_via_haar_squared(c).is_zero() &&
                    bstar_squared(c).is_zero(),
                "nonzero BMO on a constant");
    }
    return o;
}

// 7 ------------------------------------------------------------------------
Outcome cz_suite() {
    Outcome o;
    std::mt19937_64 rng(1007);
    for (int t = 0; t < 500; ++t) {
        const int depth = 1 + t % 6;
        const auto f = oracle::random_exact(rng, depth);
        const auto af = f.map([](const Exact& v) { return abs(v); });
        const Exact root = oracle::average(af, DyadicInterval::universe());
        // lambda = <|f|>_U * (1 + k/4), k in 0..8, so that <|f|>_U <= lambda
        const Exact lambda = root.is_zero() ? Exact(1) : root * Exact(Rational(4 + static_cast<long>(rng() % 9), 4));
        const auto cz = cz_decompose(f, lambda);

        auto total = cz.good;
        Exact measure(0);
        for (const auto& part : cz.parts) {
            total += part.bad;
            const auto& I = part.interval;
            measure += Exact::pow_sqrt2(-2L * I.level);
            o.check(oracle::average(part.bad, I).is_zero(), "bad part has nonzero mean");
            for (std::uint64_t k = 0; k < f.size(); ++k)
                if (!I.contains_leaf(k, depth)) o.check(part.bad[k].is_zero(), "bad part leaks outside its interval");
            const Exact avg = oracle::average(af, I);
            o.check(avg > lambda && avg <= lambda * Exact(2), "selected average outside (lambda, 2 lambda]");
            for (const auto& other : cz.parts)
                if (!(other.interval == I)) o.check(I.disjoint(other.interval), "selected intervals overlap");
        }
        o.check(total == f, "reconstruction");
        // maximality: every interval not inside a selected one has average <= lambda,
        // and every strict ancestor of a selected one too
        for (int level = 0; level <= depth; ++level) {
            for (std::uint64_t pos = 0; pos < (std::uint64_t{1} << level); ++pos) {
                const DyadicInterval I{level, pos};
                bool inside = false;
                for (const auto& part : cz.parts) inside = inside || part.interval.contains(I);
                if (!inside) o.check(oracle::average(af, I) <= lambda, "unselected interval above height");
            }
        }
        o.check(measure * lambda <= oracle::integral(af), "sum |I_j| > ||f||_1 / lambda");
        for (const auto& v : cz.good.values()) o.check(abs(v) <= lambda * Exact(2), "||g||_inf > 2 lambda");
    }
    return o;
}

// 8 ------------------------------------------------------------------------
Outcome support_hypothesis() {
    Outcome o;
    std::mt19937_64 rng(1008);
    for (int depth = 1; depth <= 6; ++depth) {
        for (std::size_t m = 1; m <= 4; ++m) {
            for (const auto& alpha : oracle::all_alphas(m)) {
                for (int t = 0; t < 2; ++t) {
                    auto fs = oracle::random_tuple<Exact>(rng, m, depth);
                    const auto I = oracle::random_interval(rng, depth - 1);
                    fs[rng() % m] = ExactFunction::haar(I, depth);
                    const auto b = oracle::random_exact(rng, depth);
                    const auto pi = pi_paraproduct<Exact>(alpha, b, fs);
                    const auto P = alpha.in_um() ? paraproduct<Exact>(alpha, fs) : ExactFunction(depth);
                    for (std::uint64_t k = 0; k < pi.size(); ++k) {
                        if (I.contains_leaf(k, depth)) continue;
                        o.check(P[k].is_zero(), "P^alpha leaks outside I, alpha=" + alpha.to_string());
                        o.check(pi[k].is_zero(), "pi^alpha leaks outside I, alpha=" + alpha.to_string());
                    }
                }
            }
        }
    }
    return o;
}

// 9 ------------------------------------------------------------------------
Outcome commutator_sanity() {
    Outcome o;
    std::mt19937_64 rng(1009);
    for (int depth = 1; depth <= 6; ++depth) {
        for (std::size_t m = 1; m <= 4; ++m) {
            for (int t = 0; t < 5; ++t) {
                const auto fs = oracle::random_tuple<Exact>(rng, m, depth);
                const auto eps = oracle::random_symbol(rng, depth);
                const auto alpha = oracle::random_alpha(rng, m, false);
                const auto b = ExactFunction::constant(depth, oracle::random_rational(rng));
                for (std::size_t slot = 1; slot <= m; ++slot)
                    o.check(commutator<Exact>(slot, b, eps, alpha, fs).is_zero(), "commutator with constant b");

                std::vector<std::size_t> perm(m);
                std::iota(perm.begin(), perm.end(), 0);
                std::shuffle(perm.begin(), perm.end(), rng);
                std::vector<ExactFunction> permuted;
                for (auto k : perm) permuted.push_back(fs[k]);
                const auto any_alpha = oracle::random_alpha(rng, m);
                o.check(paraproduct<Exact>(any_alpha.permuted(perm), permuted) == paraproduct<Exact>(any_alpha, fs),
                        "permutation symmetry");

                const auto f1 = oracle::random_exact(rng, depth);
                const auto g = oracle::random_exact(rng, depth);
                o.check(adjoint_residual(f1, fs[0], g).is_zero(), "adjoint residual");
                std::vector<std::uint8_t> bits(m, 1);
                bits[0] = 0;
                o.check(transpose_residual<Exact>(AlphaVector(bits), f1, g, fs).is_zero(), "transpose residual");
            }
        }
    }
    return o;
}

// 10 -----------------------------------------------------------------------
std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Outcome reproducibility(const char* cli) {
    Outcome o;
    std::mt19937_64 rng(1010);
    const int depth = 5;
    std::vector<std::pair<lab::OperatorDescriptor, std::string>> cases;
    {
        lab::OperatorDescriptor d;
        d.kind = lab::OperatorKind::paraproduct;
        d.alpha = AlphaVector::parse("011");
        cases.emplace_back(d, "3,3,3");
        d.kind = lab::OperatorKind::pi_paraproduct;
        d.alpha = AlphaVector::parse("11");
        d.b = oracle::random_float(rng, depth);
        cases.emplace_back(d, "2,2");
        d.kind = lab::OperatorKind::multilinear_multiplier;
        d.alpha = AlphaVector::parse("001");
        d.b.reset();
        d.symbol = SymbolSequence<double>(0.5);
        cases.emplace_back(d, "4,4,2");
        d.kind = lab::OperatorKind::commutator;
        d.alpha = AlphaVector::parse("01");
        d.slot = 1;
        d.b = oracle::random_float(rng, depth);
        cases.emplace_back(d, "2,2");
    }
    for (const auto& [d, p] : cases) {
        const auto exps = ExponentTuple::parse(p);
        for (auto family : {lab::SamplerFamily::random_step, lab::SamplerFamily::rademacher_haar,
                            lab::SamplerFamily::indicator, lab::SamplerFamily::extremal}) {
            const lab::SamplerSpec spec{family, depth, 3, 2024};
            const auto serial = io::dump(io::to_json(lab::estimate_operator_norm(d, exps, spec, 300, {1})));
            const auto again = io::dump(io::to_json(lab::estimate_operator_norm(d, exps, spec, 300, {1})));
            const auto report = lab::estimate_operator_norm(d, exps, spec, 300, {4});
            o.check(serial == again, "serial reruns differ");
            o.check(serial == io::dump(io::to_json(report)), "parallel run differs from serial run");
            o.check(report.extremal_lower_bound && report.best_ratio >= *report.extremal_lower_bound,
                    "best_ratio below extremal lower bound");
        }
    }
    if (cli) {
        namespace fs = std::filesystem;
        const auto dir = fs::temp_directory_path() / ("dyadic_acceptance_" + std::to_string(::getpid()));
        fs::create_directories(dir);
        const std::string base = std::string("\"") + cli + "\" estimate --op para --alpha 01 --p 3,3/2 --trials 500 --seed 5 ";
        const auto a = dir / "a.json", b = dir / "b.json";
        const int ra = std::system((base + "--threads 1 --out \"" + a.string() + "\" > /dev/null").c_str());
        const int rb = std::system((base + "--threads 4 --out \"" + b.string() + "\" > /dev/null").c_str());
        o.check(ra == 0 && rb == 0, "CLI estimate failed");
        o.check(!slurp(a).empty() && slurp(a) == slurp(b), "CLI reports differ");
        const auto j = io::read_json_file(a);
        o.check(j["best_ratio"].get<double>() >= j["extremal_lower_bound"].get<double>(), "CLI best below bound");
        fs::remove_all(dir);
    }
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    const char* cli = argc > 1 ? argv[1] : nullptr;
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"exact product and localized decompositions", exact_decomposition},
        {"Haar round trip, Parseval, orthonormality", haar_algebra},
        {"multiplier coefficient law", multiplier_coefficients},
        {"extremal values (pi family, multiplier family, commutator cases)", extremal_values},
        {"pointwise Cauchy-Schwarz and maximal/square dominations", pointwise_dominations},
        {"BMO functionals", bmo_suite},
        {"Calderon-Zygmund decomposition", cz_suite},
        {"support of P and pi with a Haar input", support_hypothesis},
        {"commutator, permutation, adjoint, transpose identities", commutator_sanity},
        {"report reproducibility and extremal lower bound", [cli] { return reproducibility(cli); }},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (!o.pass) ++failed;
        std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << (i + 1) << ": " << criteria[i].first << "  ["
                  << o.checks << " checks, " << fmt(secs) << " s" << (o.detail.empty() ? "" : ", " + o.detail) << "]"
                  << std::endl;
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
    return failed == 0 ? 0 : 1;
}
