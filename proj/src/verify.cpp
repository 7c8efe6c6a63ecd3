#include "dyadic/verify.hpp"

#include "dyadic/multiplier.hpp"
#include "dyadic/norms.hpp"

#include <array>
#include <cmath>
#include <random>

namespace dyadic::verify {

namespace {

constexpr std::array kSuites{Suite::decomposition, Suite::localized,        Suite::adjoint,
                             Suite::transpose,     Suite::multiplier_coeff, Suite::commutator_constant};

// Random inputs for one trial; the stream depends only on (seed, trial).
template <Scalar T>
class Source {
public:
    Source(std::uint64_t seed, std::uint64_t trial) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
        rng_.seed(seq);
    }

    T scalar() {
        std::uniform_int_distribution<long> num(-9, 9);
        std::uniform_int_distribution<long> den(1, 8);
        const Rational q(num(rng_), den(rng_));
        return ScalarTraits<T>::from_rational(q);
    }

    StepFunction<T> function(int depth) {
        std::vector<T> v;
        v.reserve(std::size_t{1} << depth);
        for (std::size_t k = 0; k < (std::size_t{1} << depth); ++k) v.push_back(scalar());
        return StepFunction<T>(depth, std::move(v));
    }

    std::vector<StepFunction<T>> tuple(int m, int depth) {
        std::vector<StepFunction<T>> fs;
        for (int j = 0; j < m; ++j) fs.push_back(function(depth));
        return fs;
    }

    SymbolSequence<T> symbol(int depth) {
        SymbolSequence<T> eps(scalar());
        std::bernoulli_distribution coin(0.5);
        for (const auto& I : interval_family(depth))
            if (coin(rng_)) eps.set(I, scalar());
        return eps;
    }

    AlphaVector alpha_in_um(int m) {
        const auto um = enumerate_um(m);
        std::uniform_int_distribution<std::size_t> pick(0, um.size() - 1);
        return um[pick(rng_)];
    }

private:
    std::mt19937_64 rng_;
};

template <Scalar T>
double scale_of(std::span<const StepFunction<T>> fs) {
    double s = 1.0;
    for (const auto& f : fs) s *= std::max(1.0, to_double(sup_norm(f)));
    return s;
}

template <Scalar T>
bool negligible(const T& value, double scale) {
    if constexpr (ScalarTraits<T>::exact) {
        return ScalarTraits<T>::is_zero(value);
    } else {
        return std::fabs(value) <= kFloatTolerance * scale;
    }
}

template <Scalar T>
bool negligible(const StepFunction<T>& f, double scale) {
    for (const auto& v : f.values())
        if (!negligible(v, scale)) return false;
    return true;
}

// Returns an empty string when the trial passes, otherwise a description.
template <Scalar T>
std::string run_trial(const Config& c, std::uint64_t trial) {
    Source<T> src(c.seed, trial);
    switch (c.suite) {
        case Suite::decomposition: {
            const auto fs = src.tuple(c.m, c.depth);
            if (!negligible(product_decomposition_residual<T>(fs), scale_of<T>(fs))) return "product decomposition";
            return {};
        }
        case Suite::localized: {
            const auto fs = src.tuple(c.m, c.depth);
            for (int level = 1; level <= c.depth; ++level) {
                for (std::uint64_t pos = 0; pos < (std::uint64_t{1} << level); ++pos) {
                    const DyadicInterval J{level, pos};
                    if (!negligible(localized_average_residual<T>(J, fs), scale_of<T>(fs))) {
                        return "localized average at " + J.to_string();
                    }
                }
            }
            return {};
        }
        case Suite::adjoint: {
            const auto fs = src.tuple(3, c.depth);
            if (!negligible(adjoint_residual(fs[0], fs[1], fs[2]), scale_of<T>(fs))) return "adjoint identity";
            return {};
        }
        case Suite::transpose: {
            const auto fs = src.tuple(c.m, c.depth);
            const auto b = src.function(c.depth);
            const auto g = src.function(c.depth);
            std::vector<std::uint8_t> bits(static_cast<std::size_t>(c.m), 1);
            bits[0] = 0;
            const AlphaVector alpha(bits);
            auto all = fs;
            all.push_back(b);
            all.push_back(g);
            if (!negligible(transpose_residual<T>(alpha, b, g, fs), scale_of<T>(all))) return "transpose identity";
            return {};
        }
        case Suite::multiplier_coeff: {
            const auto eps = src.symbol(c.depth);
            const auto f = src.function(c.depth);
            const auto Tf = linear_multiplier(eps, f);
            const double scale = std::max(1.0, to_double(sup_norm(f))) * std::max(1.0, to_double(eps.sup_norm()));
            const DyadicTable<T> in(f), out(Tf);
            for (const auto& I : interval_family(c.depth)) {
                if (!negligible(T(out.coefficient(I) - eps.value(I) * in.coefficient(I)), scale)) {
                    return "coefficient law at " + I.to_string();
                }
            }
            if (!negligible(out.average(DyadicInterval::universe()), scale)) return "nonzero output mean";
            return {};
        }
        case Suite::commutator_constant: {
            const auto fs = src.tuple(c.m, c.depth);
            const auto b = StepFunction<T>::constant(c.depth, src.scalar());
            const auto eps = src.symbol(c.depth);
            const auto alpha = src.alpha_in_um(c.m);
            for (std::size_t slot = 1; slot <= fs.size(); ++slot) {
                if (!negligible(commutator<T>(slot, b, eps, alpha, fs), scale_of<T>(fs))) {
                    return "commutator slot " + std::to_string(slot) + " alpha " + alpha.to_string();
                }
            }
            if (!negligible(commutator_linear(b, eps, fs[0]), scale_of<T>(fs))) return "linear commutator";
            return {};
        }
    }
    return "unknown suite";
}

template <Scalar T>
Result run_all(const Config& c) {
    Result r;
    r.trials = c.trials;
    for (std::size_t t = 0; t < c.trials; ++t) {
        auto failure = run_trial<T>(c, t);
        if (failure.empty()) continue;
        ++r.failures;
        if (!r.first_failure) r.first_failure = "trial " + std::to_string(t) + ": " + failure;
    }
    return r;
}

}  // namespace

std::string_view to_string(Suite suite) noexcept {
    switch (suite) {
        case Suite::decomposition: return "decomposition";
        case Suite::localized: return "localized";
        case Suite::adjoint: return "adjoint";
        case Suite::transpose: return "transpose";
        case Suite::multiplier_coeff: return "multiplier-coeff";
        case Suite::commutator_constant: return "commutator-constant";
    }
    return "unknown";
}

Suite parse_suite(std::string_view text) {
    for (auto s : kSuites)
        if (text == to_string(s)) return s;
    throw DyadicError(ErrorKind::parse_error, "unknown suite '" + std::string(text) + "'");
}

Result run_suite(const Config& c) {
    if (c.trials == 0) throw DyadicError(ErrorKind::zero_trials, "need at least one trial");
    check_depth(c.depth);
    if (c.m < 1) throw DyadicError(ErrorKind::invalid_arity, "m must be at least 1");
    const bool decomposition = c.suite == Suite::decomposition || c.suite == Suite::localized;
    if (decomposition && c.m < 2) throw DyadicError(ErrorKind::invalid_arity, "decomposition suites need m >= 2");
    if (decomposition && c.depth < 2) {
        throw DyadicError(ErrorKind::invalid_depth, "decomposition suites need depth >= 2");
    }
    return c.mode == ScalarMode::rational ? run_all<Exact>(c) : run_all<double>(c);
}

}  // namespace dyadic::verify
