#include "dyadic/norm_lab.hpp"

#include "dyadic/sublinear.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <random>
#include <thread>

namespace dyadic::lab {

std::string_view to_string(OperatorKind kind) noexcept {
    switch (kind) {
        case OperatorKind::paraproduct: return "paraproduct";
        case OperatorKind::pi_paraproduct: return "pi_paraproduct";
        case OperatorKind::multilinear_multiplier: return "multilinear_multiplier";
        case OperatorKind::commutator: return "commutator";
    }
    return "unknown";
}

OperatorKind parse_operator_kind(std::string_view text) {
    if (text == "para" || text == "paraproduct") return OperatorKind::paraproduct;
    if (text == "pi" || text == "pi_paraproduct") return OperatorKind::pi_paraproduct;
    if (text == "mult" || text == "multiplier" || text == "multilinear_multiplier") {
        return OperatorKind::multilinear_multiplier;
    }
    if (text == "commutator") return OperatorKind::commutator;
    throw DyadicError(ErrorKind::parse_error, "unknown operator '" + std::string(text) + "'");
}

std::string_view to_string(SamplerFamily family) noexcept {
    switch (family) {
        case SamplerFamily::random_step: return "random-step";
        case SamplerFamily::rademacher_haar: return "rademacher-haar";
        case SamplerFamily::indicator: return "indicator";
        case SamplerFamily::extremal: return "extremal";
    }
    return "unknown";
}

SamplerFamily parse_sampler_family(std::string_view text) {
    for (auto f : {SamplerFamily::random_step, SamplerFamily::rademacher_haar, SamplerFamily::indicator,
                   SamplerFamily::extremal}) {
        if (text == to_string(f)) return f;
    }
    throw DyadicError(ErrorKind::parse_error, "unknown sampler '" + std::string(text) + "'");
}

void OperatorDescriptor::validate(int depth) const {
    check_depth(depth);
    if (alpha.size() == 0) throw DyadicError(ErrorKind::invalid_arity, "alpha is empty");
    const bool needs_b = kind == OperatorKind::pi_paraproduct || kind == OperatorKind::commutator;
    const bool needs_symbol = kind == OperatorKind::multilinear_multiplier || kind == OperatorKind::commutator;
    if (needs_b && !b) {
        throw DyadicError(ErrorKind::inconsistent_descriptor, std::string(to_string(kind)) + " needs b");
    }
    if (needs_symbol && !symbol) {
        throw DyadicError(ErrorKind::inconsistent_descriptor, std::string(to_string(kind)) + " needs a symbol");
    }
    if (b && b->depth() != depth) {
        throw DyadicError(ErrorKind::inconsistent_descriptor, "b has depth " + std::to_string(b->depth()) +
                                                                  ", grid has depth " + std::to_string(depth));
    }
    if (kind != OperatorKind::pi_paraproduct && !alpha.in_um()) {
        throw DyadicError(ErrorKind::invalid_alpha,
                          std::string(to_string(kind)) + " needs alpha in U_m, got " + alpha.to_string());
    }
    if (kind == OperatorKind::commutator) {
        if (!slot) throw DyadicError(ErrorKind::inconsistent_descriptor, "commutator needs a slot");
        if (*slot < 1 || *slot > arity()) {
            throw DyadicError(ErrorKind::invalid_slot, "slot " + std::to_string(*slot) + " outside 1.." +
                                                           std::to_string(arity()));
        }
    }
}

FloatFunction OperatorDescriptor::apply(std::span<const FloatFunction> fs) const {
    switch (kind) {
        case OperatorKind::paraproduct: return paraproduct<double>(alpha, fs);
        case OperatorKind::pi_paraproduct: return pi_paraproduct<double>(alpha, *b, fs);
        case OperatorKind::multilinear_multiplier: return multilinear_multiplier<double>(*symbol, alpha, fs);
        case OperatorKind::commutator: return commutator<double>(*slot, *b, *symbol, alpha, fs);
    }
    throw DyadicError(ErrorKind::inconsistent_descriptor, "unknown operator kind");
}

template <Scalar T>
std::vector<StepFunction<T>> extremal_pi_family(const DyadicInterval& J, const AlphaVector& alpha,
                                                const ExponentTuple& exps, int depth) {
    if (exps.size() != alpha.size()) throw DyadicError(ErrorKind::shape_error, "one exponent per slot");
    const auto haar = StepFunction<T>::haar(J, depth);
    const auto one = StepFunction<T>::indicator(J, depth);
    const Rational level(J.level);
    std::vector<StepFunction<T>> fs;
    for (std::size_t j = 0; j < alpha.size(); ++j) {
        // |J|^theta = 2^{-level * theta}
        const Rational inv_p = 1 / exps.p(j);
        if (alpha[j] == 0) {
            fs.push_back(haar * dyadic_power<T>(-level * (Rational(1, 2) - inv_p)));
        } else {
            fs.push_back(one * dyadic_power<T>(level * inv_p));
        }
    }
    return fs;
}

template <Scalar T>
std::vector<StepFunction<T>> extremal_multiplier_family(const DyadicInterval& I, const AlphaVector& alpha,
                                                        int depth) {
    const auto haar = StepFunction<T>::haar(I, depth);
    const auto one = StepFunction<T>::indicator(I, depth);
    std::vector<StepFunction<T>> fs;
    for (std::size_t j = 0; j < alpha.size(); ++j) fs.push_back(alpha[j] == 0 ? haar : one);
    return fs;
}

NecessityCase necessity_case(const AlphaVector& alpha, std::size_t slot) {
    if (slot < 1 || slot > alpha.size()) throw DyadicError(ErrorKind::invalid_slot, "slot outside 1..m");
    return alpha[slot - 1] == 0 && alpha.sigma() == 1 ? NecessityCase::one : NecessityCase::two;
}

template <Scalar T>
std::vector<StepFunction<T>> commutator_necessity_family(NecessityCase which, const DyadicInterval& I0,
                                                         const AlphaVector& alpha, std::size_t slot, int depth) {
    if (necessity_case(alpha, slot) != which) {
        throw DyadicError(ErrorKind::invalid_alpha, "alpha " + alpha.to_string() + " does not fit this case");
    }
    if (which == NecessityCase::two) return extremal_multiplier_family<T>(I0, alpha, depth);
    const auto parent_haar = StepFunction<T>::haar(I0.parent(), depth);
    std::vector<StepFunction<T>> fs(alpha.size(), parent_haar);
    fs[slot - 1] = StepFunction<T>::indicator(I0, depth);
    return fs;
}

std::vector<std::vector<FloatFunction>> extremal_tuples(const OperatorDescriptor& desc, const ExponentTuple& exps,
                                                        int depth) {
    std::vector<std::vector<FloatFunction>> out;
    for (const auto& I : interval_family(depth)) {
        switch (desc.kind) {
            case OperatorKind::pi_paraproduct:
                out.push_back(extremal_pi_family<double>(I, desc.alpha, exps, depth));
                break;
            case OperatorKind::paraproduct:
            case OperatorKind::multilinear_multiplier:
                out.push_back(extremal_multiplier_family<double>(I, desc.alpha, depth));
                break;
            case OperatorKind::commutator: {
                const auto which = necessity_case(desc.alpha, *desc.slot);
                if (which == NecessityCase::one && I.is_universe()) continue;
                out.push_back(commutator_necessity_family<double>(which, I, desc.alpha, *desc.slot, depth));
                break;
            }
        }
    }
    return out;
}

std::optional<double> ratio(const OperatorDescriptor& desc, const ExponentTuple& exps,
                            std::span<const FloatFunction> fs, bool weak) {
    double denominator = 1.0;
    for (std::size_t j = 0; j < fs.size(); ++j) {
        const double n = lp_norm(fs[j], Exponent(exps.p(j)));
        if (n == 0.0) return std::nullopt;
        denominator *= n;
    }
    const auto out = desc.apply(fs);
    const Exponent r(exps.r());
    const double numerator = weak ? weak_lp_quasinorm(out, r) : lp_quasinorm(out, r);
    return numerator / denominator;
}

namespace {

std::mt19937_64 trial_engine(std::uint64_t seed, std::uint64_t trial) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
    return std::mt19937_64(seq);
}

int finest_level(const SamplerSpec& spec, int limit) {
    const int cap = spec.level_cap.value_or(limit);
    return std::clamp(cap, 0, limit);
}

DyadicInterval draw_interval(std::mt19937_64& rng, int min_level, int max_level) {
    std::uniform_int_distribution<int> level(min_level, max_level);
    const int l = level(rng);
    std::uniform_int_distribution<std::uint64_t> pos(0, (std::uint64_t{1} << l) - 1);
    return {l, pos(rng)};
}

}  // namespace

std::vector<FloatFunction> draw_sample(const SamplerSpec& spec, const OperatorDescriptor& desc,
                                       const ExponentTuple& exps, std::uint64_t trial) {
    auto rng = trial_engine(spec.seed, trial);
    const int depth = spec.depth;
    const std::size_t m = desc.arity();
    const std::size_t leaves = std::size_t{1} << depth;
    std::vector<FloatFunction> fs;
    fs.reserve(m);
    switch (spec.family) {
        case SamplerFamily::random_step: {
            std::uniform_real_distribution<double> u(-1.0, 1.0);
            for (std::size_t j = 0; j < m; ++j) {
                std::vector<double> v(leaves);
                for (auto& x : v) x = u(rng);
                fs.emplace_back(depth, std::move(v));
            }
            break;
        }
        case SamplerFamily::rademacher_haar: {
            std::bernoulli_distribution coin(0.5);
            const int cap = finest_level(spec, depth - 1);
            for (std::size_t j = 0; j < m; ++j) {
                HaarSpectrum<double> s(depth);
                s.set_mean(coin(rng) ? 1.0 : -1.0);
                for (const auto& I : interval_family(cap + 1)) s.set_coeff(I, coin(rng) ? 1.0 : -1.0);
                fs.push_back(synthesize(s));
            }
            break;
        }
        case SamplerFamily::indicator: {
            const int cap = finest_level(spec, depth);
            for (std::size_t j = 0; j < m; ++j) {
                const auto J = draw_interval(rng, 0, cap);
                fs.push_back(FloatFunction::indicator(J, depth, dyadic_power<double>(Rational(J.level) / exps.p(j))));
            }
            break;
        }
        case SamplerFamily::extremal: {
            switch (desc.kind) {
                case OperatorKind::pi_paraproduct:
                    fs = extremal_pi_family<double>(draw_interval(rng, 0, depth - 1), desc.alpha, exps, depth);
                    break;
                case OperatorKind::paraproduct:
                case OperatorKind::multilinear_multiplier:
                    fs = extremal_multiplier_family<double>(draw_interval(rng, 0, depth - 1), desc.alpha, depth);
                    break;
                case OperatorKind::commutator: {
                    const auto which = necessity_case(desc.alpha, *desc.slot);
                    const int min_level = which == NecessityCase::one ? 1 : 0;
                    if (min_level > depth - 1) {
                        throw DyadicError(ErrorKind::resolution_too_coarse, "grid too coarse for the family");
                    }
                    fs = commutator_necessity_family<double>(which, draw_interval(rng, min_level, depth - 1),
                                                             desc.alpha, *desc.slot, depth);
                    break;
                }
            }
            break;
        }
    }
    return fs;
}

namespace {

// Runs fn(i) for i in [0, count) on up to `threads` workers.
template <class F>
void parallel_for(std::size_t count, unsigned threads, F&& fn) {
    const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
    if (workers == 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < count;) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) error = std::current_exception();
                    next = count;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

ExperimentReport run(const OperatorDescriptor& desc, const ExponentTuple& exps, const SamplerSpec& sampler,
                     std::size_t trials, const RunOptions& options, bool weak) {
    if (trials == 0) throw DyadicError(ErrorKind::zero_trials, "need at least one trial");
    desc.validate(sampler.depth);
    if (exps.size() != desc.arity()) {
        throw DyadicError(ErrorKind::inconsistent_descriptor, "alpha has " + std::to_string(desc.arity()) +
                                                                  " slots but " + std::to_string(exps.size()) +
                                                                  " exponents were given");
    }
    if (weak && !exps.has_endpoint()) {
        throw DyadicError(ErrorKind::invalid_exponent, "weak-type runs need some p_j = 1");
    }

    const auto extremal = extremal_tuples(desc, exps, sampler.depth);
    const std::size_t total = trials + extremal.size();
    std::vector<std::optional<double>> ratios(total);
    parallel_for(total, options.threads, [&](std::size_t i) {
        if (i < trials) {
            const auto fs = draw_sample(sampler, desc, exps, i);
            ratios[i] = ratio(desc, exps, fs, weak);
        } else {
            ratios[i] = ratio(desc, exps, extremal[i - trials], weak);
        }
    });

    ExperimentReport report;
    report.descriptor = desc;
    report.exponents = exps;
    report.sampler = sampler;
    report.trials = trials;
    report.extremal_trials = extremal.size();
    report.weak_type = weak;
    for (std::size_t i = 0; i < total; ++i) {
        if (!ratios[i]) continue;
        if (!report.best_trial || *ratios[i] > report.best_ratio) {
            report.best_ratio = *ratios[i];
            report.best_trial = i;
        }
        if (i >= trials) report.extremal_lower_bound = std::max(report.extremal_lower_bound.value_or(0.0), *ratios[i]);
    }
    if (desc.b) report.b_norms = BNorms{bmo_norm(*desc.b, 1), bmo_norm(*desc.b, 2), bstar_seminorm(*desc.b)};
    report.trial_ratios = std::move(ratios);
    return report;
}

}  // namespace

ExperimentReport estimate_operator_norm(const OperatorDescriptor& desc, const ExponentTuple& exps,
                                        const SamplerSpec& sampler, std::size_t trials, const RunOptions& options) {
    return run(desc, exps, sampler, trials, options, false);
}

ExperimentReport weak_type_ratio(const OperatorDescriptor& desc, const ExponentTuple& exps,
                                 const SamplerSpec& sampler, std::size_t trials, const RunOptions& options) {
    return run(desc, exps, sampler, trials, options, true);
}

#define DYADIC_INSTANTIATE(T)                                                                                   \
    template std::vector<StepFunction<T>> extremal_pi_family<T>(const DyadicInterval&, const AlphaVector&,      \
                                                                const ExponentTuple&, int);                     \
    template std::vector<StepFunction<T>> extremal_multiplier_family<T>(const DyadicInterval&,                  \
                                                                        const AlphaVector&, int);               \
    template std::vector<StepFunction<T>> commutator_necessity_family<T>(NecessityCase, const DyadicInterval&,  \
                                                                         const AlphaVector&, std::size_t, int);

DYADIC_INSTANTIATE(Exact)
DYADIC_INSTANTIATE(double)

#undef DYADIC_INSTANTIATE

}  // namespace dyadic::lab
