#pragma once

#include "dyadic/multiplier.hpp"
#include "dyadic/norms.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace dyadic::lab {

enum class OperatorKind { paraproduct, pi_paraproduct, multilinear_multiplier, commutator };

[[nodiscard]] std::string_view to_string(OperatorKind kind) noexcept;
// Accepts the long names and the short forms para, pi, mult.
[[nodiscard]] OperatorKind parse_operator_kind(std::string_view text);

// One of the operators under study, in float mode.
struct OperatorDescriptor {
    OperatorKind kind = OperatorKind::paraproduct;
    AlphaVector alpha;
    std::optional<std::size_t> slot;             // commutator slot, 1-based
    std::optional<SymbolSequence<double>> symbol;  // multiplier and commutator
    std::optional<FloatFunction> b;              // pi paraproduct and commutator

    [[nodiscard]] std::size_t arity() const noexcept { return alpha.size(); }

    // Throws inconsistent-descriptor when a field required by the kind is
    // missing or b lives on another grid, invalid-alpha when alpha is not
    // admissible (every kind except pi_paraproduct needs sigma(alpha) >= 1),
    // invalid-slot for a commutator slot outside 1..m.
    void validate(int depth) const;

    [[nodiscard]] FloatFunction apply(std::span<const FloatFunction> fs) const;
};

enum class SamplerFamily { random_step, rademacher_haar, indicator, extremal };

[[nodiscard]] std::string_view to_string(SamplerFamily family) noexcept;
[[nodiscard]] SamplerFamily parse_sampler_family(std::string_view text);

struct SamplerSpec {
    SamplerFamily family = SamplerFamily::random_step;
    int depth = 6;
    std::optional<int> level_cap;  // finest level used by rademacher-haar and indicator
    std::uint64_t seed = 1;
};

// The input tuple of trial `trial`. Depends only on (spec, descriptor,
// exponents, trial).
[[nodiscard]] std::vector<FloatFunction> draw_sample(const SamplerSpec& spec, const OperatorDescriptor& desc,
                                                     const ExponentTuple& exps, std::uint64_t trial);

// f_j = |J|^{1/2 - 1/p_j} h_J where alpha_j = 0, f_j = |J|^{-1/p_j} 1_J where alpha_j = 1.
template <Scalar T>
[[nodiscard]] std::vector<StepFunction<T>> extremal_pi_family(const DyadicInterval& J, const AlphaVector& alpha,
                                                              const ExponentTuple& exps, int depth);

// f_j = h_I where alpha_j = 0, f_j = 1_I where alpha_j = 1.
template <Scalar T>
[[nodiscard]] std::vector<StepFunction<T>> extremal_multiplier_family(const DyadicInterval& I,
                                                                      const AlphaVector& alpha, int depth);

enum class NecessityCase { one, two };

// Case one when alpha_slot = 0 and sigma(alpha) = 1, case two otherwise.
[[nodiscard]] NecessityCase necessity_case(const AlphaVector& alpha, std::size_t slot);

// Case one: f_slot = 1_{I0}, every other f_j = h of the parent of I0.
// Case two: f_j = h_{I0} where alpha_j = 0, 1_{I0} where alpha_j = 1.
// Throws no-parent for case one at the universe and invalid-alpha when alpha
// does not match the case.
template <Scalar T>
[[nodiscard]] std::vector<StepFunction<T>> commutator_necessity_family(NecessityCase which, const DyadicInterval& I0,
                                                                       const AlphaVector& alpha, std::size_t slot,
                                                                       int depth);

// The extremal tuples matching the descriptor, one per interval of the grid
// (the root is skipped where the family needs a parent).
[[nodiscard]] std::vector<std::vector<FloatFunction>> extremal_tuples(const OperatorDescriptor& desc,
                                                                      const ExponentTuple& exps, int depth);

// ||Op(f)||_r (or the weak quasinorm) over prod_j ||f_j||_{p_j}; nullopt when some ||f_j|| = 0.
[[nodiscard]] std::optional<double> ratio(const OperatorDescriptor& desc, const ExponentTuple& exps,
                                          std::span<const FloatFunction> fs, bool weak);

struct BNorms {
    double bmo1 = 0;
    double bmo2 = 0;
    double bstar = 0;
};

struct ExperimentReport {
    OperatorDescriptor descriptor;
    ExponentTuple exponents;
    SamplerSpec sampler;
    std::size_t trials = 0;           // random trials requested
    std::size_t extremal_trials = 0;  // extremal tuples appended after them
    double best_ratio = 0;
    std::optional<std::size_t> best_trial;
    std::optional<double> extremal_lower_bound;
    bool weak_type = false;
    std::optional<BNorms> b_norms;
    // One entry per trial, random trials first; nullopt marks a skipped trial.
    std::vector<std::optional<double>> trial_ratios;
};

struct RunOptions {
    unsigned threads = 1;
};

[[nodiscard]] ExperimentReport estimate_operator_norm(const OperatorDescriptor& desc, const ExponentTuple& exps,
                                                      const SamplerSpec& sampler, std::size_t trials,
                                                      const RunOptions& options = {});

// Same search with the weak L^{r,infinity} quasinorm in the numerator; needs some p_j = 1.
[[nodiscard]] ExperimentReport weak_type_ratio(const OperatorDescriptor& desc, const ExponentTuple& exps,
                                               const SamplerSpec& sampler, std::size_t trials,
                                               const RunOptions& options = {});

}  // namespace dyadic::lab
