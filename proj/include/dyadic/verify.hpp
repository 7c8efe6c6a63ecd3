#pragma once

#include "dyadic/scalar.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace dyadic::verify {

enum class Suite { decomposition, localized, adjoint, transpose, multiplier_coeff, commutator_constant };

[[nodiscard]] std::string_view to_string(Suite suite) noexcept;
// "decomposition", "localized", "adjoint", "transpose", "multiplier-coeff", "commutator-constant"
[[nodiscard]] Suite parse_suite(std::string_view text);

struct Config {
    Suite suite = Suite::decomposition;
    int m = 2;
    int depth = 4;
    std::size_t trials = 100;
    std::uint64_t seed = 1;
    ScalarMode mode = ScalarMode::rational;
};

struct Result {
    std::size_t trials = 0;
    std::size_t failures = 0;
    std::optional<std::string> first_failure;
};

// Float mode accepts residuals up to kFloatTolerance times the product of the
// inputs' sup norms; rational mode demands exact zeros.
inline constexpr double kFloatTolerance = 1e-9;

// Throws invalid-arity / invalid-depth / zero-trials for unusable configurations.
[[nodiscard]] Result run_suite(const Config& config);

}  // namespace dyadic::verify
