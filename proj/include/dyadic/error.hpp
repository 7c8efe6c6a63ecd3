#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dyadic {

enum class ErrorKind {
    invalid_depth,
    resolution_too_coarse,
    shape_error,
    invalid_exponent,
    root_exceeds_height,
    invalid_arity,
    invalid_localization,
    invalid_alpha,
    invalid_slot,
    no_parent,
    zero_trials,
    inconsistent_descriptor,
    not_representable,
    parse_error,
};

[[nodiscard]] std::string_view to_string(ErrorKind kind) noexcept;

class DyadicError : public std::runtime_error {
public:
    DyadicError(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace dyadic
