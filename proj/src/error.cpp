#include "dyadic/error.hpp"

namespace dyadic {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::invalid_depth: return "invalid-depth";
        case ErrorKind::resolution_too_coarse: return "resolution-too-coarse";
        case ErrorKind::shape_error: return "shape-error";
        case ErrorKind::invalid_exponent: return "invalid-exponent";
        case ErrorKind::root_exceeds_height: return "root-exceeds-height";
        case ErrorKind::invalid_arity: return "invalid-arity";
        case ErrorKind::invalid_localization: return "invalid-localization";
        case ErrorKind::invalid_alpha: return "invalid-alpha";
        case ErrorKind::invalid_slot: return "invalid-slot";
        case ErrorKind::no_parent: return "no-parent";
        case ErrorKind::zero_trials: return "zero-trials";
        case ErrorKind::inconsistent_descriptor: return "inconsistent-descriptor";
        case ErrorKind::not_representable: return "not-representable";
        case ErrorKind::parse_error: return "parse-error";
    }
    return "unknown";
}

}  // namespace dyadic
