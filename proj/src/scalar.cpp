#include "dyadic/scalar.hpp"

#include "dyadic/error.hpp"

namespace dyadic {

template <>
double dyadic_power<double>(const Rational& exponent) {
    return std::exp2(exponent.get_d());
}

template <>
Exact dyadic_power<Exact>(const Rational& exponent) {
    const Rational twice = 2 * exponent;
    if (twice.get_den() != 1 || !twice.get_num().fits_slong_p()) {
        throw DyadicError(ErrorKind::not_representable,
                          "2^(" + exponent.get_str() + ") is not a power of sqrt2");
    }
    return Exact::pow_sqrt2(twice.get_num().get_si());
}

}  // namespace dyadic
