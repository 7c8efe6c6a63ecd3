#pragma once

#include "dyadic/exact.hpp"

#include <cmath>
#include <concepts>
#include <string_view>

namespace dyadic {

enum class ScalarMode { rational, float64 };

[[nodiscard]] constexpr std::string_view to_string(ScalarMode mode) noexcept {
    return mode == ScalarMode::rational ? "rational" : "float64";
}

template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
    static constexpr ScalarMode mode = ScalarMode::float64;
    static constexpr bool exact = false;
    static double pow_sqrt2(long k) { return std::exp2(0.5 * static_cast<double>(k)); }
    static double ldexp(double x, long k) { return std::ldexp(x, static_cast<int>(k)); }
    static double from_rational(const Rational& q) { return q.get_d(); }
    static double to_double(double x) { return x; }
    static double abs(double x) { return std::fabs(x); }
    static bool is_zero(double x) { return x == 0.0; }
};

template <>
struct ScalarTraits<Exact> {
    static constexpr ScalarMode mode = ScalarMode::rational;
    static constexpr bool exact = true;
    static Exact pow_sqrt2(long k) { return Exact::pow_sqrt2(k); }
    static Exact ldexp(const Exact& x, long k) { return x.ldexp(k); }
    static Exact from_rational(const Rational& q) { return Exact(q); }
    static double to_double(const Exact& x) { return x.to_double(); }
    static Exact abs(const Exact& x) { return dyadic::abs(x); }
    static bool is_zero(const Exact& x) { return x.is_zero(); }
};

template <class T>
concept Scalar = requires { ScalarTraits<T>::exact; };

template <Scalar T>
[[nodiscard]] double to_double(const T& x) {
    return ScalarTraits<T>::to_double(x);
}

template <Scalar T>
[[nodiscard]] T abs_value(const T& x) {
    return ScalarTraits<T>::abs(x);
}

// 2^{e} for a rational exponent e. Exact mode only represents exponents
// that are integer multiples of 1/2.
template <Scalar T>
[[nodiscard]] T dyadic_power(const Rational& exponent);

}  // namespace dyadic
