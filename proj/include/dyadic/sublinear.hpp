#pragma once

#include "dyadic/haar.hpp"
#include "dyadic/norms.hpp"

#include <vector>

namespace dyadic {

// M f(x) = max over the depth+1 dyadic intervals containing x of <|f|>_I.
template <Scalar T>
[[nodiscard]] StepFunction<T> maximal(const StepFunction<T>& f);

// (S f)^2(x) = sum_{I containing x} <f, h_I>^2 / |I|; exact in rational mode.
template <Scalar T>
[[nodiscard]] StepFunction<T> square_function_squared(const StepFunction<T>& f);

template <Scalar T>
[[nodiscard]] StepFunction<double> square_function(const StepFunction<T>& f);

// sup_I <|b - <b>_I|>_I over all intervals of levels 0..depth.
template <Scalar T>
[[nodiscard]] T bmo1(const StepFunction<T>& b);

// sup_I <|b - <b>_I|^2>_I, i.e. the squared BMO_2 norm.
template <Scalar T>
[[nodiscard]] T bmo2_squared(const StepFunction<T>& b);

// r must be 1 or 2.
template <Scalar T>
[[nodiscard]] double bmo_norm(const StepFunction<T>& b, const Rational& r);

// sup_I |I|^{-1} sum_{J subset I} <b, h_J>^2, the Haar-side form of bmo2_squared.
template <Scalar T>
[[nodiscard]] T bmo2_via_haar_squared(const StepFunction<T>& b);

template <Scalar T>
[[nodiscard]] double bmo2_via_haar(const StepFunction<T>& b);

// sup_I <b, h_I>^2 / |I|
template <Scalar T>
[[nodiscard]] T bstar_squared(const StepFunction<T>& b);

template <Scalar T>
[[nodiscard]] double bstar_seminorm(const StepFunction<T>& b);

template <Scalar T>
struct CZPart {
    DyadicInterval interval;
    StepFunction<T> bad;  // (f - <f>_I) 1_I
};

template <Scalar T>
struct CZDecomposition {
    T height{0};
    StepFunction<T> good;
    std::vector<CZPart<T>> parts;  // ordered by position
};

// Dyadic Calderon-Zygmund decomposition of f at height lambda: the selected
// intervals are the maximal I with <|f|>_I > lambda. Throws root-exceeds-height
// if <|f|>_U > lambda, since the universe has no parent to bound the averages.
template <Scalar T>
[[nodiscard]] CZDecomposition<T> cz_decompose(const StepFunction<T>& f, const T& height);

}  // namespace dyadic
