#pragma once

#include "dyadic/interval.hpp"
#include "dyadic/step_function.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace dyadic {

// Value of h_I on a leaf of a depth-N grid: 0 off I, -2^{level/2} on the left
// half, +2^{level/2} on the right half.
template <Scalar T>
[[nodiscard]] T haar_eval(const DyadicInterval& I, std::uint64_t leaf, int depth);

// Universe mean plus one Haar coefficient per interval of levels 0..depth-1,
// stored densely in heap order.
template <Scalar T>
class HaarSpectrum {
public:
    HaarSpectrum() = default;
    explicit HaarSpectrum(int depth);
    HaarSpectrum(int depth, T mean, std::vector<T> coeffs);

    [[nodiscard]] int depth() const noexcept { return depth_; }
    [[nodiscard]] const T& mean() const noexcept { return mean_; }
    [[nodiscard]] const T& coeff(const DyadicInterval& I) const;
    [[nodiscard]] std::span<const T> coeffs() const noexcept { return coeffs_; }

    void set_mean(T mean) { mean_ = std::move(mean); }
    // Throws resolution-too-coarse for level(I) >= depth.
    void set_coeff(const DyadicInterval& I, T value);

    friend bool operator==(const HaarSpectrum&, const HaarSpectrum&) = default;

private:
    int depth_ = 0;
    T mean_{0};
    std::vector<T> coeffs_;
};

// Averages <f>_I for every interval of levels 0..depth and coefficients
// <f, h_I> for levels 0..depth-1, computed bottom-up in O(2^depth).
template <Scalar T>
class DyadicTable {
public:
    explicit DyadicTable(const StepFunction<T>& f);

    [[nodiscard]] int depth() const noexcept { return depth_; }
    [[nodiscard]] const T& average(const DyadicInterval& I) const { return averages_[I.heap_index()]; }
    [[nodiscard]] const T& coefficient(const DyadicInterval& I) const { return coeffs_[I.heap_index()]; }
    // f(I, 0) = <f, h_I>,  f(I, 1) = <f>_I
    [[nodiscard]] const T& value(const DyadicInterval& I, int bit) const {
        return bit == 0 ? coefficient(I) : average(I);
    }
    [[nodiscard]] const T& value(std::size_t heap_index, int bit) const {
        return bit == 0 ? coeffs_[heap_index] : averages_[heap_index];
    }

private:
    int depth_;
    std::vector<T> averages_;
    std::vector<T> coeffs_;
};

template <Scalar T>
[[nodiscard]] HaarSpectrum<T> analyze(const StepFunction<T>& f);

template <Scalar T>
[[nodiscard]] StepFunction<T> synthesize(const HaarSpectrum<T>& s);

// alpha = 0: <f, h_I>;  alpha = 1: <f>_I. Computed directly from the leaf
// values covered by I.
template <Scalar T>
[[nodiscard]] T pairing(const StepFunction<T>& f, const DyadicInterval& I, int alpha);

// Integral of f*g over U.
template <Scalar T>
[[nodiscard]] T inner_product(const StepFunction<T>& f, const StepFunction<T>& g);

template <Scalar T>
[[nodiscard]] StepFunction<T> pointwise_product(std::span<const StepFunction<T>> fs);

template <Scalar T>
[[nodiscard]] T integral(const StepFunction<T>& f);

// Sum over the leaves of I of f, times the leaf width (the integral of f over I).
template <Scalar T>
[[nodiscard]] T integral_over(const StepFunction<T>& f, const DyadicInterval& I);

// Builds a function from per-interval weights w_I (heap order, levels
// 0..depth-1): value(x) = offset + sum_{I containing x} s_I(x)^parity * w_I,
// where s_I = -1 on the left half of I and +1 on the right half.
template <Scalar T>
[[nodiscard]] StepFunction<T> spread_weights(int depth, std::span<const T> weights, int parity,
                                             const T& offset);

}  // namespace dyadic
