#pragma once

#include "dyadic/error.hpp"
#include "dyadic/interval.hpp"
#include "dyadic/scalar.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace dyadic {

// A function on U = [0,1) that is constant on each of the 2^depth leaves
// [k 2^-depth, (k+1) 2^-depth).
template <Scalar T>
class StepFunction {
public:
    using value_type = T;

    StepFunction() = default;

    explicit StepFunction(int depth) : depth_(depth) {
        check_depth(depth);
        values_.assign(std::size_t{1} << depth, T(0));
    }

    StepFunction(int depth, std::vector<T> values) : depth_(depth), values_(std::move(values)) {
        check_depth(depth);
        if (values_.size() != (std::size_t{1} << depth)) {
            throw DyadicError(ErrorKind::shape_error, "expected " + std::to_string(std::size_t{1} << depth) +
                                                          " values, got " + std::to_string(values_.size()));
        }
    }

    // Depth is inferred from the number of values, which must be a power of two >= 2.
    static StepFunction from_values(std::vector<T> values) {
        const std::size_t n = values.size();
        if (n < 2 || (n & (n - 1)) != 0) {
            throw DyadicError(ErrorKind::shape_error, "value count must be a power of two >= 2");
        }
        int depth = 0;
        while ((std::size_t{1} << depth) < n) ++depth;
        return StepFunction(depth, std::move(values));
    }

    static StepFunction constant(int depth, const T& c) {
        check_depth(depth);
        return StepFunction(depth, std::vector<T>(std::size_t{1} << depth, c));
    }

    // height * 1_I
    static StepFunction indicator(const DyadicInterval& I, int depth, const T& height = T(1)) {
        StepFunction f(depth);
        if (I.level > depth) {
            throw DyadicError(ErrorKind::resolution_too_coarse,
                              "interval " + I.to_string() + " finer than depth " + std::to_string(depth));
        }
        for (auto k = I.first_leaf(depth); k < I.last_leaf(depth); ++k) f.values_[k] = height;
        return f;
    }

    // h_I = |I|^{-1/2} (1_{I+} - 1_{I-}); negative on the left half.
    static StepFunction haar(const DyadicInterval& I, int depth) {
        if (I.level >= depth) {
            throw DyadicError(ErrorKind::resolution_too_coarse,
                              "h_I needs depth > level(I) = " + std::to_string(I.level));
        }
        StepFunction f(depth);
        const T height = ScalarTraits<T>::pow_sqrt2(I.level);
        const auto first = I.first_leaf(depth);
        const auto mid = I.left().last_leaf(depth);
        const auto last = I.last_leaf(depth);
        for (auto k = first; k < mid; ++k) f.values_[k] = -height;
        for (auto k = mid; k < last; ++k) f.values_[k] = height;
        return f;
    }

    [[nodiscard]] int depth() const noexcept { return depth_; }
    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
    [[nodiscard]] bool empty() const noexcept { return values_.empty(); }
    [[nodiscard]] const T& operator[](std::size_t leaf) const { return values_[leaf]; }
    [[nodiscard]] std::span<const T> values() const noexcept { return values_; }
    [[nodiscard]] static constexpr ScalarMode mode() noexcept { return ScalarTraits<T>::mode; }

    [[nodiscard]] bool is_zero() const {
        for (const auto& v : values_)
            if (!ScalarTraits<T>::is_zero(v)) return false;
        return true;
    }

    template <class F>
    [[nodiscard]] StepFunction map(F&& fn) const {
        std::vector<T> out;
        out.reserve(values_.size());
        for (const auto& v : values_) out.push_back(fn(v));
        return StepFunction(depth_, std::move(out));
    }

    [[nodiscard]] StepFunction<double> to_float() const {
        std::vector<double> out;
        out.reserve(values_.size());
        for (const auto& v : values_) out.push_back(ScalarTraits<T>::to_double(v));
        return StepFunction<double>(depth_, std::move(out));
    }

    StepFunction& operator+=(const StepFunction& o) {
        check_same(o);
        for (std::size_t k = 0; k < values_.size(); ++k) values_[k] += o.values_[k];
        return *this;
    }
    StepFunction& operator-=(const StepFunction& o) {
        check_same(o);
        for (std::size_t k = 0; k < values_.size(); ++k) values_[k] -= o.values_[k];
        return *this;
    }
    // Leafwise product.
    StepFunction& operator*=(const StepFunction& o) {
        check_same(o);
        for (std::size_t k = 0; k < values_.size(); ++k) values_[k] *= o.values_[k];
        return *this;
    }
    StepFunction& operator*=(const T& c) {
        for (auto& v : values_) v *= c;
        return *this;
    }

    friend StepFunction operator+(StepFunction f, const StepFunction& g) { return f += g; }
    friend StepFunction operator-(StepFunction f, const StepFunction& g) { return f -= g; }
    friend StepFunction operator*(StepFunction f, const StepFunction& g) { return f *= g; }
    friend StepFunction operator*(StepFunction f, const T& c) { return f *= c; }
    friend StepFunction operator*(const T& c, StepFunction f) { return f *= c; }
    friend StepFunction operator-(StepFunction f) {
        for (auto& v : f.values_) v = -v;
        return f;
    }

    friend bool operator==(const StepFunction& a, const StepFunction& b) {
        return a.depth_ == b.depth_ && a.values_ == b.values_;
    }

    void check_same(const StepFunction& o) const {
        if (o.depth_ != depth_) {
            throw DyadicError(ErrorKind::shape_error, "depth mismatch: " + std::to_string(depth_) + " vs " +
                                                          std::to_string(o.depth_));
        }
    }

private:
    int depth_ = 0;
    std::vector<T> values_;
};

using ExactFunction = StepFunction<Exact>;
using FloatFunction = StepFunction<double>;

// Same function on a finer grid (each leaf split into 2^(depth - f.depth()) leaves).
template <Scalar T>
[[nodiscard]] StepFunction<T> refine(const StepFunction<T>& f, int depth) {
    if (depth < f.depth()) throw DyadicError(ErrorKind::shape_error, "refine cannot coarsen");
    const int shift = depth - f.depth();
    std::vector<T> out;
    out.reserve(std::size_t{1} << depth);
    for (std::size_t k = 0; k < (std::size_t{1} << depth); ++k) out.push_back(f[k >> shift]);
    return StepFunction<T>(depth, std::move(out));
}

template <Scalar T>
void check_same_depth(std::span<const StepFunction<T>> fs) {
    if (fs.empty()) throw DyadicError(ErrorKind::shape_error, "empty function tuple");
    for (const auto& f : fs) fs.front().check_same(f);
}

}  // namespace dyadic
