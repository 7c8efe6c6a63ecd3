#pragma once

#include "dyadic/paraproduct.hpp"

#include <map>
#include <vector>

namespace dyadic {

// A symbol eps = {eps_I}: explicit entries plus a default for every other interval.
template <Scalar T>
class SymbolSequence {
public:
    SymbolSequence() = default;
    explicit SymbolSequence(T default_value) : default_(std::move(default_value)) {}
    SymbolSequence(T default_value, std::map<DyadicInterval, T> entries)
        : default_(std::move(default_value)), entries_(std::move(entries)) {}

    [[nodiscard]] static SymbolSequence constant(T value) { return SymbolSequence(std::move(value)); }

    [[nodiscard]] const T& default_value() const noexcept { return default_; }
    [[nodiscard]] const std::map<DyadicInterval, T>& entries() const noexcept { return entries_; }

    [[nodiscard]] const T& value(const DyadicInterval& I) const {
        auto it = entries_.find(I);
        return it == entries_.end() ? default_ : it->second;
    }
    void set(const DyadicInterval& I, T value) { entries_[I] = std::move(value); }

    // max(|default|, max |eps_I|)
    [[nodiscard]] T sup_norm() const {
        T best = abs_value(default_);
        for (const auto& [I, v] : entries_) {
            T a = abs_value(v);
            if (a > best) best = std::move(a);
        }
        return best;
    }

    // eps_I for every interval of levels 0..depth-1 in heap order.
    [[nodiscard]] std::vector<T> dense(int depth) const {
        std::vector<T> out((std::size_t{1} << depth) - 1, default_);
        for (const auto& [I, v] : entries_)
            if (I.level < depth) out[I.heap_index()] = v;
        return out;
    }

    template <Scalar U, class F>
    [[nodiscard]] SymbolSequence<U> convert(F&& fn) const {
        std::map<DyadicInterval, U> e;
        for (const auto& [I, v] : entries_) e.emplace(I, fn(v));
        return SymbolSequence<U>(fn(default_), std::move(e));
    }

    friend bool operator==(const SymbolSequence&, const SymbolSequence&) = default;

private:
    T default_{1};
    std::map<DyadicInterval, T> entries_;
};

// Sign convention for commutators: [b, T]_i(f) = T(..., b f_i, ...) - b T(f).
inline constexpr int kCommutatorSign = +1;

// T_eps f = sum_I eps_I <f, h_I> h_I. The universe mean of f is dropped.
template <Scalar T>
[[nodiscard]] StepFunction<T> linear_multiplier(const SymbolSequence<T>& eps, const StepFunction<T>& f);

// T_eps^alpha(f) = sum_I eps_I prod_j f_j(I, alpha_j) h_I^{sigma(alpha)}; alpha must lie in U_m.
template <Scalar T>
[[nodiscard]] StepFunction<T> multilinear_multiplier(const SymbolSequence<T>& eps, const AlphaVector& alpha,
                                                     std::span<const StepFunction<T>> fs);

// [b, T_eps^alpha]_i(f) = T_eps^alpha(f_1, ..., b f_i, ..., f_m) - b T_eps^alpha(f), slot i in 1..m.
template <Scalar T>
[[nodiscard]] StepFunction<T> commutator(std::size_t slot, const StepFunction<T>& b, const SymbolSequence<T>& eps,
                                         const AlphaVector& alpha, std::span<const StepFunction<T>> fs);

// [b, T_eps](f) = T_eps(b f) - b T_eps(f)
template <Scalar T>
[[nodiscard]] StepFunction<T> commutator_linear(const StepFunction<T>& b, const SymbolSequence<T>& eps,
                                                const StepFunction<T>& f);

}  // namespace dyadic
