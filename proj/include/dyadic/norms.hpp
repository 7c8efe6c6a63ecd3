#pragma once

#include "dyadic/step_function.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace dyadic {

// A Lebesgue exponent: a positive rational or infinity.
class Exponent {
public:
    Exponent() = default;
    Exponent(Rational value);  // NOLINT(google-explicit-constructor)
    Exponent(long value) : Exponent(Rational(value)) {}  // NOLINT(google-explicit-constructor)

    [[nodiscard]] static Exponent infinity();
    // "inf", "p/q", an integer, or a finite decimal.
    [[nodiscard]] static Exponent parse(std::string_view text);

    [[nodiscard]] bool is_infinite() const noexcept { return infinite_; }
    [[nodiscard]] const Rational& value() const;
    [[nodiscard]] double to_double() const;
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const Exponent& a, const Exponent& b) {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
    }

private:
    Rational value_{1};
    bool infinite_ = false;
};

// max |f|
template <Scalar T>
[[nodiscard]] T sup_norm(const StepFunction<T>& f);

// (sum |f|^p 2^-depth)^{1/p}, or max |f| for p = inf. Throws invalid-exponent for p < 1.
template <Scalar T>
[[nodiscard]] double lp_norm(const StepFunction<T>& f, const Exponent& p);

// Same formula for any 0 < p (a quasinorm below 1).
template <Scalar T>
[[nodiscard]] double lp_quasinorm(const StepFunction<T>& f, const Exponent& p);

// ||f||_p^p for integer p >= 1, exact in rational mode.
template <Scalar T>
[[nodiscard]] T lp_norm_pow(const StepFunction<T>& f, unsigned p);

// sup_t t |{|f| > t}|^{1/p}, evaluated as the max over the distinct values
// v = |f(leaf)| > 0 of v * |{|f| >= v}|^{1/p}. Accepts any p > 0.
template <Scalar T>
[[nodiscard]] double weak_lp_quasinorm(const StepFunction<T>& f, const Exponent& p);

// The p-th power of the weak quasinorm for integer p >= 1, exact in rational mode.
template <Scalar T>
[[nodiscard]] T weak_lp_quasinorm_pow(const StepFunction<T>& f, unsigned p);

// Exponents p_1..p_m in [1, inf) with 1/r = sum 1/p_j.
class ExponentTuple {
public:
    ExponentTuple() = default;
    explicit ExponentTuple(std::vector<Rational> p);
    // Comma-separated list such as "2,2" or "3/2,3".
    [[nodiscard]] static ExponentTuple parse(std::string_view text);
    // m copies of p.
    [[nodiscard]] static ExponentTuple uniform(std::size_t m, const Rational& p);

    [[nodiscard]] std::size_t size() const noexcept { return p_.size(); }
    [[nodiscard]] const std::vector<Rational>& p() const noexcept { return p_; }
    [[nodiscard]] const Rational& p(std::size_t j) const { return p_.at(j); }
    [[nodiscard]] const Rational& r() const noexcept { return r_; }
    [[nodiscard]] bool has_endpoint() const;

    // 1/q_k = (k - 1) + sum_{j > k} 1/p_j for k = 1..m (zero when m = 1).
    [[nodiscard]] Rational chain_reciprocal(std::size_t k) const;
    // The weak target exponent q_k / (q_k + 1) after lowering p_1..p_k to 1.
    [[nodiscard]] Rational chain_target(std::size_t k) const;

    [[nodiscard]] std::string to_string() const;

private:
    std::vector<Rational> p_;
    Rational r_{0};
};

}  // namespace dyadic
