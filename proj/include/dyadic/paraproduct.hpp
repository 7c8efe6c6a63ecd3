#pragma once

#include "dyadic/haar.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dyadic {

// alpha in {0,1}^m. Slot j reads <f_j, h_I> when alpha_j = 0 and <f_j>_I when
// alpha_j = 1.
class AlphaVector {
public:
    AlphaVector() = default;
    explicit AlphaVector(std::vector<std::uint8_t> bits);
    AlphaVector(std::initializer_list<int> bits);

    // "011" -> (0,1,1)
    [[nodiscard]] static AlphaVector parse(std::string_view text);
    [[nodiscard]] static AlphaVector ones(std::size_t m);

    [[nodiscard]] std::size_t size() const noexcept { return bits_.size(); }
    [[nodiscard]] int operator[](std::size_t j) const { return bits_[j]; }
    [[nodiscard]] const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }

    // Number of zero entries.
    [[nodiscard]] int sigma() const noexcept;
    // alpha != (1,...,1)
    [[nodiscard]] bool in_um() const noexcept { return sigma() > 0; }

    [[nodiscard]] AlphaVector appended(int bit) const;
    [[nodiscard]] AlphaVector prepended(int bit) const;
    // result[k] = alpha[perm[k]]
    [[nodiscard]] AlphaVector permuted(std::span<const std::size_t> perm) const;

    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const AlphaVector&, const AlphaVector&) = default;

private:
    std::vector<std::uint8_t> bits_;
};

// U_m in recursion order: {(a,1) : a in U_{m-1}}, then {(a,0) : a in U_{m-1}},
// then (1,...,1,0); U_1 = {(0)}.
[[nodiscard]] std::vector<AlphaVector> enumerate_um(int m);

// h_I^sigma: the constant 1 for sigma = 0, |I|^{-sigma/2} 1_I for even sigma,
// |I|^{-(sigma-1)/2} h_I for odd sigma.
template <Scalar T>
[[nodiscard]] StepFunction<T> haar_power(const DyadicInterval& I, int sigma, int depth);

// P^alpha(f) = sum_I prod_j f_j(I, alpha_j) h_I^{sigma(alpha)}
template <Scalar T>
[[nodiscard]] StepFunction<T> paraproduct(const AlphaVector& alpha, std::span<const StepFunction<T>> fs);

// pi_b^alpha(f) = sum_I <b, h_I> prod_j f_j(I, alpha_j) h_I^{1 + sigma(alpha)}
template <Scalar T>
[[nodiscard]] StepFunction<T> pi_paraproduct(const AlphaVector& alpha, const StepFunction<T>& b,
                                             std::span<const StepFunction<T>> fs);

// On the finite universe every f carries a mean term <f>_U, so the product
// splits as
//   prod_j f_j = sum_{alpha in U_m} P^alpha(f) + prod_j <f_j>_U.
// Returns the left side minus the right side; identically zero.
template <Scalar T>
[[nodiscard]] StepFunction<T> product_decomposition_residual(std::span<const StepFunction<T>> fs);

// (prod_j <f_j>_J) 1_J - sum_alpha sum_{J < I <= U} P_I^alpha(f) 1_J - (prod_j <f_j>_U) 1_J
template <Scalar T>
[[nodiscard]] StepFunction<T> localized_average_residual(const DyadicInterval& J,
                                                         std::span<const StepFunction<T>> fs);

// b f - P^(0,0)(b,f) - P^(0,1)(b,f) - P^(1,0)(b,f) - <b>_U <f>_U
template <Scalar T>
[[nodiscard]] StepFunction<T> multiplication_decomposition_residual(const StepFunction<T>& b,
                                                                    const StepFunction<T>& f);

// <pi_{f1}(f2), g> - <f2, P^(0,0)(f1, g)>
template <Scalar T>
[[nodiscard]] T adjoint_residual(const StepFunction<T>& f1, const StepFunction<T>& f2, const StepFunction<T>& g);

// <pi_b^(0,1,...,1)(f), g> - <pi_b^(1,...,1)(g, f_2, ..., f_m), f_1>.
// alpha must be (0,1,...,1) with m = fs.size().
template <Scalar T>
[[nodiscard]] T transpose_residual(const AlphaVector& alpha, const StepFunction<T>& b, const StepFunction<T>& g,
                                   std::span<const StepFunction<T>> fs);

namespace detail {

// sum_I prefactor_I prod_j tables_j.value(I, alpha_j) h_I^{sigma(alpha) + extra_power}.
// An empty prefactor means 1 for every interval.
template <Scalar T>
[[nodiscard]] StepFunction<T> dyadic_sum(const AlphaVector& alpha, std::span<const DyadicTable<T>> tables,
                                         std::span<const T> prefactor, int extra_power);

template <Scalar T>
[[nodiscard]] std::vector<DyadicTable<T>> make_tables(std::span<const StepFunction<T>> fs);

}  // namespace detail

}  // namespace dyadic
