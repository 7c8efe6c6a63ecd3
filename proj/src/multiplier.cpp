#include "dyadic/multiplier.hpp"

namespace dyadic {

template <Scalar T>
StepFunction<T> linear_multiplier(const SymbolSequence<T>& eps, const StepFunction<T>& f) {
    const DyadicTable<T> table(f);
    auto weights = eps.dense(f.depth());
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (ScalarTraits<T>::is_zero(weights[i])) continue;
        const auto I = DyadicInterval::from_heap_index(i);
        weights[i] *= table.coefficient(I) * ScalarTraits<T>::pow_sqrt2(I.level);
    }
    return spread_weights<T>(f.depth(), weights, 1, T(0));
}

template <Scalar T>
StepFunction<T> multilinear_multiplier(const SymbolSequence<T>& eps, const AlphaVector& alpha,
                                       std::span<const StepFunction<T>> fs) {
    if (!alpha.in_um()) {
        throw DyadicError(ErrorKind::invalid_alpha, "multipliers need alpha in U_m, got " + alpha.to_string());
    }
    const auto tables = detail::make_tables(fs);
    const auto symbol = eps.dense(fs.front().depth());
    return detail::dyadic_sum<T>(alpha, tables, symbol, 0);
}

template <Scalar T>
StepFunction<T> commutator(std::size_t slot, const StepFunction<T>& b, const SymbolSequence<T>& eps,
                           const AlphaVector& alpha, std::span<const StepFunction<T>> fs) {
    if (slot < 1 || slot > fs.size()) {
        throw DyadicError(ErrorKind::invalid_slot, "slot " + std::to_string(slot) + " outside 1.." +
                                                       std::to_string(fs.size()));
    }
    check_same_depth(fs);
    b.check_same(fs.front());
    std::vector<StepFunction<T>> inner(fs.begin(), fs.end());
    inner[slot - 1] *= b;
    auto out = multilinear_multiplier<T>(eps, alpha, inner);
    out -= b * multilinear_multiplier<T>(eps, alpha, fs);
    if constexpr (kCommutatorSign < 0) out = -out;
    return out;
}

template <Scalar T>
StepFunction<T> commutator_linear(const StepFunction<T>& b, const SymbolSequence<T>& eps, const StepFunction<T>& f) {
    b.check_same(f);
    auto out = linear_multiplier(eps, b * f) - b * linear_multiplier(eps, f);
    if constexpr (kCommutatorSign < 0) out = -out;
    return out;
}

#define DYADIC_INSTANTIATE(T)                                                                                  \
    template StepFunction<T> linear_multiplier<T>(const SymbolSequence<T>&, const StepFunction<T>&);           \
    template StepFunction<T> multilinear_multiplier<T>(const SymbolSequence<T>&, const AlphaVector&,           \
                                                       std::span<const StepFunction<T>>);                      \
    template StepFunction<T> commutator<T>(std::size_t, const StepFunction<T>&, const SymbolSequence<T>&,      \
                                           const AlphaVector&, std::span<const StepFunction<T>>);              \
    template StepFunction<T> commutator_linear<T>(const StepFunction<T>&, const SymbolSequence<T>&,            \
                                                  const StepFunction<T>&);

DYADIC_INSTANTIATE(Exact)
DYADIC_INSTANTIATE(double)

#undef DYADIC_INSTANTIATE

}  // namespace dyadic
