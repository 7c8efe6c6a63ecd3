#include "dyadic/paraproduct.hpp"

#include <algorithm>

namespace dyadic {

AlphaVector::AlphaVector(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    if (bits_.empty()) throw DyadicError(ErrorKind::invalid_arity, "alpha must have at least one entry");
    for (auto b : bits_)
        if (b > 1) throw DyadicError(ErrorKind::invalid_alpha, "alpha entries must be 0 or 1");
}

AlphaVector::AlphaVector(std::initializer_list<int> bits) {
    std::vector<std::uint8_t> v;
    for (int b : bits) {
        if (b != 0 && b != 1) throw DyadicError(ErrorKind::invalid_alpha, "alpha entries must be 0 or 1");
        v.push_back(static_cast<std::uint8_t>(b));
    }
    *this = AlphaVector(std::move(v));
}

AlphaVector AlphaVector::parse(std::string_view text) {
    std::vector<std::uint8_t> v;
    for (char c : text) {
        if (c != '0' && c != '1') {
            throw DyadicError(ErrorKind::invalid_alpha, "alpha must be a string of 0/1, got '" + std::string(text) + "'");
        }
        v.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return AlphaVector(std::move(v));
}

AlphaVector AlphaVector::ones(std::size_t m) { return AlphaVector(std::vector<std::uint8_t>(m, 1)); }

int AlphaVector::sigma() const noexcept {
    return static_cast<int>(std::count(bits_.begin(), bits_.end(), std::uint8_t{0}));
}

AlphaVector AlphaVector::appended(int bit) const {
    auto v = bits_;
    v.push_back(static_cast<std::uint8_t>(bit));
    return AlphaVector(std::move(v));
}

AlphaVector AlphaVector::prepended(int bit) const {
    auto v = bits_;
    v.insert(v.begin(), static_cast<std::uint8_t>(bit));
    return AlphaVector(std::move(v));
}

AlphaVector AlphaVector::permuted(std::span<const std::size_t> perm) const {
    if (perm.size() != bits_.size()) throw DyadicError(ErrorKind::shape_error, "permutation size mismatch");
    std::vector<std::uint8_t> v;
    v.reserve(perm.size());
    for (auto k : perm) v.push_back(bits_.at(k));
    return AlphaVector(std::move(v));
}

std::string AlphaVector::to_string() const {
    std::string s;
    for (auto b : bits_) s += static_cast<char>('0' + b);
    return s;
}

std::vector<AlphaVector> enumerate_um(int m) {
    if (m < 1) throw DyadicError(ErrorKind::invalid_arity, "U_m needs m >= 1");
    std::vector<AlphaVector> current{AlphaVector{0}};
    for (int k = 2; k <= m; ++k) {
        std::vector<AlphaVector> next;
        next.reserve(2 * current.size() + 1);
        for (const auto& a : current) next.push_back(a.appended(1));
        for (const auto& a : current) next.push_back(a.appended(0));
        next.push_back(AlphaVector::ones(static_cast<std::size_t>(k - 1)).appended(0));
        current = std::move(next);
    }
    return current;
}

template <Scalar T>
StepFunction<T> haar_power(const DyadicInterval& I, int sigma, int depth) {
    if (sigma < 0) throw DyadicError(ErrorKind::invalid_exponent, "negative Haar power");
    if (I.level >= depth) {
        throw DyadicError(ErrorKind::resolution_too_coarse, "h_I needs depth > level(I)");
    }
    if (sigma == 0) return StepFunction<T>::constant(depth, T(1));
    if (sigma % 2 == 0) {
        return StepFunction<T>::indicator(I, depth, ScalarTraits<T>::pow_sqrt2(static_cast<long>(I.level) * sigma));
    }
    return StepFunction<T>::haar(I, depth) * ScalarTraits<T>::pow_sqrt2(static_cast<long>(I.level) * (sigma - 1));
}

namespace detail {

template <Scalar T>
std::vector<DyadicTable<T>> make_tables(std::span<const StepFunction<T>> fs) {
    check_same_depth(fs);
    std::vector<DyadicTable<T>> tables;
    tables.reserve(fs.size());
    for (const auto& f : fs) tables.emplace_back(f);
    return tables;
}

template <Scalar T>
StepFunction<T> dyadic_sum(const AlphaVector& alpha, std::span<const DyadicTable<T>> tables,
                           std::span<const T> prefactor, int extra_power) {
    if (alpha.size() != tables.size()) {
        throw DyadicError(ErrorKind::shape_error, "alpha has " + std::to_string(alpha.size()) + " entries for " +
                                                      std::to_string(tables.size()) + " functions");
    }
    const int depth = tables.front().depth();
    const std::size_t count = (std::size_t{1} << depth) - 1;
    if (!prefactor.empty() && prefactor.size() != count) {
        throw DyadicError(ErrorKind::shape_error, "prefactor needs one entry per interval");
    }
    const int power = alpha.sigma() + extra_power;
    std::vector<T> weights;
    weights.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        T w = prefactor.empty() ? T(1) : prefactor[i];
        for (std::size_t j = 0; j < tables.size() && !ScalarTraits<T>::is_zero(w); ++j) {
            w *= tables[j].value(i, alpha[j]);
        }
        weights.push_back(std::move(w));
    }
    if (power == 0) {
        // h_I^0 is the constant 1 on the whole universe.
        T total(0);
        for (const auto& w : weights) total += w;
        return StepFunction<T>::constant(depth, total);
    }
    // |h_I|^power = 2^{level * power / 2} on I
    for (std::size_t i = 0; i < count; ++i) {
        if (ScalarTraits<T>::is_zero(weights[i])) continue;
        weights[i] *= ScalarTraits<T>::pow_sqrt2(static_cast<long>(DyadicInterval::from_heap_index(i).level) * power);
    }
    return spread_weights<T>(depth, weights, power % 2, T(0));
}

}  // namespace detail

template <Scalar T>
StepFunction<T> paraproduct(const AlphaVector& alpha, std::span<const StepFunction<T>> fs) {
    const auto tables = detail::make_tables(fs);
    return detail::dyadic_sum<T>(alpha, tables, {}, 0);
}

template <Scalar T>
StepFunction<T> pi_paraproduct(const AlphaVector& alpha, const StepFunction<T>& b,
                               std::span<const StepFunction<T>> fs) {
    const auto tables = detail::make_tables(fs);
    b.check_same(fs.front());
    const auto spectrum = analyze(b);
    return detail::dyadic_sum<T>(alpha, tables, spectrum.coeffs(), 1);
}

template <Scalar T>
StepFunction<T> product_decomposition_residual(std::span<const StepFunction<T>> fs) {
    if (fs.size() < 2) throw DyadicError(ErrorKind::invalid_arity, "product decomposition needs m >= 2");
    const auto tables = detail::make_tables(fs);
    StepFunction<T> residual = pointwise_product(fs);
    for (const auto& alpha : enumerate_um(static_cast<int>(fs.size()))) {
        residual -= detail::dyadic_sum<T>(alpha, tables, {}, 0);
    }
    T root(1);
    for (const auto& t : tables) root *= t.average(DyadicInterval::universe());
    return residual - StepFunction<T>::constant(fs.front().depth(), root);
}

template <Scalar T>
StepFunction<T> localized_average_residual(const DyadicInterval& J, std::span<const StepFunction<T>> fs) {
    const auto tables = detail::make_tables(fs);
    const int depth = fs.front().depth();
    if (J.is_universe()) {
        throw DyadicError(ErrorKind::invalid_localization, "J must be a proper subinterval of the universe");
    }
    if (J.level > depth) throw DyadicError(ErrorKind::resolution_too_coarse, "J finer than the grid");

    T value(1);
    T root(1);
    for (const auto& t : tables) {
        value *= t.average(J);
        root *= t.average(DyadicInterval::universe());
    }
    value -= root;
    const std::uint64_t leaf = J.first_leaf(depth);
    for (const auto& alpha : enumerate_um(static_cast<int>(fs.size()))) {
        const int sigma = alpha.sigma();
        for (DyadicInterval I = J.parent();; I = I.parent()) {
            T term(1);
            for (std::size_t j = 0; j < tables.size(); ++j) term *= tables[j].value(I, alpha[j]);
            // h_I^sigma is constant on J because J is strictly inside I.
            T h = haar_eval<T>(I, leaf, depth);
            T h_power(1);
            for (int s = 0; s < sigma; ++s) h_power *= h;
            value -= term * h_power;
            if (I.is_universe()) break;
        }
    }
    return StepFunction<T>::indicator(J, depth, value);
}

template <Scalar T>
StepFunction<T> multiplication_decomposition_residual(const StepFunction<T>& b, const StepFunction<T>& f) {
    const std::vector<StepFunction<T>> pair{b, f};
    const auto tables = detail::make_tables<T>(pair);
    StepFunction<T> residual = b * f;
    residual -= detail::dyadic_sum<T>(AlphaVector{0, 0}, tables, {}, 0);
    residual -= detail::dyadic_sum<T>(AlphaVector{0, 1}, tables, {}, 0);
    residual -= detail::dyadic_sum<T>(AlphaVector{1, 0}, tables, {}, 0);
    const T root = tables[0].average(DyadicInterval::universe()) * tables[1].average(DyadicInterval::universe());
    return residual - StepFunction<T>::constant(b.depth(), root);
}

template <Scalar T>
T adjoint_residual(const StepFunction<T>& f1, const StepFunction<T>& f2, const StepFunction<T>& g) {
    const std::vector<StepFunction<T>> lhs_args{f1, f2};
    const std::vector<StepFunction<T>> rhs_args{f1, g};
    const auto pi = paraproduct<T>(AlphaVector{0, 1}, lhs_args);
    const auto adjoint = paraproduct<T>(AlphaVector{0, 0}, rhs_args);
    return inner_product(pi, g) - inner_product(f2, adjoint);
}

template <Scalar T>
T transpose_residual(const AlphaVector& alpha, const StepFunction<T>& b, const StepFunction<T>& g,
                     std::span<const StepFunction<T>> fs) {
    if (alpha.size() != fs.size()) throw DyadicError(ErrorKind::shape_error, "alpha/function count mismatch");
    if (alpha.sigma() != 1 || alpha[0] != 0) {
        throw DyadicError(ErrorKind::invalid_alpha, "transpose identity needs alpha = (0,1,...,1), got " +
                                                        alpha.to_string());
    }
    std::vector<StepFunction<T>> swapped(fs.begin(), fs.end());
    swapped.front() = g;
    const auto lhs = inner_product(pi_paraproduct<T>(alpha, b, fs), g);
    const auto rhs = inner_product(pi_paraproduct<T>(AlphaVector::ones(fs.size()), b, swapped), fs.front());
    return lhs - rhs;
}

#define DYADIC_INSTANTIATE(T)                                                                                  \
    template StepFunction<T> haar_power<T>(const DyadicInterval&, int, int);                                   \
    template StepFunction<T> paraproduct<T>(const AlphaVector&, std::span<const StepFunction<T>>);             \
    template StepFunction<T> pi_paraproduct<T>(const AlphaVector&, const StepFunction<T>&,                     \
                                               std::span<const StepFunction<T>>);                              \
    template StepFunction<T> product_decomposition_residual<T>(std::span<const StepFunction<T>>);              \
    template StepFunction<T> localized_average_residual<T>(const DyadicInterval&,                              \
                                                           std::span<const StepFunction<T>>);                  \
    template StepFunction<T> multiplication_decomposition_residual<T>(const StepFunction<T>&,                  \
                                                                      const StepFunction<T>&);                 \
    template T adjoint_residual<T>(const StepFunction<T>&, const StepFunction<T>&, const StepFunction<T>&);    \
    template T transpose_residual<T>(const AlphaVector&, const StepFunction<T>&, const StepFunction<T>&,       \
                                     std::span<const StepFunction<T>>);                                        \
    template StepFunction<T> detail::dyadic_sum<T>(const AlphaVector&, std::span<const DyadicTable<T>>,        \
                                                   std::span<const T>, int);                                   \
    template std::vector<DyadicTable<T>> detail::make_tables<T>(std::span<const StepFunction<T>>);

DYADIC_INSTANTIATE(Exact)
DYADIC_INSTANTIATE(double)

#undef DYADIC_INSTANTIATE

}  // namespace dyadic
