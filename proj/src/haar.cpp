#include "dyadic/haar.hpp"

#include <string>

namespace dyadic {

template <Scalar T>
T haar_eval(const DyadicInterval& I, std::uint64_t leaf, int depth) {
    if (I.level >= depth) {
        throw DyadicError(ErrorKind::resolution_too_coarse,
                          "level " + std::to_string(I.level) + " >= depth " + std::to_string(depth));
    }
    if (leaf >= (std::uint64_t{1} << depth)) throw DyadicError(ErrorKind::shape_error, "leaf out of range");
    if (!I.contains_leaf(leaf, depth)) return T(0);
    const T height = ScalarTraits<T>::pow_sqrt2(I.level);
    return I.right().contains_leaf(leaf, depth) ? height : -height;
}

template <Scalar T>
HaarSpectrum<T>::HaarSpectrum(int depth) : depth_(depth) {
    check_depth(depth);
    coeffs_.assign((std::size_t{1} << depth) - 1, T(0));
}

template <Scalar T>
HaarSpectrum<T>::HaarSpectrum(int depth, T mean, std::vector<T> coeffs)
    : depth_(depth), mean_(std::move(mean)), coeffs_(std::move(coeffs)) {
    check_depth(depth);
    if (coeffs_.size() != (std::size_t{1} << depth) - 1) {
        throw DyadicError(ErrorKind::shape_error, "spectrum needs 2^depth - 1 coefficients");
    }
}

template <Scalar T>
const T& HaarSpectrum<T>::coeff(const DyadicInterval& I) const {
    if (I.level >= depth_) {
        throw DyadicError(ErrorKind::resolution_too_coarse, "no coefficient at level " + std::to_string(I.level));
    }
    return coeffs_[I.heap_index()];
}

template <Scalar T>
void HaarSpectrum<T>::set_coeff(const DyadicInterval& I, T value) {
    if (I.level >= depth_) {
        throw DyadicError(ErrorKind::resolution_too_coarse,
                          "coefficient at level " + std::to_string(I.level) + " on a depth-" +
                              std::to_string(depth_) + " spectrum");
    }
    coeffs_[I.heap_index()] = std::move(value);
}

template <Scalar T>
DyadicTable<T>::DyadicTable(const StepFunction<T>& f) : depth_(f.depth()) {
    check_depth(depth_);
    const std::size_t leaves = std::size_t{1} << depth_;
    averages_.resize(2 * leaves - 1);
    coeffs_.resize(leaves - 1);
    for (std::size_t k = 0; k < leaves; ++k) averages_[leaves - 1 + k] = f[k];
    // <f, h_I> = 2^{-level/2} (<f>_{I+} - <f>_{I-}) / 2
    for (int level = depth_ - 1; level >= 0; --level) {
        const T scale = ScalarTraits<T>::pow_sqrt2(-level - 2);
        const std::size_t base = (std::size_t{1} << level) - 1;
        for (std::size_t pos = 0; pos < (std::size_t{1} << level); ++pos) {
            const std::size_t i = base + pos;
            const T& lo = averages_[2 * i + 1];
            const T& hi = averages_[2 * i + 2];
            averages_[i] = ScalarTraits<T>::ldexp(lo + hi, -1);
            coeffs_[i] = (hi - lo) * scale;
        }
    }
}

template <Scalar T>
HaarSpectrum<T> analyze(const StepFunction<T>& f) {
    DyadicTable<T> table(f);
    std::vector<T> coeffs;
    coeffs.reserve(f.size() - 1);
    for (std::size_t i = 0; i + 1 < f.size(); ++i) coeffs.push_back(table.value(i, 0));
    return HaarSpectrum<T>(f.depth(), table.average(DyadicInterval::universe()), std::move(coeffs));
}

template <Scalar T>
StepFunction<T> spread_weights(int depth, std::span<const T> weights, int parity, const T& offset) {
    check_depth(depth);
    const std::size_t leaves = std::size_t{1} << depth;
    if (weights.size() != leaves - 1) throw DyadicError(ErrorKind::shape_error, "weights need 2^depth - 1 entries");
    // acc holds the partial sums for the current level, doubling each step.
    std::vector<T> acc{offset};
    acc.reserve(leaves);
    std::vector<T> next;
    for (int level = 0; level < depth; ++level) {
        const std::size_t base = (std::size_t{1} << level) - 1;
        next.clear();
        next.reserve(acc.size() * 2);
        for (std::size_t pos = 0; pos < acc.size(); ++pos) {
            const T& w = weights[base + pos];
            if (parity % 2 != 0) {
                next.push_back(acc[pos] - w);
                next.push_back(acc[pos] + w);
            } else {
                next.push_back(acc[pos] + w);
                next.push_back(acc[pos] + w);
            }
        }
        acc.swap(next);
    }
    return StepFunction<T>(depth, std::move(acc));
}

template <Scalar T>
StepFunction<T> synthesize(const HaarSpectrum<T>& s) {
    // coeff(I) * h_I contributes +-2^{level/2} coeff(I) on the halves of I.
    std::vector<T> weights(s.coeffs().begin(), s.coeffs().end());
    for (std::size_t i = 0; i < weights.size(); ++i) {
        weights[i] *= ScalarTraits<T>::pow_sqrt2(DyadicInterval::from_heap_index(i).level);
    }
    return spread_weights<T>(s.depth(), weights, 1, s.mean());
}

template <Scalar T>
T integral_over(const StepFunction<T>& f, const DyadicInterval& I) {
    if (I.level > f.depth()) {
        throw DyadicError(ErrorKind::resolution_too_coarse, "interval finer than the grid");
    }
    T sum(0);
    for (auto k = I.first_leaf(f.depth()); k < I.last_leaf(f.depth()); ++k) sum += f[k];
    return ScalarTraits<T>::ldexp(sum, -f.depth());
}

template <Scalar T>
T integral(const StepFunction<T>& f) {
    return integral_over(f, DyadicInterval::universe());
}

template <Scalar T>
T pairing(const StepFunction<T>& f, const DyadicInterval& I, int alpha) {
    if (alpha == 1) {
        // <f>_I = |I|^{-1} int_I f
        return ScalarTraits<T>::ldexp(integral_over(f, I), I.level);
    }
    if (alpha != 0) throw DyadicError(ErrorKind::invalid_alpha, "pairing bit must be 0 or 1");
    if (I.level >= f.depth()) {
        throw DyadicError(ErrorKind::resolution_too_coarse, "<f, h_I> needs level(I) < depth");
    }
    const T diff = integral_over(f, I.right()) - integral_over(f, I.left());
    return diff * ScalarTraits<T>::pow_sqrt2(I.level);
}

template <Scalar T>
T inner_product(const StepFunction<T>& f, const StepFunction<T>& g) {
    f.check_same(g);
    T sum(0);
    for (std::size_t k = 0; k < f.size(); ++k) sum += f[k] * g[k];
    return ScalarTraits<T>::ldexp(sum, -f.depth());
}

template <Scalar T>
StepFunction<T> pointwise_product(std::span<const StepFunction<T>> fs) {
    check_same_depth(fs);
    StepFunction<T> out = fs.front();
    for (std::size_t j = 1; j < fs.size(); ++j) out *= fs[j];
    return out;
}

#define DYADIC_INSTANTIATE(T)                                                                          \
    template T haar_eval<T>(const DyadicInterval&, std::uint64_t, int);                                \
    template class HaarSpectrum<T>;                                                                    \
    template class DyadicTable<T>;                                                                     \
    template HaarSpectrum<T> analyze<T>(const StepFunction<T>&);                                       \
    template StepFunction<T> synthesize<T>(const HaarSpectrum<T>&);                                    \
    template T pairing<T>(const StepFunction<T>&, const DyadicInterval&, int);                         \
    template T inner_product<T>(const StepFunction<T>&, const StepFunction<T>&);                       \
    template StepFunction<T> pointwise_product<T>(std::span<const StepFunction<T>>);                   \
    template T integral<T>(const StepFunction<T>&);                                                    \
    template T integral_over<T>(const StepFunction<T>&, const DyadicInterval&);                        \
    template StepFunction<T> spread_weights<T>(int, std::span<const T>, int, const T&);

DYADIC_INSTANTIATE(Exact)
DYADIC_INSTANTIATE(double)

#undef DYADIC_INSTANTIATE

}  // namespace dyadic
