#include "dyadic/sublinear.hpp"

#include <cmath>

namespace dyadic {

namespace {

template <Scalar T>
StepFunction<T> absolute(const StepFunction<T>& f) {
    return f.map([](const T& v) { return abs_value(v); });
}

// Calls fn(I) for every interval of levels 0..depth.
template <class F>
void for_each_interval(int depth, F&& fn) {
    for (int level = 0; level <= depth; ++level) {
        for (std::uint64_t pos = 0; pos < (std::uint64_t{1} << level); ++pos) fn(DyadicInterval{level, pos});
    }
}

}  // namespace

template <Scalar T>
StepFunction<T> maximal(const StepFunction<T>& f) {
    const DyadicTable<T> table(absolute(f));
    std::vector<T> out;
    out.reserve(f.size());
    for (std::uint64_t leaf = 0; leaf < f.size(); ++leaf) {
        T best(0);
        for (const auto& I : containing_chain(leaf, f.depth())) {
            if (table.average(I) > best) best = table.average(I);
        }
        out.push_back(std::move(best));
    }
    return StepFunction<T>(f.depth(), std::move(out));
}

template <Scalar T>
StepFunction<T> square_function_squared(const StepFunction<T>& f) {
    const DyadicTable<T> table(f);
    std::vector<T> weights(f.size() - 1);
    for (std::size_t i = 0; i < weights.size(); ++i) {
        const auto I = DyadicInterval::from_heap_index(i);
        const T& c = table.coefficient(I);
        weights[i] = ScalarTraits<T>::ldexp(c * c, I.level);
    }
    return spread_weights<T>(f.depth(), weights, 0, T(0));
}

template <Scalar T>
StepFunction<double> square_function(const StepFunction<T>& f) {
    return square_function_squared(f).to_float().map([](double v) { return std::sqrt(v); });
}

template <Scalar T>
T bmo1(const StepFunction<T>& b) {
    const DyadicTable<T> table(b);
    T best(0);
    for_each_interval(b.depth(), [&](const DyadicInterval& I) {
        const T& mean = table.average(I);
        T sum(0);
        for (auto k = I.first_leaf(b.depth()); k < I.last_leaf(b.depth()); ++k) sum += abs_value(b[k] - mean);
        T osc = ScalarTraits<T>::ldexp(sum, I.level - b.depth());
        if (osc > best) best = std::move(osc);
    });
    return best;
}

template <Scalar T>
T bmo2_squared(const StepFunction<T>& b) {
    const DyadicTable<T> table(b);
    T best(0);
    for_each_interval(b.depth(), [&](const DyadicInterval& I) {
        const T& mean = table.average(I);
        T sum(0);
        for (auto k = I.first_leaf(b.depth()); k < I.last_leaf(b.depth()); ++k) {
            const T d = b[k] - mean;
            sum += d * d;
        }
        T osc = ScalarTraits<T>::ldexp(sum, I.level - b.depth());
        if (osc > best) best = std::move(osc);
    });
    return best;
}

template <Scalar T>
double bmo_norm(const StepFunction<T>& b, const Rational& r) {
    if (r == 1) return to_double(bmo1(b));
    if (r == 2) return std::sqrt(to_double(bmo2_squared(b)));
    throw DyadicError(ErrorKind::invalid_exponent, "BMO_r supported for r in {1, 2}, got " + r.get_str());
}

template <Scalar T>
T bmo2_via_haar_squared(const StepFunction<T>& b) {
    const DyadicTable<T> table(b);
    const std::size_t count = b.size() - 1;
    // subtree[i] = sum of squared coefficients of intervals inside interval i
    std::vector<T> subtree(count, T(0));
    T best(0);
    for (std::size_t i = count; i-- > 0;) {
        const auto I = DyadicInterval::from_heap_index(i);
        const T& c = table.coefficient(I);
        T total = c * c;
        if (I.level + 1 < b.depth()) total += subtree[2 * i + 1] + subtree[2 * i + 2];
        T scaled = ScalarTraits<T>::ldexp(total, I.level);
        if (scaled > best) best = std::move(scaled);
        subtree[i] = std::move(total);
    }
    return best;
}

template <Scalar T>
double bmo2_via_haar(const StepFunction<T>& b) {
    return std::sqrt(to_double(bmo2_via_haar_squared(b)));
}

template <Scalar T>
T bstar_squared(const StepFunction<T>& b) {
    const DyadicTable<T> table(b);
    T best(0);
    for (std::size_t i = 0; i + 1 < b.size(); ++i) {
        const auto I = DyadicInterval::from_heap_index(i);
        const T& c = table.coefficient(I);
        T v = ScalarTraits<T>::ldexp(c * c, I.level);
        if (v > best) best = std::move(v);
    }
    return best;
}

template <Scalar T>
double bstar_seminorm(const StepFunction<T>& b) {
    return std::sqrt(to_double(bstar_squared(b)));
}

template <Scalar T>
CZDecomposition<T> cz_decompose(const StepFunction<T>& f, const T& height) {
    if (!(height > T(0))) throw DyadicError(ErrorKind::invalid_exponent, "CZ height must be positive");
    const DyadicTable<T> abs_table(absolute(f));
    if (abs_table.average(DyadicInterval::universe()) > height) {
        throw DyadicError(ErrorKind::root_exceeds_height, "<|f|>_U exceeds the height");
    }
    const DyadicTable<T> table(f);
    CZDecomposition<T> out;
    out.height = height;
    std::vector<T> good(f.values().begin(), f.values().end());

    // Depth-first, left to right, so parts come out ordered by position.
    std::vector<DyadicInterval> stack{DyadicInterval::universe()};
    while (!stack.empty()) {
        const DyadicInterval I = stack.back();
        stack.pop_back();
        if (abs_table.average(I) > height) {
            const T& mean = table.average(I);
            std::vector<T> bad(f.size(), T(0));
            for (auto k = I.first_leaf(f.depth()); k < I.last_leaf(f.depth()); ++k) {
                bad[k] = f[k] - mean;
                good[k] = mean;
            }
            out.parts.push_back({I, StepFunction<T>(f.depth(), std::move(bad))});
        } else if (I.level < f.depth()) {
            stack.push_back(I.right());
            stack.push_back(I.left());
        }
    }
    out.good = StepFunction<T>(f.depth(), std::move(good));
    return out;
}

#define DYADIC_INSTANTIATE(T)                                                           \
    template StepFunction<T> maximal<T>(const StepFunction<T>&);                        \
    template StepFunction<T> square_function_squared<T>(const StepFunction<T>&);        \
    template StepFunction<double> square_function<T>(const StepFunction<T>&);           \
    template T bmo1<T>(const StepFunction<T>&);                                         \
    template T bmo2_squared<T>(const StepFunction<T>&);                                 \
    template double bmo_norm<T>(const StepFunction<T>&, const Rational&);               \
    template T bmo2_via_haar_squared<T>(const StepFunction<T>&);                        \
    template double bmo2_via_haar<T>(const StepFunction<T>&);                           \
    template T bstar_squared<T>(const StepFunction<T>&);                                \
    template double bstar_seminorm<T>(const StepFunction<T>&);                          \
    template CZDecomposition<T> cz_decompose<T>(const StepFunction<T>&, const T&);

DYADIC_INSTANTIATE(Exact)
DYADIC_INSTANTIATE(double)

#undef DYADIC_INSTANTIATE

}  // namespace dyadic
