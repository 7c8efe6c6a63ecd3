#include "dyadic/norms.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace dyadic {

Exponent::Exponent(Rational value) : value_(std::move(value)) {
    value_.canonicalize();
    if (sgn(value_) <= 0) throw DyadicError(ErrorKind::invalid_exponent, "exponent must be positive");
}

Exponent Exponent::infinity() {
    Exponent e;
    e.infinite_ = true;
    return e;
}

Exponent Exponent::parse(std::string_view text) {
    if (text == "inf" || text == "infinity" || text == "oo") return infinity();
    try {
        return Exponent(parse_rational(text));
    } catch (const DyadicError& e) {
        if (e.kind() == ErrorKind::invalid_exponent) throw;
        throw DyadicError(ErrorKind::invalid_exponent, "cannot parse exponent '" + std::string(text) + "'");
    }
}

const Rational& Exponent::value() const {
    if (infinite_) throw DyadicError(ErrorKind::invalid_exponent, "infinite exponent has no rational value");
    return value_;
}

double Exponent::to_double() const { return infinite_ ? HUGE_VAL : value_.get_d(); }

std::string Exponent::to_string() const { return infinite_ ? "inf" : value_.get_str(); }

template <Scalar T>
T sup_norm(const StepFunction<T>& f) {
    T best(0);
    for (const auto& v : f.values()) {
        T a = abs_value(v);
        if (a > best) best = std::move(a);
    }
    return best;
}

template <Scalar T>
double lp_quasinorm(const StepFunction<T>& f, const Exponent& p) {
    if (p.is_infinite()) return to_double(sup_norm(f));
    const double pd = p.to_double();
    if (p.value() == 1) return std::fabs(to_double(lp_norm_pow(f, 1)));
    if (p.value() == 2) return std::sqrt(to_double(lp_norm_pow(f, 2)));
    double sum = 0.0;
    for (const auto& v : f.values()) sum += std::pow(std::fabs(to_double(v)), pd);
    return std::pow(std::ldexp(sum, -f.depth()), 1.0 / pd);
}

template <Scalar T>
double lp_norm(const StepFunction<T>& f, const Exponent& p) {
    if (!p.is_infinite() && p.value() < 1) {
        throw DyadicError(ErrorKind::invalid_exponent, "L^p norm needs p >= 1, got " + p.to_string());
    }
    return lp_quasinorm(f, p);
}

template <Scalar T>
T lp_norm_pow(const StepFunction<T>& f, unsigned p) {
    if (p < 1) throw DyadicError(ErrorKind::invalid_exponent, "p must be >= 1");
    T sum(0);
    for (const auto& v : f.values()) {
        const T a = abs_value(v);
        T term = a;
        for (unsigned i = 1; i < p; ++i) term *= a;
        sum += term;
    }
    return ScalarTraits<T>::ldexp(sum, -f.depth());
}

namespace {

// Distinct positive |f| values with the number of leaves where |f| >= value,
// in decreasing order of value.
template <Scalar T>
std::vector<std::pair<T, std::size_t>> distribution(const StepFunction<T>& f) {
    std::map<T, std::size_t, std::greater<>> counts;
    for (const auto& v : f.values()) {
        T a = abs_value(v);
        if (!ScalarTraits<T>::is_zero(a)) ++counts[std::move(a)];
    }
    std::vector<std::pair<T, std::size_t>> out;
    std::size_t cumulative = 0;
    for (auto& [value, count] : counts) {
        cumulative += count;
        out.emplace_back(value, cumulative);
    }
    return out;
}

}  // namespace

template <Scalar T>
double weak_lp_quasinorm(const StepFunction<T>& f, const Exponent& p) {
    if (p.is_infinite()) return to_double(sup_norm(f));
    const double inv_p = 1.0 / p.to_double();
    double best = 0.0;
    for (const auto& [value, leaves] : distribution(f)) {
        const double measure = std::ldexp(static_cast<double>(leaves), -f.depth());
        best = std::max(best, to_double(value) * std::pow(measure, inv_p));
    }
    return best;
}

template <Scalar T>
T weak_lp_quasinorm_pow(const StepFunction<T>& f, unsigned p) {
    if (p < 1) throw DyadicError(ErrorKind::invalid_exponent, "p must be >= 1");
    T best(0);
    for (const auto& [value, leaves] : distribution(f)) {
        T term = value;
        for (unsigned i = 1; i < p; ++i) term *= value;
        term = ScalarTraits<T>::ldexp(term * T(static_cast<long>(leaves)), -f.depth());
        if (term > best) best = std::move(term);
    }
    return best;
}

#define DYADIC_INSTANTIATE(T)                                                       \
    template T sup_norm<T>(const StepFunction<T>&);                                 \
    template double lp_norm<T>(const StepFunction<T>&, const Exponent&);            \
    template double lp_quasinorm<T>(const StepFunction<T>&, const Exponent&);       \
    template T lp_norm_pow<T>(const StepFunction<T>&, unsigned);                    \
    template double weak_lp_quasinorm<T>(const StepFunction<T>&, const Exponent&);  \
    template T weak_lp_quasinorm_pow<T>(const StepFunction<T>&, unsigned);

DYADIC_INSTANTIATE(Exact)
DYADIC_INSTANTIATE(double)

#undef DYADIC_INSTANTIATE

// ExponentTuple

ExponentTuple::ExponentTuple(std::vector<Rational> p) : p_(std::move(p)) {
    if (p_.empty()) throw DyadicError(ErrorKind::invalid_arity, "need at least one exponent");
    Rational reciprocal(0);
    for (auto& pj : p_) {
        pj.canonicalize();
        if (pj < 1) throw DyadicError(ErrorKind::invalid_exponent, "exponent " + pj.get_str() + " < 1");
        reciprocal += 1 / pj;
    }
    r_ = 1 / reciprocal;
}

ExponentTuple ExponentTuple::parse(std::string_view text) {
    std::vector<Rational> p;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        try {
            p.push_back(parse_rational(piece));
        } catch (const DyadicError&) {
            throw DyadicError(ErrorKind::invalid_exponent, "cannot parse exponent '" + std::string(piece) + "'");
        }
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return ExponentTuple(std::move(p));
}

ExponentTuple ExponentTuple::uniform(std::size_t m, const Rational& p) {
    return ExponentTuple(std::vector<Rational>(m, p));
}

bool ExponentTuple::has_endpoint() const {
    return std::any_of(p_.begin(), p_.end(), [](const Rational& q) { return q == 1; });
}

Rational ExponentTuple::chain_reciprocal(std::size_t k) const {
    if (k < 1 || k > p_.size()) throw DyadicError(ErrorKind::invalid_slot, "chain index out of range");
    Rational sum(static_cast<long>(k) - 1);
    for (std::size_t j = k; j < p_.size(); ++j) sum += 1 / p_[j];
    return sum;
}

Rational ExponentTuple::chain_target(std::size_t k) const {
    // q/(q+1) = 1/(1 + 1/q)
    return 1 / (1 + chain_reciprocal(k));
}

std::string ExponentTuple::to_string() const {
    std::ostringstream os;
    for (std::size_t j = 0; j < p_.size(); ++j) os << (j ? "," : "") << p_[j].get_str();
    return os.str();
}

}  // namespace dyadic
