#pragma once

#include <concepts>
#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace dyadic {

using Rational = mpq_class;

// Element a + b*sqrt(2) of the quadratic field Q(sqrt2).
//
// Haar coefficients of rational step functions live in this field (odd
// levels carry a factor 2^{1/2}), and every product that appears in the
// paraproduct sums lands back in it, so all identities can be checked with
// zero tolerance.
class Exact {
public:
    Exact() = default;
    template <std::integral I>
    Exact(I v) : a_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
    Exact(double) = delete;
    Exact(Rational a) : a_(std::move(a)) { a_.canonicalize(); }  // NOLINT
    Exact(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
        a_.canonicalize();
        b_.canonicalize();
    }

    [[nodiscard]] static Exact sqrt2() { return Exact(Rational(0), Rational(1)); }
    // 2^{k/2} for any integer k.
    [[nodiscard]] static Exact pow_sqrt2(long k);

    [[nodiscard]] const Rational& rational_part() const noexcept { return a_; }
    [[nodiscard]] const Rational& sqrt2_part() const noexcept { return b_; }
    [[nodiscard]] bool is_rational() const noexcept { return sgn(b_) == 0; }
    [[nodiscard]] bool is_zero() const noexcept { return sgn(a_) == 0 && sgn(b_) == 0; }
    [[nodiscard]] int sign() const;
    [[nodiscard]] double to_double() const;

    // x * 2^k, exact.
    [[nodiscard]] Exact ldexp(long k) const;

    // Multiplicative inverse; throws on zero.
    [[nodiscard]] Exact inverse() const;

    Exact& operator+=(const Exact& o);
    Exact& operator-=(const Exact& o);
    Exact& operator*=(const Exact& o);
    Exact& operator/=(const Exact& o) { return *this *= o.inverse(); }

    friend Exact operator+(Exact x, const Exact& y) { return x += y; }
    friend Exact operator-(Exact x, const Exact& y) { return x -= y; }
    friend Exact operator*(Exact x, const Exact& y) { return x *= y; }
    friend Exact operator/(Exact x, const Exact& y) { return x /= y; }
    friend Exact operator-(Exact x) {
        x.a_ = -x.a_;
        x.b_ = -x.b_;
        return x;
    }

    friend bool operator==(const Exact& x, const Exact& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
    friend std::strong_ordering operator<=>(const Exact& x, const Exact& y) {
        const int s = (x - y).sign();
        return s < 0 ? std::strong_ordering::less
               : s > 0 ? std::strong_ordering::greater
                       : std::strong_ordering::equal;
    }

    // "p/q" when rational, otherwise "p/q+r/s*sqrt2" (or "r/s*sqrt2").
    [[nodiscard]] std::string to_string() const;
    [[nodiscard]] static Exact parse(std::string_view text);

private:
    Rational a_{0};
    Rational b_{0};
};

[[nodiscard]] inline Exact abs(const Exact& x) { return x.sign() < 0 ? -x : x; }

std::ostream& operator<<(std::ostream& os, const Exact& x);

// Parses "p/q", an integer, or a finite decimal such as "-1.25".
[[nodiscard]] Rational parse_rational(std::string_view text);

}  // namespace dyadic
