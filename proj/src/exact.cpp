#include "dyadic/exact.hpp"

#include "dyadic/error.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

namespace dyadic {

Exact Exact::pow_sqrt2(long k) {
    // 2^{k/2} = 2^{floor(k/2)} * sqrt2^{k mod 2}
    const long half = k >= 0 ? k / 2 : -((-k + 1) / 2);
    const bool odd = (k - 2 * half) != 0;
    Rational scale(1);
    if (half >= 0) {
        mpz_mul_2exp(scale.get_num_mpz_t(), scale.get_num_mpz_t(), static_cast<mp_bitcnt_t>(half));
    } else {
        mpz_mul_2exp(scale.get_den_mpz_t(), scale.get_den_mpz_t(), static_cast<mp_bitcnt_t>(-half));
    }
    return odd ? Exact(Rational(0), scale) : Exact(scale);
}

int Exact::sign() const {
    const int sa = sgn(a_);
    const int sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: compare a^2 with 2 b^2. Equality is impossible for
    // nonzero rationals because sqrt2 is irrational.
    const Rational lhs = a_ * a_;
    const Rational rhs = 2 * b_ * b_;
    return lhs > rhs ? sa : sb;
}

double Exact::to_double() const {
    return a_.get_d() + b_.get_d() * std::sqrt(2.0);
}

Exact Exact::ldexp(long k) const {
    Exact out(*this);
    if (k >= 0) {
        mpq_mul_2exp(out.a_.get_mpq_t(), a_.get_mpq_t(), static_cast<mp_bitcnt_t>(k));
        mpq_mul_2exp(out.b_.get_mpq_t(), b_.get_mpq_t(), static_cast<mp_bitcnt_t>(k));
    } else {
        mpq_div_2exp(out.a_.get_mpq_t(), a_.get_mpq_t(), static_cast<mp_bitcnt_t>(-k));
        mpq_div_2exp(out.b_.get_mpq_t(), b_.get_mpq_t(), static_cast<mp_bitcnt_t>(-k));
    }
    return out;
}

Exact Exact::inverse() const {
    // (a + b r)^{-1} = (a - b r) / (a^2 - 2 b^2)
    const Rational norm = a_ * a_ - 2 * b_ * b_;
    if (sgn(norm) == 0) throw std::domain_error("Exact::inverse: division by zero");
    return Exact(Rational(a_ / norm), Rational(-b_ / norm));
}

Exact& Exact::operator+=(const Exact& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

Exact& Exact::operator-=(const Exact& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

Exact& Exact::operator*=(const Exact& o) {
    if (sgn(b_) == 0 && sgn(o.b_) == 0) {
        a_ *= o.a_;
        return *this;
    }
    Rational a = a_ * o.a_ + 2 * b_ * o.b_;
    Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
}

std::string Exact::to_string() const {
    if (sgn(b_) == 0) return a_.get_str();
    std::string out;
    if (sgn(a_) != 0) {
        out = a_.get_str();
        if (sgn(b_) > 0) out += '+';
    }
    out += b_.get_str();
    out += "*sqrt2";
    return out;
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    text = trim(text);
    if (text.empty()) throw DyadicError(ErrorKind::parse_error, "empty rational");
    const auto dot = text.find('.');
    if (dot != std::string_view::npos) {
        std::string digits(text.substr(0, dot));
        std::string frac(text.substr(dot + 1));
        if (frac.empty() || frac.find_first_not_of("0123456789") != std::string::npos) {
            throw DyadicError(ErrorKind::parse_error, "bad decimal '" + std::string(text) + "'");
        }
        if (digits.empty() || digits == "-" || digits == "+") digits += '0';
        Rational value;
        if (value.set_str(digits + frac + "/1" + std::string(frac.size(), '0'), 10) != 0) {
            throw DyadicError(ErrorKind::parse_error, "bad decimal '" + std::string(text) + "'");
        }
        value.canonicalize();
        return value;
    }
    std::string s(text);
    if (!s.empty() && s.front() == '+') s.erase(0, 1);
    Rational value;
    if (s.empty() || value.set_str(s, 10) != 0) {
        throw DyadicError(ErrorKind::parse_error, "bad rational '" + std::string(text) + "'");
    }
    if (sgn(value.get_den()) == 0) throw DyadicError(ErrorKind::parse_error, "zero denominator");
    value.canonicalize();
    return value;
}

Exact Exact::parse(std::string_view text) {
    text = trim(text);
    constexpr std::string_view suffix = "*sqrt2";
    if (text.size() < suffix.size() || text.substr(text.size() - suffix.size()) != suffix) {
        return Exact(parse_rational(text));
    }
    const std::string_view body = text.substr(0, text.size() - suffix.size());
    // The sqrt2 coefficient starts at the last sign that is not the first character.
    std::size_t split = std::string_view::npos;
    for (std::size_t i = body.size(); i-- > 1;) {
        if (body[i] == '+' || body[i] == '-') {
            split = i;
            break;
        }
    }
    if (split == std::string_view::npos) return Exact(Rational(0), parse_rational(body));
    return Exact(parse_rational(body.substr(0, split)), parse_rational(body.substr(split)));
}

std::ostream& operator<<(std::ostream& os, const Exact& x) { return os << x.to_string(); }

}  // namespace dyadic
