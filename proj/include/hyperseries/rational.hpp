#pragma once

#include <climits>
#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "hyperseries/errors.hpp"

namespace hyperseries {

/// Exact fraction with arbitrary-precision numerator and denominator.
///
/// Always canonical: the denominator is positive, the fraction is fully
/// reduced and zero is 0/1.
class Rational {
public:
    Rational() = default;
    Rational(int v) : v_(static_cast<long>(v)) {}
    Rational(long v) : v_(v) {}
    Rational(long long v) : v_(mpz_from(v)) {}

    Rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0) {
            throw division_by_zero();
        }
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    Rational(long long num, long long den) : Rational(mpz_from(num), mpz_from(den)) {}

    explicit Rational(const mpz_class& v) : v_(v) {}

    /// Parses "p", "-p" or "p/q" in base 10.
    static Rational from_string(std::string_view text) {
        const auto slash = text.find('/');
        try {
            if (slash == std::string_view::npos) {
                return Rational(mpz_class(std::string(text), 10));
            }
            return Rational(mpz_class(std::string(text.substr(0, slash)), 10),
                            mpz_class(std::string(text.substr(slash + 1)), 10));
        } catch (const std::invalid_argument&) {
            throw error("malformed rational '" + std::string(text) + "'");
        }
    }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sign() == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }

    /// Converts an integral value to int64; throws when it is not integral or does not fit.
    std::int64_t to_int64() const {
        if (!is_integer() || !v_.get_num().fits_slong_p()) {
            throw error("value " + str() + " is not a machine integer");
        }
        return v_.get_num().get_si();
    }

    double to_double() const { return v_.get_d(); }

    Rational abs() const {
        Rational r;
        r.v_ = ::abs(v_);
        return r;
    }

    Rational inverse() const {
        if (is_zero()) {
            throw division_by_zero();
        }
        Rational r;
        mpq_inv(r.v_.get_mpq_t(), v_.get_mpq_t());
        return r;
    }

    /// Integer power; negative exponents invert first.
    Rational pow(std::int64_t e) const {
        if (e < 0) {
            return inverse().pow(-e);
        }
        Rational r;
        mpz_pow_ui(r.v_.get_num_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
        mpz_pow_ui(r.v_.get_den_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
        return r;
    }

    /// "p" for integers, "p/q" otherwise.
    std::string str() const { return v_.get_str(10); }

    Rational operator-() const {
        Rational r;
        r.v_ = -v_;
        return r;
    }

    Rational& operator+=(const Rational& o) {
        v_ += o.v_;
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        v_ -= o.v_;
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        v_ *= o.v_;
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) {
            throw division_by_zero();
        }
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

    std::size_t hash() const {
        return std::hash<std::string>{}(v_.get_str(16));
    }

private:
    static mpz_class mpz_from(long long v) {
        if (v >= LONG_MIN && v <= LONG_MAX) {
            return mpz_class(static_cast<long>(v));
        }
        return mpz_class(std::to_string(v), 10);
    }

    mpq_class v_;
};

inline mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

} // namespace hyperseries

template <>
struct std::hash<hyperseries::Rational> {
    std::size_t operator()(const hyperseries::Rational& r) const { return r.hash(); }
};
