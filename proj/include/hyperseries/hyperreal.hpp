#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hyperseries/errors.hpp"
#include "hyperseries/polynomial.hpp"
#include "hyperseries/rational.hpp"

namespace hyperseries {

/// One term coeff * w^power * base^w, where w is the infinite unit
/// (the count of the positive integers).
struct HyperTerm {
    Rational coeff;
    std::int64_t power = 0;
    Rational base{1};

    /// Asymptotic dominance: base first, then power.
    friend std::strong_ordering dominance(const HyperTerm& a, const HyperTerm& b) {
        if (auto c = a.base <=> b.base; c != 0) {
            return c;
        }
        return a.power <=> b.power;
    }

    bool is_infinite() const { return base > Rational(1) || (base.is_one() && power > 0); }

    friend bool operator==(const HyperTerm&, const HyperTerm&) = default;
};

/// Finite formal sum of HyperTerms, kept canonical: terms strictly descending
/// by dominance, no zero coefficients, the empty sum is zero.
class Hyperreal {
public:
    Hyperreal() = default;
    Hyperreal(const Rational& c) {
        if (!c.is_zero()) {
            terms_.push_back({c, 0, Rational(1)});
        }
    }
    Hyperreal(int c) : Hyperreal(Rational(c)) {}

    /// Canonicalizes an arbitrary multiset of terms.
    static Hyperreal from_terms(std::vector<HyperTerm> terms) {
        for (const auto& t : terms) {
            if (t.base.sign() <= 0) {
                throw error("hyperreal term base must be positive, got " + t.base.str());
            }
        }
        std::sort(terms.begin(), terms.end(),
                  [](const HyperTerm& a, const HyperTerm& b) { return dominance(a, b) > 0; });
        Hyperreal out;
        for (auto& t : terms) {
            if (!out.terms_.empty() && dominance(out.terms_.back(), t) == 0) {
                out.terms_.back().coeff += t.coeff;
            } else {
                out.terms_.push_back(std::move(t));
            }
            if (out.terms_.back().coeff.is_zero()) {
                out.terms_.pop_back();
            }
        }
        return out;
    }

    static Hyperreal monomial(const Rational& coeff, std::int64_t power, const Rational& base = Rational(1)) {
        return from_terms({{coeff, power, base}});
    }

    static Hyperreal omega() { return monomial(Rational(1), 1); }

    const std::vector<HyperTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }

    /// Sign of the value: sign of the dominant coefficient.
    int sign() const { return terms_.empty() ? 0 : terms_.front().coeff.sign(); }

    Hyperreal operator-() const {
        Hyperreal r = *this;
        for (auto& t : r.terms_) {
            t.coeff = -t.coeff;
        }
        return r;
    }

    Hyperreal& operator+=(const Hyperreal& o) {
        std::vector<HyperTerm> merged;
        merged.reserve(terms_.size() + o.terms_.size());
        auto a = terms_.begin();
        auto b = o.terms_.begin();
        while (a != terms_.end() || b != o.terms_.end()) {
            if (b == o.terms_.end() || (a != terms_.end() && dominance(*a, *b) > 0)) {
                merged.push_back(*a++);
            } else if (a == terms_.end() || dominance(*a, *b) < 0) {
                merged.push_back(*b++);
            } else {
                HyperTerm t = *a++;
                t.coeff += (b++)->coeff;
                if (!t.coeff.is_zero()) {
                    merged.push_back(std::move(t));
                }
            }
        }
        terms_ = std::move(merged);
        return *this;
    }

    Hyperreal& operator-=(const Hyperreal& o) { return *this += -o; }

    friend Hyperreal operator+(Hyperreal a, const Hyperreal& b) { return a += b; }
    friend Hyperreal operator-(Hyperreal a, const Hyperreal& b) { return a -= b; }

    friend Hyperreal operator*(const Hyperreal& a, const Hyperreal& b) {
        std::vector<HyperTerm> products;
        products.reserve(a.terms_.size() * b.terms_.size());
        for (const auto& x : a.terms_) {
            for (const auto& y : b.terms_) {
                products.push_back({x.coeff * y.coeff, x.power + y.power, x.base * y.base});
            }
        }
        return from_terms(std::move(products));
    }

    Hyperreal& operator*=(const Hyperreal& o) { return *this = *this * o; }

    /// Total order: the dominant term of the difference decides.
    friend std::strong_ordering operator<=>(const Hyperreal& a, const Hyperreal& b) {
        return (a - b).sign() <=> 0;
    }
    friend bool operator==(const Hyperreal&, const Hyperreal&) = default;

private:
    std::vector<HyperTerm> terms_;
};

inline std::strong_ordering hyper_compare(const Hyperreal& x, const Hyperreal& y) { return x <=> y; }

/// The dominant term, coefficient included; zero for zero.
inline Hyperreal principal_value(const Hyperreal& x) {
    if (x.is_zero()) {
        return {};
    }
    const auto& t = x.terms().front();
    return Hyperreal::monomial(t.coeff, t.power, t.base);
}

/// x and y lie in the same halo: they share a principal value.
inline bool same_halo(const Hyperreal& x, const Hyperreal& y) {
    return principal_value(x) == principal_value(y);
}

/// Finite part of a value with no infinite terms; nullopt when some term is infinite.
/// Infinitesimal terms (base < 1, or base 1 with negative power) are discarded.
inline std::optional<Rational> standard_part(const Hyperreal& x) {
    Rational finite;
    for (const auto& t : x.terms()) {
        if (t.is_infinite()) {
            return std::nullopt;
        }
        if (t.base.is_one() && t.power == 0) {
            finite = t.coeff;
        }
    }
    return finite;
}

/// principal_value(x) / principal_value(y) as a monomial quotient.
inline Hyperreal ratio_principal(const Hyperreal& x, const Hyperreal& y) {
    if (y.is_zero()) {
        throw division_by_zero();
    }
    if (x.is_zero()) {
        return {};
    }
    const auto& n = x.terms().front();
    const auto& d = y.terms().front();
    return Hyperreal::monomial(n.coeff / d.coeff, n.power - d.power, n.base / d.base);
}

/// p(w + c) expanded into base-1 terms.
inline Hyperreal eval_poly_at_shifted_omega(const Polynomial& p, std::int64_t c) {
    const Polynomial q = p.shifted(Rational(c));
    std::vector<HyperTerm> terms;
    for (std::size_t k = 0; k < q.coefficients().size(); ++k) {
        terms.push_back({q.coefficient(k), static_cast<std::int64_t>(k), Rational(1)});
    }
    return Hyperreal::from_terms(std::move(terms));
}

} // namespace hyperseries
