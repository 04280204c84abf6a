#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hyperseries/errors.hpp"
#include "hyperseries/hyperreal.hpp"
#include "hyperseries/polynomial.hpp"
#include "hyperseries/rational.hpp"
#include "hyperseries/series.hpp"

namespace hyperseries {

enum class NegBaseMode {
    // Only (-1)^n is sent to zero; any other negative base is rejected.
    error,
    // Additionally sends r^n to zero for -1 < r < 0. Bases below -1 are still rejected.
    conjecture_extended,
};

struct EvalConfig {
    NegBaseMode neg_base_mode = NegBaseMode::error;
    int max_power = 16;
};

namespace detail {

inline void check_degree(int p, int max_power) {
    if (max_power < 1) {
        throw error("max_power must be at least 1");
    }
    if (p < 0) {
        throw error("power must be non-negative");
    }
    if (p > max_power) {
        throw degree_limit("power " + std::to_string(p) + " exceeds the degree limit " + std::to_string(max_power));
    }
}

// Coefficients of k-th power of (x - 1): C(k, m) (-1)^(k-m) for m = 0..k.
inline Rational falling_shift_coeff(int k, int m) {
    Rational c(binomial(static_cast<unsigned long>(k), static_cast<unsigned long>(m)));
    return ((k - m) % 2 == 0) ? c : -c;
}

// Solves the upper-triangular system a(m, k) q_k = rhs_m (k >= m) by back substitution.
inline std::vector<Rational> solve_upper_triangular(const std::vector<std::vector<Rational>>& a,
                                                    const std::vector<Rational>& rhs) {
    const std::size_t n = rhs.size();
    std::vector<Rational> q(n);
    for (std::size_t row = n; row-- > 0;) {
        Rational acc = rhs[row];
        for (std::size_t k = row + 1; k < n; ++k) {
            acc -= a[row][k] * q[k];
        }
        q[row] = acc / a[row][row];
    }
    return q;
}

} // namespace detail

/// F_p with F_p(n) = 1^p + 2^p + ... + n^p for every integer n >= 0.
///
/// Solved from F(x) - F(x - 1) = x^p with F(0) = 0, which for the unknown
/// coefficients f_1..f_{p+1} is triangular in the highest power.
inline Polynomial faulhaber(int p, int max_power = 16) {
    detail::check_degree(p, max_power);
    // F(x) - F(x-1) = sum_k f_k (x^k - (x-1)^k); the x^m coefficient is
    // -sum_{k > m} f_k C(k, m) (-1)^(k-m), which must equal [m == p].
    const int n = p + 1;
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    std::vector<Rational> rhs(n);
    for (int m = 0; m < n; ++m) {
        for (int k = m + 1; k <= n; ++k) {
            a[m][k - 1] = -detail::falling_shift_coeff(k, m);
        }
        rhs[m] = m == p ? Rational(1) : Rational();
    }
    const auto f = detail::solve_upper_triangular(a, rhs);
    std::vector<Rational> coeffs(n + 1);
    std::copy(f.begin(), f.end(), coeffs.begin() + 1);
    return Polynomial(std::move(coeffs));
}

/// Q of degree p with sum_{i=1}^n i^p r^i = Q(n) r^n - Q(0), from Q(i) - Q(i - 1)/r = i^p.
inline Polynomial antidifference_polygeom(int p, const Rational& r, int max_power = 16) {
    detail::check_degree(p, max_power);
    if (r.is_zero() || r.is_one()) {
        throw error("antidifference_polygeom requires r != 0 and r != 1, got " + r.str());
    }
    const Rational inv = r.inverse();
    const int n = p + 1;
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    std::vector<Rational> rhs(n);
    for (int m = 0; m < n; ++m) {
        for (int k = m; k < n; ++k) {
            a[m][k] = -inv * detail::falling_shift_coeff(k, m);
        }
        a[m][m] += Rational(1);
        rhs[m] = m == p ? Rational(1) : Rational();
    }
    return Polynomial(detail::solve_upper_triangular(a, rhs));
}

/// Closed form of the partial sums S(n) = sum_{i=start}^n t(i):
/// S(n) = poly(n) + sum_r exp_parts[r](n) r^n + correction, for all n >= valid_from.
struct PartialSumFormula {
    Polynomial poly;
    std::map<Rational, Polynomial> exp_parts;
    Rational correction;
    std::int64_t valid_from = 1;

    Rational operator()(std::int64_t n) const {
        Rational v = poly(Rational(n)) + correction;
        for (const auto& [r, q] : exp_parts) {
            v += q(Rational(n)) * r.pow(n);
        }
        return v;
    }

    friend bool operator==(const PartialSumFormula&, const PartialSumFormula&) = default;
};

inline PartialSumFormula partial_sum_formula(const SeriesExpr& s, const EvalConfig& cfg = {}) {
    PartialSumFormula f;
    // G(n) = sum_{i=1}^n g(i) first; the lower bound is applied below.
    for (const auto& atom : s.atoms()) {
        if (atom.ratio.is_one()) {
            f.poly += faulhaber(atom.power, cfg.max_power) * atom.coeff;
        } else {
            const Polynomial q = antidifference_polygeom(atom.power, atom.ratio, cfg.max_power) * atom.coeff;
            f.exp_parts[atom.ratio] += q;
            f.poly -= Polynomial::constant(q(Rational()));
        }
    }
    std::erase_if(f.exp_parts, [](const auto& kv) { return kv.second.is_zero(); });

    // sum_{i=start}^n g(i) = G(n) - G(start - 1), valid for any integer start.
    f.poly -= Polynomial::constant(f(s.start() - 1));

    f.valid_from = s.start();
    for (const auto& [i, v] : s.overrides()) {
        f.correction += v - s.general_term(i);
        f.valid_from = std::max(f.valid_from, i);
    }
    return f;
}

/// Substitutes n = w (the upper bound) into a partial-sum formula.
///
/// Terms q(n) r^n with r > 0 become base-r hyperreal terms. For r = -1 the whole
/// product q(n) (-1)^n is sent to zero, polynomial cofactor included.
inline Hyperreal evaluate_at_omega(const PartialSumFormula& f, const EvalConfig& cfg = {}) {
    Hyperreal value = eval_poly_at_shifted_omega(f.poly, 0) + Hyperreal(f.correction);
    for (const auto& [r, q] : f.exp_parts) {
        if (r.sign() > 0) {
            std::vector<HyperTerm> terms;
            for (std::size_t k = 0; k < q.coefficients().size(); ++k) {
                terms.push_back({q.coefficient(k), static_cast<std::int64_t>(k), r});
            }
            value += Hyperreal::from_terms(std::move(terms));
        } else if (r == Rational(-1)) {
            continue;
        } else if (cfg.neg_base_mode == NegBaseMode::conjecture_extended && r > Rational(-1)) {
            continue;
        } else {
            throw negative_base("cannot evaluate (" + r.str() + ")^w" +
                                (r < Rational(-1) ? std::string(": base below -1 grows without bound")
                                                  : std::string(" in error mode")));
        }
    }
    return value;
}

inline Hyperreal sum_series(const SeriesExpr& s, const EvalConfig& cfg = {}) {
    return evaluate_at_omega(partial_sum_formula(s, cfg), cfg);
}

/// Value of a + (a + d) + (a + 2d) + ...: w a + w^2 d / 2 - w d / 2.
inline Hyperreal arithmetic_series_value(const Rational& a, const Rational& d) {
    const Rational half(1, 2);
    return Hyperreal::from_terms({{a, 1, Rational(1)}, {d * half, 2, Rational(1)}, {-d * half, 1, Rational(1)}});
}

/// Value of a + a r + a r^2 + ... for r > 0: a (1 - r^w) / (1 - r), or a w when r = 1.
inline Hyperreal geometric_series_value(const Rational& a, const Rational& r) {
    if (r.sign() <= 0) {
        throw non_positive_ratio("geometric_series_value needs r > 0, got " + r.str() + "; use sum_series");
    }
    if (r.is_one()) {
        return Hyperreal::monomial(a, 1);
    }
    const Rational k = a / (Rational(1) - r);
    return Hyperreal::from_terms({{k, 0, Rational(1)}, {-k, 0, r}});
}

} // namespace hyperseries
