#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hyperseries/errors.hpp"
#include "hyperseries/polynomial.hpp"
#include "hyperseries/rational.hpp"

namespace hyperseries {

/// coeff * i^power * ratio^i
struct SeriesAtom {
    Rational coeff;
    int power = 0;
    Rational ratio{1};

    Rational at(std::int64_t i) const {
        return coeff * Rational(i).pow(power) * ratio.pow(i);
    }

    friend bool operator==(const SeriesAtom&, const SeriesAtom&) = default;
};

/// Key of an atom inside a series: (power, ratio).
using AtomKey = std::pair<int, Rational>;

/// A series sum_{i=start}^{w} t(i), where t(i) is the override at i when one
/// exists and otherwise the general term g(i) = sum of the atoms.
///
/// Values are normalized on construction: atoms are merged by key and sorted,
/// zero atoms are dropped, and overrides that agree with g are dropped.
class SeriesExpr {
public:
    SeriesExpr() = default;

    SeriesExpr(std::int64_t start, const std::vector<SeriesAtom>& atoms,
               const std::map<std::int64_t, Rational>& overrides = {})
        : start_(start) {
        std::map<AtomKey, Rational> merged;
        for (const auto& a : atoms) {
            if (a.ratio.is_zero()) {
                throw error("series atom ratio must be nonzero");
            }
            if (a.power < 0) {
                throw error("series atom power must be non-negative");
            }
            merged[{a.power, a.ratio}] += a.coeff;
        }
        for (auto& [key, coeff] : merged) {
            if (!coeff.is_zero()) {
                atoms_.push_back({coeff, key.first, key.second});
            }
        }
        for (const auto& [i, v] : overrides) {
            if (i < start_) {
                throw index_before_start("override index " + std::to_string(i) + " precedes start " +
                                         std::to_string(start_));
            }
            if (v != general_term(i)) {
                overrides_.emplace(i, v);
            }
        }
    }

    /// The series 1 + 1 + 1 + ... style shorthand: one atom c * i^p * r^i from index 1.
    static SeriesExpr single(const Rational& coeff, int power = 0, const Rational& ratio = Rational(1)) {
        return SeriesExpr(1, {{coeff, power, ratio}});
    }

    std::int64_t start() const { return start_; }
    const std::vector<SeriesAtom>& atoms() const { return atoms_; }
    const std::map<std::int64_t, Rational>& overrides() const { return overrides_; }

    bool is_zero_series() const { return atoms_.empty() && overrides_.empty(); }

    Rational general_term(std::int64_t i) const {
        Rational sum;
        for (const auto& a : atoms_) {
            sum += a.at(i);
        }
        return sum;
    }

    int max_power() const {
        int p = 0;
        for (const auto& a : atoms_) {
            p = std::max(p, a.power);
        }
        return p;
    }

    friend bool operator==(const SeriesExpr&, const SeriesExpr&) = default;

private:
    std::int64_t start_ = 1;
    std::vector<SeriesAtom> atoms_;
    std::map<std::int64_t, Rational> overrides_;
};

inline void require_in_range(const SeriesExpr& s, std::int64_t i) {
    if (i < s.start()) {
        throw index_before_start("index " + std::to_string(i) + " precedes start " + std::to_string(s.start()));
    }
}

/// The actual i-th term.
inline Rational term_at(const SeriesExpr& s, std::int64_t i) {
    require_in_range(s, i);
    if (auto it = s.overrides().find(i); it != s.overrides().end()) {
        return it->second;
    }
    return s.general_term(i);
}

inline SeriesExpr scalar_mul(const SeriesExpr& s, const Rational& c) {
    std::vector<SeriesAtom> atoms = s.atoms();
    for (auto& a : atoms) {
        a.coeff *= c;
    }
    std::map<std::int64_t, Rational> overrides = s.overrides();
    for (auto& [i, v] : overrides) {
        v *= c;
    }
    return SeriesExpr(s.start(), atoms, overrides);
}

/// Term-by-term sum. Both series must share their lower bound.
inline SeriesExpr series_add(const SeriesExpr& a, const SeriesExpr& b) {
    if (a.start() != b.start()) {
        throw bound_mismatch("cannot add series starting at " + std::to_string(a.start()) + " and " +
                             std::to_string(b.start()) + ": the limits of summation differ");
    }
    std::vector<SeriesAtom> atoms = a.atoms();
    atoms.insert(atoms.end(), b.atoms().begin(), b.atoms().end());
    std::map<std::int64_t, Rational> overrides;
    for (const auto* s : {&a, &b}) {
        for (const auto& [i, v] : s->overrides()) {
            overrides[i] = term_at(a, i) + term_at(b, i);
        }
    }
    return SeriesExpr(a.start(), atoms, overrides);
}

/// Adds distribution[i] into term i for every listed index. The series' value
/// grows by exactly the distributed total.
inline SeriesExpr add_scalar_into_terms(const SeriesExpr& s, const std::map<std::int64_t, Rational>& distribution) {
    std::map<std::int64_t, Rational> overrides = s.overrides();
    for (const auto& [i, amount] : distribution) {
        overrides[i] = term_at(s, i) + amount;
    }
    return SeriesExpr(s.start(), s.atoms(), overrides);
}

/// Replaces term i by zero, returning the patched series and the removed value.
inline std::pair<SeriesExpr, Rational> remove_term_to_zero(const SeriesExpr& s, std::int64_t i) {
    Rational extracted = term_at(s, i);
    std::map<std::int64_t, Rational> overrides = s.overrides();
    overrides[i] = Rational();
    return {SeriesExpr(s.start(), s.atoms(), overrides), std::move(extracted)};
}

/// Moves the term at each source index `from` to `perm[from]`. The key set and
/// the value set of `perm` must coincide.
inline SeriesExpr rearrange_finite(const SeriesExpr& s, const std::map<std::int64_t, std::int64_t>& perm) {
    std::set<std::int64_t> sources;
    std::set<std::int64_t> targets;
    for (const auto& [from, to] : perm) {
        require_in_range(s, from);
        require_in_range(s, to);
        sources.insert(from);
        targets.insert(to);
    }
    if (sources != targets || targets.size() != perm.size()) {
        throw not_a_permutation("index map is not a permutation of a finite index set");
    }
    std::map<std::int64_t, Rational> overrides = s.overrides();
    for (const auto& [from, to] : perm) {
        overrides[to] = term_at(s, from);
    }
    return SeriesExpr(s.start(), s.atoms(), overrides);
}

enum class Parity { even, odd };

/// Zeroes every term whose index does not have the `keep` parity, by
/// multiplying the general term with ((-1)^(i+d) + 1)/2 (d = 0 keeps even, d = 1 keeps odd).
inline SeriesExpr blank_alternate(const SeriesExpr& s, Parity keep) {
    const Rational sign = keep == Parity::even ? Rational(1) : Rational(-1);
    const Rational half(1, 2);
    std::vector<SeriesAtom> atoms;
    for (const auto& a : s.atoms()) {
        atoms.push_back({a.coeff * half, a.power, a.ratio});
        atoms.push_back({a.coeff * half * sign, a.power, -a.ratio});
    }
    const auto kept = [keep](std::int64_t i) { return (i % 2 == 0) == (keep == Parity::even); };
    std::map<std::int64_t, Rational> overrides;
    for (const auto& [i, v] : s.overrides()) {
        overrides[i] = kept(i) ? v : Rational();
    }
    return SeriesExpr(s.start(), atoms, overrides);
}

enum class Slots { odd, even };

/// Spaces a polynomial series out with zeros: term j lands at position 2j-1
/// (odd slots) or 2j (even slots).
inline SeriesExpr stretch2(const SeriesExpr& s, Slots phase) {
    if (!s.overrides().empty()) {
        throw unsupported_override("stretch2 requires a series without overrides");
    }
    Polynomial g;
    for (const auto& a : s.atoms()) {
        if (!a.ratio.is_one()) {
            throw unsupported_ratio("stretch2 requires ratio 1 atoms, got ratio " + a.ratio.str());
        }
        g += Polynomial::monomial(a.coeff, static_cast<std::size_t>(a.power));
    }
    // position i holds g((i + d) / 2) on the kept parity
    const Rational shift = phase == Slots::odd ? Rational(1, 2) : Rational();
    const Polynomial spread = g.composed_affine(Rational(1, 2), shift);
    std::vector<SeriesAtom> atoms;
    for (std::size_t k = 0; k < spread.coefficients().size(); ++k) {
        atoms.push_back({spread.coefficient(k), static_cast<int>(k), Rational(1)});
    }
    return blank_alternate(SeriesExpr(s.start(), atoms), phase == Slots::odd ? Parity::odd : Parity::even);
}

/// Same general term, different lower bound. The upper bound stays w, so the
/// term count becomes w + 1 - new_start.
inline SeriesExpr reindex_start(const SeriesExpr& s, std::int64_t new_start) {
    for (const auto& [i, v] : s.overrides()) {
        if (i < new_start) {
            throw unsupported_override("override at index " + std::to_string(i) +
                                       " falls outside a series starting at " + std::to_string(new_start));
        }
    }
    return SeriesExpr(new_start, s.atoms(), s.overrides());
}

} // namespace hyperseries
