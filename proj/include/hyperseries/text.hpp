#pragma once

// Text syntax for series and hyperreal values.
//
//   series    = "sum" "(" "i" "=" int ".." "omega" "," expr [ ";" override { "," override } ] ")"
//   override  = int "->" expr                      (expr must be constant)
//   int       = [ "-" ] digits
//   expr      = term { ("+" | "-") term }
//   term      = unary { ("*" | "/") unary }
//   unary     = ("-" | "+") unary | power
//   power     = primary [ "^" unary ]             (right associative)
//   primary   = digits | ident | "(" expr ")"
//
// In a series body the only identifier is the index `i`; in a hyperreal value
// it is `w`. Exponents must be integers or, over a constant base, an integer
// affine function of the variable: (-1)^(i+1), (1/2)^i, 2^w, 3^(w-1).

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hyperseries/errors.hpp"
#include "hyperseries/hyperreal.hpp"
#include "hyperseries/oracle.hpp"
#include "hyperseries/rational.hpp"
#include "hyperseries/series.hpp"
#include "hyperseries/summation.hpp"

namespace hyperseries {

namespace text {

enum class Tok { number, ident, plus, minus, star, slash, caret, lparen, rparen, comma, equals, dotdot, semicolon, arrow, end };

struct Token {
    Tok kind;
    std::string_view text;
    std::size_t offset;
};

inline std::string describe(const Token& t) {
    if (t.kind == Tok::end) {
        return "end of input";
    }
    return "'" + std::string(t.text) + "'";
}

inline std::string printable(char c) {
    const auto u = static_cast<unsigned char>(c);
    if (std::isprint(u)) {
        return std::string(1, c);
    }
    char buf[8];
    std::snprintf(buf, sizeof buf, "\\x%02X", static_cast<unsigned>(u));
    return buf;
}

inline std::vector<Token> tokenize(std::string_view src) {
    std::vector<Token> out;
    std::size_t pos = 0;
    while (pos < src.size()) {
        const char c = src[pos];
        const auto u = static_cast<unsigned char>(c);
        if (std::isspace(u)) {
            ++pos;
            continue;
        }
        const std::size_t begin = pos;
        if (std::isdigit(u)) {
            while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
                ++pos;
            }
            out.push_back({Tok::number, src.substr(begin, pos - begin), begin});
            continue;
        }
        if (std::isalpha(u) || c == '_') {
            while (pos < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_')) {
                ++pos;
            }
            out.push_back({Tok::ident, src.substr(begin, pos - begin), begin});
            continue;
        }
        Tok kind;
        std::size_t len = 1;
        switch (c) {
        case '+': kind = Tok::plus; break;
        case '*': kind = Tok::star; break;
        case '/': kind = Tok::slash; break;
        case '^': kind = Tok::caret; break;
        case '(': kind = Tok::lparen; break;
        case ')': kind = Tok::rparen; break;
        case ',': kind = Tok::comma; break;
        case '=': kind = Tok::equals; break;
        case ';': kind = Tok::semicolon; break;
        case '-':
            if (pos + 1 < src.size() && src[pos + 1] == '>') {
                kind = Tok::arrow;
                len = 2;
            } else {
                kind = Tok::minus;
            }
            break;
        case '.':
            if (pos + 1 < src.size() && src[pos + 1] == '.') {
                kind = Tok::dotdot;
                len = 2;
                break;
            }
            throw syntax_error(pos, "unexpected '.'; ranges are written a..omega");
        default:
            throw syntax_error(pos, "unexpected character '" + printable(c) + "'");
        }
        out.push_back({kind, src.substr(begin, len), begin});
        pos += len;
    }
    out.push_back({Tok::end, {}, src.size()});
    return out;
}

/// Precedence-climbing parser producing values of `Algebra::value_type` directly.
template <class Algebra>
class ExprParser {
public:
    using value_type = typename Algebra::value_type;

    ExprParser(const std::vector<Token>& tokens, std::size_t& pos, Algebra& algebra)
        : toks_(tokens), pos_(pos), alg_(algebra) {}

    value_type expr() {
        value_type acc = term();
        while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
            const bool plus = next().kind == Tok::plus;
            value_type rhs = term();
            acc = plus ? alg_.add(acc, rhs) : alg_.sub(acc, rhs);
        }
        return acc;
    }

private:
    static constexpr int max_depth = 200;

    struct DepthGuard {
        explicit DepthGuard(ExprParser& p) : p_(p) {
            if (++p_.depth_ > max_depth) {
                throw syntax_error(p_.peek().offset, "expression nested too deeply");
            }
        }
        ~DepthGuard() { --p_.depth_; }
        ExprParser& p_;
    };

    const Token& peek() const { return toks_[pos_]; }
    const Token& next() { return toks_[pos_++]; }

    value_type term() {
        value_type acc = unary();
        while (peek().kind == Tok::star || peek().kind == Tok::slash) {
            const Token& op = next();
            value_type rhs = unary();
            acc = op.kind == Tok::star ? alg_.mul(acc, rhs) : alg_.div(acc, rhs, op.offset);
        }
        return acc;
    }

    value_type unary() {
        DepthGuard guard(*this);
        if (peek().kind == Tok::minus) {
            next();
            return alg_.negate(unary());
        }
        if (peek().kind == Tok::plus) {
            next();
            return unary();
        }
        return power();
    }

    value_type power() {
        value_type base = primary();
        if (peek().kind == Tok::caret) {
            const Token& op = next();
            value_type exponent = unary();
            return alg_.pow(base, exponent, op.offset);
        }
        return base;
    }

    value_type primary() {
        const Token& t = next();
        switch (t.kind) {
        case Tok::number:
            return alg_.number(Rational(mpz_class(std::string(t.text), 10)));
        case Tok::ident:
            return alg_.identifier(t.text, t.offset);
        case Tok::lparen: {
            value_type inner = expr();
            if (peek().kind != Tok::rparen) {
                throw syntax_error(peek().offset, "expected ')' but found " + describe(peek()));
            }
            next();
            return inner;
        }
        default:
            throw syntax_error(t.offset, "expected a number, variable or '(' but found " + describe(t));
        }
    }

    const std::vector<Token>& toks_;
    std::size_t& pos_;
    Algebra& alg_;
    int depth_ = 0;
};

// Exponent magnitudes beyond these are rejected to keep parsing bounded.
inline constexpr std::int64_t max_exponent = 4096;
inline constexpr std::int64_t max_repeated_power = 256;
inline constexpr std::int64_t max_omega_power = std::int64_t{1} << 20;

inline std::int64_t small_exponent(const Rational& e, std::size_t offset) {
    if (!e.is_integer()) {
        throw unsupported_form(offset, "exponent must be an integer, got " + e.str());
    }
    if (e.abs() > Rational(max_exponent)) {
        throw unsupported_form(offset, "exponent " + e.str() + " is too large");
    }
    return e.to_int64();
}

// Bounds the bit size of b^e before computing it.
inline Rational checked_pow(const Rational& b, std::int64_t e, std::size_t offset) {
    const auto bits = mpz_sizeinbase(b.numerator().get_mpz_t(), 2) + mpz_sizeinbase(b.denominator().get_mpz_t(), 2);
    if (bits * static_cast<std::size_t>(e < 0 ? -e : e) > (std::size_t{1} << 22)) {
        throw unsupported_form(offset, "power is too large");
    }
    return b.pow(e);
}

inline void check_degree_growth(std::int64_t degree, std::int64_t e, std::size_t offset) {
    if (degree * e > max_repeated_power) {
        throw unsupported_form(offset, "expanded degree " + std::to_string(degree * e) + " is too large");
    }
}

/// Sum of atoms c * i^p * r^i keyed by (p, r); no zero coefficients.
struct TermSum {
    std::map<AtomKey, Rational> atoms;

    static TermSum constant(const Rational& c) {
        TermSum t;
        t.add({0, Rational(1)}, c);
        return t;
    }

    void add(const AtomKey& key, const Rational& c) {
        auto& slot = atoms[key];
        slot += c;
        if (slot.is_zero()) {
            atoms.erase(key);
        }
    }

    std::optional<Rational> as_constant() const {
        if (atoms.empty()) {
            return Rational();
        }
        if (atoms.size() == 1 && atoms.begin()->first == AtomKey{0, Rational(1)}) {
            return atoms.begin()->second;
        }
        return std::nullopt;
    }

    std::vector<SeriesAtom> to_atoms() const {
        std::vector<SeriesAtom> out;
        for (const auto& [key, c] : atoms) {
            out.push_back({c, key.first, key.second});
        }
        return out;
    }
};

struct SeriesAlgebra {
    using value_type = TermSum;

    TermSum number(const Rational& v) { return TermSum::constant(v); }

    TermSum identifier(std::string_view name, std::size_t offset) {
        if (name == "i") {
            TermSum t;
            t.add({1, Rational(1)}, Rational(1));
            return t;
        }
        if (name == "omega" || name == "w") {
            throw unsupported_form(offset, "'" + std::string(name) + "' may only appear as the upper bound 'omega'");
        }
        throw syntax_error(offset, "unknown identifier '" + std::string(name) + "'; the index variable is 'i'");
    }

    TermSum add(const TermSum& a, const TermSum& b) {
        TermSum r = a;
        for (const auto& [k, c] : b.atoms) {
            r.add(k, c);
        }
        return r;
    }

    TermSum negate(const TermSum& a) {
        TermSum r;
        for (const auto& [k, c] : a.atoms) {
            r.add(k, -c);
        }
        return r;
    }

    TermSum sub(const TermSum& a, const TermSum& b) { return add(a, negate(b)); }

    TermSum mul(const TermSum& a, const TermSum& b) {
        TermSum r;
        for (const auto& [ka, ca] : a.atoms) {
            for (const auto& [kb, cb] : b.atoms) {
                r.add({ka.first + kb.first, ka.second * kb.second}, ca * cb);
            }
        }
        return r;
    }

    TermSum div(const TermSum& a, const TermSum& b, std::size_t offset) {
        const auto d = b.as_constant();
        if (!d) {
            throw unsupported_form(offset, "can only divide by a constant");
        }
        if (d->is_zero()) {
            throw unsupported_form(offset, "division by zero");
        }
        return mul(a, TermSum::constant(d->inverse()));
    }

    TermSum pow(const TermSum& base, const TermSum& exponent, std::size_t offset) {
        // exponent must be a*i + c with integer a, c
        Rational a;
        Rational c;
        for (const auto& [k, coeff] : exponent.atoms) {
            if (!k.second.is_one() || k.first > 1) {
                throw unsupported_form(offset, "exponent must be an integer or an integer multiple of i plus an integer");
            }
            (k.first == 1 ? a : c) = coeff;
        }
        const std::int64_t lin = small_exponent(a, offset);
        const std::int64_t shift = small_exponent(c, offset);
        const auto b = base.as_constant();
        if (lin != 0) {
            if (!b) {
                throw unsupported_form(offset, "a power with exponent in i needs a constant base");
            }
            if (b->is_zero()) {
                throw unsupported_form(offset, "base of a power in i must be nonzero");
            }
            TermSum r;
            r.add({0, checked_pow(*b, lin, offset)}, checked_pow(*b, shift, offset));
            return r;
        }
        if (b) {
            if (b->is_zero() && shift < 0) {
                throw unsupported_form(offset, "division by zero");
            }
            return TermSum::constant(checked_pow(*b, shift, offset));
        }
        if (shift < 0) {
            throw unsupported_form(offset, "negative powers of i are not supported");
        }
        std::int64_t degree = 0;
        for (const auto& [k, c] : base.atoms) {
            degree = std::max<std::int64_t>(degree, k.first);
            if (!k.second.is_one()) {
                checked_pow(k.second, shift, offset);
            }
            checked_pow(c, shift, offset);
        }
        check_degree_growth(std::max<std::int64_t>(degree, 1), shift, offset);
        TermSum r = TermSum::constant(Rational(1));
        for (std::int64_t k = 0; k < shift; ++k) {
            r = mul(r, base);
        }
        return r;
    }
};

struct HyperrealAlgebra {
    using value_type = Hyperreal;

    Hyperreal number(const Rational& v) { return Hyperreal(v); }

    Hyperreal identifier(std::string_view name, std::size_t offset) {
        if (name == "w") {
            return Hyperreal::omega();
        }
        throw syntax_error(offset, "unknown identifier '" + std::string(name) + "'; hyperreal values use 'w'");
    }

    Hyperreal add(const Hyperreal& a, const Hyperreal& b) { return a + b; }
    Hyperreal sub(const Hyperreal& a, const Hyperreal& b) { return a - b; }
    Hyperreal negate(const Hyperreal& a) { return -a; }
    Hyperreal mul(const Hyperreal& a, const Hyperreal& b) { return a * b; }

    static Hyperreal monomial_pow(const HyperTerm& t, std::int64_t e, std::size_t offset) {
        if ((t.power < 0 ? -t.power : t.power) * (e < 0 ? -e : e) > max_omega_power) {
            throw unsupported_form(offset, "power of w is too large");
        }
        return Hyperreal::monomial(checked_pow(t.coeff, e, offset), t.power * e, checked_pow(t.base, e, offset));
    }

    Hyperreal div(const Hyperreal& a, const Hyperreal& b, std::size_t offset) {
        if (b.is_zero()) {
            throw unsupported_form(offset, "division by zero");
        }
        if (!b.is_monomial()) {
            throw unsupported_form(offset, "can only divide by a single term");
        }
        return a * monomial_pow(b.terms().front(), -1, offset);
    }

    Hyperreal pow(const Hyperreal& base, const Hyperreal& exponent, std::size_t offset) {
        Rational a;
        Rational c;
        for (const auto& t : exponent.terms()) {
            if (!t.base.is_one() || t.power < 0 || t.power > 1) {
                throw unsupported_form(offset, "exponent must be an integer or an integer multiple of w plus an integer");
            }
            (t.power == 1 ? a : c) = t.coeff;
        }
        const std::int64_t lin = small_exponent(a, offset);
        const std::int64_t shift = small_exponent(c, offset);
        const auto b = standard_constant(base);
        if (lin != 0) {
            if (!b) {
                throw unsupported_form(offset, "a power with exponent in w needs a constant base");
            }
            if (b->sign() <= 0) {
                throw non_positive_base(offset, "base of a power in w must be positive, got " + b->str());
            }
            return Hyperreal::monomial(checked_pow(*b, shift, offset), 0, checked_pow(*b, lin, offset));
        }
        if (base.is_zero()) {
            if (shift < 0) {
                throw unsupported_form(offset, "division by zero");
            }
            return shift == 0 ? Hyperreal(1) : Hyperreal();
        }
        if (base.is_monomial()) {
            return monomial_pow(base.terms().front(), shift, offset);
        }
        if (shift < 0) {
            throw unsupported_form(offset, "only a single term can be raised to a negative power");
        }
        std::int64_t degree = 1;
        for (const auto& t : base.terms()) {
            degree = std::max<std::int64_t>(degree, t.power < 0 ? -t.power : t.power);
            checked_pow(t.coeff, shift, offset);
            checked_pow(t.base, shift, offset);
        }
        check_degree_growth(degree, shift, offset);
        Hyperreal r(1);
        for (std::int64_t k = 0; k < shift; ++k) {
            r = r * base;
        }
        return r;
    }

private:
    static std::optional<Rational> standard_constant(const Hyperreal& x) {
        if (x.is_zero()) {
            return Rational();
        }
        const auto& t = x.terms().front();
        if (x.is_monomial() && t.power == 0 && t.base.is_one()) {
            return t.coeff;
        }
        return std::nullopt;
    }
};

inline void expect(const std::vector<Token>& toks, std::size_t& pos, Tok kind, const char* what) {
    if (toks[pos].kind != kind) {
        throw syntax_error(toks[pos].offset, std::string("expected ") + what + " but found " + describe(toks[pos]));
    }
    ++pos;
}

inline std::int64_t parse_signed_int(const std::vector<Token>& toks, std::size_t& pos, const char* what) {
    const std::size_t offset = toks[pos].offset;
    bool negative = false;
    if (toks[pos].kind == Tok::minus) {
        negative = true;
        ++pos;
    }
    if (toks[pos].kind != Tok::number) {
        throw syntax_error(toks[pos].offset, std::string("expected an integer ") + what + " but found " +
                                                 describe(toks[pos]));
    }
    mpz_class v(std::string(toks[pos].text), 10);
    ++pos;
    if (negative) {
        v = -v;
    }
    if (!v.fits_slong_p()) {
        throw bad_bounds(offset, std::string(what) + " is out of range");
    }
    return v.get_si();
}

} // namespace text

inline SeriesExpr parse_series(std::string_view src) {
    using namespace text;
    const auto toks = tokenize(src);
    std::size_t pos = 0;
    if (toks[pos].kind != Tok::ident || toks[pos].text != "sum") {
        throw syntax_error(toks[pos].offset, "expected 'sum(' but found " + describe(toks[pos]));
    }
    ++pos;
    expect(toks, pos, Tok::lparen, "'('");
    if (toks[pos].kind != Tok::ident || toks[pos].text != "i") {
        throw syntax_error(toks[pos].offset, "expected the index variable 'i' but found " + describe(toks[pos]));
    }
    ++pos;
    expect(toks, pos, Tok::equals, "'='");
    const std::int64_t start = parse_signed_int(toks, pos, "lower bound");
    expect(toks, pos, Tok::dotdot, "'..'");
    if (toks[pos].kind != Tok::ident || toks[pos].text != "omega") {
        if (toks[pos].kind == Tok::ident || toks[pos].kind == Tok::number || toks[pos].kind == Tok::minus) {
            throw bad_bounds(toks[pos].offset, "upper bound must be 'omega', found " + describe(toks[pos]));
        }
        throw syntax_error(toks[pos].offset, "expected 'omega' but found " + describe(toks[pos]));
    }
    ++pos;
    expect(toks, pos, Tok::comma, "','");

    SeriesAlgebra alg;
    const TermSum body = ExprParser<SeriesAlgebra>(toks, pos, alg).expr();

    std::map<std::int64_t, Rational> overrides;
    if (toks[pos].kind == Tok::semicolon) {
        do {
            ++pos;
            const std::size_t at = toks[pos].offset;
            const std::int64_t index = parse_signed_int(toks, pos, "override index");
            if (index < start) {
                throw bad_bounds(at, "override index " + std::to_string(index) + " precedes the lower bound");
            }
            if (overrides.count(index) != 0) {
                throw syntax_error(at, "duplicate override for index " + std::to_string(index));
            }
            expect(toks, pos, Tok::arrow, "'->'");
            const std::size_t value_at = toks[pos].offset;
            const auto value = ExprParser<SeriesAlgebra>(toks, pos, alg).expr().as_constant();
            if (!value) {
                throw unsupported_form(value_at, "override value must be a constant");
            }
            overrides.emplace(index, *value);
        } while (toks[pos].kind == Tok::comma);
    }
    expect(toks, pos, Tok::rparen, "')'");
    expect(toks, pos, Tok::end, "end of input");
    return SeriesExpr(start, body.to_atoms(), overrides);
}

inline Hyperreal parse_hyperreal(std::string_view src) {
    using namespace text;
    const auto toks = tokenize(src);
    std::size_t pos = 0;
    HyperrealAlgebra alg;
    Hyperreal value = ExprParser<HyperrealAlgebra>(toks, pos, alg).expr();
    expect(toks, pos, Tok::end, "an operator or end of input");
    return value;
}

namespace text {

inline std::string power_base(const Rational& b) {
    return b.is_integer() && b.sign() > 0 ? b.str() : "(" + b.str() + ")";
}

// Renders |coeff| * factors as "n*factors/d", with the sign returned separately.
inline std::pair<bool, std::string> scaled(const Rational& coeff, const std::string& factors) {
    const bool negative = coeff.sign() < 0;
    const Rational mag = coeff.abs();
    if (factors.empty()) {
        return {negative, mag.str()};
    }
    std::string out;
    if (mag.numerator() != 1) {
        out += mag.numerator().get_str() + "*";
    }
    out += factors;
    if (mag.denominator() != 1) {
        out += "/" + mag.denominator().get_str();
    }
    return {negative, out};
}

inline std::string join_signed(const std::vector<std::pair<bool, std::string>>& parts) {
    if (parts.empty()) {
        return "0";
    }
    std::string out;
    for (std::size_t k = 0; k < parts.size(); ++k) {
        const auto& [negative, body] = parts[k];
        if (k == 0) {
            out += negative ? "-" + body : body;
        } else {
            out += (negative ? " - " : " + ") + body;
        }
    }
    return out;
}

inline std::string join_factors(const std::string& a, const std::string& b) {
    if (a.empty()) {
        return b;
    }
    return b.empty() ? a : a + "*" + b;
}

inline std::string variable_power(const char* var, std::int64_t p) {
    if (p == 0) {
        return {};
    }
    return p == 1 ? std::string(var) : std::string(var) + "^" + std::to_string(p);
}

inline std::string format_poly(const Polynomial& p, const char* var) {
    std::vector<std::pair<bool, std::string>> parts;
    for (std::size_t k = p.coefficients().size(); k-- > 0;) {
        if (!p.coefficient(k).is_zero()) {
            parts.push_back(scaled(p.coefficient(k), variable_power(var, static_cast<std::int64_t>(k))));
        }
    }
    return join_signed(parts);
}

} // namespace text

/// Canonical rendering, dominant term first: "w^2/2 + w/2", "2^w - 1", "1/4".
inline std::string format_hyperreal(const Hyperreal& x) {
    using namespace text;
    std::vector<std::pair<bool, std::string>> parts;
    for (const auto& t : x.terms()) {
        const std::string exp = t.base.is_one() ? std::string() : power_base(t.base) + "^w";
        parts.push_back(scaled(t.coeff, join_factors(variable_power("w", t.power), exp)));
    }
    return join_signed(parts);
}

/// "sum(i=1..omega, body[; index -> value, ...])"
inline std::string format_series(const SeriesExpr& s) {
    using namespace text;
    std::vector<std::pair<bool, std::string>> parts;
    for (const auto& a : s.atoms()) {
        const std::string exp = a.ratio.is_one() ? std::string() : power_base(a.ratio) + "^i";
        parts.push_back(scaled(a.coeff, join_factors(variable_power("i", a.power), exp)));
    }
    std::string out = "sum(i=" + std::to_string(s.start()) + "..omega, " + join_signed(parts);
    const char* sep = "; ";
    for (const auto& [i, v] : s.overrides()) {
        out += sep + std::to_string(i) + " -> " + v.str();
        sep = ", ";
    }
    return out + ")";
}

/// "poly(n) + Q(n)*r^n + ..." with the override correction folded into the constant.
inline std::string format_formula(const PartialSumFormula& f) {
    using namespace text;
    std::vector<std::pair<bool, std::string>> parts;
    const Polynomial poly = f.poly + Polynomial::constant(f.correction);
    if (!poly.is_zero()) {
        parts.emplace_back(false, format_poly(poly, "n"));
    }
    for (auto it = f.exp_parts.rbegin(); it != f.exp_parts.rend(); ++it) {
        const auto& [r, q] = *it;
        const std::string exp = power_base(r) + "^n";
        if (q.degree() == 0) {
            parts.push_back(scaled(q.coefficient(0), exp));
        } else {
            parts.emplace_back(false, "(" + format_poly(q, "n") + ")*" + exp);
        }
    }
    std::string out;
    for (std::size_t k = 0; k < parts.size(); ++k) {
        const auto& [negative, body] = parts[k];
        out += k == 0 ? (negative ? "-" : "") : (negative ? " - " : " + ");
        out += body;
    }
    return out.empty() ? "0" : out;
}

/// {"input", "value", "principal", "standardPart", "terms": [{"coeff", "base", "power"}]}
inline nlohmann::json value_json(std::string_view input, const Hyperreal& value) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : value.terms()) {
        terms.push_back({{"coeff", t.coeff.str()}, {"base", t.base.str()}, {"power", t.power}});
    }
    const auto finite = standard_part(value);
    return {
        {"input", std::string(input)},
        {"value", format_hyperreal(value)},
        {"principal", format_hyperreal(principal_value(value))},
        {"standardPart", finite ? nlohmann::json(finite->str()) : nlohmann::json(nullptr)},
        {"terms", std::move(terms)},
    };
}

inline nlohmann::json report_json(const VerificationReport& r) {
    nlohmann::json mismatch = nullptr;
    if (r.first_mismatch) {
        mismatch = {{"n", r.first_mismatch->n},
                    {"expected", r.first_mismatch->expected.str()},
                    {"got", r.first_mismatch->got.str()}};
    }
    return {
        {"seriesId", r.series_id},
        {"checkedRange", {r.range_from, r.range_to}},
        {"status", r.passed() ? "pass" : "fail"},
        {"firstMismatch", std::move(mismatch)},
    };
}

} // namespace hyperseries
