#include <gtest/gtest.h>

#include <compare>
#include <vector>

#include "hyperseries/hyperreal.hpp"
#include "hyperseries/text.hpp"
#include "support/generators.hpp"

using namespace hyperseries;
using hyperseries::testing::Rng;

namespace {

Hyperreal W(std::int64_t p = 1, const Rational& c = Rational(1), const Rational& base = Rational(1)) {
    return Hyperreal::monomial(c, p, base);
}

const Rational half(1, 2);

} // namespace

TEST(Hyperreal, CanonicalForm) {
    const Hyperreal x = Hyperreal::from_terms({{Rational(1), 0, Rational(1)},
                                               {Rational(3), 1, Rational(1)},
                                               {Rational(-1), 0, Rational(1)},
                                               {Rational(2), 0, Rational(2)}});
    ASSERT_EQ(x.terms().size(), 2u);
    EXPECT_EQ(x.terms()[0], (HyperTerm{Rational(2), 0, Rational(2)}));
    EXPECT_EQ(x.terms()[1], (HyperTerm{Rational(3), 1, Rational(1)}));
    EXPECT_TRUE(Hyperreal::from_terms({{Rational(1), 2, Rational(1)}, {Rational(-1), 2, Rational(1)}}).is_zero());
    EXPECT_THROW(Hyperreal::from_terms({{Rational(1), 0, Rational(-2)}}), error);
}

TEST(Hyperreal, Addition) {
    // (w/2 + 1/4) + (w/2 - 1/4) = w
    EXPECT_EQ((W(1, half) + Hyperreal(Rational(1, 4))) + (W(1, half) - Hyperreal(Rational(1, 4))), W());
    const Hyperreal x = W(2, half) + W(1, half);
    EXPECT_EQ(x + Hyperreal(), x);
    // values of 1+2+3+... and 2+3+4+... (as sum of i+1)
    EXPECT_EQ(x + (W(2, half) + W(1, Rational(3, 2))), W(2) + W(1, Rational(2)));
    EXPECT_EQ(x - x, Hyperreal());
}

TEST(Hyperreal, Multiplication) {
    EXPECT_EQ(W() * W(), W(2));
    const Hyperreal x = W(2, half) + W(1, half) - Hyperreal(3);
    EXPECT_EQ(x * Hyperreal(1), x);
    EXPECT_EQ(x * Hyperreal(), Hyperreal());
    // (2^w - 1) * (1/2)^w = 1 - (1/2)^w
    const Hyperreal two_w = W(0, Rational(1), Rational(2)) - Hyperreal(1);
    EXPECT_EQ(two_w * W(0, Rational(1), half), Hyperreal(1) - W(0, Rational(1), half));
}

TEST(Hyperreal, MultiplicationMatchesFiniteEvaluation) {
    // (2^n - 1) * (1/2)^n = 1 - (1/2)^n at every finite n
    for (int n = 1; n <= 40; ++n) {
        const Rational lhs = (Rational(2).pow(n) - Rational(1)) * half.pow(n);
        EXPECT_EQ(lhs, Rational(1) - half.pow(n));
    }
}

TEST(Hyperreal, Compare) {
    EXPECT_EQ(hyper_compare(W() + Hyperreal(1), W()), std::strong_ordering::greater);
    const Hyperreal x = W(3, Rational(-2)) + Hyperreal(5);
    EXPECT_EQ(hyper_compare(x, x), std::strong_ordering::equal);
    const Hyperreal two_w = W(0, Rational(1), Rational(2));
    EXPECT_EQ(hyper_compare(W(), two_w), std::strong_ordering::less);
    // n < 2^n at n = 64
    EXPECT_LT(Rational(64), Rational(2).pow(64));
    EXPECT_LT(W(-1), Hyperreal(Rational(1, 1000000)));
    EXPECT_GT(W(-1), Hyperreal());
    EXPECT_LT(W(0, Rational(1000), half), W(-5));
}

TEST(Hyperreal, PrincipalValue) {
    EXPECT_EQ(principal_value(W(2, half) + W(1, half)), W(2, half));
    EXPECT_EQ(principal_value(Hyperreal()), Hyperreal());
    for (const Hyperreal& x : {W(2) + W(1, Rational(5)), W(2) - W(1, Rational(12)), W(2) + Hyperreal(23)}) {
        EXPECT_EQ(principal_value(x), W(2));
    }
}

TEST(Hyperreal, SameHalo) {
    const Hyperreal naturals = W(2, half) + W(1, half);
    const Hyperreal bumped = Hyperreal(1) + W(2, half) + W(1, Rational(3, 2));
    EXPECT_NE(naturals, bumped);
    EXPECT_TRUE(same_halo(naturals, bumped));
    EXPECT_TRUE(same_halo(naturals, naturals));
    EXPECT_TRUE(same_halo(W(1, half) + Hyperreal(Rational(1, 4)), W(1, half) - Hyperreal(Rational(1, 4))));
    EXPECT_FALSE(same_halo(W(2), W(2, half)));
}

TEST(Hyperreal, StandardPart) {
    EXPECT_EQ(standard_part(Hyperreal(2) - W(0, Rational(2), half)), Rational(2));
    EXPECT_EQ(standard_part(Hyperreal()), Rational());
    EXPECT_EQ(standard_part(W(2, half) + W(1, half)), std::nullopt);
    EXPECT_EQ(standard_part(W(-1, Rational(7)) + Hyperreal(Rational(-3, 4))), Rational(-3, 4));
    EXPECT_EQ(standard_part(W(0, Rational(1), Rational(3))), std::nullopt);
    EXPECT_EQ(standard_part(W(5, Rational(1), Rational(1, 3))), Rational());
}

TEST(Hyperreal, RatioPrincipal) {
    hyperseries::testing::Rng rng(11);
    for (int k = 0; k < 20; ++k) {
        const Rational a1 = hyperseries::testing::small_rational(rng);
        const Rational a2 = hyperseries::testing::small_rational(rng);
        const Rational d1 = hyperseries::testing::small_rational(rng, true);
        const Rational d2 = hyperseries::testing::small_rational(rng, true);
        const Hyperreal s1 = W(1, a1) + W(2, d1 / 2) - W(1, d1 / 2);
        const Hyperreal s2 = W(1, a2) + W(2, d2 / 2) - W(1, d2 / 2);
        EXPECT_EQ(ratio_principal(s1, s2), Hyperreal(d1 / d2));
    }
    const Hyperreal x = W(3) - Hyperreal(4);
    EXPECT_EQ(ratio_principal(x, x), Hyperreal(1));
    EXPECT_EQ(ratio_principal(W(0, Rational(1), Rational(2)) - Hyperreal(1), W()),
              Hyperreal::monomial(Rational(1), -1, Rational(2)));
    EXPECT_EQ(ratio_principal(Hyperreal(), W()), Hyperreal());
    EXPECT_THROW(ratio_principal(W(), Hyperreal()), division_by_zero);
}

TEST(Hyperreal, RatioPrincipalGrowthSanity) {
    // 2^n / n grows: the numeric ratio (2^n - 1)/n approaches 2^n * n^-1 in relative terms.
    for (int n : {10, 20, 40}) {
        const Rational exact = (Rational(2).pow(n) - Rational(1)) / Rational(n);
        const Rational mono = Rational(2).pow(n) / Rational(n);
        EXPECT_LT(((mono - exact) / mono).abs(), Rational(1, 1000));
    }
}

TEST(Hyperreal, EvalPolyAtShiftedOmega) {
    const Polynomial id{Rational(0), Rational(1)};
    EXPECT_EQ(eval_poly_at_shifted_omega(id, 1), W() + Hyperreal(1));
    EXPECT_EQ(eval_poly_at_shifted_omega(id, 0), W());
    // (w-1)^2/2 + (w-1)/2 = w^2/2 - w/2, expected coefficients by direct expansion
    const Polynomial tri{Rational(0), half, half};
    EXPECT_EQ(eval_poly_at_shifted_omega(tri, -1), W(2, half) - W(1, half));
    for (int n = 0; n < 10; ++n) {
        EXPECT_EQ(tri(Rational(n - 1)), half * Rational(n) * Rational(n) - half * Rational(n));
    }
}

// --- properties --------------------------------------------------------------

TEST(HyperrealProperties, RingLaws) {
    Rng rng(2024);
    for (int k = 0; k < 1000; ++k) {
        const Hyperreal x = hyperseries::testing::random_hyperreal(rng, 3);
        const Hyperreal y = hyperseries::testing::random_hyperreal(rng, 3);
        const Hyperreal z = hyperseries::testing::random_hyperreal(rng, 3);
        ASSERT_EQ(x + y, y + x);
        ASSERT_EQ(x * y, y * x);
        ASSERT_EQ((x + y) + z, x + (y + z));
        ASSERT_EQ((x * y) * z, x * (y * z));
        ASSERT_EQ(x * (y + z), x * y + x * z);
        ASSERT_EQ(x + Hyperreal(), x);
        ASSERT_EQ(x * Hyperreal(1), x);
    }
}

TEST(HyperrealProperties, CanonicalizationIdempotent) {
    Rng rng(99);
    for (int k = 0; k < 1000; ++k) {
        std::vector<HyperTerm> terms;
        for (int t = 0; t < 6; ++t) {
            terms.push_back(hyperseries::testing::random_term(rng));
            if (t % 2 == 0) {
                terms.push_back(terms.back()); // force duplicate keys
            }
        }
        const Hyperreal once = Hyperreal::from_terms(terms);
        ASSERT_EQ(Hyperreal::from_terms(once.terms()), once);
        for (std::size_t i = 1; i < once.terms().size(); ++i) {
            ASSERT_TRUE(dominance(once.terms()[i - 1], once.terms()[i]) > 0);
        }
        ASSERT_EQ(parse_hyperreal(format_hyperreal(once)), once);
    }
}

TEST(HyperrealProperties, OrderIsTotalAndCompatible) {
    Rng rng(5);
    for (int k = 0; k < 1000; ++k) {
        const Hyperreal x = hyperseries::testing::random_hyperreal(rng);
        const Hyperreal y = hyperseries::testing::random_hyperreal(rng);
        const Hyperreal z = hyperseries::testing::random_hyperreal(rng);
        const auto xy = x <=> y;
        ASSERT_EQ(xy == 0, x == y);
        ASSERT_EQ(y <=> x, 0 <=> xy);
        ASSERT_EQ((x + z) <=> (y + z), xy);
        const Hyperreal positive = Hyperreal::from_terms({hyperseries::testing::random_term(rng)});
        if (positive.sign() > 0) {
            ASSERT_EQ((x * positive) <=> (y * positive), xy);
        }
        if (x < y && y < z) {
            ASSERT_LT(x, z);
        }
    }
}

TEST(HyperrealProperties, HaloIsEquivalence) {
    Rng rng(17);
    // tail strictly dominated by `lead`
    const auto below = [&rng](const HyperTerm& lead) {
        std::vector<HyperTerm> tail;
        for (int t = 0; t < 3; ++t) {
            HyperTerm cand = hyperseries::testing::random_term(rng);
            if (dominance(cand, lead) < 0) {
                tail.push_back(cand);
            }
        }
        return Hyperreal::from_terms(tail);
    };
    for (int k = 0; k < 1000; ++k) {
        const HyperTerm lead = hyperseries::testing::random_term(rng);
        const Hyperreal x = Hyperreal::from_terms({lead}) + below(lead);
        const Hyperreal y = Hyperreal::from_terms({lead}) + below(lead);
        const Hyperreal z = Hyperreal::from_terms({lead}) + below(lead);
        const Hyperreal other = hyperseries::testing::random_hyperreal(rng, 3);
        ASSERT_EQ(principal_value(principal_value(x)), principal_value(x));
        ASSERT_TRUE(same_halo(x, x));
        ASSERT_TRUE(same_halo(x, y) && same_halo(y, x));
        ASSERT_TRUE(same_halo(y, z) && same_halo(x, z));
        ASSERT_EQ(same_halo(x, other), same_halo(other, x));
        if (same_halo(x, other)) {
            ASSERT_TRUE(same_halo(other, z));
        }
    }
}

TEST(HyperrealProperties, DominanceMatchesFiniteGrowth) {
    // For single terms t1 != t2 the sign of f1(n) - f2(n), f(n) = c n^p b^n, must
    // settle on hyper_compare(t1, t2) for all n >= some N <= 1000.
    Rng rng(31);
    const std::int64_t horizon = 1100;
    int checked = 0;
    while (checked < 150) {
        const HyperTerm a = hyperseries::testing::random_term(rng);
        const HyperTerm b = hyperseries::testing::random_term(rng);
        if (a == b) {
            continue;
        }
        ++checked;
        const auto expected = Hyperreal::from_terms({a}) <=> Hyperreal::from_terms({b});
        std::int64_t last_disagreement = 0;
        for (std::int64_t n = 1; n <= horizon; ++n) {
            const Rational fa = a.coeff * Rational(n).pow(a.power) * a.base.pow(n);
            const Rational fb = b.coeff * Rational(n).pow(b.power) * b.base.pow(n);
            if (((fa - fb).sign() <=> 0) != expected) {
                last_disagreement = n;
            }
        }
        ASSERT_LT(last_disagreement, 1000) << "terms " << format_hyperreal(Hyperreal::from_terms({a})) << " vs "
                                           << format_hyperreal(Hyperreal::from_terms({b}));
    }
}
