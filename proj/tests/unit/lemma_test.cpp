#include <deltasets/errors.hpp>
#include <deltasets/lemma.hpp>

#include <gtest/gtest.h>

using namespace deltasets;

namespace {

// Direct evaluation of sum (1 - b) b^k, independent of the library's kernel.
Rational direct_lhs(const std::vector<Rational>& betas, unsigned k) {
    Rational sum = 0;
    for (const Rational& b : betas) {
        Rational power = 1;
        for (unsigned i = 0; i < k; ++i) power *= b;
        sum += (1 - b) * power;
    }
    return sum;
}

}  // namespace

TEST(Lemma31, Examples) {
    const SimplexSides uniform = lemma31_check(SimplexPoint::make({Rational(2, 3), Rational(2, 3), Rational(2, 3)}), 2);
    EXPECT_EQ(uniform.lhs, Rational(4, 9));
    EXPECT_EQ(uniform.rhs, Rational(4, 9));
    EXPECT_TRUE(uniform.holds);

    const SimplexSides boundary = lemma31_check(SimplexPoint::make({Rational(1), Rational(0)}), 1);
    EXPECT_EQ(boundary.lhs, 0);
    EXPECT_EQ(boundary.rhs, Rational(1, 2));
    EXPECT_TRUE(boundary.holds);

    const SimplexSides mixed = lemma31_check(SimplexPoint::make({Rational(1), Rational(1, 2), Rational(1, 2)}), 2);
    EXPECT_EQ(mixed.lhs, Rational(1, 4));
    EXPECT_EQ(mixed.rhs, Rational(4, 9));
    EXPECT_TRUE(mixed.holds);
}

TEST(Lemma31, Validation) {
    EXPECT_THROW(SimplexPoint::make({Rational(1), Rational(1)}), DomainError);
    EXPECT_THROW(SimplexPoint::make({Rational(3, 2), Rational(-1, 2)}), DomainError);
    const SimplexPoint p = SimplexPoint::uniform(3);
    EXPECT_THROW(lemma31_check(p, 4), DomainError);
    EXPECT_THROW(lemma31_check(p, 0), DomainError);
    EXPECT_NO_THROW(simplex_sides(p, 4));
}

TEST(Lemma31, UniformPointIsEquality) {
    for (std::size_t r = 1; r <= 10; ++r)
        for (unsigned k = 1; k <= r; ++k) {
            const SimplexSides s = lemma31_check(SimplexPoint::uniform(r), k);
            EXPECT_EQ(s.lhs, s.rhs) << "r=" << r << " k=" << k;
        }
}

TEST(Lemma31, SidesMatchDirectEvaluation) {
    const std::vector<Rational> betas = {Rational(9, 10), Rational(7, 10), Rational(3, 5), Rational(4, 5)};
    const SimplexPoint p = SimplexPoint::make(betas);
    for (unsigned k = 1; k <= 4; ++k) {
        const SimplexSides s = lemma31_check(p, k);
        EXPECT_EQ(s.lhs, direct_lhs(betas, k));
        Rational rhs = 1;
        for (unsigned i = 0; i < k; ++i) rhs *= Rational(3, 4);
        EXPECT_EQ(s.rhs, rhs);
        EXPECT_TRUE(s.holds);
    }
}

TEST(Lemma31Fuzz, Campaigns) {
    FuzzOptions opt;
    opt.trials = 20000;
    opt.seed = 3;
    const FuzzResult a = lemma31_fuzz(4, 4, opt);
    EXPECT_EQ(a.violations, 0u);
    ASSERT_TRUE(a.max_lhs.has_value());
    EXPECT_LE(*a.max_lhs, Rational(81, 256));
    EXPECT_EQ(a.rhs, Rational(81, 256));
    ASSERT_TRUE(a.max_point.has_value());
    EXPECT_EQ(direct_lhs(a.max_point->betas, 4), *a.max_lhs);

    const FuzzResult b = lemma31_fuzz(5, 2, opt);
    EXPECT_EQ(b.violations, 0u);
    EXPECT_FALSE(b.violation.has_value());
}

TEST(Lemma31Fuzz, EmptyRun) {
    FuzzOptions opt;
    opt.trials = 0;
    const FuzzResult r = lemma31_fuzz(3, 3, opt);
    EXPECT_FALSE(r.max_lhs.has_value());
    EXPECT_FALSE(r.violation.has_value());
    EXPECT_EQ(r.violations, 0u);
}

TEST(Lemma31Fuzz, Deterministic) {
    FuzzOptions opt;
    opt.trials = 2000;
    opt.seed = 11;
    const FuzzResult a = lemma31_fuzz(6, 3, opt);
    const FuzzResult b = lemma31_fuzz(6, 3, opt);
    ASSERT_TRUE(a.max_lhs && b.max_lhs);
    EXPECT_EQ(*a.max_lhs, *b.max_lhs);
    EXPECT_EQ(a.climb_lhs, b.climb_lhs);
}

TEST(Lemma31Fuzz, KAboveRNeedsOptIn) {
    FuzzOptions opt;
    opt.trials = 100;
    EXPECT_THROW(lemma31_fuzz(3, 4, opt), DomainError);
    opt.allow_k_above_r = true;
    opt.trials = 5000;
    const FuzzResult r = lemma31_fuzz(3, 4, opt);
    EXPECT_EQ(r.rhs, Rational(16, 81));
    EXPECT_EQ(r.violations, 0u);
}

TEST(Lemma31Fuzz, HillClimbStaysFeasible) {
    FuzzOptions opt;
    opt.trials = 500;
    opt.seed = 5;
    const FuzzResult r = lemma31_fuzz(5, 5, opt);
    ASSERT_TRUE(r.climb_point.has_value());
    Rational sum = 0;
    for (const Rational& b : r.climb_point->betas) {
        EXPECT_GE(b, 0);
        EXPECT_LE(b, 1);
        sum += b;
    }
    EXPECT_EQ(sum, 4);
    EXPECT_LE(*r.climb_lhs, r.rhs);
}
