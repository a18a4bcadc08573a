#include <deltasets/errors.hpp>
#include <deltasets/generators.hpp>
#include <deltasets/setcalc.hpp>

#include <gtest/gtest.h>

#include "brute.hpp"

#include <cmath>

using namespace deltasets;

TEST(PowerSum, Examples) {
    const Graph c5 = cycle_graph(5);
    const Graph star = star_graph(3);
    EXPECT_EQ(power_sum(c5, VertexSet::all(c5), 3).value, 40);
    EXPECT_EQ(power_sum(star, VertexSet::all(star), 2).value, 12);
    EXPECT_EQ(power_sum(star, VertexSet(star), 7).value, 0);
}

TEST(PowerSum, NoRoundingAtLargeK) {
    const Graph g = complete_graph(30);
    const PowerSum p = power_sum(g, VertexSet::all(g), 40);
    BigInt expected;
    mpz_ui_pow_ui(expected.get_mpz_t(), 29, 40);
    EXPECT_EQ(p.value, expected * 30);
}

TEST(PowerSum, RejectsForeignSet) {
    const Graph a = cycle_graph(5);
    const Graph b = cycle_graph(5);
    EXPECT_THROW(power_sum(b, VertexSet::all(a), 2), InputError);
}

TEST(MeanDk, Examples) {
    const Graph c5 = cycle_graph(5);
    const Graph star = star_graph(3);
    for (unsigned k = 1; k <= 30; ++k) EXPECT_DOUBLE_EQ(mean_dk(c5, VertexSet::all(c5), k), 2.0);
    EXPECT_DOUBLE_EQ(mean_dk(star, VertexSet::all(star), 1), 1.5);
    EXPECT_NEAR(mean_dk(star, VertexSet::all(star), 2), std::sqrt(3.0), 1e-12);
    EXPECT_THROW(mean_dk(star, VertexSet(star), 1), DomainError);
}

TEST(MeanDk, LargeExponentDoesNotOverflow) {
    const Graph g = star_graph(200);
    const double d = mean_dk(g, VertexSet::all(g), 500);
    EXPECT_TRUE(std::isfinite(d));
    EXPECT_GT(d, 190.0);
    EXPECT_LE(d, 200.0);
}

TEST(IsSmall, Examples) {
    const Graph star = star_graph(3);
    const SmallnessVerdict mixed = is_small(star, VertexSet(star, {0, 1}));
    EXPECT_FALSE(mixed.holds);
    ASSERT_TRUE(mixed.witness.has_value());
    EXPECT_EQ(*mixed.witness, 0u);
    const SmallnessVerdict leaves = is_small(star, VertexSet(star, {1, 2, 3}));
    EXPECT_TRUE(leaves.holds);
    EXPECT_FALSE(leaves.witness.has_value());
    EXPECT_TRUE(is_small(star, VertexSet(star)).holds);
}

TEST(IsDeltaKSmall, Examples) {
    const Graph star = star_graph(3);
    const VertexSet pair(star, {0, 1});
    const SmallnessVerdict k1 = is_delta_k_small(star, pair, 1);
    EXPECT_TRUE(k1.holds);
    EXPECT_EQ(k1.slack, 0);  // 3 + 1 = 2 * (4 - 2)
    const SmallnessVerdict k2 = is_delta_k_small(star, pair, 2);
    EXPECT_FALSE(k2.holds);
    EXPECT_EQ(k2.slack, -2);  // 8 - 10
    EXPECT_FALSE(k2.witness.has_value());
    for (unsigned k = 1; k <= 10; ++k)
        for (Vertex v = 0; v < 4; ++v) EXPECT_TRUE(is_delta_k_small(star, VertexSet(star, {v}), k).holds);
    EXPECT_TRUE(is_delta_k_small(star, VertexSet(star), 3).holds);
    EXPECT_THROW(Smallness::delta(0), DomainError);
}

TEST(IsAlphaSmall, Examples) {
    const Graph k5 = complete_graph(5);
    EXPECT_FALSE(is_alpha_small(k5, VertexSet(k5, {1, 3})).holds);
    const Graph star = star_graph(3);
    const SmallnessVerdict centre = is_alpha_small(star, VertexSet(star, {0}));
    EXPECT_TRUE(centre.holds);
    EXPECT_EQ(centre.slack, 0);
    const Graph e = empty_graph(6);
    EXPECT_TRUE(is_alpha_small(e, VertexSet::all(e)).holds);
    EXPECT_EQ(is_alpha_small(e, VertexSet::all(e)).slack, 0);
}

TEST(Smallness, Labels) {
    EXPECT_EQ(Smallness::small().label(), "small");
    EXPECT_EQ(Smallness::delta(3).label(), "delta_3");
    EXPECT_EQ(Smallness::alpha().label(), "alpha");
}

// A delta_1-small set that is not delta_2-small: the implication between
// consecutive exponents runs from k to k-1 only.
TEST(Monotonicity, ConverseFailsOnTheStar) {
    const Graph star = star_graph(3);
    const VertexSet pair(star, {0, 1});
    EXPECT_TRUE(is_delta_k_small(star, pair, 1).holds);
    EXPECT_FALSE(is_delta_k_small(star, pair, 2).holds);
}

TEST(Monotonicity, AllSubsetsOfAllSmallGraphs) {
    for (std::size_t n = 1; n <= 5; ++n)
        enumerate_graphs(n, [&](std::uint64_t, const Graph& g) {
            for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
                const VertexSet w = VertexSet::from_mask(g, m);
                const bool small = is_small(g, w).holds;
                bool previous = true;
                for (unsigned k = 1; k <= 8; ++k) {
                    const bool now = is_delta_k_small(g, w, k).holds;
                    ASSERT_TRUE(!now || previous) << "delta_" << k << " without delta_" << k - 1;
                    ASSERT_TRUE(!small || now) << "small but not delta_" << k;
                    if (g.is_regular()) ASSERT_EQ(now, small);
                    previous = now;
                }
            }
        });
}

TEST(Predicates, AgreeWithIndependentOracle) {
    for (std::size_t n = 1; n <= 5; ++n)
        enumerate_graphs(n, [&](std::uint64_t, const Graph& g) {
            const auto deg = brute::degrees(g);
            for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
                const VertexSet w = VertexSet::from_mask(g, m);
                ASSERT_EQ(is_small(g, w).holds, brute::feasible(deg, m, brute::Kind::small));
                ASSERT_EQ(is_alpha_small(g, w).holds, brute::feasible(deg, m, brute::Kind::alpha));
                for (unsigned k = 1; k <= 6; ++k)
                    ASSERT_EQ(is_delta_k_small(g, w, k).holds, brute::feasible(deg, m, brute::Kind::delta, k));
            }
        });
}

TEST(Predicates, ExactAgreesWithFloatAwayFromTies) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const Graph g = gen_gnp(12, 0.45, seed);
        Rng rng(seed);
        for (int trial = 0; trial < 200; ++trial) {
            const std::uint64_t m = rng() & ((1u << 12) - 1);
            if (!m) continue;
            const VertexSet w = VertexSet::from_mask(g, m);
            for (unsigned k = 1; k <= 12; ++k) {
                const double margin = static_cast<double>(g.n() - w.size()) - mean_dk(g, w, k);
                if (std::abs(margin) <= 1e-6) continue;
                ASSERT_EQ(is_delta_k_small(g, w, k).holds, margin > 0);
            }
        }
    }
}

TEST(FeasibilityTable, MatchesPredicatesOnEveryMask) {
    std::vector<Graph> graphs;
    for (std::uint64_t seed = 0; seed < 6; ++seed) graphs.push_back(gen_gnp(10, 0.2 + 0.1 * seed, seed));
    graphs.push_back(star_graph(9));
    graphs.push_back(complete_graph(8));
    for (const Graph& g : graphs) {
        for (Smallness kind : {Smallness::small(), Smallness::alpha(), Smallness::delta(1), Smallness::delta(2),
                               Smallness::delta(7), Smallness::delta(40)}) {
            const FeasibilityTable t = feasibility_table(g, kind);
            ASSERT_EQ(t.size(), std::size_t{1} << g.n());
            for (std::uint64_t m = 0; m < t.size(); ++m)
                ASSERT_EQ(t[m] != 0, check_smallness(g, VertexSet::from_mask(g, m), kind).holds)
                    << kind.label() << " mask " << m;
        }
    }
}

TEST(FeasibilityTable, BigIntegerPathAgrees) {
    // n (n-1)^k overflows 128 bits, forcing the arbitrary-precision kernel.
    const Graph g = gen_gnp(14, 0.5, 11);
    const FeasibilityTable t = feasibility_table(g, Smallness::delta(60));
    for (std::uint64_t m = 0; m < t.size(); m += 7)
        ASSERT_EQ(t[m] != 0, is_delta_k_small(g, VertexSet::from_mask(g, m), 60).holds);
}

TEST(FeasibilityTable, RefusesOversizedGraphs) {
    EXPECT_THROW(feasibility_table(empty_graph(kMaxTableVertices + 1), Smallness::small()), LimitError);
}

TEST(DegreeForms, MatchSetForms) {
    const Graph g = gen_gnp(9, 0.5, 2);
    for (std::uint64_t m = 0; m < 512; ++m) {
        const VertexSet w = VertexSet::from_mask(g, m);
        const auto d = w.degrees(g);
        ASSERT_EQ(small_degrees(d, 9), is_small(g, w).holds);
        ASSERT_EQ(alpha_small_degrees(d, 9), is_alpha_small(g, w).holds);
        ASSERT_EQ(delta_k_small_degrees(d, 9, 3), is_delta_k_small(g, w, 3).holds);
        ASSERT_EQ(feasible_degrees(d, 9, Smallness::delta(5)), is_delta_k_small(g, w, 5).holds);
    }
}
