#include <deltasets/bounds.hpp>
#include <deltasets/errors.hpp>
#include <deltasets/extremal.hpp>
#include <deltasets/generators.hpp>
#include <deltasets/oracles.hpp>
#include <deltasets/partition.hpp>

#include <gtest/gtest.h>

#include "brute.hpp"

#include <cmath>

using namespace deltasets;

namespace {

// Largest integer x with x <= c + sqrt(c^2 + d), found by search over x.
std::size_t floor_c_plus_root(const Rational& c, const Rational& d, std::size_t cap) {
    std::size_t best = 0;
    for (std::size_t x = 0; x <= cap; ++x) {
        const Rational t = Rational(static_cast<unsigned long>(x)) - c;
        if (t <= 0 || t * t <= c * c + d) best = x;
    }
    return best;
}

std::size_t thm55_oracle(const Graph& g, std::uint64_t mask) {
    const std::size_t n = g.n();
    Rational s = 0;
    std::size_t outside = 0;
    for (Vertex v = 0; v < n; ++v)
        if (!(mask >> v & 1)) {
            s += static_cast<unsigned long>(g.degree(v));
            ++outside;
        }
    if (outside) s /= static_cast<unsigned long>(outside);
    const Rational nn = static_cast<unsigned long>(n);
    const Rational c = (nn - s) / 2;
    return floor_c_plus_root(c, nn * s - 2 * Rational(static_cast<unsigned long>(g.edge_count())), 2 * n + 2);
}

// Least r with D_k <= n (r-1)/r, checked in floating point.
std::size_t lb_dk_float(const Graph& g, unsigned k) {
    const double n = static_cast<double>(g.n());
    double sum = 0;
    for (std::uint32_t d : brute::degrees(g)) sum += std::pow(static_cast<double>(d), k);
    const double dk = std::pow(sum / n, 1.0 / k);
    return static_cast<std::size_t>(std::ceil(n / (n - dk) - 1e-9));
}

}  // namespace

TEST(SimpleBounds, Examples) {
    EXPECT_EQ(lb_avg(cycle_graph(5)), 2u);
    EXPECT_EQ(ub_maxdeg(cycle_graph(5)), 2u);
    EXPECT_EQ(ub_maxdeg(star_graph(3)), 4u);
    EXPECT_EQ(lb_dk(cycle_graph(5), 3), 2u);
    for (std::size_t n = 1; n <= 9; ++n) {
        EXPECT_EQ(lb_avg(complete_graph(n)), n);
        EXPECT_EQ(ub_maxdeg(complete_graph(n)), n);
        EXPECT_EQ(lb_avg(empty_graph(n)), 1u);
        for (unsigned k = 1; k <= 6; ++k) {
            EXPECT_EQ(lb_dk(complete_graph(n), k), n);
            EXPECT_EQ(lb_dk(empty_graph(n), k), 1u);
        }
    }
    EXPECT_THROW(lb_avg(empty_graph(0)), DomainError);
    EXPECT_THROW(lb_dk(cycle_graph(5), 0), DomainError);
}

TEST(SimpleBounds, LbDkMatchesFloatingPointAwayFromTies) {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const Graph g = gen_gnp(11, 0.15 * static_cast<double>(seed % 6), seed);
        for (unsigned k = 1; k <= 8; ++k) {
            const double n = 11.0;
            double sum = 0;
            for (std::uint32_t d : brute::degrees(g)) sum += std::pow(static_cast<double>(d), k);
            const double ratio = n / (n - std::pow(sum / n, 1.0 / k));
            if (std::abs(ratio - std::round(ratio)) < 1e-7) continue;
            ASSERT_EQ(lb_dk(g, k), lb_dk_float(g, k)) << "seed " << seed << " k " << k;
        }
        ASSERT_EQ(lb_dk(g, 1), lb_avg(g));
    }
}

TEST(SimpleBounds, ChainOnAllSmallGraphs) {
    for (std::size_t n = 1; n <= 6; ++n)
        enumerate_graphs(n, [&](std::uint64_t code, const Graph& g) {
            const std::size_t phi = brute::phi(g, brute::Kind::small);
            ASSERT_LE(lb_avg(g), phi) << code;
            ASSERT_LE(phi, ub_maxdeg(g)) << code;
            std::size_t previous = 0;
            for (unsigned k = 1; k <= 6; ++k) {
                const std::size_t b = lb_dk(g, k);
                ASSERT_GE(b, previous);
                previous = b;
            }
            ASSERT_LE(caro_wei(g), Rational(static_cast<unsigned long>(brute::clique(g)))) << code;
        });
}

TEST(CaroWei, Examples) {
    EXPECT_EQ(caro_wei(complete_graph(6)), 6);
    EXPECT_EQ(caro_wei(empty_graph(6)), 1);
    EXPECT_EQ(caro_wei(star_graph(3)), 2);
    EXPECT_EQ(caro_wei(cycle_graph(5)), Rational(5, 3));
}

TEST(Applicability, Examples) {
    KnownValues none;
    const Applicability a = applicability(2, BoundTarget::phi(), none);
    EXPECT_TRUE(a.applicable);
    EXPECT_EQ(a.justification, "Cor 4.3");

    KnownValues two;
    two.phi_s = [](unsigned) -> std::optional<std::size_t> { return 2; };
    two.phi = 2;
    const Applicability b = applicability(4, BoundTarget::phi_s(5), two);
    EXPECT_FALSE(b.applicable);
    EXPECT_EQ(b.justification, "Cor 4.7 precondition");

    const Applicability c = applicability(1, BoundTarget::phi_s(1), none);
    EXPECT_TRUE(c.applicable);
    EXPECT_EQ(c.justification, "Prop 1.2");
}

TEST(Applicability, Ledger) {
    KnownValues three;
    three.phi_s = [](unsigned) -> std::optional<std::size_t> { return 3; };
    three.phi = 3;
    EXPECT_EQ(applicability(1, BoundTarget::phi_s(4), three).justification, "Prop 1.5");
    EXPECT_EQ(applicability(1, BoundTarget::phi(), three).justification, "Prop 1.1");
    EXPECT_EQ(applicability(2, BoundTarget::phi_s(2), three).justification, "Cor 4.2");
    EXPECT_EQ(applicability(3, BoundTarget::phi_s(3), three).justification, "Cor 4.5");
    EXPECT_EQ(applicability(3, BoundTarget::phi(), three).justification, "Cor 4.6");
    EXPECT_EQ(applicability(4, BoundTarget::phi_s(4), three).justification, "Cor 4.7");
    EXPECT_EQ(applicability(4, BoundTarget::phi(), three).justification, "Cor 4.8");
    EXPECT_EQ(applicability(3, BoundTarget::phi_s(5), three).justification, "Cor 4.5");
    EXPECT_EQ(applicability(3, BoundTarget::phi_s(2), three).justification, "Cor 4.1");
    EXPECT_EQ(applicability(5, BoundTarget::phi_s(2), three).justification, "Cor 4.1 precondition");
    EXPECT_FALSE(applicability(5, BoundTarget::phi_s(2), three).applicable);
    EXPECT_EQ(applicability(3, BoundTarget::phi(), KnownValues{}).justification, "Cor 4.6");
    EXPECT_EQ(applicability(6, BoundTarget::phi(), KnownValues{}).justification, "Cor 4.4 precondition");

    KnownValues phi4_two;
    phi4_two.phi_s = [](unsigned s) -> std::optional<std::size_t> { return s == 4 ? 2 : 5; };
    phi4_two.phi = 5;
    const Applicability remark = applicability(4, BoundTarget::phi(), phi4_two);
    EXPECT_TRUE(remark.applicable);
    EXPECT_EQ(remark.justification, "Remark 4.2");
    EXPECT_EQ(BoundTarget::phi_s(3).label(), "phi^(3)");
    EXPECT_EQ(BoundTarget::phi().label(), "phi");
}

TEST(Thm32, Examples) {
    const Graph c5 = cycle_graph(5);
    Partition p{{{0, 1, 2}, {3, 4}}, Smallness::delta(2)};
    ASSERT_TRUE(certify(c5, p));
    EXPECT_TRUE(thm32_check(c5, p, 2));

    const Graph k4 = complete_graph(4);
    Partition singles{{{0}, {1}, {2}, {3}}, Smallness::delta(4)};
    ASSERT_TRUE(certify(k4, singles));
    EXPECT_TRUE(thm32_check(k4, singles, 4));

    const Graph e = empty_graph(5);
    Partition whole{{{0, 1, 2, 3, 4}}, Smallness::delta(1)};
    ASSERT_TRUE(certify(e, whole));
    EXPECT_TRUE(thm32_check(e, whole, 1));
    EXPECT_THROW(thm32_check(e, whole, 2), DomainError);

    Partition uncertified{{{0, 1, 2}, {3, 4}}, Smallness::delta(2)};
    EXPECT_THROW(thm32_check(c5, uncertified, 2), DomainError);
}

TEST(Thm32, HoldsOnOptimalPartitions) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const Graph g = gen_gnp(9, 0.1 + 0.02 * static_cast<double>(seed), seed);
        for (unsigned k = 1; k <= 5; ++k) {
            PhiResult r = phi_exact(g, Smallness::delta(k));
            if (k > r.value) continue;
            ASSERT_TRUE(thm32_check(g, r.witness, k)) << "seed " << seed << " k " << k;
        }
    }
}

TEST(Thm55, Examples) {
    const Graph e = empty_graph(6);
    EXPECT_EQ(thm55_bound(e, VertexSet::all(e)), 6u);
    const Graph c5 = cycle_graph(5);
    EXPECT_EQ(thm55_bound(c5, VertexSet(c5, {0, 1, 2})), 3u);
    EXPECT_EQ(thm55_bound(c5, VertexSet(c5, {0, 2, 4})), 3u);
    const Graph star = star_graph(3);
    EXPECT_EQ(thm55_bound(star, VertexSet(star, {1, 2, 3})), 3u);
    EXPECT_THROW(thm55_bound(star, VertexSet(star, {0, 1, 2})), DomainError);
}

TEST(Thm55, MatchesOracleAndBoundsEveryDelta1SmallSet) {
    for (std::size_t n = 1; n <= 6; ++n)
        enumerate_graphs(n, [&](std::uint64_t code, const Graph& g) {
            const auto deg = brute::degrees(g);
            for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
                if (!brute::feasible(deg, m, brute::Kind::delta, 1)) continue;
                const std::size_t b = thm55_bound(g, VertexSet::from_mask(g, m));
                ASSERT_EQ(b, thm55_oracle(g, m)) << code << " mask " << m;
                ASSERT_GE(b, static_cast<std::size_t>(__builtin_popcountll(m))) << code << " mask " << m;
            }
        });
}

TEST(Cor56, Examples) {
    EXPECT_EQ(cor56_bounds(cycle_graph(5)).bound1, 3u);
    for (std::size_t n = 1; n <= 8; ++n) {
        EXPECT_EQ(cor56_bounds(complete_graph(n)).bound1, 1u);
        EXPECT_EQ(cor56_bounds(empty_graph(n)).bound2, n);
    }
}

TEST(Cor56, MatchesOracleAndBoundsAlpha1) {
    for (std::size_t n = 1; n <= 6; ++n)
        enumerate_graphs(n, [&](std::uint64_t code, const Graph& g) {
            const Cor56Bounds c = cor56_bounds(g);
            const Rational nn = static_cast<unsigned long>(n);
            const Rational top = static_cast<unsigned long>(g.max_degree());
            const Rational twice_e = 2 * Rational(static_cast<unsigned long>(g.edge_count()));
            ASSERT_EQ(c.bound1, floor_c_plus_root((nn - top) / 2, nn * top - twice_e, 2 * n + 2)) << code;
            ASSERT_EQ(c.bound2, floor_c_plus_root(Rational(1, 2), nn * nn - nn - twice_e, 2 * n + 2)) << code;
            const std::size_t a1 = brute::max_subset(g, brute::Kind::delta, 1);
            ASSERT_LE(a1, c.bound1) << code;
            ASSERT_LE(c.bound1, c.bound2) << code;
        });
}

TEST(FloorHalfRoot, Exact) {
    for (long u = 0; u < 20; ++u)
        for (long t = 0; t < 200; t += 3)
            for (long m = 1; m < 5; ++m) {
                const double expected = std::floor((static_cast<double>(u) + std::sqrt(static_cast<double>(t))) /
                                                   static_cast<double>(m));
                ASSERT_EQ(floor_half_root(u, t, m), static_cast<long>(expected));
            }
}
