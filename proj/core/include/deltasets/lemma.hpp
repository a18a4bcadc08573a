#pragma once

// The simplex inequality
//     sum_i (1 - b_i) b_i^k <= ((r-1)/r)^k
// for b_1..b_r in [0,1] with sum b_i = r - 1 and 1 <= k <= r, checked exactly
// and fuzzed over random rational points of the constraint set.

#include "deltasets/exact.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace deltasets {

struct SimplexPoint {
    std::size_t r = 0;
    std::vector<Rational> betas;

    /// Validates b_i in [0,1] and sum b_i == r - 1 exactly; throws DomainError.
    static SimplexPoint make(std::vector<Rational> betas);
    /// The centre b_i = (r-1)/r, where both sides are equal.
    static SimplexPoint uniform(std::size_t r);
};

struct SimplexSides {
    Rational lhs;
    Rational rhs;
    bool holds = true;
};

/// Both sides for any k >= 1, without the k <= r hypothesis.
SimplexSides simplex_sides(const SimplexPoint& p, unsigned k);

/// Both sides under the hypothesis 1 <= k <= r; throws DomainError otherwise.
SimplexSides lemma31_check(const SimplexPoint& p, unsigned k);

struct FuzzOptions {
    std::size_t trials = 10000;
    std::uint64_t seed = 1;
    /// Samples are snapped to multiples of 1/denominator.
    std::uint64_t denominator = 1000000;
    bool hill_climb = true;
    /// Lift the k <= r guard (used for the r = 3, k = 4 case).
    bool allow_k_above_r = false;
};

struct FuzzResult {
    std::size_t r = 0;
    unsigned k = 0;
    std::size_t trials = 0;
    Rational rhs;
    std::optional<Rational> max_lhs;         // best sample; empty when trials == 0
    std::optional<SimplexPoint> max_point;
    std::optional<SimplexPoint> violation;   // first sample with lhs > rhs
    std::size_t violations = 0;
    std::optional<Rational> climb_lhs;       // exact value at the hill-climb optimum
    std::optional<SimplexPoint> climb_point;
};

/// Samples b = 1 - g with g uniform on the probability simplex (normalised
/// exponentials), snaps g to the 1/denominator grid by largest remainders so
/// the constraint holds exactly, and evaluates both sides exactly. The
/// optional hill climb starts at the best sample and moves mass between
/// coordinates in floating point; its end point is snapped and re-evaluated
/// exactly.
FuzzResult lemma31_fuzz(std::size_t r, unsigned k, const FuzzOptions& options = {});

}  // namespace deltasets
