#pragma once

#include "deltasets/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace deltasets {

/// Vertices sorted by ascending degree, ties broken by ascending id.
struct DegreeOrder {
    std::vector<Vertex> order;
    std::vector<std::uint32_t> degrees;  // degrees along `order`
};

DegreeOrder degree_order(const Graph& g);
DegreeOrder degree_order(std::span<const std::uint32_t> degrees);

/// alpha^(k)(G): the largest s such that the s lowest-degree vertices form a
/// delta_k-small set. A largest delta_k-small set can always be taken to be
/// such a prefix, since swapping a member for a lower-degree vertex never
/// raises D_k. Returns at least 1 for n >= 1.
std::size_t alpha_k(const Graph& g, unsigned k);

/// S(G): the largest small set, again attained by a degree-order prefix.
std::size_t s_small(const Graph& g);

/// Least K >= 1 with size * (2 top - 1)^K < (2 top)^K. A set of `size`
/// vertices with maximum degree `top` >= 1 that is not small is not
/// delta_k-small for any k >= K: then top - 1/2 <= D_k(W) while
/// n - |W| <= top - 1.
unsigned certificate_exponent(std::size_t size, std::uint32_t top);

inline constexpr unsigned kDefaultStabilizationCap = 1u << 16;

class StabilizationError : public std::runtime_error {
public:
    StabilizationError(const std::string& what, std::vector<std::size_t> tail)
        : std::runtime_error(what), tail_(std::move(tail)) {}

    /// alpha^(k) at the last probed exponents, still above S(G).
    const std::vector<std::size_t>& tail() const noexcept { return tail_; }

private:
    std::vector<std::size_t> tail_;
};

struct AlphaCurve {
    std::vector<std::size_t> values;  // values[k-1] = alpha^(k)(G), k = 1..k_max
    std::size_t plateau = 0;          // S(G)
    unsigned k0_alpha = 1;            // least k with alpha^(k)(G) == S(G)

    std::size_t at(unsigned k) const { return values.at(k - 1); }
};

/// The staircase alpha^(1) >= alpha^(2) >= ... and its plateau S(G). The
/// search for k0_alpha continues past k_max up to the certificate exponent
/// of the non-small degree-order prefixes; if that exceeds `hard_cap` a
/// StabilizationError is thrown.
AlphaCurve alpha_curve(const Graph& g, unsigned k_max,
                       unsigned hard_cap = kDefaultStabilizationCap);

inline constexpr std::size_t kDefaultExhaustiveLimit = 18;

struct UniversalIndex {
    /// Least k* such that for every k >= k* each delta_k-small set is small.
    unsigned k0 = 1;
    /// For k0 >= 2: a set that is delta_(k0-1)-small but not small.
    std::vector<Vertex> witness;
};

/// Exhaustive over all vertex subsets, grouped by degree multiset (feasibility
/// depends on nothing else). For each non-small multiset the largest k at
/// which it is still delta_k-small is found by binary search below its
/// certificate exponent; delta_k-smallness is monotone in k, so this is sound.
UniversalIndex k0_universal_detail(const Graph& g,
                                   std::size_t limit = kDefaultExhaustiveLimit);
UniversalIndex k0_universal_detail(std::span<const std::uint32_t> degrees,
                                   std::size_t limit = kDefaultExhaustiveLimit);

inline unsigned k0_universal(const Graph& g, std::size_t limit = kDefaultExhaustiveLimit) {
    return k0_universal_detail(g, limit).k0;
}

}  // namespace deltasets
