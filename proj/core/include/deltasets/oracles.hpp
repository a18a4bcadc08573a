#pragma once

#include "deltasets/graph.hpp"

#include <cstddef>

namespace deltasets {

inline constexpr std::size_t kDefaultCliqueLimit = 20;
inline constexpr std::size_t kDefaultChromaticLimit = 16;

/// omega(G) by branch and bound with greedy-colouring bounds. n <= limit <= 64.
std::size_t clique_number(const Graph& g, std::size_t limit = kDefaultCliqueLimit);

/// alpha(G) = omega of the complement.
std::size_t independence_number(const Graph& g, std::size_t limit = kDefaultCliqueLimit);

/// chi(G): tries k = omega, omega+1, ... below the DSatur upper bound with an
/// exact DSatur-ordered backtracking colourer.
std::size_t chromatic_number(const Graph& g, std::size_t limit = kDefaultChromaticLimit);

}  // namespace deltasets
