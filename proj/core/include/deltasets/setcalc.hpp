#pragma once

// Degree power means and the three smallness predicates.
//
// A set W of an n-vertex graph is
//   small          if d(v) <= n - |W| for every v in W,
//   delta_k-small  if D_k(W) = (sum_{v in W} d(v)^k / |W|)^(1/k) <= n - |W|,
//   alpha-small    if sum_{v in W} 1 / (n - d(v)) <= 1.
// The empty set satisfies all three. Every decision is made in exact integer
// or rational arithmetic; mean_dk exists for display only.
//
// Direction of the power-mean implication: since D_{k-1}(W) <= D_k(W), a
// delta_k-small set is also delta_(k-1)-small. The converse fails in general
// (K_{1,3} with W = {centre, leaf} is delta_1-small but not delta_2-small).
// This direction is what makes phi^(k) non-decreasing and alpha^(k)
// non-increasing in k.

#include "deltasets/exact.hpp"
#include "deltasets/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace deltasets {

enum class SmallnessKind { small, delta_k, alpha };

/// Which predicate a set or a partition is held to.
struct Smallness {
    SmallnessKind kind = SmallnessKind::small;
    unsigned k = 0;  // exponent; only meaningful for delta_k

    static Smallness small() { return {SmallnessKind::small, 0}; }
    static Smallness delta(unsigned k);
    static Smallness alpha() { return {SmallnessKind::alpha, 0}; }

    /// "small", "delta_3", "alpha".
    std::string label() const;

    friend bool operator==(const Smallness&, const Smallness&) = default;
};

struct PowerSum {
    unsigned k = 1;
    BigInt value;
};

struct SmallnessVerdict {
    Smallness kind;
    bool holds = true;
    /// Maximal-degree violator; present only for a failed small check.
    std::optional<Vertex> witness;
    /// RHS - LHS of the defining inequality. For delta_k this is
    /// |W| (n-|W|)^k - sum d^k; for alpha 1 - sum 1/(n-d); for small
    /// (n-|W|) - max d.
    Rational slack;
};

PowerSum power_sum(const Graph& g, const VertexSet& w, unsigned k);

/// D_k(W) in floating point, factored through the maximum degree so large k
/// does not overflow. Throws DomainError for an empty set.
double mean_dk(const Graph& g, const VertexSet& w, unsigned k);

SmallnessVerdict is_small(const Graph& g, const VertexSet& w);
SmallnessVerdict is_delta_k_small(const Graph& g, const VertexSet& w, unsigned k);
SmallnessVerdict is_alpha_small(const Graph& g, const VertexSet& w);
SmallnessVerdict check_smallness(const Graph& g, const VertexSet& w, Smallness kind);

// Degree-multiset forms. Feasibility of a set depends only on the degrees of
// its members, its size and n; these take the member degrees directly.

bool small_degrees(std::span<const std::uint32_t> degrees, std::size_t n);
bool delta_k_small_degrees(std::span<const std::uint32_t> degrees, std::size_t n, unsigned k);
bool alpha_small_degrees(std::span<const std::uint32_t> degrees, std::size_t n);
bool feasible_degrees(std::span<const std::uint32_t> degrees, std::size_t n, Smallness kind);

/// Hard ceiling for subset tables (2^n entries).
inline constexpr std::size_t kMaxTableVertices = 22;

/// feasible[mask] == 1 iff the vertex set `mask` passes `kind`. Size 2^n.
/// Uses 128-bit sums when n (n-1)^k fits, GMP otherwise.
using FeasibilityTable = std::vector<std::uint8_t>;
FeasibilityTable feasibility_table(const Graph& g, Smallness kind);
FeasibilityTable feasibility_table(std::span<const std::uint32_t> degrees, Smallness kind);

}  // namespace deltasets
