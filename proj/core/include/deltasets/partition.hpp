#pragma once

#include "deltasets/graph.hpp"
#include "deltasets/setcalc.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace deltasets {

/// Disjoint nonempty parts covering V(G), each meant to pass `kind`.
struct Partition {
    std::vector<std::vector<Vertex>> parts;
    Smallness kind;
    bool certified = false;

    std::size_t size() const noexcept { return parts.size(); }
};

/// Checks that `p` covers V(G) with disjoint nonempty parts and that every
/// part passes its predicate (through the VertexSet-level predicates).
/// Sets and returns p.certified.
bool certify(const Graph& g, Partition& p);

enum class PhiMethod { exact_dp, greedy_upper_only };

const char* to_string(PhiMethod m);

struct PhiResult {
    std::size_t value = 0;
    Partition witness;
    PhiMethod method = PhiMethod::exact_dp;
};

inline constexpr std::size_t kDefaultExactLimit = 18;
inline constexpr std::size_t kMaxExactLimit = 22;

/// Exact phi for the given kind: the least number of parts in a partition
/// of V(G) into sets passing `kind`. Dynamic programming over vertex subsets;
/// each step fixes the lowest uncovered vertex inside the chosen part and
/// tries every feasible part containing it (delta_k feasibility is not
/// closed under taking subsets, so all submasks are visited: 3^n work).
PhiResult phi_exact(const Graph& g, Smallness kind, std::size_t limit = kDefaultExactLimit);

/// Same, from a degree sequence alone (vertex i has degree degrees[i]).
/// The witness is uncertified since there is no graph to certify against.
PhiResult phi_exact(std::span<const std::uint32_t> degrees, Smallness kind,
                    std::size_t limit = kDefaultExactLimit);

/// Minimum part count given a precomputed feasibility table; fills `parts`
/// with the chosen masks when non-null.
std::size_t min_partition(const FeasibilityTable& feasible, std::size_t n,
                          std::vector<std::uint32_t>* parts = nullptr);

/// Upper bound: repeatedly removes the longest feasible prefix of the
/// remaining vertices in degree order.
PhiResult phi_greedy(const Graph& g, Smallness kind);

struct PhiCurve {
    std::vector<std::size_t> values;  // values[k-1] = phi^(k)(G)
    std::size_t phi = 0;              // phi(G), the small-set decomposition number
    unsigned k0_phi = 1;              // least k with phi^(k)(G) == phi(G)
    std::vector<Partition> witnesses; // optimal partition for each listed k
    Partition small_witness;

    std::size_t at(unsigned k) const { return values.at(k - 1); }
};

/// phi^(k) for k = 1..k_max and phi. With k_max == 0 the values run exactly
/// through k0_phi (the whole staircase). Otherwise k0_phi may lie past k_max
/// and is found by binary search below the universal stabilization index,
/// where the delta_k and small tables coincide.
PhiCurve phi_curve(const Graph& g, unsigned k_max, std::size_t limit = kDefaultExactLimit);
PhiCurve phi_curve(std::span<const std::uint32_t> degrees, unsigned k_max,
                   std::size_t limit = kDefaultExactLimit);

}  // namespace deltasets
