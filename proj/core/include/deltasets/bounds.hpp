#pragma once

#include "deltasets/exact.hpp"
#include "deltasets/graph.hpp"
#include "deltasets/partition.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>

namespace deltasets {

/// ceil(n / (n - D_1(G))) = ceil(n^2 / (n^2 - 2e)). Requires n >= 1.
std::size_t lb_avg(const Graph& g);

/// ceil(n / (n - Delta(G))). Requires n >= 1.
std::size_t ub_maxdeg(const Graph& g);

/// Least r >= 1 with r^k sum d^k <= n^(k+1) (r-1)^k, i.e. the least r with
/// D_k(G) <= n (r-1) / r; equals ceil(n / (n - D_k(G))) with no root taken.
std::size_t lb_dk(const Graph& g, unsigned k);
std::size_t lb_dk(std::span<const std::uint32_t> degrees, unsigned k);

/// Whether r parts of size n can carry the degree power sum: the exact form
/// of D_k(G) <= n (r-1) / r.
bool power_mean_fits(std::span<const std::uint32_t> degrees, unsigned k, std::size_t r);

/// sum_v 1 / (n - d(v)), a lower bound on omega(G).
Rational caro_wei(const Graph& g);

// ---------------------------------------------------------------------------
// Applicability ledger for the D_k lower bounds on phi^(s)(G) and phi(G).

struct BoundTarget {
    enum class Kind { phi_s, phi } kind = Kind::phi;
    unsigned s = 0;  // only for phi_s

    static BoundTarget phi_s(unsigned s) { return {Kind::phi_s, s}; }
    static BoundTarget phi() { return {Kind::phi, 0}; }

    /// "phi^(3)" or "phi".
    std::string label() const;
};

enum class Precondition {
    none,
    phi4_not_2,       // phi^(4)(G) != 2
    phi_not_2,        // phi(G) != 2
    k_within_target,  // k <= exact value of the target
};

/// One line of the ledger: "lb_dk(k) <= target" holds under `pre` and is
/// justified by `tag`. k == 0 matches every exponent.
struct LedgerRow {
    unsigned k;
    BoundTarget::Kind target;
    unsigned min_s;
    unsigned max_s;  // 0 = unbounded
    Precondition pre;
    const char* tag;
};

std::span<const LedgerRow> applicability_ledger();

/// Exact values the preconditions may consult. Unknown values make a
/// precondition that needs them fail.
struct KnownValues {
    std::function<std::optional<std::size_t>(unsigned)> phi_s;
    std::optional<std::size_t> phi;
};

struct Applicability {
    bool applicable = false;
    std::string justification;
};

/// First ledger row that matches (k, target) and whose precondition holds.
/// If rows match but none holds, the first failing row is named with a
/// " precondition" suffix.
Applicability applicability(unsigned k, BoundTarget target, const KnownValues& known);

// ---------------------------------------------------------------------------

/// For a partition of V(G) into r delta_k-small sets and k <= r, checks
/// r^k sum d^k <= n^(k+1) (r-1)^k. Throws DomainError when the partition is
/// not certified, a part is not delta_k-small, or k > r.
bool thm32_check(const Graph& g, const Partition& p, unsigned k);

/// Upper bound on |A| for a delta_1-small set A:
///   floor((n-s)/2 + sqrt((n-s)^2/4 + n s - 2e)),  s = D_1(V \ A),
/// with s = 0 when A = V. Evaluated exactly with an integer square root.
/// Throws DomainError if A is not delta_1-small.
std::size_t thm55_bound(const Graph& g, const VertexSet& a);

struct Cor56Bounds {
    std::size_t bound1 = 0;  // Delta-based
    std::size_t bound2 = 0;  // the weaker n-only form
};

Cor56Bounds cor56_bounds(const Graph& g);

/// floor((u + sqrt(t)) / m) for integers u, t >= 0, m > 0.
BigInt floor_half_root(const BigInt& u, const BigInt& t, const BigInt& m);

}  // namespace deltasets
