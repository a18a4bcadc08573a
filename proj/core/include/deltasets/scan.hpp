#pragma once

#include "deltasets/graph.hpp"
#include "deltasets/partition.hpp"
#include "deltasets/setcalc.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace deltasets {

/// phi^alpha against the phi^(k) staircase for one graph.
struct ScanRecord {
    std::uint64_t index = 0;
    std::string id;
    std::size_t n = 0;
    std::optional<std::string> skipped;

    std::size_t phi_alpha = 0;
    std::vector<std::size_t> phi_curve;  // phi^(k) for k = 1..k0_phi
    std::size_t phi = 0;
    std::optional<unsigned> matched_k;   // least k with phi^(k) == phi^alpha

    /// Set for candidates (no matched_k): the independent recomputation ran,
    /// and whether it reproduced the gap.
    bool rechecked = false;
    bool confirmed = false;

    bool candidate() const { return !skipped && !matched_k; }
};

struct ScanOptions {
    std::size_t exact_limit = kDefaultExactLimit;
    /// Candidates up to this size are rechecked by enumerating every set
    /// partition; larger ones by the subset DP over predicate-built tables.
    std::size_t bell_limit = 10;
};

/// The phi family depends only on the degree multiset, so results are
/// memoized by sorted degree sequence. Not thread-safe: one per worker.
class ScanCache {
public:
    struct Entry {
        std::size_t phi_alpha;
        std::vector<std::size_t> curve;
        std::size_t phi;
    };
    const Entry& get(std::span<const std::uint32_t> degrees, std::size_t exact_limit);
    std::size_t size() const { return entries_.size(); }
    std::size_t hits() const { return hits_; }

private:
    std::map<std::vector<std::uint32_t>, Entry> entries_;
    std::size_t hits_ = 0;
};

ScanRecord scan_graph(const Graph& g, std::uint64_t index, const std::string& id,
                      const ScanOptions& options = {}, ScanCache* cache = nullptr);

/// Recomputes phi^alpha and the staircase from the VertexSet predicates with
/// a different solver and records whether the gap reproduces.
void recheck(const Graph& g, ScanRecord& record, const ScanOptions& options = {});

/// Minimum number of parts over all set partitions of {0..n-1} whose parts
/// all satisfy `feasible` (a vertex mask), by restricted growth strings.
std::size_t bell_min_partition(std::size_t n, const std::function<bool(std::uint64_t)>& feasible);

std::string scan_json(const ScanRecord& r);

}  // namespace deltasets
