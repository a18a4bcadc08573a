#pragma once

#include "deltasets/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>

namespace deltasets {

using Rng = std::mt19937_64;

/// Uniform double in [0, 1) built from the top 53 bits; identical across
/// standard libraries, unlike std::uniform_real_distribution.
inline double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

/// Uniform integer in [0, bound) by rejection; portable across libraries.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

/// Erdos-Renyi G(n, p). Same (n, p, seed) gives the same graph.
Graph gen_gnp(std::size_t n, double p, std::uint64_t seed);

/// Random r-regular graph by sequential pairing with restarts. Degrees above
/// (n-1)/2 are generated as the complement of an (n-1-r)-regular graph.
Graph gen_regular(std::size_t n, std::size_t r, std::uint64_t seed,
                  std::size_t retry_budget = 10000);

inline constexpr std::size_t kDefaultEnumerateLimit = 8;

/// Number of labeled graphs on n vertices, 2^(n(n-1)/2). Requires n <= 11.
std::uint64_t labeled_graph_count(std::size_t n);

/// Graph whose edge set is the bit pattern `code` over the pairs
/// (0,1), (0,2), ..., (0,n-1), (1,2), ... in that order.
Graph graph_from_code(std::size_t n, std::uint64_t code);

/// Streams every labeled graph on n vertices once, by ascending code.
class GraphEnumerator {
public:
    explicit GraphEnumerator(std::size_t n, std::size_t limit = kDefaultEnumerateLimit);

    std::size_t n() const noexcept { return n_; }
    std::uint64_t total() const noexcept { return total_; }
    /// Code of the graph the next call to next() yields.
    std::uint64_t position() const noexcept { return code_; }

    bool next(Graph& out);

private:
    std::size_t n_;
    std::uint64_t total_;
    std::uint64_t code_ = 0;
};

/// Calls fn(code, graph) for every labeled graph on n vertices.
void enumerate_graphs(std::size_t n, const std::function<void(std::uint64_t, const Graph&)>& fn,
                      std::size_t limit = kDefaultEnumerateLimit);

}  // namespace deltasets
