#include "deltasets/generators.hpp"

#include "deltasets/errors.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace deltasets {

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    if (bound == 0) throw DomainError("uniform_below needs a positive bound");
    const std::uint64_t limit = Rng::max() - Rng::max() % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

Graph gen_gnp(std::size_t n, double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) throw DomainError("edge probability must lie in [0, 1]");
    Rng rng(seed);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (uniform01(rng) < p) edges.push_back({u, v});
    return from_edge_list(n, edges);
}

namespace {

// One attempt of the sequential pairing model: repeatedly join two random
// free points on distinct non-adjacent vertices. Returns false when stuck.
bool try_regular(std::size_t n, std::size_t r, Rng& rng, std::vector<Edge>& edges) {
    std::vector<Vertex> points;
    points.reserve(n * r);
    for (Vertex v = 0; v < n; ++v)
        for (std::size_t i = 0; i < r; ++i) points.push_back(v);
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    edges.clear();

    while (!points.empty()) {
        bool placed = false;
        for (int attempt = 0; attempt < 64 && !placed; ++attempt) {
            std::size_t i = uniform_below(rng, points.size());
            std::size_t j = uniform_below(rng, points.size());
            Vertex a = points[i], b = points[j];
            if (i == j || a == b || adj[a][b]) continue;
            adj[a][b] = adj[b][a] = true;
            edges.push_back({a, b});
            if (i < j) std::swap(i, j);
            points[i] = points.back();
            points.pop_back();
            points[j] = points.back();
            points.pop_back();
            placed = true;
        }
        if (placed) continue;
        // Random probing failed; check whether any suitable pair remains.
        bool any = false;
        for (std::size_t i = 0; i < points.size() && !any; ++i)
            for (std::size_t j = i + 1; j < points.size() && !any; ++j)
                any = points[i] != points[j] && !adj[points[i]][points[j]];
        if (!any) return false;
    }
    return true;
}

}  // namespace

Graph gen_regular(std::size_t n, std::size_t r, std::uint64_t seed, std::size_t retry_budget) {
    if (n == 0) throw DomainError("regular graph needs n >= 1");
    if (r >= n) throw DomainError("degree r=" + std::to_string(r) + " must be below n=" +
                                  std::to_string(n));
    if ((n * r) % 2 != 0)
        throw DomainError("n*r must be even (n=" + std::to_string(n) + ", r=" +
                          std::to_string(r) + ")");
    const bool via_complement = 2 * r > n - 1;
    const std::size_t target = via_complement ? n - 1 - r : r;

    Rng rng(seed);
    std::vector<Edge> edges;
    for (std::size_t attempt = 0; attempt < retry_budget; ++attempt) {
        if (try_regular(n, target, rng, edges)) {
            Graph g = from_edge_list(n, edges);
            return via_complement ? g.complement() : g;
        }
    }
    throw std::runtime_error("gen_regular: retry budget of " + std::to_string(retry_budget) +
                             " exhausted for n=" + std::to_string(n) + ", r=" + std::to_string(r));
}

std::uint64_t labeled_graph_count(std::size_t n) {
    const std::size_t pairs = n < 2 ? 0 : n * (n - 1) / 2;
    if (pairs >= 64) throw LimitError("labeled graph count overflows 64 bits", n, 11);
    return std::uint64_t{1} << pairs;
}

Graph graph_from_code(std::size_t n, std::uint64_t code) {
    std::vector<Edge> edges;
    std::size_t bit = 0;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v, ++bit)
            if ((code >> bit) & 1u) edges.push_back({u, v});
    return from_edge_list(n, edges);
}

GraphEnumerator::GraphEnumerator(std::size_t n, std::size_t limit) : n_(n) {
    if (n > limit)
        throw LimitError("exhaustive enumeration of n=" + std::to_string(n) +
                             " exceeds the limit of " + std::to_string(limit) +
                             "; sample with a generator instead",
                         n, limit);
    total_ = labeled_graph_count(n);
}

bool GraphEnumerator::next(Graph& out) {
    if (code_ >= total_) return false;
    out = graph_from_code(n_, code_++);
    return true;
}

void enumerate_graphs(std::size_t n, const std::function<void(std::uint64_t, const Graph&)>& fn,
                      std::size_t limit) {
    GraphEnumerator e(n, limit);
    Graph g;
    while (true) {
        const std::uint64_t code = e.position();
        if (!e.next(g)) break;
        fn(code, g);
    }
}

}  // namespace deltasets
