#include "deltasets/graph.hpp"

#include "deltasets/errors.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <set>

namespace deltasets {

namespace {

std::uint64_t next_graph_id() {
    static std::atomic<std::uint64_t> counter{1};
    return counter.fetch_add(1, std::memory_order_relaxed);
}

std::size_t words_for(std::size_t n) { return (n + 63) / 64; }

std::string pair_text(const Edge& e) {
    return "(" + std::to_string(e.u) + ", " + std::to_string(e.v) + ")";
}

}  // namespace

Graph::Graph() : id_(next_graph_id()) {}

Graph::Graph(std::size_t n)
    : n_(n),
      words_(words_for(n)),
      id_(next_graph_id()),
      adjacency_(n * words_for(n), 0),
      degrees_(n, 0) {}

void Graph::add_edge_unchecked(Vertex u, Vertex v) {
    adjacency_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
    adjacency_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
}

void Graph::finalize() {
    std::size_t total = 0;
    for (std::size_t v = 0; v < n_; ++v) {
        std::uint32_t d = 0;
        for (std::size_t w = 0; w < words_; ++w) d += std::popcount(adjacency_[v * words_ + w]);
        degrees_[v] = d;
        total += d;
    }
    edge_count_ = total / 2;
    if (n_ > 0) {
        auto [lo, hi] = std::minmax_element(degrees_.begin(), degrees_.end());
        min_degree_ = *lo;
        max_degree_ = *hi;
    }
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    if (u >= n_ || v >= n_) throw InputError("vertex id out of range");
    return (adjacency_[u * words_ + v / 64] >> (v % 64)) & 1u;
}

std::span<const std::uint64_t> Graph::row(Vertex v) const {
    if (v >= n_) throw InputError("vertex id out of range");
    return {adjacency_.data() + v * words_, words_};
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v = u + 1; v < n_; ++v)
            if ((adjacency_[u * words_ + v / 64] >> (v % 64)) & 1u) out.push_back({u, v});
    return out;
}

Graph Graph::complement() const {
    Graph g(n_);
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v = u + 1; v < n_; ++v)
            if (!adjacent(u, v)) g.add_edge_unchecked(u, v);
    g.finalize();
    return g;
}

std::vector<std::uint64_t> Graph::adjacency_masks() const {
    if (n_ > 64) throw LimitError("adjacency masks need n <= 64", n_, 64);
    std::vector<std::uint64_t> masks(n_, 0);
    for (std::size_t v = 0; v < n_; ++v) masks[v] = adjacency_[v * words_];
    return masks;
}

Graph from_edge_list(std::size_t n, std::span<const Edge> edges, Diagnostics* diag) {
    Graph g(n);
    std::size_t duplicates = 0;
    for (const Edge& e : edges) {
        if (e.u >= n || e.v >= n)
            throw InputError("edge " + pair_text(e) + " has an id outside [0, " +
                             std::to_string(n) + ")");
        if (e.u == e.v) throw InputError("edge " + pair_text(e) + " is a self-loop");
        if (g.adjacent(e.u, e.v)) {
            ++duplicates;
            continue;
        }
        g.add_edge_unchecked(e.u, e.v);
    }
    g.finalize();
    if (diag && duplicates > 0)
        diag->push_back("collapsed " + std::to_string(duplicates) + " duplicate edge(s)");
    return g;
}

Graph complete_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
    return from_edge_list(n, edges);
}

Graph empty_graph(std::size_t n) { return from_edge_list(n, std::span<const Edge>{}); }

Graph cycle_graph(std::size_t n) {
    if (n < 3) throw InputError("a cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v) edges.push_back({v, static_cast<Vertex>((v + 1) % n)});
    return from_edge_list(n, edges);
}

Graph star_graph(std::size_t leaves) {
    std::vector<Edge> edges;
    for (Vertex v = 1; v <= leaves; ++v) edges.push_back({0, v});
    return from_edge_list(leaves + 1, edges);
}

VertexSet::VertexSet(const Graph& g) : owner_(g.id()), n_(g.n()), bits_(g.words(), 0) {}

VertexSet::VertexSet(const Graph& g, std::initializer_list<Vertex> members) : VertexSet(g) {
    for (Vertex v : members) insert(v);
}

VertexSet::VertexSet(const Graph& g, std::span<const Vertex> members) : VertexSet(g) {
    for (Vertex v : members) insert(v);
}

VertexSet VertexSet::all(const Graph& g) {
    VertexSet w(g);
    for (Vertex v = 0; v < g.n(); ++v) w.insert(v);
    return w;
}

VertexSet VertexSet::from_mask(const Graph& g, std::uint64_t mask) {
    if (g.n() > 64) throw LimitError("mask construction needs n <= 64", g.n(), 64);
    if (g.n() < 64 && (mask >> g.n()) != 0) throw InputError("mask has bits beyond n");
    VertexSet w(g);
    if (g.n() > 0) {
        w.bits_[0] = mask;
        w.size_ = std::popcount(mask);
    }
    return w;
}

bool VertexSet::contains(Vertex v) const {
    if (v >= n_) return false;
    return (bits_[v / 64] >> (v % 64)) & 1u;
}

void VertexSet::insert(Vertex v) {
    if (v >= n_) throw InputError("vertex " + std::to_string(v) + " outside the owner graph");
    auto& word = bits_[v / 64];
    const std::uint64_t bit = std::uint64_t{1} << (v % 64);
    if (!(word & bit)) {
        word |= bit;
        ++size_;
    }
}

void VertexSet::erase(Vertex v) {
    if (v >= n_) return;
    auto& word = bits_[v / 64];
    const std::uint64_t bit = std::uint64_t{1} << (v % 64);
    if (word & bit) {
        word &= ~bit;
        --size_;
    }
}

std::vector<Vertex> VertexSet::members() const {
    std::vector<Vertex> out;
    out.reserve(size_);
    for (std::size_t w = 0; w < bits_.size(); ++w) {
        std::uint64_t word = bits_[w];
        while (word) {
            out.push_back(static_cast<Vertex>(w * 64 + std::countr_zero(word)));
            word &= word - 1;
        }
    }
    return out;
}

std::vector<std::uint32_t> VertexSet::degrees(const Graph& g) const {
    require_owned(g, *this);
    std::vector<std::uint32_t> out;
    out.reserve(size_);
    for (Vertex v : members()) out.push_back(g.degrees()[v]);
    return out;
}

VertexSet VertexSet::complement() const {
    VertexSet out = *this;
    out.size_ = 0;
    for (std::size_t w = 0; w < bits_.size(); ++w) {
        std::uint64_t word = ~bits_[w];
        const std::size_t hi = std::min<std::size_t>(64, n_ - w * 64);
        if (hi < 64) word &= (std::uint64_t{1} << hi) - 1;
        out.bits_[w] = word;
        out.size_ += std::popcount(word);
    }
    return out;
}

void require_owned(const Graph& g, const VertexSet& w) {
    if (!w.owned_by(g)) throw InputError("vertex set does not belong to this graph");
}

}  // namespace deltasets
