#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace deltasets {

using Vertex = std::uint32_t;

struct Edge {
    Vertex u;
    Vertex v;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Non-fatal notes gathered while building a graph (duplicate edges, header
/// mismatches). Callers that do not care pass nullptr.
using Diagnostics = std::vector<std::string>;

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency is stored as one bit row per vertex; rows are `words()` 64-bit
/// words long. Degrees and the edge count are cached at construction. Copies
/// share the same identity token, so a VertexSet built against one copy is
/// accepted by the others.
class Graph {
public:
    Graph();

    std::size_t n() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edge_count_; }
    std::size_t words() const noexcept { return words_; }
    std::uint64_t id() const noexcept { return id_; }

    std::size_t degree(Vertex v) const { return degrees_.at(v); }
    std::span<const std::uint32_t> degrees() const noexcept { return degrees_; }
    std::size_t max_degree() const noexcept { return max_degree_; }
    std::size_t min_degree() const noexcept { return min_degree_; }

    bool adjacent(Vertex u, Vertex v) const;
    std::span<const std::uint64_t> row(Vertex v) const;

    /// Edges with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    Graph complement() const;

    /// One 64-bit neighbourhood mask per vertex. Requires n <= 64.
    std::vector<std::uint64_t> adjacency_masks() const;

    bool is_regular() const noexcept { return n_ == 0 || max_degree_ == min_degree_; }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.adjacency_ == b.adjacency_;
    }

private:
    friend Graph from_edge_list(std::size_t, std::span<const Edge>, Diagnostics*);
    explicit Graph(std::size_t n);
    void add_edge_unchecked(Vertex u, Vertex v);
    void finalize();

    std::size_t n_ = 0;
    std::size_t words_ = 0;
    std::size_t edge_count_ = 0;
    std::size_t max_degree_ = 0;
    std::size_t min_degree_ = 0;
    std::uint64_t id_ = 0;
    std::vector<std::uint64_t> adjacency_;
    std::vector<std::uint32_t> degrees_;
};

/// Builds a graph from 0-based pairs. Duplicate and reversed pairs collapse to
/// one edge (noted in `diag`). Throws InputError naming the pair on an id out
/// of range or a self-loop.
Graph from_edge_list(std::size_t n, std::span<const Edge> edges, Diagnostics* diag = nullptr);

inline Graph from_edge_list(std::size_t n, std::initializer_list<Edge> edges,
                            Diagnostics* diag = nullptr) {
    return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()), diag);
}

Graph complete_graph(std::size_t n);
Graph empty_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
/// K_{1,leaves}; vertex 0 is the centre.
Graph star_graph(std::size_t leaves);

/// Subset of the vertices of one graph.
class VertexSet {
public:
    explicit VertexSet(const Graph& g);
    VertexSet(const Graph& g, std::initializer_list<Vertex> members);
    VertexSet(const Graph& g, std::span<const Vertex> members);

    static VertexSet all(const Graph& g);
    /// Members are the set bits of `mask`. Requires n <= 64.
    static VertexSet from_mask(const Graph& g, std::uint64_t mask);

    std::uint64_t owner() const noexcept { return owner_; }
    std::size_t universe() const noexcept { return n_; }
    std::size_t size() const noexcept { return size_; }
    bool empty() const noexcept { return size_ == 0; }

    bool contains(Vertex v) const;
    void insert(Vertex v);
    void erase(Vertex v);

    std::vector<Vertex> members() const;
    /// Degrees of the members in ascending vertex order.
    std::vector<std::uint32_t> degrees(const Graph& g) const;

    VertexSet complement() const;

    bool owned_by(const Graph& g) const noexcept { return owner_ == g.id() && n_ == g.n(); }

    friend bool operator==(const VertexSet& a, const VertexSet& b) {
        return a.owner_ == b.owner_ && a.bits_ == b.bits_;
    }

private:
    std::uint64_t owner_;
    std::size_t n_;
    std::size_t size_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// Throws InputError unless `w` was built against `g`.
void require_owned(const Graph& g, const VertexSet& w);

}  // namespace deltasets
