#pragma once

#include "deltasets/graph.hpp"
#include "deltasets/graph_io.hpp"

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace deltasets {

struct CorpusItem {
    std::uint64_t index = 0;  // position in the corpus, 0-based
    std::string id;
    Graph graph;
};

/// A finite stream of graphs with stable ids.
class Corpus {
public:
    virtual ~Corpus() = default;
    virtual bool next(CorpusItem& out) = 0;
    virtual std::optional<std::uint64_t> size() const { return std::nullopt; }
};

/// All labeled graphs on each n in [n_min, n_max]; ids "n<N>:<code>".
std::unique_ptr<Corpus> exhaustive_corpus(std::size_t n_min, std::size_t n_max,
                                          std::size_t limit = 8);

/// `count` G(n,p) graphs; graph i uses the i-th draw of mt19937_64(seed) as
/// its own seed. ids "gnp:n=<n>,p=<p>,seed=<seed>#<i>".
std::unique_ptr<Corpus> gnp_corpus(std::size_t n, double p, std::size_t count, std::uint64_t seed);

std::unique_ptr<Corpus> regular_corpus(std::size_t n, std::size_t r, std::size_t count,
                                       std::uint64_t seed);

/// Graph files; ids are the paths. Parse errors propagate.
std::unique_ptr<Corpus> file_corpus(std::vector<std::string> paths, GraphFormat format);

std::unique_ptr<Corpus> vector_corpus(std::vector<CorpusItem> items);

/// Concatenation; indices are renumbered consecutively.
std::unique_ptr<Corpus> chain_corpus(std::vector<std::unique_ptr<Corpus>> parts);

}  // namespace deltasets
