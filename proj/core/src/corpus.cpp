#include "deltasets/corpus.hpp"

#include "deltasets/generators.hpp"

#include <functional>
#include <sstream>

namespace deltasets {

namespace {

class ExhaustiveCorpus final : public Corpus {
public:
    ExhaustiveCorpus(std::size_t n_min, std::size_t n_max, std::size_t limit)
        : n_(n_min), n_max_(n_max) {
        for (std::size_t n = n_min; n <= n_max; ++n) {
            GraphEnumerator probe(n, limit);  // validates the limit up front
            total_ += probe.total();
        }
    }

    bool next(CorpusItem& out) override {
        while (n_ <= n_max_) {
            if (code_ < labeled_graph_count(n_)) {
                out.index = index_++;
                out.id = "n" + std::to_string(n_) + ":" + std::to_string(code_);
                out.graph = graph_from_code(n_, code_++);
                return true;
            }
            ++n_;
            code_ = 0;
        }
        return false;
    }

    std::optional<std::uint64_t> size() const override { return total_; }

private:
    std::size_t n_;
    std::size_t n_max_;
    std::uint64_t code_ = 0;
    std::uint64_t index_ = 0;
    std::uint64_t total_ = 0;
};

class GeneratedCorpus final : public Corpus {
public:
    using Make = std::function<Graph(std::uint64_t)>;

    GeneratedCorpus(std::string prefix, std::size_t count, std::uint64_t seed, Make make)
        : prefix_(std::move(prefix)), count_(count), seeds_(seed), make_(std::move(make)) {}

    bool next(CorpusItem& out) override {
        if (i_ >= count_) return false;
        out.index = i_;
        out.id = prefix_ + "#" + std::to_string(i_);
        out.graph = make_(seeds_());
        ++i_;
        return true;
    }

    std::optional<std::uint64_t> size() const override { return count_; }

private:
    std::string prefix_;
    std::size_t count_;
    Rng seeds_;
    Make make_;
    std::size_t i_ = 0;
};

class FileCorpus final : public Corpus {
public:
    FileCorpus(std::vector<std::string> paths, GraphFormat format)
        : paths_(std::move(paths)), format_(format) {}

    bool next(CorpusItem& out) override {
        if (i_ >= paths_.size()) return false;
        out.index = i_;
        out.id = paths_[i_];
        out.graph = read_graph_file(paths_[i_], format_);
        ++i_;
        return true;
    }

    std::optional<std::uint64_t> size() const override { return paths_.size(); }

private:
    std::vector<std::string> paths_;
    GraphFormat format_;
    std::size_t i_ = 0;
};

class VectorCorpus final : public Corpus {
public:
    explicit VectorCorpus(std::vector<CorpusItem> items) : items_(std::move(items)) {}

    bool next(CorpusItem& out) override {
        if (i_ >= items_.size()) return false;
        out = items_[i_];
        out.index = i_++;
        return true;
    }

    std::optional<std::uint64_t> size() const override { return items_.size(); }

private:
    std::vector<CorpusItem> items_;
    std::size_t i_ = 0;
};

class ChainCorpus final : public Corpus {
public:
    explicit ChainCorpus(std::vector<std::unique_ptr<Corpus>> parts) : parts_(std::move(parts)) {}

    bool next(CorpusItem& out) override {
        while (current_ < parts_.size()) {
            if (parts_[current_]->next(out)) {
                out.index = index_++;
                return true;
            }
            ++current_;
        }
        return false;
    }

    std::optional<std::uint64_t> size() const override {
        std::uint64_t total = 0;
        for (const auto& p : parts_) {
            auto s = p->size();
            if (!s) return std::nullopt;
            total += *s;
        }
        return total;
    }

private:
    std::vector<std::unique_ptr<Corpus>> parts_;
    std::size_t current_ = 0;
    std::uint64_t index_ = 0;
};

std::string format_probability(double p) {
    std::ostringstream out;
    out << p;
    return out.str();
}

}  // namespace

std::unique_ptr<Corpus> exhaustive_corpus(std::size_t n_min, std::size_t n_max, std::size_t limit) {
    return std::make_unique<ExhaustiveCorpus>(n_min, n_max, limit);
}

std::unique_ptr<Corpus> gnp_corpus(std::size_t n, double p, std::size_t count, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) gen_gnp(0, p, 0);  // throws the generator's error
    std::string prefix = "gnp:n=" + std::to_string(n) + ",p=" + format_probability(p) +
                         ",seed=" + std::to_string(seed);
    return std::make_unique<GeneratedCorpus>(std::move(prefix), count, seed,
                                             [n, p](std::uint64_t s) { return gen_gnp(n, p, s); });
}

std::unique_ptr<Corpus> regular_corpus(std::size_t n, std::size_t r, std::size_t count,
                                       std::uint64_t seed) {
    std::string prefix = "regular:n=" + std::to_string(n) + ",r=" + std::to_string(r) +
                         ",seed=" + std::to_string(seed);
    return std::make_unique<GeneratedCorpus>(std::move(prefix), count, seed,
                                             [n, r](std::uint64_t s) { return gen_regular(n, r, s); });
}

std::unique_ptr<Corpus> file_corpus(std::vector<std::string> paths, GraphFormat format) {
    return std::make_unique<FileCorpus>(std::move(paths), format);
}

std::unique_ptr<Corpus> vector_corpus(std::vector<CorpusItem> items) {
    return std::make_unique<VectorCorpus>(std::move(items));
}

std::unique_ptr<Corpus> chain_corpus(std::vector<std::unique_ptr<Corpus>> parts) {
    return std::make_unique<ChainCorpus>(std::move(parts));
}

}  // namespace deltasets
