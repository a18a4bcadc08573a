#include "deltasets/oracles.hpp"

#include "deltasets/errors.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace deltasets {

namespace {

using Mask = std::uint64_t;

void check(std::size_t n, std::size_t limit, const char* what) {
    const std::size_t cap = std::min<std::size_t>(limit, 64);
    if (n > cap)
        throw LimitError(std::string(what) + " oracle for n=" + std::to_string(n) +
                             " exceeds its limit " + std::to_string(cap),
                         n, cap);
}

class CliqueSearch {
public:
    explicit CliqueSearch(std::vector<Mask> adj) : adj_(std::move(adj)) {}

    std::size_t run() {
        const std::size_t n = adj_.size();
        const Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
        best_ = n > 0 ? 1 : 0;
        expand(all, 0);
        return best_;
    }

private:
    // Greedy sequential colouring of P; vertices come out ordered by colour
    // class with their colour number as an upper bound on the clique they
    // can still complete.
    void colour(Mask p, std::vector<int>& order, std::vector<int>& bound) const {
        order.clear();
        bound.clear();
        int colour = 0;
        while (p) {
            ++colour;
            Mask q = p;
            while (q) {
                const int v = std::countr_zero(q);
                q &= q - 1;
                q &= ~adj_[v];
                p &= ~(Mask{1} << v);
                order.push_back(v);
                bound.push_back(colour);
            }
        }
    }

    void expand(Mask p, std::size_t size) {
        std::vector<int> order, bound;
        colour(p, order, bound);
        for (std::size_t i = order.size(); i-- > 0;) {
            if (size + static_cast<std::size_t>(bound[i]) <= best_) return;
            const int v = order[i];
            const Mask next = p & adj_[v];
            if (!next) {
                best_ = std::max(best_, size + 1);
            } else {
                expand(next, size + 1);
            }
            p &= ~(Mask{1} << v);
        }
    }

    std::vector<Mask> adj_;
    std::size_t best_ = 0;
};

class Colourer {
public:
    explicit Colourer(const std::vector<Mask>& adj) : adj_(adj), n_(adj.size()) {}

    std::size_t dsatur_upper() const {
        std::vector<int> colour(n_, -1);
        for (std::size_t step = 0; step < n_; ++step) {
            int pick = -1, pick_sat = -1, pick_deg = -1;
            for (std::size_t v = 0; v < n_; ++v) {
                if (colour[v] >= 0) continue;
                const int sat = saturation(v, colour);
                const int deg = std::popcount(adj_[v]);
                if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                    pick = static_cast<int>(v);
                    pick_sat = sat;
                    pick_deg = deg;
                }
            }
            colour[pick] = first_free(pick, colour);
        }
        return n_ == 0 ? 0 : static_cast<std::size_t>(*std::max_element(colour.begin(), colour.end())) + 1;
    }

    bool colourable(std::size_t k) {
        colour_.assign(n_, -1);
        k_ = static_cast<int>(k);
        return search(0, 0);
    }

private:
    int saturation(std::size_t v, const std::vector<int>& colour) const {
        std::uint64_t used = 0;
        for (Mask m = adj_[v]; m; m &= m - 1) {
            const int c = colour[std::countr_zero(m)];
            if (c >= 0) used |= std::uint64_t{1} << c;
        }
        return std::popcount(used);
    }

    int first_free(std::size_t v, const std::vector<int>& colour) const {
        std::uint64_t used = 0;
        for (Mask m = adj_[v]; m; m &= m - 1) {
            const int c = colour[std::countr_zero(m)];
            if (c >= 0) used |= std::uint64_t{1} << c;
        }
        return std::countr_one(used);
    }

    bool search(std::size_t coloured, int used_colours) {
        if (coloured == n_) return true;
        int pick = -1, pick_sat = -1, pick_deg = -1;
        for (std::size_t v = 0; v < n_; ++v) {
            if (colour_[v] >= 0) continue;
            const int sat = saturation(v, colour_);
            const int deg = std::popcount(adj_[v]);
            if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                pick = static_cast<int>(v);
                pick_sat = sat;
                pick_deg = deg;
            }
        }
        std::uint64_t forbidden = 0;
        for (Mask m = adj_[pick]; m; m &= m - 1) {
            const int c = colour_[std::countr_zero(m)];
            if (c >= 0) forbidden |= std::uint64_t{1} << c;
        }
        // A fresh colour is interchangeable with any other fresh one.
        const int top = std::min(k_, used_colours + 1);
        for (int c = 0; c < top; ++c) {
            if ((forbidden >> c) & 1u) continue;
            colour_[pick] = c;
            if (search(coloured + 1, std::max(used_colours, c + 1))) return true;
        }
        colour_[pick] = -1;
        return false;
    }

    const std::vector<Mask>& adj_;
    std::size_t n_;
    std::vector<int> colour_;
    int k_ = 0;
};

}  // namespace

std::size_t clique_number(const Graph& g, std::size_t limit) {
    check(g.n(), limit, "clique");
    return CliqueSearch(g.adjacency_masks()).run();
}

std::size_t independence_number(const Graph& g, std::size_t limit) {
    check(g.n(), limit, "independence");
    return CliqueSearch(g.complement().adjacency_masks()).run();
}

std::size_t chromatic_number(const Graph& g, std::size_t limit) {
    check(g.n(), limit, "chromatic");
    if (g.n() == 0) return 0;
    const auto adj = g.adjacency_masks();
    Colourer colourer(adj);
    const std::size_t upper = colourer.dsatur_upper();
    for (std::size_t k = std::max<std::size_t>(1, clique_number(g, 64)); k < upper; ++k)
        if (colourer.colourable(k)) return k;
    return upper;
}

}  // namespace deltasets
