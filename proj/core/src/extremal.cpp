#include "deltasets/extremal.hpp"

#include "deltasets/errors.hpp"
#include "deltasets/exact.hpp"
#include "deltasets/setcalc.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace deltasets {

DegreeOrder degree_order(const Graph& g) { return degree_order(g.degrees()); }

DegreeOrder degree_order(std::span<const std::uint32_t> deg) {
    DegreeOrder out;
    out.order.resize(deg.size());
    std::iota(out.order.begin(), out.order.end(), Vertex{0});
    std::stable_sort(out.order.begin(), out.order.end(),
                     [&](Vertex a, Vertex b) { return deg[a] < deg[b]; });
    out.degrees.reserve(deg.size());
    for (Vertex v : out.order) out.degrees.push_back(deg[v]);
    return out;
}

namespace {

// Largest s whose sorted prefix passes delta_k. Prefix feasibility is
// monotone: extending a prefix raises D_k and lowers n - s.
std::size_t sorted_prefix_alpha(std::span<const std::uint32_t> sorted, std::size_t n, unsigned k) {
    std::size_t lo = 0, hi = sorted.size();
    while (lo < hi) {
        const std::size_t mid = (lo + hi + 1) / 2;
        if (delta_k_small_degrees(sorted.subspan(0, mid), n, k))
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

}  // namespace

std::size_t alpha_k(const Graph& g, unsigned k) {
    if (k == 0) throw DomainError("alpha^(k) needs k >= 1");
    const DegreeOrder ord = degree_order(g);
    return sorted_prefix_alpha(ord.degrees, g.n(), k);
}

std::size_t s_small(const Graph& g) {
    const DegreeOrder ord = degree_order(g);
    std::size_t best = 0;
    for (std::size_t s = 1; s <= g.n(); ++s)
        if (ord.degrees[s - 1] + s <= g.n()) best = s;
    return best;
}

unsigned certificate_exponent(std::size_t size, std::uint32_t top) {
    if (top == 0) throw DomainError("certificate exponent needs a positive maximum degree");
    if (size <= 1) return 1;
    const double ratio = std::log(2.0 * top / (2.0 * top - 1.0));
    const double estimate = std::log(static_cast<double>(size)) / ratio;
    unsigned k = estimate > 2.0 ? static_cast<unsigned>(estimate) - 1 : 1;
    auto holds = [&](unsigned e) {
        return BigInt(static_cast<unsigned long>(size)) * pow_ui(2ul * top - 1, e) < pow_ui(2ul * top, e);
    };
    while (k > 1 && holds(k - 1)) --k;
    while (!holds(k)) ++k;
    return k;
}

AlphaCurve alpha_curve(const Graph& g, unsigned k_max, unsigned hard_cap) {
    if (k_max == 0) throw DomainError("alpha curve needs k_max >= 1");
    const std::size_t n = g.n();
    const DegreeOrder ord = degree_order(g);
    AlphaCurve out;
    out.plateau = s_small(g);
    out.values.reserve(k_max);
    for (unsigned k = 1; k <= k_max; ++k)
        out.values.push_back(sorted_prefix_alpha(ord.degrees, n, k));

    auto first_equal = std::find(out.values.begin(), out.values.end(), out.plateau);
    if (first_equal != out.values.end()) {
        out.k0_alpha = static_cast<unsigned>(first_equal - out.values.begin()) + 1;
        return out;
    }

    // Every prefix longer than S(G) is not small; past the largest of their
    // certificate exponents none of them is delta_k-small either.
    unsigned cert = 1;
    for (std::size_t s = out.plateau + 1; s <= n; ++s)
        cert = std::max(cert, certificate_exponent(s, ord.degrees[s - 1]));
    if (cert > hard_cap) {
        std::vector<std::size_t> tail(out.values.end() - std::min<std::size_t>(4, out.values.size()),
                                      out.values.end());
        throw StabilizationError("alpha^(k) still above S(G)=" + std::to_string(out.plateau) +
                                     " at k_max=" + std::to_string(k_max) +
                                     "; stabilization needs k up to " + std::to_string(cert) +
                                     ", above the cap " + std::to_string(hard_cap),
                                 std::move(tail));
    }
    unsigned lo = k_max + 1, hi = std::max(cert, k_max + 1);
    while (lo < hi) {
        const unsigned mid = lo + (hi - lo) / 2;
        if (sorted_prefix_alpha(ord.degrees, n, mid) == out.plateau)
            hi = mid;
        else
            lo = mid + 1;
    }
    out.k0_alpha = lo;
    return out;
}

UniversalIndex k0_universal_detail(const Graph& g, std::size_t limit) {
    return k0_universal_detail(g.degrees(), limit);
}

UniversalIndex k0_universal_detail(std::span<const std::uint32_t> deg, std::size_t limit) {
    const std::size_t n = deg.size();
    if (n > limit)
        throw LimitError("k0 search over all subsets of n=" + std::to_string(n) +
                             " vertices exceeds the exhaustive limit " + std::to_string(limit),
                         n, limit);
    const DegreeOrder ord = degree_order(deg);

    // Group vertices by degree; a sub-multiset picks a count from each group.
    std::vector<std::uint32_t> level;
    std::vector<std::vector<Vertex>> members;
    for (std::size_t i = 0; i < n; ++i) {
        if (level.empty() || level.back() != ord.degrees[i]) {
            level.push_back(ord.degrees[i]);
            members.emplace_back();
        }
        members.back().push_back(ord.order[i]);
    }
    const std::size_t groups = level.size();

    UniversalIndex out;
    unsigned worst = 0;  // largest k at which some non-small set is delta_k-small
    std::vector<std::size_t> pick(groups, 0);
    std::vector<std::uint32_t> degrees;
    while (true) {
        // Advance the mixed-radix counter.
        std::size_t i = 0;
        while (i < groups && pick[i] == members[i].size()) pick[i++] = 0;
        if (i == groups) break;
        ++pick[i];

        degrees.clear();
        std::uint32_t top = 0;
        for (std::size_t gi = 0; gi < groups; ++gi)
            if (pick[gi]) {
                degrees.insert(degrees.end(), pick[gi], level[gi]);
                top = level[gi];
            }
        const std::size_t size = degrees.size();
        if (top + size <= n) continue;  // small
        if (!delta_k_small_degrees(degrees, n, 1)) continue;

        unsigned lo = 1, hi = std::max(1u, certificate_exponent(size, top) - 1);
        while (lo < hi) {
            const unsigned mid = lo + (hi - lo + 1) / 2;
            if (delta_k_small_degrees(degrees, n, mid))
                lo = mid;
            else
                hi = mid - 1;
        }
        if (lo > worst) {
            worst = lo;
            out.witness.clear();
            for (std::size_t gi = 0; gi < groups; ++gi)
                out.witness.insert(out.witness.end(), members[gi].begin(),
                                   members[gi].begin() + static_cast<std::ptrdiff_t>(pick[gi]));
            std::sort(out.witness.begin(), out.witness.end());
        }
    }
    out.k0 = worst + 1;
    return out;
}

}  // namespace deltasets
