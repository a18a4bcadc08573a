#include "deltasets/partition.hpp"

#include "deltasets/errors.hpp"
#include "deltasets/extremal.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace deltasets {

bool certify(const Graph& g, Partition& p) {
    p.certified = false;
    std::vector<bool> seen(g.n(), false);
    std::size_t covered = 0;
    for (const auto& part : p.parts) {
        if (part.empty()) return false;
        for (Vertex v : part) {
            if (v >= g.n() || seen[v]) return false;
            seen[v] = true;
            ++covered;
        }
        if (!check_smallness(g, VertexSet(g, part), p.kind).holds) return false;
    }
    p.certified = covered == g.n();
    return p.certified;
}

const char* to_string(PhiMethod m) {
    return m == PhiMethod::exact_dp ? "exact_dp" : "greedy_upper_only";
}

std::size_t min_partition(const FeasibilityTable& feasible, std::size_t n,
                          std::vector<std::uint32_t>* parts) {
    const std::uint32_t total = std::uint32_t{1} << n;
    if (feasible.size() != total) throw DomainError("feasibility table size does not match n");
    if (n == 0) {
        if (parts) parts->clear();
        return 0;
    }
    std::vector<std::uint8_t> best(total, 0xff);
    std::vector<std::uint32_t> choice(total, 0);
    best[0] = 0;
    for (std::uint32_t mask = 1; mask < total; ++mask) {
        if (feasible[mask]) {
            best[mask] = 1;
            choice[mask] = mask;
            continue;
        }
        const std::uint32_t low = mask & (~mask + 1);
        const std::uint32_t rest = mask ^ low;
        std::uint8_t b = 0xff;
        std::uint32_t pick = 0;
        // rest itself is skipped: sub == rest gives the whole mask, infeasible.
        for (std::uint32_t sub = (rest - 1) & rest;; sub = (sub - 1) & rest) {
            const std::uint32_t part = sub | low;
            if (feasible[part] && best[mask ^ part] + 1 < b) {
                b = static_cast<std::uint8_t>(best[mask ^ part] + 1);
                pick = part;
                if (b == 2) break;
            }
            if (sub == 0) break;
        }
        best[mask] = b;
        choice[mask] = pick;
    }
    const std::uint32_t all = total - 1;
    if (parts) {
        parts->clear();
        for (std::uint32_t mask = all; mask; mask ^= choice[mask]) parts->push_back(choice[mask]);
    }
    return best[all];
}

namespace {

void check_limit(std::size_t n, std::size_t limit) {
    const std::size_t cap = std::min(limit, kMaxExactLimit);
    if (n > cap)
        throw LimitError("exact decomposition of n=" + std::to_string(n) +
                             " vertices exceeds the exact limit " + std::to_string(cap) +
                             "; use phi_greedy for an upper bound",
                         n, cap);
}

Partition partition_from_masks(const std::vector<std::uint32_t>& masks, Smallness kind) {
    Partition p{{}, kind, false};
    for (std::uint32_t m : masks) {
        std::vector<Vertex> part;
        for (std::uint32_t rest = m; rest; rest &= rest - 1)
            part.push_back(static_cast<Vertex>(std::countr_zero(rest)));
        p.parts.push_back(std::move(part));
    }
    std::sort(p.parts.begin(), p.parts.end());
    return p;
}

PhiResult solve(const FeasibilityTable& table, std::size_t n, Smallness kind) {
    std::vector<std::uint32_t> masks;
    PhiResult out;
    out.value = min_partition(table, n, &masks);
    out.witness = partition_from_masks(masks, kind);
    out.method = PhiMethod::exact_dp;
    return out;
}

}  // namespace

PhiResult phi_exact(std::span<const std::uint32_t> degrees, Smallness kind, std::size_t limit) {
    check_limit(degrees.size(), limit);
    return solve(feasibility_table(degrees, kind), degrees.size(), kind);
}

PhiResult phi_exact(const Graph& g, Smallness kind, std::size_t limit) {
    PhiResult out = phi_exact(g.degrees(), kind, limit);
    certify(g, out.witness);
    return out;
}

PhiResult phi_greedy(const Graph& g, Smallness kind) {
    const std::size_t n = g.n();
    const DegreeOrder ord = degree_order(g);
    PhiResult out;
    out.method = PhiMethod::greedy_upper_only;
    out.witness.kind = kind;
    std::size_t start = 0;
    while (start < n) {
        // Feasibility of sorted prefixes is monotone for all three kinds.
        std::size_t take = 1;
        while (start + take < n &&
               feasible_degrees(std::span(ord.degrees).subspan(start, take + 1), n, kind))
            ++take;
        out.witness.parts.emplace_back(ord.order.begin() + static_cast<std::ptrdiff_t>(start),
                                       ord.order.begin() + static_cast<std::ptrdiff_t>(start + take));
        std::sort(out.witness.parts.back().begin(), out.witness.parts.back().end());
        start += take;
    }
    out.value = out.witness.parts.size();
    certify(g, out.witness);
    return out;
}

PhiCurve phi_curve(std::span<const std::uint32_t> degrees, unsigned k_max, std::size_t limit) {
    const std::size_t n = degrees.size();
    check_limit(n, limit);
    PhiCurve out;
    const FeasibilityTable small = feasibility_table(degrees, Smallness::small());
    {
        PhiResult r = solve(small, n, Smallness::small());
        out.phi = r.value;
        out.small_witness = std::move(r.witness);
    }

    FeasibilityTable previous;
    PhiResult last;
    auto step = [&](unsigned k) {
        FeasibilityTable table = feasibility_table(degrees, Smallness::delta(k));
        if (table == small) {
            last.value = out.phi;
            last.witness = out.small_witness;
            last.witness.kind = Smallness::delta(k);
        } else if (table != previous) {
            last = solve(table, n, Smallness::delta(k));
        } else {
            last.witness.kind = Smallness::delta(k);
        }
        previous = std::move(table);
        out.values.push_back(last.value);
        out.witnesses.push_back(last.witness);
    };

    if (k_max == 0) {
        for (unsigned k = 1;; ++k) {
            step(k);
            if (last.value == out.phi) {
                out.k0_phi = k;
                return out;
            }
        }
    }

    for (unsigned k = 1; k <= k_max; ++k) step(k);
    auto hit = std::find(out.values.begin(), out.values.end(), out.phi);
    if (hit != out.values.end()) {
        out.k0_phi = static_cast<unsigned>(hit - out.values.begin()) + 1;
        return out;
    }
    // phi^(k) == phi is guaranteed from the universal index on.
    unsigned lo = k_max + 1;
    unsigned hi = std::max(lo, k0_universal_detail(degrees, std::max(limit, n)).k0);
    while (lo < hi) {
        const unsigned mid = lo + (hi - lo) / 2;
        const FeasibilityTable table = feasibility_table(degrees, Smallness::delta(mid));
        if (table == small || min_partition(table, n) == out.phi)
            hi = mid;
        else
            lo = mid + 1;
    }
    out.k0_phi = lo;
    return out;
}

PhiCurve phi_curve(const Graph& g, unsigned k_max, std::size_t limit) {
    PhiCurve out = phi_curve(g.degrees(), k_max, limit);
    certify(g, out.small_witness);
    for (auto& w : out.witnesses) certify(g, w);
    return out;
}

}  // namespace deltasets
