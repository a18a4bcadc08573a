#include "deltasets/setcalc.hpp"

#include "deltasets/errors.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

namespace deltasets {

Smallness Smallness::delta(unsigned k) {
    if (k == 0) throw DomainError("delta_k smallness needs k >= 1");
    return {SmallnessKind::delta_k, k};
}

std::string Smallness::label() const {
    switch (kind) {
        case SmallnessKind::small: return "small";
        case SmallnessKind::delta_k: return "delta_" + std::to_string(k);
        case SmallnessKind::alpha: return "alpha";
    }
    return "?";
}

PowerSum power_sum(const Graph& g, const VertexSet& w, unsigned k) {
    require_owned(g, w);
    if (k == 0) throw DomainError("power sum needs k >= 1");
    PowerSum out{k, 0};
    for (std::uint32_t d : w.degrees(g)) out.value += pow_ui(d, k);
    return out;
}

double mean_dk(const Graph& g, const VertexSet& w, unsigned k) {
    require_owned(g, w);
    if (w.empty()) throw DomainError("D_k of an empty set is undefined");
    if (k == 0) throw DomainError("D_k needs k >= 1");
    const auto degrees = w.degrees(g);
    const double top = *std::max_element(degrees.begin(), degrees.end());
    if (top == 0.0) return 0.0;
    double scaled = 0.0;
    for (std::uint32_t d : degrees) scaled += std::pow(d / top, static_cast<double>(k));
    return top * std::pow(scaled / static_cast<double>(degrees.size()), 1.0 / k);
}

SmallnessVerdict is_small(const Graph& g, const VertexSet& w) {
    require_owned(g, w);
    SmallnessVerdict out{Smallness::small(), true, std::nullopt, 0};
    const long room = static_cast<long>(g.n() - w.size());
    long top = 0;
    Vertex arg = 0;
    for (Vertex v : w.members()) {
        const long d = g.degrees()[v];
        if (d > top) {
            top = d;
            arg = v;
        }
    }
    out.slack = room - top;
    out.holds = top <= room;
    if (!out.holds) out.witness = arg;
    return out;
}

SmallnessVerdict is_delta_k_small(const Graph& g, const VertexSet& w, unsigned k) {
    const BigInt lhs = power_sum(g, w, k).value;
    const BigInt rhs = BigInt(static_cast<unsigned long>(w.size())) * pow_ui(g.n() - w.size(), k);
    SmallnessVerdict out{Smallness::delta(k), lhs <= rhs, std::nullopt, 0};
    out.slack = Rational(rhs - lhs);
    return out;
}

SmallnessVerdict is_alpha_small(const Graph& g, const VertexSet& w) {
    require_owned(g, w);
    Rational sum = 0;
    for (std::uint32_t d : w.degrees(g)) sum += Rational(1, static_cast<unsigned long>(g.n() - d));
    SmallnessVerdict out{Smallness::alpha(), sum <= 1, std::nullopt, 0};
    out.slack = 1 - sum;
    return out;
}

SmallnessVerdict check_smallness(const Graph& g, const VertexSet& w, Smallness kind) {
    switch (kind.kind) {
        case SmallnessKind::small: return is_small(g, w);
        case SmallnessKind::delta_k: return is_delta_k_small(g, w, kind.k);
        case SmallnessKind::alpha: return is_alpha_small(g, w);
    }
    throw DomainError("unknown smallness kind");
}

bool small_degrees(std::span<const std::uint32_t> degrees, std::size_t n) {
    const std::size_t room = n - degrees.size();
    return std::all_of(degrees.begin(), degrees.end(), [&](std::uint32_t d) { return d <= room; });
}

bool delta_k_small_degrees(std::span<const std::uint32_t> degrees, std::size_t n, unsigned k) {
    if (k == 0) throw DomainError("delta_k smallness needs k >= 1");
    const std::size_t size = degrees.size();
    const std::size_t room = n - size;
    // Fast path: everything fits in 128 bits when n * (n-1)^k does.
    if (auto cap = checked_pow(n == 0 ? 0 : n - 1, k); cap && checked_mul(*cap, n, *cap)) {
        u128 lhs = 0;
        for (std::uint32_t d : degrees) lhs += *checked_pow(d, k);
        return lhs <= static_cast<u128>(size) * *checked_pow(room, k);
    }
    BigInt lhs = 0;
    for (std::uint32_t d : degrees) lhs += pow_ui(d, k);
    return lhs <= BigInt(static_cast<unsigned long>(size)) * pow_ui(room, k);
}

bool alpha_small_degrees(std::span<const std::uint32_t> degrees, std::size_t n) {
    Rational sum = 0;
    for (std::uint32_t d : degrees) sum += Rational(1, static_cast<unsigned long>(n - d));
    return sum <= 1;
}

bool feasible_degrees(std::span<const std::uint32_t> degrees, std::size_t n, Smallness kind) {
    switch (kind.kind) {
        case SmallnessKind::small: return small_degrees(degrees, n);
        case SmallnessKind::delta_k: return delta_k_small_degrees(degrees, n, kind.k);
        case SmallnessKind::alpha: return alpha_small_degrees(degrees, n);
    }
    return false;
}

namespace {

FeasibilityTable small_table(std::span<const std::uint32_t> deg) {
    const std::size_t n = deg.size();
    const std::size_t total = std::size_t{1} << n;
    FeasibilityTable feasible(total, 1);
    std::vector<std::uint32_t> top(total, 0);
    for (std::size_t mask = 1; mask < total; ++mask) {
        const std::size_t low = std::countr_zero(mask);
        top[mask] = std::max(top[mask & (mask - 1)], deg[low]);
        feasible[mask] = top[mask] + std::popcount(mask) <= n;
    }
    return feasible;
}

template <typename Int, typename PowFn>
FeasibilityTable delta_table(std::span<const std::uint32_t> deg, unsigned k, PowFn pow) {
    const std::size_t n = deg.size();
    const std::size_t total = std::size_t{1} << n;
    std::vector<Int> weight(n);
    for (std::size_t v = 0; v < n; ++v) weight[v] = pow(deg[v], k);
    std::vector<Int> rhs(n + 1);
    for (std::size_t s = 0; s <= n; ++s) rhs[s] = Int(static_cast<unsigned long>(s)) * pow(n - s, k);

    FeasibilityTable feasible(total, 1);
    std::vector<Int> sums(total, Int(0));
    for (std::size_t mask = 1; mask < total; ++mask) {
        const std::size_t low = std::countr_zero(mask);
        sums[mask] = sums[mask & (mask - 1)] + weight[low];
        feasible[mask] = sums[mask] <= rhs[std::popcount(mask)];
    }
    return feasible;
}

FeasibilityTable alpha_table(std::span<const std::uint32_t> deg) {
    const std::size_t n = deg.size();
    const std::size_t total = std::size_t{1} << n;
    // Scale every 1/(n-d) by L = lcm of the denominators; compare with L.
    BigInt lcm = 1;
    for (std::uint32_t d : deg) mpz_lcm_ui(lcm.get_mpz_t(), lcm.get_mpz_t(), n - d);
    FeasibilityTable feasible(total, 1);
    if (lcm.fits_ulong_p() && lcm.get_ui() <= (~std::uint64_t{0}) / (n + 1)) {
        const std::uint64_t scale = lcm.get_ui();
        std::vector<std::uint64_t> sums(total, 0);
        for (std::size_t mask = 1; mask < total; ++mask) {
            const std::size_t low = std::countr_zero(mask);
            sums[mask] = sums[mask & (mask - 1)] + scale / (n - deg[low]);
            feasible[mask] = sums[mask] <= scale;
        }
        return feasible;
    }
    std::vector<BigInt> weight(n);
    for (std::size_t v = 0; v < n; ++v) weight[v] = lcm / static_cast<unsigned long>(n - deg[v]);
    BigInt sum;
    for (std::size_t mask = 1; mask < total; ++mask) {
        sum = 0;
        for (std::size_t rest = mask; rest; rest &= rest - 1) sum += weight[std::countr_zero(rest)];
        feasible[mask] = sum <= lcm;
    }
    return feasible;
}

}  // namespace

FeasibilityTable feasibility_table(std::span<const std::uint32_t> degrees, Smallness kind) {
    const std::size_t n = degrees.size();
    if (n > kMaxTableVertices)
        throw LimitError("feasibility table for n=" + std::to_string(n) + " exceeds " +
                             std::to_string(kMaxTableVertices) + " vertices",
                         n, kMaxTableVertices);
    switch (kind.kind) {
        case SmallnessKind::small: return small_table(degrees);
        case SmallnessKind::alpha: return alpha_table(degrees);
        case SmallnessKind::delta_k: break;
    }
    const unsigned k = kind.k;
    if (k == 0) throw DomainError("delta_k smallness needs k >= 1");
    auto cap = checked_pow(n == 0 ? 0 : n - 1, k);
    if (cap && checked_mul(*cap, n == 0 ? 1 : n, *cap)) {
        return delta_table<u128>(degrees, k, [](std::uint64_t b, unsigned e) { return *checked_pow(b, e); });
    }
    return delta_table<BigInt>(degrees, k, [](std::uint64_t b, unsigned e) { return pow_ui(b, e); });
}

FeasibilityTable feasibility_table(const Graph& g, Smallness kind) {
    return feasibility_table(g.degrees(), kind);
}

}  // namespace deltasets
