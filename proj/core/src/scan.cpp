#include "deltasets/scan.hpp"

#include "deltasets/errors.hpp"

#include <json.hpp>

#include <algorithm>

namespace deltasets {

namespace {

std::optional<unsigned> match(const std::vector<std::size_t>& curve, std::size_t target) {
    for (std::size_t i = 0; i < curve.size(); ++i)
        if (curve[i] == target) return static_cast<unsigned>(i + 1);
    return std::nullopt;
}

}  // namespace

const ScanCache::Entry& ScanCache::get(std::span<const std::uint32_t> degrees, std::size_t exact_limit) {
    std::vector<std::uint32_t> key(degrees.begin(), degrees.end());
    std::sort(key.begin(), key.end());
    auto it = entries_.find(key);
    if (it != entries_.end()) {
        ++hits_;
        return it->second;
    }
    PhiCurve curve = phi_curve(std::span<const std::uint32_t>(key), 0, exact_limit);
    Entry e{phi_exact(std::span<const std::uint32_t>(key), Smallness::alpha(), exact_limit).value,
            std::move(curve.values), curve.phi};
    return entries_.emplace(std::move(key), std::move(e)).first->second;
}

ScanRecord scan_graph(const Graph& g, std::uint64_t index, const std::string& id,
                      const ScanOptions& options, ScanCache* cache) {
    ScanRecord r;
    r.index = index;
    r.id = id;
    r.n = g.n();
    if (g.n() > std::min(options.exact_limit, kMaxExactLimit)) {
        r.skipped = "exact limit";
        return r;
    }
    if (cache) {
        const ScanCache::Entry& e = cache->get(g.degrees(), options.exact_limit);
        r.phi_alpha = e.phi_alpha;
        r.phi_curve = e.curve;
        r.phi = e.phi;
    } else {
        PhiCurve curve = phi_curve(g, 0, options.exact_limit);
        r.phi_alpha = phi_exact(g, Smallness::alpha(), options.exact_limit).value;
        r.phi_curve = std::move(curve.values);
        r.phi = curve.phi;
    }
    r.matched_k = match(r.phi_curve, r.phi_alpha);
    if (r.candidate()) recheck(g, r, options);
    return r;
}

std::size_t bell_min_partition(std::size_t n, const std::function<bool(std::uint64_t)>& feasible) {
    if (n == 0) return 0;
    if (n > 16) throw LimitError("set partition enumeration", n, 16);
    // a[i] is the block of element i; blocks are numbered by first appearance.
    std::vector<std::size_t> a(n, 0), top(n, 0);
    std::size_t best = n;
    std::vector<std::uint64_t> blocks(n);
    while (true) {
        const std::size_t count = top[n - 1] + 1;
        if (count < best) {
            std::fill(blocks.begin(), blocks.begin() + count, 0);
            for (std::size_t i = 0; i < n; ++i) blocks[a[i]] |= std::uint64_t{1} << i;
            bool ok = true;
            for (std::size_t b = 0; b < count && ok; ++b) ok = feasible(blocks[b]);
            if (ok) best = count;
        }
        std::size_t i = n - 1;
        while (i > 0 && a[i] == top[i - 1] + 1) --i;
        if (i == 0) break;
        ++a[i];
        top[i] = std::max(top[i - 1], a[i]);
        for (std::size_t j = i + 1; j < n; ++j) {
            a[j] = 0;
            top[j] = top[i];
        }
    }
    return best;
}

void recheck(const Graph& g, ScanRecord& record, const ScanOptions& options) {
    const std::size_t n = g.n();
    auto solve = [&](Smallness kind) -> std::size_t {
        auto feasible = [&](std::uint64_t mask) {
            return check_smallness(g, VertexSet::from_mask(g, mask), kind).holds;
        };
        if (n <= options.bell_limit) return bell_min_partition(n, feasible);
        FeasibilityTable table(std::size_t{1} << n);
        for (std::size_t mask = 0; mask < table.size(); ++mask) table[mask] = feasible(mask);
        return min_partition(table, n);
    };
    const std::size_t phi_alpha = solve(Smallness::alpha());
    const std::size_t phi = solve(Smallness::small());
    std::vector<std::size_t> curve;
    for (unsigned k = 1; curve.empty() || curve.back() != phi; ++k) {
        curve.push_back(solve(Smallness::delta(k)));
        if (curve.back() > phi) throw std::logic_error("phi^(k) exceeds phi on recheck of " + record.id);
    }
    record.rechecked = true;
    record.confirmed = phi_alpha == record.phi_alpha && phi == record.phi && curve == record.phi_curve &&
                       !match(curve, phi_alpha);
}

std::string scan_json(const ScanRecord& r) {
    nlohmann::ordered_json j;
    j["index"] = r.index;
    j["id"] = r.id;
    j["n"] = r.n;
    if (r.skipped) {
        j["skipped"] = *r.skipped;
        return j.dump();
    }
    j["phi_alpha"] = r.phi_alpha;
    j["phi_curve"] = r.phi_curve;
    j["phi"] = r.phi;
    j["matched_k"] = r.matched_k ? nlohmann::ordered_json(*r.matched_k) : nlohmann::ordered_json(nullptr);
    if (r.candidate()) {
        j["rechecked"] = r.rechecked;
        j["confirmed"] = r.confirmed;
    }
    return j.dump();
}

}  // namespace deltasets
