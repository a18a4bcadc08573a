#include "deltasets/bounds.hpp"

#include "deltasets/errors.hpp"
#include "deltasets/setcalc.hpp"

#include <array>

namespace deltasets {

namespace {

void require_vertices(const Graph& g, const char* what) {
    if (g.n() == 0) throw DomainError(std::string(what) + " needs at least one vertex");
}

BigInt degree_power_sum(std::span<const std::uint32_t> degrees, unsigned k) {
    BigInt sum = 0;
    for (std::uint32_t d : degrees) sum += pow_ui(d, k);
    return sum;
}

}  // namespace

std::size_t lb_avg(const Graph& g) {
    require_vertices(g, "lb_avg");
    const BigInt n = static_cast<unsigned long>(g.n());
    const BigInt twice_e = 2ul * static_cast<unsigned long>(g.edge_count());
    return ceil_div(n * n, n * n - twice_e).get_ui();
}

std::size_t ub_maxdeg(const Graph& g) {
    require_vertices(g, "ub_maxdeg");
    const std::size_t n = g.n();
    return (n + (n - g.max_degree()) - 1) / (n - g.max_degree());
}

bool power_mean_fits(std::span<const std::uint32_t> degrees, unsigned k, std::size_t r) {
    if (r == 0) return false;
    const std::size_t n = degrees.size();
    return pow_ui(r, k) * degree_power_sum(degrees, k) <= pow_ui(n, k + 1) * pow_ui(r - 1, k);
}

std::size_t lb_dk(std::span<const std::uint32_t> degrees, unsigned k) {
    if (k == 0) throw DomainError("lb_dk needs k >= 1");
    const std::size_t n = degrees.size();
    if (n == 0) throw DomainError("lb_dk needs at least one vertex");
    const BigInt sum = degree_power_sum(degrees, k);
    const BigInt scale = pow_ui(n, k + 1);
    for (std::size_t r = 1; r <= n; ++r)
        if (pow_ui(r, k) * sum <= scale * pow_ui(r - 1, k)) return r;
    return n;  // unreachable: r = n always satisfies the inequality
}

std::size_t lb_dk(const Graph& g, unsigned k) { return lb_dk(g.degrees(), k); }

Rational caro_wei(const Graph& g) {
    Rational sum = 0;
    for (std::uint32_t d : g.degrees()) sum += Rational(1, static_cast<unsigned long>(g.n() - d));
    return sum;
}

std::string BoundTarget::label() const {
    return kind == Kind::phi ? "phi" : "phi^(" + std::to_string(s) + ")";
}

std::span<const LedgerRow> applicability_ledger() {
    using K = BoundTarget::Kind;
    static constexpr std::array<LedgerRow, 12> rows{{
        {1, K::phi_s, 1, 1, Precondition::none, "Prop 1.2"},
        {1, K::phi_s, 2, 0, Precondition::none, "Prop 1.5"},
        {1, K::phi, 0, 0, Precondition::none, "Prop 1.1"},
        {2, K::phi_s, 2, 0, Precondition::none, "Cor 4.2"},
        {2, K::phi, 0, 0, Precondition::none, "Cor 4.3"},
        {3, K::phi_s, 3, 0, Precondition::none, "Cor 4.5"},
        {3, K::phi, 0, 0, Precondition::none, "Cor 4.6"},
        {4, K::phi_s, 4, 0, Precondition::phi4_not_2, "Cor 4.7"},
        {4, K::phi, 0, 0, Precondition::phi4_not_2, "Cor 4.8"},
        {4, K::phi, 0, 0, Precondition::phi_not_2, "Remark 4.2"},
        {0, K::phi_s, 1, 0, Precondition::k_within_target, "Cor 4.1"},
        {0, K::phi, 0, 0, Precondition::k_within_target, "Cor 4.4"},
    }};
    return rows;
}

Applicability applicability(unsigned k, BoundTarget target, const KnownValues& known) {
    auto target_value = [&]() -> std::optional<std::size_t> {
        if (target.kind == BoundTarget::Kind::phi) return known.phi;
        return known.phi_s ? known.phi_s(target.s) : std::nullopt;
    };
    auto holds = [&](Precondition pre) -> bool {
        switch (pre) {
            case Precondition::none: return true;
            case Precondition::phi4_not_2: {
                auto v = known.phi_s ? known.phi_s(4) : std::nullopt;
                return v && *v != 2;
            }
            case Precondition::phi_not_2: return known.phi && *known.phi != 2;
            case Precondition::k_within_target: {
                auto v = target_value();
                return v && k <= *v;
            }
        }
        return false;
    };

    const LedgerRow* first_match = nullptr;
    for (const LedgerRow& row : applicability_ledger()) {
        if (row.k != 0 && row.k != k) continue;
        if (row.target != target.kind) continue;
        if (target.kind == BoundTarget::Kind::phi_s &&
            (target.s < row.min_s || (row.max_s != 0 && target.s > row.max_s)))
            continue;
        if (!first_match) first_match = &row;
        if (holds(row.pre)) return {true, row.tag};
    }
    if (!first_match) return {false, "no applicable result"};
    return {false, std::string(first_match->tag) + " precondition"};
}

bool thm32_check(const Graph& g, const Partition& p, unsigned k) {
    if (!p.certified) throw DomainError("thm32_check needs a certified partition");
    if (k == 0) throw DomainError("thm32_check needs k >= 1");
    const std::size_t r = p.size();
    if (k > r)
        throw DomainError("thm32_check needs k <= r (k=" + std::to_string(k) +
                          ", r=" + std::to_string(r) + ")");
    for (const auto& part : p.parts)
        if (!is_delta_k_small(g, VertexSet(g, part), k).holds)
            throw DomainError("partition part is not delta_" + std::to_string(k) + "-small");
    return power_mean_fits(g.degrees(), k, r);
}

BigInt floor_half_root(const BigInt& u, const BigInt& t, const BigInt& m) {
    // floor((u + x) / m) == floor((u + floor(x)) / m) for integer u and m > 0.
    return floor_div(u + isqrt(t), m);
}

std::size_t thm55_bound(const Graph& g, const VertexSet& a) {
    require_owned(g, a);
    if (!is_delta_k_small(g, a, 1).holds) throw DomainError("thm55_bound needs a delta_1-small set");
    const BigInt n = static_cast<unsigned long>(g.n());
    const BigInt twice_e = 2ul * static_cast<unsigned long>(g.edge_count());
    // s = p / q = D_1(V \ A).
    BigInt p = 0, q = 1;
    const std::size_t outside = g.n() - a.size();
    if (outside > 0) {
        for (Vertex v = 0; v < g.n(); ++v)
            if (!a.contains(v)) p += g.degrees()[v];
        q = static_cast<unsigned long>(outside);
    }
    // (n - s)/2 + sqrt((n - s)^2/4 + n s - 2e) = (U + sqrt(T)) / (2q) with
    // U = nq - p and T = U^2 + 4q (n p - 2e q).
    const BigInt u = n * q - p;
    const BigInt t = u * u + 4 * q * (n * p - twice_e * q);
    return floor_half_root(u, t, 2 * q).get_ui();
}

Cor56Bounds cor56_bounds(const Graph& g) {
    require_vertices(g, "cor56_bounds");
    const BigInt n = static_cast<unsigned long>(g.n());
    const BigInt top = static_cast<unsigned long>(g.max_degree());
    const BigInt twice_e = 2ul * static_cast<unsigned long>(g.edge_count());
    const BigInt u = n - top;
    Cor56Bounds out;
    out.bound1 = floor_half_root(u, u * u + 4 * (n * top - twice_e), 2).get_ui();
    out.bound2 = floor_half_root(1, 1 + 4 * (n * n - n - twice_e), 2).get_ui();
    return out;
}

}  // namespace deltasets
