#include "deltasets/lemma.hpp"

#include "deltasets/errors.hpp"
#include "deltasets/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace deltasets {

SimplexPoint SimplexPoint::make(std::vector<Rational> betas) {
    if (betas.empty()) throw DomainError("simplex point needs r >= 1 coordinates");
    Rational sum = 0;
    for (const Rational& b : betas) {
        if (b < 0 || b > 1) throw DomainError("simplex coordinate outside [0, 1]: " + to_string(b));
        sum += b;
    }
    const std::size_t r = betas.size();
    if (sum != Rational(static_cast<unsigned long>(r - 1)))
        throw DomainError("simplex coordinates sum to " + to_string(sum) + ", expected " +
                          std::to_string(r - 1));
    return SimplexPoint{r, std::move(betas)};
}

SimplexPoint SimplexPoint::uniform(std::size_t r) {
    if (r == 0) throw DomainError("simplex point needs r >= 1");
    Rational centre(static_cast<unsigned long>(r - 1), static_cast<unsigned long>(r));
    centre.canonicalize();
    return make(std::vector<Rational>(r, centre));
}

SimplexSides simplex_sides(const SimplexPoint& p, unsigned k) {
    if (k == 0) throw DomainError("simplex inequality needs k >= 1");
    SimplexSides out;
    out.lhs = 0;
    for (const Rational& b : p.betas) {
        Rational power;
        mpz_pow_ui(power.get_num_mpz_t(), b.get_num_mpz_t(), k);
        mpz_pow_ui(power.get_den_mpz_t(), b.get_den_mpz_t(), k);
        out.lhs += (1 - b) * power;
    }
    out.rhs = make_rational(pow_ui(p.r - 1, k), pow_ui(p.r, k));
    out.holds = out.lhs <= out.rhs;
    return out;
}

SimplexSides lemma31_check(const SimplexPoint& p, unsigned k) {
    if (k == 0 || k > p.r)
        throw DomainError("simplex inequality is stated for 1 <= k <= r (k=" + std::to_string(k) +
                          ", r=" + std::to_string(p.r) + ")");
    return simplex_sides(p, k);
}

namespace {

// Integer grid point: g_i = c_i / D with sum c_i = D, b_i = 1 - g_i.
using Grid = std::vector<std::uint64_t>;

Grid snap(const std::vector<double>& g, std::uint64_t denom) {
    const std::size_t r = g.size();
    Grid c(r);
    std::vector<std::pair<double, std::size_t>> remainder(r);
    std::uint64_t used = 0;
    for (std::size_t i = 0; i < r; ++i) {
        const double scaled = std::clamp(g[i], 0.0, 1.0) * static_cast<double>(denom);
        c[i] = static_cast<std::uint64_t>(std::floor(scaled));
        remainder[i] = {scaled - static_cast<double>(c[i]), i};
        used += c[i];
    }
    std::stable_sort(remainder.begin(), remainder.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });
    for (std::size_t j = 0; used < denom; j = (j + 1) % r, ++used) ++c[remainder[j].second];
    while (used > denom) {
        auto it = std::max_element(c.begin(), c.end());
        --*it;
        --used;
    }
    return c;
}

// D^(k+1) * lhs = sum c_i (D - c_i)^k.
BigInt scaled_lhs(const Grid& c, std::uint64_t denom, unsigned k) {
    BigInt sum = 0;
    for (std::uint64_t ci : c) sum += BigInt(static_cast<unsigned long>(ci)) * pow_ui(denom - ci, k);
    return sum;
}

SimplexPoint grid_point(const Grid& c, std::uint64_t denom) {
    std::vector<Rational> betas;
    betas.reserve(c.size());
    for (std::uint64_t ci : c)
        betas.push_back(make_rational(BigInt(static_cast<unsigned long>(denom - ci)),
                                      BigInt(static_cast<unsigned long>(denom))));
    return SimplexPoint::make(std::move(betas));
}

double value(const std::vector<double>& g, unsigned k) {
    double sum = 0.0;
    for (double x : g) sum += x * std::pow(1.0 - x, static_cast<double>(k));
    return sum;
}

std::vector<double> climb(std::vector<double> g, unsigned k) {
    const std::size_t r = g.size();
    double best = value(g, k);
    for (double step = 0.5 / static_cast<double>(r); step > 1e-13; step *= 0.5) {
        bool improved = true;
        while (improved) {
            improved = false;
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j) {
                    if (i == j || g[j] < step) continue;
                    g[i] += step;
                    g[j] -= step;
                    const double v = value(g, k);
                    if (v > best) {
                        best = v;
                        improved = true;
                    } else {
                        g[i] -= step;
                        g[j] += step;
                    }
                }
        }
    }
    return g;
}

}  // namespace

FuzzResult lemma31_fuzz(std::size_t r, unsigned k, const FuzzOptions& options) {
    if (r == 0 || k == 0) throw DomainError("fuzzing needs r >= 1 and k >= 1");
    if (k > r && !options.allow_k_above_r)
        throw DomainError("simplex inequality is stated for k <= r (k=" + std::to_string(k) +
                          ", r=" + std::to_string(r) + ")");
    if (options.denominator == 0) throw DomainError("snap denominator must be positive");

    const std::uint64_t denom = options.denominator;
    FuzzResult out;
    out.r = r;
    out.k = k;
    out.trials = options.trials;
    out.rhs = make_rational(pow_ui(r - 1, k), pow_ui(r, k));
    // Sample lhs * D^(k+1) compared against rhs * D^(k+1) = (r-1)^k D^(k+1) / r^k.
    const BigInt rhs_num = pow_ui(r - 1, k) * pow_ui(denom, k + 1);
    const BigInt rhs_den = pow_ui(r, k);

    Rng rng(options.seed);
    std::vector<double> g(r);
    std::vector<double> best_g;
    BigInt best_scaled = -1;
    for (std::size_t t = 0; t < options.trials; ++t) {
        double total = 0.0;
        for (double& x : g) {
            x = -std::log(1.0 - uniform01(rng));
            total += x;
        }
        for (double& x : g) x /= total;
        const Grid c = snap(g, denom);
        const BigInt scaled = scaled_lhs(c, denom, k);
        if (scaled * rhs_den > rhs_num) {
            ++out.violations;
            if (!out.violation) out.violation = grid_point(c, denom);
        }
        if (scaled > best_scaled) {
            best_scaled = scaled;
            best_g.assign(c.size(), 0.0);
            for (std::size_t i = 0; i < r; ++i)
                best_g[i] = static_cast<double>(c[i]) / static_cast<double>(denom);
            out.max_point = grid_point(c, denom);
        }
    }
    if (out.trials > 0) out.max_lhs = make_rational(best_scaled, pow_ui(denom, k + 1));

    if (options.hill_climb && !best_g.empty()) {
        const Grid c = snap(climb(best_g, k), denom);
        out.climb_point = grid_point(c, denom);
        const SimplexSides sides = simplex_sides(*out.climb_point, k);
        out.climb_lhs = sides.lhs;
        if (!sides.holds) {
            ++out.violations;
            if (!out.violation) out.violation = out.climb_point;
        }
    }
    return out;
}

}  // namespace deltasets
