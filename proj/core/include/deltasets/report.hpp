#pragma once

#include "deltasets/bounds.hpp"
#include "deltasets/exact.hpp"
#include "deltasets/extremal.hpp"
#include "deltasets/graph.hpp"
#include "deltasets/oracles.hpp"
#include "deltasets/partition.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace deltasets {

struct AnalysisOptions {
    unsigned k_max = 0;  // 0: use n
    std::size_t exact_limit = kDefaultExactLimit;
    std::size_t exhaustive_limit = kDefaultExhaustiveLimit;
    std::size_t clique_limit = kDefaultCliqueLimit;
    std::size_t chromatic_limit = kDefaultChromaticLimit;
    unsigned stabilization_cap = kDefaultStabilizationCap;
    /// Largest n for the exhaustive |A| <= thm55_bound(A) sweep.
    std::size_t thm55_sweep_limit = 10;
    /// Recompute every exact quantity along slower independent routes:
    /// subset tables from the VertexSet predicates, subset maxima instead of
    /// the prefix rule, subset-DP colouring and brute-force cliques.
    bool reference = false;
};

enum class Relation { le, eq };

struct BoundRow {
    std::string name;
    std::string tag;
    Rational lhs;
    Rational rhs;
    Relation relation = Relation::le;
    bool applicable = true;
    bool satisfied = true;
    std::string note;
};

struct BoundReport {
    std::string graph_id;
    std::size_t n = 0;
    std::size_t edges = 0;
    std::size_t max_degree = 0;
    std::size_t min_degree = 0;
    std::vector<std::uint32_t> degrees;
    unsigned k_max = 1;

    std::vector<double> dk;  // D_k(G) for k = 1..k_max, display only

    std::vector<std::size_t> alpha_k;  // k = 1..k_max
    std::size_t s_small = 0;
    std::optional<unsigned> k0_alpha;
    std::optional<unsigned> k0_universal;

    PhiMethod phi_method = PhiMethod::exact_dp;
    std::vector<std::size_t> phi_k;  // k = 1..k_max
    std::size_t phi = 0;
    std::size_t phi_alpha = 0;
    std::optional<unsigned> k0_phi;

    std::optional<std::size_t> omega;
    std::optional<std::size_t> independence;
    std::optional<std::size_t> chi;

    Rational caro_wei;
    std::size_t lb_avg = 0;
    std::size_t ub_maxdeg = 0;
    std::vector<std::size_t> lb_dk;  // k = 1..k_max
    Cor56Bounds cor56;

    std::vector<BoundRow> bounds;
    /// Quantities that were not computed, with the reason.
    std::map<std::string, std::string> skipped;

    std::size_t checks() const;
    std::vector<const BoundRow*> failures() const;
    bool all_satisfied() const { return failures().empty(); }
};

BoundReport analyze_graph(const Graph& g, const std::string& id, const AnalysisOptions& options = {});

/// Re-runs the analysis in reference mode and keeps only the failures that
/// reproduce there (matched by row name).
std::vector<BoundRow> confirm_failures(const Graph& g, const BoundReport& report,
                                       const AnalysisOptions& options);

enum class EmitFormat { json, csv, human };

EmitFormat parse_emit_format(const std::string& name);

/// One JSON object on a single line (no trailing newline).
std::string report_json(const BoundReport& r);
void write_csv_header(std::ostream& out);
void write_csv_rows(std::ostream& out, const BoundReport& r);
void write_human(std::ostream& out, const BoundReport& r);

}  // namespace deltasets
