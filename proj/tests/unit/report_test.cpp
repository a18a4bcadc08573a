#include <deltasets/errors.hpp>
#include <deltasets/generators.hpp>
#include <deltasets/report.hpp>

#include <gtest/gtest.h>
#include <json.hpp>

#include "brute.hpp"

#include <sstream>

using namespace deltasets;
using nlohmann::json;

namespace {

Graph paw() { return from_edge_list(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}}); }

bool only_known_failures(const BoundReport& r) {
    for (const BoundRow* row : r.failures())
        if (row->tag != "Cor 4.1" || row->note != "k > s") return false;
    return true;
}

}  // namespace

TEST(Analyze, CycleC5) {
    const Graph g = cycle_graph(5);
    const BoundReport r = analyze_graph(g, "c5");
    EXPECT_EQ(r.phi, 2u);
    EXPECT_EQ(r.phi_alpha, 2u);
    EXPECT_EQ(r.k_max, 5u);
    EXPECT_EQ(r.alpha_k, (std::vector<std::size_t>{3, 3, 3, 3, 3}));
    EXPECT_EQ(r.phi_k, (std::vector<std::size_t>{2, 2, 2, 2, 2}));
    EXPECT_EQ(r.s_small, 3u);
    EXPECT_EQ(r.k0_alpha, 1u);
    EXPECT_EQ(r.k0_universal, 1u);
    EXPECT_EQ(r.k0_phi, 1u);
    EXPECT_EQ(r.omega, 2u);
    EXPECT_EQ(r.independence, 2u);
    EXPECT_EQ(r.chi, 3u);
    EXPECT_EQ(r.lb_avg, 2u);
    EXPECT_EQ(r.ub_maxdeg, 2u);
    EXPECT_TRUE(r.skipped.empty());
    EXPECT_TRUE(r.all_satisfied());
    EXPECT_GT(r.checks(), 20u);
}

TEST(Analyze, StarK13) {
    const BoundReport r = analyze_graph(star_graph(3), "k13");
    EXPECT_EQ(r.phi, 2u);
    EXPECT_EQ(r.s_small, 3u);
    EXPECT_EQ(r.k0_universal, 2u);
    EXPECT_EQ(r.omega, 2u);
    EXPECT_EQ(r.chi, 2u);
    EXPECT_EQ(r.independence, 3u);
    EXPECT_EQ(r.caro_wei, 2);
    EXPECT_TRUE(r.all_satisfied());
}

// Degrees (3,2,2,1): phi^(1) = 2 while D_2 = sqrt(4.5) exceeds n (r-1)/r = 2.
TEST(Analyze, PawExposesTheKAboveSRows) {
    const Graph g = paw();
    const BoundReport r = analyze_graph(g, "paw");
    EXPECT_EQ(r.phi_k[0], 2u);
    EXPECT_EQ(r.phi, 3u);
    EXPECT_FALSE(r.all_satisfied());
    ASSERT_TRUE(only_known_failures(r));
    bool saw = false;
    for (const BoundRow* row : r.failures())
        if (row->name == "lb_dk(2) <= phi^(1)") saw = true;
    EXPECT_TRUE(saw);
    AnalysisOptions o;
    EXPECT_EQ(confirm_failures(g, r, o).size(), r.failures().size());
}

TEST(Analyze, ReferenceModeAgrees) {
    AnalysisOptions ref;
    ref.reference = true;
    for (std::size_t n = 1; n <= 5; ++n)
        enumerate_graphs(n, [&](std::uint64_t code, const Graph& g) {
            const BoundReport a = analyze_graph(g, "g");
            const BoundReport b = analyze_graph(g, "g", ref);
            ASSERT_EQ(a.phi_k, b.phi_k) << code;
            ASSERT_EQ(a.phi, b.phi) << code;
            ASSERT_EQ(a.phi_alpha, b.phi_alpha) << code;
            ASSERT_EQ(a.alpha_k, b.alpha_k) << code;
            ASSERT_EQ(a.s_small, b.s_small) << code;
            ASSERT_EQ(a.k0_universal, b.k0_universal) << code;
            ASSERT_EQ(a.k0_alpha, b.k0_alpha) << code;
            ASSERT_EQ(a.k0_phi, b.k0_phi) << code;
            ASSERT_EQ(a.omega, b.omega) << code;
            ASSERT_EQ(a.chi, b.chi) << code;
            ASSERT_EQ(a.independence, b.independence) << code;
            ASSERT_TRUE(only_known_failures(a)) << code;
        });
}

TEST(Analyze, ValuesMatchBruteForce) {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        const Graph g = gen_gnp(6, 0.5, seed);
        const BoundReport r = analyze_graph(g, "g");
        ASSERT_EQ(r.phi, brute::phi(g, brute::Kind::small));
        ASSERT_EQ(r.phi_alpha, brute::phi(g, brute::Kind::alpha));
        for (unsigned k = 1; k <= r.k_max; ++k) ASSERT_EQ(r.phi_k[k - 1], brute::phi(g, brute::Kind::delta, k));
        ASSERT_EQ(r.k0_universal, brute::k0(g));
    }
}

TEST(Analyze, LimitsProduceSkips) {
    AnalysisOptions o;
    o.chromatic_limit = 8;
    const BoundReport r = analyze_graph(complete_graph(10), "k10", o);
    EXPECT_FALSE(r.chi.has_value());
    ASSERT_TRUE(r.skipped.count("chi"));
    EXPECT_EQ(r.skipped.at("chi"), "size limit 8");
    EXPECT_TRUE(r.all_satisfied());

    AnalysisOptions small;
    small.exact_limit = 8;
    small.k_max = 3;
    const BoundReport big = analyze_graph(gen_gnp(12, 0.4, 1), "g", small);
    EXPECT_EQ(big.phi_method, PhiMethod::greedy_upper_only);
    EXPECT_TRUE(big.skipped.count("phi"));
    EXPECT_TRUE(big.all_satisfied());
}

TEST(Report, JsonShape) {
    const BoundReport r = analyze_graph(cycle_graph(5), "c5");
    const std::string line = report_json(r);
    EXPECT_EQ(line.find('\n'), std::string::npos);
    const json j = json::parse(line);
    EXPECT_EQ(j["id"], "c5");
    EXPECT_EQ(j["n"], 5);
    EXPECT_EQ(j["phi"], 2);
    EXPECT_EQ(j["phi_method"], "exact_dp");
    EXPECT_EQ(j["all_satisfied"], true);
    ASSERT_TRUE(j["bounds"].is_array());
    EXPECT_EQ(j["bounds"].size(), r.bounds.size());
    EXPECT_EQ(j["checks"], r.checks());
    for (const char* key : {"name", "tag", "applicable", "lhs", "relation", "rhs", "satisfied"})
        EXPECT_TRUE(j["bounds"][0].contains(key)) << key;
}

TEST(Report, CsvAndHuman) {
    const BoundReport r = analyze_graph(cycle_graph(5), "c5");
    std::ostringstream csv;
    write_csv_header(csv);
    write_csv_rows(csv, r);
    std::istringstream lines(csv.str());
    std::string line;
    std::getline(lines, line);
    EXPECT_EQ(line, "graph_id,name,tag,lhs,relation,rhs,applicable,satisfied,note");
    std::size_t rows = 0;
    while (std::getline(lines, line)) {
        EXPECT_EQ(line.rfind("c5,", 0), 0u);
        ++rows;
    }
    EXPECT_EQ(rows, r.bounds.size());

    std::ostringstream human;
    write_human(human, r);
    EXPECT_NE(human.str().find("c5"), std::string::npos);
    EXPECT_EQ(human.str().find("✗"), std::string::npos);
}

TEST(Report, EmitFormat) {
    EXPECT_EQ(parse_emit_format("json"), EmitFormat::json);
    EXPECT_EQ(parse_emit_format("csv"), EmitFormat::csv);
    EXPECT_EQ(parse_emit_format("human"), EmitFormat::human);
    EXPECT_THROW(parse_emit_format("xml"), InputError);
}
