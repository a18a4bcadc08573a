#include "app.hpp"

#include <deltasets/corpus.hpp>
#include <deltasets/errors.hpp>
#include <deltasets/generators.hpp>
#include <deltasets/graph_io.hpp>
#include <deltasets/lemma.hpp>
#include <deltasets/parallel.hpp>
#include <deltasets/report.hpp>
#include <deltasets/scan.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

namespace deltasets::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Config {
    std::vector<std::string> inputs;
    std::string format = "auto";
    std::string gnp;
    std::string regular;
    std::string exhaustive;
    unsigned k_max = 0;
    std::size_t exact_limit = kDefaultExactLimit;
    std::size_t exhaustive_limit = kDefaultExhaustiveLimit;
    std::size_t enumerate_limit = kDefaultEnumerateLimit;
    std::size_t clique_limit = kDefaultCliqueLimit;
    std::size_t chi_limit = kDefaultChromaticLimit;
    std::size_t jobs = 1;
    std::uint64_t seed = 1;
    std::string out;
    std::string emit = "json";
    std::string resume_from;

    // fuzz-lemma
    std::string r_range = "2..12";
    std::string k_range;
    std::size_t trials = 10000;
    std::uint64_t denominator = 1000000;
    bool no_climb = false;
    bool allow_k_above_r = false;
};

std::pair<std::size_t, std::size_t> parse_range(const std::string& text, const char* what) {
    auto number = [&](const std::string& s) {
        std::size_t pos = 0;
        unsigned long long v = 0;
        try {
            v = std::stoull(s, &pos);
        } catch (const std::exception&) {
            pos = std::string::npos;
        }
        if (s.empty() || pos != s.size()) throw UsageError(std::string("bad ") + what + " '" + text + "'");
        return static_cast<std::size_t>(v);
    };
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const std::size_t v = number(text);
        return {v, v};
    }
    const std::size_t a = number(text.substr(0, dots));
    const std::size_t b = number(text.substr(dots + 2));
    if (a > b) throw UsageError(std::string("empty ") + what + " range '" + text + "'");
    return {a, b};
}

/// "n=10,p=0.5,count=100,seed=7" -> key/value map.
std::map<std::string, std::string> parse_params(const std::string& text, const std::set<std::string>& keys,
                                              const char* flag) {
    std::map<std::string, std::string> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw UsageError(std::string(flag) + ": expected key=value, got '" + item + "'");
        const std::string key = item.substr(0, eq);
        if (!keys.count(key)) throw UsageError(std::string(flag) + ": unknown key '" + key + "'");
        out[key] = item.substr(eq + 1);
    }
    return out;
}

template <typename T>
T param_value(const std::map<std::string, std::string>& params, const std::string& key, const char* flag,
             std::optional<T> fallback = std::nullopt) {
    auto it = params.find(key);
    if (it == params.end()) {
        if (fallback) return *fallback;
        throw UsageError(std::string(flag) + ": missing " + key);
    }
    std::istringstream in(it->second);
    T value{};
    if (!(in >> value) || !in.eof())
        throw UsageError(std::string(flag) + ": bad value for " + key + " '" + it->second + "'");
    return value;
}

GraphFormat detect_format(const std::string& path) {
    const std::string ext = std::filesystem::path(path).extension().string();
    if (ext == ".dimacs" || ext == ".col" || ext == ".clq") return GraphFormat::dimacs;
    if (ext == ".edges" || ext == ".edgelist" || ext == ".el") return GraphFormat::edgelist;
    std::ifstream in(path);
    for (std::string line; std::getline(in, line);) {
        const auto start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        const char c = line[start];
        if (c == 'c') continue;
        return c == 'p' ? GraphFormat::dimacs : GraphFormat::edgelist;
    }
    return GraphFormat::edgelist;
}

std::size_t source_count(const Config& c) {
    return (!c.inputs.empty()) + (!c.gnp.empty()) + (!c.regular.empty()) + (!c.exhaustive.empty());
}

std::unique_ptr<Corpus> make_corpus(const Config& c, std::ostream& err) {
    if (source_count(c) != 1)
        throw UsageError("exactly one input source is required (--input, --gnp, --regular or --exhaustive)");
    if (!c.inputs.empty()) {
        std::vector<CorpusItem> items;
        for (const std::string& path : c.inputs) {
            if (!std::filesystem::exists(path)) throw InputError(path + ": no such file");
            const GraphFormat format = c.format == "auto" ? detect_format(path) : parse_graph_format(c.format);
            Diagnostics diag;
            try {
                Graph g = read_graph_file(path, format, &diag);
                items.push_back({items.size(), path, std::move(g)});
            } catch (const InputError& e) {
                throw InputError(path + ": " + e.what());
            }
            for (const std::string& d : diag) err << "warning: " << path << ": " << d << '\n';
        }
        return vector_corpus(std::move(items));
    }
    if (!c.gnp.empty()) {
        const auto params = parse_params(c.gnp, {"n", "p", "count", "seed"}, "--gnp");
        const double p = param_value<double>(params, "p", "--gnp");
        if (!(p >= 0.0 && p <= 1.0)) throw UsageError("--gnp: p must lie in [0,1]");
        return gnp_corpus(param_value<std::size_t>(params, "n", "--gnp"), p,
                          param_value<std::size_t>(params, "count", "--gnp", std::size_t{1}),
                          param_value<std::uint64_t>(params, "seed", "--gnp", c.seed));
    }
    if (!c.regular.empty()) {
        const auto params = parse_params(c.regular, {"n", "r", "count", "seed"}, "--regular");
        return regular_corpus(param_value<std::size_t>(params, "n", "--regular"),
                              param_value<std::size_t>(params, "r", "--regular"),
                              param_value<std::size_t>(params, "count", "--regular", std::size_t{1}),
                              param_value<std::uint64_t>(params, "seed", "--regular", c.seed));
    }
    auto [a, b] = parse_range(c.exhaustive, "--exhaustive");
    if (a == 0) throw UsageError("--exhaustive: n must be at least 1");
    return exhaustive_corpus(a, b, c.enumerate_limit);
}

AnalysisOptions analysis_options(const Config& c) {
    AnalysisOptions o;
    o.k_max = c.k_max;
    o.exact_limit = c.exact_limit;
    o.exhaustive_limit = c.exhaustive_limit;
    o.clique_limit = c.clique_limit;
    o.chromatic_limit = c.chi_limit;
    return o;
}

void check_limits(const Config& c) {
    if (c.exact_limit > kMaxExactLimit)
        throw LimitError("--exact-limit " + std::to_string(c.exact_limit) + " exceeds the maximum " +
                             std::to_string(kMaxExactLimit),
                         c.exact_limit, kMaxExactLimit);
    if (c.exhaustive_limit > kMaxTableVertices)
        throw LimitError("--exhaustive-limit " + std::to_string(c.exhaustive_limit) + " exceeds the maximum " +
                             std::to_string(kMaxTableVertices),
                         c.exhaustive_limit, kMaxTableVertices);
    if (c.clique_limit > 64)
        throw LimitError("--clique-limit exceeds the maximum 64", c.clique_limit, 64);
    if (c.chi_limit > 64) throw LimitError("--chi-limit exceeds the maximum 64", c.chi_limit, 64);
}

std::set<std::string> resumed_ids(const std::string& path) {
    std::set<std::string> ids;
    if (path.empty()) return ids;
    std::ifstream in(path);
    if (!in) throw InputError(path + ": cannot open resume file");
    for (std::string line; std::getline(in, line);) {
        if (line.empty()) continue;
        auto j = nlohmann::json::parse(line, nullptr, false);
        // A truncated last line from an interrupted run is simply recomputed.
        if (j.is_discarded() || !j.is_object() || !j.contains("id")) continue;
        ids.insert(j["id"].get<std::string>());
    }
    return ids;
}

/// Skips corpus items whose ids were already emitted.
class FilteredCorpus final : public Corpus {
public:
    FilteredCorpus(Corpus& inner, std::set<std::string> skip) : inner_(inner), skip_(std::move(skip)) {}
    bool next(CorpusItem& out) override {
        while (inner_.next(out))
            if (!skip_.count(out.id)) return true;
        return false;
    }

private:
    Corpus& inner_;
    std::set<std::string> skip_;
};

/// Output target: --out path (appending when resuming into the same file)
/// or the caller's stream.
class Sink {
public:
    Sink(const Config& c, std::ostream& fallback) : stream_(&fallback) {
        if (c.out.empty()) return;
        const bool append = !c.resume_from.empty() && std::filesystem::exists(c.out) &&
                            std::filesystem::equivalent(c.out, c.resume_from);
        file_.open(c.out, append ? std::ios::app : std::ios::trunc);
        if (!file_) throw InputError(c.out + ": cannot open for writing");
        stream_ = &file_;
        appending_ = append;
    }
    std::ostream& operator*() { return *stream_; }
    bool appending() const { return appending_; }

private:
    std::ofstream file_;
    std::ostream* stream_;
    bool appending_ = false;
};

struct NoState {};

struct Analyzed {
    BoundReport report;
    std::vector<BoundRow> confirmed;
};

void report_finding(std::ostream& err, const CorpusItem& item, const std::vector<BoundRow>& rows) {
    err << "FINDING in graph " << item.id << ":\n";
    for (const BoundRow& b : rows)
        err << "  " << b.name << " [" << b.tag << "]: " << to_string(b.lhs)
            << (b.relation == Relation::le ? " <= " : " == ") << to_string(b.rhs) << " fails\n";
    err << "reproducer (DIMACS):\n";
    write_dimacs(err, item.graph);
}

int cmd_analyze(const Config& c, std::ostream& out, std::ostream& err, bool verify) {
    check_limits(c);
    const EmitFormat emit = parse_emit_format(c.emit);
    auto base = make_corpus(c, err);
    FilteredCorpus corpus(*base, resumed_ids(c.resume_from));
    Sink sink(c, out);
    const AnalysisOptions options = analysis_options(c);

    std::size_t graphs = 0, checks = 0, failed = 0, confirmed = 0;
    std::map<std::string, std::size_t> by_tag;
    std::map<std::string, std::size_t> failed_by_tag;  // "tag" or "tag (note)"
    std::map<std::string, std::size_t> skipped;
    if (emit == EmitFormat::csv && !sink.appending()) write_csv_header(*sink);

    ordered_map<NoState, Analyzed>(
        corpus, c.jobs,
        [&](NoState&, const CorpusItem& item) {
            Analyzed a{analyze_graph(item.graph, item.id, options), {}};
            if (!a.report.all_satisfied()) a.confirmed = confirm_failures(item.graph, a.report, options);
            return a;
        },
        [&](const CorpusItem& item, Analyzed& a) {
            const BoundReport& r = a.report;
            ++graphs;
            checks += r.checks();
            failed += r.failures().size();
            for (const BoundRow& b : r.bounds)
                if (b.applicable) ++by_tag[b.tag];
            for (const BoundRow* b : r.failures())
                ++failed_by_tag[b->note.empty() ? b->tag : b->tag + " (" + b->note + ")"];
            for (const auto& [key, why] : r.skipped) ++skipped[key];
            if (!a.confirmed.empty()) {
                confirmed += a.confirmed.size();
                report_finding(err, item, a.confirmed);
            } else if (!r.all_satisfied()) {
                err << "warning: " << item.id << ": " << r.failures().size()
                    << " failed rows did not reproduce on recheck\n";
            }
            if (!verify) {
                if (emit == EmitFormat::json) *sink << report_json(r) << '\n';
                else if (emit == EmitFormat::csv) write_csv_rows(*sink, r);
                else write_human(*sink, r);
                return;
            }
            if (emit == EmitFormat::json) {
                nlohmann::ordered_json j;
                j["index"] = item.index;
                j["id"] = item.id;
                j["n"] = r.n;
                j["edges"] = r.edges;
                j["phi_k"] = r.phi_k;
                j["phi"] = r.phi;
                j["phi_alpha"] = r.phi_alpha;
                j["alpha_k"] = r.alpha_k;
                j["s_small"] = r.s_small;
                j["checks"] = r.checks();
                j["failed"] = r.failures().size();
                j["confirmed"] = a.confirmed.size();
                *sink << j.dump() << '\n';
            } else if (emit == EmitFormat::csv) {
                write_csv_rows(*sink, r);
            }
        });

    if (verify) {
        if (emit == EmitFormat::json) {
            nlohmann::ordered_json s;
            s["graphs"] = graphs;
            s["checks"] = checks;
            s["passed"] = checks - failed;
            s["failed"] = failed;
            s["confirmed"] = confirmed;
            s["by_tag"] = by_tag;
            s["failed_by_tag"] = failed_by_tag;
            s["skipped"] = skipped;
            *sink << nlohmann::ordered_json{{"summary", s}}.dump() << '\n';
        } else if (emit == EmitFormat::human) {
            *sink << "graphs " << graphs << ", checks " << checks << ", passed " << checks - failed
                  << ", failed " << failed << ", confirmed findings " << confirmed << '\n';
            for (const auto& [tag, count] : by_tag) *sink << "  " << std::left << std::setw(16) << tag << count << '\n';
            for (const auto& [tag, count] : failed_by_tag) *sink << "  failed " << tag << ": " << count << '\n';
            for (const auto& [key, count] : skipped) *sink << "  skipped " << key << ": " << count << " graphs\n";
        }
    }
    return confirmed ? kFinding : kOk;
}

struct ScanState {
    ScanCache cache;
};

int cmd_scan(const Config& c, std::ostream& out, std::ostream& err) {
    check_limits(c);
    auto base = make_corpus(c, err);
    FilteredCorpus corpus(*base, resumed_ids(c.resume_from));
    Sink sink(c, out);
    ScanOptions options;
    options.exact_limit = c.exact_limit;
    std::size_t records = 0, skipped = 0, candidates = 0, confirmed = 0;
    ordered_map<ScanState, ScanRecord>(
        corpus, c.jobs,
        [&](ScanState& s, const CorpusItem& item) {
            return scan_graph(item.graph, item.index, item.id, options, &s.cache);
        },
        [&](const CorpusItem&, ScanRecord& r) {
            ++records;
            skipped += r.skipped.has_value();
            candidates += r.candidate();
            confirmed += r.candidate() && r.confirmed;
            *sink << scan_json(r) << '\n';
        });
    err << "scanned " << records << " graphs: " << skipped << " skipped, " << candidates
        << " with phi^alpha outside the phi^(k) staircase, " << confirmed << " confirmed by recomputation\n";
    return kOk;
}

int cmd_fuzz(const Config& c, std::ostream& out, std::ostream& err) {
    const auto [r_lo, r_hi] = parse_range(c.r_range, "--r");
    if (r_lo < 1) throw UsageError("--r must be at least 1");
    std::optional<std::pair<std::size_t, std::size_t>> ks;
    if (!c.k_range.empty()) ks = parse_range(c.k_range, "--k");
    if (ks && ks->first < 1) throw UsageError("--k must be at least 1");
    if (ks && !c.allow_k_above_r && ks->second > r_lo)
        throw UsageError("k must not exceed r (got k up to " + std::to_string(ks->second) + " with r = " +
                         std::to_string(r_lo) + ")");
    const EmitFormat emit = parse_emit_format(c.emit);
    Sink sink(c, out);
    FuzzOptions o;
    o.trials = c.trials;
    o.seed = c.seed;
    o.denominator = c.denominator;
    o.hill_climb = !c.no_climb;
    o.allow_k_above_r = c.allow_k_above_r;
    if (emit == EmitFormat::csv) *sink << "r,k,trials,rhs,max_lhs,climb_lhs,climb_gap,violations\n";
    std::size_t violations = 0;
    for (std::size_t r = r_lo; r <= r_hi; ++r) {
        const std::size_t k_lo = ks ? ks->first : 1;
        const std::size_t k_hi = ks ? ks->second : r;
        for (std::size_t k = k_lo; k <= k_hi; ++k) {
            FuzzOptions trial = o;
            trial.seed = o.seed + 1000003ULL * r + k;
            const FuzzResult f = lemma31_fuzz(r, static_cast<unsigned>(k), trial);
            std::size_t real = 0;
            if (f.violation) {
                const SimplexSides again = simplex_sides(*f.violation, static_cast<unsigned>(k));
                real = again.holds ? 0 : f.violations;
            }
            violations += real;
            const std::string max_lhs = f.max_lhs ? to_string(*f.max_lhs) : "";
            const std::string climb = f.climb_lhs ? to_string(*f.climb_lhs) : "";
            std::optional<double> gap;
            if (f.climb_lhs) gap = to_double(f.rhs - *f.climb_lhs);
            if (emit == EmitFormat::json) {
                nlohmann::ordered_json j;
                j["r"] = r;
                j["k"] = k;
                j["trials"] = f.trials;
                j["rhs"] = to_string(f.rhs);
                j["max_lhs"] = f.max_lhs ? nlohmann::ordered_json(max_lhs) : nlohmann::ordered_json(nullptr);
                j["climb_lhs"] = f.climb_lhs ? nlohmann::ordered_json(climb) : nlohmann::ordered_json(nullptr);
                j["climb_gap"] = gap ? nlohmann::ordered_json(*gap) : nlohmann::ordered_json(nullptr);
                j["violations"] = real;
                *sink << j.dump() << '\n';
            } else if (emit == EmitFormat::csv) {
                *sink << r << ',' << k << ',' << f.trials << ',' << to_string(f.rhs) << ',' << max_lhs << ','
                      << climb << ',';
                if (gap) *sink << *gap;
                *sink << ',' << real << '\n';
            } else {
                *sink << "r=" << std::setw(2) << r << " k=" << std::setw(2) << k << "  trials " << f.trials
                      << "  rhs " << std::setprecision(9) << to_double(f.rhs);
                if (f.max_lhs) *sink << "  max lhs " << to_double(*f.max_lhs);
                if (gap) *sink << "  climb gap " << std::setprecision(3) << *gap;
                *sink << "  violations " << real << '\n';
            }
            if (real) {
                err << "FINDING r=" << r << " k=" << k << " at beta =";
                for (const Rational& b : f.violation->betas) err << ' ' << to_string(b);
                err << '\n';
            }
        }
    }
    return violations ? kFinding : kOk;
}

int cmd_gen(const Config& c, std::ostream& out, std::ostream& err) {
    if (!c.inputs.empty()) throw UsageError("gen takes a generator (--gnp, --regular or --exhaustive)");
    const GraphFormat format = parse_graph_format(c.format == "auto" ? "dimacs" : c.format);
    auto corpus = make_corpus(c, err);
    std::vector<CorpusItem> items;
    for (CorpusItem item; corpus->next(item);) items.push_back(std::move(item));
    auto write = [&](std::ostream& s, const Graph& g) {
        if (format == GraphFormat::dimacs) write_dimacs(s, g);
        else write_edgelist(s, g);
    };
    if (items.size() == 1) {
        if (c.out.empty()) {
            write(out, items[0].graph);
        } else {
            std::ofstream f(c.out);
            if (!f) throw InputError(c.out + ": cannot open for writing");
            write(f, items[0].graph);
        }
        return kOk;
    }
    if (c.out.empty()) throw UsageError("gen with more than one graph needs --out <directory>");
    std::filesystem::create_directories(c.out);
    const std::string ext = format == GraphFormat::dimacs ? ".dimacs" : ".edges";
    const int width = static_cast<int>(std::to_string(items.empty() ? 0 : items.size() - 1).size());
    for (const CorpusItem& item : items) {
        std::ostringstream name;
        name << "graph-" << std::setw(width) << std::setfill('0') << item.index << ext;
        std::ofstream f(std::filesystem::path(c.out) / name.str());
        if (!f) throw InputError(c.out + ": cannot write " + name.str());
        write(f, item.graph);
    }
    err << "wrote " << items.size() << " graphs to " << c.out << '\n';
    return kOk;
}

void add_source_flags(CLI::App* app, Config& c) {
    app->add_option("--input", c.inputs, "Graph file (repeatable)");
    app->add_option("--format", c.format, "Input format: auto, dimacs or edgelist")
        ->check(CLI::IsMember({"auto", "dimacs", "edgelist"}));
    app->add_option("--gnp", c.gnp, "G(n,p) corpus: n=..,p=..,count=..,seed=..");
    app->add_option("--regular", c.regular, "Random regular corpus: n=..,r=..,count=..,seed=..");
    app->add_option("--exhaustive", c.exhaustive, "All labeled graphs on n (or a..b) vertices");
    app->add_option("--enumerate-limit", c.enumerate_limit, "Largest n for --exhaustive");
    app->add_option("--seed", c.seed, "Default seed for generators");
}

void add_limit_flags(CLI::App* app, Config& c) {
    app->add_option("--kmax", c.k_max, "Largest exponent k reported (default n)");
    app->add_option("--exact-limit", c.exact_limit, "Largest n solved exactly (env DELTASETS_EXACT_LIMIT)");
    app->add_option("--exhaustive-limit", c.exhaustive_limit, "Largest n for the k0 subset sweep");
    app->add_option("--clique-limit", c.clique_limit, "Largest n for omega and alpha");
    app->add_option("--chi-limit", c.chi_limit, "Largest n for chi");
    app->add_option("--jobs", c.jobs, "Worker threads")->check(CLI::PositiveNumber);
}

void add_output_flags(CLI::App* app, Config& c, bool resumable) {
    app->add_option("--out", c.out, "Output path (default stdout)");
    app->add_option("--emit", c.emit, "Output format: json, csv or human")
        ->check(CLI::IsMember({"json", "csv", "human"}));
    if (resumable)
        app->add_option("--resume-from", c.resume_from, "Skip graph ids already present in this JSON-lines file");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Config c;
    if (const char* env = std::getenv("DELTASETS_EXACT_LIMIT")) {
        try {
            c.exact_limit = std::stoul(env);
        } catch (const std::exception&) {
            err << "error: DELTASETS_EXACT_LIMIT is not a number: " << env << '\n';
            return kUsage;
        }
    }

    CLI::App app{"Exact delta_k-small set invariants and bound verification"};
    app.require_subcommand(1);
    auto* analyze = app.add_subcommand("analyze", "Full invariant and bound report per graph");
    auto* verify = app.add_subcommand("verify", "Check every applicable bound over a corpus");
    auto* scan = app.add_subcommand("scan", "Compare phi^alpha with the phi^(k) staircase");
    auto* fuzz = app.add_subcommand("fuzz-lemma", "Fuzz the simplex inequality with exact rationals");
    auto* gen = app.add_subcommand("gen", "Write generated graphs to files");
    for (auto* sub : {analyze, verify, scan}) {
        add_source_flags(sub, c);
        add_limit_flags(sub, c);
        add_output_flags(sub, c, true);
    }
    add_source_flags(gen, c);
    gen->add_option("--out", c.out, "Output file, or directory when generating several graphs");
    fuzz->add_option("--r", c.r_range, "Part count r or range a..b");
    fuzz->add_option("--k", c.k_range, "Exponent k or range a..b (default 1..r)");
    fuzz->add_option("--trials", c.trials, "Samples per (r, k)");
    fuzz->add_option("--seed", c.seed, "Base seed");
    fuzz->add_option("--denominator", c.denominator, "Rational grid 1/D for samples")->check(CLI::PositiveNumber);
    fuzz->add_flag("--no-climb", c.no_climb, "Skip the hill climb");
    fuzz->add_flag("--allow-k-above-r", c.allow_k_above_r, "Evaluate k > r as well");
    add_output_flags(fuzz, c, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::ostringstream o, e2;
        const int code = app.exit(e, o, e2);
        out << o.str();
        err << e2.str();
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (analyze->parsed()) return cmd_analyze(c, out, err, false);
        if (verify->parsed()) return cmd_analyze(c, out, err, true);
        if (scan->parsed()) return cmd_scan(c, out, err);
        if (fuzz->parsed()) return cmd_fuzz(c, out, err);
        return cmd_gen(c, out, err);
    } catch (const LimitError& e) {
        err << "error: " << e.what() << '\n';
        return kLimit;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
}

}  // namespace deltasets::cli
