#include "deltasets/graph_io.hpp"

#include "deltasets/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

namespace deltasets {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

std::optional<std::uint64_t> to_uint(std::string_view tok) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) return std::nullopt;
    return value;
}

}  // namespace

GraphFormat parse_graph_format(std::string_view name) {
    if (name == "dimacs") return GraphFormat::dimacs;
    if (name == "edgelist") return GraphFormat::edgelist;
    throw InputError("unknown graph format '" + std::string(name) + "'");
}

Graph parse_dimacs(std::istream& in, Diagnostics* diag) {
    std::optional<std::size_t> n;
    std::size_t declared_edges = 0;
    std::size_t header_line = 0;
    std::vector<Edge> edges;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto tok = split_ws(line);
        if (tok.empty() || tok[0] == "c") continue;
        if (tok[0] == "p") {
            if (n) throw ParseError(lineno, "duplicate problem line (first at line " +
                                                std::to_string(header_line) + ")");
            if (tok.size() != 4 || (tok[1] != "edge" && tok[1] != "col"))
                throw ParseError(lineno, "expected 'p edge <n> <m>'");
            auto nv = to_uint(tok[2]);
            auto mv = to_uint(tok[3]);
            if (!nv || !mv) throw ParseError(lineno, "non-numeric vertex or edge count");
            n = *nv;
            declared_edges = *mv;
            header_line = lineno;
            edges.reserve(declared_edges);
        } else if (tok[0] == "e") {
            if (!n) throw ParseError(lineno, "edge line before the 'p edge' header");
            if (tok.size() != 3) throw ParseError(lineno, "expected 'e <u> <v>'");
            auto u = to_uint(tok[1]);
            auto v = to_uint(tok[2]);
            if (!u || !v) throw ParseError(lineno, "non-numeric vertex id");
            if (*u < 1 || *v < 1 || *u > *n || *v > *n)
                throw ParseError(lineno, "vertex id outside 1.." + std::to_string(*n));
            if (*u == *v) throw ParseError(lineno, "self-loop on vertex " + std::to_string(*u));
            edges.push_back({static_cast<Vertex>(*u - 1), static_cast<Vertex>(*v - 1)});
        } else {
            throw ParseError(lineno, "unrecognised line type '" + std::string(tok[0]) + "'");
        }
    }
    if (!n) throw ParseError(lineno + 1, "missing 'p edge' header");
    Graph g = from_edge_list(*n, edges, diag);
    if (diag && g.edge_count() != declared_edges)
        diag->push_back("header declares " + std::to_string(declared_edges) + " edges, found " +
                        std::to_string(g.edge_count()) + " distinct");
    return g;
}

Graph parse_dimacs(std::string_view text, Diagnostics* diag) {
    std::istringstream in{std::string(text)};
    return parse_dimacs(in, diag);
}

Graph parse_edgelist(std::istream& in, Diagnostics* diag) {
    std::optional<std::size_t> header_n;
    std::vector<std::pair<std::string, std::string>> raw;
    std::vector<std::size_t> raw_lines;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view view = line;
        if (auto hash = view.find('#'); hash != std::string_view::npos) {
            auto comment = split_ws(view.substr(hash + 1));
            if (!comment.empty() && comment[0].starts_with("n=")) {
                auto nv = to_uint(comment[0].substr(2));
                if (!nv) throw ParseError(lineno, "malformed '# n=<count>' header");
                header_n = *nv;
            }
            view = view.substr(0, hash);
        }
        const auto tok = split_ws(view);
        if (tok.empty()) continue;
        if (tok.size() != 2) throw ParseError(lineno, "expected two endpoints per line");
        raw.emplace_back(std::string(tok[0]), std::string(tok[1]));
        raw_lines.push_back(lineno);
    }

    bool numeric = true;
    for (const auto& [a, b] : raw) {
        auto x = to_uint(a);
        auto y = to_uint(b);
        if (!x || !y || *x == 0 || *y == 0) {
            numeric = false;
            break;
        }
    }

    std::vector<Edge> edges;
    edges.reserve(raw.size());
    std::size_t n = header_n.value_or(0);
    if (numeric) {
        std::size_t max_id = 0;
        for (const auto& [a, b] : raw) max_id = std::max({max_id, *to_uint(a), *to_uint(b)});
        if (header_n && max_id > *header_n) {
            for (std::size_t i = 0; i < raw.size(); ++i)
                if (*to_uint(raw[i].first) > *header_n || *to_uint(raw[i].second) > *header_n)
                    throw ParseError(raw_lines[i], "vertex id exceeds declared n=" +
                                                       std::to_string(*header_n));
        }
        n = std::max(n, max_id);
        for (std::size_t i = 0; i < raw.size(); ++i) {
            auto u = *to_uint(raw[i].first), v = *to_uint(raw[i].second);
            if (u == v) throw ParseError(raw_lines[i], "self-loop on vertex " + std::to_string(u));
            edges.push_back({static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1)});
        }
    } else {
        std::map<std::string, Vertex> ids;
        auto id_of = [&](const std::string& label) {
            auto [it, fresh] = ids.emplace(label, static_cast<Vertex>(ids.size()));
            return it->second;
        };
        for (std::size_t i = 0; i < raw.size(); ++i) {
            if (raw[i].first == raw[i].second)
                throw ParseError(raw_lines[i], "self-loop on label '" + raw[i].first + "'");
            Vertex u = id_of(raw[i].first);
            Vertex v = id_of(raw[i].second);
            edges.push_back({u, v});
        }
        if (header_n && ids.size() > *header_n)
            throw ParseError(lineno, "more distinct labels than declared n=" +
                                         std::to_string(*header_n));
        n = std::max(n, ids.size());
        if (diag) diag->push_back("labels mapped to ids by first appearance");
    }
    return from_edge_list(n, edges, diag);
}

Graph parse_edgelist(std::string_view text, Diagnostics* diag) {
    std::istringstream in{std::string(text)};
    return parse_edgelist(in, diag);
}

void write_dimacs(std::ostream& out, const Graph& g) {
    out << "p edge " << g.n() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
}

void write_edgelist(std::ostream& out, const Graph& g) {
    out << "# n=" << g.n() << '\n';
    for (const Edge& e : g.edges()) out << e.u + 1 << ' ' << e.v + 1 << '\n';
}

std::string to_dimacs(const Graph& g) {
    std::ostringstream out;
    write_dimacs(out, g);
    return out.str();
}

std::string to_edgelist(const Graph& g) {
    std::ostringstream out;
    write_edgelist(out, g);
    return out.str();
}

Graph read_graph_file(const std::string& path, GraphFormat format, Diagnostics* diag) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    return format == GraphFormat::dimacs ? parse_dimacs(in, diag) : parse_edgelist(in, diag);
}

}  // namespace deltasets
