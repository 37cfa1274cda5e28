#include "vck/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace vck {

using nlohmann::json;

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        out.push_back(line);
        start = end + 1;
    }
    return out;
}

std::vector<std::string_view> tokens(std::string_view line) {
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

std::optional<std::uint64_t> to_int(std::string_view s) {
    std::uint64_t x = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
    if (ec != std::errc() || p != s.data() + s.size()) return std::nullopt;
    return x;
}

void add_edge_lenient(Graph& g, VertexId u, VertexId v) {
    if (u != v && !g.has_edge(u, v)) g.add_edge(u, v);
}

// position of each live id in increasing order
std::vector<std::size_t> positions(const Graph& g, const VertexList& ids) {
    std::vector<std::size_t> pos(g.next_id(), 0);
    for (std::size_t i = 0; i < ids.size(); ++i) pos[ids[i]] = i;
    return pos;
}

}  // namespace

std::optional<GraphFormat> parse_format(std::string_view s) {
    if (s == "pace" || s == "gr") return GraphFormat::Pace;
    if (s == "edgelist" || s == "edge_list" || s == "el" || s == "txt") return GraphFormat::EdgeList;
    if (s == "graph6" || s == "g6") return GraphFormat::Graph6;
    return std::nullopt;
}

GraphFormat guess_format(std::string_view path) {
    auto ends = [&](std::string_view suf) {
        return path.size() >= suf.size() && path.substr(path.size() - suf.size()) == suf;
    };
    if (ends(".gr")) return GraphFormat::Pace;
    if (ends(".g6")) return GraphFormat::Graph6;
    return GraphFormat::EdgeList;
}

Graph parse_pace(std::string_view text) {
    auto lines = split_lines(text);
    std::optional<Graph> g;
    std::uint64_t n = 0;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        auto t = tokens(lines[i]);
        if (t.empty() || t[0] == "c") continue;
        std::size_t ln = i + 1;
        if (t[0] == "p") {
            if (g) throw ParseError(ln, "duplicate header");
            if (t.size() != 4) throw ParseError(ln, "malformed header, expected 'p <descriptor> <n> <m>'");
            auto nn = to_int(t[2]), mm = to_int(t[3]);
            if (!nn || !mm) throw ParseError(ln, "malformed header counts");
            n = *nn;
            g.emplace(n);
            continue;
        }
        if (!g) throw ParseError(ln, "edge before header");
        if (t.size() != 2) throw ParseError(ln, "expected 'u v'");
        auto u = to_int(t[0]), v = to_int(t[1]);
        if (!u || !v) throw ParseError(ln, "non-integer endpoint");
        if (*u < 1 || *u > n || *v < 1 || *v > n) throw ParseError(ln, "endpoint out of range");
        add_edge_lenient(*g, static_cast<VertexId>(*u - 1), static_cast<VertexId>(*v - 1));
    }
    if (!g) throw ParseError(lines.size(), "missing header");
    return std::move(*g);
}

std::string emit_pace(const Graph& g) {
    VertexList ids = g.vertex_list();
    auto pos = positions(g, ids);
    std::ostringstream os;
    os << "p td " << ids.size() << ' ' << g.num_edges() << '\n';
    for (const Edge& e : g.edges()) os << pos[e.u] + 1 << ' ' << pos[e.v] + 1 << '\n';
    return os.str();
}

Graph parse_edge_list(std::string_view text) {
    auto lines = split_lines(text);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;
    std::optional<std::uint64_t> declared;
    std::uint64_t maxv = 0;
    bool any = false;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        std::string_view line = lines[i];
        std::size_t ln = i + 1;
        std::size_t hash = line.find('#');
        if (hash != std::string_view::npos) {
            auto t = tokens(line.substr(hash + 1));
            if (t.size() == 2 && t[0] == "vertices:") {
                declared = to_int(t[1]);
                if (!declared) throw ParseError(ln, "bad vertex count");
            }
            line = line.substr(0, hash);
        }
        auto t = tokens(line);
        if (t.empty()) continue;
        if (t.size() != 2) throw ParseError(ln, "expected 'u v'");
        auto u = to_int(t[0]), v = to_int(t[1]);
        if (!u || !v) throw ParseError(ln, "non-integer endpoint");
        if (declared && (*u >= *declared || *v >= *declared)) throw ParseError(ln, "endpoint out of range");
        if (std::max(*u, *v) > 50'000'000) throw ParseError(ln, "endpoint too large");
        edges.emplace_back(*u, *v);
        maxv = std::max({maxv, *u, *v});
        any = true;
    }
    std::uint64_t n = declared ? *declared : (any ? maxv + 1 : 0);
    Graph g(n);
    for (auto [u, v] : edges) add_edge_lenient(g, static_cast<VertexId>(u), static_cast<VertexId>(v));
    return g;
}

std::string emit_edge_list(const Graph& g) {
    VertexList ids = g.vertex_list();
    auto pos = positions(g, ids);
    std::ostringstream os;
    os << "# vertices: " << ids.size() << '\n';
    for (const Edge& e : g.edges()) os << pos[e.u] << ' ' << pos[e.v] << '\n';
    return os.str();
}

Graph parse_graph6(std::string_view line) {
    if (line.starts_with(">>graph6<<")) line.remove_prefix(10);
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
    for (char ch : line)
        if (ch < 63 || ch > 126) throw ParseError(1, "graph6: invalid character");
    std::size_t i = 0;
    auto need = [&](std::size_t k) {
        if (line.size() < i + k) throw ParseError(1, "graph6: truncated");
    };
    auto six = [&](std::size_t k) {
        need(k);
        std::uint64_t x = 0;
        for (std::size_t j = 0; j < k; ++j) x = x << 6 | static_cast<std::uint64_t>(line[i++] - 63);
        return x;
    };
    need(1);
    std::uint64_t n;
    if (line[0] != 126) {
        n = six(1);
    } else if (line.size() > 1 && line[1] != 126) {
        ++i;
        n = six(3);
    } else {
        i += 2;
        n = six(6);
    }
    std::uint64_t bits = n * (n - (n > 0)) / 2;
    std::size_t body = static_cast<std::size_t>((bits + 5) / 6);
    if (line.size() - i != body) throw ParseError(1, "graph6: length does not match vertex count");
    Graph g(n);
    std::uint64_t b = 0;
    for (std::uint64_t j = 1; j < n; ++j)
        for (std::uint64_t k = 0; k < j; ++k, ++b) {
            int byte = line[i + b / 6] - 63;
            if (byte >> (5 - b % 6) & 1) g.add_edge(static_cast<VertexId>(k), static_cast<VertexId>(j));
        }
    if (b % 6 != 0) {
        int byte = line[i + b / 6] - 63;
        if (byte & ((1 << (6 - b % 6)) - 1)) throw ParseError(1, "graph6: nonzero padding");
    }
    return g;
}

std::string emit_graph6(const Graph& g) {
    VertexList ids = g.vertex_list();
    std::uint64_t n = ids.size();
    std::string out;
    auto put = [&](std::uint64_t x, int k) {
        for (int j = k - 1; j >= 0; --j) out.push_back(static_cast<char>((x >> (6 * j) & 63) + 63));
    };
    if (n <= 62) put(n, 1);
    else if (n <= 258047) out.push_back(126), put(n, 3);
    else out.append(2, 126), put(n, 6);
    int acc = 0, cnt = 0;
    for (std::uint64_t j = 1; j < n; ++j)
        for (std::uint64_t k = 0; k < j; ++k) {
            acc = acc << 1 | (g.has_edge(ids[k], ids[j]) ? 1 : 0);
            if (++cnt == 6) out.push_back(static_cast<char>(acc + 63)), acc = cnt = 0;
        }
    if (cnt) out.push_back(static_cast<char>((acc << (6 - cnt)) + 63));
    return out;
}

Graph parse_graph(std::string_view text, GraphFormat f) {
    switch (f) {
        case GraphFormat::Pace: return parse_pace(text);
        case GraphFormat::EdgeList: return parse_edge_list(text);
        case GraphFormat::Graph6: {
            auto lines = split_lines(text);
            auto it = std::find_if(lines.begin(), lines.end(), [](std::string_view l) { return !l.empty(); });
            if (it == lines.end()) throw ParseError(1, "graph6: empty input");
            return parse_graph6(*it);
        }
    }
    throw InvalidArgument("unknown format");
}

std::string emit_graph(const Graph& g, GraphFormat f) {
    switch (f) {
        case GraphFormat::Pace: return emit_pace(g);
        case GraphFormat::EdgeList: return emit_edge_list(g);
        case GraphFormat::Graph6: return emit_graph6(g) + "\n";
    }
    throw InvalidArgument("unknown format");
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << text;
}

Graph read_graph_file(const std::string& path, std::optional<GraphFormat> f) {
    return parse_graph(read_text_file(path), f ? *f : guess_format(path));
}

namespace {

json site_json(const Site& s) {
    return {{"rule", rule_name(s.rule)}, {"anchors", s.anchors}, {"groups", s.groups}};
}

Site site_from(const json& j) {
    Site s;
    auto r = parse_rule(j.at("rule").get<std::string>());
    if (!r) throw Error("unknown rule " + j.at("rule").get<std::string>());
    s.rule = *r;
    s.anchors = j.at("anchors").get<VertexList>();
    s.groups = j.at("groups").get<std::vector<VertexList>>();
    return s;
}

json edges_json(const std::vector<Edge>& es) {
    json a = json::array();
    for (const Edge& e : es) a.push_back({e.u, e.v});
    return a;
}

std::vector<Edge> edges_from(const json& j) {
    std::vector<Edge> out;
    for (const auto& e : j) out.emplace_back(e.at(0).get<VertexId>(), e.at(1).get<VertexId>());
    return out;
}

}  // namespace

std::string emit_json(std::span<const ModificationRecord> trace) {
    std::string out;
    for (const auto& r : trace) {
        json choice = {{"anchors", r.site.anchors}, {"groups", r.site.groups}, {"created", r.created},
                       {"restore", r.restore ? site_json(*r.restore) : json(nullptr)}, {"converse", r.converse}};
        json j = {{"step", r.step},
                  {"rule", rule_name(r.rule)},
                  {"direction", r.direction == Direction::Forward ? "forward" : "backward"},
                  {"boundary", r.boundary},
                  {"removed_vertices", r.removed_vertices},
                  {"removed_edges", edges_json(r.removed_edges)},
                  {"added_vertices", r.added_vertices},
                  {"added_edges", edges_json(r.added_edges)},
                  {"delta_k", r.delta_k},
                  {"choice", choice}};
        out += j.dump();
        out += '\n';
    }
    return out;
}

Trace parse_json(std::string_view text) {
    Trace out;
    auto lines = split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (tokens(lines[i]).empty()) continue;
        try {
            json j = json::parse(lines[i]);
            ModificationRecord r;
            r.step = j.at("step").get<std::size_t>();
            auto rule = parse_rule(j.at("rule").get<std::string>());
            if (!rule) throw Error("unknown rule");
            r.rule = *rule;
            r.direction = j.at("direction").get<std::string>() == "forward" ? Direction::Forward : Direction::Backward;
            r.boundary = j.at("boundary").get<VertexList>();
            r.removed_vertices = j.at("removed_vertices").get<VertexList>();
            r.removed_edges = edges_from(j.at("removed_edges"));
            r.added_vertices = j.at("added_vertices").get<VertexList>();
            r.added_edges = edges_from(j.at("added_edges"));
            r.delta_k = j.at("delta_k").get<std::int64_t>();
            const json& c = j.at("choice");
            r.site.rule = r.rule;
            r.site.anchors = c.at("anchors").get<VertexList>();
            r.site.groups = c.at("groups").get<std::vector<VertexList>>();
            r.created = c.at("created").get<std::vector<VertexList>>();
            if (!c.at("restore").is_null()) r.restore = site_from(c.at("restore"));
            r.converse = c.value("converse", false);
            out.push_back(std::move(r));
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception& e) {
            throw ParseError(i + 1, std::string("trace: ") + e.what());
        }
    }
    return out;
}

std::string emit_dot(std::span<const ModificationRecord> trace) {
    std::ostringstream os;
    os << "digraph trace {\n  compound=true;\n";
    for (const auto& r : trace) {
        std::string p = "s" + std::to_string(r.step) + "_";
        os << "  subgraph cluster_" << r.step << " {\n";
        os << "    label=\"" << r.step << ": " << rule_name(r.rule) << " dk=" << r.delta_k << "\";\n";
        for (VertexId v : r.boundary) os << "    " << p << v << " [label=\"" << v << "\",role=boundary,color=blue];\n";
        for (VertexId v : r.removed_vertices)
            os << "    " << p << v << " [label=\"" << v << "\",role=removed,color=red,style=dashed];\n";
        for (VertexId v : r.added_vertices)
            os << "    " << p << v << " [label=\"" << v << "\",role=added,color=green];\n";
        for (const Edge& e : r.removed_edges)
            os << "    " << p << e.u << " -> " << p << e.v << " [dir=none,color=red,style=dashed];\n";
        for (const Edge& e : r.added_edges)
            os << "    " << p << e.u << " -> " << p << e.v << " [dir=none,color=green];\n";
        os << "  }\n";
    }
    os << "}\n";
    return os.str();
}

std::string emit_solution(const VertexSet& cover) {
    std::ostringstream os;
    os << cover.size() << '\n';
    for (VertexId v : cover) os << v << '\n';
    return os.str();
}

VertexSet parse_solution(std::string_view text) {
    auto lines = split_lines(text);
    std::optional<std::uint64_t> size;
    VertexSet out;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        auto t = tokens(lines[i]);
        if (t.empty() || t[0].starts_with('#')) continue;
        auto x = to_int(t[0]);
        if (!x || t.size() != 1) throw ParseError(i + 1, "expected one integer");
        if (!size) size = x;
        else out.insert(static_cast<VertexId>(*x));
    }
    if (!size) throw ParseError(lines.size(), "missing size line");
    if (*size != out.size()) throw ParseError(lines.size(), "size line does not match vertex count");
    return out;
}

}  // namespace vck
