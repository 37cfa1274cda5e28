#pragma once

#include <string>
#include <string_view>

#include "vck/graph.hpp"
#include "vck/record.hpp"

namespace vck {

struct ParseError : Error {
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line(line) {}
    std::size_t line;
};

enum class GraphFormat : std::uint8_t { Pace, EdgeList, Graph6 };

std::optional<GraphFormat> parse_format(std::string_view s);
// by extension: .gr -> pace, .g6 -> graph6, otherwise edge list
GraphFormat guess_format(std::string_view path);

// Emitters write vertices in increasing id order as 0..n-1 (1..n for PACE).
Graph parse_pace(std::string_view text);
std::string emit_pace(const Graph& g);

// "u v" per line, 0-indexed, '#' comments; "# vertices: N" fixes the vertex count
Graph parse_edge_list(std::string_view text);
std::string emit_edge_list(const Graph& g);

Graph parse_graph6(std::string_view line);
std::string emit_graph6(const Graph& g);

Graph parse_graph(std::string_view text, GraphFormat f);
std::string emit_graph(const Graph& g, GraphFormat f);

Graph read_graph_file(const std::string& path, std::optional<GraphFormat> f = std::nullopt);
void write_text_file(const std::string& path, std::string_view text);
std::string read_text_file(const std::string& path);

// JSON lines, one object per record
std::string emit_json(std::span<const ModificationRecord> trace);
Trace parse_json(std::string_view text);
std::string emit_dot(std::span<const ModificationRecord> trace);

// first line: size, then one vertex per line
std::string emit_solution(const VertexSet& cover);
VertexSet parse_solution(std::string_view text);

}  // namespace vck
