#pragma once

// Text formats for graphs and uniform hypergraphs.
//
//   n <count>                 graph header
//   n <count> m <uniformity>  hypergraph header
//
// followed by one edge per line (whitespace separated labels). Blank lines
// and lines starting with '#' are ignored. Labels that are not already the
// integers 1..n are canonicalized to 1..n and the original spelling is kept
// in ParsedInput::labels.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "linres/graph.hpp"

namespace linres {

struct ParsedInput {
  UniformHypergraph hypergraph;
  /// labels[v - 1] is the label vertex v had in the file.
  std::vector<std::string> labels;
  bool relabeled = false;
};

/// Throws Error(ParseError) with a "line N:" prefix on malformed input.
ParsedInput parse_input(std::string_view text);
ParsedInput read_input_file(const std::filesystem::path& path);

std::string format_graph(const Graph& g);
std::string format_hypergraph(const UniformHypergraph& h);

}  // namespace linres
