#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "submotif/graph.hpp"

namespace submotif {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct LoadResult {
  Graph graph;
  std::vector<std::string> warnings;  // one entry per duplicate edge line
  bool had_header = false;
  VertexId header_n = 0;
};

// Grammar: `# comment`, blank lines, optional `n=<int>` header (first
// non-comment line only), then `<u> <v>` with 0-based decimal ids.
// Duplicate undirected edges are dropped with a warning; self-loops and
// ids >= declared n are hard errors.
LoadResult parse_edge_list(std::istream& in);
LoadResult load_edge_list(const std::string& path);

void write_edge_list(std::ostream& out, const Graph& graph);
void save_edge_list(const std::string& path, const Graph& graph);

}  // namespace submotif
