#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace submotif {

using VertexId = std::uint32_t;

// Immutable simple undirected graph in CSR form. Adjacency lists are strictly
// ascending; self-loops and duplicate edges are rejected at construction.
// m_ordered counts each undirected edge twice.
class Graph {
 public:
  Graph() = default;

  // Builds from undirected edge pairs. Throws std::invalid_argument on
  // self-loops or ids >= n. Duplicate pairs are collapsed silently here;
  // the file loader reports them as warnings before calling in.
  static Graph from_edges(VertexId n, const std::vector<std::pair<VertexId, VertexId>>& edges);

  VertexId vertex_count() const { return n_; }
  std::uint64_t ordered_edge_count() const { return neighbors_.size(); }

  std::uint64_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }

  std::span<const VertexId> neighbors(VertexId v) const {
    return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
  }

  // 0-based position into the fixed ascending order.
  VertexId neighbor_at(VertexId v, std::uint64_t pos) const { return neighbors_[offsets_[v] + pos]; }

  bool has_edge(VertexId u, VertexId v) const;

  std::vector<std::pair<VertexId, VertexId>> undirected_edges() const;

 private:
  VertexId n_ = 0;
  std::vector<std::uint64_t> offsets_;
  std::vector<VertexId> neighbors_;
};

}  // namespace submotif
