#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <stdexcept>

#include "submotif/graph.hpp"
#include "submotif/random.hpp"

namespace submotif {

struct LedgerSnapshot {
  std::uint64_t degree_queries = 0;
  std::uint64_t neighbor_queries = 0;
  std::uint64_t pair_queries = 0;
  std::uint64_t uniform_vertex_draws = 0;

  // Graph queries only; uniform vertex draws are reported separately because
  // the model treats sampling over known ids as free.
  std::uint64_t total() const { return degree_queries + neighbor_queries + pair_queries; }

  LedgerSnapshot operator-(const LedgerSnapshot& rhs) const {
    return {degree_queries - rhs.degree_queries, neighbor_queries - rhs.neighbor_queries,
            pair_queries - rhs.pair_queries, uniform_vertex_draws - rhs.uniform_vertex_draws};
  }
  bool operator==(const LedgerSnapshot&) const = default;
};

// Monotone counters; atomics so concurrent trials may share one oracle.
class QueryLedger {
 public:
  void count_degree() { degree_.fetch_add(1, std::memory_order_relaxed); }
  void count_neighbor() { neighbor_.fetch_add(1, std::memory_order_relaxed); }
  void count_pair() { pair_.fetch_add(1, std::memory_order_relaxed); }
  void count_uniform() { uniform_.fetch_add(1, std::memory_order_relaxed); }

  LedgerSnapshot snapshot() const {
    return {degree_.load(std::memory_order_relaxed), neighbor_.load(std::memory_order_relaxed),
            pair_.load(std::memory_order_relaxed), uniform_.load(std::memory_order_relaxed)};
  }

 private:
  std::atomic<std::uint64_t> degree_{0};
  std::atomic<std::uint64_t> neighbor_{0};
  std::atomic<std::uint64_t> pair_{0};
  std::atomic<std::uint64_t> uniform_{0};
};

// Read access to an immutable graph through the standard query model:
// degree, i-th neighbor, and pair queries, plus uniform vertex draws.
// Every access increments exactly the counters its contract states.
class QueryOracle {
 public:
  explicit QueryOracle(const Graph& graph) : graph_(graph) {}

  // Known to the algorithm up front; not a query.
  std::uint64_t vertex_count() const { return graph_.vertex_count(); }

  std::uint64_t degree(VertexId v) const {
    check_vertex(v);
    ledger_.count_degree();
    return graph_.degree(v);
  }

  // i is 1-based. Returns the absent marker (nullopt) when i > d(v); the
  // query is counted either way.
  std::optional<VertexId> neighbor(VertexId v, std::uint64_t i) const {
    check_vertex(v);
    if (i == 0) throw std::out_of_range("neighbor index is 1-based");
    ledger_.count_neighbor();
    if (i > graph_.degree(v)) return std::nullopt;
    return graph_.neighbor_at(v, i - 1);
  }

  bool pair(VertexId u, VertexId v) const {
    check_vertex(u);
    check_vertex(v);
    ledger_.count_pair();
    if (u == v) return false;
    return graph_.has_edge(u, v);
  }

  VertexId uniform_vertex(RandomStream& rng) const {
    if (graph_.vertex_count() == 0) throw std::invalid_argument("uniform_vertex on empty graph");
    ledger_.count_uniform();
    return static_cast<VertexId>(rng.uniform_index(graph_.vertex_count()));
  }

  // Total order by (degree, id); costs two counted degree queries.
  bool precedes(VertexId u, VertexId v) const {
    if (u == v) throw std::invalid_argument("precedes requires distinct vertices");
    std::uint64_t du = degree(u);
    std::uint64_t dv = degree(v);
    return du < dv || (du == dv && u < v);
  }

  LedgerSnapshot ledger_report() const { return ledger_.snapshot(); }

  const Graph& graph() const { return graph_; }

 private:
  void check_vertex(VertexId v) const {
    if (v >= graph_.vertex_count()) throw std::out_of_range("vertex id out of range");
  }

  const Graph& graph_;
  mutable QueryLedger ledger_;
};

// Comparison helper for callers that already hold both degrees; keeps
// samplers inside their per-attempt degree-query budget.
inline bool precedes_with_degrees(VertexId u, std::uint64_t du, VertexId v, std::uint64_t dv) {
  return du < dv || (du == dv && u < v);
}

}  // namespace submotif
