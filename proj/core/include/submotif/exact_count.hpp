#pragma once

#include <cstdint>
#include <stdexcept>

#include "submotif/graph.hpp"
#include "submotif/motif.hpp"

namespace submotif {

class WorkBoundExceeded : public std::runtime_error {
 public:
  explicit WorkBoundExceeded(std::uint64_t bound)
      : std::runtime_error("exact count exceeded work bound of " + std::to_string(bound) +
                           " search nodes") {}
};

inline constexpr std::uint64_t kDefaultExactWorkBound = 2'000'000'000ull;

// Exact number of copies of `motif` in `graph`, counted as distinct
// (vertex set, edge set) subgraphs. Backtracking over embeddings divided by
// |Aut(F)|; stars short-circuit to sum_v C(d(v), k-1). Throws
// WorkBoundExceeded when the search tree outgrows `work_bound`.
std::uint64_t exact_motif_count(const Graph& graph, const Motif& motif,
                                std::uint64_t work_bound = kDefaultExactWorkBound);

std::uint64_t automorphism_count(const Motif& motif);

}  // namespace submotif
