#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "submotif/graph.hpp"

namespace submotif {

// A small connected simple graph over k vertices, 3 <= k <= 10.
// Canonicalized on construction (relabel by degree then id) so profile
// caching can key on the canonical edge mask.
class Motif {
 public:
  static constexpr std::uint32_t kMaxVertices = 10;

  static Motif from_edges(std::uint32_t k, std::vector<std::pair<std::uint8_t, std::uint8_t>> edges);
  static Motif cycle(std::uint32_t k);
  static Motif clique(std::uint32_t k);
  static Motif star(std::uint32_t k);  // one center, k-1 leaves

  std::uint32_t vertex_count() const { return k_; }
  const std::vector<std::pair<std::uint8_t, std::uint8_t>>& edges() const { return edges_; }
  std::uint64_t edge_mask() const { return edge_mask_; }
  std::uint16_t adjacency_mask(std::uint8_t v) const { return adjacency_[v]; }
  std::uint32_t degree(std::uint8_t v) const;

  bool is_clique() const;
  bool is_star() const;

  // Human-readable descriptor: built-in name when recognized, else k and
  // edge list.
  std::string describe() const;

  bool operator==(const Motif& rhs) const { return k_ == rhs.k_ && edge_mask_ == rhs.edge_mask_; }

 private:
  std::uint32_t k_ = 0;
  std::vector<std::pair<std::uint8_t, std::uint8_t>> edges_;
  std::array<std::uint16_t, kMaxVertices> adjacency_{};
  std::uint64_t edge_mask_ = 0;
};

// Bit slot of the unordered pair {a, b} in a k-vertex edge mask.
std::uint32_t pair_slot(std::uint32_t k, std::uint32_t a, std::uint32_t b);

// h_F, kappa_F and the Hamiltonian gate, computed by exhaustive enumeration
// and cached per canonical motif (safe for concurrent lookup).
struct HamiltonianProfile {
  std::uint64_t h = 0;       // distinct Hamiltonian-cycle subgraphs of F
  std::uint64_t kappa = 0;   // max copies of F in K_k containing a fixed Hamiltonian cycle
  bool is_hamiltonian = false;
};

const HamiltonianProfile& hamiltonian_profile(const Motif& motif);

// All distinct Hamiltonian cycles of `motif`, each canonical: starts at its
// lowest vertex, lexicographically smaller direction.
std::vector<std::vector<std::uint8_t>> hamiltonian_cycles(const Motif& motif);

std::uint64_t kappa(const Motif& motif);
bool is_hamiltonian(const Motif& motif);

// A concrete copy of a motif in the host graph. Identity is the
// (vertex set, edge set) pair; ordering and witness carry no semantics.
struct CopyRecord {
  std::vector<VertexId> vertices;
  std::vector<std::pair<VertexId, VertexId>> edges;  // each pair stored (min,max)
  std::optional<std::vector<VertexId>> witness_cycle;

  // Sorted-vertices + sorted-edges key for hashing and equality.
  std::string canonical_key() const;
  bool same_copy(const CopyRecord& rhs) const { return canonical_key() == rhs.canonical_key(); }
};

// k host vertices plus their induced adjacency, as assembled by a sampler
// from pair queries.
struct LocalSubgraph {
  std::vector<VertexId> vertices;               // distinct host ids, sampler order
  std::array<std::uint16_t, Motif::kMaxVertices> adjacency{};  // over local indices

  std::uint32_t size() const { return static_cast<std::uint32_t>(vertices.size()); }
  bool has_local_edge(std::uint32_t a, std::uint32_t b) const {
    return (adjacency[a] >> b) & 1u;
  }
  std::uint64_t local_edge_mask() const;
};

// All distinct copies of `motif` inside `host` whose edge set contains every
// edge of `cycle` (a Hamiltonian cycle of the host, given as host ids).
// Throws std::invalid_argument if the cycle is not contained in the host.
std::vector<CopyRecord> copies_containing_cycle(const LocalSubgraph& host,
                                                const std::vector<VertexId>& cycle,
                                                const Motif& motif);

// Motif spec strings: cycle:<k> | clique:<k> | star:<k> | file:<path>.
// Files use the edge-list grammar with a mandatory n=<k> header.
Motif parse_motif_spec(const std::string& spec);
Motif load_motif_file(const std::string& path);

}  // namespace submotif
