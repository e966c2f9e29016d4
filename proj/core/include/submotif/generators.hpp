#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "submotif/graph.hpp"
#include "submotif/motif.hpp"

namespace submotif {

struct ErdosRenyiModel {
  VertexId n = 0;
  double p = 0.0;  // in [0,1]
};

struct PowerLawModel {
  VertexId n = 0;
  double exponent = 2.5;  // > 1
};

// Base graph plus `copies` vertex-disjoint planted copies of `motif`.
struct PlantedMotifModel {
  std::variant<ErdosRenyiModel, PowerLawModel> base;
  Motif motif;
  std::uint32_t copies = 0;
};

struct GeneratorSpec {
  std::variant<ErdosRenyiModel, PowerLawModel, PlantedMotifModel> model;
  std::uint64_t seed = 0;
};

struct GeneratedGraph {
  Graph graph;
  // Vertex lists of the planted copies, recorded for test oracles.
  std::vector<std::vector<VertexId>> planted;
};

// Deterministic function of the spec: same seed, same graph.
// Throws std::invalid_argument on invalid parameters or infeasible plants
// (copies * k > n).
GeneratedGraph generate_graph(const GeneratorSpec& spec);

}  // namespace submotif
