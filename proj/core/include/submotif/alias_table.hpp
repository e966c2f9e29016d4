#pragma once

#include <cstdint>
#include <vector>

#include "submotif/random.hpp"

namespace submotif {

// Walker/Vose alias table: O(q) build, O(1) draw. Weights are normalized in
// long double before slot assignment; the residual rounding mass goes to the
// largest-weight slot so reconstructed probabilities stay within 1e-12 of
// weight_i / sum(weights).
class AliasTable {
 public:
  AliasTable() = default;

  // Requires at least one positive weight; rejects negatives, NaN, infinity.
  static AliasTable build(const std::vector<double>& weights);

  // Exactly one uniform slot draw plus one uniform real per call.
  std::size_t draw(RandomStream& rng) const;

  std::size_t size() const { return threshold_.size(); }
  bool empty() const { return threshold_.empty(); }

  // Analytic probability of returning index i, reconstructed from the table.
  long double probability_of(std::size_t i) const;

  const std::vector<double>& weights() const { return weights_; }

 private:
  std::vector<double> weights_;  // originals, retained for audit
  std::vector<long double> threshold_;
  std::vector<std::uint32_t> alias_;
};

}  // namespace submotif
