#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bap/dense.hpp"
#include "bap/instance.hpp"

namespace bap {

enum class Sense { kMinimize, kMaximize };

struct LapResult {
  Permutation perm;  // row i -> column perm[i]
  double value = 0.0;
};

// Linear assignment on a square cost matrix. Shortest augmenting path
// (Hungarian) with dual potentials, O(k^3). Maximization negates the costs.
// The reported value is sum_i cost(i, perm[i]) re-summed from the input.
LapResult solve_lap(const Matrix& cost, Sense sense = Sense::kMinimize);

// Objective values of all k! permutations, sorted ascending.
std::vector<double> lap_value_all(const Matrix& cost,
                                  std::optional<std::uint64_t> cap = std::nullopt);

double assignment_cost(const Matrix& cost, const Permutation& perm);

}  // namespace bap
