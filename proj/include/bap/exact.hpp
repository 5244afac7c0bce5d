#pragma once

#include <cstdint>
#include <optional>

#include "bap/instance.hpp"

namespace bap {

struct Solution {
  Assignment assignment;
  ObjectiveValue value;
};

struct ExactOptions {
  std::optional<std::uint64_t> cap;  // defaults to enumeration_cap()
  int threads = 1;
};

// Minimizer over all of F by exhaustive enumeration. Ties go to the first
// assignment in enumeration order, regardless of thread count.
Solution brute_force(const Instance& inst, const ExactOptions& opts = {});

// Enumerates every x and solves the LAP over h_kl = d_kl + sum_i q_{i,x(i),k,l}
// for the best y. Exact; O(m! (mn^2 + n^3)). Only m! is checked against the cap.
Solution solve_by_x_enumeration(const Instance& inst, const ExactOptions& opts = {});

// Lower median of all m!·n! objective values.
double median_value(const Instance& inst, const ExactOptions& opts = {});

}  // namespace bap
