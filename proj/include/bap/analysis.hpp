#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bap/instance.hpp"

namespace bap {

// Statistics of all m!·n! objective values.
struct ValueProfile {
  std::vector<double> values;  // sorted ascending
  double mean = 0.0;
  double median = 0.0;  // lower middle
  double min = 0.0;
  double max = 0.0;
};

ValueProfile value_profile(const Instance& inst, std::optional<std::uint64_t> cap = std::nullopt);

// Slack toward inclusion when counting solutions no better than average.
inline constexpr double kDominationSlack = 1e-9;

// |{(x, y) : f(x, y) >= A(Q, C, D) - slack}|.
std::uint64_t domination_count(const Instance& inst, std::optional<std::uint64_t> cap = std::nullopt);

// (m-1)!(n-1)!, the guaranteed lower bound on domination_count.
std::uint64_t domination_lower_bound(int m, int n);

// The mn solutions x'(i) = (x(i) + a) mod m, y'(k) = (y(k) + b) mod n, ordered
// by (a, b).
std::vector<Assignment> equivalence_class(int m, int n, const Assignment& representative);

// One representative per class: x(0) == 0 and y(0) == 0. There are
// (m-1)!(n-1)! of them, in lexicographic order.
std::vector<Assignment> class_representatives(int m, int n,
                                              std::optional<std::uint64_t> cap = std::nullopt);

struct ClassStats {
  double min = 0.0;
  double max = 0.0;
  double mean = 0.0;
};

// Objective statistics over the class of representative; mean equals
// A(Q, C, D) for every class.
ClassStats class_average_check(const Instance& inst, const Assignment& representative);

}  // namespace bap
