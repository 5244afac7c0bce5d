#include "bap/exact.hpp"

#include <algorithm>
#include <thread>
#include <vector>

#include "bap/error.hpp"
#include "bap/lap.hpp"

namespace bap {

namespace {

struct Best {
  Solution sol;
  bool found = false;
};

// Enumerates the x permutations with x[0] == first, all y, in lexicographic
// order.
Best brute_force_prefix(const Instance& inst, int first) {
  Best best;
  Permutation x = identity_permutation(inst.m());
  std::rotate(x.begin(), x.begin() + first, x.begin() + first + 1);
  do {
    if (x[0] != first) break;
    Permutation y = identity_permutation(inst.n());
    do {
      Assignment a{x, y};
      const ObjectiveValue v = evaluate(inst, a);
      if (!best.found || v.total < best.sol.value.total) {
        best.sol = Solution{std::move(a), v};
        best.found = true;
      }
    } while (std::next_permutation(y.begin(), y.end()));
  } while (std::next_permutation(x.begin(), x.end()));
  return best;
}

// Merge in prefix order so ties resolve exactly as a sequential scan would.
Solution merge_in_order(const std::vector<Best>& parts) {
  const Best* winner = nullptr;
  for (const auto& p : parts) {
    if (!p.found) continue;
    if (winner == nullptr || p.sol.value.total < winner->sol.value.total) winner = &p;
  }
  return winner->sol;
}

int effective_threads(int requested, int partitions) {
  return std::clamp(requested, 1, partitions);
}

Matrix y_cost_of_x(const Instance& inst, const Permutation& x) {
  Matrix h = inst.d();
  const auto& q = inst.q();
  for (int k = 0; k < inst.n(); ++k)
    for (int l = 0; l < inst.n(); ++l)
      for (int i = 0; i < inst.m(); ++i) h(k, l) += q(i, x[static_cast<std::size_t>(i)], k, l);
  return h;
}

}  // namespace

Solution brute_force(const Instance& inst, const ExactOptions& opts) {
  require_within_cap(count_assignments(inst.m(), inst.n()), opts.cap.value_or(enumeration_cap()),
                     "m!*n! assignments");
  const int m = inst.m();
  std::vector<Best> parts(static_cast<std::size_t>(m));
  const int threads = effective_threads(opts.threads, m);
  if (threads == 1) {
    for (int first = 0; first < m; ++first) parts[static_cast<std::size_t>(first)] = brute_force_prefix(inst, first);
  } else {
    std::vector<std::jthread> workers;
    workers.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) {
      workers.emplace_back([&, t] {
        for (int first = t; first < m; first += threads) {
          parts[static_cast<std::size_t>(first)] = brute_force_prefix(inst, first);
        }
      });
    }
  }
  return merge_in_order(parts);
}

Solution solve_by_x_enumeration(const Instance& inst, const ExactOptions& opts) {
  require_within_cap(factorial(inst.m()), opts.cap.value_or(enumeration_cap()), "m! x-assignments");
  Best best;
  for_each_permutation(inst.m(), [&](const Permutation& x) {
    const LapResult lap = solve_lap(y_cost_of_x(inst, x));
    Assignment a{x, lap.perm};
    const ObjectiveValue v = evaluate(inst, a);
    if (!best.found || v.total < best.sol.value.total) {
      best.sol = Solution{std::move(a), v};
      best.found = true;
    }
  });
  return best.sol;
}

double median_value(const Instance& inst, const ExactOptions& opts) {
  AssignmentEnumerator it(inst.m(), inst.n(), opts.cap);
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(it.size()));
  Assignment a;
  while (it.next(a)) values.push_back(evaluate(inst, a).total);
  const auto mid = values.begin() + static_cast<std::ptrdiff_t>((values.size() - 1) / 2);
  std::nth_element(values.begin(), mid, values.end());
  return *mid;
}

}  // namespace bap
