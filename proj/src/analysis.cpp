#include "bap/analysis.hpp"

#include <algorithm>
#include <numeric>

#include "bap/error.hpp"
#include "bap/heuristics.hpp"

namespace bap {

ValueProfile value_profile(const Instance& inst, std::optional<std::uint64_t> cap) {
  AssignmentEnumerator it(inst.m(), inst.n(), cap);
  ValueProfile p;
  p.values.reserve(static_cast<std::size_t>(it.size()));
  Assignment a;
  while (it.next(a)) p.values.push_back(evaluate(inst, a).total);
  std::sort(p.values.begin(), p.values.end());
  p.mean = std::accumulate(p.values.begin(), p.values.end(), 0.0) / static_cast<double>(p.values.size());
  p.median = p.values[(p.values.size() - 1) / 2];
  p.min = p.values.front();
  p.max = p.values.back();
  return p;
}

std::uint64_t domination_count(const Instance& inst, std::optional<std::uint64_t> cap) {
  AssignmentEnumerator it(inst.m(), inst.n(), cap);
  const double threshold = average_value(inst) - kDominationSlack;
  std::uint64_t count = 0;
  Assignment a;
  while (it.next(a)) {
    if (evaluate(inst, a).total >= threshold) ++count;
  }
  return count;
}

std::uint64_t domination_lower_bound(int m, int n) {
  return factorial(m - 1) * factorial(n - 1);
}

std::vector<Assignment> equivalence_class(int m, int n, const Assignment& representative) {
  check_assignment(representative, m, n);
  std::vector<Assignment> out;
  out.reserve(static_cast<std::size_t>(m) * static_cast<std::size_t>(n));
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < n; ++b) {
      Assignment s = representative;
      for (int& j : s.x) j = (j + a) % m;
      for (int& l : s.y) l = (l + b) % n;
      out.push_back(std::move(s));
    }
  }
  return out;
}

std::vector<Assignment> class_representatives(int m, int n, std::optional<std::uint64_t> cap) {
  if (m < 1 || n < 1) throw DimensionError("sizes must be positive");
  require_within_cap(domination_lower_bound(m, n), cap.value_or(enumeration_cap()),
                     "(m-1)!(n-1)! class representatives");
  std::vector<Assignment> reps;
  Permutation x = identity_permutation(m);
  do {
    Permutation y = identity_permutation(n);
    do {
      reps.push_back(Assignment{x, y});
    } while (std::next_permutation(y.begin() + 1, y.end()));
  } while (std::next_permutation(x.begin() + 1, x.end()));
  return reps;
}

ClassStats class_average_check(const Instance& inst, const Assignment& representative) {
  const auto members = equivalence_class(inst.m(), inst.n(), representative);
  ClassStats s;
  double sum = 0.0;
  bool first = true;
  for (const auto& a : members) {
    const double v = evaluate(inst, a).total;
    sum += v;
    s.min = first ? v : std::min(s.min, v);
    s.max = first ? v : std::max(s.max, v);
    first = false;
  }
  s.mean = sum / static_cast<double>(members.size());
  return s;
}

}  // namespace bap
