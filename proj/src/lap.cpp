#include "bap/lap.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "bap/error.hpp"

namespace bap {

namespace {

void check_cost(const Matrix& cost) {
  if (!cost.square()) {
    throw DimensionError("LAP cost matrix must be square, got " + std::to_string(cost.rows()) +
                         "x" + std::to_string(cost.cols()));
  }
  if (cost.rows() < 1) throw DimensionError("LAP cost matrix must be non-empty");
  for (double v : cost.data()) {
    if (!std::isfinite(v)) throw InputError("LAP cost matrix has a non-finite entry");
  }
}

// Rows are inserted one at a time; each insertion runs a Dijkstra-like search
// over reduced costs until it reaches a free column, then flips the path.
// Arrays are 1-based with slot 0 as the virtual source.
Permutation hungarian_min(const Matrix& cost) {
  const int k = cost.rows();
  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> u(k + 1, 0.0), v(k + 1, 0.0);
  std::vector<int> row_of_col(k + 1, 0), way(k + 1, 0);
  std::vector<double> minv(k + 1);
  std::vector<char> used(k + 1);

  for (int row = 1; row <= k; ++row) {
    row_of_col[0] = row;
    int col0 = 0;
    std::fill(minv.begin(), minv.end(), kInf);
    std::fill(used.begin(), used.end(), 0);
    do {
      used[col0] = 1;
      const int i0 = row_of_col[col0];
      double delta = kInf;
      int col1 = 0;
      for (int j = 1; j <= k; ++j) {
        if (used[j]) continue;
        const double cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = col0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          col1 = j;
        }
      }
      for (int j = 0; j <= k; ++j) {
        if (used[j]) {
          u[row_of_col[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      col0 = col1;
    } while (row_of_col[col0] != 0);
    do {
      const int col1 = way[col0];
      row_of_col[col0] = row_of_col[col1];
      col0 = col1;
    } while (col0 != 0);
  }

  Permutation perm(static_cast<std::size_t>(k));
  for (int j = 1; j <= k; ++j) perm[static_cast<std::size_t>(row_of_col[j] - 1)] = j - 1;
  return perm;
}

}  // namespace

double assignment_cost(const Matrix& cost, const Permutation& perm) {
  double s = 0.0;
  for (int i = 0; i < cost.rows(); ++i) s += cost(i, perm[static_cast<std::size_t>(i)]);
  return s;
}

LapResult solve_lap(const Matrix& cost, Sense sense) {
  check_cost(cost);
  LapResult r;
  r.perm = hungarian_min(sense == Sense::kMinimize ? cost : -cost);
  r.value = assignment_cost(cost, r.perm);
  return r;
}

std::vector<double> lap_value_all(const Matrix& cost, std::optional<std::uint64_t> cap) {
  check_cost(cost);
  const int k = cost.rows();
  require_within_cap(factorial(k), cap.value_or(enumeration_cap()), "k! permutations");
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(factorial(k)));
  for_each_permutation(k, [&](const Permutation& p) { values.push_back(assignment_cost(cost, p)); });
  std::sort(values.begin(), values.end());
  return values;
}

}  // namespace bap
