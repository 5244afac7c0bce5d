#include "bap/heuristics.hpp"

#include <string>

#include "bap/error.hpp"
#include "bap/lap.hpp"

namespace bap {

namespace {

void check_fractional_shape(const Instance& inst, const FractionalSolution& frac) {
  if (frac.x().rows() != inst.m() || frac.y().rows() != inst.n()) {
    throw DimensionError("fractional solution is " + std::to_string(frac.x().rows()) + "/" +
                         std::to_string(frac.y().rows()) + ", instance is m=" +
                         std::to_string(inst.m()) + ", n=" + std::to_string(inst.n()));
  }
}

Matrix x_cost_for_perm(const Instance& inst, const Permutation& y) {
  Matrix h = inst.c();
  const auto& q = inst.q();
  for (int i = 0; i < inst.m(); ++i)
    for (int j = 0; j < inst.m(); ++j)
      for (int k = 0; k < inst.n(); ++k) h(i, j) += q(i, j, k, y[static_cast<std::size_t>(k)]);
  return h;
}

Matrix y_cost_for_perm(const Instance& inst, const Permutation& x) {
  Matrix g = inst.d();
  const auto& q = inst.q();
  for (int k = 0; k < inst.n(); ++k)
    for (int l = 0; l < inst.n(); ++l)
      for (int i = 0; i < inst.m(); ++i) g(k, l) += q(i, x[static_cast<std::size_t>(i)], k, l);
  return g;
}

}  // namespace

Matrix x_side_cost(const Instance& inst, const Matrix& y) {
  Matrix h = inst.c();
  const auto& q = inst.q();
  for (int i = 0; i < inst.m(); ++i)
    for (int j = 0; j < inst.m(); ++j) {
      double s = 0.0;
      for (int k = 0; k < inst.n(); ++k)
        for (int l = 0; l < inst.n(); ++l) s += q(i, j, k, l) * y(k, l);
      h(i, j) += s;
    }
  return h;
}

Matrix y_side_cost(const Instance& inst, const Matrix& x) {
  Matrix g = inst.d();
  const auto& q = inst.q();
  for (int i = 0; i < inst.m(); ++i)
    for (int j = 0; j < inst.m(); ++j) {
      const double xij = x(i, j);
      if (xij == 0.0) continue;
      for (int k = 0; k < inst.n(); ++k)
        for (int l = 0; l < inst.n(); ++l) g(k, l) += q(i, j, k, l) * xij;
    }
  return g;
}

Assignment round_x_optimize_y(const Instance& inst, const FractionalSolution& frac) {
  check_fractional_shape(inst, frac);
  Permutation x = solve_lap(x_side_cost(inst, frac.y())).perm;
  Permutation y = solve_lap(y_cost_for_perm(inst, x)).perm;
  return Assignment{std::move(x), std::move(y)};
}

Assignment round_y_optimize_x(const Instance& inst, const FractionalSolution& frac) {
  check_fractional_shape(inst, frac);
  Permutation y = solve_lap(y_side_cost(inst, frac.x())).perm;
  Permutation x = solve_lap(x_cost_for_perm(inst, y)).perm;
  return Assignment{std::move(x), std::move(y)};
}

double average_value(const Instance& inst) {
  const double m = inst.m();
  const double n = inst.n();
  return inst.q().sum() / (m * n) + inst.c().sum() / m + inst.d().sum() / n;
}

FractionalSolution uniform_fractional(int m, int n) {
  if (m < 1 || n < 1) throw DimensionError("uniform_fractional needs m, n >= 1");
  return FractionalSolution(Matrix(m, m, 1.0 / m), Matrix(n, n, 1.0 / n));
}

Assignment shift_solution(const Instance& inst, int a, int b) {
  const int m = inst.m();
  const int n = inst.n();
  if (a < 0 || a >= m) {
    throw InputError("shift a=" + std::to_string(a) + " outside [0," + std::to_string(m) + ")");
  }
  if (b < 0 || b >= n) {
    throw InputError("shift b=" + std::to_string(b) + " outside [0," + std::to_string(n) + ")");
  }
  Assignment s{Permutation(static_cast<std::size_t>(m)), Permutation(static_cast<std::size_t>(n))};
  for (int i = 0; i < m; ++i) s.x[static_cast<std::size_t>(i)] = (i + a) % m;
  for (int k = 0; k < n; ++k) s.y[static_cast<std::size_t>(k)] = (k + b) % n;
  return s;
}

double shift_value(const Instance& inst, int a, int b) {
  const int m = inst.m();
  const int n = inst.n();
  if (a < 0 || a >= m || b < 0 || b >= n) {
    throw InputError("shift (" + std::to_string(a) + "," + std::to_string(b) + ") out of range");
  }
  const auto& q = inst.q();
  double quad = 0.0;
  double lin_x = 0.0;
  double lin_y = 0.0;
  for (int i = 0; i < m; ++i) {
    const int j = (i + a) % m;
    for (int k = 0; k < n; ++k) quad += q(i, j, k, (k + b) % n);
    lin_x += inst.c()(i, j);
  }
  for (int k = 0; k < n; ++k) lin_y += inst.d()(k, (k + b) % n);
  return quad + lin_x + lin_y;
}

ShiftResult best_shift(const Instance& inst) {
  ShiftResult best;
  bool found = false;
  for (int a = 0; a < inst.m(); ++a) {
    for (int b = 0; b < inst.n(); ++b) {
      const double v = shift_value(inst, a, b);
      if (!found || v < best.value) {
        best.value = v;
        best.a = a;
        best.b = b;
        found = true;
      }
    }
  }
  best.assignment = shift_solution(inst, best.a, best.b);
  return best;
}

AlternatingResult alternating_search(const Instance& inst, const Assignment& start,
                                     const AlternatingOptions& opts) {
  AlternatingResult r;
  r.assignment = start;
  r.value = evaluate(inst, start).total;
  r.trace.push_back(r.value);

  // Accepts the candidate only on strict improvement; returns whether it did.
  auto try_step = [&](Assignment candidate) {
    const double v = evaluate(inst, candidate).total;
    const bool improved = v < r.value - opts.tolerance;
    if (improved) {
      r.assignment = std::move(candidate);
      r.value = v;
    }
    r.trace.push_back(r.value);
    return improved;
  };

  while (r.rounds < opts.max_rounds) {
    ++r.rounds;
    bool improved = try_step(
        Assignment{r.assignment.x, solve_lap(y_cost_for_perm(inst, r.assignment.x)).perm});
    improved |= try_step(
        Assignment{solve_lap(x_cost_for_perm(inst, r.assignment.y)).perm, r.assignment.y});
    if (!improved) {
      r.converged = true;
      break;
    }
  }
  return r;
}

}  // namespace bap
