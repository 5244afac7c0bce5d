#pragma once

#include <vector>

#include "bap/exact.hpp"
#include "bap/instance.hpp"

namespace bap {

// Round-x optimize-y. x* minimizes the LAP over h_ij = c_ij + sum_kl q_ijkl ȳ_kl,
// then y* minimizes the LAP over g_kl = d_kl + sum_i q_{i,x*(i),k,l}.
// Guarantees f(x*, y*) <= f(x̄, ȳ).
Assignment round_x_optimize_y(const Instance& inst, const FractionalSolution& frac);

// Round-y optimize-x: the mirror image, rounding ȳ first.
Assignment round_y_optimize_x(const Instance& inst, const FractionalSolution& frac);

// Closed-form mean of f over all m!·n! solutions:
// sum(Q)/(mn) + sum(C)/m + sum(D)/n.
double average_value(const Instance& inst);

// x̄ = 1/m everywhere, ȳ = 1/n everywhere.
FractionalSolution uniform_fractional(int m, int n);

// The cyclic-shift assignment (x^a, y^b): x(i) = (i + a) mod m and
// y(k) = (k + b) mod n.
Assignment shift_solution(const Instance& inst, int a, int b);

// f(x^a, y^b) summed directly from the shifted index pattern; O(mn).
double shift_value(const Instance& inst, int a, int b);

struct ShiftResult {
  Assignment assignment;
  double value = 0.0;
  int a = 0;
  int b = 0;
};

// Best of the mn shift solutions, ties to the smallest (a, b). Its value never
// exceeds average_value(inst).
ShiftResult best_shift(const Instance& inst);

struct AlternatingOptions {
  int max_rounds = 100;
  double tolerance = 1e-9;  // smallest improvement that counts
};

struct AlternatingResult {
  Assignment assignment;
  double value = 0.0;
  // Objective after the start and after every half-step (y update, then x
  // update, per round). Non-increasing.
  std::vector<double> trace;
  int rounds = 0;
  bool converged = false;  // false iff max_rounds was hit while still improving
};

// Alternately re-optimizes y for fixed x and x for fixed y, each by one LAP,
// accepting only strict improvements.
AlternatingResult alternating_search(const Instance& inst, const Assignment& start,
                                     const AlternatingOptions& opts = {});

// LAP cost for the x side given a (possibly fractional) y:
// h_ij = c_ij + sum_kl q_ijkl y_kl.
Matrix x_side_cost(const Instance& inst, const Matrix& y);
// LAP cost for the y side given x: g_kl = d_kl + sum_ij q_ijkl x_ij.
Matrix y_side_cost(const Instance& inst, const Matrix& x);

}  // namespace bap
