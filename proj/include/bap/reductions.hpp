#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "bap/dense.hpp"
#include "bap/instance.hpp"

namespace bap {

// n x n x n cost cube of an axial three-dimensional assignment problem.
class Cube {
 public:
  explicit Cube(int n, double fill = 0.0);
  Cube(int n, std::vector<double> values);

  int n() const { return n_; }
  double& operator()(int i, int j, int k) { return data_[index(i, j, k)]; }
  double operator()(int i, int j, int k) const { return data_[index(i, j, k)]; }
  const std::vector<double>& values() const { return data_; }

 private:
  std::size_t index(int i, int j, int k) const {
    return (static_cast<std::size_t>(i) * n_ + j) * n_ + k;
  }

  int n_;
  std::vector<double> data_;
};

// Koopmans-Beckmann style QAP objective sum_{i,k} q'_{i,p(i),k,p(k)}.
double qap_value(const CostArray4& qprime, const Permutation& p);

// 3AP objective sum_i a_{i,p(i),r(i)}.
double tap_value(const Cube& a, const Permutation& p, const Permutation& r);

// 1 + sum |q'_ijkl|.
double default_penalty(const CostArray4& qprime);

// BAP with C = D = L everywhere and q_ijij reduced by 2L. Solutions with x == y
// keep their QAP value; every other solution pays L per differing 0-1 entry.
Instance qap_penalty_reduction(const CostArray4& qprime, double penalty);

// q_ijkl = a_ijl when j == k, C = D = 0. The BAP value of (x, y) is
// sum_i a_{i,x(i),y(x(i))}.
Instance tap_to_bap(const Cube& a);

// Pairs (row, column), 0-based.
using EdgeList = std::vector<std::pair<int, int>>;

// Identity-Q BAP whose optimum is 1/(alpha+1) iff E1 and E2 contain disjoint
// perfect matchings, and at least 1 otherwise. zero_one replaces the
// 1/(alpha+1) costs by 0 (optimum 0 on yes-instances).
Instance disjoint_matchings_to_bap(int n, const EdgeList& e1, const EdgeList& e2, double alpha,
                                   bool zero_one = false);

// 1 + sum |Q| + sum |C| + sum |D|.
double default_padding(const Instance& inst);

// Square x side to n and grow the y side to target_n: Q zero-extended, C and D
// extended with 0 on the new diagonal block and L on the mixed blocks.
Instance pad_instance(const Instance& inst, int target_n, std::optional<double> penalty = std::nullopt);

// Restricts a padded solution to the original index sets. Throws
// PreconditionError if it crosses blocks (L was too small).
Assignment recover_solution(const Assignment& padded, int m, int n);

}  // namespace bap
