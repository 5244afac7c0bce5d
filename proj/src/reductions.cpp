#include "bap/reductions.hpp"

#include <cmath>
#include <string>

#include "bap/error.hpp"

namespace bap {

namespace {

void check_edges(const EdgeList& edges, int n, const char* name) {
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw InputError(std::string(name) + ": edge (" + std::to_string(u) + "," +
                       std::to_string(v) + ") outside 0.." + std::to_string(n - 1));
    }
  }
}

}  // namespace

Cube::Cube(int n, double fill) : n_(n) {
  if (n < 1) throw DimensionError("cube size must be positive");
  data_.assign(static_cast<std::size_t>(n) * n * n, fill);
}

Cube::Cube(int n, std::vector<double> values) : n_(n), data_(std::move(values)) {
  if (n < 1) throw DimensionError("cube size must be positive");
  const auto expected = static_cast<std::size_t>(n) * n * n;
  if (data_.size() != expected) {
    throw DimensionError("A: expected " + std::to_string(expected) + " entries, got " +
                         std::to_string(data_.size()));
  }
}

double qap_value(const CostArray4& qprime, const Permutation& p) {
  double s = 0.0;
  for (int i = 0; i < qprime.m(); ++i)
    for (int k = 0; k < qprime.n(); ++k)
      s += qprime(i, p[static_cast<std::size_t>(i)], k, p[static_cast<std::size_t>(k)]);
  return s;
}

double tap_value(const Cube& a, const Permutation& p, const Permutation& r) {
  double s = 0.0;
  for (int i = 0; i < a.n(); ++i) s += a(i, p[static_cast<std::size_t>(i)], r[static_cast<std::size_t>(i)]);
  return s;
}

double default_penalty(const CostArray4& qprime) { return 1.0 + qprime.abs_sum(); }

Instance qap_penalty_reduction(const CostArray4& qprime, double penalty) {
  if (qprime.m() != qprime.n()) {
    throw DimensionError("QAP cost array must be n x n x n x n, got m=" + std::to_string(qprime.m()) +
                         ", n=" + std::to_string(qprime.n()));
  }
  if (!(penalty > 0.0)) throw InputError("penalty L must be positive");
  const int n = qprime.n();
  CostArray4 q = qprime;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) q(i, j, i, j) -= 2.0 * penalty;
  return Instance(std::move(q), Matrix(n, n, penalty), Matrix(n, n, penalty));
}

Instance tap_to_bap(const Cube& a) {
  const int n = a.n();
  CostArray4 q(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l) q(i, j, j, l) = a(i, j, l);
  return Instance(std::move(q), Matrix(n, n), Matrix(n, n));
}

Instance disjoint_matchings_to_bap(int n, const EdgeList& e1, const EdgeList& e2, double alpha,
                                   bool zero_one) {
  if (n < 1) throw DimensionError("n must be positive");
  if (!(alpha > 1.0)) throw InputError("alpha must exceed 1");
  check_edges(e1, n, "E1");
  check_edges(e2, n, "E2");
  CostArray4 q(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) q(i, j, i, j) = 1.0;
  Matrix c(n, n, 1.0);
  Matrix d(n, n, 1.0);
  const double first_row = zero_one ? 0.0 : 1.0 / (alpha + 1.0);
  for (const auto& [u, v] : e1) c(u, v) = u == 0 ? first_row : 0.0;
  for (const auto& [u, v] : e2) d(u, v) = 0.0;
  return Instance(std::move(q), std::move(c), std::move(d));
}

double default_padding(const Instance& inst) {
  double s = 1.0 + inst.q().abs_sum();
  for (double v : inst.c().data()) s += std::abs(v);
  for (double v : inst.d().data()) s += std::abs(v);
  return s;
}

Instance pad_instance(const Instance& inst, int target_n, std::optional<double> penalty) {
  const int m = inst.m();
  const int n = inst.n();
  if (target_n < n) {
    throw InputError("target size " + std::to_string(target_n) + " is below n=" + std::to_string(n));
  }
  const double big = penalty.value_or(default_padding(inst));
  if (!(big > 0.0)) throw InputError("padding penalty L must be positive");

  CostArray4 q(n, target_n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) q(i, j, k, l) = inst.q()(i, j, k, l);

  auto extend = [big](const Matrix& src, int size) {
    const int old = src.rows();
    Matrix out(size, size);
    for (int i = 0; i < size; ++i)
      for (int j = 0; j < size; ++j) {
        if (i < old && j < old) {
          out(i, j) = src(i, j);
        } else if (i >= old && j >= old) {
          out(i, j) = 0.0;
        } else {
          out(i, j) = big;
        }
      }
    return out;
  };
  return Instance(std::move(q), extend(inst.c(), n), extend(inst.d(), target_n));
}

Assignment recover_solution(const Assignment& padded, int m, int n) {
  if (static_cast<int>(padded.x.size()) < m || static_cast<int>(padded.y.size()) < n) {
    throw DimensionError("padded solution is smaller than the original sizes");
  }
  Assignment out{Permutation(padded.x.begin(), padded.x.begin() + m),
                 Permutation(padded.y.begin(), padded.y.begin() + n)};
  if (!is_permutation(out.x, m) || !is_permutation(out.y, n)) {
    throw PreconditionError("padded solution crosses the original/padding blocks; L too small");
  }
  return out;
}

}  // namespace bap
