#include "bap/structure.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <string>

#include "bap/error.hpp"
#include "bap/lap.hpp"

namespace bap {

namespace {

double relative_tolerance(double scale, double factor) { return factor * (1.0 + scale); }

Solution best_of(const Instance& inst, const std::vector<Assignment>& candidates) {
  Solution best{candidates.front(), evaluate(inst, candidates.front())};
  for (std::size_t t = 1; t < candidates.size(); ++t) {
    const ObjectiveValue v = evaluate(inst, candidates[t]);
    if (v.total < best.value.total) best = Solution{candidates[t], v};
  }
  return best;
}

// Rank-one procedure with the sum matrix on the "fixed" side: the fixed side
// only ever takes the minimizer or maximizer of its factor, and the free
// side solves one LAP for each.
std::vector<Assignment> rank_one_candidates(const Matrix& free_factor, const Matrix& free_linear,
                                            const Matrix& fixed_factor, bool free_is_x) {
  std::vector<Assignment> out;
  for (Sense sense : {Sense::kMinimize, Sense::kMaximize}) {
    const LapResult fixed = solve_lap(fixed_factor, sense);
    const Matrix cost = fixed.value * free_factor + free_linear;
    Permutation free = solve_lap(cost).perm;
    out.push_back(free_is_x ? Assignment{std::move(free), fixed.perm}
                            : Assignment{fixed.perm, std::move(free)});
  }
  return out;
}

}  // namespace

SumDecomposition::SumDecomposition(int m, int n) : m_(m), n_(n) {
  const auto mmn_size = static_cast<std::size_t>(m) * m * n;
  const auto mnn_size = static_cast<std::size_t>(m) * n * n;
  e_.assign(mmn_size, 0.0);
  f_.assign(mmn_size, 0.0);
  g_.assign(mnn_size, 0.0);
  h_.assign(mnn_size, 0.0);
}

CostArray4 SumDecomposition::compose() const {
  CostArray4 q(m_, n_);
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < m_; ++j)
      for (int k = 0; k < n_; ++k)
        for (int l = 0; l < n_; ++l) q(i, j, k, l) = e(i, j, k) + f(i, j, l) + g(i, k, l) + h(j, k, l);
  return q;
}

double default_linearization_tolerance(const CostArray4& q) {
  return relative_tolerance(q.max_abs(), 1e-7);
}

std::optional<SumDecomposition> check_linearizable(const CostArray4& q, std::optional<double> tol) {
  const int m = q.m();
  const int n = q.n();
  const Eigen::Index mmn = static_cast<Eigen::Index>(m) * m * n;
  const Eigen::Index mnn = static_cast<Eigen::Index>(m) * n * n;
  const Eigen::Index rows = static_cast<Eigen::Index>(m) * m * n * n;
  const Eigen::Index cols = 2 * mmn + 2 * mnn;

  // Unknown layout: [E | F | G | H], each block in its own row-major order.
  auto col_e = [&](int i, int j, int k) { return (static_cast<Eigen::Index>(i) * m + j) * n + k; };
  auto col_f = [&](int i, int j, int l) { return mmn + (static_cast<Eigen::Index>(i) * m + j) * n + l; };
  auto col_g = [&](int i, int k, int l) { return 2 * mmn + (static_cast<Eigen::Index>(i) * n + k) * n + l; };
  auto col_h = [&](int j, int k, int l) { return 2 * mmn + mnn + (static_cast<Eigen::Index>(j) * n + k) * n + l; };

  Eigen::MatrixXd system = Eigen::MatrixXd::Zero(rows, cols);
  Eigen::VectorXd rhs(rows);
  Eigen::Index row = 0;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l, ++row) {
          system(row, col_e(i, j, k)) = 1.0;
          system(row, col_f(i, j, l)) = 1.0;
          system(row, col_g(i, k, l)) = 1.0;
          system(row, col_h(j, k, l)) = 1.0;
          rhs(row) = q(i, j, k, l);
        }

  // Every column is 0/1; scaling to unit norm equalizes the blocks.
  Eigen::VectorXd scale = system.colwise().norm().transpose();
  for (Eigen::Index c = 0; c < cols; ++c) {
    if (scale(c) > 0.0) system.col(c) /= scale(c);
  }
  const Eigen::VectorXd scaled = system.completeOrthogonalDecomposition().solve(rhs);

  SumDecomposition dec(m, n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < n; ++k) {
        dec.e(i, j, k) = scaled(col_e(i, j, k)) / scale(col_e(i, j, k));
        dec.f(i, j, k) = scaled(col_f(i, j, k)) / scale(col_f(i, j, k));
      }
  for (int a = 0; a < m; ++a)
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l) {
        dec.g(a, k, l) = scaled(col_g(a, k, l)) / scale(col_g(a, k, l));
        dec.h(a, k, l) = scaled(col_h(a, k, l)) / scale(col_h(a, k, l));
      }

  const double limit = tol.value_or(default_linearization_tolerance(q));
  const CostArray4 recomposed = dec.compose();
  double residual = 0.0;
  for (std::size_t t = 0; t < q.data().size(); ++t) {
    residual = std::max(residual, std::abs(q.data()[t] - recomposed.data()[t]));
  }
  if (!(residual <= limit)) return std::nullopt;
  return dec;
}

Linearization extract_linearization(const SumDecomposition& dec) {
  const int m = dec.m();
  const int n = dec.n();
  Linearization lin{Matrix(m, m), Matrix(n, n)};
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < n; ++k) lin.a(i, j) += dec.e(i, j, k) + dec.f(i, j, k);
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l)
      for (int i = 0; i < m; ++i) lin.b(k, l) += dec.g(i, k, l) + dec.h(i, k, l);
  return lin;
}

Solution solve_linearizable(const Instance& inst, const Linearization& lin) {
  Assignment a{solve_lap(lin.a + inst.c()).perm, solve_lap(lin.b + inst.d()).perm};
  const ObjectiveValue v = evaluate(inst, a);
  return Solution{std::move(a), v};
}

std::optional<SumMatrixParts> is_sum_matrix(const Matrix& t, std::optional<double> tol) {
  if (!t.square() || t.rows() < 1) throw DimensionError("is_sum_matrix needs a non-empty square matrix");
  const int k = t.rows();
  const double limit = tol.value_or(relative_tolerance(t.max_abs(), 1e-9));
  SumMatrixParts parts{std::vector<double>(static_cast<std::size_t>(k)),
                       std::vector<double>(static_cast<std::size_t>(k))};
  for (int i = 0; i < k; ++i) parts.s[static_cast<std::size_t>(i)] = t(i, 0);
  for (int j = 0; j < k; ++j) parts.t[static_cast<std::size_t>(j)] = t(0, j) - t(0, 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      const double fit = parts.s[static_cast<std::size_t>(i)] + parts.t[static_cast<std::size_t>(j)];
      if (!(std::abs(t(i, j) - fit) <= limit)) return std::nullopt;
    }
  return parts;
}

std::optional<Matrix> cvp_decompose(const Instance& inst, std::optional<double> tol) {
  const int m = inst.m();
  const int n = inst.n();
  const double limit = tol.value_or(relative_tolerance(inst.q().max_abs(), 1e-9));
  Matrix w = inst.c();
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const Matrix p = inst.q().slice(i, j);
      if (!is_sum_matrix(p, limit)) return std::nullopt;
      double alpha = 0.0;
      for (int k = 0; k < n; ++k) alpha += p(k, k);
      w(i, j) += alpha;
    }
  return w;
}

Solution solve_cvp(const Instance& inst, const Matrix& w) {
  if (w.rows() != inst.m() || !w.square()) {
    throw DimensionError("W must be " + std::to_string(inst.m()) + "x" + std::to_string(inst.m()));
  }
  Assignment a{solve_lap(w).perm, solve_lap(inst.d()).perm};
  const ObjectiveValue v = evaluate(inst, a);
  return Solution{std::move(a), v};
}

CostArray4 materialize_q(const FactoredQ& factored, int m, int n) {
  CostArray4 q(m, n);
  for (std::size_t p = 0; p < factored.factors.size(); ++p) {
    const auto& [a, b] = factored.factors[p];
    if (a.rows() != m || a.cols() != m) {
      throw DimensionError("factor " + std::to_string(p) + ": A must be " + std::to_string(m) +
                           "x" + std::to_string(m));
    }
    if (b.rows() != n || b.cols() != n) {
      throw DimensionError("factor " + std::to_string(p) + ": B must be " + std::to_string(n) +
                           "x" + std::to_string(n));
    }
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l) q(i, j, k, l) += a(i, j) * b(k, l);
  }
  return q;
}

Solution rank_one_solve(const Instance& inst, const FactoredQ& factored, std::optional<double> tol) {
  if (factored.rank() != 1) {
    throw PreconditionError("rank precondition: factored form has rank " +
                            std::to_string(factored.rank()) + ", expected 1");
  }
  const CostArray4 implied = materialize_q(factored, inst.m(), inst.n());
  const double limit = tol.value_or(relative_tolerance(inst.q().max_abs(), 1e-9));
  for (std::size_t t = 0; t < implied.data().size(); ++t) {
    if (!(std::abs(implied.data()[t] - inst.q().data()[t]) <= limit)) {
      throw PreconditionError("consistency precondition: factored form differs from Q at flat index " +
                              std::to_string(t));
    }
  }
  const auto& [a, b] = factored.factors.front();
  if (is_sum_matrix(inst.d())) {
    return best_of(inst, rank_one_candidates(a, inst.c(), b, /*free_is_x=*/true));
  }
  if (is_sum_matrix(inst.c())) {
    return best_of(inst, rank_one_candidates(b, inst.d(), a, /*free_is_x=*/false));
  }
  throw PreconditionError("sum-matrix precondition: neither C nor D is a sum matrix");
}

int numeric_rank(const CostArray4& q) {
  const Eigen::Index rows = static_cast<Eigen::Index>(q.m()) * q.m();
  const Eigen::Index cols = static_cast<Eigen::Index>(q.n()) * q.n();
  const Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> mat(
      q.data().data(), rows, cols);
  const Eigen::VectorXd sv = Eigen::JacobiSVD<Eigen::MatrixXd>(mat).singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  const double cut = 1e-8 * sv(0);
  return static_cast<int>((sv.array() > cut).count());
}

}  // namespace bap
