#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "bap/dense.hpp"
#include "bap/exact.hpp"
#include "bap/instance.hpp"

namespace bap {

// Matrices (A, B) with f̄(x, y) = sum_i a_{i,x(i)} + sum_k b_{k,y(k)} for every
// feasible (x, y).
struct Linearization {
  Matrix a;  // m x m
  Matrix b;  // n x n
};

// q_ijkl = e_ijk + f_ijl + g_ikl + h_jkl. E and F are m x m x n, G and H are
// m x n x n.
class SumDecomposition {
 public:
  SumDecomposition(int m, int n);

  int m() const { return m_; }
  int n() const { return n_; }

  double& e(int i, int j, int k) { return e_[mmn(i, j, k)]; }
  double& f(int i, int j, int l) { return f_[mmn(i, j, l)]; }
  double& g(int i, int k, int l) { return g_[mnn(i, k, l)]; }
  double& h(int j, int k, int l) { return h_[mnn(j, k, l)]; }
  double e(int i, int j, int k) const { return e_[mmn(i, j, k)]; }
  double f(int i, int j, int l) const { return f_[mmn(i, j, l)]; }
  double g(int i, int k, int l) const { return g_[mnn(i, k, l)]; }
  double h(int j, int k, int l) const { return h_[mnn(j, k, l)]; }

  // The array the four parts sum to.
  CostArray4 compose() const;

 private:
  std::size_t mmn(int a, int b, int c) const {
    return (static_cast<std::size_t>(a) * m_ + b) * n_ + c;
  }
  std::size_t mnn(int a, int b, int c) const {
    return (static_cast<std::size_t>(a) * n_ + b) * n_ + c;
  }

  int m_;
  int n_;
  std::vector<double> e_, f_, g_, h_;
};

// Rank-r factored form q_ijkl = sum_p A^p_ij B^p_kl.
struct FactoredQ {
  std::vector<std::pair<Matrix, Matrix>> factors;

  int rank() const { return static_cast<int>(factors.size()); }
};

// Default absolute tolerance for the linearizability residual test.
double default_linearization_tolerance(const CostArray4& q);

// Solves q = e + f + g + h in least squares over all 2m^2n + 2mn^2 unknowns.
// Returns a decomposition iff the maximum absolute residual is within tol.
std::optional<SumDecomposition> check_linearizable(const CostArray4& q,
                                                   std::optional<double> tol = std::nullopt);

// a_ij = sum_k (e_ijk + f_ijk), b_kl = sum_i (g_ikl + h_ikl).
Linearization extract_linearization(const SumDecomposition& dec);

// Two independent LAPs over A + C and B + D. Exact when lin linearizes Q.
Solution solve_linearizable(const Instance& inst, const Linearization& lin);

struct SumMatrixParts {
  std::vector<double> s;  // row part
  std::vector<double> t;  // column part, t[0] == 0
};

// Whether T_ij = s_i + t_j (within tol) for all i, j.
std::optional<SumMatrixParts> is_sum_matrix(const Matrix& t,
                                            std::optional<double> tol = std::nullopt);

// If every slice P^{ij} of Q is a sum matrix (so its LAP has the constant
// value alpha_ij), returns W = alpha + C.
std::optional<Matrix> cvp_decompose(const Instance& inst,
                                    std::optional<double> tol = std::nullopt);

// LAP over W for x and LAP over D for y.
Solution solve_cvp(const Instance& inst, const Matrix& w);

// Dense Q from a factored form.
CostArray4 materialize_q(const FactoredQ& factored, int m, int n);

// Rank-one BAP where C or D is a sum matrix. Throws PreconditionError naming
// the failed requirement (rank, consistency, sum-matrix).
Solution rank_one_solve(const Instance& inst, const FactoredQ& factored,
                        std::optional<double> tol = std::nullopt);

// Numerical rank of Q as an m^2 x n^2 matrix: singular values above
// 1e-8 * sigma_max. Diagnostic only.
int numeric_rank(const CostArray4& q);

}  // namespace bap
