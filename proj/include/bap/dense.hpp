#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace bap {

// Row-major dense matrix of doubles.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, double fill = 0.0);
  Matrix(std::initializer_list<std::initializer_list<double>> rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  double& operator()(int i, int j) { return data_[index(i, j)]; }
  double operator()(int i, int j) const { return data_[index(i, j)]; }

  std::span<double> data() { return data_; }
  std::span<const double> data() const { return data_; }

  double sum() const;
  double max_abs() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(j);
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator*(double s, const Matrix& a);
Matrix operator-(const Matrix& a);

// The quadratic cost array Q = (q_ijkl) of shape m x m x n x n, stored dense in
// (i, j, k, l) row-major order. Viewed as a matrix it has rows labelled by
// (i, j) and columns labelled by (k, l).
class CostArray4 {
 public:
  CostArray4() = default;
  CostArray4(int m, int n, double fill = 0.0);
  CostArray4(int m, int n, std::vector<double> values);

  int m() const { return m_; }
  int n() const { return n_; }

  double& operator()(int i, int j, int k, int l) { return data_[index(i, j, k, l)]; }
  double operator()(int i, int j, int k, int l) const {
    return data_[index(i, j, k, l)];
  }

  std::span<double> data() { return data_; }
  std::span<const double> data() const { return data_; }

  double sum() const;
  double abs_sum() const;
  double max_abs() const;

  // The n x n slice P^{ij} with p_kl = q_ijkl.
  Matrix slice(int i, int j) const;

  // Q with the roles of the two sides exchanged: q'_klij = q_ijkl.
  CostArray4 transposed() const;

  friend bool operator==(const CostArray4&, const CostArray4&) = default;

 private:
  std::size_t index(int i, int j, int k, int l) const {
    const auto m = static_cast<std::size_t>(m_);
    const auto n = static_cast<std::size_t>(n_);
    return ((static_cast<std::size_t>(i) * m + static_cast<std::size_t>(j)) * n +
            static_cast<std::size_t>(k)) *
               n +
           static_cast<std::size_t>(l);
  }

  int m_ = 0;
  int n_ = 0;
  std::vector<double> data_;
};

}  // namespace bap
