#include "bap/dense.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "bap/error.hpp"

namespace bap {

namespace {

double max_abs_of(std::span<const double> v) {
  double best = 0.0;
  for (double x : v) best = std::max(best, std::abs(x));
  return best;
}

}  // namespace

Matrix::Matrix(int rows, int cols, double fill) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw DimensionError("matrix dimensions must be non-negative");
  data_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), fill);
}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows)
    : rows_(static_cast<int>(rows.size())),
      cols_(rows.size() == 0 ? 0 : static_cast<int>(rows.begin()->size())) {
  data_.reserve(static_cast<std::size_t>(rows_) * static_cast<std::size_t>(cols_));
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != cols_) {
      throw DimensionError("ragged matrix literal: expected " + std::to_string(cols_) +
                           " columns, got " + std::to_string(row.size()));
    }
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

double Matrix::sum() const { return std::accumulate(data_.begin(), data_.end(), 0.0); }

double Matrix::max_abs() const { return max_abs_of(data_); }

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("matrix sum of mismatched shapes");
  }
  Matrix out = a;
  auto dst = out.data();
  auto src = b.data();
  for (std::size_t t = 0; t < dst.size(); ++t) dst[t] += src[t];
  return out;
}

Matrix operator*(double s, const Matrix& a) {
  Matrix out = a;
  for (double& v : out.data()) v *= s;
  return out;
}

Matrix operator-(const Matrix& a) { return -1.0 * a; }

CostArray4::CostArray4(int m, int n, double fill) : m_(m), n_(n) {
  if (m < 0 || n < 0) throw DimensionError("cost array dimensions must be non-negative");
  const auto mm = static_cast<std::size_t>(m);
  const auto nn = static_cast<std::size_t>(n);
  data_.assign(mm * mm * nn * nn, fill);
}

CostArray4::CostArray4(int m, int n, std::vector<double> values) : m_(m), n_(n) {
  if (m < 0 || n < 0) throw DimensionError("cost array dimensions must be non-negative");
  const auto mm = static_cast<std::size_t>(m);
  const auto nn = static_cast<std::size_t>(n);
  if (values.size() != mm * mm * nn * nn) {
    throw DimensionError("Q: expected " + std::to_string(mm * mm * nn * nn) +
                         " entries for m=" + std::to_string(m) + ", n=" + std::to_string(n) +
                         ", got " + std::to_string(values.size()));
  }
  data_ = std::move(values);
}

double CostArray4::sum() const { return std::accumulate(data_.begin(), data_.end(), 0.0); }

double CostArray4::abs_sum() const {
  double s = 0.0;
  for (double v : data_) s += std::abs(v);
  return s;
}

double CostArray4::max_abs() const { return max_abs_of(data_); }

Matrix CostArray4::slice(int i, int j) const {
  Matrix p(n_, n_);
  for (int k = 0; k < n_; ++k)
    for (int l = 0; l < n_; ++l) p(k, l) = (*this)(i, j, k, l);
  return p;
}

CostArray4 CostArray4::transposed() const {
  CostArray4 t(n_, m_);
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < m_; ++j)
      for (int k = 0; k < n_; ++k)
        for (int l = 0; l < n_; ++l) t(k, l, i, j) = (*this)(i, j, k, l);
  return t;
}

}  // namespace bap
