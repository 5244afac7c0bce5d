#include "bap/instance.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>

#include "bap/error.hpp"

namespace bap {

namespace {

void require_finite(std::span<const double> values, const char* name) {
  for (std::size_t t = 0; t < values.size(); ++t) {
    if (!std::isfinite(values[t])) {
      throw InputError(std::string(name) + "[" + std::to_string(t) + "] is not finite");
    }
  }
}

void require_square(const Matrix& mat, int size, const char* name) {
  if (mat.rows() != size || mat.cols() != size) {
    throw DimensionError(std::string(name) + ": expected " + std::to_string(size) + "x" +
                         std::to_string(size) + ", got " + std::to_string(mat.rows()) + "x" +
                         std::to_string(mat.cols()));
  }
}

void check_doubly_stochastic(const Matrix& mat, const char* name, double tol) {
  const int k = mat.rows();
  if (!mat.square() || k < 1) {
    throw DimensionError(std::string(name) + " must be a non-empty square matrix");
  }
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      const double v = mat(i, j);
      if (!std::isfinite(v) || v < -tol || v > 1.0 + tol) {
        throw PreconditionError(std::string(name) + "(" + std::to_string(i) + "," +
                                std::to_string(j) + ") = " + std::to_string(v) +
                                " is outside [0,1]");
      }
    }
  }
  for (int i = 0; i < k; ++i) {
    double row = 0.0;
    double col = 0.0;
    for (int j = 0; j < k; ++j) {
      row += mat(i, j);
      col += mat(j, i);
    }
    if (std::abs(row - 1.0) > tol) {
      throw PreconditionError(std::string(name) + " row " + std::to_string(i) + " sums to " +
                              std::to_string(row));
    }
    if (std::abs(col - 1.0) > tol) {
      throw PreconditionError(std::string(name) + " column " + std::to_string(i) +
                              " sums to " + std::to_string(col));
    }
  }
}

Matrix permutation_matrix(const Permutation& p) {
  const int k = static_cast<int>(p.size());
  Matrix mat(k, k);
  for (int i = 0; i < k; ++i) mat(i, p[i]) = 1.0;
  return mat;
}

}  // namespace

bool is_permutation(const Permutation& p, int size) {
  if (static_cast<int>(p.size()) != size) return false;
  std::vector<bool> seen(static_cast<std::size_t>(size), false);
  for (int v : p) {
    if (v < 0 || v >= size || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = true;
  }
  return true;
}

Permutation identity_permutation(int size) {
  Permutation p(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) p[static_cast<std::size_t>(i)] = i;
  return p;
}

Instance::Instance(CostArray4 q, Matrix c, Matrix d)
    : m_(c.rows()), n_(d.rows()), q_(std::move(q)), c_(std::move(c)), d_(std::move(d)) {
  if (m_ < 1) throw DimensionError("m must be at least 1");
  if (n_ < 1) throw DimensionError("n must be at least 1");
  require_square(c_, m_, "C");
  require_square(d_, n_, "D");
  if (q_.m() != m_) {
    throw DimensionError("Q: first index range " + std::to_string(q_.m()) +
                         " does not match m=" + std::to_string(m_));
  }
  if (q_.n() != n_) {
    throw DimensionError("Q: third index range " + std::to_string(q_.n()) +
                         " does not match n=" + std::to_string(n_));
  }
  require_finite(q_.data(), "Q");
  require_finite(c_.data(), "C");
  require_finite(d_.data(), "D");
  if (m_ > n_) {
    q_ = q_.transposed();
    std::swap(c_, d_);
    std::swap(m_, n_);
    swapped_ = true;
  }
}

Assignment Instance::to_caller(const Assignment& a) const {
  if (!swapped_) return a;
  return Assignment{a.y, a.x};
}

Instance Instance::zeros(int m, int n) {
  return Instance(CostArray4(m, n), Matrix(m, m), Matrix(n, n));
}

void check_assignment(const Assignment& a, int m, int n) {
  if (static_cast<int>(a.x.size()) != m) {
    throw DimensionError("xPerm has length " + std::to_string(a.x.size()) + ", expected m=" +
                         std::to_string(m));
  }
  if (static_cast<int>(a.y.size()) != n) {
    throw DimensionError("yPerm has length " + std::to_string(a.y.size()) + ", expected n=" +
                         std::to_string(n));
  }
  if (!is_permutation(a.x, m)) throw DimensionError("xPerm is not a permutation of 0..m-1");
  if (!is_permutation(a.y, n)) throw DimensionError("yPerm is not a permutation of 0..n-1");
}

ObjectiveValue evaluate(const Instance& inst, const Assignment& a) {
  check_assignment(a, inst.m(), inst.n());
  ObjectiveValue v;
  const auto& q = inst.q();
  for (int i = 0; i < inst.m(); ++i) {
    const int j = a.x[static_cast<std::size_t>(i)];
    for (int k = 0; k < inst.n(); ++k) v.quadratic += q(i, j, k, a.y[static_cast<std::size_t>(k)]);
    v.linear_x += inst.c()(i, j);
  }
  for (int k = 0; k < inst.n(); ++k) v.linear_y += inst.d()(k, a.y[static_cast<std::size_t>(k)]);
  v.total = v.quadratic + v.linear_x + v.linear_y;
  return v;
}

FractionalSolution::FractionalSolution(Matrix x, Matrix y, double tol)
    : x_(std::move(x)), y_(std::move(y)) {
  check_doubly_stochastic(x_, "xMat", tol);
  check_doubly_stochastic(y_, "yMat", tol);
}

FractionalSolution FractionalSolution::from_assignment(const Assignment& a) {
  if (!is_permutation(a.x, static_cast<int>(a.x.size())) ||
      !is_permutation(a.y, static_cast<int>(a.y.size()))) {
    throw DimensionError("assignment is not a pair of permutations");
  }
  return FractionalSolution(permutation_matrix(a.x), permutation_matrix(a.y));
}

double evaluate_fractional(const Instance& inst, const FractionalSolution& frac) {
  const int m = inst.m();
  const int n = inst.n();
  if (frac.x().rows() != m) {
    throw DimensionError("xMat is " + std::to_string(frac.x().rows()) + "x" +
                         std::to_string(frac.x().rows()) + ", expected m=" + std::to_string(m));
  }
  if (frac.y().rows() != n) {
    throw DimensionError("yMat is " + std::to_string(frac.y().rows()) + "x" +
                         std::to_string(frac.y().rows()) + ", expected n=" + std::to_string(n));
  }
  const auto& q = inst.q();
  const auto& x = frac.x();
  const auto& y = frac.y();
  double total = 0.0;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      const double xij = x(i, j);
      if (xij == 0.0) continue;
      double inner = 0.0;
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) inner += q(i, j, k, l) * y(k, l);
      total += xij * (inner + inst.c()(i, j));
    }
  }
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) total += inst.d()(k, l) * y(k, l);
  return total;
}

std::uint64_t enumeration_cap() {
  if (const char* env = std::getenv("BAP_ENUM_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultEnumerationCap;
}

std::uint64_t factorial(int k) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t f = 1;
  for (int t = 2; t <= k; ++t) {
    const auto factor = static_cast<std::uint64_t>(t);
    if (f > kMax / factor) return kMax;
    f *= factor;
  }
  return f;
}

std::uint64_t count_assignments(int m, int n) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t a = factorial(m);
  const std::uint64_t b = factorial(n);
  if (a != 0 && b > kMax / a) return kMax;
  return a * b;
}

void require_within_cap(std::uint64_t count, std::uint64_t cap, const char* what) {
  if (count > cap) {
    const bool saturated = count == std::numeric_limits<std::uint64_t>::max();
    throw CapExceeded(std::string("refusing to enumerate ") + what + ": count " +
                          (saturated ? std::string("exceeds 2^64") : std::to_string(count)) +
                          " exceeds the enumeration cap " + std::to_string(cap),
                      count, cap);
  }
}

AssignmentEnumerator::AssignmentEnumerator(int m, int n, std::optional<std::uint64_t> cap)
    : m_(m), n_(n), size_(count_assignments(m, n)) {
  if (m < 1 || n < 1) throw DimensionError("enumeration sizes must be positive");
  require_within_cap(size_, cap.value_or(enumeration_cap()), "m!*n! assignments");
  reset();
}

void AssignmentEnumerator::reset() {
  current_ = Assignment{identity_permutation(m_), identity_permutation(n_)};
  started_ = false;
  done_ = false;
}

bool AssignmentEnumerator::next(Assignment& out) {
  if (done_) return false;
  if (!started_) {
    started_ = true;
  } else if (!std::next_permutation(current_.y.begin(), current_.y.end())) {
    // y wrapped around to identity; advance x.
    if (!std::next_permutation(current_.x.begin(), current_.x.end())) {
      done_ = true;
      return false;
    }
  }
  out = current_;
  return true;
}

void for_each_permutation(int k, const std::function<void(const Permutation&)>& fn) {
  Permutation p = identity_permutation(k);
  do {
    fn(p);
  } while (std::next_permutation(p.begin(), p.end()));
}

}  // namespace bap
