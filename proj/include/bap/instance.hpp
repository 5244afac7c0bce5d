#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "bap/dense.hpp"

namespace bap {

// A permutation in 0-based image form: perm[i] = j means row i is assigned to
// column j.
using Permutation = std::vector<int>;

bool is_permutation(const Permutation& p, int size);
Permutation identity_permutation(int size);

// A feasible BAP solution (x, y) encoded by its two permutations.
struct Assignment {
  Permutation x;  // x[i] = j  <=>  x_ij = 1
  Permutation y;  // y[k] = l  <=>  y_kl = 1

  friend bool operator==(const Assignment&, const Assignment&) = default;
  friend auto operator<=>(const Assignment&, const Assignment&) = default;
};

struct ObjectiveValue {
  double total = 0.0;
  double quadratic = 0.0;
  double linear_x = 0.0;
  double linear_y = 0.0;
};

// Cost data (Q, C, D) of one BAP instance with m <= n.
//
// If the caller hands in data with m > n the two sides are exchanged
// (Q transposed, C and D swapped) and swapped() reports it; solutions on the
// stored instance map back with to_caller().
class Instance {
 public:
  Instance(CostArray4 q, Matrix c, Matrix d);

  int m() const { return m_; }
  int n() const { return n_; }
  const CostArray4& q() const { return q_; }
  const Matrix& c() const { return c_; }
  const Matrix& d() const { return d_; }
  bool swapped() const { return swapped_; }

  // Maps an assignment of the stored (m <= n) orientation back to the
  // orientation the data was supplied in.
  Assignment to_caller(const Assignment& a) const;

  // Zero-cost instance of the given size.
  static Instance zeros(int m, int n);

 private:
  int m_;
  int n_;
  CostArray4 q_;
  Matrix c_;
  Matrix d_;
  bool swapped_ = false;
};

// Throws DimensionError unless a is a feasible solution of the given sizes.
void check_assignment(const Assignment& a, int m, int n);

// f(x, y) with its three parts; O(mn).
ObjectiveValue evaluate(const Instance& inst, const Assignment& a);

constexpr double kStochasticTolerance = 1e-9;

// A point (x̄, ȳ) of the BALP relaxation: two doubly stochastic matrices.
class FractionalSolution {
 public:
  FractionalSolution(Matrix x, Matrix y, double tol = kStochasticTolerance);

  static FractionalSolution from_assignment(const Assignment& a);

  const Matrix& x() const { return x_; }
  const Matrix& y() const { return y_; }

 private:
  Matrix x_;
  Matrix y_;
};

// The bilinear objective at a fractional point; O(m^2 n^2).
double evaluate_fractional(const Instance& inst, const FractionalSolution& frac);

// --- Exhaustive enumeration over F ------------------------------------------

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

// The cap used when a caller passes none: BAP_ENUM_CAP from the environment
// if set to a positive integer, otherwise kDefaultEnumerationCap.
std::uint64_t enumeration_cap();

// k!, saturating at UINT64_MAX.
std::uint64_t factorial(int k);
// m! * n!, saturating.
std::uint64_t count_assignments(int m, int n);

// Throws CapExceeded if count > cap. `what` names the enumerated set.
void require_within_cap(std::uint64_t count, std::uint64_t cap, const char* what);

// Restartable stream over all m!·n! assignments, lexicographic by x then y.
class AssignmentEnumerator {
 public:
  AssignmentEnumerator(int m, int n, std::optional<std::uint64_t> cap = std::nullopt);

  // Writes the next assignment into out; false once exhausted.
  bool next(Assignment& out);
  void reset();

  std::uint64_t size() const { return size_; }

 private:
  int m_;
  int n_;
  std::uint64_t size_;
  Assignment current_;
  bool started_ = false;
  bool done_ = false;
};

// Calls fn on every permutation of {0..k-1} in lexicographic order.
void for_each_permutation(int k, const std::function<void(const Permutation&)>& fn);

}  // namespace bap
