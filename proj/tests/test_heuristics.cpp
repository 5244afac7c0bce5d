#include <doctest.h>

#include "bap/error.hpp"
#include "bap/exact.hpp"
#include "bap/heuristics.hpp"
#include "bap/lap.hpp"
#include "oracles.hpp"

using namespace bap;

namespace {

Instance identity_q_instance() { return Instance(oracle::identity_q(2), Matrix(2, 2), Matrix(2, 2)); }

double mean_of(const std::vector<double>& v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

}  // namespace

TEST_CASE("average_value: fixed cases") {
  CHECK(average_value(identity_q_instance()) == 1.0);
  CHECK(average_value(Instance(CostArray4(2, 2, 1.0), Matrix(2, 2), Matrix(2, 2))) == 4.0);
  const Instance lin(CostArray4(2, 2), Matrix{{1, 2}, {3, 4}}, Matrix(2, 2));
  CHECK(average_value(lin) == 5.0);
  CHECK(mean_of(oracle::all_values(lin)) == 5.0);
}

TEST_CASE("average_value equals the enumerated mean") {
  SplitMix64 rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    const int m = static_cast<int>(rng.uniform_int(1, 4));
    const int n = static_cast<int>(rng.uniform_int(m, 4));
    const Instance inst = oracle::random_instance(rng, m, n, -99, 99);
    CHECK(std::abs(average_value(inst) - mean_of(oracle::all_values(inst))) <= 1e-9);
  }
}

TEST_CASE("uniform_fractional") {
  const FractionalSolution u = uniform_fractional(2, 3);
  for (double v : u.x().data()) CHECK(v == 0.5);
  for (double v : u.y().data()) CHECK(v == 1.0 / 3.0);
  CHECK(uniform_fractional(1, 1).x() == Matrix{{1.0}});
}

TEST_CASE("rounding: fixed cases") {
  SplitMix64 rng(17);
  SUBCASE("integral start never gets worse") {
    for (int trial = 0; trial < 50; ++trial) {
      const Instance inst = oracle::random_instance(rng, 3, 4);
      const Assignment a{oracle::random_permutation(rng, 3), oracle::random_permutation(rng, 4)};
      const auto frac = FractionalSolution::from_assignment(a);
      CHECK(evaluate(inst, round_x_optimize_y(inst, frac)).total <= evaluate(inst, a).total);
      CHECK(evaluate(inst, round_y_optimize_x(inst, frac)).total <= evaluate(inst, a).total);
    }
  }
  SUBCASE("uniform start is below average") {
    for (int trial = 0; trial < 50; ++trial) {
      const Instance inst = oracle::random_instance(rng, 3, 3);
      const auto uniform = uniform_fractional(3, 3);
      const double avg = average_value(inst);
      CHECK(evaluate(inst, round_x_optimize_y(inst, uniform)).total <= avg + 1e-9);
      CHECK(evaluate(inst, round_y_optimize_x(inst, uniform)).total <= avg + 1e-9);
    }
  }
  SUBCASE("Q = 0 decouples into two LAPs") {
    const Matrix c = oracle::random_matrix(rng, 3, 3, 0, 99);
    const Matrix d = oracle::random_matrix(rng, 4, 4, 0, 99);
    const Instance inst(CostArray4(3, 4), c, d);
    const double expected = oracle::lap_min(c) + oracle::lap_min(d);
    const auto frac = FractionalSolution(oracle::birkhoff_sample(rng, 3, 4), oracle::birkhoff_sample(rng, 4, 4));
    CHECK(evaluate(inst, round_x_optimize_y(inst, frac)).total == expected);
    CHECK(evaluate(inst, round_y_optimize_x(inst, frac)).total == expected);
  }
}

TEST_CASE("rounding never increases the objective at random fractional points") {
  SplitMix64 rng(123);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = static_cast<int>(rng.uniform_int(1, 5));
    const int n = static_cast<int>(rng.uniform_int(m, 5));
    const Instance inst = oracle::random_instance(rng, m, n, -50, 99);
    const FractionalSolution frac(oracle::birkhoff_sample(rng, m, 5), oracle::birkhoff_sample(rng, n, 5));
    const double start = evaluate_fractional(inst, frac);
    CHECK(evaluate(inst, round_x_optimize_y(inst, frac)).total <= start + 1e-9);
    CHECK(evaluate(inst, round_y_optimize_x(inst, frac)).total <= start + 1e-9);
  }
}

TEST_CASE("shift_solution") {
  const Instance inst = identity_q_instance();
  CHECK(shift_solution(inst, 0, 0) == Assignment{{0, 1}, {0, 1}});
  CHECK(shift_solution(inst, 1, 0).x == Permutation{1, 0});
  CHECK(shift_value(inst, 0, 0) == 2.0);
  CHECK(shift_value(inst, 0, 1) == 0.0);
  CHECK_THROWS_AS(shift_solution(inst, 2, 0), InputError);
  CHECK_THROWS_AS(shift_solution(inst, 0, -1), InputError);

  SplitMix64 rng(2);
  const Instance r = oracle::random_instance(rng, 3, 5, -10, 10);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 5; ++b) CHECK(shift_value(r, a, b) == evaluate(r, shift_solution(r, a, b)).total);
}

TEST_CASE("best_shift") {
  const ShiftResult id = best_shift(identity_q_instance());
  CHECK(id.value == 0.0);
  CHECK(id.a == 0);
  CHECK(id.b == 1);  // (0,0) costs 2, (0,1) is the first zero
  CHECK(best_shift(Instance::zeros(2, 3)).value == 0.0);
  CHECK(best_shift(Instance::zeros(2, 3)).a == 0);

  CostArray4 single(2, 2);
  single(0, 0, 0, 0) = 1.0;
  const Instance tight(single, Matrix(2, 2), Matrix(2, 2));
  CHECK(best_shift(tight).value == 0.0);
  CHECK(average_value(tight) == 0.25);
}

TEST_CASE("shift family brackets the average") {
  SplitMix64 rng(55);
  for (int trial = 0; trial < 100; ++trial) {
    const int m = static_cast<int>(rng.uniform_int(1, 5));
    const int n = static_cast<int>(rng.uniform_int(m, 6));
    const Instance inst = oracle::random_instance(rng, m, n, -99, 99);
    // Integer data: compare sums scaled by mn exactly.
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    double sum = 0.0;
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < n; ++b) {
        const double v = shift_value(inst, a, b);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
        sum += v;
      }
    const double scaled_average = inst.q().sum() + n * inst.c().sum() + m * inst.d().sum();
    CHECK(sum == scaled_average);
    CHECK(lo * m * n <= scaled_average);
    CHECK(hi * m * n >= scaled_average);
    CHECK(best_shift(inst).value == lo);
  }
}

TEST_CASE("alternating_search") {
  SplitMix64 rng(64);
  SUBCASE("never worse than the start and trace is non-increasing") {
    for (int trial = 0; trial < 100; ++trial) {
      const int m = static_cast<int>(rng.uniform_int(1, 3));
      const int n = static_cast<int>(rng.uniform_int(m, 3));
      const Instance inst = oracle::random_instance(rng, m, n, -30, 99);
      const Assignment start{oracle::random_permutation(rng, m), oracle::random_permutation(rng, n)};
      const AlternatingResult r = alternating_search(inst, start);
      CHECK(r.value <= evaluate(inst, start).total);
      CHECK(r.value == evaluate(inst, r.assignment).total);
      CHECK(r.trace.front() == evaluate(inst, start).total);
      CHECK(r.trace.size() == 1 + 2 * static_cast<std::size_t>(r.rounds));
      for (std::size_t t = 1; t < r.trace.size(); ++t) CHECK(r.trace[t] <= r.trace[t - 1]);
      CHECK(r.converged);
    }
  }
  SUBCASE("stays at the optimum") {
    const Instance inst = oracle::random_instance(rng, 3, 3);
    const Solution opt = brute_force(inst);
    const AlternatingResult r = alternating_search(inst, opt.assignment);
    CHECK(r.value == opt.value.total);
    CHECK(r.rounds == 1);
  }
  SUBCASE("Q = 0 converges to the LAP optima in one improving round") {
    const Matrix c = oracle::random_matrix(rng, 3, 3, 0, 99);
    const Matrix d = oracle::random_matrix(rng, 3, 3, 0, 99);
    const Instance inst(CostArray4(3, 3), c, d);
    const AlternatingResult r = alternating_search(inst, {{0, 1, 2}, {0, 1, 2}});
    CHECK(r.value == oracle::lap_min(c) + oracle::lap_min(d));
    CHECK(r.trace[2] == r.value);
    CHECK(r.rounds <= 2);
  }
  SUBCASE("round limit") {
    const Instance inst = oracle::random_instance(rng, 3, 3);
    const AlternatingResult r = alternating_search(inst, {{0, 1, 2}, {0, 1, 2}}, {0, 1e-9});
    CHECK(r.rounds == 0);
    CHECK_FALSE(r.converged);
    CHECK(r.trace.size() == 1);
  }
}
