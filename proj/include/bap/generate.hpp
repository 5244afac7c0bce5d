#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "bap/io.hpp"

namespace bap {

enum class GeneratorKind { kUniform, kDiagonal, kLinearizable, kCvp, kRank, kQap, kTap, kDisjointMatchings };

// Which linear cost matrix the rank generator makes a sum matrix.
enum class SumSide { kNone, kC, kD };

GeneratorKind parse_generator_kind(const std::string& name);
std::string to_string(GeneratorKind kind);
SumSide parse_sum_side(const std::string& name);
std::string to_string(SumSide side);

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::kUniform;
  int m = 3;
  int n = 3;
  std::uint64_t seed = 0;
  // Integer cost range for Q, C, D and for the parts of structured Q.
  std::int64_t cost_min = 0;
  std::int64_t cost_max = 99;
  // kRank
  int rank = 1;
  std::int64_t factor_min = -9;
  std::int64_t factor_max = 9;
  SumSide sum_side = SumSide::kD;
  // kDisjointMatchings
  double alpha = 2.0;
  double density = 0.5;
  bool zero_one = false;
  // kQap; defaults to 1 + sum |Q'|
  std::optional<double> penalty;
};

// Deterministic: equal specs give equal instances and byte-identical files.
// Metadata records the generator name, PRNG, seed, kind and parameters; kRank
// also records the factors, and the reduction kinds record their source data.
InstanceFile generate(const GeneratorSpec& spec);

}  // namespace bap
