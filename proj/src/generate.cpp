#include "bap/generate.hpp"

#include <map>

#include "bap/error.hpp"
#include "bap/reductions.hpp"
#include "bap/rng.hpp"

namespace bap {

using nlohmann::json;

namespace {

const std::map<std::string, GeneratorKind>& kind_names() {
  static const std::map<std::string, GeneratorKind> names = {
      {"uniform", GeneratorKind::kUniform},
      {"diagonal", GeneratorKind::kDiagonal},
      {"linearizable", GeneratorKind::kLinearizable},
      {"cvp", GeneratorKind::kCvp},
      {"rank", GeneratorKind::kRank},
      {"qap", GeneratorKind::kQap},
      {"tap", GeneratorKind::kTap},
      {"disjoint-matchings", GeneratorKind::kDisjointMatchings},
  };
  return names;
}

class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}

  double cost(std::int64_t lo, std::int64_t hi) { return static_cast<double>(rng_.uniform_int(lo, hi)); }

  Matrix matrix(int size, std::int64_t lo, std::int64_t hi) {
    Matrix out(size, size);
    for (double& v : out.data()) v = cost(lo, hi);
    return out;
  }

  std::vector<double> values(std::size_t count, std::int64_t lo, std::int64_t hi) {
    std::vector<double> out(count);
    for (double& v : out) v = cost(lo, hi);
    return out;
  }

  // s_k + t_l with s, t drawn from [lo, hi].
  Matrix sum_matrix(int size, std::int64_t lo, std::int64_t hi) {
    const auto s = values(static_cast<std::size_t>(size), lo, hi);
    const auto t = values(static_cast<std::size_t>(size), lo, hi);
    Matrix out(size, size);
    for (int k = 0; k < size; ++k)
      for (int l = 0; l < size; ++l) out(k, l) = s[static_cast<std::size_t>(k)] + t[static_cast<std::size_t>(l)];
    return out;
  }

  bool coin(double p) { return rng_.uniform01() < p; }

 private:
  SplitMix64 rng_;
};

json base_metadata(const GeneratorSpec& spec) {
  json meta = json::object();
  meta["generator"] = "bap-generate";
  meta["prng"] = SplitMix64::kName;
  meta["seed"] = spec.seed;
  meta["kind"] = to_string(spec.kind);
  meta["cost_range"] = json::array({spec.cost_min, spec.cost_max});
  return meta;
}

json edge_json(const EdgeList& edges) {
  json arr = json::array();
  for (const auto& [u, v] : edges) arr.push_back(json::array({u, v}));
  return arr;
}

void validate(const GeneratorSpec& spec) {
  if (spec.m < 1 || spec.n < 1) throw InputError("generator sizes must be positive");
  if (spec.m > spec.n) throw InputError("generator requires m <= n");
  if (spec.cost_min > spec.cost_max) throw InputError("cost range is empty");
  if (spec.factor_min > spec.factor_max) throw InputError("factor range is empty");
  const bool square_kind = spec.kind == GeneratorKind::kDiagonal || spec.kind == GeneratorKind::kQap ||
                           spec.kind == GeneratorKind::kTap ||
                           spec.kind == GeneratorKind::kDisjointMatchings;
  if (square_kind && spec.m != spec.n) {
    throw InputError("kind " + to_string(spec.kind) + " requires m == n");
  }
  if (spec.kind == GeneratorKind::kRank && spec.rank < 1) throw InputError("rank must be positive");
  if (spec.density < 0.0 || spec.density > 1.0) throw InputError("density must lie in [0, 1]");
}

}  // namespace

GeneratorKind parse_generator_kind(const std::string& name) {
  const auto it = kind_names().find(name);
  if (it == kind_names().end()) throw InputError("unknown generator kind '" + name + "'");
  return it->second;
}

std::string to_string(GeneratorKind kind) {
  for (const auto& [name, k] : kind_names()) {
    if (k == kind) return name;
  }
  return "unknown";
}

SumSide parse_sum_side(const std::string& name) {
  if (name == "none") return SumSide::kNone;
  if (name == "c" || name == "C") return SumSide::kC;
  if (name == "d" || name == "D") return SumSide::kD;
  throw InputError("unknown sum side '" + name + "' (expected none, c or d)");
}

std::string to_string(SumSide side) {
  switch (side) {
    case SumSide::kC: return "c";
    case SumSide::kD: return "d";
    case SumSide::kNone: break;
  }
  return "none";
}

InstanceFile generate(const GeneratorSpec& spec) {
  validate(spec);
  const int m = spec.m;
  const int n = spec.n;
  const auto lo = spec.cost_min;
  const auto hi = spec.cost_max;
  Draw draw(spec.seed);
  json meta = base_metadata(spec);

  switch (spec.kind) {
    case GeneratorKind::kUniform: {
      CostArray4 q(m, n, draw.values(static_cast<std::size_t>(m) * m * n * n, lo, hi));
      Matrix c = draw.matrix(m, lo, hi);
      Matrix d = draw.matrix(n, lo, hi);
      return InstanceFile{Instance(std::move(q), std::move(c), std::move(d)), meta};
    }
    case GeneratorKind::kDiagonal: {
      CostArray4 q(m, n);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) q(i, j, i, j) = draw.cost(lo, hi);
      Matrix c = draw.matrix(m, lo, hi);
      Matrix d = draw.matrix(n, lo, hi);
      return InstanceFile{Instance(std::move(q), std::move(c), std::move(d)), meta};
    }
    case GeneratorKind::kLinearizable: {
      SumDecomposition dec(m, n);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
          for (int k = 0; k < n; ++k) dec.e(i, j, k) = draw.cost(lo, hi);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
          for (int l = 0; l < n; ++l) dec.f(i, j, l) = draw.cost(lo, hi);
      for (int i = 0; i < m; ++i)
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l) dec.g(i, k, l) = draw.cost(lo, hi);
      for (int j = 0; j < m; ++j)
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l) dec.h(j, k, l) = draw.cost(lo, hi);
      Matrix c = draw.matrix(m, lo, hi);
      Matrix d = draw.matrix(n, lo, hi);
      return InstanceFile{Instance(dec.compose(), std::move(c), std::move(d)), meta};
    }
    case GeneratorKind::kCvp: {
      // Every slice P^{ij} is u_ij + r_k + s_l, a sum matrix.
      CostArray4 q(m, n);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
          const double u = draw.cost(lo, hi);
          const Matrix p = draw.sum_matrix(n, lo, hi);
          for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l) q(i, j, k, l) = u + p(k, l);
        }
      Matrix c = draw.matrix(m, lo, hi);
      Matrix d = draw.matrix(n, lo, hi);
      return InstanceFile{Instance(std::move(q), std::move(c), std::move(d)), meta};
    }
    case GeneratorKind::kRank: {
      FactoredQ factored;
      for (int p = 0; p < spec.rank; ++p) {
        Matrix a = draw.matrix(m, spec.factor_min, spec.factor_max);
        Matrix b = draw.matrix(n, spec.factor_min, spec.factor_max);
        factored.factors.emplace_back(std::move(a), std::move(b));
      }
      Matrix c = spec.sum_side == SumSide::kC ? draw.sum_matrix(m, lo, hi) : draw.matrix(m, lo, hi);
      Matrix d = spec.sum_side == SumSide::kD ? draw.sum_matrix(n, lo, hi) : draw.matrix(n, lo, hi);
      meta["rank"] = spec.rank;
      meta["factor_range"] = json::array({spec.factor_min, spec.factor_max});
      meta["sum_side"] = to_string(spec.sum_side);
      meta["factors"] = factors_to_json(factored);
      return InstanceFile{Instance(materialize_q(factored, m, n), std::move(c), std::move(d)), meta};
    }
    case GeneratorKind::kQap: {
      CostArray4 qprime(n, n, draw.values(static_cast<std::size_t>(n) * n * n * n, lo, hi));
      const double penalty = spec.penalty.value_or(default_penalty(qprime));
      meta["penalty"] = penalty;
      meta["source"] = json{{"n", n}, {"Q", std::vector<double>(qprime.data().begin(), qprime.data().end())}};
      return InstanceFile{qap_penalty_reduction(qprime, penalty), meta};
    }
    case GeneratorKind::kTap: {
      Cube a(n, draw.values(static_cast<std::size_t>(n) * n * n, lo, hi));
      meta["source"] = json{{"n", n}, {"A", a.values()}};
      return InstanceFile{tap_to_bap(a), meta};
    }
    case GeneratorKind::kDisjointMatchings: {
      EdgeList e1;
      EdgeList e2;
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
          if (draw.coin(spec.density)) e1.emplace_back(u, v);
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
          if (draw.coin(spec.density)) e2.emplace_back(u, v);
      meta["alpha"] = spec.alpha;
      meta["density"] = spec.density;
      meta["zero_one"] = spec.zero_one;
      meta["source"] = json{{"n", n}, {"E1", edge_json(e1)}, {"E2", edge_json(e2)}};
      return InstanceFile{disjoint_matchings_to_bap(n, e1, e2, spec.alpha, spec.zero_one), meta};
    }
  }
  throw InputError("unhandled generator kind");
}

}  // namespace bap
