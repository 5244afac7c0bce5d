#include "bap/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <functional>
#include <ostream>

#include "bap/analysis.hpp"
#include "bap/error.hpp"
#include "bap/exact.hpp"
#include "bap/generate.hpp"
#include "bap/heuristics.hpp"
#include "bap/io.hpp"
#include "bap/lap.hpp"
#include "bap/reductions.hpp"
#include "bap/structure.hpp"

namespace bap {

using nlohmann::json;

namespace {

// Linearizability is a dense least-squares solve with m^2 n^2 rows; auto skips
// it above this size.
constexpr std::size_t kAutoLinearizableMaxRows = 4096;

struct SolveReport {
  std::string method;
  Assignment assignment;
  double value = 0.0;
  json certificates = json::object();
};

std::string join(const Permutation& p) {
  std::string s;
  for (std::size_t t = 0; t < p.size(); ++t) {
    if (t) s += ' ';
    s += std::to_string(p[t]);
  }
  return s;
}

SolveReport make_report(const Instance& inst, const std::string& method, const std::string& path,
                        const Assignment& a, json certs = json::object()) {
  SolveReport r;
  r.method = method;
  r.assignment = inst.to_caller(a);
  r.value = evaluate(inst, a).total;
  r.certificates = std::move(certs);
  r.certificates["path"] = path;
  r.certificates["swapped"] = inst.swapped();
  return r;
}

json flat(const Matrix& mat) { return json(std::vector<double>(mat.data().begin(), mat.data().end())); }

// Best of RxOy(uniform), best shift and alternating search from RxOy; ties keep
// the earlier candidate.
SolveReport heuristic_portfolio(const Instance& inst, const std::string& method) {
  const double average = average_value(inst);
  const Assignment rxoy = round_x_optimize_y(inst, uniform_fractional(inst.m(), inst.n()));
  const ShiftResult shift = best_shift(inst);
  const AlternatingResult alt = alternating_search(inst, rxoy);
  struct Candidate {
    const char* path;
    Assignment a;
  };
  const std::vector<Candidate> candidates = {{"heuristic:rxoy", rxoy},
                                             {"heuristic:shift", shift.assignment},
                                             {"heuristic:alt", alt.assignment}};
  std::size_t best = 0;
  double best_value = evaluate(inst, candidates[0].a).total;
  for (std::size_t t = 1; t < candidates.size(); ++t) {
    const double v = evaluate(inst, candidates[t].a).total;
    if (v < best_value) {
      best = t;
      best_value = v;
    }
  }
  return make_report(inst, method, candidates[best].path, candidates[best].a,
                     json{{"average", average}, {"below_average", best_value <= average}});
}

SolveReport solve_auto(const InstanceFile& file) {
  const Instance& inst = file.instance;
  if (auto w = cvp_decompose(inst)) {
    const Solution s = solve_cvp(inst, *w);
    return make_report(inst, "auto", "cvp", s.assignment, json{{"W", flat(*w)}});
  }
  const std::size_t rows = static_cast<std::size_t>(inst.m()) * inst.m() * inst.n() * inst.n();
  if (rows <= kAutoLinearizableMaxRows) {
    if (auto dec = check_linearizable(inst.q())) {
      const Linearization lin = extract_linearization(*dec);
      const Solution s = solve_linearizable(inst, lin);
      return make_report(inst, "auto", "linearizable", s.assignment,
                         json{{"A", flat(lin.a)}, {"B", flat(lin.b)}});
    }
  }
  if (!inst.swapped()) {
    if (auto factored = factors_from_metadata(file.metadata, inst.m(), inst.n());
        factored && factored->rank() == 1) {
      try {
        const Solution s = rank_one_solve(inst, *factored);
        return make_report(inst, "auto", "rank-one", s.assignment);
      } catch (const PreconditionError&) {
        // fall through to the general methods
      }
    }
  }
  if (factorial(inst.m()) <= enumeration_cap()) {
    const Solution s = solve_by_x_enumeration(inst);
    return make_report(inst, "auto", "enum-x", s.assignment,
                       json{{"lap_count", factorial(inst.m())}});
  }
  return heuristic_portfolio(inst, "auto");
}

SolveReport run_solve(const InstanceFile& file, const std::string& method) {
  const Instance& inst = file.instance;
  if (method == "brute") {
    const Solution s = brute_force(inst);
    return make_report(inst, method, method, s.assignment,
                       json{{"enumerated", count_assignments(inst.m(), inst.n())}});
  }
  if (method == "enum-x") {
    const Solution s = solve_by_x_enumeration(inst);
    return make_report(inst, method, method, s.assignment, json{{"lap_count", factorial(inst.m())}});
  }
  if (method == "rxoy" || method == "ryox") {
    const FractionalSolution uniform = uniform_fractional(inst.m(), inst.n());
    const Assignment a =
        method == "rxoy" ? round_x_optimize_y(inst, uniform) : round_y_optimize_x(inst, uniform);
    return make_report(inst, method, method, a,
                       json{{"start", "uniform"}, {"average", average_value(inst)}});
  }
  if (method == "alt") {
    const Assignment start = round_x_optimize_y(inst, uniform_fractional(inst.m(), inst.n()));
    const AlternatingResult r = alternating_search(inst, start);
    return make_report(inst, method, method, r.assignment,
                       json{{"start", "rxoy-uniform"},
                            {"start_value", r.trace.front()},
                            {"rounds", r.rounds},
                            {"converged", r.converged}});
  }
  if (method == "shift") {
    const ShiftResult r = best_shift(inst);
    return make_report(inst, method, method, r.assignment,
                       json{{"a", r.a}, {"b", r.b}, {"average", average_value(inst)}});
  }
  if (method == "auto") return solve_auto(file);
  throw InputError("unknown method '" + method + "'");
}

void print_report(const SolveReport& r, bool as_json, std::ostream& out) {
  if (as_json) {
    json doc{{"method", r.method},
             {"value", r.value},
             {"xPerm", r.assignment.x},
             {"yPerm", r.assignment.y},
             {"certificates", r.certificates}};
    out << doc.dump(2) << "\n";
    return;
  }
  out << "method: " << r.method << "\n";
  out << "path: " << r.certificates.at("path").get<std::string>() << "\n";
  out << "value: " << format_number(r.value) << "\n";
  out << "xPerm: " << join(r.assignment.x) << "\n";
  out << "yPerm: " << join(r.assignment.y) << "\n";
}

EdgeList read_edges(const json& doc, const std::string& key, int n) {
  const std::string where = "$." + key;
  if (!doc.contains(key)) throw InputError(where + ": missing");
  const json& arr = doc.at(key);
  if (!arr.is_array()) throw InputError(where + ": expected an array of [row, column] pairs");
  EdgeList edges;
  for (std::size_t t = 0; t < arr.size(); ++t) {
    const json& e = arr[t];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
      throw InputError(where + "[" + std::to_string(t) + "]: expected [row, column]");
    }
    const int u = e[0].get<int>();
    const int v = e[1].get<int>();
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw InputError(where + "[" + std::to_string(t) + "]: vertex outside 0.." + std::to_string(n - 1));
    }
    edges.emplace_back(u, v);
  }
  return edges;
}

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("$: malformed JSON: ") + e.what());
  }
}

void emit(const std::string& out_path, const std::string& text, std::ostream& out) {
  if (out_path == "-") {
    out << text;
  } else {
    write_text_file(out_path, text);
  }
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bilinear assignment problem solver and analysis toolkit", "bap"};
  app.require_subcommand(1);

  std::function<void()> action;

  // solve
  std::string solve_method = "auto";
  std::string solve_input;
  bool solve_json = false;
  auto* solve = app.add_subcommand("solve", "Solve an instance");
  solve->add_option("--method", solve_method, "Solution method")
      ->check(CLI::IsMember({"brute", "enum-x", "rxoy", "ryox", "alt", "shift", "auto"}));
  solve->add_option("--input", solve_input, "Instance file")->required();
  solve->add_flag("--json", solve_json, "Emit JSON");
  solve->callback([&] {
    action = [&] {
      const InstanceFile file = read_instance_file(solve_input);
      print_report(run_solve(file, solve_method), solve_json, out);
    };
  });

  // analyze
  std::string analyze_input;
  bool want_average = false;
  bool want_domination = false;
  bool want_profile = false;
  bool analyze_json = false;
  auto* analyze = app.add_subcommand("analyze", "Average, domination and value statistics");
  analyze->add_option("--input", analyze_input, "Instance file")->required();
  analyze->add_flag("--average", want_average, "Closed-form average objective value");
  analyze->add_flag("--domination", want_domination, "Count solutions no better than average");
  analyze->add_flag("--profile", want_profile, "Statistics of all objective values");
  analyze->add_flag("--json", analyze_json, "Emit JSON");
  analyze->callback([&] {
    action = [&] {
      const Instance inst = read_instance_file(analyze_input).instance;
      if (!want_average && !want_domination && !want_profile) {
        want_average = want_domination = want_profile = true;
      }
      json doc = json::object();
      if (want_average) doc["average"] = average_value(inst);
      if (want_domination) {
        doc["domination"] = domination_count(inst);
        doc["domination_bound"] = domination_lower_bound(inst.m(), inst.n());
      }
      if (want_profile) {
        const ValueProfile p = value_profile(inst);
        doc["profile"] = json{{"count", p.values.size()}, {"mean", p.mean}, {"median", p.median},
                              {"min", p.min}, {"max", p.max}};
      }
      if (analyze_json) {
        out << doc.dump(2) << "\n";
        return;
      }
      if (want_average) out << "average: " << format_number(doc["average"].get<double>()) << "\n";
      if (want_domination) {
        out << "domination: " << doc["domination"].get<std::uint64_t>() << "\n";
        out << "domination_bound: " << doc["domination_bound"].get<std::uint64_t>() << "\n";
      }
      if (want_profile) {
        const json& p = doc["profile"];
        out << "profile.count: " << p["count"].get<std::uint64_t>() << "\n";
        for (const char* key : {"mean", "median", "min", "max"}) {
          out << "profile." << key << ": " << format_number(p[key].get<double>()) << "\n";
        }
      }
    };
  });

  // check-lin
  std::string lin_input;
  std::optional<double> lin_tol;
  bool lin_json = false;
  auto* check_lin = app.add_subcommand("check-lin", "Decide whether Q is linearizable");
  check_lin->add_option("--input", lin_input, "Instance file")->required();
  check_lin->add_option("--tol", lin_tol, "Absolute residual tolerance");
  check_lin->add_flag("--json", lin_json, "Emit JSON");
  check_lin->callback([&] {
    action = [&] {
      const Instance inst = read_instance_file(lin_input).instance;
      const double tol = lin_tol.value_or(default_linearization_tolerance(inst.q()));
      const auto dec = check_linearizable(inst.q(), tol);
      json doc{{"linearizable", dec.has_value()}, {"tolerance", tol}, {"swapped", inst.swapped()}};
      if (dec) {
        const Linearization lin = extract_linearization(*dec);
        doc["A"] = flat(lin.a);
        doc["B"] = flat(lin.b);
      }
      if (lin_json) {
        out << doc.dump(2) << "\n";
        return;
      }
      out << "linearizable: " << (dec ? "yes" : "no") << "\n";
      out << "tolerance: " << format_number(tol) << "\n";
      if (dec) {
        out << "A: " << doc["A"].dump() << "\n";
        out << "B: " << doc["B"].dump() << "\n";
      }
    };
  });

  // generate
  GeneratorSpec spec;
  std::string gen_kind = "uniform";
  std::string gen_out;
  std::string gen_sum_side = "d";
  auto* gen = app.add_subcommand("generate", "Write a seeded random instance");
  gen->add_option("--kind", gen_kind, "uniform|diagonal|linearizable|cvp|rank|qap|tap|disjoint-matchings")
      ->required();
  gen->add_option("--m", spec.m, "x-side size")->required();
  gen->add_option("--n", spec.n, "y-side size")->required();
  gen->add_option("--seed", spec.seed, "PRNG seed")->required();
  gen->add_option("--out", gen_out, "Output file, - for stdout")->required();
  gen->add_option("--cost-min", spec.cost_min, "Smallest integer cost");
  gen->add_option("--cost-max", spec.cost_max, "Largest integer cost");
  gen->add_option("--rank", spec.rank, "Rank of Q (kind rank)");
  gen->add_option("--factor-min", spec.factor_min, "Smallest factor entry (kind rank)");
  gen->add_option("--factor-max", spec.factor_max, "Largest factor entry (kind rank)");
  gen->add_option("--sum-side", gen_sum_side, "none|c|d: which linear matrix is a sum matrix (kind rank)");
  gen->add_option("--alpha", spec.alpha, "Gap parameter > 1 (kind disjoint-matchings)");
  gen->add_option("--density", spec.density, "Edge probability (kind disjoint-matchings)");
  gen->add_flag("--zero-one", spec.zero_one, "0-1 cost variant (kind disjoint-matchings)");
  gen->add_option("--penalty", spec.penalty, "Penalty L (kind qap)");
  gen->callback([&] {
    action = [&] {
      spec.kind = parse_generator_kind(gen_kind);
      spec.sum_side = parse_sum_side(gen_sum_side);
      const InstanceFile file = generate(spec);
      emit(gen_out, write_instance(file.instance, file.metadata), out);
    };
  });

  // reduce
  std::string red_from;
  std::string red_input;
  std::string red_out;
  double red_alpha = 2.0;
  std::optional<double> red_penalty;
  bool red_zero_one = false;
  auto* reduce = app.add_subcommand("reduce", "Map a QAP, 3AP or DISJOINT MATCHINGS input to BAP");
  reduce->add_option("--from", red_from, "Source problem")
      ->required()
      ->check(CLI::IsMember({"qap", "tap", "disjoint-matchings"}));
  reduce->add_option("--input", red_input, "Source problem file (JSON)")->required();
  reduce->add_option("--out", red_out, "Output instance file, - for stdout")->required();
  reduce->add_option("--alpha", red_alpha, "Gap parameter > 1 (disjoint-matchings)");
  reduce->add_option("--penalty", red_penalty, "Penalty L (qap); default 1 + sum |Q'|");
  reduce->add_flag("--zero-one", red_zero_one, "0-1 cost variant (disjoint-matchings)");
  reduce->callback([&] {
    action = [&] {
      const json doc = parse_json_text(read_text_file(red_input));
      if (!doc.is_object()) throw InputError("$: expected an object");
      const int n = read_positive_int(doc, "n");
      json meta{{"reduction", red_from}};
      std::optional<Instance> inst;
      if (red_from == "qap") {
        if (doc.contains("m") && doc.at("m") != n) throw InputError("$.m: QAP input requires m == n");
        const CostArray4 qprime(n, n, read_number_array(doc, "Q", static_cast<std::size_t>(n) * n * n * n));
        const double penalty = red_penalty.value_or(default_penalty(qprime));
        meta["penalty"] = penalty;
        inst = qap_penalty_reduction(qprime, penalty);
      } else if (red_from == "tap") {
        inst = tap_to_bap(Cube(n, read_number_array(doc, "A", static_cast<std::size_t>(n) * n * n)));
      } else {
        const EdgeList e1 = read_edges(doc, "E1", n);
        const EdgeList e2 = read_edges(doc, "E2", n);
        meta["alpha"] = red_alpha;
        meta["zero_one"] = red_zero_one;
        inst = disjoint_matchings_to_bap(n, e1, e2, red_alpha, red_zero_one);
      }
      emit(red_out, write_instance(*inst, meta), out);
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitInputError;
  }

  try {
    if (action) action();
    return kExitOk;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitCapRefusal;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace bap
