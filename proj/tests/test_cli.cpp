#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "bap/cli.hpp"
#include "bap/io.hpp"
#include "oracles.hpp"

using namespace bap;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli_main(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "bap_cli_tests";
  fs::create_directories(dir);
  return dir / name;
}

fs::path identity_file() {
  const fs::path p = scratch("identity.json");
  write_text_file(p, write_instance(Instance(oracle::identity_q(2), Matrix(2, 2), Matrix(2, 2))));
  return p;
}

}  // namespace

TEST_CASE("solve --method brute on the identity-Q file") {
  const Run r = run({"solve", "--method", "brute", "--input", identity_file().string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("value: 0\n") != std::string::npos);
}

TEST_CASE("solve methods all run") {
  const std::string in = identity_file().string();
  for (const char* method : {"brute", "enum-x", "rxoy", "ryox", "alt", "shift", "auto"}) {
    const Run r = run({"solve", "--method", method, "--input", in, "--json"});
    CHECK(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    for (const char* key : {"method", "value", "xPerm", "yPerm", "certificates"}) CHECK(doc.contains(key));
    CHECK(doc.size() == 5);
    CHECK(doc["certificates"].contains("path"));
  }
}

TEST_CASE("auto reports the path that fired") {
  const fs::path lin = scratch("lin.json");
  CHECK(run({"generate", "--kind", "linearizable", "--m", "3", "--n", "3", "--seed", "4", "--out", lin.string()})
            .code == 0);
  const Run r = run({"solve", "--input", lin.string()});
  CHECK(r.out.find("path: linearizable") != std::string::npos);

  const fs::path uni = scratch("uni.json");
  run({"generate", "--kind", "uniform", "--m", "3", "--n", "4", "--seed", "4", "--out", uni.string()});
  CHECK(run({"solve", "--input", uni.string()}).out.find("path: enum-x") != std::string::npos);

  const fs::path cvp = scratch("cvp.json");
  run({"generate", "--kind", "cvp", "--m", "3", "--n", "3", "--seed", "4", "--out", cvp.string()});
  CHECK(run({"solve", "--input", cvp.string()}).out.find("path: cvp") != std::string::npos);

  const fs::path rank = scratch("rank.json");
  run({"generate", "--kind", "rank", "--m", "3", "--n", "3", "--seed", "4", "--out", rank.string()});
  const std::string rank_out = run({"solve", "--input", rank.string()}).out;
  CHECK((rank_out.find("path: rank-one") != std::string::npos ||
         rank_out.find("path: linearizable") != std::string::npos ||
         rank_out.find("path: cvp") != std::string::npos));
}

TEST_CASE("analyze --average on the identity-Q file") {
  const Run r = run({"analyze", "--average", "--input", identity_file().string()});
  CHECK(r.code == 0);
  CHECK(r.out == "average: 1\n");
  const Run all = run({"analyze", "--input", identity_file().string()});
  CHECK(all.out.find("domination: 2\n") != std::string::npos);
  CHECK(all.out.find("profile.median: 0\n") != std::string::npos);
}

TEST_CASE("check-lin") {
  const Run r = run({"check-lin", "--input", identity_file().string()});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("linearizable: no\n", 0) == 0);
}

TEST_CASE("cap refusal exits 3") {
  const fs::path big = scratch("big.json");
  run({"generate", "--kind", "uniform", "--m", "4", "--n", "4", "--seed", "1", "--out", big.string()});
  setenv("BAP_ENUM_CAP", "1", 1);
  const Run r = run({"solve", "--method", "enum-x", "--input", big.string()});
  unsetenv("BAP_ENUM_CAP");
  CHECK(r.code == 3);
  CHECK(run({"solve", "--method", "enum-x", "--input", big.string()}).code == 0);
}

TEST_CASE("input errors exit 2") {
  CHECK(run({"solve", "--bogus"}).code == 2);
  const Run usage = run({"solve", "--input", identity_file().string(), "--frobnicate"});
  CHECK(usage.code == 2);
  CHECK(usage.err.find("Usage") != std::string::npos);
  CHECK(run({}).code == 2);
  CHECK(run({"solve", "--input", scratch("missing.json").string()}).code == 2);
  const fs::path bad = scratch("bad.json");
  write_text_file(bad, R"({"m": 2, "n": 2, "Q": [1], "C": [0,0,0,0], "D": [0,0,0,0]})");
  const Run r = run({"solve", "--input", bad.string()});
  CHECK(r.code == 2);
  CHECK(r.err.find("16") != std::string::npos);
  CHECK(run({"solve", "--method", "nope", "--input", bad.string()}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("reduce") {
  const fs::path dm = scratch("dm.json");
  write_text_file(dm, R"({"n": 2, "E1": [[0, 0], [1, 1]], "E2": [[0, 1], [1, 0]]})");
  const fs::path out = scratch("dm_bap.json");
  CHECK(run({"reduce", "--from", "disjoint-matchings", "--input", dm.string(), "--out", out.string()}).code == 0);
  CHECK(run({"solve", "--method", "brute", "--input", out.string()}).out.find("value: 0.3333333333333333\n") !=
        std::string::npos);

  const fs::path tap = scratch("tap.json");
  write_text_file(tap, R"({"n": 2, "A": [1, 2, 3, 4, 5, 6, 7, 8]})");
  CHECK(run({"reduce", "--from", "tap", "--input", tap.string(), "--out", out.string()}).code == 0);

  const fs::path qap = scratch("qap.json");
  write_text_file(qap, R"({"n": 2, "Q": [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16]})");
  CHECK(run({"reduce", "--from", "qap", "--input", qap.string(), "--out", out.string()}).code == 0);
  const auto doc = nlohmann::json::parse(run({"solve", "--method", "brute", "--input", out.string(), "--json"}).out);
  CHECK(doc["xPerm"] == doc["yPerm"]);

  write_text_file(dm, R"({"n": 2, "E1": [[0, 5]], "E2": []})");
  CHECK(run({"reduce", "--from", "disjoint-matchings", "--input", dm.string(), "--out", out.string()}).code == 2);
}

TEST_CASE("generate to stdout is deterministic") {
  const std::vector<std::string> args = {"generate", "--kind", "rank", "--m", "2", "--n", "3", "--seed", "11",
                                         "--out", "-"};
  const Run a = run(args);
  const Run b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("\"factors\"") != std::string::npos);
}
