#include "bap/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "bap/error.hpp"

namespace bap {

using nlohmann::json;

namespace {

constexpr const char* kFormatName = "bap-instance";
constexpr int kFormatVersion = 1;

std::string number_array(std::span<const double> values) {
  std::string text = "[";
  for (std::size_t t = 0; t < values.size(); ++t) {
    if (t) text += ',';
    text += format_number(values[t]);
  }
  return text + "]";
}

Matrix square_from(const std::vector<double>& flat, int size) {
  Matrix mat(size, size);
  std::copy(flat.begin(), flat.end(), mat.data().begin());
  return mat;
}

}  // namespace

std::string format_number(double v) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc()) throw Error("number formatting failed");
  return std::string(buf, end);
}

int read_positive_int(const json& doc, const std::string& key, const std::string& path) {
  const std::string where = path + "." + key;
  if (!doc.contains(key)) throw InputError(where + ": missing");
  const json& v = doc.at(key);
  if (!v.is_number_integer() && !v.is_number_unsigned()) {
    throw InputError(where + ": expected an integer");
  }
  const auto value = v.get<long long>();
  if (value < 1 || value > 1'000'000) throw InputError(where + ": must be a positive integer");
  return static_cast<int>(value);
}

std::vector<double> read_number_array(const json& doc, const std::string& key, std::size_t expected,
                                      const std::string& path) {
  const std::string where = path + "." + key;
  if (!doc.contains(key)) throw InputError(where + ": missing");
  const json& arr = doc.at(key);
  if (!arr.is_array()) throw InputError(where + ": expected an array");
  if (arr.size() != expected) {
    throw DimensionError(where + ": expected length " + std::to_string(expected) + ", got " +
                         std::to_string(arr.size()));
  }
  std::vector<double> out;
  out.reserve(expected);
  for (std::size_t t = 0; t < arr.size(); ++t) {
    if (!arr[t].is_number()) {
      throw InputError(where + "[" + std::to_string(t) + "]: expected a number");
    }
    const double v = arr[t].get<double>();
    if (!std::isfinite(v)) throw InputError(where + "[" + std::to_string(t) + "]: not finite");
    out.push_back(v);
  }
  return out;
}

InstanceFile parse_instance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw InputError(std::string("$: malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("$: expected an object");
  if (doc.contains("format") && doc.at("format") != kFormatName) {
    throw InputError("$.format: expected \"" + std::string(kFormatName) + "\"");
  }
  if (doc.contains("version") && doc.at("version") != kFormatVersion) {
    throw InputError("$.version: unsupported version");
  }
  const int m = read_positive_int(doc, "m");
  const int n = read_positive_int(doc, "n");
  const auto mm = static_cast<std::size_t>(m) * m;
  const auto nn = static_cast<std::size_t>(n) * n;
  auto q = read_number_array(doc, "Q", mm * nn);
  auto c = read_number_array(doc, "C", mm);
  auto d = read_number_array(doc, "D", nn);

  json metadata = json::object();
  if (doc.contains("metadata")) {
    if (!doc.at("metadata").is_object()) throw InputError("$.metadata: expected an object");
    metadata = doc.at("metadata");
  }
  return InstanceFile{Instance(CostArray4(m, n, std::move(q)), square_from(c, m), square_from(d, n)),
                      std::move(metadata)};
}

std::string write_instance(const Instance& inst, const json& metadata) {
  json meta = metadata.is_object() ? metadata : json::object();
  if (inst.swapped()) meta["swapped"] = true;

  // One key per line, arrays inline: diff-friendly and stable.
  std::ostringstream out;
  out << "{\n";
  out << "  \"format\": \"" << kFormatName << "\",\n";
  out << "  \"version\": " << kFormatVersion << ",\n";
  out << "  \"m\": " << inst.m() << ",\n";
  out << "  \"n\": " << inst.n() << ",\n";
  out << "  \"Q\": " << number_array(inst.q().data()) << ",\n";
  out << "  \"C\": " << number_array(inst.c().data()) << ",\n";
  out << "  \"D\": " << number_array(inst.d().data()) << ",\n";
  out << "  \"metadata\": " << meta.dump() << "\n";
  out << "}\n";
  return out.str();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write " + path.string());
  out << text;
  if (!out) throw InputError("write failed for " + path.string());
}

InstanceFile read_instance_file(const std::filesystem::path& path) {
  return parse_instance(read_text_file(path));
}

std::optional<FactoredQ> factors_from_metadata(const json& metadata, int m, int n) {
  if (!metadata.is_object() || !metadata.contains("factors")) return std::nullopt;
  const json& list = metadata.at("factors");
  if (!list.is_array() || list.empty()) throw InputError("$.metadata.factors: expected a non-empty array");
  FactoredQ out;
  for (std::size_t p = 0; p < list.size(); ++p) {
    const std::string path = "$.metadata.factors[" + std::to_string(p) + "]";
    if (!list[p].is_object()) throw InputError(path + ": expected an object");
    const auto a = read_number_array(list[p], "A", static_cast<std::size_t>(m) * m, path);
    const auto b = read_number_array(list[p], "B", static_cast<std::size_t>(n) * n, path);
    out.factors.emplace_back(square_from(a, m), square_from(b, n));
  }
  return out;
}

json factors_to_json(const FactoredQ& factored) {
  json list = json::array();
  for (const auto& [a, b] : factored.factors) {
    list.push_back(json{{"A", std::vector<double>(a.data().begin(), a.data().end())},
                        {"B", std::vector<double>(b.data().begin(), b.data().end())}});
  }
  return list;
}

}  // namespace bap
