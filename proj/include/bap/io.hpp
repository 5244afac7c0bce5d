#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "bap/instance.hpp"
#include "bap/structure.hpp"

namespace bap {

// An instance plus the free-form metadata object stored alongside it
// (generator, seed, kind, factors, ...).
struct InstanceFile {
  Instance instance;
  nlohmann::json metadata = nlohmann::json::object();
};

// Parses the JSON instance format:
//   {"format": "bap-instance", "version": 1, "m": M, "n": N,
//    "Q": [M*M*N*N numbers, (i,j,k,l) row-major], "C": [M*M], "D": [N*N],
//    "metadata": {...}}
// "format", "version" and "metadata" are optional. Errors are InputError or
// DimensionError with a JSON path in the message.
InstanceFile parse_instance(std::string_view text);

// Serializes the stored (m <= n) orientation. Numbers use the shortest
// decimal that round-trips. Output is byte-stable for equal inputs.
std::string write_instance(const Instance& inst,
                           const nlohmann::json& metadata = nlohmann::json::object());

InstanceFile read_instance_file(const std::filesystem::path& path);
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

// Shortest round-trip decimal for a double ("5", "0.3333333333333333").
std::string format_number(double v);

// Factored form recorded under metadata["factors"] as
// [{"A": [m*m], "B": [n*n]}, ...], if present and well-shaped.
std::optional<FactoredQ> factors_from_metadata(const nlohmann::json& metadata, int m, int n);
nlohmann::json factors_to_json(const FactoredQ& factored);

// Strict readers used by the file format and the reduction inputs.
std::vector<double> read_number_array(const nlohmann::json& doc, const std::string& key,
                                      std::size_t expected, const std::string& path = "$");
int read_positive_int(const nlohmann::json& doc, const std::string& key,
                      const std::string& path = "$");

}  // namespace bap
