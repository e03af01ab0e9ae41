#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gkz/io/json.hpp"
#include "gkz/sums.hpp"

namespace gkz::cli {

/// One problem instance plus run options. Field elements in `x` are element
/// codes (sum_i a_i p^i); `x_log` gives them instead as discrete logarithms
/// to the field's generator.
struct InstanceConfig {
  std::uint32_t p = 0;
  unsigned e = 1;
  std::optional<std::vector<std::uint32_t>> modulus;
  std::optional<IntMatrix> matrix;
  std::optional<std::vector<std::int64_t>> chi;
  std::optional<std::vector<std::int64_t>> x;
  std::optional<std::vector<std::int64_t>> x_log;
  unsigned m = 1;  // extension degree for single sums
  unsigned m_max = 3;
  unsigned digits = 60;
  std::uint64_t budget = kDefaultBudget;
  std::uint64_t seed = 0;
  unsigned attempts = 100;  // sample_point candidates
  unsigned samples = 20;  // randomized cases per identity suite
  std::array<int, 2> katz{1, 1};  // (n, m) of the Katz family
};

/// "1,0,1;0,1,1" -> 2 x 3. DomainError on ragged or malformed input.
IntMatrix parse_matrix(const std::string& text);
/// "1,2,3" -> {1, 2, 3}.
std::vector<std::int64_t> parse_list(const std::string& text);
/// Accepts plain integers and scientific notation with an integral value.
std::uint64_t parse_count(const std::string& text);

InstanceConfig config_from_json(const io::json& j);
io::json to_json(const InstanceConfig& c);
/// JSON, or TOML when the file name ends in ".toml".
InstanceConfig load_config(const std::string& path);
InstanceConfig parse_toml(const std::string& text);

/// Cross-field validation: prime p, |chi| = n, |x| = N, ranges.
void validate(const InstanceConfig& c);

}  // namespace gkz::cli
