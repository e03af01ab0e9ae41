#include "gkz/cli/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <toml.hpp>

#include "gkz/error.hpp"

namespace gkz::cli {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\n\r");
  if (a == std::string::npos) return {};
  return s.substr(a, s.find_last_not_of(" \t\n\r") - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(trim(item));
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::int64_t parse_int(const std::string& s) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw DomainError("not an integer: '" + s + "'");
  return v;
}

template <typename T>
T get_int(const io::json& j, const char* key, std::int64_t lo, std::int64_t hi) {
  const auto& v = j.at(key);
  std::int64_t x;
  if (v.is_number_integer())
    x = v.get<std::int64_t>();
  else if (v.is_number_float() && std::floor(v.get<double>()) == v.get<double>() && std::abs(v.get<double>()) < 9e18)
    x = static_cast<std::int64_t>(v.get<double>());
  else if (v.is_string())
    x = static_cast<std::int64_t>(parse_count(v.get<std::string>()));
  else
    throw DomainError(std::string("'") + key + "' must be an integer");
  if (x < lo || x > hi) throw DomainError(std::string("'") + key + "' out of range");
  return static_cast<T>(x);
}

std::vector<std::int64_t> int_list(const io::json& j, const char* key) {
  const auto& v = j.at(key);
  if (v.is_string()) return parse_list(v.get<std::string>());
  if (!v.is_array()) throw DomainError(std::string("'") + key + "' must be a list of integers");
  std::vector<std::int64_t> out;
  for (const auto& e : v) {
    if (!e.is_number_integer()) throw DomainError(std::string("'") + key + "' must be a list of integers");
    out.push_back(e.get<std::int64_t>());
  }
  return out;
}

// TOML tables map onto the JSON schema one to one.
io::json toml_to_json(const toml::node& node) {
  if (const auto* t = node.as_table()) {
    io::json j = io::json::object();
    for (const auto& [k, v] : *t) j[std::string(k.str())] = toml_to_json(v);
    return j;
  }
  if (const auto* a = node.as_array()) {
    io::json j = io::json::array();
    for (const auto& v : *a) j.push_back(toml_to_json(v));
    return j;
  }
  if (const auto* v = node.as_integer()) return v->get();
  if (const auto* v = node.as_floating_point()) return v->get();
  if (const auto* v = node.as_boolean()) return v->get();
  if (const auto* v = node.as_string()) return v->get();
  throw DomainError("unsupported TOML value");
}

}  // namespace

IntMatrix parse_matrix(const std::string& text) {
  std::vector<std::vector<long>> rows;
  for (const auto& r : split(text, ';')) {
    if (r.empty()) throw DomainError("empty matrix row");
    std::vector<long> row;
    for (const auto& v : split(r, ',')) row.push_back(parse_int(v));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw DomainError("empty matrix");
  return int_matrix(rows);
}

std::vector<std::int64_t> parse_list(const std::string& text) {
  std::vector<std::int64_t> out;
  if (trim(text).empty()) return out;
  for (const auto& v : split(text, ',')) out.push_back(parse_int(v));
  return out;
}

std::uint64_t parse_count(const std::string& text) {
  const std::string s = trim(text);
  if (s.find_first_of("eE.") == std::string::npos) {
    const auto v = parse_int(s);
    if (v < 0) throw DomainError("negative count: '" + s + "'");
    return static_cast<std::uint64_t>(v);
  }
  std::size_t used = 0;
  double d = 0;
  try {
    d = std::stod(s, &used);
  } catch (const std::exception&) {
    throw DomainError("not a number: '" + s + "'");
  }
  if (used != s.size() || d < 0 || d > 1.8e19 || std::floor(d) != d) throw DomainError("not a count: '" + s + "'");
  return static_cast<std::uint64_t>(d);
}

InstanceConfig config_from_json(const io::json& j) {
  if (!j.is_object()) throw DomainError("config must be an object");
  static const std::vector<std::string> known = {"p",      "e",      "modulus", "matrix",   "chi",     "x",
                                                 "x_log",  "m",      "m_max",   "digits",   "budget",  "seed",
                                                 "attempts", "samples", "katz"};
  for (const auto& [k, v] : j.items())
    if (std::find(known.begin(), known.end(), k) == known.end()) throw DomainError("unknown config key '" + k + "'");
  InstanceConfig c;
  try {
    if (j.contains("p")) c.p = get_int<std::uint32_t>(j, "p", 2, FiniteField::kMaxSize);
    if (j.contains("e")) c.e = get_int<unsigned>(j, "e", 1, 64);
    if (j.contains("modulus")) {
      std::vector<std::uint32_t> mod;
      for (auto v : int_list(j, "modulus")) {
        if (v < 0) throw DomainError("modulus coefficients must be nonnegative");
        mod.push_back(static_cast<std::uint32_t>(v));
      }
      c.modulus = std::move(mod);
    }
    if (j.contains("matrix")) {
      const auto& M = j.at("matrix");
      c.matrix = M.is_string() ? parse_matrix(M.get<std::string>()) : io::int_matrix_from_json(M);
    }
    if (j.contains("chi")) c.chi = int_list(j, "chi");
    if (j.contains("x")) c.x = int_list(j, "x");
    if (j.contains("x_log")) c.x_log = int_list(j, "x_log");
    if (j.contains("m")) c.m = get_int<unsigned>(j, "m", 1, 64);
    if (j.contains("m_max")) c.m_max = get_int<unsigned>(j, "m_max", 1, 64);
    if (j.contains("digits")) c.digits = get_int<unsigned>(j, "digits", 15, 10000);
    if (j.contains("budget")) c.budget = get_int<std::uint64_t>(j, "budget", 1, std::numeric_limits<std::int64_t>::max());
    if (j.contains("seed")) c.seed = get_int<std::uint64_t>(j, "seed", 0, std::numeric_limits<std::int64_t>::max());
    if (j.contains("attempts")) c.attempts = get_int<unsigned>(j, "attempts", 1, 1000000);
    if (j.contains("samples")) c.samples = get_int<unsigned>(j, "samples", 1, 100000);
    if (j.contains("katz")) {
      const auto k = int_list(j, "katz");
      if (k.size() != 2 || k[0] < 1 || k[1] < 1) throw DomainError("'katz' must be [n, m] with n, m >= 1");
      c.katz = {static_cast<int>(k[0]), static_cast<int>(k[1])};
    }
  } catch (const io::json::exception& err) {
    throw DomainError(std::string("config: ") + err.what());
  }
  return c;
}

io::json to_json(const InstanceConfig& c) {
  io::json j;
  j["p"] = c.p;
  j["e"] = c.e;
  if (c.modulus) j["modulus"] = *c.modulus;
  if (c.matrix) j["matrix"] = io::to_json(*c.matrix);
  if (c.chi) j["chi"] = *c.chi;
  if (c.x) j["x"] = *c.x;
  if (c.x_log) j["x_log"] = *c.x_log;
  j["m"] = c.m;
  j["m_max"] = c.m_max;
  j["digits"] = c.digits;
  j["budget"] = c.budget;
  j["seed"] = c.seed;
  j["attempts"] = c.attempts;
  j["samples"] = c.samples;
  j["katz"] = c.katz;
  return j;
}

InstanceConfig parse_toml(const std::string& text) {
  try {
    return config_from_json(toml_to_json(toml::parse(text)));
  } catch (const toml::parse_error& err) {
    throw DomainError(std::string("TOML: ") + std::string(err.description()));
  }
}

InstanceConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read config file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  if (path.size() >= 5 && path.compare(path.size() - 5, 5, ".toml") == 0) return parse_toml(buf.str());
  try {
    return config_from_json(io::json::parse(buf.str()));
  } catch (const io::json::parse_error& err) {
    throw DomainError(std::string("JSON: ") + err.what());
  }
}

void validate(const InstanceConfig& c) {
  if (c.p == 0) throw DomainError("missing field characteristic p");
  if (!is_prime(c.p)) throw DomainError("p = " + std::to_string(c.p) + " is not prime");
  if (c.x && c.x_log) throw DomainError("give x or x_log, not both");
  if (!c.matrix) return;
  const auto n = static_cast<std::size_t>(c.matrix->rows());
  const auto N = static_cast<std::size_t>(c.matrix->cols());
  if (c.chi && c.chi->size() != n)
    throw DomainError("chi has " + std::to_string(c.chi->size()) + " entries, matrix has " + std::to_string(n) + " rows");
  const auto& x = c.x ? c.x : c.x_log;
  if (x && x->size() != N)
    throw DomainError("x has " + std::to_string(x->size()) + " entries, matrix has " + std::to_string(N) + " columns");
}

}  // namespace gkz::cli
