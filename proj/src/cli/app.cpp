#include "gkz/cli/app.hpp"

#include <iomanip>
#include <ostream>

#include <CLI11.hpp>

#include "gkz/cli/run.hpp"
#include "gkz/error.hpp"

namespace gkz::cli {

namespace {

struct Flags {
  std::string config_file;
  std::optional<std::uint32_t> p;
  std::optional<unsigned> e, m, m_max, digits, attempts, samples;
  std::optional<std::string> matrix, chi, x, x_log, budget, katz;
  std::optional<std::uint64_t> seed;
  bool json = false;
};

InstanceConfig assemble(const Flags& f) {
  InstanceConfig c = f.config_file.empty() ? InstanceConfig{} : load_config(f.config_file);
  if (f.p) c.p = *f.p;
  if (f.e) c.e = *f.e;
  if (f.m) c.m = *f.m;
  if (f.m_max) c.m_max = *f.m_max;
  if (f.digits) c.digits = *f.digits;
  if (f.attempts) c.attempts = *f.attempts;
  if (f.samples) c.samples = *f.samples;
  if (f.seed) c.seed = *f.seed;
  if (f.matrix) c.matrix = parse_matrix(*f.matrix);
  if (f.chi) c.chi = parse_list(*f.chi);
  if (f.x) {
    c.x = parse_list(*f.x);
    c.x_log.reset();
  }
  if (f.x_log) {
    c.x_log = parse_list(*f.x_log);
    c.x.reset();
  }
  if (f.budget) c.budget = parse_count(*f.budget);
  if (f.katz) {
    const auto v = parse_list(*f.katz);
    if (v.size() != 2 || v[0] < 1 || v[1] < 1) throw DomainError("--katz takes n,m with n, m >= 1");
    c.katz = {static_cast<int>(v[0]), static_cast<int>(v[1])};
  }
  return c;
}

void summary(const Report& r, std::ostream& out) {
  out << "gkz " << r.command << "  p=" << r.config["p"] << " e=" << r.config["e"] << "  (" << std::fixed
      << std::setprecision(3) << r.seconds << " s)\n";
  for (const auto& [key, value] : r.results.items()) {
    std::string text = value.dump();
    if (text.size() > 100) text = text.substr(0, 97) + "...";
    out << "  " << key << ": " << text << '\n';
  }
  if (r.checks.empty()) return;
  out << "checks:\n";
  for (const auto& c : r.checks) {
    const char* verdict = !c.pass ? "n/a " : *c.pass ? "pass" : "FAIL";
    out << "  " << std::left << std::setw(16) << c.name << verdict << "  " << c.detail << '\n';
  }
}

}  // namespace

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact GKZ hypergeometric sums over finite fields and Frobenius weight checks", "gkz"};
  std::string command;
  Flags f;
  std::string names;
  for (const auto& c : commands()) names += (names.empty() ? "" : ", ") + c;
  app.add_option("command", command, "one of: " + names)->required();
  app.add_option("--config", f.config_file, "instance file, JSON or TOML (.toml)");
  app.add_option("--p", f.p, "field characteristic");
  app.add_option("--e", f.e, "field degree, q = p^e");
  app.add_option("--matrix", f.matrix, "exponent matrix, rows separated by ';'");
  app.add_option("--chi", f.chi, "character exponents c_1,...,c_n");
  app.add_option("--x", f.x, "point, as field element codes");
  app.add_option("--x-log", f.x_log, "point, as discrete logarithms to the field generator");
  app.add_option("--m", f.m, "extension degree for single sums");
  app.add_option("--m-max", f.m_max, "extension degree bound for the nondegeneracy search");
  app.add_option("--digits", f.digits, "decimal digits for root finding");
  app.add_option("--budget", f.budget, "maximum number of enumerated terms");
  app.add_option("--seed", f.seed, "seed for sampling and randomized suites");
  app.add_option("--attempts", f.attempts, "candidates tried when sampling a point");
  app.add_option("--samples", f.samples, "random instances per identity suite");
  app.add_option("--katz", f.katz, "n,m of the Katz family");
  app.add_flag("--json", f.json, "print the full JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << io::json{{"error", "usage"}, {"message", e.what()}, {"exit_code", int(kUsage)}}.dump() << '\n';
    return kUsage;
  }

  try {
    const Report r = run(command, assemble(f));
    if (f.json)
      out << r.to_json().dump(2) << '\n';
    else
      summary(r, out);
    return r.exit_code();
  } catch (const std::exception& e) {
    err << error_json(e).dump() << '\n';
    return exit_code_for(e);
  }
}

}  // namespace gkz::cli
