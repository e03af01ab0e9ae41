#pragma once

#include <exception>
#include <string>
#include <vector>

#include "gkz/cli/config.hpp"
#include "gkz/frobenius.hpp"

namespace gkz::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kBudget = 3 };

struct Report {
  std::string command;
  io::json config;  // normalized echo; re-running it reproduces `results`
  io::json results;
  std::vector<Check> checks;
  double seconds = 0;

  /// kOk unless some applicable check failed.
  int exit_code() const;
  io::json to_json() const;
};

const std::vector<std::string>& commands();

/// Dispatches one command. Throws DomainError on bad input, BudgetError and
/// PrecisionError when limits are hit.
Report run(const std::string& command, const InstanceConfig& config);

struct SamplePoint {
  std::vector<Element> x;
  unsigned rejections = 0;
};

/// First candidate of (k^*)^N from a generator seeded with `seed` that passes
/// nondegenerate_check. BudgetError after `attempts` rejections.
SamplePoint sample_point(const FiniteField& k, const IntMatrix& A, std::uint64_t seed, unsigned attempts = 100,
                         unsigned m_max = 3, std::uint64_t budget = kDefaultBudget);

/// Exit code for an exception escaping `run`.
int exit_code_for(const std::exception& err);
/// {"error": kind, "message": what} for stderr.
io::json error_json(const std::exception& err);

}  // namespace gkz::cli
