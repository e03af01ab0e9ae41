#pragma once

#include <random>
#include <string>

#include "gkz/sums.hpp"

namespace gkz {

/// Outcome of a batch of exact identity checks.
struct SuiteResult {
  std::string name;
  unsigned cases = 0;
  unsigned failures = 0;
  unsigned skipped = 0;  // instances outside the identity's hypotheses

  bool pass() const { return cases > 0 && failures == 0; }
  SuiteResult& operator+=(const SuiteResult& o);
};

/// Mixed versus twisted sums on `count` random one-variable instances with
/// one or two nontrivial characters. Needs q >= 3.
SuiteResult mixed_twisted_suite(const FiniteField& k, std::mt19937_64& rng, unsigned count,
                                std::uint64_t budget = kDefaultBudget);

/// Hyp(t.x; chi) = chi^{-1}(t) Hyp(x; chi) on `count` random (chi, t, x).
SuiteResult homogeneity_suite(const FiniteField& k, const IntMatrix& A, std::mt19937_64& rng, unsigned count,
                              std::uint64_t budget = kDefaultBudget);

/// Katz equivalence for (n, m) in {(1, 1), (2, 1), (1, 2)}: every character
/// and every x when q <= 5, otherwise `count` random pairs per family.
SuiteResult katz_suite(const FiniteField& k, std::mt19937_64& rng, unsigned count,
                       std::uint64_t budget = kDefaultBudget);

/// Gauss-sum factorization on A = I_1, I_2 and (1 0 1; 0 1 0) with random
/// chi and x; instances with chi'_1 trivial are skipped.
SuiteResult nonconfluent_suite(const FiniteField& k, std::mt19937_64& rng, unsigned count,
                               std::uint64_t budget = kDefaultBudget);

}  // namespace gkz
