#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gkz/arith/characters.hpp"
#include "gkz/numeric.hpp"

namespace gkz {

/// Default cap on the number of enumerated terms.
inline constexpr std::uint64_t kDefaultBudget = 100000000;

/// Hyp over k_m: sum over t in (k_m^*)^n of chi^(m)(t) psi_m(sum_j x_j t^{w_j}).
struct SumQuery {
  FieldTower tower;
  IntMatrix A;
  CharacterSpec chi;  // base-field character, lifted through the norm
  std::vector<Element> x;  // elements of k_m
};

/// BudgetError if (q^m - 1)^n exceeds the budget.
CycloNumber hyp_sum(const SumQuery& query, std::uint64_t budget = kDefaultBudget);

/// g(chi', psi) over k_m; chi' has dimension 1.
CycloNumber gauss_sum(const FieldTower& T, const CharacterSpec& chi);

/// Laurent polynomial over k in n variables.
struct LaurentPolynomial {
  struct Term {
    std::vector<std::int64_t> exponents;
    Element coeff;
  };
  std::size_t variables = 0;
  std::vector<Term> terms;

  /// Value at a point of (k_m^*)^n, coefficients embedded from k.
  Element evaluate(const FieldTower& T, std::span<const Element> t) const;
};

struct IdentityResult {
  CycloNumber lhs;
  CycloNumber rhs;
  bool holds = false;
};

struct MixedTwistedResult {
  CycloNumber S1;
  CycloNumber S2;
  CycloNumber gauss_product;  // prod_i g(chi_i^{-1}, psi)
  bool holds = false;
};

/// S1 = sum chi_1(f_1(t))...chi_m(f_m(t)) psi(f(t)) with chi_i(0) = 0, and
/// S2 = sum chi_1^{-1}(t_{n+1})...chi_m^{-1}(t_{n+m}) psi(f + sum t_{n+i} f_i).
/// `chis` holds the exponents of chi_1..chi_m; DomainError if some chi_i is
/// trivial.
MixedTwistedResult mixed_vs_twisted_identity(const FieldTower& T, const LaurentPolynomial& f,
                                             const std::vector<LaurentPolynomial>& fs, const CharacterSpec& chis,
                                             std::uint64_t budget = kDefaultBudget);

/// (I_{n+m-1} | w) with w = (-1 x (n-1), 1 x m).
IntMatrix katz_matrix(int n, int m);
/// (I_n | -1 column).
IntMatrix kloosterman_matrix(int n);

/// Hyp at (1,...,1, -1,...,-1, x) against the directly enumerated sum of
/// chi(t) psi(t_1 + ... + t_{n-1} - t_n - ... - t_{n+m-1} + x t_n...t_{n+m-1} / (t_1...t_{n-1})).
IdentityResult katz_equivalence(const FieldTower& T, int n, int m, const CharacterSpec& chi, Element x,
                                std::uint64_t budget = kDefaultBudget);

/// sum chi_1(t_1)...chi_n(t_n) psi(t_1 + ... + t_n + x / (t_1...t_n)).
CycloNumber kloosterman_sum(const FieldTower& T, const CharacterSpec& chi, Element x,
                            std::uint64_t budget = kDefaultBudget);

/// Hyp(t.x; chi) against chi^{-1}(t) Hyp(x; chi), (t.x)_j = t^{w_j} x_j.
IdentityResult homogeneity_check(const SumQuery& query, std::span<const Element> t,
                                 std::uint64_t budget = kDefaultBudget);

/// Hyp(x; chi_c) for every c in (Z/(q-1))^n, in lexicographic order of c
/// (c_1 most significant). Exact DFT over the character group.
std::vector<CycloNumber> batch_all_characters(const FieldTower& T, const IntMatrix& A, std::span<const Element> x,
                                              std::uint64_t budget = kDefaultBudget);

/// Character exponents c of the table entry `index` of batch_all_characters.
std::vector<std::int64_t> character_at(std::size_t index, std::size_t n, std::uint64_t order);

struct NonconfluentResult {
  CycloNumber hyp;
  CycloNumber gauss;  // g(chi'_1, psi)
  CycloNumber reduced;  // sum over s in (k*)^{n-1} with G(s, x) != 0
  IntMatrix C;  // unimodular, first row the nonconfluence vector
  std::vector<std::int64_t> chi_prime;  // C c mod (q - 1)
  bool holds = false;
};

/// Checks Hyp = g(chi'_1) * reduced. DomainError if A is confluent or
/// chi'_1 is trivial.
NonconfluentResult nonconfluent_factorization(const SumQuery& query, std::uint64_t budget = kDefaultBudget);

}  // namespace gkz
