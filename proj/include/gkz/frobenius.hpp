#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gkz/sums.hpp"
#include "gkz/weights.hpp"

namespace gkz {

/// S_m = Hyp over k_m (m = 1..M) and P_m = (-1)^n S_m.
struct PowerSumSeries {
  std::vector<CycloNumber> S;
  std::vector<CycloNumber> P;
};

/// x is a point of k^N. BudgetError if (q^M - 1)^n exceeds the budget.
PowerSumSeries power_sums(const FiniteField& k, const IntMatrix& A, const CharacterSpec& chi,
                          std::span<const Element> x, unsigned M, std::uint64_t budget = kDefaultBudget);

/// D + 2, or D + 1 when depth D + 2 would exceed the budget; both leave
/// extra power sums to check a degree-D reconstruction against.
unsigned overdetermined_depth(std::uint64_t q, long n, unsigned D, std::uint64_t budget = kDefaultBudget);

struct Charpoly {
  /// Monic, low to high: prod_i (T - alpha_i).
  std::vector<CycloNumber> coeffs;
  /// Every supplied P_m with m > D agrees with the reconstruction.
  bool consistent = true;
  std::vector<unsigned> mismatches;  // indices m with P_m inconsistent

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

/// Newton's identities on P_1..P_D; extra entries are checked. With
/// `strict`, an inconsistency raises ConsistencyError.
Charpoly charpoly_from_power_sums(const std::vector<CycloNumber>& P, unsigned D, bool strict = true);

/// Numerical rank of the Hankel matrix (P_{i+j+1}) under the first complex
/// embedding. Heuristic estimate of the number of distinct nonzero roots.
unsigned hankel_rank_estimate(const std::vector<CycloNumber>& P, unsigned digits = 40);

struct FaceDegeneracy {
  std::size_t face_id = 0;  // index in the face lattice of Delta
  int dim = 0;
  std::vector<int> columns;  // j with w_j in the face
  bool degenerate = false;
  unsigned degree = 0;  // m of the field k_m holding the witness
  std::vector<Element> witness;  // point of (k_m^*)^n
  std::vector<std::uint64_t> witness_logs;
};

struct NondegeneracyReport {
  bool nondegenerate = true;  // no witness up to m_max; evidence, not proof
  unsigned m_max = 0;
  std::vector<FaceDegeneracy> faces;
};

/// Searches (k_m^*)^n, m = 1..m_max, for common zeros of t_i d/dt_i f_Gamma
/// on every face Gamma of Delta avoiding the origin, f = sum_j a_j t^{w_j}.
NondegeneracyReport nondegenerate_check(const FiniteField& k, const IntMatrix& A, std::span<const Element> a,
                                        unsigned m_max = 3, std::uint64_t budget = kDefaultBudget);

struct RootInfo {
  Complex<Real> value;
  Real radius;  // inclusion radius
  Real magnitude;
  Real v;  // 2 log_q |alpha|
  int weight = 0;  // nearest integer to v
};

/// Roots of a monic complex polynomial (coefficients low to high) by the
/// Aberth-Ehrlich iteration at `digits` decimal digits.
std::vector<RootInfo> polynomial_roots(const std::vector<Complex<Real>>& coeffs, unsigned digits);

struct SpectrumResult {
  std::vector<RootInfo> roots;
  std::map<int, unsigned> weights;  // v -> count
  unsigned digits = 0;  // precision that produced the result
};

/// Weights v_i = 2 log_q |alpha_i|; each must lie within tol of an integer in
/// [0, n]. Retries once at doubled precision; PrecisionError if the values
/// moved, ConsistencyError if they are stable but not integral.
SpectrumResult weight_spectrum(const Charpoly& charpoly, std::uint64_t q, long n, unsigned digits = 60,
                               double tol = 1e-6);

struct VerifyOptions {
  unsigned m_max = 3;
  unsigned digits = 60;
  double tol = 1e-6;
  std::uint64_t budget = kDefaultBudget;
};

struct Check {
  std::string name;
  std::optional<bool> pass;  // nullopt: not applicable
  std::string detail;
};

struct WeightReport {
  std::string status;  // "verified", "check failed" or "hypotheses unverified"
  Integer degree;  // n! vol(Delta)
  NondegeneracyReport nondegeneracy;
  PowerSumSeries sums;
  Charpoly charpoly;
  std::optional<SpectrumResult> spectrum;
  Integer e;
  WeightPolynomial E;
  SpectrumPrediction expected;
  bool nonresonant = false;
  bool generates_lattice = false;
  std::vector<Check> checks;

  bool all_pass() const;
};

/// nondegeneracy search, power sums to depth D + 2 (D + 1 when D + 2 is over
/// budget), Newton reconstruction,
/// then the rank, spectrum, purity and top-weight checks.
WeightReport verify_point(const FiniteField& k, const IntMatrix& A, const CharacterSpec& chi,
                          std::span<const Element> x, const VerifyOptions& options = {});

}  // namespace gkz
