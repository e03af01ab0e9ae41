#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "gkz/numeric.hpp"

namespace gkz {

std::uint64_t euler_phi(std::uint64_t m);

/// Coefficients (low to high) of the m-th cyclotomic polynomial.
const std::vector<Integer>& cyclotomic_polynomial(std::uint64_t m);

/// Exact element of Q(zeta_m), stored in the power basis
/// 1, zeta_m, ..., zeta_m^(phi(m) - 1), i.e. reduced modulo Phi_m.
///
/// Binary operations on numbers of different conductors first move both
/// operands to the lcm of the conductors. Equality is field equality.
class CycloNumber {
 public:
  CycloNumber() : CycloNumber(Rational(0)) {}
  CycloNumber(int v) : CycloNumber(Rational(v)) {}
  explicit CycloNumber(Rational v, std::uint64_t conductor = 1);

  static CycloNumber root_of_unity(std::uint64_t m, std::int64_t k);
  /// sum_k counts[k] zeta_m^k with counts.size() == m.
  static CycloNumber from_power_counts(std::uint64_t m, std::span<const std::int64_t> counts);

  std::uint64_t conductor() const { return conductor_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  /// The same number written in conductor L (a multiple of conductor()).
  CycloNumber in_conductor(std::uint64_t L) const;
  /// Image under zeta_m -> zeta_m^k, gcd(k, m) = 1.
  CycloNumber galois(std::int64_t k) const;
  CycloNumber conjugate() const { return galois(-1); }

  CycloNumber& operator+=(const CycloNumber& o);
  CycloNumber& operator-=(const CycloNumber& o);
  CycloNumber& operator*=(const CycloNumber& o);
  CycloNumber& operator*=(const Rational& r);
  CycloNumber& operator/=(const Rational& r);

  friend CycloNumber operator+(CycloNumber a, const CycloNumber& b) { return a += b; }
  friend CycloNumber operator-(CycloNumber a, const CycloNumber& b) { return a -= b; }
  friend CycloNumber operator*(CycloNumber a, const CycloNumber& b) { return a *= b; }
  friend CycloNumber operator*(CycloNumber a, const Rational& r) { return a *= r; }
  friend CycloNumber operator-(CycloNumber a) { return a *= Rational(-1); }
  friend bool operator==(const CycloNumber& a, const CycloNumber& b);

  friend std::ostream& operator<<(std::ostream& os, const CycloNumber& x);

 private:
  CycloNumber(std::uint64_t conductor, std::vector<Rational> reduced)
      : conductor_(conductor), coeffs_(std::move(reduced)) {}

  std::uint64_t conductor_;
  std::vector<Rational> coeffs_;
};

CycloNumber pow(const CycloNumber& x, unsigned k);

/// Complex value under zeta_m -> exp(2 pi i k / m), with a bound on the
/// absolute error of `value`.
struct ComplexEmbedding {
  Complex<Real> value;
  Real error_bound;
};

/// Evaluates x under the embedding zeta_m -> exp(2 pi i galois / m) with at
/// least `digits` correct decimal digits (digits >= 15). The result carries
/// the working precision; reading it outside a PrecisionScope is fine.
ComplexEmbedding embed_complex(const CycloNumber& x, unsigned digits, std::int64_t galois = 1);

/// Double-precision convenience embedding.
Complex<double> embed_double(const CycloNumber& x, std::int64_t galois = 1);

}  // namespace gkz
