#include "gkz/arith/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <ostream>

#include <boost/math/constants/constants.hpp>

#include "gkz/error.hpp"

namespace gkz {
namespace {

std::mutex g_phi_mutex;
std::map<std::uint64_t, std::unique_ptr<std::vector<Integer>>> g_phi_cache;

// Exact quotient of monic integer polynomials.
std::vector<Integer> exact_divide(std::vector<Integer> a, const std::vector<Integer>& b) {
  const std::size_t db = b.size() - 1;
  std::vector<Integer> q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    const Integer c = a[i];
    q[i - db] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  return q;
}

const std::vector<Integer>& phi_locked(std::uint64_t m) {
  auto it = g_phi_cache.find(m);
  if (it != g_phi_cache.end()) return *it->second;
  std::vector<Integer> poly(m + 1, 0);
  poly[0] = -1;
  poly[m] = 1;
  for (std::uint64_t d = 1; d < m; ++d)
    if (m % d == 0) poly = exact_divide(std::move(poly), phi_locked(d));
  auto [pos, _] = g_phi_cache.emplace(m, std::make_unique<std::vector<Integer>>(std::move(poly)));
  return *pos->second;
}

// In-place reduction modulo the monic polynomial phi.
template <typename T>
void reduce(std::vector<T>& v, const std::vector<Integer>& phi) {
  const std::size_t d = phi.size() - 1;
  for (std::size_t i = v.size(); i-- > d;) {
    if (v[i] == 0) continue;
    const T c = v[i];
    v[i] = 0;
    for (std::size_t j = 0; j < d; ++j)
      if (phi[j] != 0) v[i - d + j] -= c * T(phi[j]);
  }
  v.resize(d, T(0));
}

std::vector<Rational> reduce_powers(std::uint64_t m, const std::vector<Rational>& by_power) {
  std::vector<Rational> v = by_power;
  reduce(v, cyclotomic_polynomial(m));
  return v;
}

}  // namespace

std::uint64_t euler_phi(std::uint64_t m) {
  std::uint64_t r = m;
  for (auto p : prime_factors(m)) r = r / p * (p - 1);
  return r;
}

const std::vector<Integer>& cyclotomic_polynomial(std::uint64_t m) {
  if (m == 0) throw DomainError("conductor must be positive");
  std::lock_guard<std::mutex> lock(g_phi_mutex);
  return phi_locked(m);
}

CycloNumber::CycloNumber(Rational v, std::uint64_t conductor) : conductor_(conductor) {
  if (conductor == 0) throw DomainError("conductor must be positive");
  coeffs_.assign(euler_phi(conductor), Rational(0));
  coeffs_[0] = std::move(v);
}

CycloNumber CycloNumber::root_of_unity(std::uint64_t m, std::int64_t k) {
  if (m == 0) throw DomainError("conductor must be positive");
  std::vector<Rational> by_power(m, Rational(0));
  by_power[static_cast<std::size_t>(mod(k, static_cast<std::int64_t>(m)))] = 1;
  return CycloNumber(m, reduce_powers(m, by_power));
}

CycloNumber CycloNumber::from_power_counts(std::uint64_t m, std::span<const std::int64_t> counts) {
  if (m == 0) throw DomainError("conductor must be positive");
  if (counts.size() != m) throw DomainError("count vector length must equal the conductor");
  std::vector<Integer> v(counts.begin(), counts.end());
  reduce(v, cyclotomic_polynomial(m));
  std::vector<Rational> r(v.begin(), v.end());
  return CycloNumber(m, std::move(r));
}

bool CycloNumber::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool CycloNumber::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

CycloNumber CycloNumber::in_conductor(std::uint64_t L) const {
  if (L == conductor_) return *this;
  if (L == 0 || L % conductor_ != 0) throw DomainError("conductor must be a multiple");
  const std::uint64_t step = L / conductor_;
  std::vector<Rational> by_power(L, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) by_power[i * step] = coeffs_[i];
  return CycloNumber(L, reduce_powers(L, by_power));
}

CycloNumber CycloNumber::galois(std::int64_t k) const {
  const auto m = static_cast<std::int64_t>(conductor_);
  if (gcd_u64(static_cast<std::uint64_t>(mod(k, m)), conductor_) != 1 && conductor_ > 1)
    throw DomainError("galois exponent must be a unit modulo the conductor");
  std::vector<Rational> by_power(conductor_, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    by_power[static_cast<std::size_t>(mod(static_cast<std::int64_t>(i) * k, m))] += coeffs_[i];
  return CycloNumber(conductor_, reduce_powers(conductor_, by_power));
}

CycloNumber& CycloNumber::operator+=(const CycloNumber& o) {
  if (o.conductor_ != conductor_) {
    const std::uint64_t L = lcm_u64(conductor_, o.conductor_);
    *this = in_conductor(L);
    return *this += o.in_conductor(L);
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

CycloNumber& CycloNumber::operator-=(const CycloNumber& o) {
  if (o.conductor_ != conductor_) {
    const std::uint64_t L = lcm_u64(conductor_, o.conductor_);
    *this = in_conductor(L);
    return *this -= o.in_conductor(L);
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

CycloNumber& CycloNumber::operator*=(const CycloNumber& o) {
  if (o.conductor_ != conductor_) {
    const std::uint64_t L = lcm_u64(conductor_, o.conductor_);
    *this = in_conductor(L);
    return *this *= o.in_conductor(L);
  }
  if (o.is_rational()) return *this *= o.coeffs_[0];
  if (is_rational()) {
    const Rational r = coeffs_[0];
    *this = o;
    return *this *= r;
  }
  std::vector<Rational> prod(2 * coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      if (o.coeffs_[j] != 0) prod[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  reduce(prod, cyclotomic_polynomial(conductor_));
  coeffs_ = std::move(prod);
  return *this;
}

CycloNumber& CycloNumber::operator*=(const Rational& r) {
  for (auto& c : coeffs_) c *= r;
  return *this;
}

CycloNumber& CycloNumber::operator/=(const Rational& r) {
  if (r == 0) throw DomainError("division by zero");
  for (auto& c : coeffs_) c /= r;
  return *this;
}

bool operator==(const CycloNumber& a, const CycloNumber& b) {
  if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
  const std::uint64_t L = lcm_u64(a.conductor_, b.conductor_);
  return a.in_conductor(L).coeffs_ == b.in_conductor(L).coeffs_;
}

std::ostream& operator<<(std::ostream& os, const CycloNumber& x) {
  bool first = true;
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
    if (x.coeffs_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << x.coeffs_[i] << ")";
    if (i > 0) os << "*z" << x.conductor_ << "^" << i;
  }
  if (first) os << "0";
  return os;
}

CycloNumber pow(const CycloNumber& x, unsigned k) {
  CycloNumber acc(Rational(1), x.conductor());
  CycloNumber base = x;
  while (k > 0) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

ComplexEmbedding embed_complex(const CycloNumber& x, unsigned digits, std::int64_t galois) {
  if (digits < 15) throw DomainError("embedding precision must be at least 15 digits");
  const std::size_t terms = x.coefficients().size();
  const unsigned guard = 10 + static_cast<unsigned>(std::to_string(terms).size());
  const unsigned working = digits + guard;
  PrecisionScope scope(working);

  const auto m = static_cast<std::int64_t>(x.conductor());
  const Real two_pi = 2 * boost::math::constants::pi<Real>();
  Complex<Real> acc;
  Real magnitude = 0;
  for (std::size_t i = 0; i < terms; ++i) {
    const Rational& c = x.coefficients()[i];
    if (c == 0) continue;
    const Real cr = Real(mp::numerator(c)) / Real(mp::denominator(c));
    const Real angle = two_pi * Real(mod(static_cast<std::int64_t>(i) * galois, m)) / Real(m);
    acc.re += cr * mp::cos(angle);
    acc.im += cr * mp::sin(angle);
    magnitude += mp::abs(cr);
  }
  // Each term carries O(1) relative rounding; the sum adds at most one
  // rounding per term.
  const Real eps = mp::pow(Real(10), -static_cast<int>(working) + 1);
  Real bound = (magnitude + 1) * Real(static_cast<double>(terms + 4)) * eps;
  return {acc, bound};
}

Complex<double> embed_double(const CycloNumber& x, std::int64_t galois) {
  const auto e = embed_complex(x, 20, galois);
  return {e.value.re.convert_to<double>(), e.value.im.convert_to<double>()};
}

}  // namespace gkz
