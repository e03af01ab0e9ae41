#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

namespace gkz {

namespace mp = boost::multiprecision;

using Integer = mp::number<mp::gmp_int, mp::et_off>;
using Rational = mp::number<mp::gmp_rational, mp::et_off>;
using Real = mp::number<mp::mpfr_float_backend<0>, mp::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<Integer>;
using IntVector = Vector<Integer>;
using RatMatrix = Matrix<Rational>;

/// Sets the default MPFR precision (decimal digits) for the lifetime of the
/// guard.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned digits10) : saved_(Real::default_precision()) {
    Real::default_precision(digits10);
  }
  ~PrecisionScope() { Real::default_precision(saved_); }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

/// Minimal complex number over an arbitrary real scalar. std::complex is
/// unspecified for non-builtin types.
template <typename R>
struct Complex {
  R re{0};
  R im{0};

  Complex() = default;
  Complex(R r) : re(std::move(r)), im(0) {}
  Complex(R r, R i) : re(std::move(r)), im(std::move(i)) {}

  Complex& operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Complex& operator*=(const Complex& o) {
    R r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  Complex& operator/=(const Complex& o) {
    R den = o.re * o.re + o.im * o.im;
    R r = (re * o.re + im * o.im) / den;
    im = (im * o.re - re * o.im) / den;
    re = std::move(r);
    return *this;
  }
  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
  friend Complex operator-(const Complex& a) { return Complex(-a.re, -a.im); }
};

template <typename R>
R norm(const Complex<R>& z) {
  return z.re * z.re + z.im * z.im;
}

template <typename R>
R abs(const Complex<R>& z) {
  using std::sqrt;
  return sqrt(norm(z));
}

template <typename R>
Complex<R> conj(const Complex<R>& z) {
  return Complex<R>(z.re, -z.im);
}

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
Integer factorial(unsigned n);
std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);
/// Non-negative residue of a modulo m (m > 0).
std::int64_t mod(std::int64_t a, std::int64_t m);
Integer mod(const Integer& a, const Integer& m);
bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
/// Narrowing conversion that throws DomainError when the value does not fit.
std::int64_t to_int64(const Integer& v);

std::string to_string(const Integer& v);
std::string to_string(const Rational& v);

/// Integer matrix from rows; all rows must have the same length.
IntMatrix int_matrix(const std::vector<std::vector<long>>& rows, Eigen::Index cols = -1);
IntVector int_vector(const std::vector<long>& entries);

}  // namespace gkz
