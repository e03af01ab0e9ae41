#pragma once

#include <algorithm>
#include <utility>
#include <vector>

namespace gkz {

/// Dense univariate polynomial over a commutative ring `Scalar`, stored with
/// coefficients from low to high degree and no trailing zeros.
template <typename Scalar>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Polynomial monomial(Scalar c, int degree) {
    std::vector<Scalar> v(static_cast<std::size_t>(degree) + 1, Scalar(0));
    v.back() = std::move(c);
    return Polynomial(std::move(v));
  }
  static Polynomial constant(Scalar c) { return monomial(std::move(c), 0); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Scalar>& coefficients() const { return coeffs_; }

  Scalar coeff(int k) const {
    if (k < 0 || k > degree()) return Scalar(0);
    return coeffs_[static_cast<std::size_t>(k)];
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial& operator*=(const Scalar& s) {
    for (auto& c : coeffs_) c *= s;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend Polynomial operator*(Polynomial a, const Scalar& s) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(out));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Multiplication by T^k, k >= 0.
  Polynomial shifted(int k) const {
    if (is_zero()) return {};
    std::vector<Scalar> v(static_cast<std::size_t>(k), Scalar(0));
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return Polynomial(std::move(v));
  }

  /// The part of degree <= d.
  Polynomial truncated(int d) const {
    if (d < 0) return {};
    std::vector<Scalar> v(coeffs_.begin(),
                          coeffs_.begin() + std::min<std::size_t>(coeffs_.size(), d + 1));
    return Polynomial(std::move(v));
  }

  template <typename V>
  V evaluate(const V& x) const {
    V acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + V(*it);
    return acc;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == Scalar(0)) coeffs_.pop_back();
  }

  std::vector<Scalar> coeffs_;
};

}  // namespace gkz
