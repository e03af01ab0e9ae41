#include "gkz/arith/finite_field.hpp"

#include <string>

#include "gkz/error.hpp"
#include "gkz/numeric.hpp"

namespace gkz {
namespace {

using Poly = std::vector<std::uint32_t>;  // coefficients in [0, p), low to high

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t quot = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - quot * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - quot * new_r);
  }
  return static_cast<std::uint32_t>(mod(t, p));
}

// Remainder of a modulo b (b nonzero) over F_p.
Poly poly_rem(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const std::uint64_t lead_inv = inverse_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const std::uint64_t c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i <= db; ++i)
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - c) * b[i]) % p);
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = static_cast<std::uint32_t>((out[i + j] + std::uint64_t(a[i]) * b[j]) % p);
  return poly_rem(std::move(out), m, p);
}

Poly poly_powmod(Poly base, std::uint64_t k, const Poly& m, std::uint32_t p) {
  Poly acc{1};
  base = poly_rem(std::move(base), m, p);
  while (k > 0) {
    if (k & 1) acc = poly_mulmod(acc, base, m, p);
    base = poly_mulmod(base, base, m, p);
    k >>= 1;
  }
  return acc;
}

Poly digits(std::uint64_t code, std::uint32_t p, unsigned len) {
  Poly d(len, 0);
  for (unsigned i = 0; i < len; ++i) {
    d[i] = static_cast<std::uint32_t>(code % p);
    code /= p;
  }
  return d;
}

std::uint32_t encode(const Poly& a, std::uint32_t p) {
  std::uint64_t code = 0;
  for (std::size_t i = a.size(); i-- > 0;) code = code * p + a[i];
  return static_cast<std::uint32_t>(code);
}

// Exhaustive search for a monic factor of degree <= deg/2.
bool is_irreducible(const Poly& f, std::uint32_t p) {
  const unsigned deg = static_cast<unsigned>(f.size() - 1);
  for (unsigned d = 1; 2 * d <= deg; ++d) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (std::uint64_t c = 0; c < count; ++c) {
      Poly g = digits(c, p, d);
      g.push_back(1);
      if (poly_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

FiniteField FiniteField::make(std::uint32_t p, unsigned e,
                              std::optional<std::vector<std::uint32_t>> modulus) {
  if (!is_prime(p)) throw DomainError("p not prime: " + std::to_string(p));
  if (e < 1) throw DomainError("extension degree must be >= 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) {
    q *= p;
    if (q > kMaxSize) throw DomainError("field size exceeds table limit");
  }

  FiniteField F;
  F.p_ = p;
  F.e_ = e;
  F.q_ = static_cast<std::uint32_t>(q);
  F.place_.resize(e);
  for (unsigned i = 0; i < e; ++i) F.place_[i] = i == 0 ? 1 : F.place_[i - 1] * p;

  if (modulus) {
    Poly m = *modulus;
    if (m.size() != e + 1) throw DomainError("modulus must have degree e");
    for (auto c : m)
      if (c >= p) throw DomainError("modulus coefficient out of range");
    if (m.back() != 1) throw DomainError("modulus must be monic");
    if (!is_irreducible(m, p)) throw DomainError("supplied modulus is reducible");
    F.modulus_ = std::move(m);
  } else {
    const std::uint64_t count = q;
    for (std::uint64_t c = 0; c < count; ++c) {
      Poly m = digits(c, p, e);
      m.push_back(1);
      if (is_irreducible(m, p)) {
        F.modulus_ = std::move(m);
        break;
      }
    }
  }

  // Least primitive element.
  const std::uint64_t order = q - 1;
  const auto primes = prime_factors(order);
  std::uint32_t gen = 0;
  for (std::uint64_t c = 1; c < q && gen == 0; ++c) {
    const Poly x = digits(c, p, e);
    bool primitive = true;
    for (auto r : primes) {
      Poly y = poly_powmod(x, order / r, F.modulus_, p);
      if (y.size() == 1 && y[0] == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) gen = static_cast<std::uint32_t>(c);
  }
  if (q == 2) gen = 1;
  F.generator_ = {gen};

  auto exp = std::make_shared<std::vector<std::uint32_t>>(order);
  auto log = std::make_shared<std::vector<std::uint32_t>>(q, 0);
  std::vector<bool> seen(q, false);
  const Poly g = digits(gen, p, e);
  Poly cur{1};
  for (std::uint64_t k = 0; k < order; ++k) {
    const std::uint32_t code = encode(cur, p);
    if (code == 0 || seen[code]) throw std::logic_error("generator is not primitive");
    seen[code] = true;
    (*exp)[k] = code;
    (*log)[code] = static_cast<std::uint32_t>(k);
    cur = poly_mulmod(cur, g, F.modulus_, p);
  }
  F.exp_ = std::move(exp);
  F.log_ = std::move(log);

  // Tr(x^i) = sum_j (x^i)^(p^j); the result lies in F_p.
  F.trace_basis_.resize(e);
  for (unsigned i = 0; i < e; ++i) {
    Element xi = F.element(F.place_[i]);
    Element acc = F.zero();
    Element term = xi;
    for (unsigned j = 0; j < e; ++j) {
      acc = F.add(acc, term);
      term = F.pow(term, p);
    }
    if (acc.code >= p) throw std::logic_error("trace left the prime field");
    F.trace_basis_[i] = acc.code;
  }
  return F;
}

Element FiniteField::from_integer(std::int64_t v) const {
  return {static_cast<std::uint32_t>(mod(v, p_))};
}

Element FiniteField::element(std::int64_t code) const {
  if (code < 0 || code >= static_cast<std::int64_t>(q_))
    throw DomainError("element code out of range: " + std::to_string(code));
  return {static_cast<std::uint32_t>(code)};
}

std::vector<std::uint32_t> FiniteField::coordinates(Element x) const {
  return digits(x.code, p_, e_);
}

Element FiniteField::from_coordinates(std::span<const std::uint32_t> coords) const {
  if (coords.size() != e_) throw DomainError("wrong number of coordinates");
  std::uint64_t code = 0;
  for (std::size_t i = coords.size(); i-- > 0;) {
    if (coords[i] >= p_) throw DomainError("coordinate out of range");
    code = code * p_ + coords[i];
  }
  return {static_cast<std::uint32_t>(code)};
}

Element FiniteField::add(Element a, Element b) const {
  if (e_ == 1) return {(a.code + b.code) % p_};
  std::uint32_t out = 0;
  std::uint32_t x = a.code, y = b.code;
  for (unsigned i = 0; i < e_; ++i) {
    out += ((x % p_ + y % p_) % p_) * place_[i];
    x /= p_;
    y /= p_;
  }
  return {out};
}

Element FiniteField::neg(Element a) const {
  if (e_ == 1) return {(p_ - a.code) % p_};
  std::uint32_t out = 0;
  std::uint32_t x = a.code;
  for (unsigned i = 0; i < e_; ++i) {
    out += ((p_ - x % p_) % p_) * place_[i];
    x /= p_;
  }
  return {out};
}

Element FiniteField::sub(Element a, Element b) const { return add(a, neg(b)); }

Element FiniteField::mul(Element a, Element b) const {
  if (a.code == 0 || b.code == 0) return zero();
  const std::uint64_t k = std::uint64_t((*log_)[a.code]) + (*log_)[b.code];
  return {(*exp_)[k % (q_ - 1)]};
}

Element FiniteField::inv(Element a) const {
  if (a.code == 0) throw DomainError("inverse of zero");
  const std::uint32_t k = (*log_)[a.code];
  return {(*exp_)[k == 0 ? 0 : (q_ - 1) - k]};
}

Element FiniteField::pow(Element a, std::int64_t k) const {
  if (a.code == 0) {
    if (k < 0) throw DomainError("negative power of zero");
    return k == 0 ? one() : zero();
  }
  const std::int64_t n = q_ - 1;
  const std::int64_t lg = (*log_)[a.code];
  return {(*exp_)[static_cast<std::size_t>(mod(mod(k, n) * lg, n))]};
}

Element FiniteField::exp(std::int64_t k) const {
  return {(*exp_)[static_cast<std::size_t>(mod(k, q_ - 1))]};
}

std::uint32_t FiniteField::log(Element x) const {
  if (x.code == 0) throw DomainError("discrete log of zero");
  if (x.code >= q_) throw DomainError("element out of range");
  return (*log_)[x.code];
}

std::uint32_t FiniteField::absolute_trace(Element x) const {
  std::uint64_t acc = 0;
  std::uint32_t c = x.code;
  for (unsigned i = 0; i < e_; ++i) {
    acc += std::uint64_t(c % p_) * trace_basis_[i];
    c /= p_;
  }
  return static_cast<std::uint32_t>(acc % p_);
}

}  // namespace gkz
