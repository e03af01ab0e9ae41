#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace gkz {

/// Element of F_{p^e}, encoded as sum_i a_i p^i where a_0 + a_1 x + ... is
/// its representative modulo the field's defining polynomial.
struct Element {
  std::uint32_t code = 0;

  friend auto operator<=>(const Element&, const Element&) = default;
};

/// The finite field F_q, q = p^e, with a fixed primitive element and full
/// exponential / discrete-log tables.
///
/// The defining polynomial is either supplied or chosen as the least monic
/// irreducible polynomial of degree e, comparing the lower coefficients
/// (a_0, ..., a_{e-1}) by their code sum a_i p^i. The generator is the
/// element of least code whose multiplicative order is q - 1.
class FiniteField {
 public:
  /// Upper bound on q; tables are O(q).
  static constexpr std::uint32_t kMaxSize = 1u << 22;

  static FiniteField make(std::uint32_t p, unsigned e,
                          std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

  std::uint32_t characteristic() const { return p_; }
  unsigned degree() const { return e_; }
  std::uint32_t size() const { return q_; }
  std::uint32_t unit_order() const { return q_ - 1; }
  /// Monic defining polynomial, coefficients low to high (length e + 1).
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  Element generator() const { return generator_; }

  Element zero() const { return {0}; }
  Element one() const { return {1}; }
  /// Image of an integer in the prime field.
  Element from_integer(std::int64_t v) const;
  /// Validated construction from a code in [0, q).
  Element element(std::int64_t code) const;
  std::vector<std::uint32_t> coordinates(Element x) const;
  Element from_coordinates(std::span<const std::uint32_t> coords) const;

  Element add(Element a, Element b) const;
  Element sub(Element a, Element b) const;
  Element neg(Element a) const;
  Element mul(Element a, Element b) const;
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }
  Element pow(Element a, std::int64_t k) const;

  /// generator^k, k taken modulo q - 1.
  Element exp(std::int64_t k) const;
  /// Discrete logarithm to the base generator(); DomainError for zero.
  std::uint32_t log(Element x) const;
  /// Tr_{F_q/F_p}(x) as an integer in [0, p).
  std::uint32_t absolute_trace(Element x) const;

  friend bool operator==(const FiniteField& a, const FiniteField& b) {
    return a.p_ == b.p_ && a.e_ == b.e_ && a.modulus_ == b.modulus_;
  }

 private:
  FiniteField() = default;

  std::uint32_t p_ = 0;
  unsigned e_ = 0;
  std::uint32_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
  Element generator_;
  std::vector<std::uint32_t> place_;        // p^i
  std::vector<std::uint32_t> trace_basis_;  // Tr(x^i)
  std::shared_ptr<const std::vector<std::uint32_t>> exp_;
  std::shared_ptr<const std::vector<std::uint32_t>> log_;
};

/// k = F_q inside k_m = F_{q^m}: embedding, relative trace and norm.
class FieldTower {
 public:
  FieldTower(FiniteField base, unsigned m);

  const FiniteField& base() const { return base_; }
  const FiniteField& ext() const { return ext_; }
  unsigned degree() const { return m_; }

  Element embed(Element x) const;
  /// Preimage under embed, if y lies in the image of k.
  std::optional<Element> restrict(Element y) const;
  /// Tr_{k_m/k}(y) and N_{k_m/k}(y), returned as elements of k.
  Element trace(Element y) const;
  Element norm(Element y) const;
  /// r with N(G^a) = g^(r a), G = ext().generator(), g = base().generator().
  std::uint64_t norm_exponent() const { return norm_exponent_; }
  /// Tr_{k_m/F_p}(G^k) for k in [0, Q - 1); the additive character in
  /// discrete-log coordinates.
  const std::vector<std::uint32_t>& trace_by_log() const { return *trace_by_log_; }

 private:
  FiniteField base_;
  FiniteField ext_;
  unsigned m_;
  std::vector<Element> embed_;
  std::shared_ptr<const std::vector<std::int32_t>> restrict_;
  std::uint64_t norm_exponent_ = 0;
  std::shared_ptr<const std::vector<std::uint32_t>> trace_by_log_;
};

}  // namespace gkz
