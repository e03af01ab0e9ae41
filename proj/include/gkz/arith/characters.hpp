#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gkz/arith/cyclotomic.hpp"
#include "gkz/arith/finite_field.hpp"

namespace gkz {

/// chi = chi_0^{c_1} (x) ... (x) chi_0^{c_n} on (k^*)^n, where chi_0(g) =
/// zeta_{q-1} for the field's fixed generator g.
struct CharacterSpec {
  std::vector<std::int64_t> exponents;  // reduced into [0, order)
  std::uint64_t order = 1;              // q - 1
  std::uint32_t generator = 1;          // code of g, recorded for reports

  static CharacterSpec make(std::vector<std::int64_t> c, const FiniteField& k);
  static CharacterSpec trivial(std::size_t n, const FiniteField& k);

  std::size_t dimension() const { return exponents.size(); }
  bool is_trivial() const;
  CharacterSpec inverse() const;

  friend bool operator==(const CharacterSpec&, const CharacterSpec&) = default;
};

/// Conductor p (q - 1) of the ring generated by the values of psi and chi.
std::uint64_t value_conductor(const FiniteField& k);

/// Exponent s in [0, p) with psi_m(y) = zeta_p^s, psi_m = psi o Tr_{k_m/k},
/// psi(x) = zeta_p^{Tr_{k/F_p}(x)}.
std::uint32_t additive_char_exponent(const FieldTower& T, Element y);

/// Exponent e in [0, q - 1) with chi^{(m)}(t) = zeta_{q-1}^e, where the
/// lift is chi o N_{k_m/k}. DomainError if some t_i = 0.
std::uint64_t mult_char_exponent(const FieldTower& T, const CharacterSpec& chi,
                                 std::span<const Element> t);

CycloNumber additive_char(const FieldTower& T, Element y);
CycloNumber mult_char(const FieldTower& T, const CharacterSpec& chi, std::span<const Element> t);

}  // namespace gkz
