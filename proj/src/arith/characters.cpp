#include "gkz/arith/characters.hpp"

#include "gkz/error.hpp"

namespace gkz {

CharacterSpec CharacterSpec::make(std::vector<std::int64_t> c, const FiniteField& k) {
  CharacterSpec s;
  s.order = k.unit_order();
  s.generator = k.generator().code;
  for (auto& v : c) v = mod(v, static_cast<std::int64_t>(s.order));
  s.exponents = std::move(c);
  return s;
}

CharacterSpec CharacterSpec::trivial(std::size_t n, const FiniteField& k) {
  return make(std::vector<std::int64_t>(n, 0), k);
}

bool CharacterSpec::is_trivial() const {
  for (auto v : exponents)
    if (v != 0) return false;
  return true;
}

CharacterSpec CharacterSpec::inverse() const {
  CharacterSpec s = *this;
  for (auto& v : s.exponents) v = mod(-v, static_cast<std::int64_t>(order));
  return s;
}

std::uint64_t value_conductor(const FiniteField& k) {
  return std::uint64_t(k.characteristic()) * k.unit_order();
}

std::uint32_t additive_char_exponent(const FieldTower& T, Element y) {
  return T.ext().absolute_trace(y);
}

std::uint64_t mult_char_exponent(const FieldTower& T, const CharacterSpec& chi,
                                 std::span<const Element> t) {
  if (t.size() != chi.dimension()) throw DomainError("character and point dimensions differ");
  if (chi.order != T.base().unit_order()) throw DomainError("character belongs to another field");
  const std::uint64_t n = chi.order;
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i].code == 0) throw DomainError("multiplicative character at zero");
    const std::uint64_t a = T.ext().log(t[i]) % n;
    acc = (acc + (std::uint64_t(chi.exponents[i]) * T.norm_exponent() % n) * a) % n;
  }
  return acc;
}

CycloNumber additive_char(const FieldTower& T, Element y) {
  return CycloNumber::root_of_unity(T.base().characteristic(), additive_char_exponent(T, y));
}

CycloNumber mult_char(const FieldTower& T, const CharacterSpec& chi, std::span<const Element> t) {
  return CycloNumber::root_of_unity(chi.order,
                                    static_cast<std::int64_t>(mult_char_exponent(T, chi, t)));
}

}  // namespace gkz
