#include "gkz/arith/finite_field.hpp"

#include "gkz/error.hpp"

namespace gkz {

FieldTower::FieldTower(FiniteField base, unsigned m)
    : base_(base),
      ext_(m == 1 ? base : FiniteField::make(base.characteristic(), base.degree() * m)),
      m_(m) {
  if (m < 1) throw DomainError("tower degree must be >= 1");
  const auto& k = base_;
  const auto& K = ext_;

  // Image of the base field's polynomial variable: least root in k_m of the
  // base modulus.
  Element root{0};
  if (m == 1) {
    root = k.degree() == 1 ? k.zero() : k.element(k.characteristic());
  } else if (k.degree() > 1) {
    bool found = false;
    for (std::uint32_t c = 0; c < K.size() && !found; ++c) {
      Element acc = K.zero();
      for (std::size_t i = k.modulus().size(); i-- > 0;)
        acc = K.add(K.mul(acc, Element{c}), K.from_integer(k.modulus()[i]));
      if (acc.code == 0) {
        root = Element{c};
        found = true;
      }
    }
    if (!found) throw std::logic_error("base modulus has no root in the extension");
  }

  embed_.resize(k.size());
  auto restrict = std::make_shared<std::vector<std::int32_t>>(K.size(), -1);
  for (std::uint32_t c = 0; c < k.size(); ++c) {
    Element image;
    if (m == 1) {
      image = Element{c};
    } else {
      const auto coords = k.coordinates(Element{c});
      Element acc = K.zero();
      for (std::size_t i = coords.size(); i-- > 0;)
        acc = K.add(K.mul(acc, root), K.from_integer(coords[i]));
      image = acc;
    }
    embed_[c] = image;
    (*restrict)[image.code] = static_cast<std::int32_t>(c);
  }
  restrict_ = std::move(restrict);

  // N(G) = G^((Q-1)/(q-1)).
  const std::uint64_t Q1 = K.unit_order(), q1 = k.unit_order();
  const Element normG = K.exp(static_cast<std::int64_t>(Q1 / q1));
  const auto pre = this->restrict(normG);
  if (!pre) throw std::logic_error("norm left the base field");
  norm_exponent_ = k.log(*pre);

  auto table = std::make_shared<std::vector<std::uint32_t>>(Q1);
  for (std::uint64_t a = 0; a < Q1; ++a)
    (*table)[a] = K.absolute_trace(K.exp(static_cast<std::int64_t>(a)));
  trace_by_log_ = std::move(table);
}

Element FieldTower::embed(Element x) const {
  if (x.code >= base_.size()) throw DomainError("element not in base field");
  return embed_[x.code];
}

std::optional<Element> FieldTower::restrict(Element y) const {
  if (y.code >= ext_.size()) throw DomainError("element not in extension field");
  const std::int32_t c = (*restrict_)[y.code];
  if (c < 0) return std::nullopt;
  return Element{static_cast<std::uint32_t>(c)};
}

Element FieldTower::trace(Element y) const {
  const std::int64_t q = base_.size();
  Element acc = ext_.zero();
  Element term = y;
  for (unsigned i = 0; i < m_; ++i) {
    acc = ext_.add(acc, term);
    term = ext_.pow(term, q);
  }
  const auto r = restrict(acc);
  if (!r) throw std::logic_error("trace left the base field");
  return *r;
}

Element FieldTower::norm(Element y) const {
  const std::int64_t q = base_.size();
  Element acc = ext_.one();
  Element term = y;
  for (unsigned i = 0; i < m_; ++i) {
    acc = ext_.mul(acc, term);
    term = ext_.pow(term, q);
  }
  const auto r = restrict(acc);
  if (!r) throw std::logic_error("norm left the base field");
  return *r;
}

}  // namespace gkz
