#include "doctest.h"

#include <set>

#include "gkz/arith/finite_field.hpp"
#include "gkz/error.hpp"

using namespace gkz;

namespace {

// Multiplicative order by repeated multiplication.
std::uint32_t order_of(const FiniteField& F, Element x) {
  Element y = x;
  std::uint32_t k = 1;
  while (y != F.one()) {
    y = F.mul(y, x);
    ++k;
  }
  return k;
}

}  // namespace

TEST_CASE("make_field picks the least irreducible modulus and least generator") {
  const auto F4 = FiniteField::make(2, 2);
  CHECK(F4.size() == 4);
  CHECK(F4.modulus() == std::vector<std::uint32_t>{1, 1, 1});
  CHECK(F4.generator().code == 2);  // x
  CHECK(F4.pow(F4.generator(), 3) == F4.one());
  CHECK(order_of(F4, F4.generator()) == 3);

  const auto F5 = FiniteField::make(5, 1);
  CHECK(F5.generator().code == 2);
  for (std::uint32_t c = 1; c < 2; ++c) CHECK(order_of(F5, Element{c}) < 4);
  CHECK(order_of(F5, Element{2}) == 4);

  const auto F9 = FiniteField::make(3, 2);
  CHECK(F9.modulus() == std::vector<std::uint32_t>{1, 0, 1});  // x^2 + 1
  CHECK(order_of(F9, F9.generator()) == 8);
  for (std::uint32_t c = 1; c < F9.generator().code; ++c) CHECK(order_of(F9, Element{c}) < 8);
}

TEST_CASE("make_field rejects bad input") {
  CHECK_THROWS_AS(FiniteField::make(4, 1), DomainError);
  CHECK_THROWS_AS(FiniteField::make(1, 1), DomainError);
  CHECK_THROWS_AS(FiniteField::make(3, 0), DomainError);
  // x^2 + 2x + 1 = (x + 1)^2 over F_3.
  CHECK_THROWS_AS(FiniteField::make(3, 2, std::vector<std::uint32_t>{1, 2, 1}), DomainError);
  // x^2 + x + 2 is irreducible over F_3.
  const auto F = FiniteField::make(3, 2, std::vector<std::uint32_t>{2, 1, 1});
  CHECK(order_of(F, F.generator()) == 8);
}

TEST_CASE("field construction is deterministic") {
  const auto a = FiniteField::make(3, 3);
  const auto b = FiniteField::make(3, 3);
  CHECK(a == b);
  CHECK(a.generator() == b.generator());
}

TEST_CASE("discrete_log") {
  const auto F5 = FiniteField::make(5, 1);
  CHECK(F5.log(Element{4}) == 2);
  CHECK(F5.log(F5.one()) == 0);
  CHECK_THROWS_AS(F5.log(F5.zero()), DomainError);

  for (auto [p, e] : {std::pair{2u, 3u}, {3u, 2u}, {5u, 2u}, {7u, 1u}}) {
    const auto F = FiniteField::make(p, e);
    std::set<std::uint32_t> logs;
    for (std::uint32_t c = 1; c < F.size(); ++c) {
      const auto k = F.log(Element{c});
      CHECK(F.exp(k) == Element{c});
      logs.insert(k);
    }
    CHECK(logs.size() == F.size() - 1);
    CHECK(*logs.rbegin() == F.size() - 2);
  }
}

TEST_CASE("prime field arithmetic matches integer arithmetic mod p") {
  const auto F = FiniteField::make(7, 1);
  for (std::uint32_t a = 0; a < 7; ++a)
    for (std::uint32_t b = 0; b < 7; ++b) {
      CHECK(F.add(Element{a}, Element{b}).code == (a + b) % 7);
      CHECK(F.mul(Element{a}, Element{b}).code == (a * b) % 7);
      CHECK(F.sub(Element{a}, Element{b}).code == (a + 7 - b) % 7);
    }
}

TEST_CASE("extension field satisfies the field axioms exhaustively") {
  const auto F = FiniteField::make(2, 3);
  for (std::uint32_t a = 0; a < F.size(); ++a) {
    if (a != 0) CHECK(F.mul(Element{a}, F.inv(Element{a})) == F.one());
    CHECK(F.add(Element{a}, F.neg(Element{a})) == F.zero());
    for (std::uint32_t b = 0; b < F.size(); ++b)
      for (std::uint32_t c = 0; c < F.size(); ++c) {
        const Element x{a}, y{b}, z{c};
        CHECK(F.mul(x, F.add(y, z)) == F.add(F.mul(x, y), F.mul(x, z)));
      }
  }
}

TEST_CASE("trace_and_norm on towers") {
  const auto F2 = FiniteField::make(2, 1);
  const FieldTower T(F2, 2);
  const Element g = T.ext().generator();
  CHECK(T.trace(g) == F2.one());  // g + g^2 = 1
  CHECK(T.trace(T.ext().one()) == F2.zero());
  CHECK(T.norm(T.ext().one()) == F2.one());

  const auto F3 = FiniteField::make(3, 1);
  const FieldTower T9(F3, 2);
  for (std::uint32_t c = 0; c < 9; ++c) {
    const Element t{c};
    CHECK(T9.embed(T9.norm(t)) == T9.ext().pow(t, 4));
    const Element tr = T9.ext().add(t, T9.ext().pow(t, 3));
    CHECK(T9.embed(T9.trace(t)) == tr);
  }
}

TEST_CASE("tower embedding is an injective ring homomorphism") {
  for (auto [p, e, m] : {std::tuple{2u, 2u, 2u}, {3u, 2u, 2u}, {2u, 1u, 3u}, {5u, 1u, 2u}}) {
    const auto k = FiniteField::make(p, e);
    const FieldTower T(k, m);
    std::set<std::uint32_t> images;
    for (std::uint32_t a = 0; a < k.size(); ++a) {
      images.insert(T.embed(Element{a}).code);
      CHECK(T.restrict(T.embed(Element{a})) == Element{a});
      for (std::uint32_t b = 0; b < k.size(); ++b) {
        const Element x{a}, y{b};
        CHECK(T.embed(k.mul(x, y)) == T.ext().mul(T.embed(x), T.embed(y)));
        CHECK(T.embed(k.add(x, y)) == T.ext().add(T.embed(x), T.embed(y)));
      }
    }
    CHECK(images.size() == k.size());
    // N(G^a) = g^(r a).
    for (std::int64_t a = 0; a < 5; ++a)
      CHECK(T.norm(T.ext().exp(a)) ==
            k.exp(static_cast<std::int64_t>(T.norm_exponent()) * a));
  }
}

TEST_CASE("absolute trace is F_p-linear and equals the Frobenius orbit sum") {
  const auto F = FiniteField::make(3, 3);
  for (std::uint32_t c = 0; c < F.size(); ++c) {
    const Element x{c};
    Element acc = F.zero(), term = x;
    for (int i = 0; i < 3; ++i) {
      acc = F.add(acc, term);
      term = F.pow(term, 3);
    }
    CHECK(acc.code == F.absolute_trace(x));
  }
}
