#include "doctest.h"

#include <cmath>

#include "gkz/arith/cyclotomic.hpp"
#include "gkz/error.hpp"

using namespace gkz;

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<Integer>{-1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<Integer>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<Integer>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<Integer>{1, 0, -1, 0, 1});
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(1) == 1);
}

TEST_CASE("cyclo ring identities") {
  CHECK(pow(CycloNumber::root_of_unity(4, 1), 2) == CycloNumber(-1));
  const auto z3 = CycloNumber::root_of_unity(3, 1);
  CHECK((CycloNumber(1) + z3 + z3 * z3).is_zero());
  CHECK(CycloNumber::root_of_unity(3, 3) == CycloNumber(1));
  // zeta_6 = -zeta_3^2 across conductors.
  CHECK(CycloNumber::root_of_unity(6, 1) == -CycloNumber::root_of_unity(3, 2));
  CHECK(CycloNumber::root_of_unity(2, 1) == CycloNumber(-1));
}

TEST_CASE("mixed conductors move to the lcm") {
  const auto a = CycloNumber::root_of_unity(3, 1);
  const auto b = CycloNumber::root_of_unity(4, 1);
  const auto c = a * b;
  CHECK(c.conductor() == 12);
  CHECK(c == CycloNumber::root_of_unity(12, 4 + 3));
}

TEST_CASE("ring axioms on random elements") {
  std::uint64_t state = 12345;
  auto next = [&] {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<std::int64_t>((state >> 33) % 7) - 3;
  };
  for (std::uint64_t m : {5u, 8u, 12u, 15u}) {
    auto rnd = [&] {
      std::vector<std::int64_t> counts(m);
      for (auto& c : counts) c = next();
      return CycloNumber::from_power_counts(m, counts);
    };
    for (int trial = 0; trial < 10; ++trial) {
      const auto x = rnd(), y = rnd(), z = rnd();
      CHECK(x * (y + z) == x * y + x * z);
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * y == y * x);
      CHECK((x - x).is_zero());
    }
  }
}

TEST_CASE("embed_complex") {
  const auto z3 = CycloNumber::root_of_unity(3, 1);
  const auto e = embed_double(z3);
  CHECK(e.re == doctest::Approx(-0.5));
  CHECK(e.im == doctest::Approx(std::sqrt(3.0) / 2));

  const auto zero = embed_double(CycloNumber());
  CHECK(zero.re == 0.0);
  CHECK(zero.im == 0.0);

  const auto d = embed_double(z3 - z3 * z3);
  CHECK(d.re == doctest::Approx(0.0));
  CHECK(d.im == doctest::Approx(std::sqrt(3.0)));

  const auto s = CycloNumber::root_of_unity(8, 1) + CycloNumber::root_of_unity(8, 7);
  const auto es = embed_complex(s, 40);
  PrecisionScope scope(60);
  CHECK(mp::abs(abs(es.value) - mp::sqrt(Real(2))) < Real("1e-38"));
  CHECK_THROWS_AS(embed_complex(s, 10), DomainError);
}

TEST_CASE("embedding precision doubling changes the value below the requested accuracy") {
  std::vector<std::int64_t> counts(21);
  for (std::size_t i = 0; i < counts.size(); ++i) counts[i] = static_cast<std::int64_t>(i * i % 11) - 5;
  const auto x = CycloNumber::from_power_counts(21, counts);
  for (unsigned digits : {15u, 30u, 60u}) {
    const auto a = embed_complex(x, digits);
    const auto b = embed_complex(x, 2 * digits);
    PrecisionScope scope(4 * digits);
    const Real diff = abs(a.value - b.value);
    CHECK(diff < mp::pow(Real(10), -static_cast<int>(digits)));
    CHECK(diff <= a.error_bound + b.error_bound);
  }
}

TEST_CASE("galois conjugates embed to the other embeddings") {
  const auto g = CycloNumber::root_of_unity(5, 1) + CycloNumber::root_of_unity(5, 4) * Rational(3);
  for (std::int64_t k : {1, 2, 3, 4}) {
    const auto a = embed_double(g.galois(k));
    const auto b = embed_double(g, k);
    CHECK(a.re == doctest::Approx(b.re));
    CHECK(a.im == doctest::Approx(b.im));
  }
  CHECK_THROWS_AS(g.galois(5), DomainError);
}
