#include "doctest.h"

#include <cmath>

#include "gkz/error.hpp"
#include "gkz/lattice/integer_matrix.hpp"
#include "gkz/weights.hpp"

using namespace gkz;

namespace {

WeightPolynomial poly(std::vector<long> c) {
  std::vector<Integer> v(c.begin(), c.end());
  return WeightPolynomial(v);
}

// 1 + T^2 + ... + T^{2d}
WeightPolynomial geometric(int d) {
  std::vector<long> c(2 * d + 1, 0);
  for (int i = 0; i <= d; ++i) c[2 * i] = 1;
  return poly(c);
}

bool only_even(const WeightPolynomial& p) {
  for (int k = 1; k <= p.degree(); k += 2)
    if (p.coeff(k) != 0) return false;
  return true;
}

IntMatrix cone_over(const IntMatrix& points) {
  IntMatrix G(points.rows() + 1, points.cols());
  G.topRows(points.rows()) = points;
  G.row(points.rows()).setOnes();
  return G;
}

IntMatrix regular_polygon(int m) {
  // Lattice m-gons for m = 3..6.
  switch (m) {
    case 3: return int_matrix({{0, 1, 0}, {0, 0, 1}});
    case 4: return int_matrix({{0, 1, 1, 0}, {0, 0, 1, 1}});
    case 5: return int_matrix({{0, 1, 2, 1, 0}, {0, 0, 1, 2, 1}});
    default: return int_matrix({{1, 2, 2, 1, 0, 0}, {0, 0, 1, 2, 2, 1}});
  }
}

const IntMatrix kCube = int_matrix({{0, 1, 0, 0, 1, 1, 0, 1}, {0, 0, 1, 0, 1, 0, 1, 1}, {0, 0, 0, 1, 0, 1, 1, 1}});
const IntMatrix kOctahedron = int_matrix({{1, -1, 0, 0, 0, 0}, {0, 0, 1, -1, 0, 0}, {0, 0, 0, 0, 1, -1}});

struct Case {
  IntMatrix A;
  std::uint64_t p;
};

std::vector<std::vector<std::int64_t>> all_chars(std::size_t n, std::int64_t m) {
  std::vector<std::vector<std::int64_t>> out{std::vector<std::int64_t>(n, 0)};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::vector<std::int64_t>> next;
    for (const auto& v : out)
      for (std::int64_t a = 0; a < m; ++a) {
        auto w = v;
        w[i] = a;
        next.push_back(w);
      }
    out = next;
  }
  return out;
}

}  // namespace

TEST_CASE("beta examples") {
  CHECK(beta(hull(int_matrix({{0}}))) == poly({1}));
  CHECK(beta(hull(int_matrix({{0, 1}}))) == poly({1, 0, 1}));
  CHECK(beta(hull(regular_polygon(4))) == poly({1, 0, 2, 0, 1}));
  for (int d = 1; d <= 4; ++d) {
    IntMatrix S = IntMatrix::Zero(d, d + 1);
    S.rightCols(d) = IntMatrix::Identity(d, d);
    CHECK(beta(hull(S)) == geometric(d));
  }
  // Simple polytopes: every proper face has a simplicial cone, so beta is the
  // f-vector sum with all alpha = 1.
  const WeightPolynomial x = t2_minus_one_power(1);
  const WeightPolynomial one = WeightPolynomial::constant(1);
  CHECK(beta(hull(kCube)) == (x + one * Integer(2)) * (x + one * Integer(2)) * (x + one * Integer(2)));
  const IntMatrix prism = int_matrix({{0, 1, 0, 0, 1, 0}, {0, 0, 1, 0, 0, 1}, {0, 0, 0, 1, 1, 1}});
  CHECK(beta(hull(prism)) == t2_minus_one_power(3) + t2_minus_one_power(2) * Integer(5) +
                                 t2_minus_one_power(1) * Integer(9) + one * Integer(6));
}

TEST_CASE("alpha examples") {
  CHECK(alpha(positive_hull(int_matrix({{1}}))) == poly({1}));
  CHECK(alpha(positive_hull(int_matrix({{3}, {5}}))) == poly({1}));
  for (int d = 1; d <= 4; ++d) CHECK(alpha(positive_hull(IntMatrix::Identity(d, d))) == poly({1}));
  CHECK(alpha(positive_hull(int_matrix({{1, 1, 1}, {0, 2, 1}, {0, 1, 3}}))) == poly({1}));
  for (int m = 3; m <= 6; ++m) CHECK(alpha(positive_hull(cone_over(regular_polygon(m)))) == poly({1, 0, m - 3}));
  CHECK(alpha(positive_hull(cone_over(kCube))) == poly({1, 0, 2}));
  CHECK(alpha(positive_hull(cone_over(kOctahedron))) == poly({1, 0, 4}));
  CHECK_THROWS_AS(alpha(positive_hull(int_matrix({{1, -1}}))), DomainError);
}

TEST_CASE("alpha and beta depend only on the combinatorial type") {
  const IntMatrix trapezoid = int_matrix({{0, 3, 2, 0}, {0, 0, 1, 1}});
  CHECK(beta(hull(trapezoid)) == beta(hull(regular_polygon(4))));
  CHECK(alpha(positive_hull(cone_over(trapezoid))) == alpha(positive_hull(cone_over(regular_polygon(4)))));
  const IntMatrix skew_cube = int_matrix({{0, 2, 0, 0, 2, 2, 0, 2}, {0, 1, 1, 0, 2, 1, 1, 2}, {0, 0, 0, 1, 0, 1, 1, 1}});
  CHECK(beta(hull(skew_cube)) == beta(hull(kCube)));
}

TEST_CASE("interval alpha agrees with geometric quotient cones") {
  for (const IntMatrix& P : {kCube, kOctahedron, regular_polygon(5), IntMatrix(int_matrix({{0, 1, 0, 0, 1}, {0, 0, 1, 0, 1}, {0, 0, 0, 1, 1}}))}) {
    const LatticePolytope L = hull(P);
    StanleyPolynomials S(L.faces);
    for (std::size_t g = 0; g < L.faces.size(); ++g) {
      const RationalCone c = cone_of_face(L, g);
      const RationalCone q = quotient_cone(c, 0);
      const WeightPolynomial a = alpha(q);
      CHECK(a == S.alpha(g, L.faces.top()));
      CHECK(only_even(a));
      CHECK(a.degree() <= std::max(0, L.dim() - L.faces[g].dim - 1));
    }
    CHECK(only_even(beta(L)));
  }
}

TEST_CASE("t_set examples") {
  const auto F5 = FiniteField::make(5, 1);
  const GkzInstance klo(int_matrix({{1, -1}}));
  for (std::int64_t c = 0; c < 4; ++c) CHECK(t_set(klo, CharacterSpec::make({c}, F5)).empty());

  const GkzInstance one(int_matrix({{1}}));
  const auto T = t_set(one, CharacterSpec::trivial(1, F5));
  REQUIRE(T.size() == 1);
  CHECK(T[0].dim == 0);
  CHECK(T[0].N_tau == 0);
  CHECK(T[0].chi_tau.dimension() == 0);
  CHECK(t_set(one, CharacterSpec::make({1}, F5)).empty());
}

TEST_CASE("e and E examples") {
  const auto F3 = FiniteField::make(3, 1);
  const auto F5 = FiniteField::make(5, 1);
  const GkzInstance klo(int_matrix({{1, -1}}));
  CHECK(e_value(klo, CharacterSpec::trivial(1, F3)) == 2);
  CHECK(E_polynomial(klo, CharacterSpec::trivial(1, F3)) == poly({0, 0, 0, 2}));

  const GkzInstance one(int_matrix({{1}}));
  CHECK(e_value(one, CharacterSpec::trivial(1, F5)) == 0);
  CHECK(E_polynomial(one, CharacterSpec::trivial(1, F5)) == poly({0, -1}));
  CHECK(e_value(one, CharacterSpec::make({2}, F5)) == -1);
  CHECK(E_polynomial(one, CharacterSpec::make({2}, F5)) == poly({0, 0, -1}));

  const GkzInstance two(int_matrix({{1, 2}}));
  CHECK(e_value(two, CharacterSpec::trivial(1, F5)) == 1);
  CHECK(E_polynomial(two, CharacterSpec::trivial(1, F5)) == poly({0, 0, 1, 1}));

  CHECK(E_polynomial(IntMatrix(0, 0), CharacterSpec{{}, 4, 2}) == poly({1}));
}

TEST_CASE("expected_spectrum") {
  const auto s1 = expected_spectrum(poly({0, 0, 0, 2}), 1, 2, 2);
  CHECK(s1.weights == std::map<int, Integer>{{1, 2}});
  CHECK(s1.signs_consistent);
  const auto s2 = expected_spectrum(poly({0, -1}), 1, 1, 1);
  CHECK(s2.weights == std::map<int, Integer>{{0, 1}});
  CHECK(s2.sign == -1);
  const auto s3 = expected_spectrum(poly({0, 0, 1, 1}), 1, 2, 2);
  CHECK(s3.weights == std::map<int, Integer>{{1, 1}, {0, 1}});
  CHECK_THROWS_AS(expected_spectrum(poly({0, 0, 1}), 1, 2, 2), ConsistencyError);
}

TEST_CASE("E polynomial properties on a corpus") {
  const std::vector<Case> corpus = {
      {int_matrix({{1, -1}}), 5},
      {int_matrix({{1}}), 7},
      {int_matrix({{1, 2}}), 7},
      {int_matrix({{2, 3}}), 5},
      {IntMatrix(IntMatrix::Identity(2, 2)), 5},
      {int_matrix({{1, 0, 1}, {0, 1, 1}}), 5},
      {int_matrix({{2, 1, 0}, {0, 1, 2}}), 5},
      {int_matrix({{1, 0, -1}, {0, 1, -1}}), 5},
      {int_matrix({{1, 0, 1, 0}, {0, 1, 1, 0}, {0, 0, 0, 1}}), 3},
      {int_matrix({{0, 1, 0, 1}, {0, 0, 1, 1}, {1, 1, 1, 1}}), 3},
      {int_matrix({{1, 0, 0, -1}, {0, 1, 0, -1}, {0, 0, 1, 1}}), 3},
  };
  int sign_findings = 0;
  for (const Case& c : corpus) {
    const GkzInstance inst(c.A);
    const auto k = FiniteField::make(c.p, 1);
    const long n = c.A.rows(), N = c.A.cols();
    for (const auto& ex : all_chars(static_cast<std::size_t>(n), static_cast<std::int64_t>(c.p) - 1)) {
      const auto chi = CharacterSpec::make(ex, k);
      const WeightPolynomial E = E_polynomial(inst, chi);
      const Integer e = e_value(inst, chi);
      CHECK(E.evaluate(Integer(1)) == ((N % 2 == 0) ? inst.volume : Integer(-inst.volume)));
      CHECK(E.degree() <= n + N);
      CHECK(E.coeff(static_cast<int>(n + N)) == e);
      const auto s = expected_spectrum(E, n, N, inst.volume);
      if (!s.signs_consistent) ++sign_findings;
      if (t_set(inst, chi).empty()) {
        CHECK(e == ((N % 2 == 0) ? inst.volume : Integer(-inst.volume)));
        CHECK(s.weights.size() == 1);
        CHECK(s.weights.begin()->first == n);
      }
    }
  }
  MESSAGE("E coefficients with sign different from (-1)^N: " << sign_findings);
}
