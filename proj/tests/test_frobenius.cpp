#include "doctest.h"

#include <random>

#include "gkz/error.hpp"
#include "gkz/frobenius.hpp"

using namespace gkz;

namespace {

std::vector<Element> elements(const FiniteField& k, std::vector<std::int64_t> v) {
  std::vector<Element> out;
  for (auto c : v) out.push_back(k.from_integer(c));
  return out;
}

Charpoly integer_charpoly(std::vector<long> coeffs) {
  Charpoly cp;
  for (long c : coeffs) cp.coeffs.push_back(CycloNumber(c));
  return cp;
}

double magnitude(const RootInfo& r) { return r.magnitude.convert_to<double>(); }

}  // namespace

TEST_CASE("power sums") {
  for (std::uint32_t p : {3u, 5u}) {
    const auto k = FiniteField::make(p, 1);
    const auto ps = power_sums(k, int_matrix({{1}}), CharacterSpec::trivial(1, k), elements(k, {1}), 4);
    REQUIRE(ps.S.size() == 4);
    for (unsigned m = 0; m < 4; ++m) {
      CHECK(ps.S[m] == CycloNumber(-1));
      CHECK(ps.P[m] == CycloNumber(1));
    }
  }

  const auto F3 = FiniteField::make(3, 1);
  const auto klo = power_sums(F3, int_matrix({{1, -1}}), CharacterSpec::trivial(1, F3), elements(F3, {1, 1}), 2);
  CHECK(klo.S[0] == CycloNumber(-1));
  CHECK(klo.S[1] == CycloNumber(5));
  CHECK(klo.P[1] == CycloNumber(-5));

  const auto F5 = FiniteField::make(5, 1);
  const auto zero = power_sums(F5, int_matrix({{1, 2}}), CharacterSpec::make({1}, F5), elements(F5, {0, 0}), 3);
  for (const auto& s : zero.S) CHECK(s.is_zero());

  CHECK_THROWS_AS(power_sums(F5, int_matrix({{1, 0}, {0, 1}}), CharacterSpec::trivial(2, F5), elements(F5, {1, 1}), 6, 1000),
                  BudgetError);
}

TEST_CASE("charpoly from power sums") {
  const auto lin = charpoly_from_power_sums({CycloNumber(1), CycloNumber(1), CycloNumber(1)}, 1);
  REQUIRE(lin.degree() == 1);
  CHECK(lin.coeffs[0] == CycloNumber(-1));
  CHECK(lin.coeffs[1] == CycloNumber(1));

  const auto klo = charpoly_from_power_sums({CycloNumber(1), CycloNumber(-5)}, 2);
  REQUIRE(klo.degree() == 2);
  CHECK(klo.coeffs[0] == CycloNumber(3));
  CHECK(klo.coeffs[1] == CycloNumber(-1));
  CHECK(klo.coeffs[2] == CycloNumber(1));

  const auto one = charpoly_from_power_sums({CycloNumber(0), CycloNumber(0)}, 0);
  REQUIRE(one.degree() == 0);
  CHECK(one.coeffs[0] == CycloNumber(1));
  CHECK(one.consistent);

  // Power sums of the roots 1, 2, 3 overdetermine the cubic; a perturbed P_4 is caught.
  std::vector<CycloNumber> P;
  for (long m = 1; m <= 5; ++m) P.push_back(CycloNumber(1 + (1L << m) + static_cast<long>(std::pow(3, m))));
  const auto cubic = charpoly_from_power_sums(P, 3);
  CHECK(cubic.consistent);
  CHECK(cubic.coeffs[0] == CycloNumber(-6));
  CHECK(cubic.coeffs[1] == CycloNumber(11));
  CHECK(cubic.coeffs[2] == CycloNumber(-6));
  P[3] += CycloNumber(1);
  CHECK_THROWS_AS(charpoly_from_power_sums(P, 3), ConsistencyError);
  const auto lax = charpoly_from_power_sums(P, 3, false);
  CHECK_FALSE(lax.consistent);
  CHECK(lax.mismatches == (std::vector<unsigned>{4, 5}));

  CHECK_THROWS_AS(charpoly_from_power_sums({CycloNumber(1)}, 2), DomainError);
}

TEST_CASE("hankel rank estimate") {
  std::vector<CycloNumber> P;
  for (long m = 1; m <= 8; ++m) P.push_back(CycloNumber(2 * (1L << m) + static_cast<long>(std::pow(5, m))));
  CHECK(hankel_rank_estimate(P) == 2);
  CHECK(hankel_rank_estimate(std::vector<CycloNumber>(6, CycloNumber(1))) == 1);
  CHECK(hankel_rank_estimate(std::vector<CycloNumber>(6, CycloNumber(0))) == 0);
}

TEST_CASE("nondegeneracy") {
  const auto F3 = FiniteField::make(3, 1);
  const auto klo = nondegenerate_check(F3, int_matrix({{1, -1}}), elements(F3, {1, 1}));
  CHECK(klo.nondegenerate);
  CHECK(klo.m_max == 3);

  const auto F5 = FiniteField::make(5, 1);
  const IntMatrix A = int_matrix({{2, 1, 0}, {0, 1, 2}});
  const auto a = elements(F5, {1, 2, 1});
  const auto rep = nondegenerate_check(F5, A, a);
  CHECK_FALSE(rep.nondegenerate);
  bool found = false;
  for (const auto& f : rep.faces) {
    if (!f.degenerate) continue;
    found = true;
    CHECK(f.columns == std::vector<int>{0, 1, 2});
    REQUIRE(f.witness.size() == 2);
    // f on the edge is (t1 + t2)^2; check both t_i d/dt_i at the witness.
    const FieldTower T(F5, f.degree);
    const auto& K = T.ext();
    for (Eigen::Index i = 0; i < 2; ++i) {
      Element v = K.zero();
      for (int j : f.columns) {
        Element term = K.mul(T.embed(a[static_cast<std::size_t>(j)]), K.from_integer(to_int64(A(i, j))));
        for (Eigen::Index r = 0; r < 2; ++r) term = K.mul(term, K.pow(f.witness[static_cast<std::size_t>(r)], to_int64(A(r, j))));
        v = K.add(v, term);
      }
      CHECK(v == K.zero());
    }
  }
  CHECK(found);
  // The generic point of the same family has no witness.
  CHECK(nondegenerate_check(F5, A, elements(F5, {1, 1, 1})).nondegenerate);
}

TEST_CASE("polynomial roots") {
  using C = Complex<Real>;
  PrecisionScope scope(70);
  // (T - 1)(T - 2)(T^2 + 1)
  const auto roots = polynomial_roots({C(Real(2)), C(Real(-3)), C(Real(3)), C(Real(-3)), C(Real(1))}, 60);
  REQUIRE(roots.size() == 4);
  std::vector<double> mags;
  for (const auto& r : roots) {
    mags.push_back(magnitude(r));
    CHECK(r.radius < Real("1e-50"));
  }
  std::sort(mags.begin(), mags.end());
  CHECK(mags[0] == doctest::Approx(1).epsilon(1e-12));
  CHECK(mags[1] == doctest::Approx(1).epsilon(1e-12));
  CHECK(mags[2] == doctest::Approx(1).epsilon(1e-12));
  CHECK(mags[3] == doctest::Approx(2).epsilon(1e-12));
}

TEST_CASE("weight spectrum") {
  const auto s = weight_spectrum(integer_charpoly({3, -1, 1}), 3, 1);
  CHECK(s.weights == std::map<int, unsigned>{{1, 2}});
  for (const auto& r : s.roots) CHECK(std::abs(magnitude(r) - std::sqrt(3.0)) < 1e-12);

  CHECK(weight_spectrum(integer_charpoly({-1, 1}), 5, 1).weights == std::map<int, unsigned>{{0, 1}});

  const auto F5 = FiniteField::make(5, 1);
  const auto ps = power_sums(F5, int_matrix({{1, 2}}), CharacterSpec::trivial(1, F5), elements(F5, {0, 1}), 4);
  const auto cp = charpoly_from_power_sums(ps.P, 2);
  CHECK(cp.consistent);
  CHECK(weight_spectrum(cp, 5, 1).weights == std::map<int, unsigned>{{0, 1}, {1, 1}});

  // |alpha| = 2 over q = 3 is not a half-integral power of q.
  CHECK_THROWS_AS(weight_spectrum(integer_charpoly({-2, 1}), 3, 1), ConsistencyError);
  // Weight above n.
  CHECK_THROWS_AS(weight_spectrum(integer_charpoly({-9, 1}), 3, 1), ConsistencyError);
}

TEST_CASE("verify_point examples") {
  const auto F3 = FiniteField::make(3, 1);
  const auto klo = verify_point(F3, int_matrix({{1, -1}}), CharacterSpec::trivial(1, F3), elements(F3, {1, 1}));
  CHECK(klo.status == "verified");
  CHECK(klo.all_pass());
  CHECK(klo.degree == 2);
  REQUIRE(klo.spectrum);
  CHECK(klo.spectrum->weights == std::map<int, unsigned>{{1, 2}});
  CHECK(klo.e == 2);

  const auto F5 = FiniteField::make(5, 1);
  const auto pure = verify_point(F5, int_matrix({{1, 0, 1}, {0, 1, 1}}), CharacterSpec::make({1, 1}, F5), elements(F5, {1, 2, 3}));
  CHECK(pure.status == "verified");
  CHECK(pure.nonresonant);
  CHECK(pure.generates_lattice);
  REQUIRE(pure.spectrum);
  CHECK(pure.spectrum->weights == std::map<int, unsigned>{{2, 2}});
  for (const auto& r : pure.spectrum->roots) CHECK(std::abs(magnitude(r) - 5.0) < 1e-9);

  const auto lin = verify_point(F5, int_matrix({{1}}), CharacterSpec::trivial(1, F5), elements(F5, {3}));
  CHECK(lin.all_pass());
  REQUIRE(lin.spectrum);
  CHECK(lin.spectrum->weights == std::map<int, unsigned>{{0, 1}});

  const auto bad = verify_point(F5, int_matrix({{2, 1, 0}, {0, 1, 2}}), CharacterSpec::trivial(2, F5), elements(F5, {1, 2, 1}));
  CHECK(bad.status == "hypotheses unverified");
  CHECK_FALSE(bad.spectrum);
  CHECK_FALSE(bad.nondegeneracy.nondegenerate);
  CHECK_FALSE(bad.charpoly.consistent);
  CHECK_FALSE(bad.all_pass());
}

TEST_CASE("spectrum properties") {
  std::mt19937_64 rng(7);
  const auto F5 = FiniteField::make(5, 1);
  struct Case {
    IntMatrix A;
    std::vector<std::int64_t> chi;
  };
  const std::vector<Case> cases = {
      {int_matrix({{1, -1}}), {0}},
      {int_matrix({{1, 2}}), {0}},
      {int_matrix({{1, 2}}), {2}},
      {int_matrix({{1, -1}}), {1}},
  };
  for (const auto& c : cases) {
    const auto chi = CharacterSpec::make(c.chi, F5);
    std::optional<std::map<int, unsigned>> first;
    unsigned accepted = 0;
    for (int trial = 0; trial < 8 && accepted < 3; ++trial) {
      std::vector<Element> x;
      for (Eigen::Index j = 0; j < c.A.cols(); ++j) x.push_back(Element{static_cast<std::uint32_t>(1 + rng() % 4)});
      if (!nondegenerate_check(F5, c.A, x).nondegenerate) continue;
      ++accepted;
      VerifyOptions opt;
      const auto rep = verify_point(F5, c.A, chi, x, opt);
      REQUIRE(rep.spectrum);
      CHECK(rep.all_pass());
      // Weight bound.
      for (const auto& [v, count] : rep.spectrum->weights) {
        CHECK(v >= 0);
        CHECK(v <= c.A.rows());
      }
      // Invariance on V.
      if (!first) first = rep.spectrum->weights;
      CHECK(rep.spectrum->weights == *first);
      // Precision robustness.
      CHECK(weight_spectrum(rep.charpoly, 5, c.A.rows(), 120).weights == rep.spectrum->weights);
      // Homogeneity: t.x has the same spectrum.
      std::vector<Element> tx = x;
      const Element t{static_cast<std::uint32_t>(1 + rng() % 4)};
      for (Eigen::Index j = 0; j < c.A.cols(); ++j)
        tx[static_cast<std::size_t>(j)] = F5.mul(x[static_cast<std::size_t>(j)], F5.pow(t, to_int64(c.A(0, j))));
      const auto rep_t = verify_point(F5, c.A, chi, tx, opt);
      REQUIRE(rep_t.spectrum);
      CHECK(rep_t.spectrum->weights == rep.spectrum->weights);
    }
    CHECK(accepted > 0);
  }
}
