#include "gkz/suites.hpp"

#include "gkz/error.hpp"

namespace gkz {

namespace {

Element random_element(std::mt19937_64& rng, const FiniteField& k, bool nonzero) {
  if (nonzero) return Element{static_cast<std::uint32_t>(1 + rng() % (k.size() - 1))};
  return Element{static_cast<std::uint32_t>(rng() % k.size())};
}

CharacterSpec random_char(std::mt19937_64& rng, std::size_t n, const FiniteField& k) {
  std::vector<std::int64_t> c(n);
  for (auto& v : c) v = static_cast<std::int64_t>(rng() % k.unit_order());
  return CharacterSpec::make(c, k);
}

void record(SuiteResult& r, bool holds) {
  ++r.cases;
  if (!holds) ++r.failures;
}

}  // namespace

SuiteResult& SuiteResult::operator+=(const SuiteResult& o) {
  cases += o.cases;
  failures += o.failures;
  skipped += o.skipped;
  return *this;
}

SuiteResult mixed_twisted_suite(const FiniteField& k, std::mt19937_64& rng, unsigned count, std::uint64_t budget) {
  if (k.size() < 3) throw DomainError("mixed/twisted suite needs a nontrivial character, q >= 3");
  SuiteResult r{"mixed_vs_twisted"};
  const FieldTower T(k, 1);
  auto rand_poly = [&] {
    LaurentPolynomial g;
    g.variables = 1;
    for (int s = 0; s < 3; ++s)
      g.terms.push_back({{static_cast<std::int64_t>(rng() % 5) - 2}, random_element(rng, k, false)});
    return g;
  };
  for (unsigned trial = 0; trial < count; ++trial) {
    const std::size_t m = 1 + trial % 2;
    std::vector<LaurentPolynomial> fs;
    std::vector<std::int64_t> c;
    for (std::size_t i = 0; i < m; ++i) {
      fs.push_back(rand_poly());
      c.push_back(1 + static_cast<std::int64_t>(rng() % (k.unit_order() - 1)));
    }
    const auto f = rand_poly();
    record(r, mixed_vs_twisted_identity(T, f, fs, CharacterSpec::make(c, k), budget).holds);
  }
  return r;
}

SuiteResult homogeneity_suite(const FiniteField& k, const IntMatrix& A, std::mt19937_64& rng, unsigned count,
                              std::uint64_t budget) {
  SuiteResult r{"homogeneity"};
  const FieldTower T(k, 1);
  const auto n = static_cast<std::size_t>(A.rows());
  SumQuery q{T, A, CharacterSpec::trivial(n, k), std::vector<Element>(static_cast<std::size_t>(A.cols()))};
  for (unsigned trial = 0; trial < count; ++trial) {
    q.chi = random_char(rng, n, k);
    for (auto& xj : q.x) xj = random_element(rng, k, false);
    std::vector<Element> t;
    for (std::size_t i = 0; i < n; ++i) t.push_back(random_element(rng, k, true));
    record(r, homogeneity_check(q, t, budget).holds);
  }
  return r;
}

SuiteResult katz_suite(const FiniteField& k, std::mt19937_64& rng, unsigned count, std::uint64_t budget) {
  SuiteResult r{"katz"};
  const FieldTower T(k, 1);
  for (auto [n, m] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {1, 2}}) {
    const auto d = static_cast<std::size_t>(n + m - 1);
    if (k.size() <= 5) {
      std::size_t chars = 1;
      for (std::size_t i = 0; i < d; ++i) chars *= k.unit_order();
      for (std::size_t ci = 0; ci < chars; ++ci) {
        const auto chi = CharacterSpec::make(character_at(ci, d, k.unit_order()), k);
        for (std::uint32_t x = 0; x < k.size(); ++x) record(r, katz_equivalence(T, n, m, chi, Element{x}, budget).holds);
      }
    } else {
      for (unsigned trial = 0; trial < count; ++trial)
        record(r, katz_equivalence(T, n, m, random_char(rng, d, k), random_element(rng, k, false), budget).holds);
    }
  }
  return r;
}

SuiteResult nonconfluent_suite(const FiniteField& k, std::mt19937_64& rng, unsigned count, std::uint64_t budget) {
  SuiteResult r{"nonconfluent"};
  const FieldTower T(k, 1);
  const std::vector<IntMatrix> family = {IntMatrix::Identity(1, 1), IntMatrix::Identity(2, 2),
                                         int_matrix({{1, 0, 1}, {0, 1, 0}})};
  for (const auto& A : family) {
    unsigned done = 0;
    for (unsigned attempt = 0; attempt < 4 * count && done < count; ++attempt) {
      const auto chi = random_char(rng, static_cast<std::size_t>(A.rows()), k);
      std::vector<Element> x;
      for (Eigen::Index j = 0; j < A.cols(); ++j) x.push_back(random_element(rng, k, false));
      bool holds = false;
      try {
        holds = nonconfluent_factorization(SumQuery{T, A, chi, x}, budget).holds;
      } catch (const DomainError&) {
        ++r.skipped;  // chi'_1 trivial
        continue;
      }
      record(r, holds);
      ++done;
    }
  }
  return r;
}

}  // namespace gkz
