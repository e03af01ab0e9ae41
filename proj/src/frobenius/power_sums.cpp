#include <cmath>
#include <limits>

#include "gkz/error.hpp"
#include "gkz/frobenius.hpp"

namespace gkz {

namespace {

// (q^M - 1)^n, the size of the largest torus enumerated; infinite past the
// field table limit.
long double depth_cost(std::uint64_t q, long n, unsigned M) {
  if (std::pow(static_cast<long double>(q), static_cast<long double>(M)) > FiniteField::kMaxSize)
    return std::numeric_limits<long double>::infinity();
  return std::pow(std::pow(static_cast<long double>(q), static_cast<long double>(M)) - 1, static_cast<long double>(n));
}

}  // namespace

unsigned overdetermined_depth(std::uint64_t q, long n, unsigned D, std::uint64_t budget) {
  if (D > 0 && depth_cost(q, n, D + 2) > static_cast<long double>(budget)) return D + 1;
  return D + 2;
}

PowerSumSeries power_sums(const FiniteField& k, const IntMatrix& A, const CharacterSpec& chi,
                          std::span<const Element> x, unsigned M, std::uint64_t budget) {
  if (depth_cost(k.size(), A.rows(), M) > static_cast<long double>(budget))
    throw BudgetError("power sums to depth " + std::to_string(M) + " exceed the budget of " + std::to_string(budget) +
                      " terms or the field size limit");
  PowerSumSeries out;
  for (unsigned m = 1; m <= M; ++m) {
    const FieldTower T(k, m);
    std::vector<Element> xm;
    for (const Element& xj : x) xm.push_back(T.embed(xj));
    CycloNumber s = hyp_sum(SumQuery{T, A, chi, std::move(xm)}, budget);
    out.P.push_back(A.rows() % 2 == 0 ? s : -s);
    out.S.push_back(std::move(s));
  }
  return out;
}

Charpoly charpoly_from_power_sums(const std::vector<CycloNumber>& P, unsigned D, bool strict) {
  if (P.size() < D) throw DomainError("fewer power sums than the requested degree");
  // e_k from k e_k = sum_{i=1}^k (-1)^{i-1} e_{k-i} P_i
  std::vector<CycloNumber> e{CycloNumber(1)};
  for (unsigned kk = 1; kk <= D; ++kk) {
    CycloNumber acc;
    for (unsigned i = 1; i <= kk; ++i) {
      const CycloNumber term = e[kk - i] * P[i - 1];
      if (i % 2 == 1)
        acc += term;
      else
        acc -= term;
    }
    acc /= Rational(kk);
    e.push_back(std::move(acc));
  }
  Charpoly out;
  out.coeffs.resize(D + 1);
  for (unsigned kk = 0; kk <= D; ++kk) out.coeffs[D - kk] = kk % 2 == 0 ? e[kk] : -e[kk];
  // P_m - e_1 P_{m-1} + ... + (-1)^D e_D P_{m-D} = 0 for m > D
  for (std::size_t m = D + 1; m <= P.size(); ++m) {
    CycloNumber r;
    for (unsigned i = 0; i <= D; ++i) {
      const CycloNumber term = e[i] * P[m - i - 1];
      if (i % 2 == 0)
        r += term;
      else
        r -= term;
    }
    if (!r.is_zero()) {
      out.consistent = false;
      out.mismatches.push_back(static_cast<unsigned>(m));
    }
  }
  if (strict && !out.consistent)
    throw ConsistencyError("power sums beyond degree " + std::to_string(D) + " disagree with Newton's identities");
  return out;
}

unsigned hankel_rank_estimate(const std::vector<CycloNumber>& P, unsigned digits) {
  const std::size_t h = (P.size() + 1) / 2;
  if (h == 0) return 0;
  PrecisionScope scope(digits + 10);
  std::vector<std::vector<Complex<Real>>> H(h, std::vector<Complex<Real>>(h));
  Real scale = 0;
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = 0; j < h; ++j) {
      if (i + j >= P.size()) continue;
      H[i][j] = embed_complex(P[i + j], digits + 10).value;
      scale = std::max(scale, abs(H[i][j]));
    }
  if (scale == 0) return 0;
  const Real tol = scale * pow(Real(10), -static_cast<int>(digits) / 2);
  unsigned r = 0;
  std::vector<bool> used_col(h, false);
  for (std::size_t row = 0; row < h; ++row) {
    // complete pivoting over the remaining block
    std::size_t pi = h, pj = h;
    Real best = 0;
    for (std::size_t i = row; i < h; ++i)
      for (std::size_t j = 0; j < h; ++j)
        if (!used_col[j] && abs(H[i][j]) > best) {
          best = abs(H[i][j]);
          pi = i;
          pj = j;
        }
    if (pi == h || best <= tol) break;
    std::swap(H[row], H[pi]);
    used_col[pj] = true;
    for (std::size_t i = row + 1; i < h; ++i) {
      const Complex<Real> f = H[i][pj] / H[row][pj];
      for (std::size_t j = 0; j < h; ++j) H[i][j] -= f * H[row][j];
    }
    ++r;
  }
  return r;
}

}  // namespace gkz
