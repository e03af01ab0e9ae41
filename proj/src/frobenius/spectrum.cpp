#include <algorithm>
#include <cmath>

#include <boost/math/constants/constants.hpp>

#include "gkz/error.hpp"
#include "gkz/frobenius.hpp"
#include "gkz/lattice/instance.hpp"
#include "gkz/resonance.hpp"

namespace gkz {

namespace {

using C = Complex<Real>;

// p(z) and p'(z) by Horner, plus the rounding bound sum |a_i| |z|^i.
void horner(const std::vector<C>& a, const C& z, C& p, C& dp, Real& bound) {
  p = a.back();
  dp = C();
  bound = abs(a.back());
  const Real az = abs(z);
  for (std::size_t i = a.size() - 1; i-- > 0;) {
    dp = dp * z + p;
    p = p * z + a[i];
    bound = bound * az + abs(a[i]);
  }
}

}  // namespace

std::vector<RootInfo> polynomial_roots(const std::vector<C>& coeffs, unsigned digits) {
  if (coeffs.empty()) throw DomainError("zero polynomial");
  const std::size_t D = coeffs.size() - 1;
  if (D == 0) return {};
  PrecisionScope scope(digits + 10);
  std::vector<C> a(coeffs.size());
  for (std::size_t i = 0; i <= D; ++i) a[i] = coeffs[i] / coeffs[D];
  const Real eps = pow(Real(10), -static_cast<int>(digits)) * Real(4 * (D + 1));

  const Real r0 = abs(a[0]) == 0 ? Real(1) : pow(abs(a[0]), Real(1) / Real(D));
  const Real two_pi = 2 * boost::math::constants::pi<Real>();
  std::vector<C> z(D);
  for (std::size_t k = 0; k < D; ++k) {
    const Real theta = two_pi * Real(k) / Real(D) + Real("0.7");
    z[k] = C(r0 * cos(theta), r0 * sin(theta));
  }
  std::vector<bool> done(D, false);
  for (int iter = 0; iter < 5000; ++iter) {
    bool all = true;
    for (std::size_t k = 0; k < D; ++k) {
      if (done[k]) continue;
      C p, dp;
      Real bound;
      horner(a, z[k], p, dp, bound);
      if (abs(p) <= eps * bound) {
        done[k] = true;
        continue;
      }
      all = false;
      C s;
      for (std::size_t j = 0; j < D; ++j)
        if (j != k) s += C(1) / (z[k] - z[j]);
      const C ratio = p / dp;
      z[k] -= ratio / (C(1) - ratio * s);
    }
    if (all) break;
    if (iter == 4999) throw PrecisionError("root finder did not converge");
  }

  std::vector<RootInfo> roots(D);
  for (std::size_t k = 0; k < D; ++k) {
    C p, dp;
    Real bound;
    horner(a, z[k], p, dp, bound);
    Real den = 1;
    for (std::size_t j = 0; j < D; ++j)
      if (j != k) den *= abs(z[k] - z[j]);
    roots[k].value = z[k];
    roots[k].radius = den == 0 ? Real(0) : Real(D) * abs(p) / den;
    roots[k].magnitude = abs(z[k]);
  }
  return roots;
}

namespace {

struct Attempt {
  SpectrumResult result;
  std::vector<double> v;  // sorted
  bool ok = true;
};

Attempt spectrum_attempt(const Charpoly& cp, std::uint64_t q, long n, unsigned digits, double tol) {
  Attempt at;
  at.result.digits = digits;
  PrecisionScope scope(digits + 10);
  std::vector<C> coeffs;
  for (const auto& c : cp.coeffs) coeffs.push_back(embed_complex(c, digits + 10).value);
  at.result.roots = polynomial_roots(coeffs, digits);
  const Real lq = log(Real(q));
  for (auto& r : at.result.roots) {
    if (r.magnitude == 0) {
      at.ok = false;
      r.v = Real(-1e9);
      at.v.push_back(-1e9);
      continue;
    }
    r.v = 2 * log(r.magnitude) / lq;
    const double v = r.v.convert_to<double>();
    r.weight = static_cast<int>(std::lround(v));
    at.v.push_back(v);
    if (std::abs(v - r.weight) >= tol || r.weight < 0 || r.weight > n)
      at.ok = false;
    else
      ++at.result.weights[r.weight];
  }
  std::sort(at.v.begin(), at.v.end());
  return at;
}

}  // namespace

SpectrumResult weight_spectrum(const Charpoly& charpoly, std::uint64_t q, long n, unsigned digits, double tol) {
  const Attempt first = spectrum_attempt(charpoly, q, n, digits, tol);
  if (first.ok) return first.result;
  const Attempt second = spectrum_attempt(charpoly, q, n, 2 * digits, tol);
  if (second.ok) return second.result;
  for (std::size_t i = 0; i < first.v.size(); ++i)
    if (std::abs(first.v[i] - second.v[i]) >= tol)
      throw PrecisionError("root magnitudes unstable under doubled precision");
  throw ConsistencyError("eigenvalue weights are not integers in [0, n]");
}

bool WeightReport::all_pass() const {
  if (status != "verified") return false;
  for (const auto& c : checks)
    if (c.pass && !*c.pass) return false;
  return true;
}

WeightReport verify_point(const FiniteField& k, const IntMatrix& A, const CharacterSpec& chi,
                          std::span<const Element> x, const VerifyOptions& opt) {
  WeightReport rep;
  const GkzInstance inst(A);
  const long n = A.rows(), N = A.cols();
  rep.degree = inst.volume;
  rep.nondegeneracy = nondegenerate_check(k, A, x, opt.m_max, opt.budget);
  rep.E = E_polynomial(inst, chi);
  rep.e = e_value(inst, chi);
  rep.expected = expected_spectrum(rep.E, n, N, inst.volume);
  rep.nonresonant = nonresonant(chi, inst.delta).nonresonant;
  rep.generates_lattice = inst.A.generates_lattice();

  const unsigned D = static_cast<unsigned>(to_int64(inst.volume));
  const unsigned M = overdetermined_depth(k.size(), n, D, opt.budget);
  rep.sums = power_sums(k, A, chi, x, M, opt.budget);
  rep.charpoly = charpoly_from_power_sums(rep.sums.P, D, false);

  if (!rep.nondegeneracy.nondegenerate || !rep.charpoly.consistent) {
    rep.status = "hypotheses unverified";
    std::string why;
    if (!rep.nondegeneracy.nondegenerate) why += "degeneracy witness found; ";
    if (!rep.charpoly.consistent) why += "power sums inconsistent with degree " + std::to_string(D);
    rep.checks.push_back(Check{"rank", std::nullopt, why});
    return rep;
  }

  const bool rank_ok = rep.charpoly.degree() == static_cast<int>(D) && !rep.charpoly.coeffs.front().is_zero();
  rep.checks.push_back(Check{"rank", rank_ok, "degree " + std::to_string(rep.charpoly.degree()) + ", expected " + std::to_string(D)});

  try {
    rep.spectrum = weight_spectrum(rep.charpoly, k.size(), n, opt.digits, opt.tol);
  } catch (const ConsistencyError& err) {
    rep.checks.push_back(Check{"spectrum", false, err.what()});
    rep.status = "check failed";
    return rep;
  }

  std::map<int, unsigned> expected;
  for (const auto& [v, c] : rep.expected.weights) expected[v] = static_cast<unsigned>(to_int64(c));
  rep.checks.push_back(Check{"spectrum", rep.spectrum->weights == expected, "observed weights vs E(Delta, chi)"});

  if (rep.nonresonant && rep.generates_lattice) {
    bool pure = true;
    for (const auto& [v, c] : rep.spectrum->weights) pure &= v == n;
    rep.checks.push_back(Check{"purity", pure, "all weights equal n"});
  } else {
    rep.checks.push_back(Check{"purity", std::nullopt, "needs non-resonance and columns generating Z^n"});
  }

  const auto it = rep.spectrum->weights.find(static_cast<int>(n));
  const unsigned top = it == rep.spectrum->weights.end() ? 0 : it->second;
  rep.checks.push_back(Check{"top_count", Integer(top) == mp::abs(rep.e),
                             "weight-n count " + std::to_string(top) + ", |e| = " + to_string(mp::abs(rep.e))});

  bool ok = true;
  for (const auto& c : rep.checks)
    if (c.pass && !*c.pass) ok = false;
  rep.status = ok ? "verified" : "check failed";
  return rep;
}

}  // namespace gkz
