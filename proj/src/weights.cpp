#include "gkz/weights.hpp"

#include "gkz/error.hpp"
#include "gkz/lattice/integer_matrix.hpp"
#include "gkz/resonance.hpp"

namespace gkz {

WeightPolynomial t2_minus_one_power(int k) {
  const WeightPolynomial base({Integer(-1), Integer(0), Integer(1)});
  WeightPolynomial out = WeightPolynomial::constant(1);
  for (int i = 0; i < k; ++i) out *= base;
  return out;
}

WeightPolynomial StanleyPolynomials::alpha(std::size_t lo, std::size_t hi) {
  if (lo == hi) return WeightPolynomial::constant(1);
  const auto key = std::make_pair(static_cast<long>(lo), hi);
  if (auto it = alpha_memo_.find(key); it != alpha_memo_.end()) return it->second;
  const int d = faces_[hi].dim - faces_[lo].dim;
  const WeightPolynomial one_minus_t2({Integer(1), Integer(0), Integer(-1)});
  WeightPolynomial a = (one_minus_t2 * beta(lo, hi)).truncated(d - 1);
  alpha_memo_.emplace(key, a);
  return a;
}

WeightPolynomial StanleyPolynomials::beta(std::optional<std::size_t> lo, std::size_t hi) {
  const auto key = std::make_pair(lo ? static_cast<long>(*lo) : -1L, hi);
  if (auto it = beta_memo_.find(key); it != beta_memo_.end()) return it->second;
  const int base = dim(lo) + 1;
  WeightPolynomial b = t2_minus_one_power(faces_[hi].dim - base);
  for (std::size_t f = 0; f < faces_.size(); ++f) {
    if (f == hi || !strictly_above(lo, f) || !faces_.leq(f, hi)) continue;
    b += t2_minus_one_power(faces_[f].dim - base) * alpha(f, hi);
  }
  beta_memo_.emplace(key, b);
  return b;
}

WeightPolynomial alpha(const FaceLattice& cone_faces) {
  StanleyPolynomials S(cone_faces);
  return S.alpha(0, cone_faces.top());
}

WeightPolynomial alpha(const RationalCone& C) {
  if (!C.pointed()) throw DomainError("alpha needs a pointed cone");
  return alpha(C.faces);
}

WeightPolynomial beta(const FaceLattice& polytope_faces) {
  StanleyPolynomials S(polytope_faces);
  return S.beta(std::nullopt, polytope_faces.top());
}

WeightPolynomial beta(const LatticePolytope& P) { return beta(P.faces); }

std::vector<TFace> t_set(const GkzInstance& inst, const CharacterSpec& chi) {
  if (static_cast<Eigen::Index>(chi.dimension()) != inst.A.n())
    throw DomainError("character dimension differs from n");
  std::vector<TFace> out;
  const FaceLattice& L = inst.delta.faces;
  for (std::size_t f = 0; f < L.top(); ++f) {
    const Sublattice M = span_lattice(inst.delta, f);
    FactorizationResult r = factor_through_face(chi, M);
    if (!r.factors) continue;
    out.push_back(TFace{f, L[f].dim, static_cast<int>(L[f].generators.size()), *r.chi_tau, M.basis});
  }
  return out;
}

namespace {

int sign_power(long k) { return (k % 2 == 0) ? 1 : -1; }

IntMatrix face_columns(const GkzInstance& inst, std::size_t f) {
  const auto& gens = inst.delta.faces[f].generators;
  IntMatrix M(inst.A.n(), static_cast<Eigen::Index>(gens.size()));
  for (std::size_t k = 0; k < gens.size(); ++k) M.col(static_cast<Eigen::Index>(k)) = inst.A.column(gens[k]);
  return M;
}

// (dim tau)! vol(Delta cap tau): Delta cap tau is the hull of 0 and the
// columns in tau.
Integer face_volume(const GkzInstance& inst, std::size_t f) {
  const IntMatrix cols = face_columns(inst, f);
  IntMatrix pts(cols.rows(), cols.cols() + 1);
  pts.col(0).setZero();
  pts.rightCols(cols.cols()) = cols;
  return normalized_volume(pts);
}

}  // namespace

Integer e_value(const GkzInstance& inst, const CharacterSpec& chi) {
  const long n = inst.A.n(), N = inst.A.N();
  Integer e = sign_power(N) * inst.volume;
  StanleyPolynomials S(inst.delta.faces);
  const std::size_t top = inst.delta.faces.top();
  for (const TFace& t : t_set(inst, chi)) {
    const Integer a1 = S.alpha(t.face, top).evaluate(Integer(1));
    e += sign_power(n - t.dim + N) * face_volume(inst, t.face) * a1;
  }
  return e;
}

WeightPolynomial E_polynomial(const IntMatrix& A, const CharacterSpec& chi) {
  if (A.rows() == 0) {
    const int N = static_cast<int>(A.cols());
    return WeightPolynomial::monomial(Integer(sign_power(N)), N);
  }
  return E_polynomial(GkzInstance(A), chi);
}

WeightPolynomial E_polynomial(const GkzInstance& inst, const CharacterSpec& chi) {
  const long n = inst.A.n(), N = inst.A.N();
  WeightPolynomial E = WeightPolynomial::monomial(e_value(inst, chi), static_cast<int>(n + N));
  StanleyPolynomials S(inst.delta.faces);
  const std::size_t top = inst.delta.faces.top();
  for (const TFace& t : t_set(inst, chi)) {
    const IntMatrix sub = lattice_coordinates(t.basis, face_columns(inst, t.face));
    const WeightPolynomial term = E_polynomial(sub, t.chi_tau).shifted(static_cast<int>(N - t.N_tau)) *
                                  S.alpha(t.face, top) * Integer(sign_power(n - t.dim + N - t.N_tau));
    E -= term;
  }
  return E;
}

SpectrumPrediction expected_spectrum(const WeightPolynomial& E, Eigen::Index n, Eigen::Index N, const Integer& vol) {
  SpectrumPrediction s;
  s.degree = vol;
  s.sign = sign_power(N);
  Integer total = 0;
  for (int w = 0; w <= E.degree(); ++w) {
    const Integer c = E.coeff(w);
    if (c == 0) continue;
    if ((c > 0) != (s.sign > 0)) s.signs_consistent = false;
    s.weights[w - static_cast<int>(N)] += mp::abs(c);
    total += mp::abs(c);
  }
  (void)n;
  if (total != vol)
    throw ConsistencyError("weight multiplicities sum to " + to_string(total) + ", expected " + to_string(vol));
  return s;
}

}  // namespace gkz
