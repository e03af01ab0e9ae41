#include "gkz/resonance.hpp"

#include <boost/integer/mod_inverse.hpp>

#include "gkz/error.hpp"
#include "gkz/lattice/integer_matrix.hpp"

namespace gkz {

namespace {

Integer inverse_mod(const Integer& a, const Integer& m) {
  if (m == 1) return 0;
  return boost::integer::mod_inverse(mod(a, m), m);
}

}  // namespace

FactorizationResult factor_through_face(const CharacterSpec& chi, const Sublattice& M) {
  const Eigen::Index n = static_cast<Eigen::Index>(chi.dimension());
  if (M.basis.cols() != n) throw DomainError("character and sublattice dimensions differ");
  const Integer m = chi.order;
  const Eigen::Index k = M.basis.rows();
  FactorizationResult out;
  out.basis = M.basis;

  IntVector c(n);
  for (Eigen::Index i = 0; i < n; ++i) c(i) = chi.exponents[static_cast<std::size_t>(i)];

  // Solve basis^T y = c mod m through U basis^T V = D.
  const IntMatrix Bt = M.basis.transpose();
  const SmithForm S = smith_normal_form(Bt);
  const IntVector r = S.U * c;
  IntVector z = IntVector::Zero(k);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Integer d = i < k ? S.D(i, i) : Integer(0);
    const Integer g = gcd(d, m);
    if (mod(r(i), g) != 0) return out;
    if (i < k && d != 0) z(i) = mod(Integer(r(i) / g * inverse_mod(d / g, m / g)), m / g);
  }
  const IntVector y = S.V * z;
  CharacterSpec tau{std::vector<std::int64_t>(static_cast<std::size_t>(k)), chi.order, chi.generator};
  for (Eigen::Index l = 0; l < k; ++l) tau.exponents[static_cast<std::size_t>(l)] = to_int64(mod(y(l), m));

  const IntVector check = Bt * y - c;
  for (Eigen::Index i = 0; i < n; ++i)
    if (mod(check(i), m) != 0) throw std::logic_error("character descent failed to reproduce c");
  out.factors = true;
  out.chi_tau = std::move(tau);
  return out;
}

std::vector<std::vector<std::int64_t>> kernel_generators(const Sublattice& M, std::uint64_t q) {
  const Integer m = q - 1;
  const Eigen::Index n = M.basis.cols(), k = M.basis.rows();
  const SmithForm S = smith_normal_form(M.basis);
  std::vector<std::vector<std::int64_t>> gens;
  for (Eigen::Index i = 0; i < n; ++i) {
    Integer scale = 1;
    if (i < k) scale = m / gcd(S.D(i, i), m);
    const IntVector a = scale * S.V.col(i);
    std::vector<std::int64_t> v(static_cast<std::size_t>(n));
    bool zero = true;
    for (Eigen::Index j = 0; j < n; ++j) {
      v[static_cast<std::size_t>(j)] = to_int64(mod(a(j), m));
      zero &= v[static_cast<std::size_t>(j)] == 0;
    }
    if (!zero) gens.push_back(std::move(v));
  }
  return gens;
}

NonresonanceReport nonresonant(const CharacterSpec& chi, const RationalCone& delta, bool all_faces) {
  NonresonanceReport report;
  const int d = delta.dim();
  for (std::size_t f = 0; f + 1 < delta.faces.size(); ++f) {
    if (!all_faces && delta.faces[f].dim != d - 1) continue;
    const FactorizationResult r = factor_through_face(chi, span_lattice(delta, f));
    report.evidence.push_back(FaceEvidence{f, delta.faces[f].dim, r.factors, r.chi_tau});
    if (r.factors) report.nonresonant = false;
  }
  return report;
}

}  // namespace gkz
