#include "gkz/error.hpp"
#include "gkz/frobenius.hpp"
#include "gkz/lattice/polyhedra.hpp"

namespace gkz {

namespace {

struct Term {
  std::uint64_t start;  // log of a_j in k_m
  std::vector<std::uint64_t> w;  // exponents mod Q - 1
  std::vector<std::optional<std::uint64_t>> coeff_log;  // log of w_ij in k_m, none if w_ij = 0 mod p
};

// First t in (k_m^*)^n, lexicographic in discrete logs, where every
// sum_j w_ij a_j t^{w_j} vanishes.
std::optional<std::vector<std::uint64_t>> find_common_zero(const FiniteField& K, const std::vector<Term>& terms,
                                                           std::size_t n) {
  const std::uint64_t Qm1 = K.unit_order();
  std::vector<std::uint64_t> a(n, 0), cur;
  for (const Term& t : terms) cur.push_back(t.start);
  while (true) {
    bool zero = true;
    for (std::size_t i = 0; i < n && zero; ++i) {
      Element v = K.zero();
      for (std::size_t j = 0; j < terms.size(); ++j)
        if (terms[j].coeff_log[i]) v = K.add(v, K.exp(static_cast<std::int64_t>((*terms[j].coeff_log[i] + cur[j]) % Qm1)));
      zero = v.code == 0;
    }
    if (zero) return a;
    std::size_t i = n;
    while (true) {
      if (i == 0) return std::nullopt;
      --i;
      for (std::size_t j = 0; j < terms.size(); ++j) cur[j] = (cur[j] + terms[j].w[i]) % Qm1;
      if (++a[i] < Qm1) break;
      a[i] = 0;
    }
  }
}

}  // namespace

NondegeneracyReport nondegenerate_check(const FiniteField& k, const IntMatrix& A, std::span<const Element> a,
                                        unsigned m_max, std::uint64_t budget) {
  const Eigen::Index n = A.rows(), N = A.cols();
  if (static_cast<Eigen::Index>(a.size()) != N) throw DomainError("point dimension differs from N");
  IntMatrix pts(n, N + 1);
  pts.col(0).setZero();
  pts.rightCols(N) = A;
  const LatticePolytope Delta = hull(pts);

  NondegeneracyReport report;
  report.m_max = m_max;
  for (unsigned m = 1; m <= m_max; ++m) {
    const long double total = std::pow(std::pow(static_cast<long double>(k.size()), m) - 1, static_cast<long double>(n));
    if (total > static_cast<long double>(budget))
      throw BudgetError("nondegeneracy search over degree " + std::to_string(m) + " exceeds the budget");
  }

  for (std::size_t f = 0; f < Delta.faces.size(); ++f) {
    const Face& face = Delta.faces[f];
    bool has_origin = false;
    FaceDegeneracy fd;
    fd.face_id = f;
    fd.dim = face.dim;
    for (int g : face.generators) {
      if (pts.col(g).isZero()) has_origin = true;
      if (g > 0) fd.columns.push_back(g - 1);
    }
    if (has_origin) continue;

    for (unsigned m = 1; m <= m_max && !fd.degenerate; ++m) {
      const FieldTower T(k, m);
      const FiniteField& K = T.ext();
      const std::uint64_t Qm1 = K.unit_order();
      std::vector<Term> terms;
      for (int j : fd.columns) {
        const Element aj = T.embed(a[static_cast<std::size_t>(j)]);
        if (aj.code == 0) continue;
        Term t;
        t.start = K.log(aj);
        for (Eigen::Index i = 0; i < n; ++i) {
          const std::int64_t wij = to_int64(A(i, j));
          t.w.push_back(static_cast<std::uint64_t>(mod(wij, static_cast<std::int64_t>(Qm1))));
          const Element c = K.from_integer(wij);
          t.coeff_log.push_back(c.code == 0 ? std::nullopt : std::optional<std::uint64_t>(K.log(c)));
        }
        terms.push_back(std::move(t));
      }
      if (auto z = find_common_zero(K, terms, static_cast<std::size_t>(n))) {
        fd.degenerate = true;
        fd.degree = m;
        fd.witness_logs = *z;
        for (std::uint64_t l : *z) fd.witness.push_back(K.exp(static_cast<std::int64_t>(l)));
      }
    }
    if (fd.degenerate) report.nondegenerate = false;
    report.faces.push_back(std::move(fd));
  }
  return report;
}

}  // namespace gkz
