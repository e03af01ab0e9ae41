#include "gkz/sums.hpp"

#include "gkz/error.hpp"
#include "gkz/lattice/integer_matrix.hpp"

namespace gkz {

namespace {

// Counts of zeta_{q-1}^a zeta_p^b, stored as zeta_L^{a p + b (q-1)}, L = p (q-1).
class Accumulator {
 public:
  explicit Accumulator(const FieldTower& T)
      : p_(T.base().characteristic()), m_(T.base().unit_order()), L_(p_ * m_), counts_(L_, 0) {}

  void add(std::uint64_t chi_exp, std::uint64_t psi_exp, std::int64_t mult = 1) {
    counts_[((chi_exp % m_) * p_ + (psi_exp % p_) * m_) % L_] += mult;
  }
  CycloNumber value() const { return CycloNumber::from_power_counts(L_, counts_); }

 private:
  std::uint64_t p_, m_, L_;
  std::vector<std::int64_t> counts_;
};

void check_budget(std::uint64_t base, std::size_t n, std::uint64_t budget) {
  long double total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= static_cast<long double>(base);
  if (total > static_cast<long double>(budget))
    throw BudgetError("enumeration of " + std::to_string(static_cast<double>(total)) +
                      " terms exceeds the budget of " + std::to_string(budget));
}

std::uint64_t reduce(std::int64_t v, std::uint64_t m) {
  return static_cast<std::uint64_t>(mod(v, static_cast<std::int64_t>(m)));
}

// Exponent of chi^(m) at the point with discrete logs `logs` in k_m.
std::uint64_t lifted_exponent(const FieldTower& T, std::span<const std::int64_t> c,
                              std::span<const std::uint64_t> logs) {
  const std::uint64_t m = T.base().unit_order();
  const std::uint64_t r = T.norm_exponent() % m;
  std::uint64_t e = 0;
  for (std::size_t i = 0; i < c.size(); ++i) e = (e + reduce(c[i], m) * ((r * (logs[i] % m)) % m)) % m;
  return e;
}

// Visits (k_m^*)^vars in lexicographic order of discrete logs.
template <class Visit>
void for_each_torus_point(const FieldTower& T, std::size_t vars, std::uint64_t budget, Visit&& visit) {
  const FiniteField& K = T.ext();
  const std::uint64_t Qm1 = K.unit_order();
  check_budget(Qm1, vars, budget);
  std::vector<std::uint64_t> a(vars, 0);
  std::vector<Element> t(vars, K.one());
  while (true) {
    visit(std::span<const Element>(t), std::span<const std::uint64_t>(a));
    std::size_t i = vars;
    while (i > 0) {
      --i;
      if (++a[i] < Qm1) {
        t[i] = K.exp(static_cast<std::int64_t>(a[i]));
        break;
      }
      a[i] = 0;
      t[i] = K.one();
      if (i == 0) return;
    }
    if (vars == 0) return;
  }
}

// Monomial s^w for s with discrete logs `logs`.
Element monomial(const FiniteField& K, std::span<const std::uint64_t> logs, const IntMatrix& W, Eigen::Index col,
                 Eigen::Index first_row = 0) {
  const std::int64_t Qm1 = K.unit_order();
  std::int64_t e = 0;
  for (Eigen::Index k = first_row; k < W.rows(); ++k)
    e = mod(e + mod(to_int64(W(k, col)), Qm1) * static_cast<std::int64_t>(logs[static_cast<std::size_t>(k - first_row)]), Qm1);
  return K.exp(e);
}

void check_query(const SumQuery& q) {
  if (static_cast<Eigen::Index>(q.chi.dimension()) != q.A.rows())
    throw DomainError("character dimension differs from the number of rows of A");
  if (static_cast<Eigen::Index>(q.x.size()) != q.A.cols())
    throw DomainError("point dimension differs from the number of columns of A");
  if (q.chi.order != q.tower.base().unit_order()) throw DomainError("character order differs from q - 1");
  for (const Element& e : q.x)
    if (e.code >= q.tower.ext().size()) throw DomainError("point coordinate outside the field");
}

// psi-exponent of sum_j x_j t^{w_j} for every t = G^a, in the same
// lexicographic order as for_each_torus_point; calls visit(a, psi_exp).
template <class Visit>
void scan_phase(const FieldTower& T, const IntMatrix& A, std::span<const Element> x, std::uint64_t budget,
                Visit&& visit) {
  const FiniteField& K = T.ext();
  const std::uint64_t Qm1 = K.unit_order();
  const std::size_t n = static_cast<std::size_t>(A.rows());
  check_budget(Qm1, n, budget);
  const auto& tr = T.trace_by_log();
  const std::uint32_t p = T.base().characteristic();

  std::vector<std::uint64_t> start;
  std::vector<std::vector<std::uint64_t>> step(n);  // step[i][term]
  for (Eigen::Index j = 0; j < A.cols(); ++j) {
    if (x[static_cast<std::size_t>(j)].code == 0) continue;
    start.push_back(K.log(x[static_cast<std::size_t>(j)]));
    for (std::size_t i = 0; i < n; ++i) step[i].push_back(reduce(to_int64(A(static_cast<Eigen::Index>(i), j)), Qm1));
  }
  const std::size_t terms = start.size();
  std::vector<std::uint64_t> cur = start, a(n, 0);
  auto phase = [&]() {
    std::uint64_t s = 0;
    for (std::size_t j = 0; j < terms; ++j) s += tr[cur[j]];
    return s % p;
  };
  if (n == 0) {
    visit(std::span<const std::uint64_t>(a), phase());
    return;
  }
  const auto& inner = step[n - 1];
  while (true) {
    for (std::uint64_t k = 0; k < Qm1; ++k) {
      a[n - 1] = k;
      visit(std::span<const std::uint64_t>(a), phase());
      for (std::size_t j = 0; j < terms; ++j) {
        cur[j] += inner[j];
        if (cur[j] >= Qm1) cur[j] -= Qm1;
      }
    }
    a[n - 1] = 0;
    std::size_t i = n - 1;
    while (true) {
      if (i == 0) return;
      --i;
      for (std::size_t j = 0; j < terms; ++j) {
        cur[j] += step[i][j];
        if (cur[j] >= Qm1) cur[j] -= Qm1;
      }
      if (++a[i] < Qm1) break;
      a[i] = 0;
    }
  }
}

}  // namespace

CycloNumber hyp_sum(const SumQuery& q, std::uint64_t budget) {
  check_query(q);
  const std::uint64_t m = q.tower.base().unit_order();
  const std::uint64_t r = q.tower.norm_exponent() % m;
  const std::size_t n = q.chi.dimension();
  std::vector<std::uint64_t> chi_step(n);
  for (std::size_t i = 0; i < n; ++i) chi_step[i] = (r * reduce(q.chi.exponents[i], m)) % m;
  Accumulator acc(q.tower);
  scan_phase(q.tower, q.A, q.x, budget, [&](std::span<const std::uint64_t> a, std::uint64_t s) {
    std::uint64_t e = 0;
    for (std::size_t i = 0; i < n; ++i) e += chi_step[i] * (a[i] % m);
    acc.add(e % m, s);
  });
  return acc.value();
}

CycloNumber gauss_sum(const FieldTower& T, const CharacterSpec& chi) {
  if (chi.dimension() != 1) throw DomainError("gauss_sum takes a one-variable character");
  return hyp_sum(SumQuery{T, int_matrix({{1}}), chi, {T.ext().one()}});
}

Element LaurentPolynomial::evaluate(const FieldTower& T, std::span<const Element> t) const {
  const FiniteField& K = T.ext();
  if (t.size() != variables) throw DomainError("wrong number of variables");
  Element acc = K.zero();
  for (const Term& term : terms) {
    if (term.exponents.size() != variables) throw DomainError("ragged Laurent polynomial");
    Element v = T.embed(term.coeff);
    for (std::size_t i = 0; i < variables; ++i) v = K.mul(v, K.pow(t[i], term.exponents[i]));
    acc = K.add(acc, v);
  }
  return acc;
}

MixedTwistedResult mixed_vs_twisted_identity(const FieldTower& T, const LaurentPolynomial& f,
                                             const std::vector<LaurentPolynomial>& fs, const CharacterSpec& chis,
                                             std::uint64_t budget) {
  const std::size_t m = fs.size(), n = f.variables;
  if (chis.dimension() != m) throw DomainError("one character per polynomial f_i is required");
  for (std::int64_t c : chis.exponents)
    if (reduce(c, chis.order) == 0) throw DomainError("the identity needs every chi_i nontrivial");
  for (const auto& g : fs)
    if (g.variables != n) throw DomainError("f and f_i must share their variables");
  const FiniteField& K = T.ext();
  const std::uint64_t mm = T.base().unit_order();
  const std::uint64_t r = T.norm_exponent() % mm;

  MixedTwistedResult out;
  Accumulator s1(T);
  for_each_torus_point(T, n, budget, [&](std::span<const Element> t, std::span<const std::uint64_t>) {
    std::uint64_t e = 0;
    for (std::size_t i = 0; i < m; ++i) {
      const Element y = fs[i].evaluate(T, t);
      if (y.code == 0) return;  // chi_i(0) = 0
      e += reduce(chis.exponents[i], mm) * ((r * (K.log(y) % mm)) % mm);
    }
    s1.add(e % mm, K.absolute_trace(f.evaluate(T, t)));
  });
  out.S1 = s1.value();

  Accumulator s2(T);
  for_each_torus_point(T, n + m, budget, [&](std::span<const Element> t, std::span<const std::uint64_t> a) {
    const auto head = t.subspan(0, n);
    Element arg = f.evaluate(T, head);
    std::uint64_t e = 0;
    for (std::size_t i = 0; i < m; ++i) {
      arg = K.add(arg, K.mul(t[n + i], fs[i].evaluate(T, head)));
      e += reduce(-chis.exponents[i], mm) * ((r * (a[n + i] % mm)) % mm);
    }
    s2.add(e % mm, K.absolute_trace(arg));
  });
  out.S2 = s2.value();

  out.gauss_product = CycloNumber(1);
  for (std::size_t i = 0; i < m; ++i)
    out.gauss_product *= gauss_sum(
        T, CharacterSpec{{static_cast<std::int64_t>(reduce(-chis.exponents[i], mm))}, chis.order, chis.generator});
  out.holds = out.S2 == out.gauss_product * out.S1;
  return out;
}

IntMatrix katz_matrix(int n, int m) {
  if (n < 1 || m < 0 || n + m < 2) throw DomainError("katz_matrix needs n >= 1 and n + m >= 2");
  const int d = n + m - 1;
  IntMatrix A = IntMatrix::Zero(d, d + 1);
  A.leftCols(d) = IntMatrix::Identity(d, d);
  for (int i = 0; i < d; ++i) A(i, d) = i < n - 1 ? -1 : 1;
  return A;
}

IntMatrix kloosterman_matrix(int n) {
  if (n < 1) throw DomainError("kloosterman_matrix needs n >= 1");
  IntMatrix A = IntMatrix::Zero(n, n + 1);
  A.leftCols(n) = IntMatrix::Identity(n, n);
  A.col(n).setConstant(-1);
  return A;
}

IdentityResult katz_equivalence(const FieldTower& T, int n, int m, const CharacterSpec& chi, Element x,
                                std::uint64_t budget) {
  const IntMatrix A = katz_matrix(n, m);
  const FiniteField& K = T.ext();
  const std::size_t d = static_cast<std::size_t>(n + m - 1);
  std::vector<Element> point;
  for (int i = 0; i < n - 1; ++i) point.push_back(K.one());
  for (int i = 0; i < m; ++i) point.push_back(K.neg(K.one()));
  point.push_back(x);

  IdentityResult out;
  out.lhs = hyp_sum(SumQuery{T, A, chi, point}, budget);
  Accumulator acc(T);
  for_each_torus_point(T, d, budget, [&](std::span<const Element> t, std::span<const std::uint64_t> a) {
    Element arg = K.zero(), num = x, den = K.one();
    for (std::size_t i = 0; i < d; ++i) {
      if (i + 1 < static_cast<std::size_t>(n)) {
        arg = K.add(arg, t[i]);
        den = K.mul(den, t[i]);
      } else {
        arg = K.sub(arg, t[i]);
        num = K.mul(num, t[i]);
      }
    }
    arg = K.add(arg, K.div(num, den));
    acc.add(lifted_exponent(T, chi.exponents, a), K.absolute_trace(arg));
  });
  out.rhs = acc.value();
  out.holds = out.lhs == out.rhs;
  return out;
}

CycloNumber kloosterman_sum(const FieldTower& T, const CharacterSpec& chi, Element x, std::uint64_t budget) {
  const FiniteField& K = T.ext();
  const std::size_t n = chi.dimension();
  Accumulator acc(T);
  for_each_torus_point(T, n, budget, [&](std::span<const Element> t, std::span<const std::uint64_t> a) {
    Element arg = K.zero(), prod = K.one();
    for (const Element& ti : t) {
      arg = K.add(arg, ti);
      prod = K.mul(prod, ti);
    }
    arg = K.add(arg, K.div(x, prod));
    acc.add(lifted_exponent(T, chi.exponents, a), K.absolute_trace(arg));
  });
  return acc.value();
}

IdentityResult homogeneity_check(const SumQuery& q, std::span<const Element> t, std::uint64_t budget) {
  check_query(q);
  const FiniteField& K = q.tower.ext();
  if (static_cast<Eigen::Index>(t.size()) != q.A.rows()) throw DomainError("torus point has the wrong dimension");
  std::vector<std::uint64_t> logs;
  for (const Element& ti : t) logs.push_back(K.log(ti));
  SumQuery moved = q;
  for (Eigen::Index j = 0; j < q.A.cols(); ++j)
    moved.x[static_cast<std::size_t>(j)] = K.mul(q.x[static_cast<std::size_t>(j)], monomial(K, logs, q.A, j));
  IdentityResult out;
  out.lhs = hyp_sum(moved, budget);
  const std::uint64_t e = mult_char_exponent(q.tower, q.chi, t);
  out.rhs = CycloNumber::root_of_unity(q.chi.order, -static_cast<std::int64_t>(e)) * hyp_sum(q, budget);
  out.holds = out.lhs == out.rhs;
  return out;
}

std::vector<std::int64_t> character_at(std::size_t index, std::size_t n, std::uint64_t order) {
  std::vector<std::int64_t> c(n);
  for (std::size_t i = n; i > 0; --i) {
    c[i - 1] = static_cast<std::int64_t>(index % order);
    index /= order;
  }
  return c;
}

std::vector<CycloNumber> batch_all_characters(const FieldTower& T, const IntMatrix& A, std::span<const Element> x,
                                              std::uint64_t budget) {
  const std::uint64_t m = T.base().unit_order(), p = T.base().characteristic(), L = p * m;
  const std::uint64_t r = T.norm_exponent() % m;
  const std::size_t n = static_cast<std::size_t>(A.rows());
  if (x.size() != static_cast<std::size_t>(A.cols())) throw DomainError("point dimension differs from N");
  std::size_t cells = 1;
  for (std::size_t i = 0; i < n; ++i) cells *= m;
  check_budget(static_cast<std::uint64_t>(cells), 2, budget);

  // h[b] in Z[zeta_L] as exponent counts, b = r a mod (q - 1).
  std::vector<std::vector<std::int64_t>> h(cells, std::vector<std::int64_t>(L, 0));
  scan_phase(T, A, x, budget, [&](std::span<const std::uint64_t> a, std::uint64_t s) {
    std::size_t b = 0;
    for (std::size_t i = 0; i < n; ++i) b = b * m + (r * (a[i] % m)) % m;
    ++h[b][(s * m) % L];
  });

  // DFT along each axis: out[c] = sum_b zeta_{q-1}^{c_i b_i} h[b].
  std::size_t stride = 1;
  for (std::size_t axis = n; axis > 0; --axis) {
    std::vector<std::vector<std::int64_t>> next(cells, std::vector<std::int64_t>(L, 0));
    for (std::size_t idx = 0; idx < cells; ++idx) {
      const std::size_t c_i = (idx / stride) % m;
      const std::size_t base = idx - c_i * stride;
      for (std::size_t b_i = 0; b_i < m; ++b_i) {
        const auto& src = h[base + b_i * stride];
        const std::uint64_t shift = ((c_i * b_i) % m) * p;
        auto& dst = next[idx];
        for (std::uint64_t k = 0; k < L; ++k)
          if (src[k] != 0) dst[(k + shift) % L] += src[k];
      }
    }
    h = std::move(next);
    stride *= m;
  }
  std::vector<CycloNumber> table;
  table.reserve(cells);
  for (const auto& counts : h) table.push_back(CycloNumber::from_power_counts(L, counts));
  return table;
}

NonconfluentResult nonconfluent_factorization(const SumQuery& q, std::uint64_t budget) {
  check_query(q);
  const auto c = nonconfluence_vector(q.A);
  if (!c) throw DomainError("exponent matrix is confluent");
  const std::uint64_t m = q.tower.base().unit_order();
  const FiniteField& K = q.tower.ext();
  const std::size_t n = static_cast<std::size_t>(q.A.rows());

  NonconfluentResult out;
  out.C = extend_to_unimodular(*c);
  const IntMatrix W = out.C * q.A;
  IntVector cv(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) cv(static_cast<Eigen::Index>(i)) = q.chi.exponents[i];
  const IntVector cp = out.C * cv;
  for (std::size_t i = 0; i < n; ++i)
    out.chi_prime.push_back(static_cast<std::int64_t>(reduce(to_int64(mod(cp(static_cast<Eigen::Index>(i)), Integer(m))), m)));
  if (out.chi_prime[0] == 0) throw DomainError("chi'_1 is trivial");

  out.hyp = hyp_sum(q, budget);
  out.gauss = gauss_sum(q.tower, CharacterSpec{{out.chi_prime[0]}, q.chi.order, q.chi.generator});

  const std::vector<std::int64_t> rest(out.chi_prime.begin() + 1, out.chi_prime.end());
  const std::int64_t inv1 = static_cast<std::int64_t>(reduce(-out.chi_prime[0], m));
  Accumulator acc(q.tower);
  for_each_torus_point(q.tower, n - 1, budget, [&](std::span<const Element>, std::span<const std::uint64_t> a) {
    Element G = K.zero();
    for (Eigen::Index j = 0; j < W.cols(); ++j)
      G = K.add(G, K.mul(q.x[static_cast<std::size_t>(j)], monomial(K, a, W, j, 1)));
    if (G.code == 0) return;
    const std::uint64_t logG = K.log(G);
    const std::int64_t one[] = {inv1};
    const std::uint64_t lg[] = {logG};
    acc.add((lifted_exponent(q.tower, rest, a) + lifted_exponent(q.tower, one, lg)) % m, 0);
  });
  out.reduced = acc.value();
  out.holds = out.hyp == out.gauss * out.reduced;
  return out;
}

}  // namespace gkz
