#include "gkz/lattice/integer_matrix.hpp"

#include "gkz/error.hpp"

namespace gkz {

Integer floor_div(const Integer& a, const Integer& b) {
  if (b == 0) throw DomainError("division by zero");
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

Eigen::Index rank(const IntMatrix& M) {
  IntMatrix A = M;
  const Eigen::Index rows = A.rows(), cols = A.cols();
  Eigen::Index r = 0;
  Integer prev = 1;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = r; i < rows; ++i)
      if (A(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    A.row(r).swap(A.row(piv));
    for (Eigen::Index i = r + 1; i < rows; ++i) {
      for (Eigen::Index j = c + 1; j < cols; ++j)
        A(i, j) = (A(r, c) * A(i, j) - A(i, c) * A(r, j)) / prev;
      A(i, c) = 0;
    }
    prev = A(r, c);
    ++r;
  }
  return r;
}

Integer determinant(const IntMatrix& M) {
  if (M.rows() != M.cols()) throw DomainError("determinant of a non-square matrix");
  const Eigen::Index n = M.rows();
  if (n == 0) return 1;
  IntMatrix A = M;
  Integer prev = 1;
  int sign = 1;
  for (Eigen::Index k = 0; k < n - 1; ++k) {
    if (A(k, k) == 0) {
      Eigen::Index piv = -1;
      for (Eigen::Index i = k + 1; i < n; ++i)
        if (A(i, k) != 0) {
          piv = i;
          break;
        }
      if (piv < 0) return 0;
      A.row(k).swap(A.row(piv));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j)
        A(i, j) = (A(k, k) * A(i, j) - A(i, k) * A(k, j)) / prev;
    prev = A(k, k);
  }
  return sign * A(n - 1, n - 1);
}

IntVector primitive(IntVector v) {
  Integer g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) g = gcd(g, v(i));
  if (g > 1)
    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) /= g;
  return v;
}

std::vector<Integer> SmithForm::divisors() const {
  std::vector<Integer> d;
  for (Eigen::Index i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
  return d;
}

SmithForm smith_normal_form(const IntMatrix& M) {
  const Eigen::Index m = M.rows(), n = M.cols();
  SmithForm S;
  S.D = M;
  S.U = IntMatrix::Identity(m, m);
  S.V = IntMatrix::Identity(n, n);
  S.V_inverse = IntMatrix::Identity(n, n);
  IntMatrix& A = S.D;

  auto swap_rows = [&](Eigen::Index a, Eigen::Index b) {
    if (a == b) return;
    A.row(a).swap(A.row(b));
    S.U.row(a).swap(S.U.row(b));
  };
  auto swap_cols = [&](Eigen::Index a, Eigen::Index b) {
    if (a == b) return;
    A.col(a).swap(A.col(b));
    S.V.col(a).swap(S.V.col(b));
    S.V_inverse.row(a).swap(S.V_inverse.row(b));
  };
  // row i -= q row t
  auto row_op = [&](Eigen::Index i, Eigen::Index t, const Integer& q) {
    A.row(i) -= q * A.row(t);
    S.U.row(i) -= q * S.U.row(t);
  };
  // col j -= q col t
  auto col_op = [&](Eigen::Index j, Eigen::Index t, const Integer& q) {
    A.col(j) -= q * A.col(t);
    S.V.col(j) -= q * S.V.col(t);
    S.V_inverse.row(t) += q * S.V_inverse.row(j);
  };

  const Eigen::Index lim = std::min(m, n);
  Eigen::Index t = 0;
  for (; t < lim; ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    Eigen::Index pi = -1, pj = -1;
    for (Eigen::Index i = t; i < m; ++i)
      for (Eigen::Index j = t; j < n; ++j)
        if (A(i, j) != 0 && (pi < 0 || mp::abs(A(i, j)) < mp::abs(A(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    swap_rows(t, pi);
    swap_cols(t, pj);

    while (true) {
      bool clean = true;
      for (Eigen::Index i = t + 1; i < m; ++i) {
        if (A(i, t) == 0) continue;
        row_op(i, t, floor_div(A(i, t), A(t, t)));
        if (A(i, t) != 0) clean = false;
      }
      for (Eigen::Index j = t + 1; j < n; ++j) {
        if (A(t, j) == 0) continue;
        col_op(j, t, floor_div(A(t, j), A(t, t)));
        if (A(t, j) != 0) clean = false;
      }
      if (!clean) {
        // Move the smallest remaining entry of row/column t to the pivot.
        Eigen::Index bi = t, bj = t;
        for (Eigen::Index i = t + 1; i < m; ++i)
          if (A(i, t) != 0 && mp::abs(A(i, t)) < mp::abs(A(bi, bj))) {
            bi = i;
            bj = t;
          }
        for (Eigen::Index j = t + 1; j < n; ++j)
          if (A(t, j) != 0 && mp::abs(A(t, j)) < mp::abs(A(bi, bj))) {
            bi = t;
            bj = j;
          }
        swap_rows(t, bi);
        swap_cols(t, bj);
        continue;
      }
      // Divisibility of the trailing block by the pivot.
      bool divisible = true;
      for (Eigen::Index i = t + 1; i < m && divisible; ++i)
        for (Eigen::Index j = t + 1; j < n; ++j)
          if (A(i, j) % A(t, t) != 0) {
            A.row(t) += A.row(i);
            S.U.row(t) += S.U.row(i);
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (A(t, t) < 0) {
      A.row(t) *= Integer(-1);
      S.U.row(t) *= Integer(-1);
    }
  }
  S.rank = t;
  return S;
}

IntMatrix hermite_normal_form(const IntMatrix& M) {
  IntMatrix H = M;
  const Eigen::Index rows = H.rows(), cols = H.cols();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    while (true) {
      Eigen::Index piv = -1;
      for (Eigen::Index i = r; i < rows; ++i)
        if (H(i, c) != 0 && (piv < 0 || mp::abs(H(i, c)) < mp::abs(H(piv, c)))) piv = i;
      if (piv < 0) break;
      H.row(r).swap(H.row(piv));
      bool done = true;
      for (Eigen::Index i = r + 1; i < rows; ++i) {
        if (H(i, c) == 0) continue;
        H.row(i) -= floor_div(H(i, c), H(r, c)) * H.row(r);
        if (H(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (H(r, c) == 0) continue;
    if (H(r, c) < 0) H.row(r) *= Integer(-1);
    for (Eigen::Index i = 0; i < r; ++i) H.row(i) -= floor_div(H(i, c), H(r, c)) * H.row(r);
    ++r;
  }
  return H.topRows(r);
}

IntMatrix saturate(const IntMatrix& rows) {
  if (rows.rows() == 0) return IntMatrix(0, rows.cols());
  const SmithForm S = smith_normal_form(rows);
  return hermite_normal_form(S.V_inverse.topRows(S.rank));
}

bool is_saturated(const IntMatrix& basis) {
  if (basis.rows() == 0) return true;
  const SmithForm S = smith_normal_form(basis);
  if (S.rank != basis.rows()) return false;
  for (Eigen::Index i = 0; i < S.rank; ++i)
    if (S.D(i, i) != 1) return false;
  return true;
}

IntMatrix kernel_basis(const IntMatrix& M) {
  const SmithForm S = smith_normal_form(M);
  return S.V.rightCols(M.cols() - S.rank);
}

IntMatrix lattice_coordinates(const IntMatrix& basis, const IntMatrix& vectors) {
  const Eigen::Index k = basis.rows(), n = basis.cols();
  if (vectors.rows() != n) throw DomainError("dimension mismatch in lattice_coordinates");
  IntMatrix Y(k, vectors.cols());
  if (k == 0) {
    for (Eigen::Index j = 0; j < vectors.cols(); ++j)
      if (!vectors.col(j).isZero()) throw DomainError("vector not in the sublattice");
    return Y;
  }
  const SmithForm S = smith_normal_form(basis);
  if (!is_saturated(basis)) throw DomainError("basis is not saturated");
  const IntMatrix Z = S.V.transpose() * vectors;
  for (Eigen::Index j = 0; j < vectors.cols(); ++j)
    for (Eigen::Index i = k; i < n; ++i)
      if (Z(i, j) != 0) throw DomainError("vector not in the span of the sublattice");
  Y = S.U.transpose() * Z.topRows(k);
  if (IntMatrix(basis.transpose() * Y) != vectors)
    throw std::logic_error("lattice coordinates failed to reproduce the input");
  return Y;
}

IntMatrix quotient_map(const IntMatrix& basis) {
  const Eigen::Index k = basis.rows(), n = basis.cols();
  if (k == 0) return IntMatrix::Identity(n, n);
  if (!is_saturated(basis)) throw DomainError("basis is not saturated");
  const SmithForm S = smith_normal_form(basis);
  return S.V.transpose().bottomRows(n - k);
}

IntMatrix extend_to_unimodular(const IntVector& c) {
  const Eigen::Index n = c.size();
  if (n == 0) throw DomainError("empty vector");
  Integer g = 0;
  for (Eigen::Index i = 0; i < n; ++i) g = gcd(g, c(i));
  if (g != 1) throw DomainError("vector is not primitive");

  const SmithForm S = smith_normal_form(IntMatrix(c.transpose()));
  IntMatrix C = S.V_inverse;
  C.row(0) *= S.U(0, 0);  // U = (+-1) is its own inverse
  if (C.row(0) != c.transpose()) throw std::logic_error("unimodular extension lost the first row");
  if (n >= 2 && determinant(C) < 0) C.row(n - 1) *= Integer(-1);

  Eigen::Index piv = 0;
  while (c(piv) == 0) ++piv;
  for (Eigen::Index i = 1; i < n; ++i) C.row(i) -= floor_div(C(i, piv), c(piv)) * C.row(0);
  return C;
}

std::optional<IntVector> nonconfluence_vector(const IntMatrix& A) {
  const Eigen::Index n = A.rows(), N = A.cols();
  const IntMatrix At = A.transpose();
  const SmithForm S = smith_normal_form(At);
  const IntVector rhs = S.U * IntVector::Ones(N);
  IntVector z = IntVector::Zero(n);
  for (Eigen::Index i = 0; i < N; ++i) {
    if (i < S.rank) {
      if (rhs(i) % S.D(i, i) != 0) return std::nullopt;
      z(i) = rhs(i) / S.D(i, i);
    } else if (rhs(i) != 0) {
      return std::nullopt;
    }
  }
  IntVector c = S.V * z;
  if (IntVector(At * c) != IntVector::Ones(N)) throw std::logic_error("nonconfluence solve failed");
  return c;
}

}  // namespace gkz
