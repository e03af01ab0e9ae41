#pragma once

#include <optional>
#include <vector>

#include "gkz/numeric.hpp"

namespace gkz {

/// floor(a / b) for b != 0.
Integer floor_div(const Integer& a, const Integer& b);

/// Rank over Q.
Eigen::Index rank(const IntMatrix& M);

/// Determinant of a square matrix (fraction-free elimination).
Integer determinant(const IntMatrix& M);

/// Divides out the content; the zero vector is returned unchanged.
IntVector primitive(IntVector v);

/// U * M * V = D with U, V unimodular, D diagonal, d_1 | d_2 | ... and
/// d_i >= 0. V_inverse is tracked alongside V.
struct SmithForm {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  IntMatrix V_inverse;
  Eigen::Index rank = 0;

  std::vector<Integer> divisors() const;
};

SmithForm smith_normal_form(const IntMatrix& M);

/// Row-style Hermite normal form: nonzero rows only, upper echelon, positive
/// pivots, entries above each pivot reduced into [0, pivot).
IntMatrix hermite_normal_form(const IntMatrix& M);

/// Z-basis (rows, in Hermite form) of Z^n intersected with the Q-span of the
/// rows of M.
IntMatrix saturate(const IntMatrix& rows);

/// True iff the rows are independent and span a saturated sublattice.
bool is_saturated(const IntMatrix& basis);

/// Integer basis (columns) of {v in Z^n : M v = 0}.
IntMatrix kernel_basis(const IntMatrix& M);

/// Coordinates y (columns) with basis^T y = v for each column v of
/// `vectors`. The basis rows must be saturated; DomainError if some vector
/// is not in the lattice.
IntMatrix lattice_coordinates(const IntMatrix& basis, const IntMatrix& vectors);

/// Quotient map Z^n -> Z^n / L for a saturated sublattice L (rows of
/// `basis`): an (n - k) x n integer matrix whose kernel is exactly L.
IntMatrix quotient_map(const IntMatrix& basis);

/// Unimodular n x n matrix with first row c; requires gcd(c) = 1. The result
/// has determinant +1 (n >= 2) and rows 2..n reduced against the first
/// nonzero entry of c.
IntMatrix extend_to_unimodular(const IntVector& c);

/// Some c in Z^n with sum_i c_i w_ij = 1 for all columns j of A, if one
/// exists.
std::optional<IntVector> nonconfluence_vector(const IntMatrix& A);

}  // namespace gkz
