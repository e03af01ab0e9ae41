#pragma once

#include "gkz/lattice/polyhedra.hpp"

namespace gkz {

/// n x N integer matrix of rank n; column j is the exponent vector w_j.
class ExponentMatrix {
 public:
  explicit ExponentMatrix(IntMatrix A);

  Eigen::Index n() const { return A_.rows(); }
  Eigen::Index N() const { return A_.cols(); }
  const IntMatrix& matrix() const { return A_; }
  IntVector column(Eigen::Index j) const { return A_.col(j); }

  /// True iff the columns generate Z^n as a group.
  bool generates_lattice() const;

 private:
  IntMatrix A_;
};

/// Exponent matrix with the derived polytope Delta = hull{0, w_j} and cone
/// delta = cone{w_j}. Delta's point 0 is the origin; point j + 1 is w_j.
struct GkzInstance {
  explicit GkzInstance(const IntMatrix& A);

  ExponentMatrix A;
  LatticePolytope Delta;
  RationalCone delta;
  Integer volume;  // n! vol(Delta)
};

}  // namespace gkz
