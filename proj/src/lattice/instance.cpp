#include "gkz/lattice/instance.hpp"

#include "gkz/error.hpp"
#include "gkz/lattice/integer_matrix.hpp"

namespace gkz {

ExponentMatrix::ExponentMatrix(IntMatrix A) : A_(std::move(A)) {
  if (rank(A_) != A_.rows()) throw DomainError("exponent matrix must have rank n");
}

bool ExponentMatrix::generates_lattice() const {
  if (n() == 0) return true;
  const SmithForm S = smith_normal_form(A_);
  for (Eigen::Index i = 0; i < n(); ++i)
    if (S.D(i, i) != 1) return false;
  return true;
}

namespace {
IntMatrix with_origin(const IntMatrix& A) {
  IntMatrix P(A.rows(), A.cols() + 1);
  P.col(0).setZero();
  P.rightCols(A.cols()) = A;
  return P;
}
}  // namespace

GkzInstance::GkzInstance(const IntMatrix& M)
    : A(M), Delta(hull(with_origin(M))), delta(positive_hull(M)), volume(normalized_volume(Delta)) {}

}  // namespace gkz
