#pragma once

#include <map>
#include <optional>
#include <vector>

#include "gkz/arith/characters.hpp"
#include "gkz/lattice/instance.hpp"
#include "gkz/polynomial.hpp"

namespace gkz {

using WeightPolynomial = Polynomial<Integer>;

/// alpha and beta on intervals of one face lattice, memoized per interval.
/// The interval [lo, hi] is the face poset of a pointed cone with apex lo;
/// the faces strictly above lo form the polytope poly of that cone.
class StanleyPolynomials {
 public:
  explicit StanleyPolynomials(const FaceLattice& faces) : faces_(faces) {}

  WeightPolynomial alpha(std::size_t lo, std::size_t hi);
  /// beta of the polytope (lo, hi]; lo = nullopt means the whole of [0, hi]
  /// with a virtual empty face of dimension -1 below it.
  WeightPolynomial beta(std::optional<std::size_t> lo, std::size_t hi);

 private:
  int dim(std::optional<std::size_t> f) const { return f ? faces_[*f].dim : -1; }
  bool strictly_above(std::optional<std::size_t> lo, std::size_t f) const {
    return !lo || (f != *lo && faces_.leq(*lo, f));
  }

  const FaceLattice& faces_;
  std::map<std::pair<long, std::size_t>, WeightPolynomial> alpha_memo_, beta_memo_;
};

/// alpha of a pointed cone; alpha of a face lattice whose first face is the apex.
WeightPolynomial alpha(const RationalCone& C);
WeightPolynomial alpha(const FaceLattice& cone_faces);
/// beta of a polytope given by its nonempty faces.
WeightPolynomial beta(const FaceLattice& polytope_faces);
WeightPolynomial beta(const LatticePolytope& P);

/// (T^2 - 1)^k.
WeightPolynomial t2_minus_one_power(int k);

struct TFace {
  std::size_t face = 0;
  int dim = 0;
  int N_tau = 0;  // number of columns w_j in the face
  CharacterSpec chi_tau;  // in coordinates of `basis`
  IntMatrix basis;  // rows: saturated basis of Z^n cap span(face)
};

/// Proper faces of delta through which chi factors.
std::vector<TFace> t_set(const GkzInstance& inst, const CharacterSpec& chi);

Integer e_value(const GkzInstance& inst, const CharacterSpec& chi);
WeightPolynomial E_polynomial(const GkzInstance& inst, const CharacterSpec& chi);
/// Same, starting from the exponent matrix; handles n = 0.
WeightPolynomial E_polynomial(const IntMatrix& A, const CharacterSpec& chi);

struct SpectrumPrediction {
  Integer degree;  // n! vol(Delta)
  int sign = 1;  // (-1)^N
  std::map<int, Integer> weights;  // v = w - N -> |e_w|
  bool signs_consistent = true;  // every nonzero e_w has sign (-1)^N
};

/// ConsistencyError unless sum |e_w| equals vol.
SpectrumPrediction expected_spectrum(const WeightPolynomial& E, Eigen::Index n, Eigen::Index N, const Integer& vol);

}  // namespace gkz
