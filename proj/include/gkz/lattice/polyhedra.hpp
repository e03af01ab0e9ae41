#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gkz/numeric.hpp"

namespace gkz {

struct Face {
  int dim = 0;
  std::vector<int> generators;  // sorted indices into the owner's generator list
  std::vector<std::size_t> parents;  // faces covering this one
};

/// Faces ordered by dimension, then generator set. A face is identified by
/// the set of generators it contains; the last face is the unique maximum.
class FaceLattice {
 public:
  FaceLattice() = default;
  FaceLattice(std::vector<Face> faces);

  std::size_t size() const { return faces_.size(); }
  const Face& operator[](std::size_t i) const { return faces_[i]; }
  const std::vector<Face>& faces() const { return faces_; }
  std::size_t top() const { return faces_.size() - 1; }
  int dimension() const { return faces_.back().dim; }

  bool leq(std::size_t a, std::size_t b) const;
  std::optional<std::size_t> find(const std::vector<int>& generators) const;
  std::vector<std::size_t> of_dimension(int d) const;
  /// Number of faces per dimension, from the lowest dimension present.
  std::vector<std::size_t> f_vector() const;

  /// Faces between lo and hi inclusive, with dimensions shifted by -dim(lo) - 1
  /// when `drop_bottom` holds (then lo itself is removed).
  FaceLattice interval(std::size_t lo, std::size_t hi, bool drop_bottom = false) const;

  /// Same number of faces per dimension and same cover relation up to
  /// relabelling (exhaustive search; desk-scale posets only).
  bool isomorphic(const FaceLattice& other) const;

 private:
  std::vector<Face> faces_;
};

/// Cone generated by the columns of `generators`.
struct RationalCone {
  IntMatrix generators;  // n x N
  IntMatrix facet_normals;  // rows, primitive, nonnegative on the cone
  std::vector<std::vector<int>> facet_generators;  // aligned with facet_normals
  FaceLattice faces;

  Eigen::Index ambient_dim() const { return generators.rows(); }
  int dim() const { return faces.dimension(); }
  bool pointed() const { return faces[0].dim == 0; }
  bool contains(const IntVector& v) const;
};

/// Convex hull of the columns of `points`; face generators index `points`.
struct LatticePolytope {
  IntMatrix points;  // n x k
  IntMatrix facets;  // rows (b, u): b + u.x >= 0, tight on the facet
  std::vector<std::vector<int>> facet_points;
  std::vector<int> vertices;  // point indices, one per extreme point
  FaceLattice faces;  // nonempty faces only

  Eigen::Index ambient_dim() const { return points.rows(); }
  int dim() const { return faces.dimension(); }
};

struct Sublattice {
  IntMatrix basis;  // rows
  Eigen::Index ambient = 0;
  Eigen::Index rank() const { return basis.rows(); }
};

LatticePolytope hull(const IntMatrix& points);
RationalCone positive_hull(const IntMatrix& generators);

Sublattice span_lattice(const IntMatrix& vectors);
Sublattice span_lattice(const RationalCone& cone, std::size_t face);

/// Cone generated by u' - u, u' in P, u in the face.
RationalCone cone_of_face(const LatticePolytope& P, std::size_t face);
/// Cone C + span(face).
RationalCone cone_of_face(const RationalCone& C, std::size_t face);

/// Image of C in Z^n / (Z^n cap span face), in coordinates of
/// quotient_map(span_lattice(C, face).basis).
RationalCone quotient_cone(const RationalCone& C, std::size_t face);

/// Face poset of a hyperplane section of a pointed cone.
FaceLattice poly_of_cone(const RationalCone& C);

/// dim! times the volume of P relative to Z^n cap span(P - P).
Integer normalized_volume(const LatticePolytope& P);
Integer normalized_volume(const IntMatrix& points);

}  // namespace gkz
