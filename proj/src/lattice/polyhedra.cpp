#include "gkz/lattice/polyhedra.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "gkz/error.hpp"
#include "gkz/lattice/integer_matrix.hpp"

namespace gkz {

namespace {

bool subset(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

IntMatrix select_columns(const IntMatrix& G, const std::vector<int>& cols) {
  IntMatrix M(G.rows(), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t k = 0; k < cols.size(); ++k) M.col(static_cast<Eigen::Index>(k)) = G.col(cols[k]);
  return M;
}

int set_rank(const IntMatrix& G, const std::vector<int>& cols) {
  if (cols.empty()) return 0;
  return static_cast<int>(rank(select_columns(G, cols)));
}

struct Enumeration {
  std::vector<IntVector> normals;
  std::vector<std::vector<int>> facet_sets;
  std::vector<Face> faces;
};

// Facets from (d-1)-subsets of generators spanning a hyperplane of span(G);
// faces are intersections of facets together with the whole cone.
Enumeration enumerate_cone(const IntMatrix& G) {
  const Eigen::Index n = G.rows();
  const int N = static_cast<int>(G.cols());
  Enumeration out;

  std::vector<int> all(N), nonzero, basis_cols;
  for (int j = 0; j < N; ++j) {
    all[j] = j;
    if (!G.col(j).isZero()) nonzero.push_back(j);
  }
  Eigen::Index d = 0;
  for (int j : nonzero) {
    basis_cols.push_back(j);
    const Eigen::Index r = rank(select_columns(G, basis_cols));
    if (r > d)
      d = r;
    else
      basis_cols.pop_back();
  }
  const IntMatrix B = select_columns(G, basis_cols);  // n x d

  if (d >= 1) {
    const int k = static_cast<int>(d) - 1;
    const int m = static_cast<int>(nonzero.size());
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      std::vector<int> S(k);
      for (int i = 0; i < k; ++i) S[i] = nonzero[idx[i]];
      bool known = false;
      for (const auto& Z : out.facet_sets)
        if (subset(S, Z)) {
          known = true;
          break;
        }
      if (!known) {
        const IntMatrix M = select_columns(G, S).transpose() * B;
        const IntMatrix K = kernel_basis(M);
        if (K.cols() == 1) {
          IntVector u = primitive(B * K.col(0));
          const IntVector s = G.transpose() * u;
          bool pos = false, neg = false;
          for (int j = 0; j < N; ++j) {
            if (s(j) > 0) pos = true;
            if (s(j) < 0) neg = true;
          }
          if (!(pos && neg)) {
            if (!pos) u = -u;
            std::vector<int> Z;
            for (int j = 0; j < N; ++j)
              if (s(j) == 0) Z.push_back(j);
            out.normals.push_back(u);
            out.facet_sets.push_back(Z);
          }
        }
      }
      // next combination
      int i = k - 1;
      while (i >= 0 && idx[i] == m - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  (void)n;

  std::set<std::vector<int>> seen{all};
  std::vector<std::vector<int>> work{all};
  for (std::size_t w = 0; w < work.size(); ++w) {
    for (const auto& Z : out.facet_sets) {
      std::vector<int> T;
      std::set_intersection(work[w].begin(), work[w].end(), Z.begin(), Z.end(), std::back_inserter(T));
      if (seen.insert(T).second) work.push_back(T);
    }
  }
  for (const auto& S : seen) out.faces.push_back(Face{set_rank(G, S), S, {}});
  return out;
}

IntMatrix unique_primitive_columns(const std::vector<IntVector>& vs, Eigen::Index n) {
  std::set<std::vector<Integer>> seen;
  std::vector<IntVector> kept;
  for (const auto& v : vs) {
    if (v.isZero()) continue;
    const IntVector p = primitive(v);
    std::vector<Integer> key(p.data(), p.data() + p.size());
    if (seen.insert(key).second) kept.push_back(p);
  }
  IntMatrix M(n, static_cast<Eigen::Index>(kept.size()));
  for (std::size_t j = 0; j < kept.size(); ++j) M.col(static_cast<Eigen::Index>(j)) = kept[j];
  return M;
}

void check_face(const FaceLattice& L, std::size_t face) {
  if (face >= L.size()) throw DomainError("not a face");
}

}  // namespace

FaceLattice::FaceLattice(std::vector<Face> faces) : faces_(std::move(faces)) {
  if (faces_.empty()) throw DomainError("empty face lattice");
  std::sort(faces_.begin(), faces_.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.generators < b.generators;
  });
  for (std::size_t i = 0; i + 1 < faces_.size(); ++i)
    if (!subset(faces_[i].generators, faces_.back().generators))
      throw DomainError("face lattice has no unique maximum");
  for (auto& f : faces_) f.parents.clear();
  for (std::size_t i = 0; i < faces_.size(); ++i)
    for (std::size_t j = 0; j < faces_.size(); ++j)
      if (faces_[j].dim == faces_[i].dim + 1 && subset(faces_[i].generators, faces_[j].generators))
        faces_[i].parents.push_back(j);
}

bool FaceLattice::leq(std::size_t a, std::size_t b) const {
  return faces_[a].dim <= faces_[b].dim && subset(faces_[a].generators, faces_[b].generators);
}

std::optional<std::size_t> FaceLattice::find(const std::vector<int>& generators) const {
  std::vector<int> g = generators;
  std::sort(g.begin(), g.end());
  for (std::size_t i = 0; i < faces_.size(); ++i)
    if (faces_[i].generators == g) return i;
  return std::nullopt;
}

std::vector<std::size_t> FaceLattice::of_dimension(int d) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < faces_.size(); ++i)
    if (faces_[i].dim == d) out.push_back(i);
  return out;
}

std::vector<std::size_t> FaceLattice::f_vector() const {
  std::vector<std::size_t> f(faces_.back().dim - faces_.front().dim + 1, 0);
  for (const auto& face : faces_) ++f[face.dim - faces_.front().dim];
  return f;
}

FaceLattice FaceLattice::interval(std::size_t lo, std::size_t hi, bool drop_bottom) const {
  if (!leq(lo, hi)) throw DomainError("interval bounds are not comparable");
  const int shift = drop_bottom ? faces_[lo].dim + 1 : 0;
  std::vector<Face> out;
  for (std::size_t i = 0; i < faces_.size(); ++i) {
    if (drop_bottom && i == lo) continue;
    if (leq(lo, i) && leq(i, hi)) out.push_back(Face{faces_[i].dim - shift, faces_[i].generators, {}});
  }
  return FaceLattice(std::move(out));
}

bool FaceLattice::isomorphic(const FaceLattice& other) const {
  if (size() != other.size() || f_vector() != other.f_vector() ||
      faces_.front().dim != other.faces_.front().dim)
    return false;
  const std::size_t n = size();
  std::vector<long> map(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> extend = [&](std::size_t i) -> bool {
    if (i == n) return true;
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j] || other.faces_[j].dim != faces_[i].dim) continue;
      if (other.faces_[j].parents.size() != faces_[i].parents.size()) continue;
      bool ok = true;
      // Faces are processed in increasing dimension, so children are mapped.
      for (std::size_t c = 0; c < i && ok; ++c) {
        const bool covers = std::find(faces_[c].parents.begin(), faces_[c].parents.end(), i) != faces_[c].parents.end();
        const auto& op = other.faces_[map[c]].parents;
        const bool covers_other = std::find(op.begin(), op.end(), j) != op.end();
        ok = covers == covers_other;
      }
      if (!ok) continue;
      map[i] = static_cast<long>(j);
      used[j] = true;
      if (extend(i + 1)) return true;
      used[j] = false;
    }
    map[i] = -1;
    return false;
  };
  return extend(0);
}

bool RationalCone::contains(const IntVector& v) const {
  IntMatrix M(generators.rows(), generators.cols() + 1);
  M << generators, v;
  if (rank(M) != rank(generators)) return false;
  for (Eigen::Index i = 0; i < facet_normals.rows(); ++i)
    if (facet_normals.row(i).dot(v) < 0) return false;
  return true;
}

RationalCone positive_hull(const IntMatrix& generators) {
  Enumeration E = enumerate_cone(generators);
  RationalCone C;
  C.generators = generators;
  C.facet_normals = IntMatrix(static_cast<Eigen::Index>(E.normals.size()), generators.rows());
  for (std::size_t i = 0; i < E.normals.size(); ++i)
    C.facet_normals.row(static_cast<Eigen::Index>(i)) = E.normals[i].transpose();
  C.facet_generators = std::move(E.facet_sets);
  C.faces = FaceLattice(std::move(E.faces));
  return C;
}

LatticePolytope hull(const IntMatrix& points) {
  if (points.cols() == 0) throw DomainError("hull of an empty point set");
  const Eigen::Index n = points.rows(), k = points.cols();
  IntMatrix H(n + 1, k);
  H.row(0).setOnes();
  H.bottomRows(n) = points;
  Enumeration E = enumerate_cone(H);

  LatticePolytope P;
  P.points = points;
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < E.normals.size(); ++i) {
    if (E.facet_sets[i].empty()) continue;
    rows.push_back(E.normals[i]);
    P.facet_points.push_back(E.facet_sets[i]);
  }
  P.facets = IntMatrix(static_cast<Eigen::Index>(rows.size()), n + 1);
  for (std::size_t i = 0; i < rows.size(); ++i) P.facets.row(static_cast<Eigen::Index>(i)) = rows[i].transpose();

  std::vector<Face> faces;
  for (auto& f : E.faces) {
    if (f.generators.empty()) continue;
    faces.push_back(Face{f.dim - 1, std::move(f.generators), {}});
  }
  P.faces = FaceLattice(std::move(faces));
  for (std::size_t i : P.faces.of_dimension(0)) P.vertices.push_back(P.faces[i].generators.front());
  std::sort(P.vertices.begin(), P.vertices.end());
  return P;
}

Sublattice span_lattice(const IntMatrix& vectors) {
  Sublattice L;
  L.ambient = vectors.rows();
  L.basis = saturate(IntMatrix(vectors.transpose()));
  return L;
}

Sublattice span_lattice(const RationalCone& cone, std::size_t face) {
  check_face(cone.faces, face);
  return span_lattice(select_columns(cone.generators, cone.faces[face].generators));
}

RationalCone cone_of_face(const LatticePolytope& P, std::size_t face) {
  check_face(P.faces, face);
  const auto& gens = P.faces[face].generators;
  const IntVector v = P.points.col(gens.front());
  std::vector<IntVector> diffs;
  for (int j : P.vertices) diffs.push_back(P.points.col(j) - v);
  for (int i : gens)
    if (std::binary_search(P.vertices.begin(), P.vertices.end(), i)) diffs.push_back(v - P.points.col(i));
  return positive_hull(unique_primitive_columns(diffs, P.ambient_dim()));
}

RationalCone cone_of_face(const RationalCone& C, std::size_t face) {
  check_face(C.faces, face);
  std::vector<IntVector> gens;
  for (Eigen::Index j = 0; j < C.generators.cols(); ++j) gens.push_back(C.generators.col(j));
  for (int j : C.faces[face].generators) gens.push_back(-C.generators.col(j));
  return positive_hull(unique_primitive_columns(gens, C.ambient_dim()));
}

RationalCone quotient_cone(const RationalCone& C, std::size_t face) {
  const Sublattice L = span_lattice(C, face);
  const IntMatrix Q = quotient_map(L.basis);
  const IntMatrix image = Q * C.generators;
  std::vector<IntVector> gens;
  for (Eigen::Index j = 0; j < image.cols(); ++j) gens.push_back(image.col(j));
  return positive_hull(unique_primitive_columns(gens, Q.rows()));
}

FaceLattice poly_of_cone(const RationalCone& C) {
  if (!C.pointed()) throw DomainError("cone is not pointed");
  std::vector<Face> faces;
  for (std::size_t i = 1; i < C.faces.size(); ++i)
    faces.push_back(Face{C.faces[i].dim - 1, C.faces[i].generators, {}});
  return FaceLattice(std::move(faces));
}

Integer normalized_volume(const IntMatrix& points) {
  if (points.cols() == 0) throw DomainError("volume of an empty point set");
  IntMatrix V = points;
  for (Eigen::Index j = 0; j < V.cols(); ++j) V.col(j) -= points.col(0);
  const Eigen::Index d = rank(V);
  if (d == 0) return 1;
  const IntMatrix basis = saturate(IntMatrix(V.transpose()));
  const IntMatrix Y = lattice_coordinates(basis, V);  // d x k, column 0 is the origin
  if (d == 1) {
    Integer lo = Y(0, 0), hi = Y(0, 0);
    for (Eigen::Index j = 1; j < Y.cols(); ++j) {
      lo = std::min(lo, Y(0, j));
      hi = std::max(hi, Y(0, j));
    }
    return hi - lo;
  }
  // Pull from the origin: sum over facets missing it of height times volume.
  const LatticePolytope P = hull(Y);
  Integer total = 0;
  for (Eigen::Index f = 0; f < P.facets.rows(); ++f) {
    const auto& pts = P.facet_points[static_cast<std::size_t>(f)];
    if (std::binary_search(pts.begin(), pts.end(), 0)) continue;
    Integer g = 0;
    for (Eigen::Index i = 1; i < P.facets.cols(); ++i) g = gcd(g, P.facets(f, i));
    const Integer height = P.facets(f, 0) / g;
    total += height * normalized_volume(select_columns(Y, pts));
  }
  return total;
}

Integer normalized_volume(const LatticePolytope& P) { return normalized_volume(P.points); }

}  // namespace gkz
