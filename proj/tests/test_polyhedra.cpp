#include "doctest.h"

#include <set>

#include "gkz/error.hpp"
#include "gkz/lattice/instance.hpp"
#include "gkz/lattice/integer_matrix.hpp"

using namespace gkz;

namespace {

const IntMatrix kSquare = int_matrix({{0, 1, 0, 1}, {0, 0, 1, 1}});
const IntMatrix kConeOverSquare = int_matrix({{0, 1, 0, 1}, {0, 0, 1, 1}, {1, 1, 1, 1}});

std::size_t face_with(const FaceLattice& L, std::vector<int> gens) {
  const auto f = L.find(gens);
  REQUIRE(f.has_value());
  return *f;
}

// Faces of the dual cone: tau -> set of facet normals vanishing on tau.
void check_duality(const RationalCone& C) {
  const IntMatrix dual_gens = C.facet_normals.transpose();
  const RationalCone D = positive_hull(dual_gens);
  REQUIRE(D.faces.size() == C.faces.size());
  std::set<std::vector<int>> images;
  for (std::size_t i = 0; i < C.faces.size(); ++i) {
    std::vector<int> perp;
    for (Eigen::Index r = 0; r < C.facet_normals.rows(); ++r) {
      bool vanishes = true;
      for (int g : C.faces[i].generators)
        if (C.facet_normals.row(r).dot(C.generators.col(g)) != 0) vanishes = false;
      if (vanishes) perp.push_back(static_cast<int>(r));
    }
    const auto j = D.faces.find(perp);
    REQUIRE(j.has_value());
    CHECK(D.faces[*j].dim == C.dim() - C.faces[i].dim);
    images.insert(perp);
  }
  CHECK(images.size() == C.faces.size());
  for (std::size_t a = 0; a < C.faces.size(); ++a)
    for (std::size_t b = 0; b < C.faces.size(); ++b) {
      if (!C.faces.leq(a, b)) continue;
      std::vector<int> pa, pb;
      for (Eigen::Index r = 0; r < C.facet_normals.rows(); ++r) {
        auto vanish = [&](std::size_t f) {
          for (int g : C.faces[f].generators)
            if (C.facet_normals.row(r).dot(C.generators.col(g)) != 0) return false;
          return true;
        };
        if (vanish(a)) pa.push_back(static_cast<int>(r));
        if (vanish(b)) pb.push_back(static_cast<int>(r));
      }
      CHECK(std::includes(pa.begin(), pa.end(), pb.begin(), pb.end()));
    }
}

}  // namespace

TEST_CASE("hull examples") {
  const LatticePolytope seg = hull(int_matrix({{0, 1, -1}}));
  CHECK(seg.dim() == 1);
  CHECK(seg.vertices == std::vector<int>{1, 2});
  CHECK(seg.faces.f_vector() == std::vector<std::size_t>{2, 1});

  const LatticePolytope sq = hull(kSquare);
  CHECK(sq.dim() == 2);
  CHECK(sq.vertices.size() == 4);
  CHECK(sq.faces.f_vector() == std::vector<std::size_t>{4, 4, 1});
  CHECK(sq.facets.rows() == 4);
  for (Eigen::Index f = 0; f < sq.facets.rows(); ++f)
    for (Eigen::Index j = 0; j < kSquare.cols(); ++j)
      CHECK(sq.facets(f, 0) + sq.facets.row(f).tail(2).dot(kSquare.col(j)) >= 0);

  const LatticePolytope pt = hull(int_matrix({{3}, {-2}}));
  CHECK(pt.dim() == 0);
  CHECK(pt.faces.size() == 1);
  CHECK(pt.facets.rows() == 0);

  // Interior and repeated points are not vertices.
  const LatticePolytope tri = hull(int_matrix({{0, 2, 0, 1, 2}, {0, 0, 2, 0, 0}}));
  CHECK(tri.vertices == std::vector<int>{0, 1, 2});
  CHECK(tri.faces.f_vector() == std::vector<std::size_t>{3, 3, 1});
}

TEST_CASE("positive_hull examples") {
  const RationalCone line = positive_hull(int_matrix({{1, -1}}));
  CHECK(line.faces.size() == 1);
  CHECK(line.dim() == 1);
  CHECK_FALSE(line.pointed());

  const RationalCone ray = positive_hull(int_matrix({{1}}));
  CHECK(ray.faces.size() == 2);
  CHECK(ray.pointed());
  CHECK(ray.faces[0].generators.empty());

  const RationalCone quadrant = positive_hull(IntMatrix::Identity(2, 2));
  CHECK(quadrant.faces.f_vector() == std::vector<std::size_t>{1, 2, 1});

  const RationalCone halfplane = positive_hull(int_matrix({{1, -1, 0}, {0, 0, 1}}));
  CHECK(halfplane.faces.size() == 2);
  CHECK(halfplane.faces[0].dim == 1);

  CHECK(quadrant.contains(int_vector({3, 0})));
  CHECK_FALSE(quadrant.contains(int_vector({-1, 2})));
}

TEST_CASE("face lattice structure") {
  const RationalCone C = positive_hull(kConeOverSquare);
  CHECK(C.faces.f_vector() == std::vector<std::size_t>{1, 4, 4, 1});
  for (std::size_t i = 0; i < C.faces.size(); ++i) {
    for (std::size_t p : C.faces[i].parents) CHECK(C.faces[p].dim == C.faces[i].dim + 1);
    CHECK(C.faces.leq(i, C.faces.top()));
    // closed under intersection
    for (std::size_t j = 0; j < C.faces.size(); ++j) {
      std::vector<int> meet;
      std::set_intersection(C.faces[i].generators.begin(), C.faces[i].generators.end(),
                            C.faces[j].generators.begin(), C.faces[j].generators.end(),
                            std::back_inserter(meet));
      CHECK(C.faces.find(meet).has_value());
    }
  }
  // Every proper face lies in a facet.
  for (std::size_t i = 0; i + 1 < C.faces.size(); ++i) {
    bool in_facet = false;
    for (std::size_t f : C.faces.of_dimension(C.dim() - 1)) in_facet |= C.faces.leq(i, f);
    CHECK(in_facet);
  }
}

TEST_CASE("face duality") {
  check_duality(positive_hull(IntMatrix::Identity(2, 2)));
  check_duality(positive_hull(kConeOverSquare));
  check_duality(positive_hull(IntMatrix::Identity(3, 3)));
}

TEST_CASE("span_lattice") {
  const RationalCone ray = positive_hull(int_matrix({{2}, {4}}));
  CHECK(span_lattice(ray, 1).basis == int_matrix({{1, 2}}));
  CHECK(span_lattice(ray, 0).rank() == 0);
  const RationalCone cone = positive_hull(int_matrix({{2, 0}, {0, 3}}));
  CHECK(span_lattice(cone, cone.faces.top()).basis == IntMatrix::Identity(2, 2));

  // Saturation: stacking a generator of the face keeps unit divisors.
  const RationalCone C = positive_hull(int_matrix({{2, 0, 2}, {0, 2, 2}, {2, 2, 6}}));
  for (std::size_t f = 0; f < C.faces.size(); ++f) {
    const Sublattice L = span_lattice(C, f);
    CHECK(is_saturated(L.basis));
    for (int g : C.faces[f].generators) {
      IntMatrix stacked(L.rank() + 1, 3);
      stacked << L.basis, C.generators.col(g).transpose();
      const auto d = smith_normal_form(stacked).divisors();
      for (Eigen::Index i = 0; i < L.rank(); ++i) CHECK(d[static_cast<std::size_t>(i)] == 1);
    }
  }
}

TEST_CASE("cone_of_face") {
  const LatticePolytope sq = hull(kSquare);
  const RationalCone at_origin = cone_of_face(sq, face_with(sq.faces, {0}));
  CHECK(at_origin.faces.f_vector() == std::vector<std::size_t>{1, 2, 1});
  CHECK(at_origin.contains(int_vector({1, 0})));
  CHECK(at_origin.contains(int_vector({0, 1})));
  CHECK_FALSE(at_origin.contains(int_vector({-1, 0})));

  const RationalCone bottom = cone_of_face(sq, face_with(sq.faces, {0, 1}));
  CHECK(bottom.faces.size() == 2);
  CHECK(bottom.contains(int_vector({-5, 1})));
  CHECK_FALSE(bottom.contains(int_vector({0, -1})));

  const RationalCone whole = cone_of_face(sq, sq.faces.top());
  CHECK(whole.faces.size() == 1);
  CHECK(whole.dim() == 2);

  // Polytope and cone versions agree: cone_delta(tau) = cone_Delta(Delta cap tau).
  const GkzInstance inst(kConeOverSquare);
  for (std::size_t t = 0; t < inst.delta.faces.size(); ++t) {
    const RationalCone via_cone = cone_of_face(inst.delta, t);
    std::vector<int> pts{0};
    for (int g : inst.delta.faces[t].generators) pts.push_back(g + 1);
    const auto Gamma = inst.Delta.faces.find(pts);
    REQUIRE(Gamma.has_value());
    const RationalCone via_poly = cone_of_face(inst.Delta, *Gamma);
    for (Eigen::Index j = 0; j < via_poly.generators.cols(); ++j)
      CHECK(via_cone.contains(via_poly.generators.col(j)));
    for (Eigen::Index j = 0; j < via_cone.generators.cols(); ++j)
      CHECK(via_poly.contains(via_cone.generators.col(j)));
  }

  CHECK_THROWS_AS(cone_of_face(sq, 99), DomainError);
}

TEST_CASE("quotient_cone and poly_of_cone") {
  const RationalCone quadrant = positive_hull(IntMatrix::Identity(2, 2));
  const RationalCone q = quotient_cone(quadrant, face_with(quadrant.faces, {0}));
  CHECK(q.ambient_dim() == 1);
  CHECK(q.faces.size() == 2);
  CHECK(q.pointed());

  const RationalCone same = quotient_cone(quadrant, 0);
  CHECK(same.faces.isomorphic(quadrant.faces));

  const RationalCone C = positive_hull(kConeOverSquare);
  CHECK(quotient_cone(C, 0).faces.isomorphic(C.faces));
  for (std::size_t r : C.faces.of_dimension(1)) {
    const RationalCone Q = quotient_cone(C, r);
    CHECK(Q.ambient_dim() == 2);
    CHECK(Q.pointed());
    CHECK(Q.faces.f_vector() == std::vector<std::size_t>{1, 2, 1});
    // Matches the combinatorial interval above the ray.
    CHECK(poly_of_cone(Q).isomorphic(C.faces.interval(r, C.faces.top(), true)));
  }

  const RationalCone ray = positive_hull(int_matrix({{1}}));
  CHECK(poly_of_cone(ray).size() == 1);
  CHECK(poly_of_cone(ray).dimension() == 0);
  CHECK(poly_of_cone(quadrant).f_vector() == std::vector<std::size_t>{2, 1});
  const FaceLattice square = poly_of_cone(C);
  CHECK(square.f_vector() == std::vector<std::size_t>{4, 4, 1});
  CHECK(square.isomorphic(hull(kSquare).faces));
  CHECK_THROWS_AS(poly_of_cone(positive_hull(int_matrix({{1, -1}}))), DomainError);
}

TEST_CASE("normalized_volume") {
  CHECK(normalized_volume(hull(int_matrix({{0, 1, -1}}))) == 2);
  CHECK(normalized_volume(hull(kSquare)) == 2);
  for (int n = 1; n <= 4; ++n) {
    IntMatrix S = IntMatrix::Zero(n, n + 1);
    S.rightCols(n) = IntMatrix::Identity(n, n);
    CHECK(normalized_volume(hull(S)) == 1);
  }
  CHECK(normalized_volume(hull(int_matrix({{5}, {7}}))) == 1);
  // Relative to the span lattice: a segment of lattice length 3 in the plane.
  CHECK(normalized_volume(int_matrix({{0, 3}, {0, 6}})) == 3);
  // 3 * unit cube = 3! * 1
  CHECK(normalized_volume(int_matrix({{0, 1, 0, 0, 1, 1, 0, 1},
                                      {0, 0, 1, 0, 1, 0, 1, 1},
                                      {0, 0, 0, 1, 0, 1, 1, 1}})) == 6);

  // Unimodular invariance and additivity.
  const IntMatrix P = int_matrix({{0, 2, 0, 1}, {0, 0, 3, 2}});
  const IntMatrix U = int_matrix({{2, 3}, {1, 2}});
  CHECK(normalized_volume(P) == normalized_volume(IntMatrix(U * P)));
  const Integer whole = normalized_volume(int_matrix({{0, 2, 2, 0}, {0, 0, 2, 2}}));
  const Integer half1 = normalized_volume(int_matrix({{0, 2, 2}, {0, 0, 2}}));
  const Integer half2 = normalized_volume(int_matrix({{0, 2, 0}, {0, 2, 2}}));
  CHECK(whole == 8);
  CHECK(whole == half1 + half2);
}

TEST_CASE("exponent matrix and instance") {
  CHECK_THROWS_AS(ExponentMatrix(int_matrix({{1, 2}, {2, 4}})), DomainError);
  CHECK(ExponentMatrix(int_matrix({{1, -1}})).generates_lattice());
  CHECK_FALSE(ExponentMatrix(int_matrix({{2, 4}})).generates_lattice());
  const GkzInstance klo(int_matrix({{1, -1}}));
  CHECK(klo.volume == 2);
  CHECK(klo.delta.faces.size() == 1);
  const GkzInstance one(int_matrix({{1}}));
  CHECK(one.volume == 1);
}
