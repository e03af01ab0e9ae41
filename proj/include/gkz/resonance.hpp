#pragma once

#include <optional>
#include <vector>

#include "gkz/arith/characters.hpp"
#include "gkz/lattice/polyhedra.hpp"

namespace gkz {

struct FactorizationResult {
  bool factors = false;
  /// Exponents against the rows of `basis`: c = basis^T chi_tau mod (q - 1).
  std::optional<CharacterSpec> chi_tau;
  IntMatrix basis;
};

/// Decides whether chi is trivial on the kernel of the projection of the
/// torus onto the torus of the sublattice, i.e. whether c lies in the
/// subgroup of (Z/(q-1))^n generated by the basis rows.
FactorizationResult factor_through_face(const CharacterSpec& chi, const Sublattice& M);

/// Generators of {a in (Z/(q-1))^n : b.a = 0 mod (q-1) for every basis row b},
/// the exponent vectors of the kernel torus points t = g^a. Zero vectors are
/// omitted, so the trivial group has no generators.
std::vector<std::vector<std::int64_t>> kernel_generators(const Sublattice& M, std::uint64_t q);

struct FaceEvidence {
  std::size_t face_id = 0;
  int dim = 0;
  bool factors = false;
  std::optional<CharacterSpec> chi_tau;
};

struct NonresonanceReport {
  bool nonresonant = true;
  std::vector<FaceEvidence> evidence;
};

/// Tests the codimension-one faces of the cone, or every proper face when
/// `all_faces` is set. Both give the same verdict.
NonresonanceReport nonresonant(const CharacterSpec& chi, const RationalCone& delta, bool all_faces = false);

}  // namespace gkz
