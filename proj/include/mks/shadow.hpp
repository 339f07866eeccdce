#pragma once

#include <optional>
#include <vector>

#include "mks/body.hpp"
#include "mks/complex.hpp"

namespace mks {

/// Plus: the face lies in the lit cap K+ (y - tau x is interior for small
/// tau > 0). Minus: the mirror cap K-. Shadow: the line through the face in
/// direction x supports K.
enum class FaceLabel { Plus, Minus, Shadow };

std::string to_string(FaceLabel l);

struct NonSharpWitness {
  int face = -1;
  Vec3 from;  // endpoints of K cut by the line through the face barycenter
  Vec3 to;
};

struct ShadowDecomposition {
  SymmetricBody body;
  Vec3 direction;
  std::vector<int> facet_sign;     // sign of (facet normal . x) per facet
  std::vector<FaceLabel> labels;   // per lattice face
  std::vector<int> shadow_faces;   // closed under sub-faces
  CellComplex shadow_complex;
  bool sharp = false;
  std::vector<int> sharp_faces;
  CellComplex sharp_subcomplex;
  std::optional<NonSharpWitness> nonsharp_witness;
  std::vector<int> plus_boundary_faces;
  std::vector<int> minus_boundary_faces;
  CellComplex plus_boundary;   // bd(cl K+)
  CellComplex minus_boundary;  // bd(cl K-)
  PolePair poles;

  std::vector<int> faces_with(FaceLabel l) const;
};

/// Labels every face of the lattice from the signs of its active facet
/// normals against x and assembles the shadow, sharp and cap-boundary
/// complexes. Throws ZeroDirection.
ShadowDecomposition decompose(const SymmetricBody& body, const Vec3& x);

struct Sharpness {
  bool sharp = false;
  std::vector<int> sharp_faces;
  CellComplex sharp_subcomplex;
  std::optional<NonSharpWitness> witness;
};

/// A shadow face is sharp iff its active facets include one strictly facing
/// x and one strictly facing away.
Sharpness sharpness(const ShadowDecomposition& d);

/// bd(cl K+): faces whose active set holds a facet with a.x > 0 and one with
/// a.x <= 0.
CellComplex positive_closure_boundary(const ShadowDecomposition& d);

/// Components of the lattice faces outside `removed`, adjacent through
/// incidences between faces that are both outside.
int separation_components(const SymmetricBody& body, const std::vector<int>& removed_faces);

/// Same, with the removed set given geometrically (cells matched by their
/// vertex coordinates).
int separation_components(const SymmetricBody& body, const CellComplex& removed);

/// True iff projecting the closure of `faces` along x gives exactly the
/// boundary polygon of the projected body.
bool projection_covers_boundary(const SymmetricBody& body, const Vec3& x, const std::vector<int>& faces);

bool projection_check(const ShadowDecomposition& d);

/// Definition-level oracle at a point of bd K: probes y -+ tau x for a
/// tau below the first constraint crossing.
FaceLabel pointwise_label(const SymmetricBody& body, const Vec3& x, const Vec3& y);

/// Lattice face id keyed by its sorted vertex set, and the antipodal face.
int antipodal_face(const SymmetricBody& body, int face_id);

}  // namespace mks
