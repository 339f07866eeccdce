#pragma once

#include <set>
#include <string>
#include <variant>
#include <vector>

#include "mks/kernel.hpp"
#include "mks/vec3.hpp"

namespace mks {

/// Embedded polyhedral complex of dimension <= 2 with exact coordinates.
/// Edges are stored with a < b; 2-cells are cyclic vertex lists whose
/// consecutive pairs appear in `edges`.
struct CellComplex {
  std::vector<Vec3> vertices;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> cells2;

  bool empty() const { return vertices.empty(); }
  int max_dim() const { return !cells2.empty() ? 2 : (!edges.empty() ? 1 : (vertices.empty() ? -1 : 0)); }
};

/// Subcomplex spanned by the given lattice faces (ids into `lattice`). The
/// closure is taken: sub-faces of listed faces are included.
CellComplex complex_from_faces(const std::vector<Vec3>& vertices, const FaceLattice& lattice, const std::vector<int>& face_ids);

/// Closure of a face set under taking sub-faces.
std::vector<int> face_closure(const FaceLattice& lattice, const std::vector<int>& face_ids);

/// Complex of a convex polytope of dimension 0, 1 or 2 given by points.
CellComplex complex_of_convex_set(std::span<const Vec3> points);

CellComplex translate(const CellComplex& c, const Vec3& offset);
CellComplex scale(const CellComplex& c, const Rational& factor);

/// Canonical cell set: each cell as its sorted vertex coordinates. Two
/// complexes describe the same cells iff their canonical sets match.
struct CanonicalCells {
  std::set<Vec3> vertices;
  std::set<std::vector<Vec3>> edges;
  std::set<std::vector<Vec3>> cells2;
  friend bool operator==(const CanonicalCells&, const CanonicalCells&) = default;
};
CanonicalCells canonical_cells(const CellComplex& c);
bool same_cells(const CellComplex& a, const CellComplex& b);

/// Throws DegenerateInput when an invariant of CellComplex is violated.
void validate(const CellComplex& c);

/// Sorted vertex coordinates of a complex (useful for set comparisons).
std::set<Vec3> vertex_set(const CellComplex& c);

/// Union of complexes (vertices merged by coordinates).
CellComplex merge(const std::vector<CellComplex>& parts);

}  // namespace mks
