#pragma once

#include <optional>
#include <span>
#include <vector>

#include "mks/rational.hpp"
#include "mks/vec3.hpp"

namespace mks {

/// Closed halfspace normal . y <= offset. Normals are outward, scaled to
/// coprime integers.
struct HalfSpace {
  Vec3 normal;
  Rational offset;

  bool contains(const Vec3& p) const { return dot(normal, p) <= offset; }
  bool on_boundary(const Vec3& p) const { return dot(normal, p) == offset; }
  friend bool operator==(const HalfSpace&, const HalfSpace&) = default;
};

/// Scales a nonzero rational vector to the primitive integer vector with the
/// same direction.
Vec3 primitive_integer(const Vec3& v);

/// One face of a 3-polytope. Face ids index FaceLattice::faces.
struct Face {
  int dim = 0;
  std::vector<int> vertices;  // sorted vertex ids
  std::vector<int> facets;    // active facet ids A(F), sorted
  std::vector<int> sub;       // faces of dimension dim-1 contained in this one
  std::vector<int> super;     // faces of dimension dim+1 containing this one
  std::vector<int> cycle;     // dim == 2 only: vertex ids counter-clockwise about the outward normal
};

/// Face lattice of a 3-polytope. Faces are stored vertices first (face id ==
/// vertex id), then edges, then facets (face id == facet_offset() + facet id).
struct FaceLattice {
  std::vector<Face> faces;
  int num_vertices = 0;
  int num_edges = 0;
  int num_facets = 0;

  int edge_offset() const { return num_vertices; }
  int facet_offset() const { return num_vertices + num_edges; }
  int facet_face(int facet) const { return facet_offset() + facet; }
  const Face& vertex(int v) const { return faces[static_cast<std::size_t>(v)]; }
  const Face& edge(int e) const { return faces[static_cast<std::size_t>(edge_offset() + e)]; }
  const Face& facet(int f) const { return faces[static_cast<std::size_t>(facet_offset() + f)]; }
  const Face& operator[](int id) const { return faces[static_cast<std::size_t>(id)]; }
  int size() const { return static_cast<int>(faces.size()); }
};

/// Exact convex hull of a full-dimensional point set in R^3.
struct Polytope {
  std::vector<Vec3> vertices;      // extreme points only
  std::vector<HalfSpace> facets;   // one per facet, canonical form
  FaceLattice lattice;
};

/// Builds facets and the full face lattice of conv(points). Interior and
/// non-extreme boundary points are discarded. Throws DegenerateInput when
/// the points do not span R^3.
Polytope hull_and_lattice(std::span<const Vec3> points);

/// Affine dimension (-1 for empty) of a point set.
int affine_dimension(std::span<const Vec3> points);

/// Strictly convex polygon of coplanar points, counter-clockwise about
/// `normal`. Collinear and interior points are dropped. Requires at least
/// three non-collinear points.
std::vector<Vec3> planar_hull(std::span<const Vec3> points, const Vec3& normal);

/// Closed parameter interval {t : p + t dir satisfies every halfspace}.
struct LineInterval {
  bool empty = true;
  Rational lo;
  Rational hi;

  bool is_point() const { return !empty && lo == hi; }
  bool is_segment() const { return !empty && lo < hi; }
};

/// Throws ZeroDirection for dir = 0.
LineInterval line_polytope_intersection(std::span<const HalfSpace> facets, const Vec3& p, const Vec3& dir);

/// max over facets of (normal . p) / offset; every offset must be positive.
Rational gauge_of(std::span<const HalfSpace> facets, const Vec3& p);

}  // namespace mks
