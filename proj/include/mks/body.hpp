#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mks/kernel.hpp"

namespace mks {

/// A 0-symmetric, full-dimensional convex polytope in R^3 together with its
/// facet description and face lattice. Immutable after construction.
class SymmetricBody {
 public:
  SymmetricBody(std::string name, Polytope poly);

  const std::string& name() const { return name_; }
  static constexpr int dim() { return 3; }
  const std::vector<Vec3>& vertices() const { return poly_.vertices; }
  const std::vector<HalfSpace>& facets() const { return poly_.facets; }
  const FaceLattice& lattice() const { return poly_.lattice; }
  const Polytope& polytope() const { return poly_; }

  /// Facet normals scaled so that the facet reads a . y <= 1.
  const std::vector<Vec3>& unit_normals() const { return unit_normals_; }
  const Vec3& vertex(int v) const { return poly_.vertices[static_cast<std::size_t>(v)]; }

  /// Index of -v among the vertices, and of the facet opposite f.
  int opposite_vertex(int v) const { return opposite_vertex_[static_cast<std::size_t>(v)]; }
  int opposite_facet(int f) const { return opposite_facet_[static_cast<std::size_t>(f)]; }

  /// Barycenter of the vertices of a lattice face.
  Vec3 barycenter(int face_id) const;

  /// Euclidean diameter (floating point).
  double diameter() const;

 private:
  std::string name_;
  Polytope poly_;
  std::vector<Vec3> unit_normals_;
  std::vector<int> opposite_vertex_;
  std::vector<int> opposite_facet_;
};

/// Minkowski functional of the body: the least t >= 0 with p in tK.
Rational gauge(const SymmetricBody& body, const Vec3& p);

bool contains(const SymmetricBody& body, const Vec3& p);
bool on_boundary(const SymmetricBody& body, const Vec3& p);

/// {t : p + t dir in K}. Throws ZeroDirection.
LineInterval line_body_intersection(const SymmetricBody& body, const Vec3& p, const Vec3& dir);

/// Validates and constructs a symmetric body from points. With symmetrize the
/// hull of points and their negatives is taken. Throws NotSymmetric,
/// DegenerateInput or OriginNotInterior.
SymmetricBody build_symmetric(const std::vector<Vec3>& points, bool symmetrize, std::string name = "custom");

/// Named constructors: "octahedron", "cube", "example-sec3",
/// "example-sec3-literal", "sine-cylinder" (n segments), "diadic" (level n).
/// The name may carry its parameter inline as "diadic(3)". Throws UnknownBody.
SymmetricBody builtin(const std::string& name, int n = 0);

/// Generator points of a builtin before hulling (exposed for tests).
std::vector<Vec3> builtin_generators(const std::string& name, int n);

/// Hull of `pairs` random points on the grid (1/6)Z^3 within [-1,1]^3 and
/// their negatives. Deterministic per seed.
SymmetricBody random_symmetric(std::uint64_t seed, int pairs);

struct PolePair {
  Vec3 positive;
  Vec3 negative;
};

/// Intersections of the line span(x) with bd K. Throws ZeroDirection.
PolePair poles(const SymmetricBody& body, const Vec3& x);

/// bd K cut by the plane through the origin spanned by x and p: a strictly
/// convex polygon, counter-clockwise about x cross p. Throws CollinearPoint
/// when p lies on span(x), ZeroDirection when x = 0.
std::vector<Vec3> longitudinal_curve(const SymmetricBody& body, const Vec3& x, const Vec3& p);

/// True when q lies on the closed polygon boundary (coplanar input).
bool on_polygon_boundary(const std::vector<Vec3>& polygon, const Vec3& q);

}  // namespace mks
