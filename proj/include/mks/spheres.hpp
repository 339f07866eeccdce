#pragma once

#include <vector>

#include "mks/body.hpp"
#include "mks/complex.hpp"
#include "mks/shadow.hpp"

namespace mks {

/// bd K ∩ bd(K + x/lambda) in normalized coordinates.
struct ParameterSphere {
  Rational lambda;
  Vec3 direction;
  CellComplex complex;
  bool degenerate = false;  // lambda == lambda_zero
};

/// gauge(x)/2: the least lambda with K ∩ (K + x/lambda) nonempty.
/// Throws ZeroDirection.
Rational lambda_zero(const SymmetricBody& body, const Vec3& x);

/// Vertices of the convex polytope K ∩ (K + d).
std::vector<Vec3> lens_vertices(const SymmetricBody& body, const Vec3& d);

/// Throws LambdaTooSmall when lambda < lambda_zero.
ParameterSphere gamma_complex(const SymmetricBody& body, const Vec3& x, const Rational& lambda);

/// Decomposition of the lens K ∩ (K + x/lambda), recentred to the origin,
/// with respect to x. Its shadow complex shifted by x/(2 lambda) is the
/// parameter sphere. Throws LambdaTooSmall unless lambda > lambda_zero.
ShadowDecomposition gamma_as_shadow_oracle(const SymmetricBody& body, const Vec3& x, const Rational& lambda);

/// Symmetric sampled Hausdorff distance; `density` samples per unit length
/// along edges and per unit length of the sampling grid on 2-cells.
/// Throws EmptyComplex.
double hausdorff_distance(const CellComplex& a, const CellComplex& b, double density = 64.0);

/// lambda_zero plus every lambda in (lambda_zero, lambda_max] at which a
/// vertex of K or of K + x/lambda crosses the other body's boundary.
std::vector<Rational> critical_lambdas(const SymmetricBody& body, const Vec3& x, const Rational& lambda_max);

/// Intervals (a, b] of consecutive critical values whose quartile probes
/// disagree on classification.
std::vector<std::pair<Rational, Rational>> unstable_intervals(const SymmetricBody& body, const Vec3& x,
                                                              const std::vector<Rational>& criticals);

/// Half of the longitudinal curve through p: the part on p's side of the
/// line span(x), as a list of segments (pairs of endpoints).
std::vector<std::pair<Vec3, Vec3>> meridian(const SymmetricBody& body, const Vec3& x, const Vec3& p);

/// The meridian through p cut with the parameter sphere at lambda: a point
/// (lo == hi) or a segment parallel to x with lo . x < hi . x. `found` is
/// false when the cut is empty.
struct MeridianCut {
  bool found = false;
  Vec3 lo;
  Vec3 hi;
};
MeridianCut meridian_cut(const SymmetricBody& body, const Vec3& x, const Rational& lambda, const Vec3& p);

/// Retraction from the sphere at mu to the sphere at lambda along
/// longitudinal curves; segments resolve to p when they contain it and to
/// their end of least x-parameter otherwise. Throws PointNotOnSphere,
/// CurveDegenerate or LambdaTooSmall.
Vec3 bounding_map(const SymmetricBody& body, const Vec3& x, const Rational& lambda, const Rational& mu, const Vec3& p);

}  // namespace mks
