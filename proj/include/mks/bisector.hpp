#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mks/body.hpp"
#include "mks/complex.hpp"

namespace mks {

struct Membership {
  bool member = false;
  Rational lambda;  // gauge(y) (equal to gauge(y - x) when member)
};

/// y is equidistant from 0 and x in the gauge norm. Throws ZeroDirection.
Membership membership(const SymmetricBody& body, const Vec3& x, const Vec3& y);

/// lambda times the parameter sphere at lambda.
struct BisectorSlice {
  Rational lambda;
  CellComplex scaled_complex;
  bool degenerate = false;
};

/// Throws LambdaTooSmall for any lambda below lambda_zero.
std::vector<BisectorSlice> slices(const SymmetricBody& body, const Vec3& x, const std::vector<Rational>& lambdas);

struct SliceReport {
  Rational lambda;
  std::string classification;
  bool degenerate = false;
};

struct BisectorVerdict {
  bool manifold = true;
  std::string reason;
  std::vector<SliceReport> slice_reports;
  std::vector<Rational> criticals;
  std::optional<std::pair<Rational, Rational>> failing_interval;  // (a, b]
};

/// Probes every critical value above lambda_zero, every midpoint between
/// consecutive probes' interval ends, and lambda_max. The bisector is a
/// manifold iff every nondegenerate probe is a Circle.
BisectorVerdict manifold_verdict(const SymmetricBody& body, const Vec3& x, const Rational& lambda_max);

enum class MeshFormat { Obj, Ply };

/// Writes all complexes into one mesh: 2-cells fanned into triangles, edges
/// that bound no 2-cell as line elements. Atomic (temp file + rename).
/// Throws IoError, or EmptyComplex for an empty list.
void export_mesh(const std::vector<CellComplex>& complexes, MeshFormat format, const std::string& path);

/// Mesh text without touching the filesystem.
std::string mesh_text(const std::vector<CellComplex>& complexes, MeshFormat format);

/// Writes `text` to `path` through a temporary sibling and rename.
void write_atomic(const std::string& path, const std::string& text);

}  // namespace mks
