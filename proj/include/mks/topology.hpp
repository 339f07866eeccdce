#pragma once

#include <string>
#include <vector>

#include "mks/complex.hpp"

namespace mks {

enum class ManifoldKind { Manifold, ManifoldWithBoundary, NonManifold };

struct ManifoldStatus {
  ManifoldKind kind = ManifoldKind::Manifold;
  int dim = -1;
  // NonManifold only: offending cells (vertex ids; one id for a vertex
  // witness, two for an edge witness), first one is the reported witness.
  std::vector<std::vector<int>> witnesses;
  std::string reason;

  bool is(ManifoldKind k, int d) const { return kind == k && dim == d; }
};

enum class Classification { Empty, Point, Segment, DegenerateCell, Circle, Annulus, Disk, Sphere2, NonManifold, Other };

struct TopologyReport {
  int components = 0;
  int euler = 0;
  int max_dim = -1;
  ManifoldStatus manifold;
  int boundary_circles = 0;
  std::vector<std::vector<int>> boundary_components;  // vertex ids per boundary circle
  Classification classification = Classification::Empty;
  int degenerate_dim = -1;  // set for DegenerateCell

  std::string label() const;
};

/// Components under shared-vertex adjacency; labels[v] receives the
/// component index of vertex v when requested.
int connected_components(const CellComplex& c, std::vector<int>* labels = nullptr);

int euler_characteristic(const CellComplex& c);

/// Pure 1- and 2-complexes are checked through vertex degrees and vertex
/// links; a 2-complex with a vertex or edge outside every 2-cell is
/// NonManifold.
ManifoldStatus manifold_check(const CellComplex& c);

TopologyReport classify(const CellComplex& c);

std::string to_string(Classification c);
std::string to_string(ManifoldKind k);

}  // namespace mks
