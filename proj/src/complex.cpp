#include "mks/complex.hpp"

#include <algorithm>
#include <map>

#include "mks/errors.hpp"

namespace mks {

std::vector<int> face_closure(const FaceLattice& lattice, const std::vector<int>& face_ids) {
  std::vector<char> in(static_cast<std::size_t>(lattice.size()), 0);
  std::vector<int> stack(face_ids.begin(), face_ids.end());
  while (!stack.empty()) {
    const int f = stack.back();
    stack.pop_back();
    if (in[static_cast<std::size_t>(f)]) continue;
    in[static_cast<std::size_t>(f)] = 1;
    for (int s : lattice[f].sub) stack.push_back(s);
  }
  std::vector<int> out;
  for (int f = 0; f < lattice.size(); ++f)
    if (in[static_cast<std::size_t>(f)]) out.push_back(f);
  return out;
}

CellComplex complex_from_faces(const std::vector<Vec3>& vertices, const FaceLattice& lattice, const std::vector<int>& face_ids) {
  const std::vector<int> closed = face_closure(lattice, face_ids);
  CellComplex c;
  std::map<int, int> index;
  for (int f : closed)
    if (lattice[f].dim == 0) {
      const int v = lattice[f].vertices[0];
      index[v] = static_cast<int>(c.vertices.size());
      c.vertices.push_back(vertices[static_cast<std::size_t>(v)]);
    }
  for (int f : closed) {
    const Face& fc = lattice[f];
    if (fc.dim == 1) {
      int a = index.at(fc.vertices[0]);
      int b = index.at(fc.vertices[1]);
      c.edges.emplace_back(std::min(a, b), std::max(a, b));
    } else if (fc.dim == 2) {
      std::vector<int> cyc;
      for (int v : fc.cycle) cyc.push_back(index.at(v));
      c.cells2.push_back(std::move(cyc));
    }
  }
  return c;
}

CellComplex complex_of_convex_set(std::span<const Vec3> points) {
  std::vector<Vec3> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  CellComplex c;
  const int d = affine_dimension(pts);
  if (d < 0) return c;
  if (d == 0) {
    c.vertices.push_back(pts[0]);
  } else if (d == 1) {
    // Sorted lexicographically, collinear points have their extremes at the ends.
    c.vertices = {pts.front(), pts.back()};
    c.edges = {{0, 1}};
  } else if (d == 2) {
    Vec3 n;
    for (std::size_t i = 2; i < pts.size() && n.is_zero(); ++i) n = cross(pts[1] - pts[0], pts[i] - pts[0]);
    c.vertices = planar_hull(pts, n);
    const int k = static_cast<int>(c.vertices.size());
    std::vector<int> cyc;
    for (int i = 0; i < k; ++i) {
      const int j = (i + 1) % k;
      c.edges.emplace_back(std::min(i, j), std::max(i, j));
      cyc.push_back(i);
    }
    c.cells2.push_back(std::move(cyc));
  } else {
    throw DegenerateInput("complex_of_convex_set expects a set of dimension <= 2");
  }
  return c;
}

CellComplex translate(const CellComplex& c, const Vec3& offset) {
  CellComplex out = c;
  for (auto& v : out.vertices) v += offset;
  return out;
}

CellComplex scale(const CellComplex& c, const Rational& factor) {
  CellComplex out = c;
  for (auto& v : out.vertices) v *= factor;
  return out;
}

CanonicalCells canonical_cells(const CellComplex& c) {
  CanonicalCells out;
  out.vertices.insert(c.vertices.begin(), c.vertices.end());
  for (const auto& [a, b] : c.edges) {
    std::vector<Vec3> e = {c.vertices[static_cast<std::size_t>(a)], c.vertices[static_cast<std::size_t>(b)]};
    std::sort(e.begin(), e.end());
    out.edges.insert(std::move(e));
  }
  for (const auto& cell : c.cells2) {
    std::vector<Vec3> f;
    for (int v : cell) f.push_back(c.vertices[static_cast<std::size_t>(v)]);
    std::sort(f.begin(), f.end());
    out.cells2.insert(std::move(f));
  }
  return out;
}

bool same_cells(const CellComplex& a, const CellComplex& b) { return canonical_cells(a) == canonical_cells(b); }

std::set<Vec3> vertex_set(const CellComplex& c) { return {c.vertices.begin(), c.vertices.end()}; }

void validate(const CellComplex& c) {
  const int n = static_cast<int>(c.vertices.size());
  if (vertex_set(c).size() != c.vertices.size()) throw DegenerateInput("complex has duplicate vertices");
  std::set<std::pair<int, int>> es;
  for (const auto& [a, b] : c.edges) {
    if (a < 0 || b >= n || a >= b) throw DegenerateInput("complex edge out of range or unordered");
    if (!es.insert({a, b}).second) throw DegenerateInput("complex has a duplicate edge");
  }
  std::set<std::vector<int>> cs;
  for (const auto& cell : c.cells2) {
    if (cell.size() < 3) throw DegenerateInput("2-cell with fewer than three vertices");
    for (std::size_t i = 0; i < cell.size(); ++i) {
      const int a = cell[i];
      const int b = cell[(i + 1) % cell.size()];
      if (!es.count({std::min(a, b), std::max(a, b)})) throw DegenerateInput("2-cell side missing from edge list");
    }
    const Vec3& p0 = c.vertices[static_cast<std::size_t>(cell[0])];
    Vec3 nrm;
    for (std::size_t i = 2; i < cell.size() && nrm.is_zero(); ++i)
      nrm = cross(c.vertices[static_cast<std::size_t>(cell[1])] - p0, c.vertices[static_cast<std::size_t>(cell[i])] - p0);
    if (nrm.is_zero()) throw DegenerateInput("2-cell is degenerate");
    for (int v : cell)
      if (!dot(nrm, c.vertices[static_cast<std::size_t>(v)] - p0).is_zero()) throw DegenerateInput("2-cell is not planar");
    std::vector<int> key = cell;
    std::sort(key.begin(), key.end());
    if (!cs.insert(key).second) throw DegenerateInput("complex has a duplicate 2-cell");
  }
}

CellComplex merge(const std::vector<CellComplex>& parts) {
  CellComplex out;
  std::map<Vec3, int> index;
  std::set<std::pair<int, int>> es;
  std::set<std::vector<int>> cs;
  const auto vid = [&](const Vec3& v) {
    auto [it, fresh] = index.emplace(v, static_cast<int>(out.vertices.size()));
    if (fresh) out.vertices.push_back(v);
    return it->second;
  };
  for (const auto& p : parts) {
    std::vector<int> map;
    for (const auto& v : p.vertices) map.push_back(vid(v));
    for (const auto& [a, b] : p.edges) {
      const int x = map[static_cast<std::size_t>(a)];
      const int y = map[static_cast<std::size_t>(b)];
      if (es.insert({std::min(x, y), std::max(x, y)}).second) out.edges.emplace_back(std::min(x, y), std::max(x, y));
    }
    for (const auto& cell : p.cells2) {
      std::vector<int> mapped;
      for (int v : cell) mapped.push_back(map[static_cast<std::size_t>(v)]);
      std::vector<int> key = mapped;
      std::sort(key.begin(), key.end());
      if (cs.insert(key).second) out.cells2.push_back(std::move(mapped));
    }
  }
  return out;
}

}  // namespace mks
