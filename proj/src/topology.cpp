#include "mks/topology.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace mks {

namespace {

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

using EdgeKey = std::pair<int, int>;
EdgeKey key(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

// Number of 2-cells containing each edge.
std::map<EdgeKey, int> edge_cell_counts(const CellComplex& c) {
  std::map<EdgeKey, int> count;
  for (const auto& e : c.edges) count[e] = 0;
  for (const auto& cell : c.cells2)
    for (std::size_t i = 0; i < cell.size(); ++i) ++count[key(cell[i], cell[(i + 1) % cell.size()])];
  return count;
}

}  // namespace

int connected_components(const CellComplex& c, std::vector<int>* labels) {
  const int n = static_cast<int>(c.vertices.size());
  DisjointSets ds(n);
  for (const auto& [a, b] : c.edges) ds.unite(a, b);
  for (const auto& cell : c.cells2)
    for (int v : cell) ds.unite(v, cell[0]);
  std::map<int, int> roots;
  if (labels) labels->assign(static_cast<std::size_t>(n), -1);
  for (int v = 0; v < n; ++v) {
    auto [it, fresh] = roots.emplace(ds.find(v), static_cast<int>(roots.size()));
    if (labels) (*labels)[static_cast<std::size_t>(v)] = it->second;
  }
  return static_cast<int>(roots.size());
}

int euler_characteristic(const CellComplex& c) {
  return static_cast<int>(c.vertices.size()) - static_cast<int>(c.edges.size()) + static_cast<int>(c.cells2.size());
}

ManifoldStatus manifold_check(const CellComplex& c) {
  ManifoldStatus st;
  const int n = static_cast<int>(c.vertices.size());
  st.dim = c.max_dim();
  if (st.dim <= 0) return st;

  if (st.dim == 1) {
    std::vector<int> degree(static_cast<std::size_t>(n), 0);
    for (const auto& [a, b] : c.edges) {
      ++degree[static_cast<std::size_t>(a)];
      ++degree[static_cast<std::size_t>(b)];
    }
    bool ends = false;
    for (int v = 0; v < n; ++v) {
      const int d = degree[static_cast<std::size_t>(v)];
      if (d == 0 || d > 2) st.witnesses.push_back({v});
      if (d == 1) ends = true;
    }
    if (!st.witnesses.empty()) {
      st.kind = ManifoldKind::NonManifold;
      const int d = degree[static_cast<std::size_t>(st.witnesses[0][0])];
      st.reason = d == 0 ? "isolated vertex in a 1-complex" : "vertex of degree " + std::to_string(d);
      return st;
    }
    st.kind = ends ? ManifoldKind::ManifoldWithBoundary : ManifoldKind::Manifold;
    return st;
  }

  const auto counts = edge_cell_counts(c);
  bool boundary = false;
  for (const auto& [e, k] : counts) {
    if (k == 0 || k > 2) {
      if (st.witnesses.empty()) st.reason = k == 0 ? "edge outside every 2-cell" : "edge shared by " + std::to_string(k) + " 2-cells";
      st.witnesses.push_back({e.first, e.second});
    }
    if (k == 1) boundary = true;
  }

  // Vertex links: nodes are the cell sides at v, each 2-cell at v joins its
  // two sides there.
  std::vector<std::vector<std::pair<EdgeKey, EdgeKey>>> link(static_cast<std::size_t>(n));
  for (const auto& cell : c.cells2) {
    const std::size_t m = cell.size();
    for (std::size_t i = 0; i < m; ++i) {
      const int v = cell[i];
      link[static_cast<std::size_t>(v)].emplace_back(key(cell[(i + m - 1) % m], v), key(v, cell[(i + 1) % m]));
    }
  }
  std::string vertex_reason;
  for (int v = 0; v < n; ++v) {
    const auto& lk = link[static_cast<std::size_t>(v)];
    if (lk.empty()) {
      if (vertex_reason.empty()) vertex_reason = "vertex outside every 2-cell";
      st.witnesses.push_back({v});
      continue;
    }
    std::map<EdgeKey, int> node;
    for (const auto& [a, b] : lk) {
      node.emplace(a, static_cast<int>(node.size()));
      node.emplace(b, static_cast<int>(node.size()));
    }
    DisjointSets ds(static_cast<int>(node.size()));
    for (const auto& [a, b] : lk) ds.unite(node[a], node[b]);
    int comps = 0;
    for (int i = 0; i < static_cast<int>(node.size()); ++i)
      if (ds.find(i) == i) ++comps;
    if (comps > 1) {
      if (vertex_reason.empty()) vertex_reason = "vertex link has " + std::to_string(comps) + " components";
      st.witnesses.push_back({v});
    }
  }
  if (!st.witnesses.empty()) {
    st.kind = ManifoldKind::NonManifold;
    if (st.reason.empty()) st.reason = vertex_reason;
    return st;
  }
  st.kind = boundary ? ManifoldKind::ManifoldWithBoundary : ManifoldKind::Manifold;
  return st;
}

TopologyReport classify(const CellComplex& c) {
  TopologyReport r;
  r.components = connected_components(c);
  r.euler = euler_characteristic(c);
  r.max_dim = c.max_dim();
  r.manifold = manifold_check(c);

  if (r.max_dim == 2 && r.manifold.kind == ManifoldKind::ManifoldWithBoundary) {
    CellComplex bd;
    bd.vertices = c.vertices;
    for (const auto& [e, k] : edge_cell_counts(c))
      if (k == 1) bd.edges.push_back(e);
    std::vector<int> label;
    connected_components(bd, &label);
    std::map<int, std::vector<int>> groups;
    std::vector<char> used(c.vertices.size(), 0);
    for (const auto& [a, b] : bd.edges) used[static_cast<std::size_t>(a)] = used[static_cast<std::size_t>(b)] = 1;
    for (int v = 0; v < static_cast<int>(c.vertices.size()); ++v)
      if (used[static_cast<std::size_t>(v)]) groups[label[static_cast<std::size_t>(v)]].push_back(v);
    for (auto& [g, vs] : groups) r.boundary_components.push_back(std::move(vs));
    r.boundary_circles = static_cast<int>(r.boundary_components.size());
  }

  using C = Classification;
  const auto& m = r.manifold;
  if (r.max_dim < 0) {
    r.classification = C::Empty;
  } else if (r.max_dim == 0) {
    r.classification = c.vertices.size() == 1 ? C::Point : C::Other;
  } else if (m.kind == ManifoldKind::NonManifold) {
    r.classification = C::NonManifold;
  } else if (r.components != 1) {
    r.classification = C::Other;
  } else if (r.max_dim == 1) {
    if (m.kind == ManifoldKind::Manifold && r.euler == 0)
      r.classification = C::Circle;
    else if (m.kind == ManifoldKind::ManifoldWithBoundary && r.euler == 1)
      r.classification = C::Segment;
    else
      r.classification = C::Other;
  } else if (c.cells2.size() == 1 && c.edges.size() == c.cells2[0].size() && c.vertices.size() == c.cells2[0].size()) {
    r.classification = C::DegenerateCell;
    r.degenerate_dim = 2;
  } else if (m.kind == ManifoldKind::ManifoldWithBoundary && r.euler == 0 && r.boundary_circles == 2) {
    r.classification = C::Annulus;
  } else if (m.kind == ManifoldKind::ManifoldWithBoundary && r.euler == 1 && r.boundary_circles == 1) {
    r.classification = C::Disk;
  } else if (m.kind == ManifoldKind::Manifold && r.euler == 2) {
    r.classification = C::Sphere2;
  } else {
    r.classification = C::Other;
  }
  return r;
}

std::string to_string(Classification c) {
  switch (c) {
    case Classification::Empty: return "Empty";
    case Classification::Point: return "Point";
    case Classification::Segment: return "Segment";
    case Classification::DegenerateCell: return "DegenerateCell";
    case Classification::Circle: return "Circle";
    case Classification::Annulus: return "Annulus";
    case Classification::Disk: return "Disk";
    case Classification::Sphere2: return "Sphere2";
    case Classification::NonManifold: return "NonManifold";
    case Classification::Other: return "Other";
  }
  return "Other";
}

std::string to_string(ManifoldKind k) {
  switch (k) {
    case ManifoldKind::Manifold: return "Manifold";
    case ManifoldKind::ManifoldWithBoundary: return "ManifoldWithBoundary";
    case ManifoldKind::NonManifold: return "NonManifold";
  }
  return "NonManifold";
}

std::string TopologyReport::label() const {
  if (classification == Classification::DegenerateCell) return "DegenerateCell(" + std::to_string(degenerate_dim) + ")";
  return to_string(classification);
}

}  // namespace mks
