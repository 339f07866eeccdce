#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <unordered_set>

#include "mks/errors.hpp"
#include "mks/kernel.hpp"

namespace mks {

Vec3 primitive_integer(const Vec3& v) {
  if (v.is_zero()) throw ZeroDirection("primitive_integer of the zero vector");
  mpz_class l = 1;
  for (int i = 0; i < 3; ++i) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v[i].den().get_mpz_t());
  std::array<mpz_class, 3> z;
  mpz_class g = 0;
  for (int i = 0; i < 3; ++i) {
    const mpq_class s = v[i].raw() * l;
    z[static_cast<std::size_t>(i)] = s.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z[static_cast<std::size_t>(i)].get_mpz_t());
  }
  return Vec3(Rational(mpz_class(z[0] / g)), Rational(mpz_class(z[1] / g)), Rational(mpz_class(z[2] / g)));
}

int affine_dimension(std::span<const Vec3> pts) {
  if (pts.empty()) return -1;
  const Vec3& a = pts[0];
  std::size_t i = 1;
  while (i < pts.size() && pts[i] == a) ++i;
  if (i == pts.size()) return 0;
  const Vec3& b = pts[i];
  std::size_t j = i + 1;
  while (j < pts.size() && collinear(a, b, pts[j])) ++j;
  if (j == pts.size()) return 1;
  const Vec3 n = cross(b - a, pts[j] - a);
  for (std::size_t k = j + 1; k < pts.size(); ++k)
    if (!dot(n, pts[k] - a).is_zero()) return 3;
  return 2;
}

std::vector<Vec3> planar_hull(std::span<const Vec3> points, const Vec3& normal) {
  // Drop the coordinate where the normal is largest; keep orientation by
  // flipping when that component is negative.
  int drop = 0;
  for (int i = 1; i < 3; ++i)
    if (normal[i].abs() > normal[drop].abs()) drop = i;
  const int u = (drop + 1) % 3;
  const int v = (drop + 2) % 3;
  const bool flip = normal[drop].sign() < 0;

  std::vector<Vec3> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end(), [&](const Vec3& a, const Vec3& b) {
    if (a[u] != b[u]) return a[u] < b[u];
    return a[v] < b[v];
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) throw DegenerateInput("planar hull needs three points");

  const auto turn = [&](const Vec3& o, const Vec3& a, const Vec3& b) {
    return (a[u] - o[u]) * (b[v] - o[v]) - (a[v] - o[v]) * (b[u] - o[u]);
  };
  std::vector<Vec3> h(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && turn(h[k - 2], h[k - 1], p).sign() <= 0) --k;
    h[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && turn(h[k - 2], h[k - 1], pts[i]).sign() <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  if (h.size() < 3) throw DegenerateInput("planar hull of collinear points");
  if (flip) std::reverse(h.begin(), h.end());
  return h;
}

namespace {

struct Tri {
  std::array<int, 3> v{};
  Vec3 n;
  Rational off;
  bool alive = true;
};

std::uint64_t edge_key(int a, int b) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) | static_cast<std::uint32_t>(b);
}

Tri make_tri(const std::vector<Vec3>& P, int a, int b, int c) {
  Tri t;
  t.v = {a, b, c};
  t.n = cross(P[static_cast<std::size_t>(b)] - P[static_cast<std::size_t>(a)],
              P[static_cast<std::size_t>(c)] - P[static_cast<std::size_t>(a)]);
  t.off = dot(t.n, P[static_cast<std::size_t>(a)]);
  return t;
}

// Triangulated hull boundary on integer-scaled points. Strict visibility
// keeps coplanar configurations exact; facet merging happens afterwards.
std::vector<Tri> incremental_hull(const std::vector<Vec3>& P) {
  const int n = static_cast<int>(P.size());
  const auto at = [&](int i) -> const Vec3& { return P[static_cast<std::size_t>(i)]; };

  int i1 = 1;
  int i2 = -1;
  int i3 = -1;
  for (int i = 2; i < n; ++i)
    if (!collinear(at(0), at(i1), at(i))) {
      i2 = i;
      break;
    }
  if (i2 < 0) throw DegenerateInput("points are collinear");
  for (int i = i2 + 1; i < n; ++i)
    if (!orient3d(at(0), at(i1), at(i2), at(i)).is_zero()) {
      i3 = i;
      break;
    }
  if (i3 < 0) throw DegenerateInput("points lie in a plane");

  std::vector<Tri> tris;
  std::array<int, 4> s = {0, i1, i2, i3};
  if (orient3d(at(0), at(i1), at(i2), at(i3)).sign() > 0) std::swap(s[1], s[2]);
  // With orient3d(s0,s1,s2,s3) < 0 the face (s0,s1,s2) has s3 behind it.
  tris.push_back(make_tri(P, s[0], s[1], s[2]));
  tris.push_back(make_tri(P, s[0], s[3], s[1]));
  tris.push_back(make_tri(P, s[1], s[3], s[2]));
  tris.push_back(make_tri(P, s[2], s[3], s[0]));

  std::vector<int> order;
  for (int i = 1; i < n; ++i)
    if (i != i1 && i != i2 && i != i3) order.push_back(i);
  std::mt19937 rng(12345u);
  std::shuffle(order.begin(), order.end(), rng);

  std::vector<int> visible;
  std::unordered_set<std::uint64_t> vis_edges;
  for (int p : order) {
    visible.clear();
    for (int t = 0; t < static_cast<int>(tris.size()); ++t) {
      const Tri& tr = tris[static_cast<std::size_t>(t)];
      if (tr.alive && dot(tr.n, at(p)) > tr.off) visible.push_back(t);
    }
    if (visible.empty()) continue;
    vis_edges.clear();
    for (int t : visible) {
      const auto& v = tris[static_cast<std::size_t>(t)].v;
      for (int k = 0; k < 3; ++k) vis_edges.insert(edge_key(v[static_cast<std::size_t>(k)], v[static_cast<std::size_t>((k + 1) % 3)]));
    }
    std::vector<std::pair<int, int>> horizon;
    for (int t : visible) {
      auto& tr = tris[static_cast<std::size_t>(t)];
      for (int k = 0; k < 3; ++k) {
        const int a = tr.v[static_cast<std::size_t>(k)];
        const int b = tr.v[static_cast<std::size_t>((k + 1) % 3)];
        if (!vis_edges.count(edge_key(b, a))) horizon.emplace_back(a, b);
      }
      tr.alive = false;
    }
    for (const auto& [a, b] : horizon) tris.push_back(make_tri(P, a, b, p));
    if (tris.size() > 4 * static_cast<std::size_t>(n) + 64) {
      std::erase_if(tris, [](const Tri& t) { return !t.alive; });
    }
  }
  std::erase_if(tris, [](const Tri& t) { return !t.alive; });
  return tris;
}

bool rank3(const std::vector<const Vec3*>& normals) {
  if (normals.size() < 3) return false;
  const Vec3& a = *normals[0];
  for (std::size_t i = 1; i < normals.size(); ++i) {
    const Vec3 c = cross(a, *normals[i]);
    if (c.is_zero()) continue;
    for (std::size_t j = i + 1; j < normals.size(); ++j)
      if (!dot(c, *normals[j]).is_zero()) return true;
  }
  return false;
}

std::vector<int> sorted_intersection(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

Polytope hull_and_lattice(std::span<const Vec3> points) {
  std::vector<Vec3> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 4) throw DegenerateInput("fewer than four distinct points");

  mpz_class scale = 1;
  for (const auto& p : pts)
    for (int i = 0; i < 3; ++i) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), p[i].den().get_mpz_t());
  const Rational L{scale};
  std::vector<Vec3> scaled;
  scaled.reserve(pts.size());
  for (const auto& p : pts) scaled.push_back(p * L);

  const std::vector<Tri> tris = incremental_hull(scaled);

  // Distinct facet planes, canonical order by normal.
  std::map<Vec3, Rational> planes;
  std::unordered_set<int> candidates;
  for (const auto& t : tris) {
    const Vec3 n = primitive_integer(t.n);
    planes.emplace(n, dot(n, scaled[static_cast<std::size_t>(t.v[0])]) / L);
    for (int v : t.v) candidates.insert(v);
  }

  Polytope out;
  for (const auto& [n, off] : planes) out.facets.push_back(HalfSpace{n, off});
  const int F = static_cast<int>(out.facets.size());

  // Extreme points: candidates whose active normals span R^3.
  std::vector<int> cand(candidates.begin(), candidates.end());
  std::sort(cand.begin(), cand.end());
  std::vector<std::vector<int>> vertex_facets;
  for (int c : cand) {
    const Vec3& p = pts[static_cast<std::size_t>(c)];
    std::vector<int> act;
    std::vector<const Vec3*> normals;
    for (int f = 0; f < F; ++f)
      if (out.facets[static_cast<std::size_t>(f)].on_boundary(p)) {
        act.push_back(f);
        normals.push_back(&out.facets[static_cast<std::size_t>(f)].normal);
      }
    if (rank3(normals)) {
      out.vertices.push_back(p);
      vertex_facets.push_back(std::move(act));
    }
  }
  const int V = static_cast<int>(out.vertices.size());

  std::vector<std::vector<int>> facet_vertices(static_cast<std::size_t>(F));
  for (int v = 0; v < V; ++v)
    for (int f : vertex_facets[static_cast<std::size_t>(v)]) facet_vertices[static_cast<std::size_t>(f)].push_back(v);

  // Edges: pairs of facets sharing two vertices.
  struct EdgeRec {
    int a, b;
    int f1, f2;
  };
  std::vector<EdgeRec> edges;
  for (int f = 0; f < F; ++f)
    for (int g = f + 1; g < F; ++g) {
      const auto common = sorted_intersection(facet_vertices[static_cast<std::size_t>(f)], facet_vertices[static_cast<std::size_t>(g)]);
      if (common.size() >= 2) {
        if (common.size() != 2) throw DegenerateInput("internal: facet pair shares more than two vertices");
        edges.push_back({common[0], common[1], f, g});
      }
    }
  std::sort(edges.begin(), edges.end(), [](const EdgeRec& x, const EdgeRec& y) { return std::tie(x.a, x.b) < std::tie(y.a, y.b); });
  const int E = static_cast<int>(edges.size());

  FaceLattice& lat = out.lattice;
  lat.num_vertices = V;
  lat.num_edges = E;
  lat.num_facets = F;
  lat.faces.resize(static_cast<std::size_t>(V + E + F));
  for (int v = 0; v < V; ++v) {
    Face& fc = lat.faces[static_cast<std::size_t>(v)];
    fc.dim = 0;
    fc.vertices = {v};
    fc.facets = vertex_facets[static_cast<std::size_t>(v)];
  }
  for (int e = 0; e < E; ++e) {
    const int id = V + e;
    Face& fc = lat.faces[static_cast<std::size_t>(id)];
    fc.dim = 1;
    fc.vertices = {edges[static_cast<std::size_t>(e)].a, edges[static_cast<std::size_t>(e)].b};
    fc.facets = {edges[static_cast<std::size_t>(e)].f1, edges[static_cast<std::size_t>(e)].f2};
    fc.sub = fc.vertices;
    for (int v : fc.vertices) lat.faces[static_cast<std::size_t>(v)].super.push_back(id);
    for (int f : fc.facets) lat.faces[static_cast<std::size_t>(V + E + f)].sub.push_back(id);
    fc.super = {V + E + fc.facets[0], V + E + fc.facets[1]};
  }
  for (int f = 0; f < F; ++f) {
    Face& fc = lat.faces[static_cast<std::size_t>(V + E + f)];
    fc.dim = 2;
    fc.vertices = facet_vertices[static_cast<std::size_t>(f)];
    fc.facets = {f};
    std::sort(fc.sub.begin(), fc.sub.end());

    // Walk the boundary cycle through the facet's edges.
    std::map<int, std::vector<int>> adj;
    for (int id : fc.sub) {
      const auto& ev = lat.faces[static_cast<std::size_t>(id)].vertices;
      adj[ev[0]].push_back(ev[1]);
      adj[ev[1]].push_back(ev[0]);
    }
    std::vector<int> cyc;
    int prev = -1;
    int cur = fc.vertices.front();
    do {
      cyc.push_back(cur);
      const auto& nb = adj[cur];
      if (nb.size() != 2) throw DegenerateInput("internal: facet boundary is not a cycle");
      const int next = nb[0] != prev ? nb[0] : nb[1];
      prev = cur;
      cur = next;
    } while (cur != cyc.front() && cyc.size() <= fc.vertices.size());
    if (cyc.size() != fc.vertices.size()) throw DegenerateInput("internal: facet cycle length mismatch");
    const auto& P = out.vertices;
    const Vec3 turn = cross(P[static_cast<std::size_t>(cyc[1])] - P[static_cast<std::size_t>(cyc[0])],
                            P[static_cast<std::size_t>(cyc[2])] - P[static_cast<std::size_t>(cyc[1])]);
    if (dot(turn, out.facets[static_cast<std::size_t>(f)].normal).sign() < 0) std::reverse(cyc.begin() + 1, cyc.end());
    fc.cycle = std::move(cyc);
  }
  return out;
}

LineInterval line_polytope_intersection(std::span<const HalfSpace> facets, const Vec3& p, const Vec3& dir) {
  if (dir.is_zero()) throw ZeroDirection("line direction is zero");
  std::optional<Rational> lo;
  std::optional<Rational> hi;
  LineInterval out;
  for (const auto& h : facets) {
    const Rational slope = dot(h.normal, dir);
    const Rational slack = h.offset - dot(h.normal, p);
    if (slope.is_zero()) {
      if (slack.sign() < 0) return out;
      continue;
    }
    const Rational t = slack / slope;
    if (slope.sign() > 0) {
      if (!hi || t < *hi) hi = t;
    } else {
      if (!lo || t > *lo) lo = t;
    }
  }
  if (!lo || !hi) throw DegenerateInput("line is unbounded in the polytope");
  if (*lo > *hi) return out;
  out.empty = false;
  out.lo = *lo;
  out.hi = *hi;
  return out;
}

Rational gauge_of(std::span<const HalfSpace> facets, const Vec3& p) {
  std::optional<Rational> best;
  for (const auto& h : facets) {
    Rational v = dot(h.normal, p) / h.offset;
    if (!best || v > *best) best = std::move(v);
  }
  return best ? *best : Rational(0);
}

}  // namespace mks
