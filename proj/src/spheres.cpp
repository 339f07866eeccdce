#include "mks/spheres.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "mks/distance_kernels.hpp"
#include "mks/errors.hpp"
#include "mks/topology.hpp"

namespace mks {

Rational lambda_zero(const SymmetricBody& body, const Vec3& x) {
  if (x.is_zero()) throw ZeroDirection("direction is zero");
  return gauge(body, x) / Rational(2);
}

namespace {

std::vector<HalfSpace> translated(const std::vector<HalfSpace>& hs, const Vec3& d) {
  std::vector<HalfSpace> out;
  out.reserve(hs.size());
  for (const auto& h : hs) out.push_back(HalfSpace{h.normal, h.offset + dot(h.normal, d)});
  return out;
}

bool inside(const std::vector<HalfSpace>& hs, const Vec3& p) {
  return std::all_of(hs.begin(), hs.end(), [&](const HalfSpace& h) { return h.contains(p); });
}

// Crossings of the edges of one body with the facet planes of the other,
// kept when inside both.
void edge_plane_hits(const SymmetricBody& body, const Vec3& shift, const std::vector<HalfSpace>& own,
                     const std::vector<HalfSpace>& other, std::set<Vec3>& out) {
  const auto& lat = body.lattice();
  for (int e = 0; e < lat.num_edges; ++e) {
    const auto& ev = lat.edge(e).vertices;
    const Vec3 a = body.vertex(ev[0]) + shift;
    const Vec3 b = body.vertex(ev[1]) + shift;
    const Vec3 ab = b - a;
    for (const auto& h : other) {
      const Rational den = dot(h.normal, ab);
      if (den.is_zero()) continue;
      const Rational t = (h.offset - dot(h.normal, a)) / den;
      if (t.sign() <= 0 || t >= Rational(1)) continue;
      Vec3 p = a + ab * t;
      if (inside(other, p) && inside(own, p)) out.insert(std::move(p));
    }
  }
}

void require_at_least(const SymmetricBody& body, const Vec3& x, const Rational& lambda, bool strict) {
  const Rational l0 = lambda_zero(body, x);
  if (lambda < l0 || (strict && lambda == l0))
    throw LambdaTooSmall("lambda " + lambda.str() + (strict ? " must exceed " : " is below ") + "lambda_0 = " + l0.str());
}

}  // namespace

std::vector<Vec3> lens_vertices(const SymmetricBody& body, const Vec3& d) {
  const auto& k = body.facets();
  const std::vector<HalfSpace> kd = translated(k, d);
  std::set<Vec3> pts;
  for (const auto& v : body.vertices()) {
    if (inside(kd, v)) pts.insert(v);
    if (inside(k, v + d)) pts.insert(v + d);
  }
  edge_plane_hits(body, Vec3(), k, kd, pts);
  edge_plane_hits(body, d, kd, k, pts);
  return {pts.begin(), pts.end()};
}

ParameterSphere gamma_complex(const SymmetricBody& body, const Vec3& x, const Rational& lambda) {
  require_at_least(body, x, lambda, false);
  ParameterSphere s;
  s.lambda = lambda;
  s.direction = x;
  const Vec3 d = x / lambda;
  const std::vector<Vec3> pts = lens_vertices(body, d);
  if (affine_dimension(pts) < 3) {
    s.degenerate = true;
    s.complex = complex_of_convex_set(pts);
    return s;
  }
  s.degenerate = lambda == lambda_zero(body, x);
  const Polytope lens = hull_and_lattice(pts);
  const auto& k = body.facets();
  const std::vector<HalfSpace> kd = translated(k, d);
  // A lens vertex lies in gamma iff it is tight for some facet of K and some
  // facet of K + d; a face lies in gamma iff its vertices share one of each.
  std::vector<std::vector<int>> tight_k(lens.vertices.size());
  std::vector<std::vector<int>> tight_kd(lens.vertices.size());
  for (std::size_t v = 0; v < lens.vertices.size(); ++v)
    for (std::size_t f = 0; f < k.size(); ++f) {
      if (k[f].on_boundary(lens.vertices[v])) tight_k[v].push_back(static_cast<int>(f));
      if (kd[f].on_boundary(lens.vertices[v])) tight_kd[v].push_back(static_cast<int>(f));
    }
  const auto common = [](const std::vector<std::vector<int>>& tight, const std::vector<int>& verts) {
    std::vector<int> acc = tight[static_cast<std::size_t>(verts[0])];
    for (std::size_t i = 1; i < verts.size() && !acc.empty(); ++i) {
      std::vector<int> next;
      const auto& t = tight[static_cast<std::size_t>(verts[i])];
      std::set_intersection(acc.begin(), acc.end(), t.begin(), t.end(), std::back_inserter(next));
      acc = std::move(next);
    }
    return !acc.empty();
  };
  std::vector<int> faces;
  for (int f = 0; f < lens.lattice.size(); ++f) {
    const auto& verts = lens.lattice[f].vertices;
    if (common(tight_k, verts) && common(tight_kd, verts)) faces.push_back(f);
  }
  s.complex = complex_from_faces(lens.vertices, lens.lattice, faces);
  return s;
}

ShadowDecomposition gamma_as_shadow_oracle(const SymmetricBody& body, const Vec3& x, const Rational& lambda) {
  require_at_least(body, x, lambda, true);
  const Vec3 d = x / lambda;
  const Vec3 half = d / Rational(2);
  std::vector<Vec3> pts = lens_vertices(body, d);
  for (auto& p : pts) p -= half;
  const SymmetricBody lens = build_symmetric(pts, false, body.name() + "-lens");
  return decompose(lens, x);
}

namespace {

void add_targets(const CellComplex& c, kernels::Targets& t) {
  std::vector<std::array<double, 3>> v;
  for (const auto& p : c.vertices) v.push_back(p.to_double());
  for (const auto& p : v) t.add_segment(p.data(), p.data());
  for (const auto& [a, b] : c.edges) t.add_segment(v[static_cast<std::size_t>(a)].data(), v[static_cast<std::size_t>(b)].data());
  for (const auto& cell : c.cells2)
    for (std::size_t i = 1; i + 1 < cell.size(); ++i)
      t.add_triangle(v[static_cast<std::size_t>(cell[0])].data(), v[static_cast<std::size_t>(cell[i])].data(),
                     v[static_cast<std::size_t>(cell[i + 1])].data());
}

double dist(const std::array<double, 3>& a, const std::array<double, 3>& b) {
  return std::sqrt((a[0] - b[0]) * (a[0] - b[0]) + (a[1] - b[1]) * (a[1] - b[1]) + (a[2] - b[2]) * (a[2] - b[2]));
}

struct Samples {
  std::vector<double> x, y, z;
  void add(double a, double b, double c) {
    x.push_back(a);
    y.push_back(b);
    z.push_back(c);
  }
};

Samples sample(const CellComplex& c, double density) {
  Samples s;
  std::vector<std::array<double, 3>> v;
  for (const auto& p : c.vertices) v.push_back(p.to_double());
  for (const auto& p : v) s.add(p[0], p[1], p[2]);
  for (const auto& [ia, ib] : c.edges) {
    const auto& a = v[static_cast<std::size_t>(ia)];
    const auto& b = v[static_cast<std::size_t>(ib)];
    const int k = std::max(1, static_cast<int>(std::ceil(dist(a, b) * density)));
    for (int i = 1; i < k; ++i) {
      const double t = static_cast<double>(i) / k;
      s.add(a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1]), a[2] + t * (b[2] - a[2]));
    }
  }
  for (const auto& cell : c.cells2)
    for (std::size_t f = 1; f + 1 < cell.size(); ++f) {
      const auto& a = v[static_cast<std::size_t>(cell[0])];
      const auto& b = v[static_cast<std::size_t>(cell[f])];
      const auto& cc = v[static_cast<std::size_t>(cell[f + 1])];
      const double longest = std::max({dist(a, b), dist(b, cc), dist(a, cc)});
      const int k = std::max(1, static_cast<int>(std::ceil(longest * density)));
      for (int i = 0; i <= k; ++i)
        for (int j = 0; i + j <= k; ++j) {
          const double u = static_cast<double>(i) / k;
          const double w = static_cast<double>(j) / k;
          s.add(a[0] + u * (b[0] - a[0]) + w * (cc[0] - a[0]), a[1] + u * (b[1] - a[1]) + w * (cc[1] - a[1]),
                a[2] + u * (b[2] - a[2]) + w * (cc[2] - a[2]));
        }
    }
  return s;
}

double directed(const CellComplex& from, const CellComplex& to, double density) {
  const Samples s = sample(from, density);
  kernels::Targets t;
  add_targets(to, t);
  std::vector<double> d2(s.x.size());
  kernels::min_dist2(t, s.x.data(), s.y.data(), s.z.data(), s.x.size(), d2.data());
  double worst = 0;
  for (double v : d2) worst = std::max(worst, v);
  return std::sqrt(worst);
}

}  // namespace

double hausdorff_distance(const CellComplex& a, const CellComplex& b, double density) {
  if (a.empty() || b.empty()) throw EmptyComplex("Hausdorff distance of an empty complex");
  if (!(density > 0)) throw DegenerateInput("sampling density must be positive");
  return std::max(directed(a, b, density), directed(b, a, density));
}

std::vector<Rational> critical_lambdas(const SymmetricBody& body, const Vec3& x, const Rational& lambda_max) {
  const Rational l0 = lambda_zero(body, x);
  std::set<Rational> out = {l0};
  const auto consider = [&](const Rational& s, const Vec3& probe_at_s_sign, int sign) {
    // s = 1/lambda; probe_at_s_sign is v, the moving point is v + sign * s x.
    if (s.sign() <= 0) return;
    const Rational lambda = s.inverse();
    if (lambda <= l0 || lambda > lambda_max) return;
    if (gauge(body, probe_at_s_sign + x * (s * Rational(sign))) == Rational(1)) out.insert(lambda);
  };
  const auto& an = body.unit_normals();
  for (const auto& v : body.vertices())
    for (const auto& a : an) {
      const Rational ax = dot(a, x);
      if (ax.is_zero()) continue;
      const Rational av = dot(a, v);
      consider((av - Rational(1)) / ax, v, -1);  // gauge(v - s x) = 1
      consider((Rational(1) - av) / ax, v, +1);  // gauge(v + s x) = 1
    }
  return {out.begin(), out.end()};
}

std::vector<std::pair<Rational, Rational>> unstable_intervals(const SymmetricBody& body, const Vec3& x,
                                                              const std::vector<Rational>& criticals) {
  std::vector<std::pair<Rational, Rational>> out;
  for (std::size_t i = 0; i + 1 < criticals.size(); ++i) {
    const Rational& a = criticals[i];
    const Rational& b = criticals[i + 1];
    std::set<std::string> labels;
    for (int q = 1; q <= 3; ++q)
      labels.insert(classify(gamma_complex(body, x, a + (b - a) * Rational(q, 4)).complex).label());
    if (labels.size() > 1) out.emplace_back(a, b);
  }
  return out;
}

std::vector<std::pair<Vec3, Vec3>> meridian(const SymmetricBody& body, const Vec3& x, const Vec3& p) {
  const Vec3 m = cross(x, p);
  if (m.is_zero()) throw CurveDegenerate("point " + p.str() + " lies on span(x)");
  const std::vector<Vec3> poly = longitudinal_curve(body, x, p);
  const auto side = [&](const Vec3& q) { return dot(cross(x, q), m); };
  std::vector<std::pair<Vec3, Vec3>> out;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Vec3& a = poly[i];
    const Vec3& b = poly[(i + 1) % poly.size()];
    const Rational sa = side(a);
    const Rational sb = side(b);
    if (sa.sign() >= 0 && sb.sign() >= 0) {
      if (!(sa.is_zero() && sb.is_zero())) out.emplace_back(a, b);
    } else if (sa.sign() * sb.sign() < 0) {
      const Vec3 c = a + (b - a) * (sa / (sa - sb));
      if (sa.sign() > 0)
        out.emplace_back(a, c);
      else
        out.emplace_back(c, b);
    }
  }
  return out;
}

MeridianCut meridian_cut(const SymmetricBody& body, const Vec3& x, const Rational& lambda, const Vec3& p) {
  require_at_least(body, x, lambda, false);
  const Vec3 d = x / lambda;
  const std::vector<HalfSpace> kd = translated(body.facets(), d);
  const auto on_translate = [&](const Vec3& q) { return gauge(body, q - d) == Rational(1); };
  std::vector<Vec3> hits;
  for (const auto& [a, b] : meridian(body, x, p)) {
    const LineInterval iv = line_polytope_intersection(kd, a, b - a);
    if (iv.empty) continue;
    const Rational lo = max(iv.lo, Rational(0));
    const Rational hi = min(iv.hi, Rational(1));
    if (lo > hi) continue;
    const Vec3 qa = a + (b - a) * lo;
    const Vec3 qb = a + (b - a) * hi;
    if (lo < hi && on_translate((qa + qb) / Rational(2))) {
      hits.push_back(qa);
      hits.push_back(qb);
      continue;
    }
    if (on_translate(qa)) hits.push_back(qa);
    if (on_translate(qb)) hits.push_back(qb);
  }
  MeridianCut cut;
  if (hits.empty()) return cut;
  const auto by_x = [&](const Vec3& u, const Vec3& v) { return dot(u, x) < dot(v, x); };
  cut.found = true;
  cut.lo = *std::min_element(hits.begin(), hits.end(), by_x);
  cut.hi = *std::max_element(hits.begin(), hits.end(), by_x);
  return cut;
}

Vec3 bounding_map(const SymmetricBody& body, const Vec3& x, const Rational& lambda, const Rational& mu, const Vec3& p) {
  require_at_least(body, x, lambda, true);
  if (!(lambda < mu)) throw DegenerateInput("bounding map needs lambda < mu");
  if (gauge(body, p) != Rational(1) || gauge(body, p - x / mu) != Rational(1))
    throw PointNotOnSphere("point " + p.str() + " is not on the parameter sphere at " + mu.str());
  const MeridianCut cut = meridian_cut(body, x, lambda, p);
  if (!cut.found) throw DegenerateInput("meridian misses the parameter sphere");
  if (cut.lo == cut.hi) return cut.lo;
  const Rational t = dot(p - cut.lo, x);
  if (collinear(cut.lo, cut.hi, p) && t.sign() >= 0 && t <= dot(cut.hi - cut.lo, x)) return p;
  return cut.lo;
}

}  // namespace mks
