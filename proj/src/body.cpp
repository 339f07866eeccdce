#include "mks/body.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "mks/errors.hpp"

namespace mks {

SymmetricBody::SymmetricBody(std::string name, Polytope poly) : name_(std::move(name)), poly_(std::move(poly)) {
  for (const auto& h : poly_.facets) {
    if (h.offset.sign() <= 0) throw OriginNotInterior("origin is not interior to the body");
    unit_normals_.push_back(h.normal / h.offset);
  }
  const auto& V = poly_.vertices;  // sorted by construction
  for (const auto& v : V) {
    const auto it = std::lower_bound(V.begin(), V.end(), -v);
    if (it == V.end() || *it != -v) throw NotSymmetric("vertex " + v.str() + " has no antipodal vertex");
    opposite_vertex_.push_back(static_cast<int>(it - V.begin()));
  }
  const auto& Fs = poly_.facets;
  for (const auto& h : Fs) {
    const Vec3 n = -h.normal;
    const auto it = std::find_if(Fs.begin(), Fs.end(), [&](const HalfSpace& g) { return g.normal == n; });
    if (it == Fs.end() || it->offset != h.offset) throw NotSymmetric("facet without antipodal partner");
    opposite_facet_.push_back(static_cast<int>(it - Fs.begin()));
  }
}

Vec3 SymmetricBody::barycenter(int face_id) const {
  const auto& f = lattice()[face_id];
  Vec3 s;
  for (int v : f.vertices) s += vertex(v);
  return s / Rational(static_cast<long>(f.vertices.size()));
}

double SymmetricBody::diameter() const {
  double best = 0.0;
  for (const auto& a : vertices()) {
    const auto da = a.to_double();
    for (const auto& b : vertices()) {
      const auto db = b.to_double();
      const double d = std::hypot(da[0] - db[0], da[1] - db[1], da[2] - db[2]);
      best = std::max(best, d);
    }
  }
  return best;
}

Rational gauge(const SymmetricBody& body, const Vec3& p) {
  Rational best(0);
  for (const auto& a : body.unit_normals()) {
    Rational v = dot(a, p);
    if (v > best) best = std::move(v);
  }
  return best;
}

bool contains(const SymmetricBody& body, const Vec3& p) { return gauge(body, p) <= Rational(1); }
bool on_boundary(const SymmetricBody& body, const Vec3& p) { return gauge(body, p) == Rational(1); }

LineInterval line_body_intersection(const SymmetricBody& body, const Vec3& p, const Vec3& dir) {
  return line_polytope_intersection(body.facets(), p, dir);
}

SymmetricBody build_symmetric(const std::vector<Vec3>& points, bool symmetrize, std::string name) {
  if (points.empty()) throw DegenerateInput("no points");
  std::vector<Vec3> pts = points;
  if (symmetrize)
    for (const auto& p : points) pts.push_back(-p);
  Polytope poly = hull_and_lattice(pts);
  return SymmetricBody(std::move(name), std::move(poly));
}

SymmetricBody random_symmetric(std::uint64_t seed, int pairs) {
  if (pairs < 4) throw DegenerateInput("random_symmetric needs at least four pairs");
  std::mt19937_64 rng(seed);
  // Grid (1/6)Z on [-1,1]; raw engine output keeps the stream portable.
  const auto coord = [&] { return Rational(static_cast<long>(rng() % 13) - 6, 6); };
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<Vec3> pts;
    for (int i = 0; i < pairs; ++i) {
      Vec3 p(coord(), coord(), coord());
      if (!p.is_zero()) pts.push_back(p);
    }
    try {
      return build_symmetric(pts, true, "random(" + std::to_string(seed) + "," + std::to_string(pairs) + ")");
    } catch (const DegenerateInput&) {
    }
  }
  throw DegenerateInput("random_symmetric: no full-dimensional sample");
}

PolePair poles(const SymmetricBody& body, const Vec3& x) {
  if (x.is_zero()) throw ZeroDirection("pole direction is zero");
  const Vec3 p = x / gauge(body, x);
  return {p, -p};
}

bool on_polygon_boundary(const std::vector<Vec3>& polygon, const Vec3& q) {
  const std::size_t n = polygon.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec3& a = polygon[i];
    const Vec3& b = polygon[(i + 1) % n];
    if (!collinear(a, b, q)) continue;
    const Rational t = dot(q - a, b - a);
    if (t.sign() >= 0 && t <= dot(b - a, b - a)) return true;
  }
  return false;
}

std::vector<Vec3> longitudinal_curve(const SymmetricBody& body, const Vec3& x, const Vec3& p) {
  if (x.is_zero()) throw ZeroDirection("longitudinal curve direction is zero");
  const Vec3 m = cross(x, p);
  if (m.is_zero()) throw CollinearPoint("point " + p.str() + " lies on span(x)");
  std::vector<Vec3> pts;
  std::vector<Rational> side;
  side.reserve(body.vertices().size());
  for (const auto& v : body.vertices()) {
    side.push_back(dot(m, v));
    if (side.back().is_zero()) pts.push_back(v);
  }
  const auto& lat = body.lattice();
  for (int e = 0; e < lat.num_edges; ++e) {
    const auto& ev = lat.edge(e).vertices;
    const Rational& su = side[static_cast<std::size_t>(ev[0])];
    const Rational& sw = side[static_cast<std::size_t>(ev[1])];
    if (su.sign() * sw.sign() < 0) {
      const Vec3& u = body.vertex(ev[0]);
      const Vec3& w = body.vertex(ev[1]);
      pts.push_back(u + (w - u) * (su / (su - sw)));
    }
  }
  return planar_hull(pts, m);
}

}  // namespace mks
