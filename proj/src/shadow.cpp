#include "mks/shadow.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "mks/errors.hpp"

namespace mks {

std::string to_string(FaceLabel l) {
  switch (l) {
    case FaceLabel::Plus: return "Plus";
    case FaceLabel::Minus: return "Minus";
    case FaceLabel::Shadow: return "Shadow";
  }
  return "Shadow";
}

std::vector<int> ShadowDecomposition::faces_with(FaceLabel l) const {
  std::vector<int> out;
  for (int f = 0; f < static_cast<int>(labels.size()); ++f)
    if (labels[static_cast<std::size_t>(f)] == l) out.push_back(f);
  return out;
}

namespace {

struct SignSummary {
  bool pos = false;
  bool neg = false;
  bool zero = false;
};

SignSummary summarize(const Face& f, const std::vector<int>& facet_sign) {
  SignSummary s;
  for (int a : f.facets) {
    const int sg = facet_sign[static_cast<std::size_t>(a)];
    s.pos |= sg > 0;
    s.neg |= sg < 0;
    s.zero |= sg == 0;
  }
  return s;
}

std::vector<int> boundary_faces(const ShadowDecomposition& d, int side) {
  std::vector<int> out;
  const auto& lat = d.body.lattice();
  for (int f = 0; f < lat.size(); ++f) {
    const SignSummary s = summarize(lat[f], d.facet_sign);
    const bool strict = side > 0 ? s.pos : s.neg;
    const bool other = side > 0 ? (s.neg || s.zero) : (s.pos || s.zero);
    if (strict && other) out.push_back(f);
  }
  return out;
}

}  // namespace

Sharpness sharpness(const ShadowDecomposition& d) {
  Sharpness out;
  const auto& lat = d.body.lattice();
  std::optional<int> witness;
  for (int f : d.shadow_faces) {
    const SignSummary s = summarize(lat[f], d.facet_sign);
    if (s.pos && s.neg) {
      out.sharp_faces.push_back(f);
    } else if (!witness || lat[f].dim > lat[*witness].dim) {
      witness = f;
    }
  }
  out.sharp = out.sharp_faces.size() == d.shadow_faces.size();
  out.sharp_subcomplex = complex_from_faces(d.body.vertices(), lat, out.sharp_faces);
  if (witness) {
    const Vec3 b = d.body.barycenter(*witness);
    const LineInterval iv = line_body_intersection(d.body, b, d.direction);
    out.witness = NonSharpWitness{*witness, b + d.direction * iv.lo, b + d.direction * iv.hi};
  }
  return out;
}

CellComplex positive_closure_boundary(const ShadowDecomposition& d) {
  return complex_from_faces(d.body.vertices(), d.body.lattice(), boundary_faces(d, +1));
}

ShadowDecomposition decompose(const SymmetricBody& body, const Vec3& x) {
  if (x.is_zero()) throw ZeroDirection("shadow direction is zero");
  ShadowDecomposition d{.body = body, .direction = x};
  for (const auto& h : body.facets()) d.facet_sign.push_back(dot(h.normal, x).sign());
  const auto& lat = body.lattice();
  d.labels.resize(static_cast<std::size_t>(lat.size()));
  for (int f = 0; f < lat.size(); ++f) {
    const SignSummary s = summarize(lat[f], d.facet_sign);
    FaceLabel l = FaceLabel::Shadow;
    if (s.pos && !s.neg && !s.zero) l = FaceLabel::Plus;
    if (s.neg && !s.pos && !s.zero) l = FaceLabel::Minus;
    d.labels[static_cast<std::size_t>(f)] = l;
    if (l == FaceLabel::Shadow) d.shadow_faces.push_back(f);
  }
  d.shadow_complex = complex_from_faces(body.vertices(), lat, d.shadow_faces);

  Sharpness sh = sharpness(d);
  d.sharp = sh.sharp;
  d.sharp_faces = std::move(sh.sharp_faces);
  d.sharp_subcomplex = std::move(sh.sharp_subcomplex);
  d.nonsharp_witness = std::move(sh.witness);

  d.plus_boundary_faces = boundary_faces(d, +1);
  d.minus_boundary_faces = boundary_faces(d, -1);
  d.plus_boundary = complex_from_faces(body.vertices(), lat, d.plus_boundary_faces);
  d.minus_boundary = complex_from_faces(body.vertices(), lat, d.minus_boundary_faces);
  d.poles = poles(body, x);
  return d;
}

int separation_components(const SymmetricBody& body, const std::vector<int>& removed_faces) {
  const auto& lat = body.lattice();
  std::vector<char> removed(static_cast<std::size_t>(lat.size()), 0);
  for (int f : removed_faces) removed[static_cast<std::size_t>(f)] = 1;
  std::vector<int> comp(static_cast<std::size_t>(lat.size()), -1);
  int count = 0;
  for (int start = 0; start < lat.size(); ++start) {
    if (removed[static_cast<std::size_t>(start)] || comp[static_cast<std::size_t>(start)] >= 0) continue;
    std::vector<int> stack = {start};
    comp[static_cast<std::size_t>(start)] = count;
    while (!stack.empty()) {
      const int f = stack.back();
      stack.pop_back();
      for (const auto* nbrs : {&lat[f].sub, &lat[f].super})
        for (int g : *nbrs)
          if (!removed[static_cast<std::size_t>(g)] && comp[static_cast<std::size_t>(g)] < 0) {
            comp[static_cast<std::size_t>(g)] = count;
            stack.push_back(g);
          }
    }
    ++count;
  }
  return count;
}

int separation_components(const SymmetricBody& body, const CellComplex& removed) {
  const CanonicalCells cells = canonical_cells(removed);
  const auto& lat = body.lattice();
  std::vector<int> ids;
  for (int f = 0; f < lat.size(); ++f) {
    std::vector<Vec3> key;
    for (int v : lat[f].vertices) key.push_back(body.vertex(v));
    std::sort(key.begin(), key.end());
    const bool hit = lat[f].dim == 0   ? cells.vertices.count(key[0]) > 0
                     : lat[f].dim == 1 ? cells.edges.count(key) > 0
                                       : cells.cells2.count(key) > 0;
    if (hit) ids.push_back(f);
  }
  return separation_components(body, ids);
}

bool projection_covers_boundary(const SymmetricBody& body, const Vec3& x, const std::vector<int>& faces) {
  if (x.is_zero()) throw ZeroDirection("projection direction is zero");
  // Rational coordinates on x-perp: (p.u, p.v) with u, v orthogonal to x.
  int axis = 0;
  for (int i = 1; i < 3; ++i)
    if (x[i].abs() < x[axis].abs()) axis = i;
  Vec3 e;
  e[axis] = 1;
  const Vec3 u = cross(x, e);
  const Vec3 v = cross(x, u);
  const auto to2d = [&](const Vec3& p) { return Vec3(dot(p, u), dot(p, v), 0); };

  std::vector<Vec3> proj;
  for (const auto& p : body.vertices()) proj.push_back(to2d(p));
  const std::vector<Vec3> hull = planar_hull(proj, Vec3(0, 0, 1));
  const std::size_t h = hull.size();

  // Parameter of q along hull edge i, or nullopt when q is off that edge.
  const auto on_edge = [&](std::size_t i, const Vec3& q) -> std::optional<Rational> {
    const Vec3& a = hull[i];
    const Vec3& b = hull[(i + 1) % h];
    if (!collinear(a, b, q)) return std::nullopt;
    const Rational t = dot(q - a, b - a) / dot(b - a, b - a);
    if (t.sign() < 0 || t > Rational(1)) return std::nullopt;
    return t;
  };

  const auto& lat = body.lattice();
  const std::vector<int> closed = face_closure(lat, faces);
  std::vector<std::vector<std::pair<Rational, Rational>>> covered(h);
  for (int f : closed) {
    const Face& fc = lat[f];
    std::vector<Vec3> img;
    for (int vi : fc.vertices) img.push_back(to2d(body.vertex(vi)));
    // The image must sit on a single hull edge (faces project to points or
    // segments on the boundary).
    bool placed = false;
    for (std::size_t i = 0; i < h && !placed; ++i) {
      std::vector<Rational> ts;
      for (const auto& q : img) {
        auto t = on_edge(i, q);
        if (!t) break;
        ts.push_back(*t);
      }
      if (ts.size() != img.size()) continue;
      placed = true;
      const auto [lo, hi] = std::minmax_element(ts.begin(), ts.end());
      covered[i].emplace_back(*lo, *hi);
    }
    if (!placed) return false;
  }
  for (std::size_t i = 0; i < h; ++i) {
    auto& iv = covered[i];
    std::sort(iv.begin(), iv.end());
    Rational reach(0);
    bool started = false;
    for (const auto& [lo, hi] : iv) {
      if (lo > reach) break;
      started = true;
      reach = max(reach, hi);
    }
    if (!started || reach != Rational(1)) return false;
  }
  return true;
}

bool projection_check(const ShadowDecomposition& d) { return projection_covers_boundary(d.body, d.direction, d.shadow_faces); }

FaceLabel pointwise_label(const SymmetricBody& body, const Vec3& x, const Vec3& y) {
  // tau: half of the smallest positive slack-to-rate ratio over facets that
  // are not tight at y, so y -+ tau x crosses no inactive facet.
  std::optional<Rational> tau;
  const auto& an = body.unit_normals();
  for (const auto& a : an) {
    const Rational slack = Rational(1) - dot(a, y);
    const Rational rate = dot(a, x).abs();
    if (slack.sign() > 0 && rate.sign() > 0) {
      Rational t = slack / rate;
      if (!tau || t < *tau) tau = std::move(t);
    }
  }
  const Rational step = tau ? *tau / Rational(2) : Rational(1);
  if (gauge(body, y - x * step) < Rational(1)) return FaceLabel::Plus;
  if (gauge(body, y + x * step) < Rational(1)) return FaceLabel::Minus;
  return FaceLabel::Shadow;
}

int antipodal_face(const SymmetricBody& body, int face_id) {
  const auto& lat = body.lattice();
  std::vector<int> key;
  for (int v : lat[face_id].vertices) key.push_back(body.opposite_vertex(v));
  std::sort(key.begin(), key.end());
  const int dim = lat[face_id].dim;
  for (int f = 0; f < lat.size(); ++f)
    if (lat[f].dim == dim && lat[f].vertices == key) return f;
  return -1;
}

}  // namespace mks
