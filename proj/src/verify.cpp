#include "mks/verify.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "mks/bisector.hpp"
#include "mks/shadow.hpp"
#include "mks/spheres.hpp"
#include "mks/topology.hpp"

namespace mks {

Vec3 suite_direction(std::uint64_t seed, int index) {
  std::mt19937_64 rng(seed * 7919u + static_cast<std::uint64_t>(index));
  for (;;) {
    Vec3 x(static_cast<long>(rng() % 5) - 2, static_cast<long>(rng() % 5) - 2, static_cast<long>(rng() % 5) - 2);
    if (!x.is_zero()) return x;
  }
}

namespace {

FaceLabel mirror(FaceLabel l) {
  if (l == FaceLabel::Plus) return FaceLabel::Minus;
  if (l == FaceLabel::Minus) return FaceLabel::Plus;
  return FaceLabel::Shadow;
}

struct Recorder {
  const SymmetricBody& body;
  const Vec3& x;
  SuiteResult& out;
  void check(const std::string& property, bool ok, const std::string& detail = "") {
    ++out.checks[property];
    if (!ok) out.violations.push_back(Violation{body.name(), x.str(), property, detail});
  }
  void note(const std::string& property, const std::string& detail) {
    out.findings.push_back(Violation{body.name(), x.str(), property, detail});
  }
};

bool subset(const std::vector<int>& a, const std::vector<int>& b) {
  const std::set<int> sb(b.begin(), b.end());
  return std::all_of(a.begin(), a.end(), [&](int v) { return sb.count(v) > 0; });
}

bool pure_one_dimensional(const CellComplex& c) {
  if (c.max_dim() != 1) return false;
  std::vector<char> used(c.vertices.size(), 0);
  for (const auto& [a, b] : c.edges) used[static_cast<std::size_t>(a)] = used[static_cast<std::size_t>(b)] = 1;
  return std::all_of(used.begin(), used.end(), [](char u) { return u != 0; });
}

}  // namespace

void check_shadow_properties(const SymmetricBody& body, const Vec3& x, SuiteResult& out) {
  Recorder rec{body, x, out};
  const ShadowDecomposition d = decompose(body, x);
  const auto& lat = body.lattice();

  bool partition = true;
  std::string first_bad;
  for (int f = 0; f < lat.size() && partition; ++f) {
    const FaceLabel oracle = pointwise_label(body, x, body.barycenter(f));
    if (oracle != d.labels[static_cast<std::size_t>(f)]) {
      partition = false;
      first_bad = "face " + std::to_string(f) + ": " + to_string(d.labels[static_cast<std::size_t>(f)]) + " vs pointwise " +
                  to_string(oracle);
    }
  }
  rec.check("label_partition", partition, first_bad);

  rec.check("shadow_closed", face_closure(lat, d.shadow_faces) == d.shadow_faces);
  const TopologyReport st = classify(d.shadow_complex);
  rec.check("shadow_connected", st.components == 1, std::to_string(st.components) + " components");
  rec.check("shadow_dimension", st.max_dim >= 1, "max_dim " + std::to_string(st.max_dim));

  rec.check("cap_boundary_subset", subset(d.plus_boundary_faces, d.shadow_faces));
  rec.check("cap_boundary_connected", connected_components(d.plus_boundary) == 1);
  rec.check("cap_boundary_pure", pure_one_dimensional(d.plus_boundary));
  const int sep = separation_components(body, d.plus_boundary_faces);
  rec.check("cap_boundary_separates", sep >= 2, std::to_string(sep) + " components");

  rec.check("projection", projection_check(d));

  bool symmetric = true;
  for (int f = 0; f < lat.size() && symmetric; ++f) {
    const int g = antipodal_face(body, f);
    symmetric = g >= 0 && d.labels[static_cast<std::size_t>(g)] == mirror(d.labels[static_cast<std::size_t>(f)]);
  }
  rec.check("central_symmetry", symmetric);

  const ShadowDecomposition flipped = decompose(body, -x);
  bool swap = true;
  for (int f = 0; f < lat.size() && swap; ++f)
    swap = flipped.labels[static_cast<std::size_t>(f)] == mirror(d.labels[static_cast<std::size_t>(f)]);
  rec.check("direction_reversal", swap);

  if (st.manifold.is(ManifoldKind::Manifold, 1)) rec.check("manifold_is_circle", st.classification == Classification::Circle, st.label());
  if (st.manifold.is(ManifoldKind::ManifoldWithBoundary, 2)) {
    bool ok = st.classification == Classification::Annulus;
    if (ok) {
      std::set<std::set<Vec3>> circles;
      for (const auto& comp : st.boundary_components) {
        std::set<Vec3> s;
        for (int v : comp) s.insert(d.shadow_complex.vertices[static_cast<std::size_t>(v)]);
        circles.insert(std::move(s));
      }
      const std::set<std::set<Vec3>> expected = {vertex_set(d.plus_boundary), vertex_set(d.minus_boundary)};
      ok = circles == expected;
      std::size_t total = 0;
      for (const auto& c : st.boundary_components) total += c.size();
      ok = ok && total == vertex_set(d.plus_boundary).size() + vertex_set(d.minus_boundary).size();
    }
    rec.check("annulus_boundaries", ok, st.label());
  }
}

void check_sphere_properties(const SymmetricBody& body, const Vec3& x, SuiteResult& out) {
  Recorder rec{body, x, out};
  const Rational l0 = lambda_zero(body, x);
  const Rational probe = l0 * Rational(3, 2);
  const ParameterSphere g = gamma_complex(body, x, probe);
  const ShadowDecomposition lens = gamma_as_shadow_oracle(body, x, probe);
  rec.check("gamma_lens_oracle", same_cells(g.complex, translate(lens.shadow_complex, x / probe / Rational(2))));

  const BisectorVerdict v = manifold_verdict(body, x, l0 * Rational(64));
  const Classification shadow = classify(decompose(body, x).shadow_complex).classification;
  const bool some_annulus = std::any_of(v.slice_reports.begin(), v.slice_reports.end(),
                                        [](const SliceReport& r) { return r.classification == "Annulus"; });
  rec.check("sphere_annulus_iff", (shadow == Classification::Annulus) == some_annulus,
            "shadow " + to_string(shadow) + ", annulus probe " + (some_annulus ? "present" : "absent"));
  if (shadow == Classification::Circle && !v.manifold) rec.note("sphere_circle_converse", v.reason);
}

SuiteResult verify_theorems(std::uint64_t seed, int count, bool spheres) {
  SuiteResult out;
  for (int i = 0; i < count; ++i) {
    const SymmetricBody body = random_symmetric(seed * 1000003u + static_cast<std::uint64_t>(i), 4 + i % 6);
    const Vec3 x = suite_direction(seed, i);
    check_shadow_properties(body, x, out);
    if (spheres) check_sphere_properties(body, x, out);
    ++out.bodies;
  }
  return out;
}

}  // namespace mks
