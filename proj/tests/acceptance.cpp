// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "mks/bisector.hpp"
#include "mks/body.hpp"
#include "mks/shadow.hpp"
#include "mks/spheres.hpp"
#include "mks/topology.hpp"
#include "mks/verify.hpp"
#include "oracle/lp_oracle.hpp"

using namespace mks;

namespace {

// Time limits in seconds.
constexpr double kLimitOctahedron = 1.0;
constexpr double kLimitExample = 10.0;
constexpr double kLimitDegenerate = 3.0;  // three cases at < 1 s each
constexpr double kLimitLambdaZero = 60.0;
constexpr double kLimitLens = 60.0;
constexpr double kLimitHausdorff = 120.0;
constexpr double kLimitSuite = 300.0;
constexpr double kLimitBounding = 60.0;
constexpr double kLimitVerdict = 10.0;

// Hausdorff convergence tolerances.
constexpr double kMonotoneSlack = 1e-3;
constexpr double kFinalFraction = 1e-2;

constexpr int kOracleBits = 40;

struct Outcome {
  bool ok = true;
  std::ostringstream notes;
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      if (!ok) notes << "; ";
      ok = false;
      notes << what;
    }
  }
};

int failures = 0;

void run(int id, const std::string& title, double limit, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.expect(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.2fs", secs);
  o.expect(secs < limit, "runtime " + std::string(timing) + " over limit");
  if (!o.ok) ++failures;
  std::printf("%s %d %s (%s)%s%s\n", o.ok ? "PASS" : "FAIL", id, title.c_str(), timing, o.ok ? "" : ": ", o.notes.str().c_str());
  std::fflush(stdout);
}

std::string label_at(const SymmetricBody& k, const Vec3& x, const Rational& lambda) {
  return classify(gamma_complex(k, x, lambda).complex).label();
}

std::set<Vec3> shadow_facet_normals(const ShadowDecomposition& d) {
  std::set<Vec3> out;
  const FaceLattice& lat = d.body.lattice();
  for (int f = 0; f < lat.num_facets; ++f)
    if (d.labels[static_cast<std::size_t>(lat.facet_offset() + f)] == FaceLabel::Shadow)
      out.insert(d.body.facets()[static_cast<std::size_t>(f)].normal);
  return out;
}

void criterion_octahedron(Outcome& o) {
  const SymmetricBody oct = builtin("octahedron");
  const ShadowDecomposition d = decompose(oct, Vec3(1, -1, 0));
  const std::set<Vec3> want = {Vec3(1, 1, 1), Vec3(1, 1, -1), Vec3(-1, -1, 1), Vec3(-1, -1, -1)};
  o.expect(shadow_facet_normals(d) == want, "shadow facets differ");
  std::vector<int> facets;
  for (int f = 0; f < oct.lattice().num_facets; ++f)
    if (want.count(oct.facets()[static_cast<std::size_t>(f)].normal)) facets.push_back(oct.lattice().facet_offset() + f);
  o.expect(same_cells(d.shadow_complex, complex_from_faces(oct.vertices(), oct.lattice(), facets)), "shadow complex is not the closure of the four facets");
  o.expect(!d.sharp, "reported sharp");
  o.expect(vertex_set(d.sharp_subcomplex) == std::set<Vec3>{Vec3(0, 0, 1), Vec3(0, 0, -1)}, "sharp point set differs");
  o.expect(d.sharp_subcomplex.edges.empty(), "sharp set has edges");
  const ManifoldStatus m = manifold_check(d.shadow_complex);
  o.expect(m.kind == ManifoldKind::NonManifold, "manifold_check passed");
  o.expect(!m.witnesses.empty() && m.witnesses.front().size() == 1, "witness is not a vertex");
  o.expect(m.reason == "vertex link has 2 components", "reason: " + m.reason);
}

void criterion_example(Outcome& o) {
  const SymmetricBody k = builtin("example-sec3");
  const Vec3 x(4, 0, 0);
  o.expect(lambda_zero(k, x) == Rational(1), "lambda_0 = " + lambda_zero(k, x).str());
  const auto want = [&](const Rational& l, const std::string& label) {
    const std::string got = label_at(k, x, l);
    o.expect(got == label, "gamma(" + l.str() + ") = " + got + ", expected " + label);
  };
  want(Rational(1), "Segment");
  want(Rational(9, 8), "Circle");
  want(Rational(5, 4), "Circle");
  want(Rational(11, 8), "NonManifold");
  want(Rational(3, 2), "NonManifold");
  want(Rational(2), "Annulus");
  want(Rational(4), "Annulus");
  const std::vector<Rational> crit = critical_lambdas(k, x, Rational(8));
  const std::set<Rational> cs(crit.begin(), crit.end());
  for (const Rational& c : {Rational(1), Rational(5, 4), Rational(3, 2)}) o.expect(cs.count(c) == 1, "critical set lacks " + c.str());
  const TopologyReport s = classify(decompose(k, x).shadow_complex);
  o.expect(s.classification == Classification::Annulus, "shadow is " + s.label());
  o.expect(decompose(k, x).shadow_complex.cells2.size() == 6, "shadow 2-cell count");
  o.expect(s.euler == 0, "shadow Euler characteristic " + std::to_string(s.euler));
}

void criterion_degenerate(Outcome& o) {
  const auto time_one = [&](const std::string& name, const Vec3& x, const std::string& want) {
    const auto start = std::chrono::steady_clock::now();
    const SymmetricBody b = builtin(name);
    const ParameterSphere s = gamma_complex(b, x, lambda_zero(b, x));
    const std::string got = classify(s.complex).label();
    o.expect(s.degenerate, name + " slice not flagged degenerate");
    o.expect(got == want, name + ": " + got + ", expected " + want);
    o.expect(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() < 1.0, name + " over 1 s");
  };
  time_one("cube", Vec3(2, 0, 0), "DegenerateCell(2)");
  time_one("example-sec3", Vec3(4, 0, 0), "Segment");
  time_one("octahedron", Vec3(2, 0, 0), "Point");
}

void criterion_lambda_zero(Outcome& o) {
  for (int i = 0; i < 100; ++i) {
    const SymmetricBody b = random_symmetric(10000 + static_cast<std::uint64_t>(i), 4 + i % 6);
    const Vec3 x = suite_direction(4, i);
    const Rational l0 = lambda_zero(b, x);
    Rational closed = dot(b.unit_normals().front(), x);
    for (const Vec3& a : b.unit_normals()) closed = max(closed, dot(a, x));
    closed /= Rational(2);
    o.expect(l0 == closed, "closed form mismatch on body " + std::to_string(i));
    const oracle::Bracket br = oracle::lambda_zero_bracket(b.vertices(), x, kOracleBits);
    o.expect(br.hi - br.lo <= Rational::pow2(-kOracleBits), "bracket too wide");
    o.expect(br.lo <= l0 && l0 <= br.hi, "oracle bracket misses lambda_0 on body " + std::to_string(i));
  }
}

void criterion_lens(Outcome& o) {
  const auto check = [&](const SymmetricBody& b, const Vec3& x, const Rational& lambda, const std::string& tag) {
    const ShadowDecomposition d = gamma_as_shadow_oracle(b, x, lambda);
    const CellComplex oracle = translate(d.shadow_complex, x / (lambda * Rational(2)));
    o.expect(same_cells(gamma_complex(b, x, lambda).complex, oracle), tag + " differs at lambda " + lambda.str());
  };
  for (int i = 0; i < 20; ++i) {
    const SymmetricBody b = random_symmetric(20000 + static_cast<std::uint64_t>(i), 4 + i % 6);
    const Vec3 x = suite_direction(5, i);
    check(b, x, lambda_zero(b, x) * Rational(5 + i % 7, 4), "random body " + std::to_string(i));
  }
  for (const Rational& l : {Rational(3, 2), Rational(2), Rational(5)}) check(builtin("cube"), Vec3(2, 0, 0), l, "cube");
  for (const Rational& l : {Rational(9, 8), Rational(3, 2), Rational(3), Rational(4)}) check(builtin("example-sec3"), Vec3(4, 0, 0), l, "example body");
}

void criterion_hausdorff(Outcome& o) {
  int bad_final = 0;
  double worst = 0;
  for (int i = 0; i < 20; ++i) {
    const SymmetricBody b = random_symmetric(30000 + static_cast<std::uint64_t>(i), 4 + i % 6);
    const Vec3 x = suite_direction(6, i);
    const Rational l0 = lambda_zero(b, x);
    const CellComplex s = decompose(b, x).shadow_complex;
    double prev = 0;
    bool first = true;
    double last = 0;
    for (int f : {2, 4, 8, 16, 32}) {
      const double h = hausdorff_distance(gamma_complex(b, x, l0 * Rational(f)).complex, s);
      if (!first) o.expect(h <= prev + kMonotoneSlack, "increase on body " + std::to_string(i) + " at " + std::to_string(f) + " lambda_0");
      first = false;
      prev = h;
      last = h;
    }
    const double ratio = last / b.diameter();
    worst = std::max(worst, ratio);
    if (ratio >= kFinalFraction) ++bad_final;
  }
  std::ostringstream msg;
  msg << bad_final << "/20 bodies end at or above " << kFinalFraction << " diam (worst " << worst << " diam)";
  o.expect(bad_final == 0, msg.str());
}

void criterion_suite(Outcome& o) {
  const SuiteResult r = verify_theorems(1, 100);
  o.expect(r.bodies == 100, "ran " + std::to_string(r.bodies) + " bodies");
  for (const Violation& v : r.violations) o.expect(false, v.property + " on " + v.body + " x=" + v.direction + ": " + v.detail);
  for (const char* p : {"label_partition", "shadow_closed", "shadow_connected", "shadow_dimension", "cap_boundary_subset",
                        "cap_boundary_connected", "cap_boundary_pure", "cap_boundary_separates", "projection", "central_symmetry"})
    o.expect(r.checks.count(p) && r.checks.at(p) > 0, std::string("property not exercised: ") + p);
}

std::vector<Vec3> sample_points(const CellComplex& c, const Vec3& x, std::size_t limit) {
  std::vector<Vec3> pts;
  const auto push = [&](const Vec3& p) {
    if (pts.size() < limit && !project_along(x, p).is_zero()) pts.push_back(p);
  };
  for (const Vec3& v : c.vertices) push(v);
  for (const auto& [a, b] : c.edges) push((c.vertices[static_cast<std::size_t>(a)] + c.vertices[static_cast<std::size_t>(b)]) / Rational(2));
  for (const auto& [a, b] : c.edges)
    push((c.vertices[static_cast<std::size_t>(a)] + c.vertices[static_cast<std::size_t>(b)] * Rational(3)) / Rational(4));
  for (const auto& cell : c.cells2) {
    Vec3 s;
    for (int v : cell) s += c.vertices[static_cast<std::size_t>(v)];
    push(s / Rational(static_cast<long>(cell.size())));
  }
  return pts;
}

void criterion_bounding(Outcome& o) {
  std::vector<std::pair<SymmetricBody, Vec3>> cases;
  cases.emplace_back(builtin("example-sec3"), Vec3(4, 0, 0));
  for (int i = 0; i < 10; ++i) cases.emplace_back(random_symmetric(40000 + static_cast<std::uint64_t>(i), 5 + i % 4), suite_direction(8, i));
  int tested = 0;
  for (std::size_t c = 0; c < cases.size(); ++c) {
    const auto& [b, x] = cases[c];
    const Rational l0 = lambda_zero(b, x);
    const Rational lam = l0 * Rational(9, 8);
    const Rational mu = l0 * Rational(2);
    const Rational nu = l0 * Rational(5);
    const std::string tag = "case " + std::to_string(c);
    for (const Vec3& p : sample_points(gamma_complex(b, x, nu).complex, x, 50)) {
      ++tested;
      const Vec3 q = bounding_map(b, x, lam, nu, p);
      o.expect(gauge(b, q) == Rational(1) && gauge(b, q - x / lam) == Rational(1), tag + ": image off target");
      o.expect(bounding_map(b, x, lam, mu, bounding_map(b, x, mu, nu, p)) == q, tag + ": composition law fails");
    }
    for (const Vec3& p : sample_points(gamma_complex(b, x, mu).complex, x, 50)) {
      if (gauge(b, p - x / lam) != Rational(1)) continue;
      ++tested;
      o.expect(bounding_map(b, x, lam, mu, p) == p, tag + ": not identity on overlap");
    }
  }
  o.expect(tested >= 50 * 11, "only " + std::to_string(tested) + " points sampled");
}

void criterion_verdict(Outcome& o) {
  const BisectorVerdict sec = manifold_verdict(builtin("example-sec3"), Vec3(4, 0, 0), Rational(64));
  o.expect(!sec.manifold, "example body reported manifold");
  const bool cites = sec.failing_interval && sec.failing_interval->first == Rational(5, 4) && sec.failing_interval->second == Rational(3, 2);
  o.expect(cites, "example body cites " + (sec.failing_interval ? "(" + sec.failing_interval->first.str() + "," + sec.failing_interval->second.str() + "]" : std::string("nothing")) +
                      ", expected (5/4,3/2]");
  o.expect(!manifold_verdict(builtin("cube"), Vec3(2, 0, 0), Rational(64)).manifold, "cube reported manifold");
  const SymmetricBody oct = builtin("octahedron");
  const Vec3 x(1, Rational(1, 3), Rational(1, 7));
  const BisectorVerdict ok = manifold_verdict(oct, x, lambda_zero(oct, x) * Rational(64));
  o.expect(ok.manifold, "generic octahedron reported non-manifold: " + ok.reason);
}

}  // namespace

int main() {
  run(1, "octahedron shadow boundary", kLimitOctahedron, criterion_octahedron);
  run(2, "example body reproduction", kLimitExample, criterion_example);
  run(3, "degeneracy spectrum", kLimitDegenerate, criterion_degenerate);
  run(4, "lambda_0 closed form vs LP oracle", kLimitLambdaZero, criterion_lambda_zero);
  run(5, "gamma vs lens shadow oracle", kLimitLens, criterion_lens);
  run(6, "Hausdorff convergence", kLimitHausdorff, criterion_hausdorff);
  run(7, "property suite on 100 bodies", kLimitSuite, criterion_suite);
  run(8, "bounding map laws", kLimitBounding, criterion_bounding);
  run(9, "bisector manifold verdicts", kLimitVerdict, criterion_verdict);
  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
