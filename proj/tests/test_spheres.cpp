#include <doctest.h>

#include <cmath>
#include <set>

#include "mks/body.hpp"
#include "mks/errors.hpp"
#include "mks/shadow.hpp"
#include "mks/spheres.hpp"
#include "mks/topology.hpp"
#include "oracle/lp_oracle.hpp"

using namespace mks;

namespace {

CellComplex lens_oracle(const SymmetricBody& b, const Vec3& x, const Rational& lambda) {
  const ShadowDecomposition d = gamma_as_shadow_oracle(b, x, lambda);
  return translate(d.shadow_complex, x / (lambda * Rational(2)));
}

CellComplex segment(const Vec3& a, const Vec3& b) {
  CellComplex c;
  c.vertices = {a, b};
  c.edges = {{0, 1}};
  return c;
}

}  // namespace

TEST_CASE("lambda_zero") {
  CHECK(lambda_zero(builtin("cube"), Vec3(2, 0, 0)) == Rational(1));
  CHECK(lambda_zero(builtin("example-sec3"), Vec3(4, 0, 0)) == Rational(1));
  CHECK(lambda_zero(builtin("octahedron"), Vec3(2, 0, 0)) == Rational(1));
  CHECK_THROWS_AS(lambda_zero(builtin("cube"), Vec3()), ZeroDirection);

  const oracle::Bracket br = oracle::lambda_zero_bracket(builtin("cube").vertices(), Vec3(2, 0, 0));
  CHECK(br.lo < Rational(1));
  CHECK(Rational(1) <= br.hi);

  for (int i = 0; i < 10; ++i) {
    const SymmetricBody b = random_symmetric(5000 + static_cast<std::uint64_t>(i), 5);
    const Vec3 x(i % 3 + 1, -1, i % 2);
    const Rational l0 = lambda_zero(b, x);
    CHECK(lambda_zero(b, x * Rational(3)) == l0 * Rational(3));
    const oracle::Bracket o = oracle::lambda_zero_bracket(b.vertices(), x, 30);
    CHECK(o.lo <= l0);
    CHECK(l0 <= o.hi);
  }
}

TEST_CASE("gamma_examples") {
  const ParameterSphere cube1 = gamma_complex(builtin("cube"), Vec3(2, 0, 0), Rational(1));
  CHECK(cube1.degenerate);
  CHECK(classify(cube1.complex).label() == "DegenerateCell(2)");
  CHECK(vertex_set(cube1.complex) == std::set<Vec3>{Vec3(1, 1, 1), Vec3(1, 1, -1), Vec3(1, -1, 1), Vec3(1, -1, -1)});

  const ParameterSphere oct = gamma_complex(builtin("octahedron"), Vec3(2, 0, 0), Rational(1));
  CHECK(classify(oct.complex).classification == Classification::Point);
  CHECK(oct.complex.vertices.front() == Vec3(1, 0, 0));

  const ParameterSphere sec = gamma_complex(builtin("example-sec3"), Vec3(4, 0, 0), Rational(1));
  CHECK(classify(sec.complex).classification == Classification::Segment);
  CHECK(vertex_set(sec.complex) == std::set<Vec3>{Vec3(2, 0, 1), Vec3(2, 0, -1)});

  const ParameterSphere c2 = gamma_complex(builtin("cube"), Vec3(2, 0, 0), Rational(2));
  CHECK_FALSE(c2.degenerate);
  CHECK(classify(c2.complex).classification == Classification::Annulus);

  CHECK_THROWS_AS(gamma_complex(builtin("cube"), Vec3(2, 0, 0), Rational(1, 2)), LambdaTooSmall);
  CHECK_THROWS_AS(gamma_as_shadow_oracle(builtin("cube"), Vec3(2, 0, 0), Rational(1)), LambdaTooSmall);
}

TEST_CASE("gamma_points_are_equidistant") {
  for (int i = 0; i < 10; ++i) {
    const SymmetricBody b = random_symmetric(5100 + static_cast<std::uint64_t>(i), 6);
    const Vec3 x(1, i % 3 - 1, 2);
    const Rational lambda = lambda_zero(b, x) * Rational(7, 4);
    const CellComplex g = gamma_complex(b, x, lambda).complex;
    const Vec3 d = x / lambda;
    for (const Vec3& v : g.vertices) {
      CHECK(gauge(b, v) == Rational(1));
      CHECK(gauge(b, v - d) == Rational(1));
    }
    for (const auto& [a, c] : g.edges) {
      const Vec3 m = (g.vertices[static_cast<std::size_t>(a)] + g.vertices[static_cast<std::size_t>(c)]) / Rational(2);
      CHECK(gauge(b, m) == Rational(1));
      CHECK(gauge(b, m - d) == Rational(1));
    }
  }
}

TEST_CASE("gamma_matches_lens_oracle") {
  CHECK(same_cells(gamma_complex(builtin("cube"), Vec3(2, 0, 0), Rational(2)).complex, lens_oracle(builtin("cube"), Vec3(2, 0, 0), Rational(2))));
  const SymmetricBody oct = builtin("octahedron");
  const Vec3 x(1, -1, 0);
  const Rational l = lambda_zero(oct, x) * Rational(10);
  CHECK(same_cells(gamma_complex(oct, x, l).complex, lens_oracle(oct, x, l)));
  for (int i = 0; i < 10; ++i) {
    const SymmetricBody b = random_symmetric(5200 + static_cast<std::uint64_t>(i), 5 + i % 4);
    const Vec3 y(2, i % 5 - 2, 1);
    const Rational lam = lambda_zero(b, y) * Rational(5 + i, 4);
    CHECK(same_cells(gamma_complex(b, y, lam).complex, lens_oracle(b, y, lam)));
  }
}

TEST_CASE("critical_lambdas") {
  const std::vector<Rational> c = critical_lambdas(builtin("example-sec3"), Vec3(4, 0, 0), Rational(8));
  REQUIRE_FALSE(c.empty());
  CHECK(c.front() == Rational(1));
  CHECK(std::is_sorted(c.begin(), c.end()));
  CHECK(std::set<Rational>(c.begin(), c.end()) == std::set<Rational>{Rational(1), Rational(4, 3), Rational(2)});

  for (int i = 0; i < 5; ++i) {
    const SymmetricBody b = random_symmetric(5300 + static_cast<std::uint64_t>(i), 5);
    const Vec3 x(1, 1, i - 2);
    const Rational l0 = lambda_zero(b, x);
    const std::vector<Rational> a = critical_lambdas(b, x, l0 * Rational(16));
    std::vector<Rational> scaled = critical_lambdas(b, x * Rational(3), l0 * Rational(48));
    REQUIRE(a.size() == scaled.size());
    for (std::size_t j = 0; j < a.size(); ++j) CHECK(scaled[j] == a[j] * Rational(3));
    // Classification is constant inside each interval.
    for (const auto& [lo, hi] : unstable_intervals(b, x, a)) {
      CAPTURE(lo);
      CAPTURE(hi);
      CHECK(false);
    }
  }
}

TEST_CASE("hausdorff_distance") {
  const CellComplex sq = decompose(builtin("cube"), Vec3(2, 0, 0)).shadow_complex;
  CHECK(hausdorff_distance(sq, sq) == 0.0);
  const double h = hausdorff_distance(segment(Vec3(0, 0, 0), Vec3(1, 0, 0)), segment(Vec3(0, 1, 0), Vec3(1, 1, 0)), 16);
  CHECK(std::abs(h - 1.0) < 1e-12);
  const double shifted = hausdorff_distance(segment(Vec3(0, 0, 0), Vec3(1, 0, 0)), segment(Vec3(Rational(1, 2), 0, 0), Vec3(2, 0, 0)), 16);
  CHECK(std::abs(shifted - 1.0) < 1.0 / 16 + 1e-12);
  CHECK_THROWS_AS(hausdorff_distance(CellComplex{}, sq), EmptyComplex);
  CHECK_THROWS_AS(hausdorff_distance(sq, sq, 0), DegenerateInput);

  // On the example body gamma shrinks onto the band at rate 4/lambda.
  const SymmetricBody k = builtin("example-sec3");
  const Vec3 x(4, 0, 0);
  const CellComplex s = decompose(k, x).shadow_complex;
  double prev = 1e9;
  for (int lam : {2, 4, 8, 16, 32}) {
    const double dist = hausdorff_distance(gamma_complex(k, x, Rational(lam)).complex, s);
    CHECK(dist <= prev + 1e-3);
    prev = dist;
    if (lam >= 16) CHECK(std::abs(dist - 4.0 / lam) < 1e-9);
  }
}

TEST_CASE("meridian_and_cut") {
  const SymmetricBody k = builtin("example-sec3");
  const Vec3 x(4, 0, 0);
  const std::vector<std::pair<Vec3, Vec3>> half = meridian(k, x, Vec3(0, 0, 2));
  for (const auto& [a, b] : half) {
    CHECK(a[2].sign() >= 0);
    CHECK(b[2].sign() >= 0);
  }
  CHECK_THROWS_AS(meridian(k, x, Vec3(1, 0, 0)), CurveDegenerate);

  const MeridianCut cut = meridian_cut(k, x, Rational(4), Vec3(0, 1, 0));
  REQUIRE(cut.found);
  CHECK(gauge(k, cut.lo) == Rational(1));
  CHECK(gauge(k, cut.lo - x / Rational(4)) == Rational(1));
  CHECK(dot(cut.lo, x) <= dot(cut.hi, x));
}

TEST_CASE("bounding_map_laws") {
  std::vector<std::pair<SymmetricBody, Vec3>> cases = {{builtin("example-sec3"), Vec3(4, 0, 0)}, {builtin("cube"), Vec3(2, 1, 0)}};
  for (int i = 0; i < 4; ++i) cases.emplace_back(random_symmetric(5400 + static_cast<std::uint64_t>(i), 6), Vec3(1, i - 1, 2));
  for (const auto& [b, x] : cases) {
    const Rational l0 = lambda_zero(b, x);
    const Rational lam = l0 * Rational(9, 8);
    const Rational mu = l0 * Rational(2);
    const Rational nu = l0 * Rational(5);
    const CellComplex gl = gamma_complex(b, x, lam).complex;
    const CellComplex gn = gamma_complex(b, x, nu).complex;
    for (const Vec3& p : gn.vertices) {
      if (project_along(x, p).is_zero()) continue;
      const Vec3 q = bounding_map(b, x, lam, nu, p);
      CHECK(gauge(b, q) == Rational(1));
      CHECK(gauge(b, q - x / lam) == Rational(1));
      CHECK(bounding_map(b, x, lam, mu, bounding_map(b, x, mu, nu, p)) == q);
    }
    for (const Vec3& p : gl.vertices) {
      if (project_along(x, p).is_zero() || gauge(b, p - x / mu) != Rational(1)) continue;
      // Points on both spheres stay put.
      CHECK(bounding_map(b, x, lam, mu, p) == p);
    }
  }
  const SymmetricBody k = builtin("example-sec3");
  CHECK_THROWS_AS(bounding_map(k, Vec3(4, 0, 0), Rational(1), Rational(2), Vec3(0, 1, 0)), LambdaTooSmall);
  CHECK_THROWS_AS(bounding_map(k, Vec3(4, 0, 0), Rational(2), Rational(4), Vec3(0, 0, 0)), PointNotOnSphere);
}
