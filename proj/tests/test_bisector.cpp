#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "mks/bisector.hpp"
#include "mks/errors.hpp"
#include "mks/shadow.hpp"
#include "mks/spheres.hpp"

using namespace mks;

namespace {

int count_lines(const std::string& text, const std::string& prefix) {
  std::istringstream in(text);
  int n = 0;
  for (std::string line; std::getline(in, line);)
    if (line.rfind(prefix, 0) == 0) ++n;
  return n;
}

CellComplex square() {
  CellComplex c;
  c.vertices = {Vec3(0, 0, 0), Vec3(1, 0, 0), Vec3(1, 1, 0), Vec3(0, 1, 0)};
  c.edges = {{0, 1}, {1, 2}, {2, 3}, {0, 3}};
  return c;
}

}  // namespace

TEST_CASE("membership") {
  const SymmetricBody cube = builtin("cube");
  const Membership half = membership(cube, Vec3(2, 0, 0), Vec3(1, 0, 0));
  CHECK(half.member);
  CHECK(half.lambda == Rational(1));
  const Membership far = membership(cube, Vec3(1, 0, 0), Vec3(Rational(1, 2), 5, 0));
  CHECK(far.member);
  CHECK(far.lambda == Rational(5));
  CHECK_FALSE(membership(cube, Vec3(1, 0, 0), Vec3(3, 0, 0)).member);
  CHECK_THROWS_AS(membership(cube, Vec3(), Vec3(1, 0, 0)), ZeroDirection);

  for (int i = 0; i < 20; ++i) {
    const SymmetricBody b = random_symmetric(6000 + static_cast<std::uint64_t>(i), 5);
    const Vec3 x(1, i % 3, -1);
    const Membership m = membership(b, x, x / Rational(2));
    CHECK(m.member);
    CHECK(m.lambda == lambda_zero(b, x));
  }
}

TEST_CASE("slices") {
  const SymmetricBody k = builtin("example-sec3");
  const Vec3 x(4, 0, 0);
  const std::vector<BisectorSlice> s = slices(k, x, {Rational(1), Rational(2), Rational(4)});
  REQUIRE(s.size() == 3);
  CHECK(s[0].degenerate);
  CHECK_FALSE(s[1].degenerate);
  // The lambda_0 slice holds x/2.
  bool mid = false;
  for (const auto& [a, b] : s[0].scaled_complex.edges) {
    const Vec3& p = s[0].scaled_complex.vertices[static_cast<std::size_t>(a)];
    const Vec3& q = s[0].scaled_complex.vertices[static_cast<std::size_t>(b)];
    if (p[0] == Rational(2) && q[0] == Rational(2) && p[2] * q[2] <= Rational(0)) mid = true;
  }
  CHECK(mid);
  for (const auto& sl : s)
    for (const Vec3& v : sl.scaled_complex.vertices) {
      const Membership m = membership(k, x, v);
      CHECK(m.member);
      CHECK(m.lambda == sl.lambda);
    }
  // Distinct slices are disjoint since each point has one gauge value.
  for (const Vec3& v : vertex_set(s[1].scaled_complex)) CHECK(vertex_set(s[2].scaled_complex).count(v) == 0);

  // Scaling x and lambda together leaves the slice unchanged up to scale.
  const std::vector<BisectorSlice> t = slices(k, x * Rational(2), {Rational(4)});
  CHECK(same_cells(t[0].scaled_complex, scale(s[1].scaled_complex, Rational(2))));

  CHECK_THROWS_AS(slices(k, x, {Rational(1, 2)}), LambdaTooSmall);
}

TEST_CASE("verdicts") {
  const BisectorVerdict cube = manifold_verdict(builtin("cube"), Vec3(2, 0, 0), Rational(64));
  CHECK_FALSE(cube.manifold);
  CHECK(cube.failing_interval.has_value());

  const SymmetricBody oct = builtin("octahedron");
  const Vec3 x(1, Rational(1, 3), Rational(1, 7));
  const BisectorVerdict ok = manifold_verdict(oct, x, lambda_zero(oct, x) * Rational(64));
  CHECK(ok.manifold);
  CHECK_FALSE(ok.failing_interval.has_value());
  CHECK(ok.slice_reports.front().degenerate);
  for (std::size_t i = 1; i < ok.slice_reports.size(); ++i) CHECK(ok.slice_reports[i].classification == "Circle");

  const BisectorVerdict sec = manifold_verdict(builtin("example-sec3"), Vec3(4, 0, 0), Rational(64));
  CHECK_FALSE(sec.manifold);
  REQUIRE(sec.failing_interval.has_value());
  CHECK(sec.failing_interval->first < sec.failing_interval->second);
}

TEST_CASE("mesh_text") {
  const std::string obj = mesh_text({square()}, MeshFormat::Obj);
  CHECK(count_lines(obj, "v ") == 4);
  CHECK(count_lines(obj, "l ") == 4);
  CHECK(count_lines(obj, "f ") == 0);

  const CellComplex band = decompose(builtin("example-sec3"), Vec3(4, 0, 0)).shadow_complex;
  const std::string b = mesh_text({band}, MeshFormat::Obj);
  CHECK(count_lines(b, "v ") == 12);
  CHECK(count_lines(b, "f ") == 12);
  CHECK(count_lines(b, "l ") == 0);

  const std::string both = mesh_text({square(), band}, MeshFormat::Obj);
  CHECK(count_lines(both, "v ") == 16);

  const std::string ply = mesh_text({band}, MeshFormat::Ply);
  CHECK(ply.rfind("ply\nformat ascii 1.0\n", 0) == 0);
  CHECK(ply.find("element vertex 12") != std::string::npos);
  CHECK(ply.find("element face 12") != std::string::npos);

  CHECK_THROWS_AS(mesh_text({}, MeshFormat::Obj), EmptyComplex);
}

TEST_CASE("export_mesh") {
  const auto dir = std::filesystem::temp_directory_path() / "mks_mesh_test";
  std::filesystem::create_directories(dir);
  const std::string path = (dir / "sq.obj").string();
  export_mesh({square()}, MeshFormat::Obj, path);
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == mesh_text({square()}, MeshFormat::Obj));
  CHECK_THROWS_AS(export_mesh({square()}, MeshFormat::Obj, (dir / "missing" / "x.obj").string()), IoError);
  std::filesystem::remove_all(dir);
}
