#include "mks/bisector.hpp"

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "mks/errors.hpp"
#include "mks/spheres.hpp"
#include "mks/topology.hpp"

namespace mks {

Membership membership(const SymmetricBody& body, const Vec3& x, const Vec3& y) {
  if (x.is_zero()) throw ZeroDirection("direction is zero");
  Membership m;
  m.lambda = gauge(body, y);
  m.member = m.lambda == gauge(body, y - x);
  return m;
}

std::vector<BisectorSlice> slices(const SymmetricBody& body, const Vec3& x, const std::vector<Rational>& lambdas) {
  std::vector<BisectorSlice> out;
  for (const auto& l : lambdas) {
    ParameterSphere s = gamma_complex(body, x, l);
    out.push_back(BisectorSlice{l, scale(s.complex, l), s.degenerate});
  }
  return out;
}

BisectorVerdict manifold_verdict(const SymmetricBody& body, const Vec3& x, const Rational& lambda_max) {
  BisectorVerdict v;
  const Rational l0 = lambda_zero(body, x);
  v.criticals = critical_lambdas(body, x, lambda_max);
  std::vector<Rational> ends = v.criticals;
  if (ends.back() < lambda_max) ends.push_back(lambda_max);

  const ParameterSphere base = gamma_complex(body, x, l0);
  v.slice_reports.push_back(SliceReport{l0, classify(base.complex).label(), true});

  for (std::size_t i = 1; i < ends.size(); ++i) {
    const Rational& a = ends[i - 1];
    const Rational& b = ends[i];
    for (const Rational& probe : {(a + b) / Rational(2), b}) {
      const ParameterSphere s = gamma_complex(body, x, probe);
      const TopologyReport r = classify(s.complex);
      v.slice_reports.push_back(SliceReport{probe, r.label(), s.degenerate});
      if (s.degenerate || r.classification == Classification::Circle || !v.manifold) continue;
      v.manifold = false;
      v.failing_interval = std::make_pair(a, b);
      v.reason = "parameter sphere at lambda=" + probe.str() + " is " + r.label() + ", not a circle, on (" + a.str() + "," +
                 b.str() + "]";
    }
  }
  if (v.manifold) v.reason = "every nondegenerate probe is a circle";
  return v;
}

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

struct Mesh {
  std::vector<std::array<double, 3>> vertices;
  std::vector<std::pair<int, int>> lines;
  std::vector<std::array<int, 3>> triangles;
};

Mesh assemble(const std::vector<CellComplex>& complexes) {
  if (complexes.empty()) throw EmptyComplex("no complexes to export");
  Mesh m;
  for (const auto& c : complexes) {
    const int base = static_cast<int>(m.vertices.size());
    for (const auto& p : c.vertices) m.vertices.push_back(p.to_double());
    std::set<std::pair<int, int>> sides;
    for (const auto& cell : c.cells2) {
      for (std::size_t i = 0; i < cell.size(); ++i) {
        const int a = cell[i];
        const int b = cell[(i + 1) % cell.size()];
        sides.emplace(std::min(a, b), std::max(a, b));
      }
      for (std::size_t i = 1; i + 1 < cell.size(); ++i) m.triangles.push_back({base + cell[0], base + cell[i], base + cell[i + 1]});
    }
    for (const auto& e : c.edges)
      if (!sides.count(e)) m.lines.emplace_back(base + e.first, base + e.second);
  }
  return m;
}

}  // namespace

std::string mesh_text(const std::vector<CellComplex>& complexes, MeshFormat format) {
  const Mesh m = assemble(complexes);
  std::ostringstream os;
  if (format == MeshFormat::Obj) {
    for (const auto& v : m.vertices) os << "v " << fmt(v[0]) << ' ' << fmt(v[1]) << ' ' << fmt(v[2]) << '\n';
    for (const auto& [a, b] : m.lines) os << "l " << a + 1 << ' ' << b + 1 << '\n';
    for (const auto& t : m.triangles) os << "f " << t[0] + 1 << ' ' << t[1] + 1 << ' ' << t[2] + 1 << '\n';
  } else {
    os << "ply\nformat ascii 1.0\n";
    os << "element vertex " << m.vertices.size() << "\nproperty double x\nproperty double y\nproperty double z\n";
    os << "element edge " << m.lines.size() << "\nproperty int vertex1\nproperty int vertex2\n";
    os << "element face " << m.triangles.size() << "\nproperty list uchar int vertex_indices\nend_header\n";
    for (const auto& v : m.vertices) os << fmt(v[0]) << ' ' << fmt(v[1]) << ' ' << fmt(v[2]) << '\n';
    for (const auto& [a, b] : m.lines) os << a << ' ' << b << '\n';
    for (const auto& t : m.triangles) os << "3 " << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
  }
  return os.str();
}

void write_atomic(const std::string& path, const std::string& text) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
    out << text;
    out.flush();
    if (!out) throw IoError("write failed for " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw IoError("cannot move output into place at " + path);
  }
}

void export_mesh(const std::vector<CellComplex>& complexes, MeshFormat format, const std::string& path) {
  write_atomic(path, mesh_text(complexes, format));
}

}  // namespace mks
