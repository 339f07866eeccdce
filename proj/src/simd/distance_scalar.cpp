#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string_view>

#include "mks/distance_kernels.hpp"

namespace mks::kernels {

void Targets::add_segment(const double a[3], const double b[3]) {
  const double dx = b[0] - a[0], dy = b[1] - a[1], dz = b[2] - a[2];
  const double len2 = dx * dx + dy * dy + dz * dz;
  sax.push_back(a[0]);
  say.push_back(a[1]);
  saz.push_back(a[2]);
  sdx.push_back(dx);
  sdy.push_back(dy);
  sdz.push_back(dz);
  sinv.push_back(len2 > 0 ? 1.0 / len2 : 0.0);
}

void Targets::add_triangle(const double a[3], const double b[3], const double c[3]) {
  const double e1[3] = {b[0] - a[0], b[1] - a[1], b[2] - a[2]};
  const double e2[3] = {c[0] - a[0], c[1] - a[1], c[2] - a[2]};
  double n[3] = {e1[1] * e2[2] - e1[2] * e2[1], e1[2] * e2[0] - e1[0] * e2[2], e1[0] * e2[1] - e1[1] * e2[0]};
  const double len = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
  if (len == 0) return;
  for (double& v : n) v /= len;
  const double* v[3] = {a, b, c};
  double m[3][3];
  for (int i = 0; i < 3; ++i) {
    const double* p = v[i];
    const double* q = v[(i + 1) % 3];
    const double e[3] = {q[0] - p[0], q[1] - p[1], q[2] - p[2]};
    m[i][0] = n[1] * e[2] - n[2] * e[1];
    m[i][1] = n[2] * e[0] - n[0] * e[2];
    m[i][2] = n[0] * e[1] - n[1] * e[0];
  }
  tnx.push_back(n[0]);
  tny.push_back(n[1]);
  tnz.push_back(n[2]);
  t0x.push_back(a[0]);
  t0y.push_back(a[1]);
  t0z.push_back(a[2]);
  t1x.push_back(b[0]);
  t1y.push_back(b[1]);
  t1z.push_back(b[2]);
  t2x.push_back(c[0]);
  t2y.push_back(c[1]);
  t2z.push_back(c[2]);
  m0x.push_back(m[0][0]);
  m0y.push_back(m[0][1]);
  m0z.push_back(m[0][2]);
  m1x.push_back(m[1][0]);
  m1y.push_back(m[1][1]);
  m1z.push_back(m[1][2]);
  m2x.push_back(m[2][0]);
  m2y.push_back(m[2][1]);
  m2z.push_back(m[2][2]);
}

namespace detail {

double segment_dist2(const Targets& t, std::size_t j, double px, double py, double pz) {
  const double wx = px - t.sax[j], wy = py - t.say[j], wz = pz - t.saz[j];
  double s = (wx * t.sdx[j] + wy * t.sdy[j] + wz * t.sdz[j]) * t.sinv[j];
  s = std::min(std::max(s, 0.0), 1.0);
  const double rx = wx - s * t.sdx[j], ry = wy - s * t.sdy[j], rz = wz - s * t.sdz[j];
  return rx * rx + ry * ry + rz * rz;
}

double triangle_dist2(const Targets& t, std::size_t j, double px, double py, double pz) {
  const double e0 = (px - t.t0x[j]) * t.m0x[j] + (py - t.t0y[j]) * t.m0y[j] + (pz - t.t0z[j]) * t.m0z[j];
  const double e1 = (px - t.t1x[j]) * t.m1x[j] + (py - t.t1y[j]) * t.m1y[j] + (pz - t.t1z[j]) * t.m1z[j];
  const double e2 = (px - t.t2x[j]) * t.m2x[j] + (py - t.t2y[j]) * t.m2y[j] + (pz - t.t2z[j]) * t.m2z[j];
  if (e0 < 0 || e1 < 0 || e2 < 0) return std::numeric_limits<double>::infinity();
  const double h = (px - t.t0x[j]) * t.tnx[j] + (py - t.t0y[j]) * t.tny[j] + (pz - t.t0z[j]) * t.tnz[j];
  return h * h;
}

}  // namespace detail

void min_dist2_scalar(const Targets& t, const double* px, const double* py, const double* pz, std::size_t n, double* out) {
  for (std::size_t i = 0; i < n; ++i) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < t.segments(); ++j) best = std::min(best, detail::segment_dist2(t, j, px[i], py[i], pz[i]));
    for (std::size_t j = 0; j < t.triangles(); ++j) best = std::min(best, detail::triangle_dist2(t, j, px[i], py[i], pz[i]));
    out[i] = best;
  }
}

namespace {

bool use_avx2() {
  static const bool value = [] {
    if (const char* env = std::getenv("SB_SIMD"); env && std::string_view(env) == "scalar") return false;
#if defined(__x86_64__) || defined(__i386__)
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") != 0;
#else
    return false;
#endif
  }();
  return value;
}

}  // namespace

void min_dist2(const Targets& t, const double* px, const double* py, const double* pz, std::size_t n, double* out) {
  if (use_avx2())
    min_dist2_avx2(t, px, py, pz, n, out);
  else
    min_dist2_scalar(t, px, py, pz, n, out);
}

std::string active_backend() { return use_avx2() ? "avx2" : "scalar"; }

}  // namespace mks::kernels
