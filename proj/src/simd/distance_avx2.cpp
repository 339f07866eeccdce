#include <immintrin.h>

#include <algorithm>
#include <limits>

#include "mks/distance_kernels.hpp"

namespace mks::kernels {

namespace detail {
double segment_dist2(const Targets& t, std::size_t j, double px, double py, double pz);
double triangle_dist2(const Targets& t, std::size_t j, double px, double py, double pz);
}  // namespace detail

namespace {

inline __m256d dot3(__m256d ax, __m256d ay, __m256d az, __m256d bx, __m256d by, __m256d bz) {
  return _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(ax, bx), _mm256_mul_pd(ay, by)), _mm256_mul_pd(az, bz));
}

inline double hmin(__m256d v) {
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, v);
  return std::min(std::min(lanes[0], lanes[1]), std::min(lanes[2], lanes[3]));
}

}  // namespace

void min_dist2_avx2(const Targets& t, const double* px, const double* py, const double* pz, std::size_t n, double* out) {
  const double inf = std::numeric_limits<double>::infinity();
  const __m256d zero = _mm256_setzero_pd();
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d vinf = _mm256_set1_pd(inf);
  const std::size_t ns = t.segments();
  const std::size_t nt = t.triangles();
  const std::size_t ns4 = ns - ns % 4;
  const std::size_t nt4 = nt - nt % 4;

  for (std::size_t i = 0; i < n; ++i) {
    const __m256d qx = _mm256_set1_pd(px[i]);
    const __m256d qy = _mm256_set1_pd(py[i]);
    const __m256d qz = _mm256_set1_pd(pz[i]);
    __m256d best = vinf;

    for (std::size_t j = 0; j < ns4; j += 4) {
      const __m256d dx = _mm256_loadu_pd(&t.sdx[j]);
      const __m256d dy = _mm256_loadu_pd(&t.sdy[j]);
      const __m256d dz = _mm256_loadu_pd(&t.sdz[j]);
      const __m256d wx = _mm256_sub_pd(qx, _mm256_loadu_pd(&t.sax[j]));
      const __m256d wy = _mm256_sub_pd(qy, _mm256_loadu_pd(&t.say[j]));
      const __m256d wz = _mm256_sub_pd(qz, _mm256_loadu_pd(&t.saz[j]));
      __m256d s = _mm256_mul_pd(dot3(wx, wy, wz, dx, dy, dz), _mm256_loadu_pd(&t.sinv[j]));
      s = _mm256_min_pd(_mm256_max_pd(s, zero), one);
      const __m256d rx = _mm256_sub_pd(wx, _mm256_mul_pd(s, dx));
      const __m256d ry = _mm256_sub_pd(wy, _mm256_mul_pd(s, dy));
      const __m256d rz = _mm256_sub_pd(wz, _mm256_mul_pd(s, dz));
      best = _mm256_min_pd(best, dot3(rx, ry, rz, rx, ry, rz));
    }

    for (std::size_t j = 0; j < nt4; j += 4) {
      const __m256d ax = _mm256_sub_pd(qx, _mm256_loadu_pd(&t.t0x[j]));
      const __m256d ay = _mm256_sub_pd(qy, _mm256_loadu_pd(&t.t0y[j]));
      const __m256d az = _mm256_sub_pd(qz, _mm256_loadu_pd(&t.t0z[j]));
      const __m256d bx = _mm256_sub_pd(qx, _mm256_loadu_pd(&t.t1x[j]));
      const __m256d by = _mm256_sub_pd(qy, _mm256_loadu_pd(&t.t1y[j]));
      const __m256d bz = _mm256_sub_pd(qz, _mm256_loadu_pd(&t.t1z[j]));
      const __m256d cx = _mm256_sub_pd(qx, _mm256_loadu_pd(&t.t2x[j]));
      const __m256d cy = _mm256_sub_pd(qy, _mm256_loadu_pd(&t.t2y[j]));
      const __m256d cz = _mm256_sub_pd(qz, _mm256_loadu_pd(&t.t2z[j]));
      const __m256d e0 = dot3(ax, ay, az, _mm256_loadu_pd(&t.m0x[j]), _mm256_loadu_pd(&t.m0y[j]), _mm256_loadu_pd(&t.m0z[j]));
      const __m256d e1 = dot3(bx, by, bz, _mm256_loadu_pd(&t.m1x[j]), _mm256_loadu_pd(&t.m1y[j]), _mm256_loadu_pd(&t.m1z[j]));
      const __m256d e2 = dot3(cx, cy, cz, _mm256_loadu_pd(&t.m2x[j]), _mm256_loadu_pd(&t.m2y[j]), _mm256_loadu_pd(&t.m2z[j]));
      const __m256d h = dot3(ax, ay, az, _mm256_loadu_pd(&t.tnx[j]), _mm256_loadu_pd(&t.tny[j]), _mm256_loadu_pd(&t.tnz[j]));
      const __m256d outside = _mm256_or_pd(_mm256_or_pd(_mm256_cmp_pd(e0, zero, _CMP_LT_OQ), _mm256_cmp_pd(e1, zero, _CMP_LT_OQ)),
                                           _mm256_cmp_pd(e2, zero, _CMP_LT_OQ));
      best = _mm256_min_pd(best, _mm256_blendv_pd(_mm256_mul_pd(h, h), vinf, outside));
    }

    double b = hmin(best);
    for (std::size_t j = ns4; j < ns; ++j) b = std::min(b, detail::segment_dist2(t, j, px[i], py[i], pz[i]));
    for (std::size_t j = nt4; j < nt; ++j) b = std::min(b, detail::triangle_dist2(t, j, px[i], py[i], pz[i]));
    out[i] = b;
  }
}

}  // namespace mks::kernels
