#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace mks::kernels {

/// Target set for point-to-set distance queries, structure-of-arrays.
/// Segments (a, a + d) with precomputed 1/|d|^2 (0 for a point). Triangles
/// carry a unit normal n, the corners v_i and in-plane edge normals
/// m_i = n x (v_{i+1} - v_i); a point projects inside iff every
/// (p - v_i) . m_i >= 0.
struct Targets {
  std::vector<double> sax, say, saz, sdx, sdy, sdz, sinv;
  std::vector<double> tnx, tny, tnz;
  std::vector<double> t0x, t0y, t0z, t1x, t1y, t1z, t2x, t2y, t2z;
  std::vector<double> m0x, m0y, m0z, m1x, m1y, m1z, m2x, m2y, m2z;

  void add_segment(const double a[3], const double b[3]);
  void add_triangle(const double a[3], const double b[3], const double c[3]);
  std::size_t segments() const { return sax.size(); }
  std::size_t triangles() const { return tnx.size(); }
};

/// For each query point i, out[i] = min squared distance to the targets.
void min_dist2_scalar(const Targets& t, const double* px, const double* py, const double* pz, std::size_t n, double* out);
void min_dist2_avx2(const Targets& t, const double* px, const double* py, const double* pz, std::size_t n, double* out);

/// Runtime dispatch: AVX2 when the CPU supports it unless SB_SIMD=scalar.
void min_dist2(const Targets& t, const double* px, const double* py, const double* pz, std::size_t n, double* out);

/// "avx2" or "scalar".
std::string active_backend();

}  // namespace mks::kernels
