#include <mpfr.h>

#include <cctype>
#include <functional>

#include "mks/body.hpp"
#include "mks/errors.hpp"

namespace mks {

namespace {

constexpr int kApproxBits = 64;

// RAII holder for an MPFR value at 192-bit working precision.
class Big {
 public:
  Big() { mpfr_init2(v_, 192); }
  ~Big() { mpfr_clear(v_); }
  Big(const Big&) = delete;
  Big& operator=(const Big&) = delete;
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

// Nearest multiple of 2^-64 of an MPFR value.
Rational to_dyadic(mpfr_ptr x) {
  Big scaled;
  mpfr_mul_2ui(scaled.get(), x, kApproxBits, MPFR_RNDN);
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), scaled.get(), MPFR_RNDN);
  return Rational(z, mpz_class(Rational::pow2(kApproxBits).num()));
}

// cos/sin of (num/den)*2*pi, each within 2^-64.
std::pair<Rational, Rational> unit_circle_point(long num, long den) {
  Big t, c, s;
  mpfr_const_pi(t.get(), MPFR_RNDN);
  mpfr_mul_si(t.get(), t.get(), 2 * num, MPFR_RNDN);
  mpfr_div_si(t.get(), t.get(), den, MPFR_RNDN);
  mpfr_sin_cos(s.get(), c.get(), t.get(), MPFR_RNDN);
  return {to_dyadic(c.get()), to_dyadic(s.get())};
}

// (cos a, sin a) for an angle given as an MPFR value.
std::pair<Rational, Rational> unit_circle_at(mpfr_ptr angle) {
  Big c, s;
  mpfr_sin_cos(s.get(), c.get(), angle, MPFR_RNDN);
  return {to_dyadic(c.get()), to_dyadic(s.get())};
}

std::vector<Vec3> cube_points() {
  std::vector<Vec3> pts;
  for (int a : {-1, 1})
    for (int b : {-1, 1})
      for (int c : {-1, 1}) pts.emplace_back(a, b, c);
  return pts;
}

// Rectangles (r,1,t), r+s=2 and r-s=2 strips, and ridge segments (r,0,2),
// all with their negatives. `literal` uses 0<=r<=2 for the strips; the
// default uses the connecting part 1<=r<=2 between (1,+-1,t) and (2,0,t).
std::vector<Vec3> example_sec3_points(bool literal) {
  std::vector<Vec3> pts;
  const auto add = [&](Rational a, Rational b, Rational c) {
    pts.emplace_back(a, b, c);
    pts.emplace_back(-a, -b, -c);
  };
  for (int r : {-1, 1})
    for (int t : {-1, 1}) add(r, 1, t);
  const int r0 = literal ? 0 : 1;
  for (int t : {-1, 1}) {
    for (int r : {r0, 2}) {
      add(r, 2 - r, t);
      add(r, r - 2, t);
    }
  }
  for (const Rational r : {Rational(-3, 2), Rational(3, 2)}) add(r, 0, 2);
  return pts;
}

// Finite truncation of the topologist's-sine-like curve on the cylinder
// y^2 + z^2 = 1: n segments at angles acos(1/k), arcs between consecutive
// segments sampled uniformly in angle, then mirrored in y and in z.
std::vector<Vec3> sine_cylinder_points(int n) {
  std::vector<Vec3> curve;
  std::vector<std::pair<Rational, Rational>> seg;  // (y_k, z_k)
  for (int k = 1; k <= n; ++k) {
    // z_k = sqrt(k^2 - 1)/k rounded down on the 2^-64 grid scaled by k.
    mpz_class rad = mpz_class(static_cast<long>(k) * k - 1);
    mpz_mul_2exp(rad.get_mpz_t(), rad.get_mpz_t(), 2 * kApproxBits);
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), rad.get_mpz_t());
    mpz_class den = Rational::pow2(kApproxBits).num() * k;
    seg.emplace_back(Rational(1, k), Rational(root, den));
  }
  for (const auto& [y, z] : seg) {
    curve.emplace_back(1, y, z);
    curve.emplace_back(-1, y, z);
  }
  for (int k = 1; k < n; ++k) {
    Big a0, a1, th;
    mpfr_set_si(a0.get(), 1, MPFR_RNDN);
    mpfr_div_si(a0.get(), a0.get(), k, MPFR_RNDN);
    mpfr_acos(a0.get(), a0.get(), MPFR_RNDN);
    mpfr_set_si(a1.get(), 1, MPFR_RNDN);
    mpfr_div_si(a1.get(), a1.get(), k + 1, MPFR_RNDN);
    mpfr_acos(a1.get(), a1.get(), MPFR_RNDN);
    const Rational& y0 = seg[static_cast<std::size_t>(k - 1)].first;
    const Rational& y1 = seg[static_cast<std::size_t>(k)].first;
    for (int j = 1; j <= n; ++j) {
      // th = a0 + j/(n+1) (a1 - a0)
      mpfr_sub(th.get(), a1.get(), a0.get(), MPFR_RNDN);
      mpfr_mul_si(th.get(), th.get(), j, MPFR_RNDN);
      mpfr_div_si(th.get(), th.get(), n + 1, MPFR_RNDN);
      mpfr_add(th.get(), th.get(), a0.get(), MPFR_RNDN);
      auto [y, z] = unit_circle_at(th.get());
      // x on the vertical plane through (1, y0) and (-1, y1).
      const Rational x = Rational(1) - Rational(2) * (y - y0) / (y1 - y0);
      curve.emplace_back(x, y, z);
    }
  }
  std::vector<Vec3> pts;
  for (const auto& p : curve)
    for (int sy : {1, -1})
      for (int sz : {1, -1}) pts.emplace_back(p[0], p[1] * Rational(sy), p[2] * Rational(sz));
  return pts;
}

// Segments orthogonal to the (x,y)-plane through the dyadic points of the
// unit circle, level 0..n.
std::vector<Vec3> diadic_points(int n) {
  std::vector<Vec3> pts;
  for (int i = 0; i <= n; ++i) {
    const Rational half = i <= 1 ? Rational(1) : Rational::pow2(-(i - 2)) / Rational(2);
    const long den = 1L << i;
    for (long j = 1; j <= den; j += 2) {
      const auto [c, s] = unit_circle_point(j, den);
      pts.emplace_back(c, s, half);
      pts.emplace_back(c, s, -half);
    }
  }
  return pts;
}

void split_name(const std::string& full, std::string& base, int& n) {
  base = full;
  const auto open = full.find('(');
  if (open == std::string::npos) return;
  if (full.back() != ')') throw UnknownBody("malformed builtin name '" + full + "'");
  base = full.substr(0, open);
  const std::string arg = full.substr(open + 1, full.size() - open - 2);
  if (arg.empty() || !std::all_of(arg.begin(), arg.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw UnknownBody("malformed builtin parameter in '" + full + "'");
  n = std::stoi(arg);
}

}  // namespace

std::vector<Vec3> builtin_generators(const std::string& full, int n) {
  std::string name;
  split_name(full, name, n);
  if (name == "octahedron") return {Vec3(1, 0, 0), Vec3(-1, 0, 0), Vec3(0, 1, 0), Vec3(0, -1, 0), Vec3(0, 0, 1), Vec3(0, 0, -1)};
  if (name == "cube") return cube_points();
  if (name == "example-sec3") return example_sec3_points(false);
  if (name == "example-sec3-literal") return example_sec3_points(true);
  if (name == "sine-cylinder" || name == "diadic") {
    if (n < 1) throw UnknownBody(name + " needs a parameter n >= 1");
    if (n > 12) throw UnknownBody(name + " parameter too large (max 12)");
    return name == "diadic" ? diadic_points(n) : sine_cylinder_points(n);
  }
  throw UnknownBody("unknown builtin body '" + full + "'");
}

SymmetricBody builtin(const std::string& full, int n) {
  std::string name;
  split_name(full, name, n);
  std::string label = name;
  if (name == "sine-cylinder" || name == "diadic") label += "(" + std::to_string(n) + ")";
  return build_symmetric(builtin_generators(name, n), true, label);
}

}  // namespace mks
