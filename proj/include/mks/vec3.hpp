#pragma once

#include <array>
#include <compare>
#include <functional>
#include <ostream>
#include <string>

#include "mks/rational.hpp"

namespace mks {

/// Exact point / vector of R^3.
struct Vec3 {
  std::array<Rational, 3> c{};

  Vec3() = default;
  Vec3(Rational x, Rational y, Rational z) : c{std::move(x), std::move(y), std::move(z)} {}

  const Rational& operator[](int i) const { return c[static_cast<std::size_t>(i)]; }
  Rational& operator[](int i) { return c[static_cast<std::size_t>(i)]; }

  bool is_zero() const { return c[0].is_zero() && c[1].is_zero() && c[2].is_zero(); }

  Vec3& operator+=(const Vec3& o) {
    for (int i = 0; i < 3; ++i) (*this)[i] += o[i];
    return *this;
  }
  Vec3& operator-=(const Vec3& o) {
    for (int i = 0; i < 3; ++i) (*this)[i] -= o[i];
    return *this;
  }
  Vec3& operator*=(const Rational& s) {
    for (auto& v : c) v *= s;
    return *this;
  }
  Vec3& operator/=(const Rational& s) {
    for (auto& v : c) v /= s;
    return *this;
  }

  friend Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
  friend Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
  friend Vec3 operator-(const Vec3& a) { return Vec3(-a[0], -a[1], -a[2]); }
  friend Vec3 operator*(Vec3 a, const Rational& s) { return a *= s; }
  friend Vec3 operator*(const Rational& s, Vec3 a) { return a *= s; }
  friend Vec3 operator/(Vec3 a, const Rational& s) { return a /= s; }

  friend bool operator==(const Vec3& a, const Vec3& b) = default;
  friend auto operator<=>(const Vec3& a, const Vec3& b) {
    for (int i = 0; i < 3; ++i)
      if (auto o = a[i] <=> b[i]; o != 0) return o;
    return std::strong_ordering::equal;
  }

  std::array<double, 3> to_double() const { return {c[0].to_double(), c[1].to_double(), c[2].to_double()}; }
  std::string str() const { return "(" + c[0].str() + "," + c[1].str() + "," + c[2].str() + ")"; }
  friend std::ostream& operator<<(std::ostream& os, const Vec3& v) { return os << v.str(); }
};

inline Rational dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return Vec3(a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]);
}

/// Signed volume determinant of (b-a, c-a, d-a).
inline Rational orient3d(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d) {
  return dot(cross(b - a, c - a), d - a);
}

inline bool collinear(const Vec3& a, const Vec3& b, const Vec3& c) { return cross(b - a, c - a).is_zero(); }

/// Parallel projection onto the plane through the origin orthogonal to `dir`:
/// p - ((p.dir)/(dir.dir)) dir. Throws ZeroDirection for dir = 0.
Vec3 project_along(const Vec3& dir, const Vec3& p);

/// Parses "a,b,c" with integer, p/q, or (optionally) exact decimal entries.
Vec3 parse_vec3(const std::string& text, bool allow_decimal);

}  // namespace mks

template <>
struct std::hash<mks::Vec3> {
  std::size_t operator()(const mks::Vec3& v) const noexcept {
    std::size_t h = 0;
    for (const auto& r : v.c) h = h * 1000003u ^ r.hash();
    return h;
  }
};
