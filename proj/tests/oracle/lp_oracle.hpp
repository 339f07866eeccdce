#pragma once

#include <vector>

#include "mks/body.hpp"

namespace oracle {

using mks::Rational;
using mks::Vec3;

/// Exact feasibility of {A z = b, z >= 0} by phase-one simplex with
/// Bland's rule over rationals.
bool feasible(std::vector<std::vector<Rational>> a, std::vector<Rational> b);

/// p in conv(vertices), as a convex-combination LP. Uses only the vertex list.
bool in_hull(const std::vector<Vec3>& vertices, const Vec3& p);

/// t K ∩ (t K + x) nonempty: x = t (sum a_i v_i - sum b_j v_j) with convex
/// weights a, b. Uses only the vertex list.
bool lens_nonempty(const std::vector<Vec3>& vertices, const Vec3& x, const Rational& t);

struct Bracket {
  Rational lo;  // infeasible (or 0)
  Rational hi;  // feasible
};

/// Bisection for the least feasible t of a monotone predicate until
/// hi - lo <= 2^-bits.
template <class Pred>
Bracket bisect(Pred feasible_at, int bits) {
  Rational lo(0);
  Rational hi(1);
  while (!feasible_at(hi)) {
    lo = hi;
    hi = hi * Rational(2);
  }
  const Rational width = Rational::pow2(-bits);
  while (hi - lo > width) {
    const Rational mid = (lo + hi) / Rational(2);
    if (feasible_at(mid))
      hi = mid;
    else
      lo = mid;
  }
  return {lo, hi};
}

/// Least t with p in t conv(vertices), bracketed to 2^-bits.
Bracket gauge_bracket(const std::vector<Vec3>& vertices, const Vec3& p, int bits = 40);

/// Least t with tK ∩ (tK + x) nonempty, bracketed to 2^-bits.
Bracket lambda_zero_bracket(const std::vector<Vec3>& vertices, const Vec3& x, int bits = 40);

}  // namespace oracle
