#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mks/body.hpp"

namespace mks {

struct Violation {
  std::string body;
  std::string direction;
  std::string property;
  std::string detail;
};

struct SuiteResult {
  int bodies = 0;
  std::map<std::string, int> checks;  // property -> times evaluated
  std::vector<Violation> violations;
  std::vector<Violation> findings;  // logged observations, never failures
};

/// Direction used for body i of a suite: integer entries in [-2, 2], not 0.
Vec3 suite_direction(std::uint64_t seed, int index);

/// Runs the shadow-boundary property suite on one (body, x) pair and
/// appends into `out`.
void check_shadow_properties(const SymmetricBody& body, const Vec3& x, SuiteResult& out);

/// Parameter-sphere cross-checks: the lens oracle at 3/2 lambda_0, and the
/// annulus correspondence between the shadow boundary and the sphere sweep
/// up to 64 lambda_0. A circle shadow boundary with a non-circle sphere is
/// logged as a finding.
void check_sphere_properties(const SymmetricBody& body, const Vec3& x, SuiteResult& out);

/// `count` random bodies from `seed`; every property of both groups.
SuiteResult verify_theorems(std::uint64_t seed, int count, bool spheres = true);

}  // namespace mks
