#include "mks/vec3.hpp"

#include "mks/errors.hpp"

namespace mks {

Vec3 project_along(const Vec3& dir, const Vec3& p) {
  if (dir.is_zero()) throw ZeroDirection("projection direction is zero");
  return p - dir * (dot(p, dir) / dot(dir, dir));
}

Vec3 parse_vec3(const std::string& text, bool allow_decimal) {
  std::array<Rational, 3> out;
  std::size_t start = 0;
  for (int i = 0; i < 3; ++i) {
    const std::size_t comma = text.find(',', start);
    const bool last = i == 2;
    if (last != (comma == std::string::npos)) throw ParseError("expected three comma-separated values: '" + text + "'");
    const std::string item = text.substr(start, last ? std::string::npos : comma - start);
    out[static_cast<std::size_t>(i)] = Rational::parse(item, allow_decimal);
    start = comma + 1;
  }
  return Vec3(out[0], out[1], out[2]);
}

}  // namespace mks
