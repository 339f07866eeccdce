#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "mks/bisector.hpp"
#include "mks/body.hpp"
#include "mks/shadow.hpp"
#include "mks/spheres.hpp"
#include "mks/topology.hpp"

namespace mks {

using Json = nlohmann::json;

/// Body file: {"dim": 3, "vertices": [["p/q", ...], ...], "name": ...,
/// "symmetrize": false}. Coordinates are strings or JSON integers; floats
/// are rejected. Throws ParseError, plus the build_symmetric errors.
SymmetricBody body_from_json(const Json& j);
SymmetricBody load_body(const std::string& path);
Json body_to_json(const SymmetricBody& body);

Json to_json(const Vec3& v);
Json to_json(const CellComplex& c);
Json to_json(const TopologyReport& r);

Json body_report(const SymmetricBody& body);
Json shadow_report(const ShadowDecomposition& d);
Json sphere_report(const ParameterSphere& s);

struct SweepRow {
  Rational lambda;
  TopologyReport topology;
  bool degenerate = false;
  double hausdorff = 0;
};
struct Sweep {
  std::vector<SweepRow> rows;
  std::vector<Rational> criticals;
  std::vector<std::pair<Rational, Rational>> unstable;
};

/// Classifies the parameter sphere on `steps` evenly spaced lambdas in
/// [lambda_min, lambda_max] merged with the critical values in that range.
Sweep sweep(const SymmetricBody& body, const Vec3& x, const Rational& lambda_min, const Rational& lambda_max, int steps,
            double density = 64.0);
Json sweep_report(const Sweep& s);

Json verdict_report(const BisectorVerdict& v);

}  // namespace mks
