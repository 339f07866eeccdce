#include "mks/report.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "mks/errors.hpp"

namespace mks {

namespace {

Rational coordinate(const Json& v) {
  if (v.is_string()) return Rational::parse(v.get<std::string>(), false);
  if (v.is_number_integer()) return Rational(v.get<long>());
  throw ParseError("coordinate must be an integer or a \"p/q\" string, got " + v.dump());
}

Json rationals(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& r : v) out.push_back(r.str());
  return out;
}

}  // namespace

SymmetricBody body_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("body file must hold a JSON object");
  if (j.contains("dim") && j["dim"] != 3) throw ParseError("only dim 3 bodies are supported");
  if (!j.contains("vertices") || !j["vertices"].is_array()) throw ParseError("body file needs a \"vertices\" array");
  std::vector<Vec3> pts;
  for (const auto& row : j["vertices"]) {
    if (!row.is_array() || row.size() != 3) throw ParseError("each vertex needs three coordinates");
    try {
      pts.emplace_back(coordinate(row[0]), coordinate(row[1]), coordinate(row[2]));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  const bool sym = j.value("symmetrize", false);
  return build_symmetric(pts, sym, j.value("name", std::string("custom")));
}

SymmetricBody load_body(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
  return body_from_json(j);
}

Json to_json(const Vec3& v) { return Json::array({v[0].str(), v[1].str(), v[2].str()}); }

Json body_to_json(const SymmetricBody& body) {
  Json vs = Json::array();
  for (const auto& v : body.vertices()) vs.push_back(to_json(v));
  return Json{{"dim", 3}, {"name", body.name()}, {"vertices", vs}};
}

Json to_json(const CellComplex& c) {
  Json vs = Json::array();
  for (const auto& v : c.vertices) vs.push_back(to_json(v));
  Json es = Json::array();
  for (const auto& [a, b] : c.edges) es.push_back({a, b});
  return Json{{"vertices", vs}, {"edges", es}, {"cells2", c.cells2}};
}

Json to_json(const TopologyReport& r) {
  std::string manifold = to_string(r.manifold.kind);
  if (r.manifold.kind != ManifoldKind::NonManifold) manifold += "(" + std::to_string(r.manifold.dim) + ")";
  Json j{{"components", r.components},
         {"euler", r.euler},
         {"max_dim", r.max_dim},
         {"manifold", manifold},
         {"boundary_circles", r.boundary_circles},
         {"classification", r.label()}};
  if (r.manifold.kind == ManifoldKind::NonManifold) {
    j["witness"] = r.manifold.witnesses.front();
    j["witnesses"] = r.manifold.witnesses;
    j["reason"] = r.manifold.reason;
  }
  return j;
}

Json body_report(const SymmetricBody& body) {
  const auto& lat = body.lattice();
  Json facets = Json::array();
  for (const auto& h : body.facets()) facets.push_back({{"normal", to_json(h.normal)}, {"offset", h.offset.str()}});
  return Json{{"name", body.name()},
              {"dim", 3},
              {"counts", {{"vertices", lat.num_vertices}, {"edges", lat.num_edges}, {"facets", lat.num_facets}}},
              {"euler", lat.num_vertices - lat.num_edges + lat.num_facets},
              {"vertices", body_to_json(body)["vertices"]},
              {"facets", facets}};
}

Json shadow_report(const ShadowDecomposition& d) {
  const auto& lat = d.body.lattice();
  Json faces = Json::array();
  int shadow_facets = 0;
  for (int f = 0; f < lat.size(); ++f) {
    const FaceLabel l = d.labels[static_cast<std::size_t>(f)];
    faces.push_back({{"id", f}, {"dim", lat[f].dim}, {"vertices", lat[f].vertices}, {"label", to_string(l)}});
    if (lat[f].dim == 2 && l == FaceLabel::Shadow) ++shadow_facets;
  }
  Json sharp_points = Json::array();
  for (int f : d.sharp_faces)
    if (lat[f].dim == 0) sharp_points.push_back(to_json(d.body.vertex(f)));
  const auto cycle = [](const CellComplex& c) {
    Json out = Json::array();
    for (const auto& v : c.vertices) out.push_back(to_json(v));
    return out;
  };
  Json j{{"body", d.body.name()},
         {"direction", to_json(d.direction)},
         {"faces", faces},
         {"shadow_facets", shadow_facets},
         {"shadow_complex", to_json(d.shadow_complex)},
         {"topology", to_json(classify(d.shadow_complex))},
         {"sharp", d.sharp},
         {"sharp_points", sharp_points},
         {"plus_boundary", cycle(d.plus_boundary)},
         {"minus_boundary", cycle(d.minus_boundary)},
         {"poles", {{"positive", to_json(d.poles.positive)}, {"negative", to_json(d.poles.negative)}}},
         {"projection_check", projection_check(d)},
         {"separation_components", separation_components(d.body, d.plus_boundary_faces)}};
  if (d.nonsharp_witness)
    j["nonsharp_witness"] = {{"face", d.nonsharp_witness->face},
                             {"segment", {to_json(d.nonsharp_witness->from), to_json(d.nonsharp_witness->to)}}};
  return j;
}

Json sphere_report(const ParameterSphere& s) {
  return Json{{"lambda", s.lambda.str()},
              {"direction", to_json(s.direction)},
              {"degenerate", s.degenerate},
              {"topology", to_json(classify(s.complex))},
              {"complex", to_json(s.complex)}};
}

Sweep sweep(const SymmetricBody& body, const Vec3& x, const Rational& lambda_min, const Rational& lambda_max, int steps,
            double density) {
  if (steps < 1) throw DegenerateInput("sweep needs at least one step");
  if (lambda_max < lambda_min) throw DegenerateInput("lambda-max is below lambda-min");
  Sweep s;
  const Rational l0 = lambda_zero(body, x);
  if (lambda_min < l0) throw LambdaTooSmall("lambda-min " + lambda_min.str() + " is below lambda_0 = " + l0.str());
  if (lambda_max > l0) {
    s.criticals = critical_lambdas(body, x, lambda_max);
    s.unstable = unstable_intervals(body, x, s.criticals);
  } else {
    s.criticals = {l0};
  }
  std::set<Rational> grid;
  for (int i = 0; i <= steps; ++i) grid.insert(lambda_min + (lambda_max - lambda_min) * Rational(i, steps));
  for (const auto& c : s.criticals)
    if (c >= lambda_min && c <= lambda_max) grid.insert(c);
  const CellComplex shadow = decompose(body, x).shadow_complex;
  for (const auto& l : grid) {
    const ParameterSphere p = gamma_complex(body, x, l);
    s.rows.push_back(SweepRow{l, classify(p.complex), p.degenerate, hausdorff_distance(p.complex, shadow, density)});
  }
  return s;
}

Json sweep_report(const Sweep& s) {
  Json rows = Json::array();
  for (const auto& r : s.rows)
    rows.push_back({{"lambda", r.lambda.str()},
                    {"classification", r.topology.label()},
                    {"euler", r.topology.euler},
                    {"components", r.topology.components},
                    {"boundary_circles", r.topology.boundary_circles},
                    {"degenerate", r.degenerate},
                    {"hausdorff", r.hausdorff}});
  Json unstable = Json::array();
  for (const auto& [a, b] : s.unstable) unstable.push_back({a.str(), b.str()});
  return Json{{"rows", rows}, {"criticals", rationals(s.criticals)}, {"unstable_intervals", unstable}};
}

Json verdict_report(const BisectorVerdict& v) {
  Json sl = Json::array();
  for (const auto& r : v.slice_reports)
    sl.push_back({{"lambda", r.lambda.str()}, {"classification", r.classification}, {"degenerate", r.degenerate}});
  Json j{{"manifold", v.manifold}, {"reason", v.reason}, {"slices", sl}, {"criticals", rationals(v.criticals)}};
  if (v.failing_interval) j["failing_interval"] = {v.failing_interval->first.str(), v.failing_interval->second.str()};
  return j;
}

}  // namespace mks
