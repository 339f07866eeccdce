#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <set>
#include <string>

#include "mks/bisector.hpp"
#include "mks/errors.hpp"
#include "mks/report.hpp"
#include "mks/spheres.hpp"
#include "mks/verify.hpp"

namespace {

enum Exit { kOk = 0, kViolation = 1, kBadInput = 2, kIo = 3 };

struct Options {
  std::string builtin;
  std::string input;
  int param = 0;
  std::string direction;
  std::string lambda;
  std::string lambda_min;
  std::string lambda_max;
  int steps = 8;
  double density = 64.0;
  std::string report;
  std::string mesh;
  std::string format = "obj";
  std::string suite = "theorems";
  int count = 100;
  std::uint64_t seed = 1;
};

mks::SymmetricBody load(const Options& o) {
  if (!o.builtin.empty() && !o.input.empty()) throw mks::ParseError("use either --builtin or --input, not both");
  if (!o.input.empty()) return mks::load_body(o.input);
  if (o.builtin.empty()) throw mks::ParseError("a body is required: --builtin NAME or --input FILE");
  return mks::builtin(o.builtin, o.param);
}

mks::Vec3 direction(const Options& o) {
  if (o.direction.empty()) throw mks::ParseError("--direction is required");
  mks::Vec3 x = mks::parse_vec3(o.direction, true);
  if (x.is_zero()) throw mks::ZeroDirection("direction must be nonzero");
  return x;
}

mks::Rational exact(const std::string& text, const char* flag) {
  if (text.empty()) throw mks::ParseError(std::string(flag) + " is required");
  return mks::Rational::parse(text, false);
}

mks::MeshFormat mesh_format(const Options& o) {
  if (o.format == "obj") return mks::MeshFormat::Obj;
  if (o.format == "ply") return mks::MeshFormat::Ply;
  throw mks::ParseError("--format must be obj or ply");
}

void emit(const Options& o, const mks::Json& j, const std::string& summary) {
  if (o.report.empty()) {
    std::cout << j.dump(2) << '\n';
  } else {
    mks::write_atomic(o.report, j.dump(2) + "\n");
    std::cout << summary << '\n';
  }
}

void maybe_mesh(const Options& o, const std::vector<mks::CellComplex>& parts) {
  if (!o.mesh.empty()) mks::export_mesh(parts, mesh_format(o), o.mesh);
}

int run_body(const Options& o) {
  const mks::SymmetricBody b = load(o);
  const auto& lat = b.lattice();
  emit(o, mks::body_report(b),
       b.name() + ": " + std::to_string(lat.num_vertices) + " vertices, " + std::to_string(lat.num_edges) + " edges, " +
           std::to_string(lat.num_facets) + " facets");
  return kOk;
}

int run_shadow(const Options& o) {
  const mks::SymmetricBody b = load(o);
  const mks::ShadowDecomposition d = mks::decompose(b, direction(o));
  const mks::Json j = mks::shadow_report(d);
  maybe_mesh(o, {d.shadow_complex});
  emit(o, j,
       "shadow: " + j["topology"]["classification"].get<std::string>() + ", " + std::to_string(j["shadow_facets"].get<int>()) +
           " shadow facets, sharp=" + (d.sharp ? "true" : "false"));
  return kOk;
}

int run_sphere(const Options& o) {
  const mks::SymmetricBody b = load(o);
  const mks::ParameterSphere s = mks::gamma_complex(b, direction(o), exact(o.lambda, "--lambda"));
  const mks::Json j = mks::sphere_report(s);
  maybe_mesh(o, {s.complex});
  emit(o, j, "lambda=" + s.lambda.str() + ": " + j["topology"]["classification"].get<std::string>());
  return kOk;
}

int run_sweep(const Options& o) {
  const mks::SymmetricBody b = load(o);
  const mks::Vec3 x = direction(o);
  const mks::Rational lo = o.lambda_min.empty() ? mks::lambda_zero(b, x) : exact(o.lambda_min, "--lambda-min");
  const mks::Rational hi = exact(o.lambda_max, "--lambda-max");
  const mks::Sweep s = mks::sweep(b, x, lo, hi, o.steps, o.density);
  if (o.report.empty()) {
    std::cout << mks::sweep_report(s).dump(2) << '\n';
  } else {
    mks::write_atomic(o.report, mks::sweep_report(s).dump(2) + "\n");
    for (const auto& r : s.rows)
      std::cout << r.lambda.str() << '\t' << r.topology.label() << '\t' << r.topology.euler << '\t' << r.hausdorff << '\n';
  }
  if (!o.mesh.empty()) {
    std::vector<mks::CellComplex> parts;
    for (const auto& r : s.rows) parts.push_back(mks::scale(mks::gamma_complex(b, x, r.lambda).complex, r.lambda));
    maybe_mesh(o, parts);
  }
  return kOk;
}

int run_bisector(const Options& o) {
  const mks::SymmetricBody b = load(o);
  const mks::Vec3 x = direction(o);
  const mks::Rational l0 = mks::lambda_zero(b, x);
  const mks::Rational hi = o.lambda_max.empty() ? l0 * mks::Rational(64) : exact(o.lambda_max, "--lambda-max");
  const mks::BisectorVerdict v = mks::manifold_verdict(b, x, hi);
  mks::Json j = mks::verdict_report(v);
  if (!o.mesh.empty()) {
    std::set<mks::Rational> lambdas;
    for (int i = 0; i <= o.steps; ++i) lambdas.insert(l0 + (hi - l0) * mks::Rational(i, std::max(1, o.steps)));
    std::vector<mks::CellComplex> parts;
    for (const auto& s : mks::slices(b, x, {lambdas.begin(), lambdas.end()})) parts.push_back(s.scaled_complex);
    maybe_mesh(o, parts);
  }
  emit(o, j, std::string("manifold=") + (v.manifold ? "true" : "false") + ": " + v.reason);
  return kOk;
}

int run_verify(const Options& o) {
  if (o.suite != "theorems") throw mks::ParseError("unknown suite '" + o.suite + "'");
  if (o.count < 1) throw mks::ParseError("--count must be positive");
  const mks::SuiteResult r = mks::verify_theorems(o.seed, o.count);
  mks::Json checks = r.checks;
  mks::Json violations = mks::Json::array();
  for (const auto& v : r.violations)
    violations.push_back({{"body", v.body}, {"direction", v.direction}, {"property", v.property}, {"detail", v.detail}});
  mks::Json findings = mks::Json::array();
  for (const auto& v : r.findings)
    findings.push_back({{"body", v.body}, {"direction", v.direction}, {"property", v.property}, {"detail", v.detail}});
  const mks::Json j{{"suite", o.suite}, {"seed", o.seed},         {"bodies", r.bodies},
                    {"checks", checks}, {"violations", violations}, {"findings", findings}};
  emit(o, j, std::to_string(r.bodies) + " bodies, " + std::to_string(r.violations.size()) + " violations");
  return r.violations.empty() ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shadow boundaries, parameter spheres and bisectors of symmetric polytopes"};
  app.require_subcommand(1);
  Options o;

  const auto body_flags = [&](CLI::App* c) {
    c->add_option("--builtin", o.builtin, "octahedron, cube, example-sec3, example-sec3-literal, sine-cylinder, diadic");
    c->add_option("--param", o.param, "parameter N of sine-cylinder / diadic");
    c->add_option("--input", o.input, "body JSON file");
    c->add_option("--report", o.report, "write the JSON report here instead of stdout");
  };
  const auto mesh_flags = [&](CLI::App* c) {
    c->add_option("--mesh", o.mesh, "mesh output path");
    c->add_option("--format", o.format, "obj or ply");
  };

  CLI::App* body = app.add_subcommand("body", "validate a body and print face counts");
  body_flags(body);

  CLI::App* shadow = app.add_subcommand("shadow", "shadow boundary decomposition");
  body_flags(shadow);
  mesh_flags(shadow);
  shadow->add_option("--direction", o.direction, "x as a,b,c (integers, p/q or decimals)");

  CLI::App* sphere = app.add_subcommand("sphere", "parameter sphere at one lambda");
  body_flags(sphere);
  mesh_flags(sphere);
  sphere->add_option("--direction", o.direction, "x as a,b,c");
  sphere->add_option("--lambda", o.lambda, "exact p/q");

  CLI::App* sweep = app.add_subcommand("sweep", "classification table over a lambda grid");
  body_flags(sweep);
  mesh_flags(sweep);
  sweep->add_option("--direction", o.direction, "x as a,b,c");
  sweep->add_option("--lambda-min", o.lambda_min, "exact p/q (default lambda_0)");
  sweep->add_option("--lambda-max", o.lambda_max, "exact p/q");
  sweep->add_option("--steps", o.steps, "grid intervals");
  sweep->add_option("--density", o.density, "Hausdorff samples per unit length");

  CLI::App* bisector = app.add_subcommand("bisector", "bisector slices and manifold verdict");
  body_flags(bisector);
  mesh_flags(bisector);
  bisector->add_option("--direction", o.direction, "x as a,b,c");
  bisector->add_option("--lambda-max", o.lambda_max, "exact p/q (default 64 lambda_0)");
  bisector->add_option("--steps", o.steps, "slices in the mesh");

  CLI::App* verify = app.add_subcommand("verify", "property suite on random bodies");
  verify->add_option("--suite", o.suite, "theorems");
  verify->add_option("--count", o.count, "number of bodies");
  verify->add_option("--seed", o.seed, "random seed");
  verify->add_option("--report", o.report, "write the JSON report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (*body) return run_body(o);
    if (*shadow) return run_shadow(o);
    if (*sphere) return run_sphere(o);
    if (*sweep) return run_sweep(o);
    if (*bisector) return run_bisector(o);
    if (*verify) return run_verify(o);
  } catch (const mks::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const mks::Error& e) {
    std::cerr << "error (" << e.kind() << "): " << e.what() << '\n';
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  }
  return kBadInput;
}
