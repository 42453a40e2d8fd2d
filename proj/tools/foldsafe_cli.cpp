#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "foldsafe/bench.hpp"
#include "foldsafe/generate.hpp"
#include "foldsafe/instance_io.hpp"
#include "foldsafe/oracle.hpp"
#include "foldsafe/safe_region.hpp"
#include "foldsafe/skeleton.hpp"
#include "foldsafe/svg.hpp"

namespace {

using namespace foldsafe;
using nlohmann::json;

enum Exit { kOk = 0, kUsage = 1, kInvalidInstance = 2, kDisagreement = 3, kInternal = 4 };

struct Common {
  std::string input = "-";
  std::string svg;
  std::optional<double> eps;
  int grid = 200;
  int samples = 512;
  int creases = 0;
};

std::string read_all(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
  out << text;
}

Instance load(const Common& c) {
  std::optional<Tolerance> tol;
  if (c.eps) {
    tol = Tolerance{};
    tol->eps_abs = *c.eps;
  }
  return parse_instance(read_all(c.input), tol);
}

json point_json(Point p) { return json::array({p.x, p.y}); }

std::optional<ArcCountPrediction> try_predict(const Instance& inst, const std::vector<EventCircle>& circles) {
  try {
    return predict_arc_count(circles, inst.polygon.size(), inst.focus, inst.polygon.tol());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::BoundaryAmbiguous) return std::nullopt;
    throw;
  }
}

int run_region(const Common& c) {
  const Instance inst = load(c);
  const SafeRegion region = compute_safe_region(inst.polygon, inst.focus);
  const auto circles = event_circles(compute_skeleton(inst.polygon));
  std::cout << region_doc_to_json(make_region_doc(region, try_predict(inst, circles))) << "\n";
  if (!c.svg.empty()) {
    SvgOptions opt;
    opt.creases = c.creases;
    write_file(c.svg, region_to_svg(region, opt));
  }
  return kOk;
}

int run_skeleton(const Common& c) {
  const Instance inst = load(c);
  const StraightSkeleton sk = compute_skeleton(inst.polygon);
  json out;
  json nodes = json::array();
  for (const SkeletonNode& node : sk.nodes)
    nodes.push_back({{"position", point_json(node.position)},
                     {"radius", node.radius},
                     {"tangent_edges", node.tangent_edges}});
  out["nodes"] = std::move(nodes);
  out["edges"] = sk.edges;
  out["faces"] = sk.faces;
  json circles = json::array();
  const auto ev = event_circles(sk);
  for (const EventCircle& ec : ev)
    circles.push_back({{"center", point_json(ec.center)},
                       {"radius", ec.radius},
                       {"tangent_edges", ec.tangent_edges}});
  out["event_circles"] = std::move(circles);
  std::cout << out.dump(2) << "\n";
  if (!c.svg.empty()) {
    SvgOptions opt;
    opt.circles = ev;
    write_file(c.svg, region_to_svg(compute_safe_region(inst.polygon, inst.focus), opt));
  }
  return kOk;
}

int run_predict(const Common& c) {
  const Instance inst = load(c);
  const auto circles = event_circles(compute_skeleton(inst.polygon));
  const ArcCountPrediction p = predict_arc_count(circles, inst.polygon.size(), inst.focus, inst.polygon.tol());
  std::cout << json{{"predicted_count", p.count}, {"edges", p.edges}}.dump(2) << "\n";
  return kOk;
}

int run_verify(const Common& c) {
  const Instance inst = load(c);
  const SafeRegion region = compute_safe_region(inst.polygon, inst.focus);
  const OracleReport report =
      verify_instance(inst.polygon, inst.focus, region, c.grid, c.creases > 0 ? c.creases : 10000, c.samples);
  const auto circles = event_circles(compute_skeleton(inst.polygon));
  const auto prediction = try_predict(inst, circles);

  const std::vector<int> edges = region.edge_set();
  const bool edges_ok = edges == report.contributing_edges;
  const bool membership_ok = report.membership_agreement >= 0.999;
  const bool creases_ok = report.min_crease_clearance >= -inst.polygon.tol();
  const bool prediction_ok = !prediction || prediction->count == static_cast<int>(region.size());

  json out{{"arc_edges", edges},
           {"oracle_edges", report.contributing_edges},
           {"membership_agreement", report.membership_agreement},
           {"compared_points", report.compared_points},
           {"min_crease_clearance", report.min_crease_clearance},
           {"area", region.area()},
           {"area_estimate", report.area_estimate},
           {"predicted_count", prediction ? json(prediction->count) : json(nullptr)},
           {"ok", edges_ok && membership_ok && creases_ok && prediction_ok}};
  std::cout << out.dump(2) << "\n";
  return out["ok"].get<bool>() ? kOk : kDisagreement;
}

int run_atlas(const Common& c) {
  const Instance inst = load(c);
  const auto circles = event_circles(compute_skeleton(inst.polygon));
  const std::string svg = atlas_to_svg(inst.polygon, circles, c.grid);
  if (c.svg.empty())
    std::cout << svg;
  else
    write_file(c.svg, svg);
  return kOk;
}

int run_gen(int n, std::uint64_t seed) {
  const ConvexPolygon poly = random_convex_polygon(n, seed);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  const Point focus = random_interior_point(poly, rng, 1e-3);
  std::cout << serialize_instance({poly, focus}) << "\n";
  return kOk;
}

int run_bench_cmd(const std::vector<int>& sizes, int trials, const std::string& algorithm) {
  std::cout << bench_to_csv(run_bench(sizes, trials, parse_bench_algorithm(algorithm)));
  return kOk;
}

void add_instance_flags(CLI::App* cmd, Common& c) {
  cmd->add_option("--input", c.input, "instance JSON path, or - for stdin");
  cmd->add_option("--eps", c.eps, "absolute tolerance override")->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Crease-free region of a convex polygon folded onto a focus"};
  app.require_subcommand(1);
  Common c;
  int n = 10;
  std::uint64_t seed = 1;
  std::vector<int> sizes{1000, 10000, 100000};
  int trials = 5;
  std::string algorithm = "scan";

  auto* region = app.add_subcommand("region", "compute the safe region (JSON, optional SVG)");
  add_instance_flags(region, c);
  region->add_option("--svg", c.svg, "write an SVG rendering");
  region->add_option("--creases", c.creases, "sampled creases drawn in the SVG");

  auto* skeleton = app.add_subcommand("skeleton", "straight skeleton and event circles");
  add_instance_flags(skeleton, c);
  skeleton->add_option("--svg", c.svg, "write region and event circles as SVG");

  auto* predict = app.add_subcommand("predict", "arc count predicted from event circles");
  add_instance_flags(predict, c);

  auto* verify = app.add_subcommand("verify", "brute-force oracle report; exit 3 on disagreement");
  add_instance_flags(verify, c);
  verify->add_option("--grid", c.grid, "membership grid resolution")->check(CLI::PositiveNumber);
  verify->add_option("--samples", c.samples, "parabola samples per edge")->check(CLI::Range(100, 1 << 24));
  verify->add_option("--creases", c.creases, "sampled creases (default 10000)");

  auto* atlas = app.add_subcommand("atlas", "colour map of the predicted arc count");
  add_instance_flags(atlas, c);
  atlas->add_option("--svg", c.svg, "output path (stdout if omitted)");
  atlas->add_option("--grid", c.grid, "cells per side")->check(CLI::PositiveNumber);

  auto* gen = app.add_subcommand("gen", "random instance");
  gen->add_option("--n", n, "vertex count")->check(CLI::Range(3, 100000000));
  gen->add_option("--seed", seed, "random seed");

  auto* bench = app.add_subcommand("bench", "timing on regular polygons (CSV)");
  bench->add_option("--sizes", sizes, "vertex counts")->delimiter(',');
  bench->add_option("--trials", trials, "repetitions per size");
  bench->add_option("--algorithm", algorithm, "scan or naive");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*region) return run_region(c);
    if (*skeleton) return run_skeleton(c);
    if (*predict) return run_predict(c);
    if (*verify) return run_verify(c);
    if (*atlas) return run_atlas(c);
    if (*gen) return run_gen(n, seed);
    if (*bench) return run_bench_cmd(sizes, trials, algorithm);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::InternalInvariantViolation: return kInternal;
      case ErrorCode::InvalidArgument: return kUsage;
      default: return kInvalidInstance;
    }
  }
  return kUsage;
}
