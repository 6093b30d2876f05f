// Command-line front end: build geometries, carve out convex chamber
// subcomplexes, classify them against the reducibility dichotomy, export the
// chamber graph, and run the verification suites.
//
// Exit codes for classify: 0 = completely reducible, 1 = centre found,
// 2 = inconclusive.  Other commands exit 0 on success, 3 on any error.

#include <CLI11.hpp>
#include <iostream>

#include "bldg/json_io.hpp"
#include "bldg/selftest.hpp"

using namespace bldg;

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<Chamber> parse_ids(const std::string& s) {
  std::vector<Chamber> out;
  for (const auto& tok : split(s, ',')) {
    try {
      out.push_back(static_cast<Chamber>(std::stoul(tok)));
    } catch (const std::exception&) {
      fail(ErrorCode::ParseError, "bad chamber id: " + tok);
    }
  }
  return out;
}

MatRows parse_matrix(const std::string& s) {
  MatRows m;
  for (const auto& row : split(s, '.')) {
    Vec r;
    for (char c : row) {
      if (c < '0' || c > '9') fail(ErrorCode::ParseError, "bad matrix entry in " + s);
      r.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    m.push_back(std::move(r));
  }
  for (const auto& r : m)
    if (r.size() != m.size()) fail(ErrorCode::ParseError, "matrix is not square: " + s);
  return m;
}

// generators: hull:<ids>  star:<types>:<chamber>  fixed:<matrices>
// matrices are '.'-separated digit rows, '|'-separated elements.
ConvexChamberSubcomplex make_subcomplex(const Geometry& geom, const std::string& gen) {
  const Building& b = geom.building();
  if (gen.rfind("hull:", 0) == 0) return convex_hull(b, parse_ids(gen.substr(5)));
  if (gen.rfind("star:", 0) == 0) {
    auto rest = gen.substr(5);
    auto colon = rest.find(':');
    if (colon == std::string::npos)
      fail(ErrorCode::ParseError, "star generator needs star:<types>:<chamber>");
    TypeSet J = 0;
    for (const auto& tok : split(rest.substr(0, colon), ',')) {
      try {
        J |= type_bit(std::stoi(tok));
      } catch (const std::exception&) {
        fail(ErrorCode::ParseError, "bad type: " + tok);
      }
    }
    Chamber c = parse_ids(rest.substr(colon + 1)).at(0);
    if (c >= b.size()) fail(ErrorCode::UnknownChamber, std::to_string(c));
    return ConvexChamberSubcomplex(b, Simplex(b, c, J).star());
  }
  if (gen.rfind("fixed:", 0) == 0) {
    std::vector<std::vector<Chamber>> perms;
    for (const auto& ms : split(gen.substr(6), '|'))
      perms.push_back(geom.chamber_permutation(parse_matrix(ms)));
    return fixed_subcomplex(b, perms);
  }
  fail(ErrorCode::ParseError, "unknown generator: " + gen);
}

void emit(const std::string& out, const std::string& text) {
  if (out.empty() || out == "-")
    std::cout << text;
  else
    write_text(out, text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spherical building reducibility toolkit"};
  app.require_subcommand(1);

  std::string geometry, out, building_path, omega_path, generator, dot_omega_path;
  std::uint64_t seed = 0;
  bool exhaustive = false, trace = false;

  auto* cmd_build = app.add_subcommand("build", "enumerate a geometry into building.json");
  cmd_build->add_option("--geometry", geometry, "geometry spec, e.g. A2:p=2, thin:A3")
      ->required();
  cmd_build->add_option("--out", out, "output path (default stdout)");

  auto* cmd_sub = app.add_subcommand("subcomplex", "derive a convex chamber subcomplex");
  cmd_sub->add_option("building", building_path, "building.json")->required();
  cmd_sub->add_option("--generator", generator, "hull:<ids> | star:<types>:<chamber> | fixed:<matrices>")
      ->required();
  cmd_sub->add_option("--out", out, "output path (default stdout)");

  auto* cmd_classify = app.add_subcommand("classify", "CR / centre / inconclusive verdict");
  cmd_classify->add_option("building", building_path, "building.json")->required();
  cmd_classify->add_option("omega", omega_path, "omega.json")->required();
  cmd_classify->add_option("--out", out, "verdict path (default stdout)");
  cmd_classify->add_option("--seed", seed, "seed for automorphism sampling");
  cmd_classify->add_flag("--trace", trace, "include the full construction traces");

  auto* cmd_selftest = app.add_subcommand("selftest", "run the verification suites");
  cmd_selftest->add_flag("--exhaustive", exhaustive, "full scope (adds A3:p=2, C2:p=2, C2:p=3)");
  cmd_selftest->add_option("--seed", seed, "seed for sampled subcomplexes");
  cmd_selftest->add_option("--out", out, "report path (default stdout)");

  auto* cmd_dot = app.add_subcommand("export-dot", "chamber graph in DOT format");
  cmd_dot->add_option("building", building_path, "building.json")->required();
  cmd_dot->add_option("omega", dot_omega_path, "optional omega.json to highlight");
  cmd_dot->add_option("--out", out, "output path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_build->parsed()) {
      Geometry g = Geometry::build(geometry);
      emit(out, building_to_json(g).dump(2) + "\n");
      return 0;
    }
    if (cmd_sub->parsed()) {
      Geometry g = load_building(read_json(building_path));
      auto omega = make_subcomplex(g, generator);
      if (!is_convex(g.building(), omega.chambers()))
        fail(ErrorCode::AxiomViolation, "generator produced a non-convex chamber set");
      emit(out, omega_to_json(g, omega).dump(2) + "\n");
      return 0;
    }
    if (cmd_classify->parsed()) {
      Geometry g = load_building(read_json(building_path));
      auto omega = load_omega(g, read_json(omega_path));
      Verdict v = classify(g, omega, seed);
      emit(out, verdict_to_json(v, trace).dump(2) + "\n");
      switch (v.kind) {
        case Verdict::Kind::CR:
          std::cerr << "completely reducible: " << v.witness.size() << " witness pairs\n";
          return 0;
        case Verdict::Kind::Centre:
          std::cerr << "centre found: type " << type_string(v.centre->simplex.type())
                    << " subspace " << v.centre->subspace.encode() << "\n";
          return 1;
        case Verdict::Kind::Inconclusive:
          std::cerr << "inconclusive: " << v.reason << "\n";
          return 2;
      }
    }
    if (cmd_selftest->parsed()) {
      emit(out, selftest_report(exhaustive, seed));
      return 0;
    }
    if (cmd_dot->parsed()) {
      Geometry g = load_building(read_json(building_path));
      if (dot_omega_path.empty()) {
        emit(out, export_dot(g.building()));
      } else {
        auto omega = load_omega(g, read_json(dot_omega_path));
        emit(out, export_dot(g.building(), &omega));
      }
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
