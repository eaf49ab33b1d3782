// Command-line front end. Exit codes: 0 ok, 2 malformed input or usage,
// 3 input not generic, 4 internal consistency failure.

#include <CLI11.hpp>
#include <iostream>
#include <regex>

#include "orthotope/genericize.hpp"
#include "orthotope/io.hpp"
#include "orthotope/lattice.hpp"

using namespace orthotope;

namespace {

constexpr int kExitMalformed = 2;
constexpr int kExitNotGeneric = 3;
constexpr int kExitConsistency = 4;

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) std::cout << text;
  else write_text(out, text);
}

Rational parse_rational(const std::string& s) {
  static const std::regex form(R"(\s*(-?\d+)(?:/(\d+))?\s*)");
  std::smatch m;
  if (!std::regex_match(s, m, form)) throw std::invalid_argument("not a rational number: " + s);
  const BigInt num(m[1].str());
  const BigInt den(m[2].matched ? m[2].str() : "1");
  if (den == 0) throw std::invalid_argument("zero denominator: " + s);
  return Rational(num, den);
}

// "axis=value" with value an integer or half-integer at working scale.
std::pair<Axis, Coord> parse_plane(const std::string& s) {
  static const std::regex form(R"(\s*(\d+)\s*=\s*(-?)(\d+)(\.5|\.0)?\s*)");
  std::smatch m;
  if (!std::regex_match(s, m, form)) throw std::invalid_argument("expected axis=value (value a multiple of 1/2): " + s);
  Coord doubled = 2 * std::stoll(m[3].str()) + (m[4].str() == ".5" ? 1 : 0);
  if (!m[2].str().empty()) doubled = -doubled;
  return {std::stoi(m[1].str()), doubled};
}

std::string plain_census(const VertexCensus& c) {
  std::ostringstream s;
  s << "vertices " << c.total() << "\n";
  for (const auto& [mu, n] : c.by_mu) s << "mu " << mu << " " << n << "\n";
  for (const auto& [key, n] : c.by_class) s << "class " << key.text << " " << n << "\n";
  return s.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orthogonal polytope analysis: series-parallel diagrams, floral vertices, lattice invariants"};
  app.require_subcommand(1);
  std::string model, out, method = "all", expr;
  int axis = 0, dim = 2, count = 4;
  Coord extent = 16;
  std::uint64_t seed = 1;
  std::string eps = "1/2";
  std::vector<std::string> planes;

  auto* analyze = app.add_subcommand("analyze", "Full JSON report for a model");
  analyze->add_option("model", model, "Model JSON")->required();
  analyze->add_option("-o,--out", out, "Write the report here instead of stdout");

  auto* census = app.add_subcommand("census", "Vertex census by occupied orthants and by class");
  census->add_option("model", model)->required();

  auto* vol = app.add_subcommand("volume", "Volume by one or all methods");
  vol->add_option("model", model)->required();
  vol->add_option("--method", method, "musum | determinantal | voxel | all")
      ->check(CLI::IsMember({"musum", "determinantal", "voxel", "all"}));

  auto* eul = app.add_subcommand("euler", "Euler characteristic by one or all methods");
  eul->add_option("model", model)->required();
  eul->add_option("--method", method, "sigma | cubical | all")->check(CLI::IsMember({"sigma", "cubical", "all"}));

  auto* check = app.add_subcommand("check", "Genericity check with witness");
  check->add_option("model", model)->required();

  auto* facet_cmd = app.add_subcommand("facet", "Facet diagram of a floral vertex on x_axis = 0");
  facet_cmd->add_option("--expr", expr, "Signed diagram, e.g. \"(1|2)&~3\"")->required();
  facet_cmd->add_option("--axis", axis)->required();

  auto* slice = app.add_subcommand("slice", "Cross-section model, e.g. --at 3=2.5");
  slice->add_option("model", model)->required();
  slice->add_option("--at", planes, "axis=value at working scale (repeatable)")->required();
  slice->add_option("-o,--out", out);

  auto* enum_spd = app.add_subcommand("enum-spd", "One diagram per unlabeled shape on d edges");
  enum_spd->add_option("d", dim)->required();

  auto* gen = app.add_subcommand("genericize", "Thicken faces (or model cells) into a generic orthotope");
  gen->add_option("input", model, "Faces or model JSON")->required();
  gen->add_option("--eps", eps, "Hausdorff bound, integer or p/q");
  gen->add_option("-o,--out", out);

  auto* rnd = app.add_subcommand("random", "Random generic union of boxes");
  rnd->add_option("--dim", dim);
  rnd->add_option("--count", count);
  rnd->add_option("--extent", extent);
  rnd->add_option("--seed", seed);
  rnd->add_option("-o,--out", out);

  auto* render = app.add_subcommand("render2d", "SVG view of a 2D model");
  render->add_option("model", model)->required();
  render->add_option("-o,--out", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitMalformed;
  }

  try {
    if (*analyze) {
      const IntegralOrthotope p = load_model(model);
      const auto report = analysis_report(p);
      emit(report.dump(2) + "\n", out);
      return report["generic"].get<bool>() ? 0 : kExitNotGeneric;
    }
    if (*census) {
      std::cout << plain_census(vertex_census(load_model(model)));
      return 0;
    }
    if (*vol) {
      const IntegralOrthotope p = load_model(model);
      const std::vector<std::pair<std::string, VolumeMethod>> all{
          {"musum", VolumeMethod::MuSum}, {"determinantal", VolumeMethod::Determinantal}, {"voxel", VolumeMethod::VoxelCount}};
      for (const auto& [name, m] : all) {
        if (method == "all") std::cout << name << " " << rational_string(volume(p, m)) << "\n";
        else if (method == name) std::cout << rational_string(volume(p, m)) << "\n";
      }
      return 0;
    }
    if (*eul) {
      const IntegralOrthotope p = load_model(model);
      const std::vector<std::pair<std::string, EulerMethod>> all{{"sigma", EulerMethod::SigmaSum},
                                                                 {"cubical", EulerMethod::CubicalComplex}};
      for (const auto& [name, m] : all) {
        if (method == "all") std::cout << name << " " << euler(p, m) << "\n";
        else if (method == name) std::cout << euler(p, m) << "\n";
      }
      return 0;
    }
    if (*check) {
      const GenericityCheck g = check_generic(load_model(model));
      if (g.generic()) {
        std::cout << "generic\n";
        return 0;
      }
      std::cout << "not generic, witness " << half_point_json(*g.witness).dump() << "\n";
      return kExitNotGeneric;
    }
    if (*facet_cmd) {
      const FaceDiagram f = facet(FloralVertex(parse_expr(expr)), axis);
      if (const auto* d = std::get_if<SignedSpd>(&f)) std::cout << format_expr(*d) << "\n";
      else std::cout << "trivial\n";
      return 0;
    }
    if (*slice) {
      std::map<Axis, Coord> values;
      for (const std::string& s : planes) {
        const auto [a, v] = parse_plane(s);
        if (!values.emplace(a, v).second) throw std::invalid_argument("axis " + std::to_string(a) + " given twice");
      }
      emit(model_to_json(cross_section(load_model(model), values)).dump() + "\n", out);
      return 0;
    }
    if (*enum_spd) {
      for (const Spd& s : enumerate_shapes(dim)) std::cout << format_expr(s) << "\n";
      return 0;
    }
    if (*gen) {
      const std::vector<CubeFace> faces = faces_from_json(read_json(model));
      if (faces.empty()) throw ModelError(model + ": no faces");
      const Rational bound = parse_rational(eps);
      const Thickened t = thicken(faces.front().dim(), faces, bound);
      const Rational h = hausdorff_distance(BoxSet::of(t.polytope), BoxSet::of(faces.front().dim(), faces));
      std::cerr << "scale " << t.polytope.scale() << ", max pad " << rational_string(t.pads.max_pad())
                << ", Hausdorff distance " << rational_string(h) << "\n";
      if (!check_generic(t.polytope).generic()) throw ConsistencyError("thickened union is not generic");
      if (h >= bound) throw ConsistencyError("thickened union is too far from the faces");
      emit(model_to_json(t.polytope).dump() + "\n", out);
      return 0;
    }
    if (*rnd) {
      emit(model_to_json(random_generic(dim, count, extent, seed)).dump() + "\n", out);
      return 0;
    }
    if (*render) {
      emit(render_svg(load_model(model)), out);
      return 0;
    }
  } catch (const NotGenericError& e) {
    std::cerr << e.what() << "\n";
    return kExitNotGeneric;
  } catch (const ConsistencyError& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return kExitConsistency;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const std::logic_error& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return kExitConsistency;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMalformed;
  }
  return 0;
}
