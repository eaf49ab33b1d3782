#include "orthotope/io.hpp"

#include <fstream>
#include <sstream>

#include "orthotope/lattice.hpp"

namespace orthotope {

using nlohmann::json;

namespace {

std::string field(const std::string& where, std::size_t i) { return where + "[" + std::to_string(i) + "]"; }

Coord coord_of(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ModelError(where + ": expected an integer, got " + j.dump());
  if (j.is_number_unsigned() && j.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX)) {
    throw ModelError(where + ": integer out of range");
  }
  return j.get<Coord>();
}

Point point_of(const json& j, int dim, const std::string& where) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim) {
    throw ModelError(where + ": expected an array of " + std::to_string(dim) + " integers");
  }
  Point p;
  for (std::size_t i = 0; i < j.size(); ++i) p.push_back(coord_of(j[i], field(where, i)));
  return p;
}

int dim_of(const json& j) {
  if (!j.is_object()) throw ModelError("document: expected a JSON object");
  if (!j.contains("dim")) throw ModelError("dim: missing");
  const Coord d = coord_of(j["dim"], "dim");
  if (d < 0 || d > 64) throw ModelError("dim: out of range (0..64)");
  return static_cast<int>(d);
}

const json& array_field(const json& j, const char* name) {
  const json& a = j[name];
  if (!a.is_array()) throw ModelError(std::string(name) + ": expected an array");
  return a;
}

}  // namespace

IntegralOrthotope model_from_json(const json& j) {
  const int dim = dim_of(j);
  Coord scale = 1;
  if (j.contains("scale")) {
    scale = coord_of(j["scale"], "scale");
    if (scale < 1) throw ModelError("scale: must be a positive integer");
  }
  const bool has_boxes = j.contains("boxes"), has_cells = j.contains("cells");
  if (has_boxes == has_cells) throw ModelError("model: exactly one of \"boxes\" or \"cells\" is required");

  if (has_cells) {
    const json& cells = array_field(j, "cells");
    std::vector<Point> pts;
    for (std::size_t i = 0; i < cells.size(); ++i) pts.push_back(point_of(cells[i], dim, field("cells", i)));
    return IntegralOrthotope::from_cells(dim, pts, scale);
  }
  const json& boxes = array_field(j, "boxes");
  std::vector<IntBox> out;
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    const std::string where = field("boxes", i);
    if (!boxes[i].is_array() || boxes[i].size() != 2) throw ModelError(where + ": expected [[lo...], [hi...]]");
    IntBox b{point_of(boxes[i][0], dim, where + "[0]"), point_of(boxes[i][1], dim, where + "[1]")};
    for (int k = 0; k < dim; ++k) {
      if (b.lo[k] >= b.hi[k]) {
        throw ModelError(where + ": degenerate on axis " + std::to_string(k + 1) + " (lo " + std::to_string(b.lo[k]) +
                         " >= hi " + std::to_string(b.hi[k]) + ")");
      }
    }
    out.push_back(std::move(b));
  }
  return IntegralOrthotope::from_boxes(dim, out, scale);
}

json model_to_json(const IntegralOrthotope& p) {
  json j = json::object();
  j["dim"] = p.dim();
  j["scale"] = p.scale();
  if (p.unit_cell_count() <= kMaxSavedCells) {
    j["cells"] = json::array();
    for (const Point& c : p.cells()) j["cells"].push_back(c);
  } else {
    j["boxes"] = json::array();
    for (const IntBox& b : p.boxes()) j["boxes"].push_back({b.lo, b.hi});
  }
  return j;
}

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ModelError(path.string() + ": cannot open");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ModelError(path.string() + ": " + e.what());
  }
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error(path.string() + ": cannot write");
  out << text;
}

IntegralOrthotope load_model(const std::filesystem::path& path) {
  const json j = read_json(path);
  try {
    return model_from_json(j);
  } catch (const ModelError& e) {
    throw ModelError(path.string() + ": " + e.what());
  }
}

void save_model(const IntegralOrthotope& p, const std::filesystem::path& path) {
  write_text(path, model_to_json(p).dump() + "\n");
}

std::vector<CubeFace> faces_from_json(const json& j) {
  const int dim = dim_of(j);
  std::vector<CubeFace> faces;
  if (!j.contains("faces")) {
    for (const Point& c : model_from_json(j).cells()) faces.push_back({c, std::vector(dim, FaceExtent::Span)});
    return faces;
  }
  const json& list = array_field(j, "faces");
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string where = field("faces", i);
    const json& f = list[i];
    if (!f.is_object() || !f.contains("corner") || !f.contains("extent")) {
      throw ModelError(where + ": expected {\"corner\": [...], \"extent\": [...]}");
    }
    CubeFace face{point_of(f["corner"], dim, where + ".corner"), {}};
    const json& ext = f["extent"];
    if (!ext.is_array() || static_cast<int>(ext.size()) != dim) {
      throw ModelError(where + ".extent: expected " + std::to_string(dim) + " entries");
    }
    for (std::size_t k = 0; k < ext.size(); ++k) {
      const std::string s = ext[k].is_string() ? ext[k].get<std::string>() : "";
      if (s == "low") face.extent.push_back(FaceExtent::Low);
      else if (s == "high") face.extent.push_back(FaceExtent::High);
      else if (s == "span") face.extent.push_back(FaceExtent::Span);
      else throw ModelError(field(where + ".extent", k) + ": expected \"low\", \"high\" or \"span\"");
    }
    faces.push_back(std::move(face));
  }
  return faces;
}

json half_point_json(const HalfPoint& p) {
  json a = json::array();
  for (Coord x : p) {
    if (x % 2 == 0) a.push_back(x / 2);
    else a.push_back(static_cast<double>(x) / 2.0);
  }
  return a;
}

std::string rational_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

nlohmann::ordered_json analysis_report(const IntegralOrthotope& p) {
  nlohmann::ordered_json r;
  r["dim"] = p.dim();
  r["scale"] = p.scale();
  const GenericityCheck g = check_generic(p);
  r["generic"] = g.generic();
  r["witness"] = g.generic() ? json(nullptr) : half_point_json(*g.witness);

  const Rational voxels = volume(p, VolumeMethod::VoxelCount);
  const std::int64_t chi = euler(p, EulerMethod::CubicalComplex);
  r["volume"] = rational_string(voxels);
  r["euler"] = chi;
  if (!g.generic()) {
    r["census_by_mu"] = nullptr;
    r["census_by_class"] = nullptr;
    r["skeleton"] = nullptr;
    return r;
  }
  for (VolumeMethod m : {VolumeMethod::MuSum, VolumeMethod::Determinantal}) {
    const Rational v = volume(p, m);
    if (v != voxels) {
      throw ConsistencyError("volume formulas disagree: " + rational_string(v) + " vs voxel count " +
                             rational_string(voxels));
    }
  }
  const std::int64_t chi_sigma = euler(p, EulerMethod::SigmaSum);
  if (chi_sigma != chi) {
    throw ConsistencyError("Euler characteristic formulas disagree: " + std::to_string(chi_sigma) + " vs " +
                           std::to_string(chi));
  }
  const VertexCensus census = vertex_census(p);
  nlohmann::ordered_json by_mu = nlohmann::ordered_json::object(), by_class = nlohmann::ordered_json::object();
  for (const auto& [mu, n] : census.by_mu) by_mu[std::to_string(mu)] = n;
  for (const auto& [key, n] : census.by_class) by_class[key.text] = n;
  r["census_by_mu"] = by_mu;
  r["census_by_class"] = by_class;
  const SkeletonGraph sk = skeleton(p);
  r["skeleton"] = {{"nodes", sk.nodes.size()}, {"arcs", sk.arcs.size()}, {"bipartite", sk.bipartite()}};
  return r;
}

}  // namespace orthotope
