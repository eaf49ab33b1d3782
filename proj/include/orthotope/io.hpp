#pragma once

// Model / report JSON and the 2D SVG view.
//
// Model:  {"dim": d, "scale": n, "boxes": [[[lo...], [hi...]], ...]}
//     or  {"dim": d, "scale": n, "cells": [[x...], ...]}
// Faces:  {"dim": d, "faces": [{"corner": [x...], "extent": ["low"|"high"|"span", ...]}, ...]}

#include <filesystem>
#include <json.hpp>
#include <stdexcept>
#include <string>

#include "orthotope/genericize.hpp"
#include "orthotope/orthotope.hpp"

namespace orthotope {

/// Malformed model or faces input; the message names the offending field.
class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Models up to this many unit cells are saved in the cells form.
constexpr std::uint64_t kMaxSavedCells = 100'000;

IntegralOrthotope model_from_json(const nlohmann::json& j);
nlohmann::json model_to_json(const IntegralOrthotope& p);

/// Reads a JSON document, reporting syntax errors with line and column.
nlohmann::json read_json(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);

IntegralOrthotope load_model(const std::filesystem::path& path);
void save_model(const IntegralOrthotope& p, const std::filesystem::path& path);

/// Accepts either a faces document or a model (every cell becomes a face).
std::vector<CubeFace> faces_from_json(const nlohmann::json& j);

/// Full analysis. Non-generic input gives "generic": false, the witness,
/// the voxel volume and cubical Euler characteristic, and nulls elsewhere.
/// Throws ConsistencyError when the independent formulas disagree.
nlohmann::ordered_json analysis_report(const IntegralOrthotope& p);

/// Coordinates are doubled at working scale; odd values print as x.5.
nlohmann::json half_point_json(const HalfPoint& p);

std::string rational_string(const Rational& r);

/// SVG 1.1 drawing of a 2D orthotope; throws std::invalid_argument otherwise.
std::string render_svg(const IntegralOrthotope& p);

}  // namespace orthotope
