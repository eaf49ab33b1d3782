#include <cstdio>
#include <sstream>

#include "orthotope/io.hpp"
#include "orthotope/lattice.hpp"

namespace orthotope {

namespace {

constexpr int kUnitPx = 32;
constexpr int kMarginPx = 16;
constexpr const char* kFill = "#c6dbef";
constexpr const char* kStroke = "#08306b";
constexpr const char* kSalient = "#238b45";
constexpr const char* kReentrant = "#cb181d";
constexpr const char* kOther = "#6a51a3";

// Pixel offsets are exact rationals; print integers plainly, others with
// three decimals and no trailing zeros.
std::string px(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", r.convert_to<double>());
  std::string s = buf;
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
  return s;
}

}  // namespace

std::string render_svg(const IntegralOrthotope& p) {
  if (p.dim() != 2) throw std::invalid_argument("render2d needs a 2-dimensional orthotope, got dimension " + std::to_string(p.dim()));
  const Coord n = p.scale();
  Coord x0 = 0, x1 = 0, y0 = 0, y1 = 0;
  if (!p.empty()) {
    x0 = p.breaks(0).front();
    x1 = p.breaks(0).back();
    y0 = p.breaks(1).front();
    y1 = p.breaks(1).back();
  }
  auto X = [&](Coord x) { return px(Rational(kMarginPx) + Rational((x - x0) * kUnitPx, n)); };
  auto Y = [&](Coord y) { return px(Rational(kMarginPx) + Rational((y1 - y) * kUnitPx, n)); };
  const std::string width = px(Rational(2 * kMarginPx) + Rational((x1 - x0) * kUnitPx, n));
  const std::string height = px(Rational(2 * kMarginPx) + Rational((y1 - y0) * kUnitPx, n));

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << " " << height << "\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height << "\" fill=\"#ffffff\"/>\n";

  svg << "<g class=\"cells\" fill=\"" << kFill << "\" stroke=\"none\">\n";
  for (const IntBox& b : p.boxes()) {
    svg << "<rect x=\"" << X(b.lo[0]) << "\" y=\"" << Y(b.hi[1]) << "\" width=\""
        << px(Rational((b.hi[0] - b.lo[0]) * kUnitPx, n)) << "\" height=\""
        << px(Rational((b.hi[1] - b.lo[1]) * kUnitPx, n)) << "\"/>\n";
  }
  svg << "</g>\n";

  // Boundary: grid segments with an occupied cell on exactly one side.
  svg << "<g class=\"boundary\" stroke=\"" << kStroke << "\" stroke-width=\"2\" stroke-linecap=\"square\">\n";
  if (!p.empty()) {
    const std::size_t mx = p.slab_count(0), my = p.slab_count(1);
    auto occ = [&](std::ptrdiff_t i, std::ptrdiff_t j) {
      if (i < 0 || j < 0 || i >= static_cast<std::ptrdiff_t>(mx) || j >= static_cast<std::ptrdiff_t>(my)) return false;
      return p.occupancy()[static_cast<std::size_t>(i) * p.stride(0) + static_cast<std::size_t>(j)] != 0;
    };
    const auto& bx = p.breaks(0);
    const auto& by = p.breaks(1);
    for (std::size_t i = 0; i <= mx; ++i)
      for (std::size_t j = 0; j < my; ++j) {
        const auto ii = static_cast<std::ptrdiff_t>(i), jj = static_cast<std::ptrdiff_t>(j);
        if (occ(ii - 1, jj) != occ(ii, jj)) {
          svg << "<line x1=\"" << X(bx[i]) << "\" y1=\"" << Y(by[j]) << "\" x2=\"" << X(bx[i]) << "\" y2=\""
              << Y(by[j + 1]) << "\"/>\n";
        }
      }
    for (std::size_t j = 0; j <= my; ++j)
      for (std::size_t i = 0; i < mx; ++i) {
        const auto ii = static_cast<std::ptrdiff_t>(i), jj = static_cast<std::ptrdiff_t>(j);
        if (occ(ii, jj - 1) != occ(ii, jj)) {
          svg << "<line x1=\"" << X(bx[i]) << "\" y1=\"" << Y(by[j]) << "\" x2=\"" << X(bx[i + 1]) << "\" y2=\""
              << Y(by[j]) << "\"/>\n";
        }
      }
  }
  svg << "</g>\n";

  svg << "<g class=\"vertices\" stroke=\"none\">\n";
  for (const PointClass& v : vertices(p)) {
    const std::size_t mu = v.cone.count();
    const char* cls = mu == 1 ? "salient" : mu == 3 ? "reentrant" : "degenerate";
    const char* color = mu == 1 ? kSalient : mu == 3 ? kReentrant : kOther;
    svg << "<circle class=\"" << cls << "\" cx=\"" << X(v.point[0] / 2) << "\" cy=\"" << Y(v.point[1] / 2)
        << "\" r=\"4\" fill=\"" << color << "\"/>\n";
  }
  svg << "</g>\n</svg>\n";
  return svg.str();
}

}  // namespace orthotope
