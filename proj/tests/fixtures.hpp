#pragma once

// Shared shapes and the random suite of generic orthotopes.

#include <vector>

#include "orthotope/genericize.hpp"
#include "orthotope/orthotope.hpp"

namespace fixture {

using namespace orthotope;

// The solid-torus example: 28 unit cubes by min-corner.
inline const std::vector<Point>& torus_corners() {
  static const std::vector<Point> c{
      {0, 0, 0}, {0, 1, 0}, {0, 2, 0}, {0, 3, 0}, {0, 3, 1}, {1, 0, 0}, {1, 0, 1}, {1, 0, 2}, {1, 1, 0}, {1, 3, 0},
      {1, 3, 1}, {2, 0, 0}, {2, 0, 1}, {2, 0, 2}, {2, 1, 0}, {2, 1, 1}, {2, 2, 0}, {2, 2, 1}, {2, 3, 0}, {2, 3, 1},
      {3, 0, 0}, {3, 0, 1}, {3, 0, 2}, {3, 1, 0}, {3, 1, 1}, {4, 0, 0}, {4, 0, 1}, {4, 0, 2}};
  return c;
}

inline IntegralOrthotope torus() {
  std::vector<IntBox> boxes;
  for (const Point& v : torus_corners()) boxes.push_back({v, {v[0] + 1, v[1] + 1, v[2] + 1}});
  return IntegralOrthotope::from_boxes(3, boxes);
}

// Slab with two cubes on top that meet along the vertical line x = y = 1.
inline IntegralOrthotope rigid_q() {
  return IntegralOrthotope::from_boxes(
      3, {{{0, 0, 0}, {2, 2, 1}}, {{0, 0, 1}, {1, 1, 2}}, {{1, 1, 1}, {2, 2, 2}}});
}

inline IntegralOrthotope cube(int d, Coord at = 0, Coord side = 1) {
  return IntegralOrthotope::from_boxes(d, {{Point(d, at), Point(d, at + side)}});
}

inline IntegralOrthotope l_shape() { return IntegralOrthotope::from_cells(2, {{0, 0}, {1, 0}, {0, 1}}); }

struct SuiteCase {
  int dim;
  int count;
  Coord extent;
  std::uint64_t seed;
  IntegralOrthotope p;
};

// `n` generic instances over d = 2, 3, 4 with at most `max_cells` unit cells.
inline std::vector<SuiteCase> random_suite(int n, std::uint64_t base_seed = 1, unsigned max_cells = 500) {
  std::vector<SuiteCase> out;
  Lcg pick(base_seed);
  for (int i = 0; static_cast<int>(out.size()) < n; ++i) {
    const int d = 2 + i % 3;
    const int max_count = d == 2 ? 10 : d == 3 ? 6 : 3;
    const int count = 1 + static_cast<int>(pick.below(max_count));
    const Coord extent = 2 * count + static_cast<Coord>(pick.below(d == 4 ? 2 : 5));
    const std::uint64_t seed = base_seed * 1000003 + i;
    IntegralOrthotope p = random_generic(d, count, extent, seed);
    if (p.unit_cell_count() > max_cells) continue;
    out.push_back({d, count, extent, seed, std::move(p)});
  }
  return out;
}

}  // namespace fixture
