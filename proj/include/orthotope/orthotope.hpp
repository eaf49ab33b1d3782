#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace orthotope {

using Coord = std::int64_t;
/// Integer tuple (a cell min-corner or a lattice point) at working scale.
using Point = std::vector<Coord>;
/// A point of (1/2)Z^d at working scale, stored doubled: x is kept as 2x.
using HalfPoint = std::vector<Coord>;

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Closed box [lo, hi] with integer corners at working scale.
struct IntBox {
  Point lo;
  Point hi;
  bool operator==(const IntBox&) const = default;
};

/// A pure d-dimensional orthogonal polytope (1/n) * (union of integer cells).
///
/// Cells are stored on a compressed rectilinear grid: per axis a strictly
/// increasing list of breakpoints, and an occupancy flag per grid slab
/// product. The grid is kept canonical (no breakpoint across which nothing
/// changes, no empty border slabs), so equal point sets at the same scale
/// compare equal.
class IntegralOrthotope {
 public:
  IntegralOrthotope() : IntegralOrthotope(0) {}
  /// The empty orthotope.
  explicit IntegralOrthotope(int dim, Coord scale = 1);

  static IntegralOrthotope from_boxes(int dim, const std::vector<IntBox>& boxes, Coord scale = 1);
  static IntegralOrthotope from_cells(int dim, const std::vector<Point>& cells, Coord scale = 1);
  /// `occupancy` is row-major over the slabs (last axis fastest).
  static IntegralOrthotope from_grid(int dim, Coord scale, std::vector<std::vector<Coord>> breaks,
                                     std::vector<std::uint8_t> occupancy);

  int dim() const noexcept { return dim_; }
  Coord scale() const noexcept { return scale_; }
  bool empty() const noexcept { return occupancy_.empty(); }

  /// Breakpoints of 0-based axis `k`.
  const std::vector<Coord>& breaks(int k) const { return breaks_.at(k); }
  std::size_t slab_count(int k) const { return breaks_.at(k).empty() ? 0 : breaks_[k].size() - 1; }
  const std::vector<std::uint8_t>& occupancy() const noexcept { return occupancy_; }
  /// Row-major stride of 0-based axis `k` in the occupancy table.
  std::size_t stride(int k) const { return strides_.at(k); }
  bool occupied(std::span<const std::size_t> slab) const;

  /// Number of unit cells at working scale.
  BigInt unit_cell_count() const;
  /// Unit-cell min-corners in lexicographic order; throws std::length_error
  /// beyond `limit` cells.
  std::vector<Point> cells(std::size_t limit = 50'000'000) const;
  /// Interior-disjoint boxes covering the polytope, in grid order.
  std::vector<IntBox> boxes() const;

  /// Same polytope at scale `new_scale`, which must be a multiple of scale().
  IntegralOrthotope rescaled(Coord new_scale) const;
  /// Occupancy resampled on a refinement of this grid's breakpoints.
  std::vector<std::uint8_t> resample(const std::vector<std::vector<Coord>>& fine_breaks) const;

  bool operator==(const IntegralOrthotope&) const = default;

 private:
  void compute_strides();
  void canonicalize();

  int dim_ = 0;
  Coord scale_ = 1;
  std::vector<std::vector<Coord>> breaks_;
  std::vector<std::size_t> strides_;
  std::vector<std::uint8_t> occupancy_;
};

}  // namespace orthotope
