#pragma once

// Region scanner over the doubled compressed grid.
//
// Along axis k with breakpoints b_0 < ... < b_m, index q in [0, 2m] stands
// for the breakpoint b_{q/2} when q is even and for the open slab
// (b_j, b_{j+1}) when q = 2j+1. Every half-lattice point of one region has
// the same tangent cone.

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "orthotope/lattice.hpp"

namespace orthotope::detail {

struct ConeInfo {
  OrthantSet cone;
  Recognition recognition = Empty{};
  std::vector<Axis> essential;
  int degree = -1;
  bool degenerate = false;
  std::uint64_t mu_d = 0;
  std::int64_t tau_d = 0;
  // Filled for vertex cones only.
  int sigma = 0;
  CanonicalKey key;

  bool nonempty() const { return !cone.empty(); }
  bool vertex() const { return degree == 0 && !cone.empty() && !cone.is_full(); }
};

class Scanner {
 public:
  explicit Scanner(const IntegralOrthotope& p);

  int dim() const { return dim_; }
  /// Region index ranges; empty polytopes have no regions at all.
  const std::vector<std::size_t>& extents() const { return extents_; }
  bool has_regions() const { return !polytope_.empty(); }
  std::size_t region_count() const;
  std::size_t flat(const std::vector<std::size_t>& q) const;

  std::uint64_t cone_mask(const std::vector<std::size_t>& q) const;
  const ConeInfo& info(std::uint64_t mask);
  const ConeInfo& info_at(const std::vector<std::size_t>& q) { return info(cone_mask(q)); }

  /// Doubled coordinate of the lexicographically first point of the region.
  Coord first_coord(int k, std::size_t q) const;
  HalfPoint first_point(const std::vector<std::size_t>& q) const;
  /// Lattice points (integer coordinates) inside the region along axis k.
  Coord lattice_points(int k, std::size_t q) const;
  Coord breakpoint(int k, std::size_t j) const { return polytope_.breaks(k)[j]; }

  /// Region index of a doubled coordinate, or -1 when outside the grid.
  std::ptrdiff_t locate(int k, Coord doubled) const;

 private:
  const IntegralOrthotope& polytope_;
  int dim_;
  std::vector<std::size_t> extents_;
  std::vector<std::size_t> strides_;
  // Occupancy offsets of the slab on the plus / minus side, -1 outside.
  std::vector<std::vector<std::ptrdiff_t>> plus_;
  std::vector<std::vector<std::ptrdiff_t>> minus_;
  std::unordered_map<std::uint64_t, ConeInfo> cache_;
};

PointClass to_point_class(const ConeInfo& c, HalfPoint point);
void require_generic(const IntegralOrthotope& p);

}  // namespace orthotope::detail
