#pragma once

// Box thickening of unit-cube faces into a generic orthotope, a seeded
// generator of generic box unions, and the exact L-infinity Hausdorff
// distance between finite unions of closed boxes.

#include <cstdint>
#include <vector>

#include "orthotope/orthotope.hpp"

namespace orthotope {

/// Extent of a unit-cube face along one axis: the point corner_i, the point
/// corner_i + 1, or the whole interval between them.
enum class FaceExtent { Low, High, Span };

struct CubeFace {
  Point corner;
  std::vector<FaceExtent> extent;

  int dim() const { return static_cast<int>(extent.size()); }
};

/// Closed box, possibly flat (lo_i == hi_i allowed).
struct ClosedBox {
  Point lo;
  Point hi;
  bool operator==(const ClosedBox&) const = default;
};

/// Finite union of closed boxes given at working scale `scale`.
struct BoxSet {
  int dim = 0;
  Coord scale = 1;
  std::vector<ClosedBox> boxes;

  static BoxSet of(const IntegralOrthotope& p);
  static BoxSet of(int dim, const std::vector<CubeFace>& faces);
};

/// Pads added below and above each face, per axis, in polytope units.
struct PadSchedule {
  struct Pads {
    std::vector<Rational> below;
    std::vector<Rational> above;
  };
  std::vector<Pads> faces;

  /// Largest pad over the whole schedule.
  Rational max_pad() const;
};

struct Thickened {
  IntegralOrthotope polytope;
  PadSchedule pads;
};

/// Thickens every face into a box with pads below min(eps, 1) / 2, all
/// pads distinct, so no two boxes share a supporting hyperplane. Throws
/// std::overflow_error when the needed scale does not fit in 64 bits.
Thickened thicken(int dim, const std::vector<CubeFace>& faces, const Rational& eps);

/// 64-bit linear congruential generator (Knuth's MMIX constants);
/// draws use the high 31 bits.
class Lcg {
 public:
  static constexpr std::uint64_t kMultiplier = 6364136223846793005ULL;
  static constexpr std::uint64_t kIncrement = 1442695040888963407ULL;

  explicit Lcg(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Value in [0, bound) by reduction modulo bound.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

/// Union of `count` boxes whose supporting hyperplanes are drawn from
/// `pool[k]` (axis k) without repetition, so the union is generic.
IntegralOrthotope random_generic_from_pool(int dim, int count, const std::vector<std::vector<Coord>>& pool,
                                           Lcg& rng);

/// Pool = {0, ..., extent - 1} on every axis.
IntegralOrthotope random_generic(int dim, int count, Coord extent, std::uint64_t seed);

/// Exact L-infinity Hausdorff distance; throws on empty input.
Rational hausdorff_distance(const BoxSet& a, const BoxSet& b);
Rational hausdorff_distance(const IntegralOrthotope& a, const IntegralOrthotope& b);

}  // namespace orthotope
