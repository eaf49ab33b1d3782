#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "orthotope/spd.hpp"

namespace orthotope {

/// A union of closed orthants of R^d (a local orthotopal arrangement),
/// stored as a membership table over the 2^d sign tuples.
///
/// Orthant indices encode sign tuples: bit (i-1) of the index is set iff
/// s_i = -1, so index 0 is the all-positive orthant.
class OrthantSet {
 public:
  using Index = std::uint64_t;
  static constexpr int kMaxDim = 24;

  explicit OrthantSet(int dim = 0);
  /// Builds from a bit mask over orthant indices (dim <= 6).
  static OrthantSet from_mask(int dim, std::uint64_t mask);
  static OrthantSet full(int dim);
  /// The half-space sign * x_axis >= 0.
  static OrthantSet half_space(int dim, Axis axis, int sign);

  int dim() const noexcept { return dim_; }
  std::size_t orthant_count() const noexcept { return bits_.size(); }

  bool contains(Index s) const { return bits_.test(s); }
  void insert(Index s) { bits_.set(s); }
  void erase(Index s) { bits_.reset(s); }

  /// Sign s_i of orthant `s` along axis i.
  static int sign_of(Index s, Axis axis) noexcept { return (s >> (axis - 1)) & 1U ? -1 : 1; }
  /// (-1)^s, the product of the coordinate signs.
  static int orthant_sign(Index s) noexcept;

  std::size_t count() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }
  bool is_full() const { return bits_.all(); }

  OrthantSet complement() const;
  OrthantSet operator&(const OrthantSet& other) const;
  OrthantSet operator|(const OrthantSet& other) const;

  /// Membership changes when s_i is flipped for some orthant.
  bool essential(Axis axis) const;
  std::vector<Axis> essential_axes() const;

  /// The (d-1)-dimensional arrangement seen on the hyperplane x_i = c for
  /// c = +1 or -1 (indices keep the relative order of the remaining axes).
  OrthantSet slice(Axis axis, int side) const;

  /// Projection onto the listed axes (0-based local positions, ascending).
  OrthantSet project(const std::vector<int>& positions) const;

  /// Low 64 bits of the table; only meaningful for dim <= 6.
  std::uint64_t mask() const;

  bool operator==(const OrthantSet& other) const { return dim_ == other.dim_ && bits_ == other.bits_; }
  bool operator<(const OrthantSet& other) const;

 private:
  int dim_;
  boost::dynamic_bitset<std::uint64_t> bits_;
};

}  // namespace orthotope
