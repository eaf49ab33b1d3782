#pragma once

// Floral arrangements: signed series-parallel diagrams evaluated on the
// coordinate half-spaces, their recognition from orthant sets, and the
// local structure (facets, edges, cross-sections) of floral vertices.

#include <cstdint>
#include <variant>
#include <vector>

#include "orthotope/orthant_set.hpp"
#include "orthotope/spd.hpp"

namespace orthotope {

/// An orthant set that no read-once diagram produces.
struct Degenerate {
  bool operator==(const Degenerate&) const = default;
};

/// A floral arrangement that is constant along `free_axes`; `diagram` uses
/// the remaining (essential) axes with their original labels.
struct Cylinder {
  std::vector<Axis> free_axes;
  SignedSpd diagram;
  bool operator==(const Cylinder&) const = default;
};

using Recognition = std::variant<SignedSpd, Cylinder, Degenerate, Empty, Full>;
using FaceDiagram = std::variant<SignedSpd, Trivial>;
using SliceDiagram = std::variant<SignedSpd, Full, Empty>;

/// Series or parallel connection of signed diagrams on disjoint edges.
SignedSpd join_signed(Spd::Kind kind, std::vector<SignedSpd> parts);

/// Evaluates the diagram with edge i read as s_i * x_i >= 0.
OrthantSet orthants_of(const SignedSpd& spd, int dim);

/// Inverse of orthants_of. Inessential axes are split off first; the rest is
/// factored as a Cartesian product, or its complement is, recursively.
Recognition recognize(const OrthantSet& orthants);

/// True when the recognition is a diagram (possibly a cylinder).
bool is_floral(const Recognition& r);

/// A signed diagram whose edge set is exactly {1..d}.
class FloralVertex {
 public:
  explicit FloralVertex(SignedSpd diagram);

  int dim() const noexcept { return diagram_.shape().edge_count(); }
  const SignedSpd& diagram() const noexcept { return diagram_; }
  const OrthantSet& orthants() const noexcept { return orthants_; }

 private:
  SignedSpd diagram_;
  OrthantSet orthants_;
};

/// Diagram of (boundary of the cone) on x_i = 0, on edges {1..d} \ {i}.
/// Computed by repeated complementation of the branch that holds i.
FaceDiagram facet(const FloralVertex& v, Axis axis);

/// epsilon in {+1,-1} such that the ray epsilon * e_i is an edge of the cone.
int edge_direction(const FloralVertex& v, Axis axis);

/// Slice of the cone at x_i = edge_direction.
FaceDiagram edge_cross_section(const FloralVertex& v, Axis axis);

/// Slice of the cone at x_i = -edge_direction.
SliceDiagram residual_cross_section(const FloralVertex& v, Axis axis);

struct OrthantCounts {
  std::uint64_t mu_d = 0;  // occupied orthants
  std::int64_t tau_d = 0;  // sum of occupied orthant signs
  bool operator==(const OrthantCounts&) const = default;
};

OrthantCounts orthant_counts(const OrthantSet& orthants);

enum class SetOp { Intersect, Union, Complement };

/// Pointwise set operation; Complement ignores `b`.
OrthantSet combine(const OrthantSet& a, const OrthantSet& b, SetOp op);

}  // namespace orthotope
