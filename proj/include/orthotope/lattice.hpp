#pragma once

// Global analysis of integral orthogonal polytopes: tangent cones at
// half-lattice points, genericity, vertex census, volume, Euler
// characteristic, 1-skeleton, face poset, slices and Boolean combinations.
//
// Points are HalfPoints: coordinates of (1/2)Z at working scale, doubled.
// Analysis is limited to d <= 6 (cones are kept as 64-bit orthant masks).

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "orthotope/floral.hpp"
#include "orthotope/orthotope.hpp"

namespace orthotope {

constexpr int kMaxLatticeDim = 6;

struct PointClass {
  HalfPoint point;
  OrthantSet cone;
  std::vector<Axis> essential_axes;
  int degree = -1;  // inessential axis count; -1 when the cone is empty
  Recognition floral = Empty{};

  bool is_vertex() const { return degree == 0 && !cone.empty() && !cone.is_full(); }
};

class NotGenericError : public std::runtime_error {
 public:
  explicit NotGenericError(HalfPoint witness);
  const HalfPoint& witness() const noexcept { return witness_; }

 private:
  HalfPoint witness_;
};

/// An identity that must hold for every generic orthotope failed.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

PointClass classify_point(const IntegralOrthotope& p, const HalfPoint& point);

/// Singular points in lexicographic order (axis 1 most significant).
std::vector<PointClass> vertices(const IntegralOrthotope& p);

struct GenericityCheck {
  std::optional<HalfPoint> witness;  // first point with a degenerate cone
  bool generic() const { return !witness; }
};

GenericityCheck check_generic(const IntegralOrthotope& p);

struct VertexCensus {
  std::map<CanonicalKey, std::uint64_t> by_class;
  std::map<std::uint64_t, std::uint64_t> by_mu;

  std::uint64_t total() const;
};

VertexCensus vertex_census(const IntegralOrthotope& p);

enum class VolumeMethod { MuSum, Determinantal, VoxelCount };
enum class EulerMethod { SigmaSum, CubicalComplex };

Rational volume(const IntegralOrthotope& p, VolumeMethod method);
std::int64_t euler(const IntegralOrthotope& p, EulerMethod method);

/// Sum of bouquet signs over all vertices.
std::int64_t sigma_sum(const IntegralOrthotope& p);

struct SkeletonNode {
  HalfPoint point;
  int tau = 0;
};

struct SkeletonArc {
  std::size_t from = 0;  // from.point < to.point along `axis`
  std::size_t to = 0;
  Axis axis = 0;
};

struct SkeletonGraph {
  std::vector<SkeletonNode> nodes;
  std::vector<SkeletonArc> arcs;

  std::vector<std::size_t> degrees() const;
  /// True when tau differs across every arc.
  bool bipartite() const;
};

SkeletonGraph skeleton(const IntegralOrthotope& p);

struct Face {
  int dim = 0;
  std::vector<Axis> free_axes;
  PointClass representative;
  /// Closure projected on the free axes, same scale as the polytope.
  IntegralOrthotope closure;
};

struct FacePoset {
  int dim = 0;
  std::vector<Face> faces;
  /// (lower, upper) pairs with faces[lower] inside the closure of faces[upper].
  std::vector<std::pair<std::size_t, std::size_t>> incidence;

  /// Face counts by dimension 0..dim.
  std::vector<std::size_t> f_vector() const;
};

FacePoset face_poset(const IntegralOrthotope& p);

/// Slice by x_axis = value/2 for every entry (values doubled at working scale).
/// Integer values take the closed slice (union of both neighbouring layers).
IntegralOrthotope cross_section(const IntegralOrthotope& p, const std::map<Axis, Coord>& doubled_values);

enum class BoolOp { Union, Intersection };

struct SetOpResult {
  /// Cell-wise result. For an intersection whose closed sets also meet in
  /// lower-dimensional pieces this is only the d-dimensional part.
  IntegralOrthotope result;
  /// The closed-set result is a generic orthotope (pure, every vertex floral).
  bool generic = false;
  /// False when the closed-set intersection is not pure d-dimensional.
  bool pure = true;
};

SetOpResult set_ops(const IntegralOrthotope& a, const IntegralOrthotope& b, BoolOp op);

}  // namespace orthotope
