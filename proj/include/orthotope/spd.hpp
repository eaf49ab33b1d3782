#pragma once

// Series-parallel diagrams (parse trees of read-once Boolean expressions).
//
// Series connection is intersection, parallel connection is union. Trees are
// kept in normal form: n-ary nodes, no Series child under a Series node (and
// likewise for Parallel), children ordered by shape code then by smallest
// axis label. Structural equality of normal forms is equality of diagrams.

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace orthotope {

/// 1-based axis label. Edge i of a diagram stands for the half-space x_i >= 0.
using Axis = int;

class SpdError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public SpdError {
 public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// The honorary single-vertex diagram (what remains after deleting the only edge).
struct Trivial {
  bool operator==(const Trivial&) const = default;
};
/// Constant-true result of a substitution: the whole space.
struct Full {
  bool operator==(const Full&) const = default;
};
/// Constant-false result of a substitution: the empty set.
struct Empty {
  bool operator==(const Empty&) const = default;
};

/// Printable identifier of an unlabeled, unsigned shape. Its text is the
/// expression of the shape's canonical representative (labels 1..d, all
/// positive), e.g. "(1|2)&3".
struct CanonicalKey {
  std::string text;
  auto operator<=>(const CanonicalKey&) const = default;
};

class Spd {
 public:
  enum class Kind : std::uint8_t { Leaf, Series, Parallel };

  static Spd leaf(Axis axis);
  /// Series connection of `parts`; a single part is returned unchanged.
  static Spd series(std::vector<Spd> parts);
  static Spd parallel(std::vector<Spd> parts);
  static Spd join(Kind kind, std::vector<Spd> parts);

  Kind kind() const noexcept { return kind_; }
  bool is_leaf() const noexcept { return kind_ == Kind::Leaf; }
  /// Label of a leaf; throws for internal nodes.
  Axis axis() const;
  const std::vector<Spd>& children() const noexcept { return children_; }

  /// Sorted edge labels.
  const std::vector<Axis>& edges() const noexcept { return edges_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  int vertex_count() const noexcept { return vertices_; }
  Axis min_axis() const noexcept { return edges_.front(); }
  bool contains(Axis axis) const;

  /// Structural shape code used for normal-form ordering. Equal codes mean
  /// isomorphic unlabeled shapes.
  const std::string& shape_code() const noexcept { return code_; }

  bool operator==(const Spd& other) const;

 private:
  Spd() = default;
  void finish();

  Kind kind_ = Kind::Leaf;
  Axis axis_ = 0;
  std::vector<Spd> children_;
  std::vector<Axis> edges_;
  int vertices_ = 2;
  std::string code_;
};

/// A diagram together with a sign (+1 or -1) for each of its edges.
class SignedSpd {
 public:
  /// All edges positive.
  explicit SignedSpd(Spd shape);
  SignedSpd(Spd shape, std::map<Axis, int> signs);

  const Spd& shape() const noexcept { return shape_; }
  const std::map<Axis, int>& signs() const noexcept { return signs_; }
  int sign(Axis axis) const;
  /// Product of all edge signs, (-1)^s.
  int sign_product() const;

  bool operator==(const SignedSpd&) const = default;

 private:
  Spd shape_;
  std::map<Axis, int> signs_;
};

enum class EdgeKind { Conjunctive, Disjunctive };

struct Bouquet {
  int rank = 0;  // e - v + 1
  int sign = 1;  // (-1)^rank
  bool operator==(const Bouquet&) const = default;
};

using Substitution = std::variant<Spd, Full, Empty>;

/// Grammar: expr := term ('|' term)* ; term := factor ('&' factor)* ;
/// factor := ['~'] (INT | '(' expr ')'). '~' on a group applies DeMorgan.
SignedSpd parse_expr(std::string_view text);
std::string format_expr(const SignedSpd& spd);
std::string format_expr(const Spd& spd);

Spd dual(const Spd& spd);
SignedSpd dual(const SignedSpd& spd);

Bouquet bouquet(const Spd& spd);
Bouquet bouquet(const Trivial&);

std::uint64_t mu(const Spd& spd);
int tau(const SignedSpd& spd);

EdgeKind edge_kind(const Spd& spd, Axis axis);

/// Replaces edge `axis` by a constant and simplifies.
Substitution substitute(const Spd& spd, Axis axis, bool value);

/// Deletion of an edge (short-circuit a conjunctive edge, open a
/// disjunctive one). Throws SpdError on a single-edge diagram.
Spd delete_edge(const Spd& spd, Axis axis);
std::variant<Spd, Trivial> delete_edge_or_trivial(const Spd& spd, Axis axis);

/// Diagram obtained by dropping every partner of `axis` and substituting the
/// constant that is opposite to the deletion constant.
Substitution residual_diagram(const Spd& spd, Axis axis);

/// Copies the signs of `from` onto the edges of `shape` (a sub-diagram).
SignedSpd with_signs_of(const Spd& shape, const SignedSpd& from);

/// Same shape relabeled 1..d in normal-form depth-first order.
Spd canonical_representative(const Spd& spd);
CanonicalKey canonical_key(const Spd& spd);

inline constexpr int kDefaultShapeBound = 12;

/// One representative per unlabeled shape on `d` edges, in key order.
std::vector<Spd> enumerate_shapes(int d, int max_d = kDefaultShapeBound);

}  // namespace orthotope
