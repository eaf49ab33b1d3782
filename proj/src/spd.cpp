#include "orthotope/spd.hpp"

#include <algorithm>
#include <cctype>
#include <iterator>
#include <utility>

namespace orthotope {

ParseError::ParseError(const std::string& what, std::size_t position)
    : SpdError(what + " at position " + std::to_string(position)), position_(position) {}

// ---------------------------------------------------------------------------
// Spd

Spd Spd::leaf(Axis axis) {
  if (axis < 1) throw SpdError("axis labels must be positive, got " + std::to_string(axis));
  Spd s;
  s.kind_ = Kind::Leaf;
  s.axis_ = axis;
  s.finish();
  return s;
}

Spd Spd::series(std::vector<Spd> parts) { return join(Kind::Series, std::move(parts)); }

Spd Spd::parallel(std::vector<Spd> parts) { return join(Kind::Parallel, std::move(parts)); }

Spd Spd::join(Kind kind, std::vector<Spd> parts) {
  if (kind == Kind::Leaf) throw SpdError("join needs Series or Parallel");
  if (parts.empty()) throw SpdError("cannot connect an empty list of diagrams");
  if (parts.size() == 1) return std::move(parts.front());

  Spd s;
  s.kind_ = kind;
  for (auto& p : parts) {
    if (p.kind_ == kind) {
      std::move(p.children_.begin(), p.children_.end(), std::back_inserter(s.children_));
    } else {
      s.children_.push_back(std::move(p));
    }
  }
  std::sort(s.children_.begin(), s.children_.end(), [](const Spd& a, const Spd& b) {
    if (a.code_ != b.code_) return a.code_ < b.code_;
    return a.min_axis() < b.min_axis();
  });
  s.finish();
  return s;
}

void Spd::finish() {
  edges_.clear();
  code_.clear();
  if (kind_ == Kind::Leaf) {
    edges_.push_back(axis_);
    vertices_ = 2;
    code_ = "e";
    return;
  }
  int v = 0;
  code_ += kind_ == Kind::Series ? 'S' : 'P';
  code_ += '(';
  for (std::size_t k = 0; k < children_.size(); ++k) {
    const Spd& c = children_[k];
    edges_.insert(edges_.end(), c.edges_.begin(), c.edges_.end());
    v += c.vertices_;
    if (k) code_ += ',';
    code_ += c.code_;
  }
  code_ += ')';
  const int joins = static_cast<int>(children_.size()) - 1;
  vertices_ = kind_ == Kind::Series ? v - joins : v - 2 * joins;

  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw SpdError("axis " + std::to_string(*dup) + " appears more than once");
  }
}

Axis Spd::axis() const {
  if (kind_ != Kind::Leaf) throw SpdError("axis() called on an internal node");
  return axis_;
}

bool Spd::contains(Axis axis) const { return std::binary_search(edges_.begin(), edges_.end(), axis); }

bool Spd::operator==(const Spd& other) const {
  if (kind_ != other.kind_ || code_ != other.code_ || edges_ != other.edges_) return false;
  if (kind_ == Kind::Leaf) return axis_ == other.axis_;
  return children_ == other.children_;
}

// ---------------------------------------------------------------------------
// SignedSpd

SignedSpd::SignedSpd(Spd shape) : shape_(std::move(shape)) {
  for (Axis a : shape_.edges()) signs_.emplace(a, 1);
}

SignedSpd::SignedSpd(Spd shape, std::map<Axis, int> signs)
    : shape_(std::move(shape)), signs_(std::move(signs)) {
  if (signs_.size() != shape_.edges().size()) {
    throw SpdError("sign map does not match the edge set of the diagram");
  }
  for (Axis a : shape_.edges()) {
    auto it = signs_.find(a);
    if (it == signs_.end()) throw SpdError("missing sign for axis " + std::to_string(a));
    if (it->second != 1 && it->second != -1) throw SpdError("signs must be +1 or -1");
  }
}

int SignedSpd::sign(Axis axis) const {
  auto it = signs_.find(axis);
  if (it == signs_.end()) throw SpdError("axis " + std::to_string(axis) + " is not an edge");
  return it->second;
}

int SignedSpd::sign_product() const {
  int p = 1;
  for (const auto& [axis, s] : signs_) p *= s;
  return p;
}

// ---------------------------------------------------------------------------
// Parsing and formatting

namespace {

struct Parsed {
  Spd shape;
  std::map<Axis, int> signs;
};

Parsed connect(Spd::Kind kind, std::vector<Parsed> parts, std::size_t pos) {
  std::map<Axis, int> signs;
  std::vector<Spd> shapes;
  shapes.reserve(parts.size());
  for (auto& p : parts) {
    for (const auto& [axis, s] : p.signs) {
      if (!signs.emplace(axis, s).second) {
        throw ParseError("axis " + std::to_string(axis) + " is repeated", pos);
      }
    }
    shapes.push_back(std::move(p.shape));
  }
  return {Spd::join(kind, std::move(shapes)), std::move(signs)};
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Parsed run() {
    skip();
    if (pos_ == text_.size()) throw ParseError("empty expression", pos_);
    Parsed result = expr();
    skip();
    if (pos_ != text_.size()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return result;
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Parsed expr() {
    std::size_t start = pos_;
    std::vector<Parsed> terms;
    terms.push_back(term());
    while (accept('|')) terms.push_back(term());
    if (terms.size() == 1) return std::move(terms.front());
    return connect(Spd::Kind::Parallel, std::move(terms), start);
  }

  Parsed term() {
    std::size_t start = pos_;
    std::vector<Parsed> factors;
    factors.push_back(factor());
    while (accept('&')) factors.push_back(factor());
    if (factors.size() == 1) return std::move(factors.front());
    return connect(Spd::Kind::Series, std::move(factors), start);
  }

  Parsed factor() {
    bool negated = accept('~');
    skip();
    if (pos_ == text_.size()) throw ParseError("unexpected end of expression", pos_);
    if (accept('(')) {
      Parsed inner = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      if (!negated) return inner;
      SignedSpd d = dual(SignedSpd(std::move(inner.shape), std::move(inner.signs)));
      return {d.shape(), d.signs()};
    }
    if (!std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    }
    std::size_t start = pos_;
    long long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1'000'000) throw ParseError("axis label too large", start);
      ++pos_;
    }
    if (value < 1) throw ParseError("axis labels start at 1", start);
    Axis axis = static_cast<Axis>(value);
    return {Spd::leaf(axis), {{axis, negated ? -1 : 1}}};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void format_into(const Spd& s, const std::map<Axis, int>* signs, std::string& out) {
  if (s.is_leaf()) {
    if (signs && signs->at(s.axis()) < 0) out += '~';
    out += std::to_string(s.axis());
    return;
  }
  const char op = s.kind() == Spd::Kind::Series ? '&' : '|';
  bool first = true;
  for (const Spd& c : s.children()) {
    if (!first) out += op;
    first = false;
    if (c.is_leaf()) {
      format_into(c, signs, out);
    } else {
      out += '(';
      format_into(c, signs, out);
      out += ')';
    }
  }
}

}  // namespace

SignedSpd parse_expr(std::string_view text) {
  Parsed p = Parser(text).run();
  return SignedSpd(std::move(p.shape), std::move(p.signs));
}

std::string format_expr(const SignedSpd& spd) {
  std::string out;
  format_into(spd.shape(), &spd.signs(), out);
  return out;
}

std::string format_expr(const Spd& spd) {
  std::string out;
  format_into(spd, nullptr, out);
  return out;
}

// ---------------------------------------------------------------------------
// Duality and valuations

Spd dual(const Spd& spd) {
  if (spd.is_leaf()) return spd;
  std::vector<Spd> parts;
  parts.reserve(spd.children().size());
  for (const Spd& c : spd.children()) parts.push_back(dual(c));
  return Spd::join(spd.kind() == Spd::Kind::Series ? Spd::Kind::Parallel : Spd::Kind::Series,
                   std::move(parts));
}

SignedSpd dual(const SignedSpd& spd) {
  std::map<Axis, int> negated;
  for (const auto& [axis, s] : spd.signs()) negated.emplace(axis, -s);
  return SignedSpd(dual(spd.shape()), std::move(negated));
}

Bouquet bouquet(const Spd& spd) {
  const int rank = spd.edge_count() - spd.vertex_count() + 1;
  return {rank, rank % 2 == 0 ? 1 : -1};
}

Bouquet bouquet(const Trivial&) { return {0, 1}; }

std::uint64_t mu(const Spd& spd) {
  if (spd.edge_count() > 63) throw SpdError("mu is limited to 63 edges");
  std::uint64_t result = 1;
  if (spd.is_leaf()) {
    result = 1;
  } else if (spd.kind() == Spd::Kind::Series) {
    for (const Spd& c : spd.children()) result *= mu(c);
  } else {
    // mu(P) = 2^d - mu(dual P), and dual P is the series of the children's duals.
    std::uint64_t dual_mu = 1;
    for (const Spd& c : spd.children()) dual_mu *= (std::uint64_t{1} << c.edge_count()) - mu(c);
    result = (std::uint64_t{1} << spd.edge_count()) - dual_mu;
  }
  if (result % 2 == 0) throw SpdError("internal: mu must be odd");
  return result;
}

namespace {

int tau_rec(const Spd& s, const std::map<Axis, int>& signs) {
  if (s.is_leaf()) return signs.at(s.axis());
  int product = 1;
  for (const Spd& c : s.children()) product *= tau_rec(c, signs);
  if (s.kind() == Spd::Kind::Series) return product;
  // tau(P) = -tau(dual P) = -prod(-tau(child)).
  const int k = static_cast<int>(s.children().size());
  return (k % 2 == 0 ? -1 : 1) * product;
}

const Spd* parent_of(const Spd& root, Axis axis) {
  if (root.is_leaf()) return nullptr;
  for (const Spd& c : root.children()) {
    if (!c.contains(axis)) continue;
    if (c.is_leaf()) return &root;
    return parent_of(c, axis);
  }
  return nullptr;
}

void require_edge(const Spd& spd, Axis axis) {
  if (!spd.contains(axis)) throw SpdError("axis " + std::to_string(axis) + " is not an edge of the diagram");
}

}  // namespace

int tau(const SignedSpd& spd) { return tau_rec(spd.shape(), spd.signs()); }

EdgeKind edge_kind(const Spd& spd, Axis axis) {
  require_edge(spd, axis);
  const Spd* parent = parent_of(spd, axis);
  if (parent && parent->kind() == Spd::Kind::Parallel) return EdgeKind::Disjunctive;
  return EdgeKind::Conjunctive;
}

// ---------------------------------------------------------------------------
// Deletion and substitution

Substitution substitute(const Spd& spd, Axis axis, bool value) {
  require_edge(spd, axis);
  if (spd.is_leaf()) {
    if (value) return Full{};
    return Empty{};
  }
  // In a Series node a false child kills the node and true children drop
  // out; Parallel is the mirror image.
  const bool series = spd.kind() == Spd::Kind::Series;
  std::vector<Spd> kept;
  for (const Spd& c : spd.children()) {
    if (!c.contains(axis)) {
      kept.push_back(c);
      continue;
    }
    Substitution r = substitute(c, axis, value);
    if (auto* sub = std::get_if<Spd>(&r)) {
      kept.push_back(std::move(*sub));
    } else if (std::holds_alternative<Empty>(r)) {
      if (series) return Empty{};
    } else if (!series) {
      return Full{};
    }
  }
  if (kept.empty()) {
    if (series) return Full{};
    return Empty{};
  }
  return Spd::join(spd.kind(), std::move(kept));
}

std::variant<Spd, Trivial> delete_edge_or_trivial(const Spd& spd, Axis axis) {
  const bool shorted = edge_kind(spd, axis) == EdgeKind::Conjunctive;
  Substitution r = substitute(spd, axis, shorted);
  if (auto* s = std::get_if<Spd>(&r)) return std::move(*s);
  return Trivial{};
}

Spd delete_edge(const Spd& spd, Axis axis) {
  auto r = delete_edge_or_trivial(spd, axis);
  if (std::holds_alternative<Trivial>(r)) {
    throw SpdError("deleting the only edge leaves the single-vertex diagram");
  }
  return std::get<Spd>(std::move(r));
}

Substitution residual_diagram(const Spd& spd, Axis axis) {
  const bool disjunctive = edge_kind(spd, axis) == EdgeKind::Disjunctive;
  return substitute(spd, axis, disjunctive);
}

SignedSpd with_signs_of(const Spd& shape, const SignedSpd& from) {
  std::map<Axis, int> signs;
  for (Axis a : shape.edges()) signs.emplace(a, from.sign(a));
  return SignedSpd(shape, std::move(signs));
}

// ---------------------------------------------------------------------------
// Canonical forms

namespace {

Spd relabel_dfs(const Spd& s, Axis& next) {
  if (s.is_leaf()) return Spd::leaf(next++);
  std::vector<Spd> parts;
  parts.reserve(s.children().size());
  for (const Spd& c : s.children()) parts.push_back(relabel_dfs(c, next));
  return Spd::join(s.kind(), std::move(parts));
}

}  // namespace

Spd canonical_representative(const Spd& spd) {
  Axis next = 1;
  return relabel_dfs(spd, next);
}

CanonicalKey canonical_key(const Spd& spd) { return {format_expr(canonical_representative(spd))}; }

}  // namespace orthotope
