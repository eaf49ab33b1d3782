#include "orthotope/floral.hpp"

#include <optional>
#include <string>
#include <utility>

namespace orthotope {

SignedSpd join_signed(Spd::Kind kind, std::vector<SignedSpd> parts) {
  std::vector<Spd> shapes;
  std::map<Axis, int> signs;
  shapes.reserve(parts.size());
  for (auto& p : parts) {
    signs.insert(p.signs().begin(), p.signs().end());
    shapes.push_back(p.shape());
  }
  return SignedSpd(Spd::join(kind, std::move(shapes)), std::move(signs));
}

namespace {

using Index = OrthantSet::Index;

void evaluate_into(const Spd& s, const SignedSpd& spd, int dim, OrthantSet& out) {
  if (s.is_leaf()) {
    out = OrthantSet::half_space(dim, s.axis(), spd.sign(s.axis()));
    return;
  }
  const bool series = s.kind() == Spd::Kind::Series;
  bool first = true;
  OrthantSet part(dim);
  for (const Spd& c : s.children()) {
    evaluate_into(c, spd, dim, part);
    if (first) {
      out = part;
      first = false;
    } else {
      out = series ? (out & part) : (out | part);
    }
  }
}

struct Factorization {
  std::vector<int> first;
  std::vector<int> second;
};

std::optional<Factorization> find_product(const OrthantSet& s) {
  const int k = s.dim();
  const std::size_t total = s.count();
  for (Index m = 1; m + 1 < (Index{1} << k); m += 2) {  // bit 0 always in the first block
    Factorization f;
    for (int p = 0; p < k; ++p) ((m >> p) & 1U ? f.first : f.second).push_back(p);
    if (s.project(f.first).count() * s.project(f.second).count() == total) return f;
  }
  return std::nullopt;
}

std::vector<Axis> pick(const std::vector<Axis>& labels, const std::vector<int>& positions) {
  std::vector<Axis> out;
  out.reserve(positions.size());
  for (int p : positions) out.push_back(labels[p]);
  return out;
}

// All axes of `s` are essential; `labels` gives their diagram labels.
std::optional<SignedSpd> recognize_essential(const OrthantSet& s, const std::vector<Axis>& labels) {
  if (s.dim() == 1) {
    const int sign = s.contains(0) ? 1 : -1;
    return SignedSpd(Spd::leaf(labels[0]), {{labels[0], sign}});
  }
  auto split = [&](const OrthantSet& set) -> std::optional<SignedSpd> {
    auto f = find_product(set);
    if (!f) return std::nullopt;
    auto a = recognize_essential(set.project(f->first), pick(labels, f->first));
    if (!a) return std::nullopt;
    auto b = recognize_essential(set.project(f->second), pick(labels, f->second));
    if (!b) return std::nullopt;
    return join_signed(Spd::Kind::Series, {std::move(*a), std::move(*b)});
  };
  if (auto product = split(s)) return product;
  if (auto co_product = split(s.complement())) return dual(*co_product);
  return std::nullopt;
}

void check_axis(const FloralVertex& v, Axis axis) {
  if (axis < 1 || axis > v.dim()) {
    throw std::out_of_range("axis " + std::to_string(axis) + " outside 1.." + std::to_string(v.dim()));
  }
}

}  // namespace

OrthantSet orthants_of(const SignedSpd& spd, int dim) {
  if (spd.shape().edges().back() > dim) {
    throw std::invalid_argument("edge label " + std::to_string(spd.shape().edges().back()) +
                                " exceeds dimension " + std::to_string(dim));
  }
  OrthantSet out(dim);
  evaluate_into(spd.shape(), spd, dim, out);
  return out;
}

Recognition recognize(const OrthantSet& orthants) {
  if (orthants.empty()) return Empty{};
  if (orthants.is_full()) return Full{};

  std::vector<int> positions;
  std::vector<Axis> labels;
  std::vector<Axis> free_axes;
  for (Axis a = 1; a <= orthants.dim(); ++a) {
    if (orthants.essential(a)) {
      positions.push_back(a - 1);
      labels.push_back(a);
    } else {
      free_axes.push_back(a);
    }
  }
  auto diagram = recognize_essential(orthants.project(positions), labels);
  if (!diagram) return Degenerate{};
  if (free_axes.empty()) return std::move(*diagram);
  return Cylinder{std::move(free_axes), std::move(*diagram)};
}

bool is_floral(const Recognition& r) {
  return std::holds_alternative<SignedSpd>(r) || std::holds_alternative<Cylinder>(r);
}

FloralVertex::FloralVertex(SignedSpd diagram)
    : diagram_(std::move(diagram)), orthants_(diagram_.shape().edge_count()) {
  const auto& edges = diagram_.shape().edges();
  for (std::size_t k = 0; k < edges.size(); ++k) {
    if (edges[k] != static_cast<Axis>(k + 1)) {
      throw std::invalid_argument("a floral vertex needs edge labels exactly 1..d");
    }
  }
  orthants_ = orthants_of(diagram_, dim());
  if (orthants_.count() % 2 == 0) throw std::logic_error("internal: floral vertex with even orthant count");
}

FaceDiagram facet(const FloralVertex& v, Axis axis) {
  check_axis(v, axis);
  if (v.dim() == 1) return Trivial{};

  SignedSpd current = v.diagram();
  if (current.shape().kind() == Spd::Kind::Parallel) current = dual(current);

  // current is always a Series connection with the branch holding `axis`
  // split off; the rest joins the facet and the branch is complemented.
  std::vector<SignedSpd> kept;
  while (true) {
    const Spd* branch = nullptr;
    std::vector<Spd> rest;
    for (const Spd& c : current.shape().children()) {
      if (c.contains(axis)) {
        branch = &c;
      } else {
        rest.push_back(c);
      }
    }
    kept.push_back(with_signs_of(Spd::series(std::move(rest)), current));
    if (branch->is_leaf()) break;
    current = dual(with_signs_of(*branch, current));
  }
  return join_signed(Spd::Kind::Series, std::move(kept));
}

int edge_direction(const FloralVertex& v, Axis axis) {
  check_axis(v, axis);
  const Spd& shape = v.diagram().shape();
  const auto deleted = delete_edge_or_trivial(shape, axis);
  const int deleted_sign = std::visit([](const auto& d) { return bouquet(d).sign; }, deleted);
  return bouquet(shape).sign * deleted_sign * v.diagram().sign(axis);
}

FaceDiagram edge_cross_section(const FloralVertex& v, Axis axis) {
  check_axis(v, axis);
  auto deleted = delete_edge_or_trivial(v.diagram().shape(), axis);
  if (auto* s = std::get_if<Spd>(&deleted)) return with_signs_of(*s, v.diagram());
  return Trivial{};
}

SliceDiagram residual_cross_section(const FloralVertex& v, Axis axis) {
  check_axis(v, axis);
  Substitution r = residual_diagram(v.diagram().shape(), axis);
  if (auto* s = std::get_if<Spd>(&r)) return with_signs_of(*s, v.diagram());
  if (std::holds_alternative<Full>(r)) return Full{};
  return Empty{};
}

OrthantCounts orthant_counts(const OrthantSet& orthants) {
  OrthantCounts c;
  for (Index s = 0; s < orthants.orthant_count(); ++s) {
    if (!orthants.contains(s)) continue;
    ++c.mu_d;
    c.tau_d += OrthantSet::orthant_sign(s);
  }
  return c;
}

OrthantSet combine(const OrthantSet& a, const OrthantSet& b, SetOp op) {
  switch (op) {
    case SetOp::Intersect:
      return a & b;
    case SetOp::Union:
      return a | b;
    case SetOp::Complement:
      return a.complement();
  }
  throw std::invalid_argument("unknown set operation");
}

}  // namespace orthotope
