#include "orthotope/genericize.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>
#include <unordered_map>

namespace orthotope {

namespace {

// m distinct values of [0, n) in random order (sparse Fisher-Yates).
std::vector<std::uint64_t> sample_distinct(std::uint64_t n, std::uint64_t m, Lcg& rng) {
  std::unordered_map<std::uint64_t, std::uint64_t> moved;
  auto at = [&](std::uint64_t i) {
    auto it = moved.find(i);
    return it == moved.end() ? i : it->second;
  };
  std::vector<std::uint64_t> out;
  out.reserve(m);
  for (std::uint64_t i = 0; i < m; ++i) {
    const std::uint64_t j = i + rng.below(n - i);
    const std::uint64_t vi = at(i), vj = at(j);
    moved[j] = vi;
    out.push_back(vj);
  }
  return out;
}

IntegralOrthotope boxes_from_draws(int dim, int count, const std::vector<std::vector<Coord>>& coords) {
  std::vector<IntBox> boxes(count, IntBox{Point(dim), Point(dim)});
  for (int k = 0; k < dim; ++k) {
    for (int b = 0; b < count; ++b) {
      const Coord x = coords[k][2 * b], y = coords[k][2 * b + 1];
      boxes[b].lo[k] = std::min(x, y);
      boxes[b].hi[k] = std::max(x, y);
    }
  }
  return IntegralOrthotope::from_boxes(dim, boxes, 1);
}

void check_count(int dim, int count) {
  if (dim < 1) throw std::invalid_argument("dimension must be positive");
  if (count < 1) throw std::invalid_argument("box count must be positive");
}

Coord checked_mul(Coord a, Coord b) {
  Coord r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("coordinate overflow while rescaling");
  return r;
}

// --- Hausdorff distance -----------------------------------------------------

bool disjoint(const ClosedBox& a, const ClosedBox& b) {
  for (std::size_t k = 0; k < a.lo.size(); ++k) {
    if (a.hi[k] < b.lo[k] || b.hi[k] < a.lo[k]) return true;
  }
  return false;
}

// Closures of the parts of x outside c; x and c intersect.
void subtract(const ClosedBox& x, const ClosedBox& c, std::vector<ClosedBox>& out) {
  ClosedBox rest = x;
  for (std::size_t k = 0; k < x.lo.size(); ++k) {
    if (rest.lo[k] < c.lo[k]) {
      ClosedBox piece = rest;
      piece.hi[k] = c.lo[k];
      out.push_back(std::move(piece));
      rest.lo[k] = c.lo[k];
    }
    if (rest.hi[k] > c.hi[k]) {
      ClosedBox piece = rest;
      piece.lo[k] = c.hi[k];
      out.push_back(std::move(piece));
      rest.hi[k] = c.hi[k];
    }
  }
}

bool covered(const ClosedBox& x, const std::vector<ClosedBox>& cover) {
  std::vector<std::pair<ClosedBox, std::size_t>> stack{{x, 0}};
  std::vector<ClosedBox> pieces;
  while (!stack.empty()) {
    auto [box, j] = std::move(stack.back());
    stack.pop_back();
    while (j < cover.size() && disjoint(box, cover[j])) ++j;
    if (j == cover.size()) return false;
    pieces.clear();
    subtract(box, cover[j], pieces);
    for (auto& p : pieces) stack.emplace_back(std::move(p), j + 1);
  }
  return true;
}

// Every point of a lies within r of b.
bool within(const std::vector<ClosedBox>& a, const std::vector<ClosedBox>& b, Coord r) {
  std::vector<ClosedBox> grown = b;
  for (ClosedBox& g : grown) {
    for (Coord& x : g.lo) x -= r;
    for (Coord& x : g.hi) x += r;
  }
  return std::all_of(a.begin(), a.end(), [&](const ClosedBox& x) { return covered(x, grown); });
}

// Smallest candidate r with a inside b grown by r. The directed distance is
// reached where a face of `a` meets a grown face of `b`, or where two grown
// boxes of `b` meet, so it is a coordinate difference or half of one.
Coord directed(const std::vector<ClosedBox>& a, const std::vector<ClosedBox>& b, const std::vector<Coord>& candidates) {
  std::size_t lo = 0, hi = candidates.size() - 1;
  if (!within(a, b, candidates[hi])) throw std::logic_error("internal: Hausdorff candidate set incomplete");
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (within(a, b, candidates[mid])) hi = mid;
    else lo = mid + 1;
  }
  return candidates[lo];
}

std::vector<ClosedBox> to_scale(const BoxSet& s, Coord factor) {
  std::vector<ClosedBox> out = s.boxes;
  for (ClosedBox& b : out) {
    for (Coord& x : b.lo) x = checked_mul(x, factor);
    for (Coord& x : b.hi) x = checked_mul(x, factor);
  }
  return out;
}

}  // namespace

std::uint64_t Lcg::next() {
  state_ = state_ * kMultiplier + kIncrement;
  return state_;
}

std::uint64_t Lcg::below(std::uint64_t bound) {
  if (bound == 0 || bound > (std::uint64_t{1} << 31)) throw std::invalid_argument("draw bound out of range");
  return (next() >> 33) % bound;
}

BoxSet BoxSet::of(const IntegralOrthotope& p) {
  BoxSet s{p.dim(), p.scale(), {}};
  for (const IntBox& b : p.boxes()) s.boxes.push_back({b.lo, b.hi});
  return s;
}

BoxSet BoxSet::of(int dim, const std::vector<CubeFace>& faces) {
  BoxSet s{dim, 1, {}};
  for (const CubeFace& f : faces) {
    if (f.dim() != dim || static_cast<int>(f.corner.size()) != dim) {
      throw std::invalid_argument("face dimension does not match");
    }
    ClosedBox b{f.corner, f.corner};
    for (int k = 0; k < dim; ++k) {
      if (f.extent[k] != FaceExtent::Low) ++b.hi[k];
      if (f.extent[k] == FaceExtent::High) ++b.lo[k];
    }
    s.boxes.push_back(std::move(b));
  }
  return s;
}

Rational PadSchedule::max_pad() const {
  Rational m = 0;
  for (const Pads& p : faces) {
    for (const auto* side : {&p.below, &p.above})
      for (const Rational& x : *side) m = std::max(m, x);
  }
  return m;
}

Thickened thicken(int dim, const std::vector<CubeFace>& faces, const Rational& eps) {
  if (eps <= 0) throw std::invalid_argument("eps must be positive");
  if (faces.empty()) throw std::invalid_argument("no faces to thicken");
  const BoxSet cubes = BoxSet::of(dim, faces);

  // Hyperplane number k (1..K) gets pad bound * k / (K + 1).
  const Rational bound = std::min(eps, Rational(1)) / 2;
  const BigInt hyperplanes = BigInt(2) * dim * static_cast<long long>(faces.size());
  const BigInt big_scale = denominator(bound) * (hyperplanes + 1);
  const BigInt step = numerator(bound);
  Coord extent = 0;
  for (const ClosedBox& b : cubes.boxes) {
    for (Coord x : b.lo) extent = std::max(extent, x < 0 ? -x : x);
    for (Coord x : b.hi) extent = std::max(extent, x < 0 ? -x : x);
  }
  if (big_scale * (extent + 1) > BigInt(std::numeric_limits<Coord>::max() / 4)) {
    throw std::overflow_error("thickening scale " + big_scale.str() + " overflows 64-bit coordinates");
  }
  const Coord scale = static_cast<Coord>(big_scale);
  const Coord unit_pad = static_cast<Coord>(step);

  Thickened out{IntegralOrthotope(dim, scale), {}};
  std::vector<IntBox> boxes;
  std::vector<std::vector<Coord>> planes(dim);
  Coord rank = 0;
  for (const ClosedBox& c : cubes.boxes) {
    PadSchedule::Pads pads;
    IntBox box{Point(dim), Point(dim)};
    for (int k = 0; k < dim; ++k) {
      const Coord below = ++rank, above = ++rank;
      box.lo[k] = c.lo[k] * scale - below * unit_pad;
      box.hi[k] = c.hi[k] * scale + above * unit_pad;
      pads.below.emplace_back(below * unit_pad, scale);
      pads.above.emplace_back(above * unit_pad, scale);
      planes[k].push_back(box.lo[k]);
      planes[k].push_back(box.hi[k]);
    }
    out.pads.faces.push_back(std::move(pads));
    boxes.push_back(std::move(box));
  }
  for (auto& p : planes) {
    std::sort(p.begin(), p.end());
    if (std::adjacent_find(p.begin(), p.end()) != p.end()) {
      throw std::logic_error("internal: thickened boxes share a supporting hyperplane");
    }
  }
  out.polytope = IntegralOrthotope::from_boxes(dim, boxes, scale);
  return out;
}

IntegralOrthotope random_generic_from_pool(int dim, int count, const std::vector<std::vector<Coord>>& pool,
                                           Lcg& rng) {
  check_count(dim, count);
  if (static_cast<int>(pool.size()) != dim) throw std::invalid_argument("one coordinate pool per axis");
  std::vector<std::vector<Coord>> coords(dim);
  for (int k = 0; k < dim; ++k) {
    if (pool[k].size() < 2 * static_cast<std::size_t>(count)) {
      throw std::invalid_argument("coordinate pool of axis " + std::to_string(k + 1) + " has " +
                                  std::to_string(pool[k].size()) + " values, " + std::to_string(2 * count) +
                                  " needed");
    }
    for (std::uint64_t i : sample_distinct(pool[k].size(), 2 * count, rng)) coords[k].push_back(pool[k][i]);
  }
  return boxes_from_draws(dim, count, coords);
}

IntegralOrthotope random_generic(int dim, int count, Coord extent, std::uint64_t seed) {
  check_count(dim, count);
  if (extent < 2 * static_cast<Coord>(count)) {
    throw std::invalid_argument("extent " + std::to_string(extent) + " cannot host " + std::to_string(2 * count) +
                                " distinct coordinates per axis");
  }
  Lcg rng(seed);
  std::vector<std::vector<Coord>> coords(dim);
  for (int k = 0; k < dim; ++k) {
    for (std::uint64_t v : sample_distinct(static_cast<std::uint64_t>(extent), 2 * count, rng)) {
      coords[k].push_back(static_cast<Coord>(v));
    }
  }
  return boxes_from_draws(dim, count, coords);
}

Rational hausdorff_distance(const BoxSet& a, const BoxSet& b) {
  if (a.dim != b.dim) throw std::invalid_argument("Hausdorff distance between sets of different dimension");
  if (a.boxes.empty() || b.boxes.empty()) throw std::invalid_argument("Hausdorff distance to an empty set");
  // Doubling keeps half differences integral.
  const Coord common = std::lcm(a.scale, b.scale);
  const auto pa = to_scale(a, 2 * (common / a.scale));
  const auto pb = to_scale(b, 2 * (common / b.scale));

  std::vector<Coord> candidates{0};
  for (int k = 0; k < a.dim; ++k) {
    std::vector<Coord> xs;
    for (const auto* set : {&pa, &pb})
      for (const ClosedBox& box : *set) {
        xs.push_back(box.lo[k]);
        xs.push_back(box.hi[k]);
      }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    for (std::size_t i = 0; i < xs.size(); ++i)
      for (std::size_t j = i + 1; j < xs.size(); ++j) {
        candidates.push_back(xs[j] - xs[i]);
        candidates.push_back((xs[j] - xs[i]) / 2);
      }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  const Coord r = std::max(directed(pa, pb, candidates), directed(pb, pa, candidates));
  return Rational(r, 2 * common);
}

Rational hausdorff_distance(const IntegralOrthotope& a, const IntegralOrthotope& b) {
  return hausdorff_distance(BoxSet::of(a), BoxSet::of(b));
}

}  // namespace orthotope
