#include <algorithm>
#include <map>
#include <utility>

#include "orthotope/spd.hpp"

namespace orthotope {

namespace {

Spd shifted(const Spd& s, Axis offset) {
  if (s.is_leaf()) return Spd::leaf(s.axis() + offset);
  std::vector<Spd> parts;
  parts.reserve(s.children().size());
  for (const Spd& c : s.children()) parts.push_back(shifted(c, offset));
  return Spd::join(s.kind(), std::move(parts));
}

// Shapes are generated as multisets of sub-shapes whose root kind differs
// from the parent's, memoized per (edge count, root kind).
class ShapeGenerator {
 public:
  const std::vector<Spd>& rooted(int n, Spd::Kind kind) {
    auto key = std::make_pair(n, kind);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const Spd::Kind other = kind == Spd::Kind::Series ? Spd::Kind::Parallel : Spd::Kind::Series;
    std::vector<const Spd*> pool;
    Spd single = Spd::leaf(1);
    pool.push_back(&single);
    for (int m = 2; m < n; ++m) {
      for (const Spd& s : rooted(m, other)) pool.push_back(&s);
    }

    std::vector<Spd> out;
    std::vector<std::size_t> chosen;
    choose(kind, pool, n, pool.size(), chosen, out);
    std::sort(out.begin(), out.end(),
              [](const Spd& a, const Spd& b) { return a.shape_code() < b.shape_code(); });
    return memo_.emplace(key, std::move(out)).first->second;
  }

 private:
  // Picks pool indices in non-increasing order so each multiset appears once.
  void choose(Spd::Kind kind, const std::vector<const Spd*>& pool, int remaining, std::size_t limit,
              std::vector<std::size_t>& chosen, std::vector<Spd>& out) {
    if (remaining == 0) {
      if (chosen.size() < 2) return;
      std::vector<Spd> parts;
      Axis offset = 0;
      for (std::size_t idx : chosen) {
        parts.push_back(shifted(*pool[idx], offset));
        offset += pool[idx]->edge_count();
      }
      out.push_back(canonical_representative(Spd::join(kind, std::move(parts))));
      return;
    }
    for (std::size_t i = limit; i-- > 0;) {
      const int size = pool[i]->edge_count();
      if (size > remaining) continue;
      // A single part of the whole size would not be a connection.
      if (chosen.empty() && size == remaining) continue;
      chosen.push_back(i);
      choose(kind, pool, remaining - size, i + 1, chosen, out);
      chosen.pop_back();
    }
  }

  std::map<std::pair<int, Spd::Kind>, std::vector<Spd>> memo_;
};

}  // namespace

std::vector<Spd> enumerate_shapes(int d, int max_d) {
  if (d < 1 || d > max_d) {
    throw SpdError("shape enumeration needs 1 <= d <= " + std::to_string(max_d) + ", got " +
                   std::to_string(d));
  }
  if (d == 1) return {Spd::leaf(1)};

  ShapeGenerator gen;
  std::vector<std::pair<CanonicalKey, Spd>> keyed;
  for (Spd::Kind kind : {Spd::Kind::Series, Spd::Kind::Parallel}) {
    for (const Spd& s : gen.rooted(d, kind)) keyed.emplace_back(canonical_key(s), s);
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  keyed.erase(std::unique(keyed.begin(), keyed.end(),
                          [](const auto& a, const auto& b) { return a.first == b.first; }),
              keyed.end());

  std::vector<Spd> out;
  out.reserve(keyed.size());
  for (auto& [key, s] : keyed) out.push_back(std::move(s));
  return out;
}

}  // namespace orthotope
