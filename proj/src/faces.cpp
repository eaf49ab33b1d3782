#include <algorithm>
#include <numeric>
#include <set>

#include "grid_util.hpp"
#include "lattice_scan.hpp"

namespace orthotope {

using detail::ConeInfo;
using detail::Scanner;

namespace {

bool all_even(const std::vector<std::size_t>& q) {
  return std::all_of(q.begin(), q.end(), [](std::size_t x) { return x % 2 == 0; });
}

// Degree-one cone whose only inessential axis is `k` (0-based).
bool runs_along(const ConeInfo& c, int k) {
  return c.degree == 1 && std::find(c.essential.begin(), c.essential.end(), k + 1) == c.essential.end();
}

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> parent;
};

}  // namespace

std::vector<std::size_t> SkeletonGraph::degrees() const {
  std::vector<std::size_t> deg(nodes.size(), 0);
  for (const SkeletonArc& a : arcs) {
    ++deg[a.from];
    ++deg[a.to];
  }
  return deg;
}

bool SkeletonGraph::bipartite() const {
  return std::all_of(arcs.begin(), arcs.end(), [&](const SkeletonArc& a) { return nodes[a.from].tau != nodes[a.to].tau; });
}

SkeletonGraph skeleton(const IntegralOrthotope& p) {
  detail::require_generic(p);
  Scanner scan(p);
  SkeletonGraph g;
  if (!scan.has_regions()) return g;
  std::map<std::size_t, std::size_t> node_of;
  std::vector<std::vector<std::size_t>> where;
  detail::for_each_index(scan.extents(), [&](const std::vector<std::size_t>& q) {
    if (!all_even(q)) return;
    const ConeInfo& c = scan.info_at(q);
    if (!c.vertex()) return;
    node_of[scan.flat(q)] = g.nodes.size();
    g.nodes.push_back({scan.first_point(q), static_cast<int>(c.tau_d)});
    where.push_back(q);
  });
  const auto& ext = scan.extents();
  for (std::size_t i = 0; i < where.size(); ++i) {
    for (int k = 0; k < p.dim(); ++k) {
      std::vector<std::size_t> r = where[i];
      while (++r[k] < ext[k]) {
        const ConeInfo& c = scan.info_at(r);
        if (r[k] % 2 == 0 && c.vertex()) {
          g.arcs.push_back({i, node_of.at(scan.flat(r)), k + 1});
          break;
        }
        if (!runs_along(c, k)) break;
      }
    }
  }
  return g;
}

std::vector<std::size_t> FacePoset::f_vector() const {
  std::vector<std::size_t> f(dim + 1, 0);
  for (const Face& face : faces) ++f[face.dim];
  return f;
}

FacePoset face_poset(const IntegralOrthotope& p) {
  detail::require_generic(p);
  Scanner scan(p);
  FacePoset poset;
  poset.dim = p.dim();
  if (!scan.has_regions()) return poset;

  const int d = p.dim();
  const auto& ext = scan.extents();
  const std::size_t n = scan.region_count();
  std::vector<std::uint64_t> masks(n);
  {
    std::size_t f = 0;
    detail::for_each_index(ext, [&](const std::vector<std::size_t>& q) { masks[f++] = scan.cone_mask(q); });
  }

  // Genericity regions: neighbouring regions with equal cones.
  DisjointSets sets(n);
  const auto strides = detail::row_major_strides(ext);
  {
    std::size_t f = 0;
    detail::for_each_index(ext, [&](const std::vector<std::size_t>& q) {
      if (masks[f]) {
        for (int k = 0; k < d; ++k) {
          if (q[k] + 1 < ext[k] && masks[f + strides[k]] == masks[f]) sets.unite(f, f + strides[k]);
        }
      }
      ++f;
    });
  }

  std::map<std::size_t, std::size_t> face_of_root;
  std::vector<std::vector<IntBox>> boxes;
  std::set<std::pair<std::size_t, std::size_t>> incidence;
  std::size_t f = 0;
  detail::for_each_index(ext, [&](const std::vector<std::size_t>& q) {
    const std::size_t here = f++;
    if (!masks[here]) return;
    const ConeInfo& c = scan.info(masks[here]);
    const std::size_t root = sets.find(here);
    auto [it, fresh] = face_of_root.try_emplace(root, poset.faces.size());
    const std::size_t face = it->second;
    std::vector<Axis> free_axes;
    for (Axis a = 1; a <= d; ++a)
      if (!std::binary_search(c.essential.begin(), c.essential.end(), a)) free_axes.push_back(a);
    if (fresh) {
      Face fc;
      fc.dim = c.degree;
      fc.free_axes = free_axes;
      fc.representative = detail::to_point_class(c, scan.first_point(q));
      poset.faces.push_back(std::move(fc));
      boxes.emplace_back();
    }
    // Only full-dimensional pieces of the face contribute closure boxes.
    const auto odd = static_cast<int>(std::count_if(q.begin(), q.end(), [](std::size_t x) { return x % 2 == 1; }));
    if (odd != c.degree) return;
    IntBox box{Point(free_axes.size()), Point(free_axes.size())};
    for (std::size_t j = 0; j < free_axes.size(); ++j) {
      const int k = free_axes[j] - 1;
      box.lo[j] = scan.breakpoint(k, q[k] / 2);
      box.hi[j] = scan.breakpoint(k, q[k] / 2 + 1);
    }
    boxes[face].push_back(std::move(box));
    // Everything touching this piece lies in the closure of the face.
    std::vector<std::size_t> span(free_axes.size(), 3);
    detail::for_each_index(span, [&](const std::vector<std::size_t>& off) {
      std::size_t other = here;
      for (std::size_t j = 0; j < free_axes.size(); ++j) {
        const int k = free_axes[j] - 1;
        other = other + off[j] * strides[k] - strides[k];
      }
      if (!masks[other]) return;
      const std::size_t root_other = sets.find(other);
      if (root_other == root) return;
      // Lower faces of a closed piece are visited later or earlier in the
      // scan; record the pair by root and resolve indices afterwards.
      incidence.emplace(root_other, root);
    });
  });

  for (std::size_t i = 0; i < poset.faces.size(); ++i) {
    Face& fc = poset.faces[i];
    fc.closure = fc.dim == 0 ? IntegralOrthotope::from_grid(0, p.scale(), {}, {1})
                             : IntegralOrthotope::from_boxes(fc.dim, boxes[i], p.scale());
  }
  for (const auto& [lower, upper] : incidence) {
    poset.incidence.emplace_back(face_of_root.at(lower), face_of_root.at(upper));
  }
  std::sort(poset.incidence.begin(), poset.incidence.end());
  return poset;
}

IntegralOrthotope cross_section(const IntegralOrthotope& p, const std::map<Axis, Coord>& doubled_values) {
  const int d = p.dim();
  for (const auto& [axis, value] : doubled_values) {
    if (axis < 1 || axis > d) throw std::out_of_range("slice axis " + std::to_string(axis) + " outside 1.." + std::to_string(d));
  }
  const int k = d - static_cast<int>(doubled_values.size());
  if (p.empty()) return IntegralOrthotope(k, p.scale());

  // Slabs of each fixed axis that meet the slicing plane.
  std::vector<std::vector<std::size_t>> chosen(d);
  std::vector<int> remaining;
  for (int a = 0; a < d; ++a) {
    const auto it = doubled_values.find(a + 1);
    if (it == doubled_values.end()) {
      remaining.push_back(a);
      continue;
    }
    const auto& b = p.breaks(a);
    const Coord v = it->second;
    for (std::size_t j = 0; j + 1 < b.size(); ++j) {
      // Covers both cases: an odd v lies inside the slab, an even v on it
      // or on one of its faces.
      if (2 * b[j] <= v && v <= 2 * b[j + 1]) chosen[a].push_back(j);
    }
    if (chosen[a].empty()) return IntegralOrthotope(k, p.scale());
  }

  std::vector<std::vector<Coord>> breaks;
  std::vector<std::size_t> extents;
  for (int a : remaining) {
    breaks.push_back(p.breaks(a));
    extents.push_back(p.slab_count(a));
  }
  std::vector<std::size_t> choice_extents;
  std::vector<int> fixed;
  for (int a = 0; a < d; ++a) {
    if (!chosen[a].empty()) {
      fixed.push_back(a);
      choice_extents.push_back(chosen[a].size());
    }
  }
  std::vector<std::uint8_t> occ;
  detail::for_each_index(extents, [&](const std::vector<std::size_t>& idx) {
    std::size_t base = 0;
    for (std::size_t j = 0; j < remaining.size(); ++j) base += idx[j] * p.stride(remaining[j]);
    std::uint8_t any = 0;
    detail::for_each_index(choice_extents, [&](const std::vector<std::size_t>& c) {
      std::size_t flat = base;
      for (std::size_t j = 0; j < fixed.size(); ++j) flat += chosen[fixed[j]][c[j]] * p.stride(fixed[j]);
      any |= p.occupancy()[flat];
    });
    occ.push_back(any);
  });
  return IntegralOrthotope::from_grid(k, p.scale(), std::move(breaks), std::move(occ));
}

namespace {

// The closed sets meet only where the cell intersection's closure does.
// Checked on every doubled grid region: a region lies in the closure of a
// cell set iff one of the slabs around it is occupied.
bool intersection_is_pure(const std::vector<std::vector<Coord>>& breaks, const std::vector<std::uint8_t>& a,
                          const std::vector<std::uint8_t>& b, const std::vector<std::uint8_t>& ab) {
  const std::size_t d = breaks.size();
  std::vector<std::size_t> slabs(d), doubled(d);
  for (std::size_t k = 0; k < d; ++k) {
    slabs[k] = breaks[k].size() - 1;
    doubled[k] = 2 * slabs[k] + 1;
  }
  const std::vector<std::size_t> stride = detail::row_major_strides(slabs);
  bool pure = true;
  detail::for_each_index(doubled, [&](const std::vector<std::size_t>& q) {
    if (!pure) return;
    std::vector<std::size_t> choices(d);
    for (std::size_t k = 0; k < d; ++k) choices[k] = q[k] % 2 ? 1 : 2;
    bool in_a = false, in_b = false, in_ab = false;
    detail::for_each_index(choices, [&](const std::vector<std::size_t>& c) {
      std::size_t flat = 0;
      for (std::size_t k = 0; k < d; ++k) {
        // odd q: the slab itself; even q: the slabs below and above the breakpoint
        const std::ptrdiff_t j = q[k] % 2 ? static_cast<std::ptrdiff_t>(q[k] / 2)
                                          : static_cast<std::ptrdiff_t>(q[k] / 2) - 1 + static_cast<std::ptrdiff_t>(c[k]);
        if (j < 0 || j >= static_cast<std::ptrdiff_t>(slabs[k])) return;
        flat += static_cast<std::size_t>(j) * stride[k];
      }
      in_a = in_a || a[flat];
      in_b = in_b || b[flat];
      in_ab = in_ab || ab[flat];
    });
    if (in_a && in_b && !in_ab) pure = false;
  });
  return pure;
}

}  // namespace

SetOpResult set_ops(const IntegralOrthotope& a, const IntegralOrthotope& b, BoolOp op) {
  if (a.dim() != b.dim()) throw std::invalid_argument("set operation on orthotopes of different dimension");
  const Coord scale = std::lcm(a.scale(), b.scale());
  const IntegralOrthotope ra = a.rescaled(scale);
  const IntegralOrthotope rb = b.rescaled(scale);
  const int d = a.dim();
  SetOpResult out{IntegralOrthotope(d, scale), true, true};
  if (ra.empty() && rb.empty()) return out;

  std::vector<std::vector<Coord>> breaks(d);
  for (int k = 0; k < d; ++k) {
    for (const IntegralOrthotope* x : {&ra, &rb}) {
      if (!x->empty()) breaks[k].insert(breaks[k].end(), x->breaks(k).begin(), x->breaks(k).end());
    }
    std::sort(breaks[k].begin(), breaks[k].end());
    breaks[k].erase(std::unique(breaks[k].begin(), breaks[k].end()), breaks[k].end());
  }
  std::vector<std::uint8_t> occ = ra.resample(breaks);
  const std::vector<std::uint8_t> other = rb.resample(breaks);
  std::vector<std::uint8_t> both(occ.size());
  for (std::size_t i = 0; i < occ.size(); ++i) both[i] = op == BoolOp::Union ? (occ[i] | other[i]) : (occ[i] & other[i]);
  if (op == BoolOp::Intersection) out.pure = intersection_is_pure(breaks, occ, other, both);
  out.result = IntegralOrthotope::from_grid(d, scale, std::move(breaks), std::move(both));
  out.generic = out.pure && check_generic(out.result).generic();
  return out;
}

}  // namespace orthotope
