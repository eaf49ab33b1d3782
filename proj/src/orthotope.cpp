#include "orthotope/orthotope.hpp"

#include <algorithm>
#include <string>

#include "grid_util.hpp"

namespace orthotope {

namespace {

std::vector<std::size_t> extents_of(const std::vector<std::vector<Coord>>& breaks) {
  std::vector<std::size_t> out;
  out.reserve(breaks.size());
  for (const auto& b : breaks) out.push_back(b.empty() ? 0 : b.size() - 1);
  return out;
}

std::size_t product(const std::vector<std::size_t>& v) {
  std::size_t p = 1;
  for (std::size_t x : v) p *= x;
  return p;
}

std::size_t slab_of(const std::vector<Coord>& breaks, Coord x) {
  return static_cast<std::size_t>(std::upper_bound(breaks.begin(), breaks.end(), x) - breaks.begin()) - 1;
}

}  // namespace

IntegralOrthotope::IntegralOrthotope(int dim, Coord scale) : dim_(dim), scale_(scale) {
  if (dim < 0) throw std::invalid_argument("negative dimension");
  if (scale < 1) throw std::invalid_argument("scale must be a positive integer");
  breaks_.assign(dim, {});
  strides_.assign(dim, 0);
}

IntegralOrthotope IntegralOrthotope::from_grid(int dim, Coord scale, std::vector<std::vector<Coord>> breaks,
                                               std::vector<std::uint8_t> occupancy) {
  IntegralOrthotope p(dim, scale);
  if (static_cast<int>(breaks.size()) != dim) throw std::invalid_argument("breakpoint lists must match dimension");
  for (const auto& b : breaks) {
    if (b.size() < 2) throw std::invalid_argument("each axis needs at least two breakpoints");
    if (std::adjacent_find(b.begin(), b.end(), std::greater_equal<>()) != b.end()) {
      throw std::invalid_argument("breakpoints must be strictly increasing");
    }
  }
  if (occupancy.size() != product(extents_of(breaks))) {
    throw std::invalid_argument("occupancy table does not match the grid");
  }
  p.breaks_ = std::move(breaks);
  p.occupancy_ = std::move(occupancy);
  for (auto& o : p.occupancy_) o = o ? 1 : 0;
  p.canonicalize();
  return p;
}

IntegralOrthotope IntegralOrthotope::from_boxes(int dim, const std::vector<IntBox>& boxes, Coord scale) {
  if (boxes.empty()) return IntegralOrthotope(dim, scale);
  std::vector<std::vector<Coord>> breaks(dim);
  for (const IntBox& b : boxes) {
    if (static_cast<int>(b.lo.size()) != dim || static_cast<int>(b.hi.size()) != dim) {
      throw std::invalid_argument("box corner dimension does not match");
    }
    for (int k = 0; k < dim; ++k) {
      if (b.lo[k] >= b.hi[k]) {
        throw std::invalid_argument("degenerate box on axis " + std::to_string(k + 1) + ": lo " +
                                    std::to_string(b.lo[k]) + " >= hi " + std::to_string(b.hi[k]));
      }
      breaks[k].push_back(b.lo[k]);
      breaks[k].push_back(b.hi[k]);
    }
  }
  for (auto& b : breaks) {
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
  }
  const auto extents = extents_of(breaks);
  const auto strides = detail::row_major_strides(extents);
  std::vector<std::uint8_t> occ(product(extents), 0);
  for (const IntBox& b : boxes) {
    std::vector<std::size_t> lo(dim), span(dim);
    for (int k = 0; k < dim; ++k) {
      lo[k] = slab_of(breaks[k], b.lo[k]);
      span[k] = slab_of(breaks[k], b.hi[k]) - lo[k];
    }
    detail::for_each_index(span, [&](const std::vector<std::size_t>& idx) {
      std::size_t flat = 0;
      for (int k = 0; k < dim; ++k) flat += (lo[k] + idx[k]) * strides[k];
      occ[flat] = 1;
    });
  }
  return from_grid(dim, scale, std::move(breaks), std::move(occ));
}

IntegralOrthotope IntegralOrthotope::from_cells(int dim, const std::vector<Point>& cells, Coord scale) {
  std::vector<IntBox> boxes;
  boxes.reserve(cells.size());
  for (const Point& c : cells) {
    if (static_cast<int>(c.size()) != dim) throw std::invalid_argument("cell dimension does not match");
    IntBox b{c, c};
    for (Coord& x : b.hi) ++x;
    boxes.push_back(std::move(b));
  }
  if (dim == 0 && !cells.empty()) return from_grid(0, scale, {}, {1});
  return from_boxes(dim, boxes, scale);
}

void IntegralOrthotope::compute_strides() {
  if (occupancy_.empty()) {
    strides_.assign(dim_, 0);
    return;
  }
  strides_ = detail::row_major_strides(extents_of(breaks_));
}

void IntegralOrthotope::canonicalize() {
  if (std::find(occupancy_.begin(), occupancy_.end(), 1) == occupancy_.end()) {
    occupancy_.clear();
    breaks_.assign(dim_, {});
    compute_strides();
    return;
  }
  for (int k = 0; k < dim_; ++k) {
    auto extents = extents_of(breaks_);
    const std::size_t n = extents[k];
    std::size_t inner = 1;
    for (int j = k + 1; j < dim_; ++j) inner *= extents[j];
    std::size_t outer = 1;
    for (int j = 0; j < k; ++j) outer *= extents[j];

    auto slab_at = [&](std::size_t o, std::size_t j, std::size_t i) {
      return occupancy_[(o * n + j) * inner + i];
    };
    auto slab_empty = [&](std::size_t j) {
      for (std::size_t o = 0; o < outer; ++o)
        for (std::size_t i = 0; i < inner; ++i)
          if (slab_at(o, j, i)) return false;
      return true;
    };
    auto same = [&](std::size_t a, std::size_t b) {
      for (std::size_t o = 0; o < outer; ++o)
        for (std::size_t i = 0; i < inner; ++i)
          if (slab_at(o, a, i) != slab_at(o, b, i)) return false;
      return true;
    };

    std::size_t first = 0;
    while (slab_empty(first)) ++first;
    std::size_t last = n - 1;
    while (slab_empty(last)) --last;

    std::vector<std::size_t> reps{first};
    std::vector<Coord> nb{breaks_[k][first]};
    for (std::size_t j = first + 1; j <= last; ++j) {
      if (!same(reps.back(), j)) {
        nb.push_back(breaks_[k][j]);
        reps.push_back(j);
      }
    }
    nb.push_back(breaks_[k][last + 1]);
    if (reps.size() == n) continue;

    std::vector<std::uint8_t> occ(outer * reps.size() * inner);
    for (std::size_t o = 0; o < outer; ++o)
      for (std::size_t g = 0; g < reps.size(); ++g)
        for (std::size_t i = 0; i < inner; ++i) occ[(o * reps.size() + g) * inner + i] = slab_at(o, reps[g], i);
    occupancy_ = std::move(occ);
    breaks_[k] = std::move(nb);
  }
  compute_strides();
}

bool IntegralOrthotope::occupied(std::span<const std::size_t> slab) const {
  if (occupancy_.empty()) return false;
  std::size_t flat = 0;
  for (int k = 0; k < dim_; ++k) {
    if (slab[k] >= slab_count(k)) return false;
    flat += slab[k] * strides_[k];
  }
  return occupancy_[flat] != 0;
}

BigInt IntegralOrthotope::unit_cell_count() const {
  BigInt total = 0;
  if (empty()) return total;
  detail::for_each_index(extents_of(breaks_), [&](const std::vector<std::size_t>& idx) {
    if (!occupied(idx)) return;
    BigInt v = 1;
    for (int k = 0; k < dim_; ++k) v *= breaks_[k][idx[k] + 1] - breaks_[k][idx[k]];
    total += v;
  });
  return total;
}

std::vector<Point> IntegralOrthotope::cells(std::size_t limit) const {
  if (unit_cell_count() > limit) throw std::length_error("too many unit cells to list");
  std::vector<Point> out;
  if (empty()) return out;
  detail::for_each_index(extents_of(breaks_), [&](const std::vector<std::size_t>& idx) {
    if (!occupied(idx)) return;
    std::vector<std::size_t> widths(dim_);
    for (int k = 0; k < dim_; ++k) widths[k] = static_cast<std::size_t>(breaks_[k][idx[k] + 1] - breaks_[k][idx[k]]);
    detail::for_each_index(widths, [&](const std::vector<std::size_t>& off) {
      Point p(dim_);
      for (int k = 0; k < dim_; ++k) p[k] = breaks_[k][idx[k]] + static_cast<Coord>(off[k]);
      out.push_back(std::move(p));
    });
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IntBox> IntegralOrthotope::boxes() const {
  std::vector<IntBox> out;
  if (empty()) return out;
  const auto extents = extents_of(breaks_);
  std::vector<std::uint8_t> used(occupancy_.size(), 0);
  auto free_cell = [&](const std::vector<std::size_t>& idx) {
    std::size_t flat = 0;
    for (int k = 0; k < dim_; ++k) flat += idx[k] * strides_[k];
    return occupancy_[flat] && !used[flat];
  };
  detail::for_each_index(extents, [&](const std::vector<std::size_t>& start) {
    if (!free_cell(start)) return;
    // Grow along the last axis first, then outward axis by axis.
    std::vector<std::size_t> len(dim_, 1);
    for (int k = dim_ - 1; k >= 0; --k) {
      while (start[k] + len[k] < extents[k]) {
        std::vector<std::size_t> layer = len;
        layer[k] = 1;
        bool ok = true;
        detail::for_each_index(layer, [&](const std::vector<std::size_t>& off) {
          if (!ok) return;
          std::vector<std::size_t> idx(dim_);
          for (int j = 0; j < dim_; ++j) idx[j] = start[j] + off[j];
          idx[k] = start[k] + len[k];
          if (!free_cell(idx)) ok = false;
        });
        if (!ok) break;
        ++len[k];
      }
    }
    detail::for_each_index(len, [&](const std::vector<std::size_t>& off) {
      std::size_t flat = 0;
      for (int k = 0; k < dim_; ++k) flat += (start[k] + off[k]) * strides_[k];
      used[flat] = 1;
    });
    IntBox b{Point(dim_), Point(dim_)};
    for (int k = 0; k < dim_; ++k) {
      b.lo[k] = breaks_[k][start[k]];
      b.hi[k] = breaks_[k][start[k] + len[k]];
    }
    out.push_back(std::move(b));
  });
  return out;
}

IntegralOrthotope IntegralOrthotope::rescaled(Coord new_scale) const {
  if (new_scale < 1 || new_scale % scale_ != 0) {
    throw std::invalid_argument("new scale must be a positive multiple of the current scale");
  }
  IntegralOrthotope p(*this);
  const Coord factor = new_scale / scale_;
  p.scale_ = new_scale;
  for (auto& b : p.breaks_)
    for (Coord& x : b) x *= factor;
  return p;
}

std::vector<std::uint8_t> IntegralOrthotope::resample(const std::vector<std::vector<Coord>>& fine_breaks) const {
  const auto extents = extents_of(fine_breaks);
  std::vector<std::uint8_t> occ(product(extents), 0);
  if (empty()) return occ;
  // Map each fine slab to the coarse slab that holds it, if any.
  std::vector<std::vector<std::ptrdiff_t>> map(dim_);
  for (int k = 0; k < dim_; ++k) {
    for (std::size_t j = 0; j < extents[k]; ++j) {
      const Coord x = fine_breaks[k][j];
      const auto& b = breaks_[k];
      if (x < b.front() || x >= b.back()) {
        map[k].push_back(-1);
      } else {
        map[k].push_back(static_cast<std::ptrdiff_t>(slab_of(b, x)));
      }
    }
  }
  std::size_t flat = 0;
  detail::for_each_index(extents, [&](const std::vector<std::size_t>& idx) {
    std::size_t src = 0;
    bool inside = true;
    for (int k = 0; k < dim_ && inside; ++k) {
      const auto c = map[k][idx[k]];
      if (c < 0) inside = false;
      else src += static_cast<std::size_t>(c) * strides_[k];
    }
    occ[flat++] = inside && occupancy_[src];
  });
  return occ;
}

}  // namespace orthotope
