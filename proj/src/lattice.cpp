#include "orthotope/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "grid_util.hpp"
#include "lattice_scan.hpp"

namespace orthotope {

namespace detail {

Scanner::Scanner(const IntegralOrthotope& p) : polytope_(p), dim_(p.dim()) {
  if (dim_ > kMaxLatticeDim) {
    throw std::invalid_argument("lattice analysis supports d <= " + std::to_string(kMaxLatticeDim) + ", got " +
                                std::to_string(dim_));
  }
  if (p.empty()) return;
  for (int k = 0; k < dim_; ++k) {
    const std::size_t m = p.slab_count(k);
    extents_.push_back(2 * m + 1);
    std::vector<std::ptrdiff_t> plus(2 * m + 1), minus(2 * m + 1);
    for (std::size_t q = 0; q <= 2 * m; ++q) {
      const std::ptrdiff_t j = static_cast<std::ptrdiff_t>(q / 2);
      if (q % 2 == 1) {
        plus[q] = minus[q] = j;
      } else {
        minus[q] = j - 1;
        plus[q] = j < static_cast<std::ptrdiff_t>(m) ? j : -1;
      }
      const auto stride = static_cast<std::ptrdiff_t>(p.stride(k));
      plus[q] = plus[q] < 0 ? -1 : plus[q] * stride;
      minus[q] = minus[q] < 0 ? -1 : minus[q] * stride;
    }
    plus_.push_back(std::move(plus));
    minus_.push_back(std::move(minus));
  }
  strides_ = row_major_strides(extents_);
}

std::size_t Scanner::region_count() const {
  if (!has_regions()) return 0;
  std::size_t n = 1;
  for (std::size_t e : extents_) n *= e;
  return n;
}

std::size_t Scanner::flat(const std::vector<std::size_t>& q) const {
  std::size_t f = 0;
  for (int k = 0; k < dim_; ++k) f += q[k] * strides_[k];
  return f;
}

std::uint64_t Scanner::cone_mask(const std::vector<std::size_t>& q) const {
  if (!has_regions()) return 0;
  const auto& occ = polytope_.occupancy();
  std::uint64_t mask = 0;
  const std::uint64_t orthants = std::uint64_t{1} << dim_;
  for (std::uint64_t s = 0; s < orthants; ++s) {
    std::ptrdiff_t offset = 0;
    bool inside = true;
    for (int k = 0; k < dim_; ++k) {
      const std::ptrdiff_t o = (s >> k) & 1U ? minus_[k][q[k]] : plus_[k][q[k]];
      if (o < 0) {
        inside = false;
        break;
      }
      offset += o;
    }
    if (inside && occ[static_cast<std::size_t>(offset)]) mask |= std::uint64_t{1} << s;
  }
  return mask;
}

const ConeInfo& Scanner::info(std::uint64_t mask) {
  auto it = cache_.find(mask);
  if (it != cache_.end()) return it->second;
  ConeInfo c;
  c.cone = OrthantSet::from_mask(dim_, mask);
  if (!c.cone.empty()) {
    c.essential = c.cone.essential_axes();
    c.degree = dim_ - static_cast<int>(c.essential.size());
    c.recognition = recognize(c.cone);
    c.degenerate = std::holds_alternative<Degenerate>(c.recognition);
    const OrthantCounts counts = orthant_counts(c.cone);
    c.mu_d = counts.mu_d;
    c.tau_d = counts.tau_d;
    if (c.vertex() && !c.degenerate) {
      const auto& d = std::get<SignedSpd>(c.recognition);
      if (mu(d.shape()) != c.mu_d || tau(d) != c.tau_d) {
        throw ConsistencyError("orthant counts disagree with the diagram valuations for " + format_expr(d));
      }
      c.sigma = bouquet(d.shape()).sign;
      c.key = canonical_key(d.shape());
    }
  }
  return cache_.emplace(mask, std::move(c)).first->second;
}

Coord Scanner::first_coord(int k, std::size_t q) const {
  return 2 * breakpoint(k, q / 2) + static_cast<Coord>(q % 2);
}

HalfPoint Scanner::first_point(const std::vector<std::size_t>& q) const {
  HalfPoint p(dim_);
  for (int k = 0; k < dim_; ++k) p[k] = first_coord(k, q[k]);
  return p;
}

Coord Scanner::lattice_points(int k, std::size_t q) const {
  if (q % 2 == 0) return 1;
  return breakpoint(k, q / 2 + 1) - breakpoint(k, q / 2) - 1;
}

std::ptrdiff_t Scanner::locate(int k, Coord doubled) const {
  const auto& b = polytope_.breaks(k);
  if (doubled < 2 * b.front() || doubled > 2 * b.back()) return -1;
  // First breakpoint with 2*b >= doubled.
  const auto it = std::lower_bound(b.begin(), b.end(), doubled, [](Coord x, Coord v) { return 2 * x < v; });
  const auto j = static_cast<std::ptrdiff_t>(it - b.begin());
  return 2 * *it == doubled ? 2 * j : 2 * j - 1;
}

PointClass to_point_class(const ConeInfo& c, HalfPoint point) {
  PointClass pc;
  pc.point = std::move(point);
  pc.cone = c.cone;
  pc.essential_axes = c.essential;
  pc.degree = c.degree;
  pc.floral = c.recognition;
  return pc;
}

void require_generic(const IntegralOrthotope& p) {
  const GenericityCheck g = check_generic(p);
  if (!g.generic()) throw NotGenericError(*g.witness);
}

}  // namespace detail

using detail::ConeInfo;
using detail::require_generic;
using detail::Scanner;
using detail::to_point_class;

namespace {

std::string format_point(const HalfPoint& p) {
  std::string s = "(";
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (k) s += ",";
    const Coord a = p[k] < 0 ? -p[k] : p[k];
    if (p[k] < 0) s += "-";
    s += std::to_string(a / 2);
    if (a % 2) s += ".5";
  }
  return s + ")";
}

}  // namespace

NotGenericError::NotGenericError(HalfPoint witness)
    : std::runtime_error("not a generic orthotope: degenerate tangent cone at " + format_point(witness) +
                         " (working-scale units)"),
      witness_(std::move(witness)) {}

PointClass classify_point(const IntegralOrthotope& p, const HalfPoint& point) {
  if (static_cast<int>(point.size()) != p.dim()) throw std::invalid_argument("point dimension does not match");
  Scanner scan(p);
  std::vector<std::size_t> q(p.dim());
  bool inside = scan.has_regions();
  for (int k = 0; k < p.dim() && inside; ++k) {
    const auto r = scan.locate(k, point[k]);
    if (r < 0) inside = false;
    else q[k] = static_cast<std::size_t>(r);
  }
  const std::uint64_t mask = inside ? scan.cone_mask(q) : 0;
  return to_point_class(scan.info(mask), point);
}

std::vector<PointClass> vertices(const IntegralOrthotope& p) {
  Scanner scan(p);
  std::vector<PointClass> out;
  if (!scan.has_regions()) return out;
  detail::for_each_index(scan.extents(), [&](const std::vector<std::size_t>& q) {
    for (std::size_t x : q)
      if (x % 2) return;
    const ConeInfo& c = scan.info_at(q);
    if (c.vertex()) out.push_back(to_point_class(c, scan.first_point(q)));
  });
  return out;
}

GenericityCheck check_generic(const IntegralOrthotope& p) {
  Scanner scan(p);
  GenericityCheck result;
  if (!scan.has_regions()) return result;
  // for_each_index cannot stop early; the flag skips the remaining work.
  detail::for_each_index(scan.extents(), [&](const std::vector<std::size_t>& q) {
    if (result.witness) return;
    if (scan.info_at(q).degenerate) result.witness = scan.first_point(q);
  });
  return result;
}

std::uint64_t VertexCensus::total() const {
  std::uint64_t n = 0;
  for (const auto& [mu, count] : by_mu) n += count;
  return n;
}

VertexCensus vertex_census(const IntegralOrthotope& p) {
  require_generic(p);
  Scanner scan(p);
  VertexCensus census;
  if (!scan.has_regions()) return census;
  detail::for_each_index(scan.extents(), [&](const std::vector<std::size_t>& q) {
    for (std::size_t x : q)
      if (x % 2) return;
    const ConeInfo& c = scan.info_at(q);
    if (!c.vertex()) return;
    ++census.by_class[c.key];
    ++census.by_mu[c.mu_d];
  });
  std::uint64_t by_class = 0;
  for (const auto& [key, count] : census.by_class) by_class += count;
  if (by_class != census.total()) throw ConsistencyError("census totals disagree");
  return census;
}

Rational volume(const IntegralOrthotope& p, VolumeMethod method) {
  BigInt scale_power = pow(BigInt(p.scale()), static_cast<unsigned>(p.dim()));
  if (method == VolumeMethod::VoxelCount) return Rational(p.unit_cell_count(), scale_power);

  require_generic(p);
  Scanner scan(p);
  BigInt total = 0;
  if (!scan.has_regions()) return Rational(0);
  const int d = p.dim();
  if (method == VolumeMethod::MuSum) {
    detail::for_each_index(scan.extents(), [&](const std::vector<std::size_t>& q) {
      const ConeInfo& c = scan.info_at(q);
      if (c.mu_d == 0) return;
      BigInt weight = c.mu_d;
      for (int k = 0; k < d; ++k) weight *= scan.lattice_points(k, q[k]);
      total += weight;
    });
    return Rational(total, scale_power << d);
  }
  detail::for_each_index(scan.extents(), [&](const std::vector<std::size_t>& q) {
    for (std::size_t x : q)
      if (x % 2) return;
    const ConeInfo& c = scan.info_at(q);
    if (!c.vertex()) return;
    BigInt term = c.tau_d;
    for (int k = 0; k < d; ++k) term *= scan.breakpoint(k, q[k] / 2);
    total += term;
  });
  // tau is the sign of the occupied orthant, which points back into P from
  // the far corner; (-1)^d restores a positive volume in odd dimensions.
  if (d % 2 == 1) total = -total;
  if (d == 0) total = 1;
  return Rational(total, scale_power);
}

std::int64_t sigma_sum(const IntegralOrthotope& p) {
  require_generic(p);
  Scanner scan(p);
  std::int64_t total = 0;
  if (!scan.has_regions()) return 0;
  detail::for_each_index(scan.extents(), [&](const std::vector<std::size_t>& q) {
    for (std::size_t x : q)
      if (x % 2) return;
    const ConeInfo& c = scan.info_at(q);
    if (c.vertex()) total += c.sigma;
  });
  return total;
}

std::int64_t euler(const IntegralOrthotope& p, EulerMethod method) {
  if (method == EulerMethod::SigmaSum) {
    const std::int64_t s = sigma_sum(p);
    if (p.dim() == 0) return p.empty() ? 0 : 1;
    const std::int64_t denom = std::int64_t{1} << p.dim();
    if (s % denom != 0) {
      throw ConsistencyError("sigma sum " + std::to_string(s) + " is not divisible by " + std::to_string(denom));
    }
    return s / denom;
  }
  // Open cubes of the unit grid inside P, counted with sign (-1)^dim. Along a
  // compressed slab the open unit segments outnumber the lattice points by
  // one, so each slab contributes -1 and each breakpoint +1.
  Scanner scan(p);
  std::int64_t chi = 0;
  if (!scan.has_regions()) return 0;
  detail::for_each_index(scan.extents(), [&](const std::vector<std::size_t>& q) {
    if (!scan.info_at(q).nonempty()) return;
    int sign = 1;
    for (std::size_t x : q)
      if (x % 2) sign = -sign;
    chi += sign;
  });
  return chi;
}

}  // namespace orthotope
