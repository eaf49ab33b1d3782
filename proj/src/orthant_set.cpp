#include "orthotope/orthant_set.hpp"

#include <bit>
#include <string>

namespace orthotope {

namespace {

void check_dim(int dim) {
  if (dim < 0 || dim > OrthantSet::kMaxDim) {
    throw std::invalid_argument("orthant set dimension out of range: " + std::to_string(dim));
  }
}

// Removes bit `pos` from `s`, shifting the higher bits down.
OrthantSet::Index drop_bit(OrthantSet::Index s, int pos) {
  const OrthantSet::Index low = s & ((OrthantSet::Index{1} << pos) - 1);
  return low | ((s >> (pos + 1)) << pos);
}

}  // namespace

OrthantSet::OrthantSet(int dim) : dim_(dim) {
  check_dim(dim);
  bits_.resize(std::size_t{1} << dim);
}

OrthantSet OrthantSet::from_mask(int dim, std::uint64_t mask) {
  if (dim > 6) throw std::invalid_argument("from_mask needs dim <= 6");
  OrthantSet s(dim);
  for (Index i = 0; i < s.orthant_count(); ++i) {
    if ((mask >> i) & 1U) s.bits_.set(i);
  }
  return s;
}

OrthantSet OrthantSet::full(int dim) {
  OrthantSet s(dim);
  s.bits_.set();
  return s;
}

OrthantSet OrthantSet::half_space(int dim, Axis axis, int sign) {
  if (axis < 1 || axis > dim) throw std::invalid_argument("half-space axis out of range");
  OrthantSet s(dim);
  for (Index i = 0; i < s.orthant_count(); ++i) {
    if (sign_of(i, axis) == sign) s.bits_.set(i);
  }
  return s;
}

int OrthantSet::orthant_sign(Index s) noexcept { return std::popcount(s) % 2 == 0 ? 1 : -1; }

OrthantSet OrthantSet::complement() const {
  OrthantSet c(*this);
  c.bits_.flip();
  return c;
}

OrthantSet OrthantSet::operator&(const OrthantSet& other) const {
  if (dim_ != other.dim_) throw std::invalid_argument("orthant set dimension mismatch");
  OrthantSet r(*this);
  r.bits_ &= other.bits_;
  return r;
}

OrthantSet OrthantSet::operator|(const OrthantSet& other) const {
  if (dim_ != other.dim_) throw std::invalid_argument("orthant set dimension mismatch");
  OrthantSet r(*this);
  r.bits_ |= other.bits_;
  return r;
}

bool OrthantSet::essential(Axis axis) const {
  const Index flip = Index{1} << (axis - 1);
  for (Index s = 0; s < orthant_count(); ++s) {
    if (bits_.test(s) != bits_.test(s ^ flip)) return true;
  }
  return false;
}

std::vector<Axis> OrthantSet::essential_axes() const {
  std::vector<Axis> out;
  for (Axis a = 1; a <= dim_; ++a) {
    if (essential(a)) out.push_back(a);
  }
  return out;
}

OrthantSet OrthantSet::slice(Axis axis, int side) const {
  if (axis < 1 || axis > dim_) throw std::invalid_argument("slice axis out of range");
  OrthantSet r(dim_ - 1);
  const int pos = axis - 1;
  for (Index s = 0; s < orthant_count(); ++s) {
    if (sign_of(s, axis) != side || !bits_.test(s)) continue;
    r.bits_.set(drop_bit(s, pos));
  }
  return r;
}

OrthantSet OrthantSet::project(const std::vector<int>& positions) const {
  OrthantSet r(static_cast<int>(positions.size()));
  for (Index s = bits_.find_first(); s != decltype(bits_)::npos; s = bits_.find_next(s)) {
    Index t = 0;
    for (std::size_t k = 0; k < positions.size(); ++k) {
      if ((s >> positions[k]) & 1U) t |= Index{1} << k;
    }
    r.bits_.set(t);
  }
  return r;
}

std::uint64_t OrthantSet::mask() const {
  std::uint64_t m = 0;
  const std::size_t n = std::min<std::size_t>(orthant_count(), 64);
  for (std::size_t i = 0; i < n; ++i) {
    if (bits_.test(i)) m |= std::uint64_t{1} << i;
  }
  return m;
}

bool OrthantSet::operator<(const OrthantSet& other) const {
  if (dim_ != other.dim_) return dim_ < other.dim_;
  return bits_ < other.bits_;
}

}  // namespace orthotope
