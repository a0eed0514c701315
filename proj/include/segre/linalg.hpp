#pragma once

// Small vectors and matrices over GF(q) and the projective spaces PG(n-1, q).

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "segre/field.hpp"

namespace segre {

using Vec2 = std::array<Elem, 2>;
using Vec8 = std::array<Elem, 8>;

// Index of a point of PG(7, q); fits q <= 16.
using PointIndex = std::uint32_t;

// [[a, b], [c, d]], acting on column vectors.
struct Mat2 {
  Elem a, b, c, d;

  static Mat2 identity() { return {Elem{1}, Elem{0}, Elem{0}, Elem{1}}; }
  friend bool operator==(const Mat2&, const Mat2&) = default;
};

Elem mat2_det(const Field& f, const Mat2& m);
Mat2 mat2_mul(const Field& f, const Mat2& x, const Mat2& y);
// Throws std::domain_error for singular input.
Mat2 mat2_inverse(const Field& f, const Mat2& m);
Vec2 mat2_apply(const Field& f, const Mat2& m, const Vec2& v);

template <std::size_t N>
bool is_zero(const std::array<Elem, N>& v) {
  for (Elem x : v)
    if (!x.is_zero()) return false;
  return true;
}

// Scales v so that its first nonzero coordinate is 1.
template <std::size_t N>
std::array<Elem, N> pg_normalize(const Field& f, std::array<Elem, N> v) {
  std::size_t lead = 0;
  while (lead < N && v[lead].is_zero()) ++lead;
  if (lead == N)
    throw std::invalid_argument("zero vector has no projective point");
  if (v[lead] != f.one()) {
    const Elem s = f.inv(v[lead]);
    for (std::size_t i = lead; i < N; ++i) v[i] = f.mul(s, v[i]);
  }
  return v;
}

template <std::size_t N>
std::array<Elem, N> scale(const Field& f, Elem s, std::array<Elem, N> v) {
  for (Elem& x : v) x = f.mul(s, x);
  return v;
}

// Dimension of the span of the given vectors (Gaussian elimination).
int span_rank(const Field& f, std::span<const Vec8> vectors);

// Points of PG(n-1, q), 1 <= n <= 8, addressed by a dense index.
//
// A normalized representative with leading 1 at position j has index
//   (q^(n-1-j) - 1)/(q - 1) + sum_{m > j} v_m q^(n-1-m),
// which orders the points by the base-q value of their coordinate string
// (coordinate 0 most significant). e_{n-1} has index 0.
class ProjectiveSpace {
 public:
  ProjectiveSpace(const Field& field, unsigned n);

  const Field& field() const { return *field_; }
  unsigned dimension() const { return n_; }
  std::uint64_t size() const { return size_; }

  // v must be normalized.
  std::uint64_t index_of(std::span<const Elem> v) const;
  void unrank(std::uint64_t index, std::span<Elem> out) const;

  // Visits every point in index order.
  void for_each(const std::function<void(std::uint64_t, std::span<const Elem>)>&
                    visit) const;

 private:
  const Field* field_;
  unsigned n_;
  std::uint64_t size_;
  std::array<std::uint64_t, 9> qpow_{};
};

// A normalized point of PG(7, q) together with its index.
struct ProjPoint {
  Vec8 coords{};
  PointIndex index = 0;

  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
};

// PG(7, q): the projective space of F_q^2 (x) F_q^2 (x) F_q^2.
class PointSpace {
 public:
  explicit PointSpace(const Field& field) : space_(field, 8) {}

  const Field& field() const { return space_.field(); }
  PointIndex size() const { return static_cast<PointIndex>(space_.size()); }

  PointIndex index_of(const Vec8& normalized) const {
    return static_cast<PointIndex>(space_.index_of(normalized));
  }
  Vec8 coords(PointIndex index) const {
    Vec8 v;
    space_.unrank(index, v);
    return v;
  }
  // Normalizes a nonzero vector and attaches its index.
  ProjPoint point(const Vec8& v) const {
    ProjPoint p;
    p.coords = pg_normalize(field(), v);
    p.index = index_of(p.coords);
    return p;
  }

 private:
  ProjectiveSpace space_;
};

std::string format_coords(std::span<const Elem> v);

}  // namespace segre
