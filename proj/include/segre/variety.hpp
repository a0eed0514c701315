#pragma once

// The Segre variety X = S_{2,2,2}(q) in PG(7, q) and the configurations
// attached to its points: the lines L_i(y), the hyperbolic quadrics
// Q_k(y), the solids (leaves) they span, and the shamrock of y.

#include <array>
#include <span>
#include <vector>

#include "segre/field.hpp"
#include "segre/linalg.hpp"
#include "segre/tensor.hpp"

namespace segre {

// A triple of normalized points of PG(1, q).
struct SegrePoint {
  std::array<Vec2, 3> factors{};

  const Vec2& operator[](Factor f) const { return factors[position(f)]; }
  friend bool operator==(const SegrePoint&, const SegrePoint&) = default;
};

// Per-factor dimensions (lines) or counts of distinct factor points
// (planes) of the Segre points spanning a subspace.
struct SpanType {
  std::array<int, 3> a{};

  SpanType sorted() const;
  friend bool operator==(const SpanType&, const SpanType&) = default;
};
using LineType = SpanType;
using PlaneType = SpanType;

LineType line_type(const SegrePoint& y, const SegrePoint& z);
PlaneType plane_type(const SegrePoint& y, const SegrePoint& z, const SegrePoint& w);

// A solid spanned by a quadric Q_k(y).
struct Leaf {
  Factor fixed = Factor::first;
  std::array<Vec8, 4> basis{};
  std::vector<PointIndex> points;  // sorted

  bool contains(PointIndex index) const;
  // Algebraic test: adding v does not increase the span rank.
  bool contains_vector(const Field& f, const Vec8& v) const;
};

struct Shamrock {
  SegrePoint base;
  std::array<Leaf, 3> leaves;
  std::vector<PointIndex> points;  // sorted union of the leaves

  bool contains(PointIndex index) const;
};

class Variety {
 public:
  explicit Variety(const Field& field);

  const Field& field() const { return *field_; }
  const PointSpace& space() const { return space_; }

  // PG(1, q) in the order <e0>, <e1>, <e0 + l e1> for nonzero l in
  // encoding order.
  std::span<const Vec2> projective_line() const { return line_; }

  // All (q+1)^3 Segre points, the factor indices varying fastest on the
  // third factor.
  std::span<const SegrePoint> points() const { return points_; }
  // Pure tensors u (x) v (x) w of the normalized factor representatives,
  // parallel to points(); each is itself normalized.
  std::span<const Tensor222> tensors() const { return tensors_; }
  std::size_t size() const { return points_.size(); }

  ProjPoint embed(const SegrePoint& s) const;
  // The image of the embedding, in points() order.
  std::vector<ProjPoint> enumerate() const;

  // L_i(y): vary factor i, keep the others.
  std::vector<ProjPoint> line(const SegrePoint& y, Factor i) const;
  // Q_k(y): keep factor k, vary the other two.
  std::vector<ProjPoint> quadric(const SegrePoint& y, Factor k) const;
  // The solid spanned by Q_k(y).
  Leaf leaf(const SegrePoint& y, Factor k) const;
  Shamrock shamrock(const SegrePoint& y) const;

 private:
  const Field* field_;
  PointSpace space_;
  std::vector<Vec2> line_;
  std::vector<SegrePoint> points_;
  std::vector<Tensor222> tensors_;
};

}  // namespace segre
