#include "segre/variety.hpp"

#include <algorithm>
#include <set>

namespace segre {

namespace {

Vec8 vec_of(const Tensor222& t) { return t.a; }

void sort_unique(std::vector<PointIndex>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

SpanType SpanType::sorted() const {
  SpanType s = *this;
  std::sort(s.a.begin(), s.a.end());
  return s;
}

LineType line_type(const SegrePoint& y, const SegrePoint& z) {
  LineType t;
  for (int i = 0; i < 3; ++i) t.a[i] = y.factors[i] == z.factors[i] ? 1 : 2;
  return t;
}

PlaneType plane_type(const SegrePoint& y, const SegrePoint& z, const SegrePoint& w) {
  PlaneType t;
  for (int i = 0; i < 3; ++i) {
    std::set<std::array<std::uint8_t, 2>> distinct;
    for (const SegrePoint* s : {&y, &z, &w})
      distinct.insert({s->factors[i][0].value, s->factors[i][1].value});
    t.a[i] = static_cast<int>(distinct.size());
  }
  return t;
}

bool Leaf::contains(PointIndex index) const {
  return std::binary_search(points.begin(), points.end(), index);
}

bool Leaf::contains_vector(const Field& f, const Vec8& v) const {
  std::array<Vec8, 5> rows;
  std::copy(basis.begin(), basis.end(), rows.begin());
  rows[4] = v;
  return span_rank(f, rows) == span_rank(f, basis);
}

bool Shamrock::contains(PointIndex index) const {
  return std::binary_search(points.begin(), points.end(), index);
}

Variety::Variety(const Field& field) : field_(&field), space_(field) {
  line_.push_back({field.one(), field.zero()});
  line_.push_back({field.zero(), field.one()});
  for (Elem l : field.nonzero_elements()) line_.push_back({field.one(), l});

  for (const Vec2& u : line_)
    for (const Vec2& v : line_)
      for (const Vec2& w : line_) {
        points_.push_back({{u, v, w}});
        tensors_.push_back(tensor_product(field, u, v, w));
      }
}

ProjPoint Variety::embed(const SegrePoint& s) const {
  const Tensor222 t = tensor_product(*field_, s.factors[0], s.factors[1], s.factors[2]);
  return space_.point(t.a);
}

std::vector<ProjPoint> Variety::enumerate() const {
  std::vector<ProjPoint> out;
  out.reserve(points_.size());
  for (const SegrePoint& s : points_) out.push_back(embed(s));
  return out;
}

std::vector<ProjPoint> Variety::line(const SegrePoint& y, Factor i) const {
  std::vector<ProjPoint> out;
  for (const Vec2& u : line_) {
    SegrePoint s = y;
    s.factors[position(i)] = u;
    out.push_back(embed(s));
  }
  return out;
}

std::vector<ProjPoint> Variety::quadric(const SegrePoint& y, Factor k) const {
  const int fixed = position(k);
  const int r = fixed == 0 ? 1 : 0;
  const int c = fixed == 2 ? 1 : 2;
  std::vector<ProjPoint> out;
  for (const Vec2& u : line_)
    for (const Vec2& v : line_) {
      SegrePoint s = y;
      s.factors[r] = u;
      s.factors[c] = v;
      out.push_back(embed(s));
    }
  return out;
}

Leaf Variety::leaf(const SegrePoint& y, Factor k) const {
  const Field& f = *field_;
  const int fixed = position(k);
  const int r = fixed == 0 ? 1 : 0;
  const int c = fixed == 2 ? 1 : 2;
  const std::array<Vec2, 2> unit = {Vec2{f.one(), f.zero()}, Vec2{f.zero(), f.one()}};

  Leaf leaf;
  leaf.fixed = k;
  for (int m = 0; m < 4; ++m) {
    std::array<Vec2, 3> fac;
    fac[fixed] = y.factors[fixed];
    fac[r] = unit[m / 2];
    fac[c] = unit[m % 2];
    leaf.basis[m] = vec_of(tensor_product(f, fac[0], fac[1], fac[2]));
  }

  // Every projective point of the 4-dimensional span, once per
  // normalized coefficient vector.
  const ProjectiveSpace coefficients(f, 4);
  coefficients.for_each([&](std::uint64_t, std::span<const Elem> x) {
    Vec8 v{};
    for (int m = 0; m < 4; ++m)
      for (int i = 0; i < 8; ++i) v[i] = f.add(v[i], f.mul(x[m], leaf.basis[m][i]));
    leaf.points.push_back(space_.point(v).index);
  });
  sort_unique(leaf.points);
  return leaf;
}

Shamrock Variety::shamrock(const SegrePoint& y) const {
  Shamrock sh;
  sh.base = y;
  for (Factor k : kFactors) {
    sh.leaves[position(k)] = leaf(y, k);
    const auto& pts = sh.leaves[position(k)].points;
    sh.points.insert(sh.points.end(), pts.begin(), pts.end());
  }
  sort_unique(sh.points);
  return sh;
}

}  // namespace segre
