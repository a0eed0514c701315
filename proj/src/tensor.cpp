#include "segre/tensor.hpp"

namespace segre {

namespace {

// Entry of t with the coordinate of `factor` set to `s` and the remaining
// coordinates (in increasing factor order) set to r, c.
Elem slice_entry(const Tensor222& t, Factor factor, int s, int r, int c) {
  switch (factor) {
    case Factor::first:
      return t(s, r, c);
    case Factor::second:
      return t(r, s, c);
    case Factor::third:
      return t(r, c, s);
  }
  return Elem{0};
}

// Rank of the 2x4 matrix whose rows are the slices s = 0, 1.
int rank_2x4(const Field& f, const std::array<Elem, 4>& x,
             const std::array<Elem, 4>& y) {
  bool nonzero = false;
  for (int m = 0; m < 4; ++m)
    if (!x[m].is_zero() || !y[m].is_zero()) nonzero = true;
  if (!nonzero) return 0;
  for (int m = 0; m < 4; ++m)
    for (int n = m + 1; n < 4; ++n)
      if (f.mul(x[m], y[n]) != f.mul(x[n], y[m])) return 2;
  return 1;
}

}  // namespace

Tensor222 tensor_product(const Field& f, const Vec2& u, const Vec2& v,
                         const Vec2& w) {
  Tensor222 t;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const Elem uv = f.mul(u[i], v[j]);
      for (int k = 0; k < 2; ++k) t(i, j, k) = f.mul(uv, w[k]);
    }
  return t;
}

Tensor222 add(const Field& f, const Tensor222& s, const Tensor222& t) {
  Tensor222 r;
  for (std::size_t i = 0; i < 8; ++i) r.a[i] = f.add(s.a[i], t.a[i]);
  return r;
}

Tensor222 sub_scaled(const Field& f, const Tensor222& s, Elem c,
                     const Tensor222& t) {
  Tensor222 r;
  for (std::size_t i = 0; i < 8; ++i) r.a[i] = f.sub(s.a[i], f.mul(c, t.a[i]));
  return r;
}

Mat2 contract(const Field& f, const Tensor222& t, const Functional& w) {
  if (is_zero(w.coeffs)) throw std::invalid_argument("zero functional");
  Elem m[2][2];
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      m[r][c] = f.add(f.mul(w.coeffs[0], slice_entry(t, w.factor, 0, r, c)),
                      f.mul(w.coeffs[1], slice_entry(t, w.factor, 1, r, c)));
  return {m[0][0], m[0][1], m[1][0], m[1][1]};
}

int flattening_rank(const Field& f, const Tensor222& t, Factor factor) {
  std::array<Elem, 4> x;
  std::array<Elem, 4> y;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) {
      x[2 * r + c] = slice_entry(t, factor, 0, r, c);
      y[2 * r + c] = slice_entry(t, factor, 1, r, c);
    }
  return rank_2x4(f, x, y);
}

std::array<int, 3> flattening_ranks(const Field& f, const Tensor222& t) {
  return {flattening_rank(f, t, Factor::first), flattening_rank(f, t, Factor::second),
          flattening_rank(f, t, Factor::third)};
}

bool is_pure(const Field& f, const Tensor222& t) {
  for (Factor factor : kFactors)
    if (flattening_rank(f, t, factor) != 1) return false;
  return true;
}

bool is_nonsingular(const Field& f, const Tensor222& t) {
  if (t.is_zero()) return false;
  // Projective functionals: (0,1) and (1,x) for every x.
  for (Factor factor : kFactors) {
    if (mat2_det(f, contract(f, t, {factor, {f.zero(), f.one()}})).is_zero())
      return false;
    for (Elem x : f.elements())
      if (mat2_det(f, contract(f, t, {factor, {f.one(), x}})).is_zero())
        return false;
  }
  return true;
}

Elem hyperdeterminant(const Field& f, const Tensor222& t) {
  const auto m = [&f](Elem x, Elem y) { return f.mul(x, y); };
  // Discriminant of the binary quadratic form det(x * t(0,.,.) + y * t(1,.,.)).
  Elem s = m(t(0, 0, 0), t(1, 1, 1));
  s = f.add(s, m(t(0, 1, 1), t(1, 0, 0)));
  s = f.sub(s, m(t(0, 0, 1), t(1, 1, 0)));
  s = f.sub(s, m(t(0, 1, 0), t(1, 0, 1)));
  const Elem det0 = f.sub(m(t(0, 0, 0), t(0, 1, 1)), m(t(0, 0, 1), t(0, 1, 0)));
  const Elem det1 = f.sub(m(t(1, 0, 0), t(1, 1, 1)), m(t(1, 0, 1), t(1, 1, 0)));
  return f.sub(m(s, s), m(f.from_int(4), m(det0, det1)));
}

}  // namespace segre
