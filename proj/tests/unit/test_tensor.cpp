#include <random>

#include "doctest.h"
#include "segre/tensor.hpp"

using namespace segre;

namespace {

Tensor222 tensor(std::initializer_list<unsigned> values) {
  Tensor222 t;
  std::size_t i = 0;
  for (unsigned x : values) t.a[i++] = Elem{x};
  return t;
}

// a000 = a011 = a101 = a110 = a111 = 1: multiplication in GF(4) = GF(2)[w]
// with basis (1, w), since 1*1 = 1, 1*w = w, w*w = w + 1.
const Tensor222 kGf4 = tensor({1, 0, 0, 1, 0, 1, 1, 1});

Tensor222 e(int i, int j, int k) {
  Tensor222 t;
  t(i, j, k) = Elem{1};
  return t;
}

Tensor222 from_index(unsigned q, std::uint64_t n) {
  Tensor222 t;
  for (int i = 7; i >= 0; --i) {
    t.a[i] = Elem{static_cast<unsigned>(n % q)};
    n /= q;
  }
  return t;
}

std::uint64_t ipow(unsigned q, int n) {
  std::uint64_t r = 1;
  while (n-- > 0) r *= q;
  return r;
}

// Independent oracle: does some nonzero (x0, x1) make
// det(x0 * S0 + x1 * S1) vanish, S_s being the slices along `dir`?
bool singular_along(const Field& f, const Tensor222& t, int dir) {
  auto entry = [&](int s, int r, int c) {
    int idx[3];
    idx[dir] = s;
    int other[2] = {r, c};
    int o = 0;
    for (int m = 0; m < 3; ++m)
      if (m != dir) idx[m] = other[o++];
    return t(idx[0], idx[1], idx[2]);
  };
  for (Elem x0 : f.elements())
    for (Elem x1 : f.elements()) {
      if (x0.is_zero() && x1.is_zero()) continue;
      Elem m[2][2];
      for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
          m[r][c] = f.add(f.mul(x0, entry(0, r, c)), f.mul(x1, entry(1, r, c)));
      if (f.mul(m[0][0], m[1][1]) == f.mul(m[0][1], m[1][0])) return true;
    }
  return false;
}

}  // namespace

TEST_CASE("contract examples") {
  const Field f2(2, 1);
  CHECK(contract(f2, e(0, 0, 0), {Factor::first, {Elem{1}, Elem{0}}}) ==
        Mat2{Elem{1}, Elem{0}, Elem{0}, Elem{0}});
  CHECK(contract(f2, kGf4, {Factor::first, {Elem{0}, Elem{1}}}) ==
        Mat2{Elem{0}, Elem{1}, Elem{1}, Elem{1}});
  // slice 0 + slice 1 = I + [[0,1],[1,1]]
  CHECK(contract(f2, kGf4, {Factor::first, {Elem{1}, Elem{1}}}) ==
        Mat2{Elem{1}, Elem{1}, Elem{1}, Elem{0}});
  CHECK_THROWS_AS(contract(f2, kGf4, {Factor::second, {Elem{0}, Elem{0}}}),
                  std::invalid_argument);
}

TEST_CASE("contract indexes the remaining factors in order") {
  const Field f3(3, 1);
  // e_1 (x) e_0 (x) e_1: along factor 2 with (1,0) the (i,k) entry (1,1) is hit.
  CHECK(contract(f3, e(1, 0, 1), {Factor::second, {Elem{1}, Elem{0}}}) ==
        Mat2{Elem{0}, Elem{0}, Elem{0}, Elem{1}});
  // Along factor 3 with (0,2) the (i,j) entry (1,0) becomes 2.
  CHECK(contract(f3, e(1, 0, 1), {Factor::third, {Elem{0}, Elem{2}}}) ==
        Mat2{Elem{0}, Elem{0}, Elem{2}, Elem{0}});
}

TEST_CASE("contraction is linear in the functional") {
  std::mt19937 rng(3);
  for (unsigned q : {2u, 3u, 4u, 5u, 7u}) {
    const Field f = Field::of_order(q);
    std::uniform_int_distribution<unsigned> elem(0, q - 1);
    for (int trial = 0; trial < 300; ++trial) {
      Tensor222 t;
      for (Elem& x : t.a) x = Elem{elem(rng)};
      const Factor dir = kFactors[trial % 3];
      const Vec2 w = {Elem{1 + elem(rng) % (q - 1)}, Elem{elem(rng)}};
      const Vec2 v = {Elem{elem(rng)}, Elem{1 + elem(rng) % (q - 1)}};
      const Elem alpha{1 + elem(rng) % (q - 1)};
      const Elem beta{1 + elem(rng) % (q - 1)};
      const Vec2 combo = {f.add(f.mul(alpha, w[0]), f.mul(beta, v[0])),
                          f.add(f.mul(alpha, w[1]), f.mul(beta, v[1]))};
      if (is_zero(combo)) continue;
      const Mat2 lhs = contract(f, t, {dir, combo});
      const Mat2 cw = contract(f, t, {dir, w});
      const Mat2 cv = contract(f, t, {dir, v});
      const auto lin = [&](Elem x, Elem y) { return f.add(f.mul(alpha, x), f.mul(beta, y)); };
      CHECK(lhs == Mat2{lin(cw.a, cv.a), lin(cw.b, cv.b), lin(cw.c, cv.c), lin(cw.d, cv.d)});
    }
  }
}

TEST_CASE("flattening ranks") {
  const Field f3(3, 1);
  const Tensor222 pure = tensor_product(f3, {Elem{1}, Elem{2}}, {Elem{0}, Elem{1}},
                                        {Elem{2}, Elem{2}});
  CHECK(flattening_ranks(f3, pure) == std::array<int, 3>{1, 1, 1});
  // (e0 (x) e0 + e1 (x) e1) (x) e0
  CHECK(flattening_ranks(f3, add(f3, e(0, 0, 0), e(1, 1, 0))) ==
        std::array<int, 3>{2, 2, 1});
  CHECK(flattening_ranks(f3, Tensor222{}) == std::array<int, 3>{0, 0, 0});
}

TEST_CASE("is_pure") {
  const Field f2(2, 1);
  CHECK(is_pure(f2, e(0, 0, 0)));
  CHECK_FALSE(is_pure(f2, add(f2, e(0, 0, 0), e(1, 1, 1))));
  CHECK_FALSE(is_pure(f2, Tensor222{}));
}

TEST_CASE("is_nonsingular examples") {
  const Field f2(2, 1);
  CHECK(is_nonsingular(f2, kGf4));
  for (int dir = 0; dir < 3; ++dir) CHECK_FALSE(singular_along(f2, kGf4, dir));
  CHECK_FALSE(is_nonsingular(f2, add(f2, e(0, 0, 0), e(1, 1, 1))));
  CHECK_FALSE(is_nonsingular(f2, Tensor222{}));
  const Field f5(5, 1);
  CHECK_FALSE(is_nonsingular(
      f5, tensor_product(f5, {Elem{1}, Elem{3}}, {Elem{1}, Elem{0}}, {Elem{4}, Elem{1}})));
}

TEST_CASE("hyperdeterminant examples") {
  const Field f3(3, 1);
  CHECK(hyperdeterminant(f3, tensor_product(f3, {Elem{1}, Elem{2}}, {Elem{1}, Elem{1}},
                                            {Elem{0}, Elem{1}})) == Elem{0});
  const Tensor222 diag = add(f3, e(0, 0, 0), e(1, 1, 1));
  CHECK(hyperdeterminant(f3, diag) == Elem{1});
  CHECK_FALSE(is_nonsingular(f3, diag));
  // slices I and [[0,1],[2,0]]
  const Tensor222 t = tensor({1, 0, 0, 1, 0, 1, 2, 0});
  CHECK(hyperdeterminant(f3, t) == Elem{2});
  CHECK(is_nonsingular(f3, t));
}

TEST_CASE("nonsingularity matches the all-functionals oracle and is scale invariant") {
  for (unsigned q : {2u, 3u}) {
    CAPTURE(q);
    const Field f = Field::of_order(q);
    bool matches = true;
    bool scaled = true;
    for (std::uint64_t n = 0; n < ipow(q, 8); ++n) {
      const Tensor222 t = from_index(q, n);
      const bool ns = is_nonsingular(f, t);
      bool oracle = !t.is_zero();
      for (int dir = 0; dir < 3; ++dir) oracle = oracle && !singular_along(f, t, dir);
      matches &= ns == oracle;
      for (Elem s : f.nonzero_elements()) {
        Tensor222 u;
        for (int i = 0; i < 8; ++i) u.a[i] = f.mul(s, t.a[i]);
        scaled &= is_nonsingular(f, u) == ns;
      }
    }
    CHECK(matches);
    CHECK(scaled);
  }
}

TEST_CASE("a singular contraction in one factor implies one in every factor") {
  // Exhaustive at q = 2, 3; sampled at q = 4, 5, 7.
  std::mt19937 rng(11);
  for (unsigned q : {2u, 3u, 4u, 5u, 7u}) {
    CAPTURE(q);
    const Field f = Field::of_order(q);
    const bool exhaustive = q <= 3;
    const std::uint64_t count = exhaustive ? ipow(q, 8) : 20000;
    std::uniform_int_distribution<std::uint64_t> pick(0, ipow(q, 8) - 1);
    bool ok = true;
    for (std::uint64_t n = 0; n < count; ++n) {
      const Tensor222 t = from_index(q, exhaustive ? n : pick(rng));
      const bool s0 = singular_along(f, t, 0);
      ok &= s0 == singular_along(f, t, 1) && s0 == singular_along(f, t, 2);
    }
    CHECK(ok);
  }
}

TEST_CASE("odd q: nonsingular iff the hyperdeterminant is a non-square") {
  for (unsigned q : {3u, 5u}) {
    CAPTURE(q);
    const Field f = Field::of_order(q);
    bool ok = true;
    for (std::uint64_t n = 1; n < ipow(q, 8); ++n) {
      const Tensor222 t = from_index(q, n);
      ok &= is_nonsingular(f, t) == !f.is_square(hyperdeterminant(f, t));
    }
    CHECK(ok);
  }
}

TEST_CASE("pure tensors have zero hyperdeterminant") {
  for (unsigned q : {2u, 3u}) {
    const Field f = Field::of_order(q);
    for (std::uint64_t n = 0; n < ipow(q, 8); ++n) {
      const Tensor222 t = from_index(q, n);
      if (is_pure(f, t)) CHECK(hyperdeterminant(f, t) == Elem{0});
    }
  }
}
