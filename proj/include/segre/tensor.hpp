#pragma once

// Tensors of V = F_q^2 (x) F_q^2 (x) F_q^2.

#include <array>

#include "segre/field.hpp"
#include "segre/linalg.hpp"

namespace segre {

// Position of a tensor factor.
enum class Factor : int { first = 1, second = 2, third = 3 };

inline constexpr std::array<Factor, 3> kFactors = {Factor::first, Factor::second,
                                                  Factor::third};

constexpr int position(Factor f) { return static_cast<int>(f) - 1; }

// Coordinates a_{ijk} stored at index 4i + 2j + k.
struct Tensor222 {
  Vec8 a{};

  static constexpr std::size_t index(int i, int j, int k) {
    return static_cast<std::size_t>(4 * i + 2 * j + k);
  }
  Elem operator()(int i, int j, int k) const { return a[index(i, j, k)]; }
  Elem& operator()(int i, int j, int k) { return a[index(i, j, k)]; }
  bool is_zero() const { return segre::is_zero(a); }

  friend bool operator==(const Tensor222&, const Tensor222&) = default;
};

Tensor222 tensor_product(const Field& f, const Vec2& u, const Vec2& v, const Vec2& w);
Tensor222 add(const Field& f, const Tensor222& s, const Tensor222& t);
// s - c t
Tensor222 sub_scaled(const Field& f, const Tensor222& s, Elem c, const Tensor222& t);

// A nonzero element of the dual of one factor.
struct Functional {
  Factor factor = Factor::first;
  Vec2 coeffs{};
};

// Contraction of t by a functional on factor i: the 2x2 matrix indexed by
// the two remaining factors in increasing order. For the first factor and
// coefficients (x0, x1) this is x0 * t(0,.,.) + x1 * t(1,.,.).
// Throws std::invalid_argument for a zero functional.
Mat2 contract(const Field& f, const Tensor222& t, const Functional& w);

// Dimension of the span of all contractions along one factor, in {0,1,2}.
int flattening_rank(const Field& f, const Tensor222& t, Factor factor);
std::array<int, 3> flattening_ranks(const Field& f, const Tensor222& t);

// t != 0 and t = u (x) v (x) w.
bool is_pure(const Field& f, const Tensor222& t);

// Every contraction by every nonzero functional in every factor is an
// invertible matrix. The zero tensor is singular.
bool is_nonsingular(const Field& f, const Tensor222& t);

// Cayley's hyperdeterminant of the 2x2x2 array.
Elem hyperdeterminant(const Field& f, const Tensor222& t);

}  // namespace segre
