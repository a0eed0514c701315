#pragma once

// Table-backed arithmetic in small finite fields GF(p^e), q = p^e <= 16.
//
// Elements are encoded canonically as integers in [0, q): the polynomial
// c_0 + c_1 x + ... + c_{e-1} x^{e-1} (reduced modulo the field modulus)
// is stored as c_0 + c_1 p + ... + c_{e-1} p^{e-1}. The prime subfield is
// therefore encoded by the integers 0..p-1 and x itself by p (when e > 1).

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace segre {

struct Elem {
  std::uint8_t value = 0;

  constexpr Elem() = default;
  constexpr explicit Elem(unsigned v) : value(static_cast<std::uint8_t>(v)) {}

  constexpr bool is_zero() const { return value == 0; }

  friend constexpr bool operator==(Elem, Elem) = default;
  friend constexpr auto operator<=>(Elem, Elem) = default;
};

class Field {
 public:
  static constexpr unsigned kMaxOrder = 16;

  // Builds GF(p^e). The modulus is the lexicographically smallest monic
  // irreducible polynomial of degree e, comparing coefficient lists with
  // the constant term first. Throws std::invalid_argument when p is not
  // prime, e == 0, or p^e > kMaxOrder.
  Field(unsigned p, unsigned e);

  // Factors q as p^e and builds the field.
  static Field of_order(unsigned q);

  unsigned characteristic() const { return p_; }
  unsigned degree() const { return e_; }
  unsigned order() const { return q_; }

  // Coefficients of the modulus, constant term first; always monic.
  const std::vector<unsigned>& modulus() const { return modulus_; }

  Elem zero() const { return Elem{0}; }
  Elem one() const { return Elem{1}; }
  Elem primitive() const { return primitive_; }

  // Validated conversion from the canonical encoding.
  Elem element(unsigned value) const;
  // Image of the integer n in the prime subfield.
  Elem from_int(long long n) const;
  // All elements in encoding order.
  std::vector<Elem> elements() const;
  std::vector<Elem> nonzero_elements() const;

  Elem add(Elem a, Elem b) const { return Elem{add_[slot(a, b)]}; }
  Elem sub(Elem a, Elem b) const { return Elem{add_[slot(a, neg(b))]}; }
  Elem neg(Elem a) const { return Elem{neg_[a.value]}; }
  Elem mul(Elem a, Elem b) const { return Elem{mul_[slot(a, b)]}; }
  // Throws std::domain_error for a == 0.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, unsigned long long n) const;

  // Discrete logarithm to the base primitive(); a must be nonzero.
  unsigned log(Elem a) const;
  Elem exp(unsigned long long k) const { return Elem{exp_[k % (q_ - 1)]}; }

  // True iff a = x^2 for some x in the field.
  bool is_square(Elem a) const;

 private:
  static constexpr std::size_t slot(Elem a, Elem b) {
    return static_cast<std::size_t>(a.value) * kMaxOrder + b.value;
  }

  unsigned p_;
  unsigned e_;
  unsigned q_;
  std::vector<unsigned> modulus_;
  Elem primitive_;
  std::array<std::uint8_t, kMaxOrder * kMaxOrder> add_{};
  std::array<std::uint8_t, kMaxOrder * kMaxOrder> mul_{};
  std::array<std::uint8_t, kMaxOrder> neg_{};
  std::array<std::uint8_t, kMaxOrder> inv_{};
  std::array<std::uint8_t, kMaxOrder> log_{};
  std::array<std::uint8_t, kMaxOrder> exp_{};
};

bool is_prime(unsigned n);

}  // namespace segre
