#include "segre/field.hpp"

#include <algorithm>
#include <string>

namespace segre {

namespace {

using Poly = std::vector<unsigned>;  // coefficients over GF(p), constant first

unsigned mod_inverse(unsigned a, unsigned p) {
  for (unsigned x = 1; x < p; ++x)
    if ((a * x) % p == 1) return x;
  throw std::logic_error("no inverse modulo p");
}

// Remainder of num modulo a monic or non-monic nonzero divisor.
Poly poly_rem(Poly num, const Poly& den, unsigned p) {
  const std::size_t dd = den.size() - 1;
  const unsigned lead_inv = mod_inverse(den.back(), p);
  while (num.size() > dd) {
    const unsigned c = (num.back() * lead_inv) % p;
    const std::size_t shift = num.size() - 1 - dd;
    for (std::size_t i = 0; i <= dd; ++i)
      num[shift + i] = (num[shift + i] + p * p - c * den[i] % p) % p;
    num.pop_back();
  }
  return num;
}

bool is_zero_poly(const Poly& f) {
  return std::all_of(f.begin(), f.end(), [](unsigned c) { return c == 0; });
}

Poly decode(unsigned value, unsigned p, unsigned e) {
  Poly coeffs(e, 0);
  for (unsigned i = 0; i < e; ++i) {
    coeffs[i] = value % p;
    value /= p;
  }
  return coeffs;
}

unsigned encode(const Poly& coeffs, unsigned p) {
  unsigned value = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) value = value * p + coeffs[i];
  return value;
}

// Monic irreducibility by trial division with every monic polynomial of
// degree 1..deg/2.
bool is_irreducible(const Poly& f, unsigned p) {
  const unsigned deg = static_cast<unsigned>(f.size() - 1);
  for (unsigned d = 1; d <= deg / 2; ++d) {
    unsigned count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (unsigned v = 0; v < count; ++v) {
      Poly g = decode(v, p, d);
      g.push_back(1);
      if (is_zero_poly(poly_rem(f, g, p))) return false;
    }
  }
  return true;
}

Poly smallest_irreducible(unsigned p, unsigned e) {
  unsigned count = 1;
  for (unsigned i = 0; i < e; ++i) count *= p;
  Poly best;
  for (unsigned v = 0; v < count; ++v) {
    Poly f = decode(v, p, e);
    f.push_back(1);
    if (is_irreducible(f, p) && (best.empty() || f < best)) best = f;
  }
  if (best.empty()) throw std::logic_error("no irreducible polynomial found");
  return best;
}

unsigned poly_mul_mod(unsigned a, unsigned b, const Poly& modulus, unsigned p,
                      unsigned e) {
  const Poly x = decode(a, p, e);
  const Poly y = decode(b, p, e);
  Poly prod(2 * e - 1, 0);
  for (unsigned i = 0; i < e; ++i)
    for (unsigned j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
  Poly r = poly_rem(prod, modulus, p);
  r.resize(e, 0);
  return encode(r, p);
}

}  // namespace

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field::Field(unsigned p, unsigned e) : p_(p), e_(e), q_(1) {
  if (!is_prime(p))
    throw std::invalid_argument("field characteristic " + std::to_string(p) +
                                " is not prime");
  if (e == 0) throw std::invalid_argument("extension degree must be >= 1");
  for (unsigned i = 0; i < e; ++i) {
    q_ *= p;
    if (q_ > kMaxOrder)
      throw std::invalid_argument("field order exceeds " +
                                  std::to_string(kMaxOrder));
  }
  modulus_ = smallest_irreducible(p, e);

  for (unsigned a = 0; a < q_; ++a) {
    const Poly x = decode(a, p, e);
    Poly n(e);
    for (unsigned i = 0; i < e; ++i) n[i] = (p - x[i]) % p;
    neg_[a] = static_cast<std::uint8_t>(encode(n, p));
    for (unsigned b = 0; b < q_; ++b) {
      const Poly y = decode(b, p, e);
      Poly s(e);
      for (unsigned i = 0; i < e; ++i) s[i] = (x[i] + y[i]) % p;
      add_[slot(Elem{a}, Elem{b})] = static_cast<std::uint8_t>(encode(s, p));
    }
  }

  // Smallest encoding of multiplicative order q - 1.
  unsigned generator = 0;
  for (unsigned g = 1; g < q_ && generator == 0; ++g) {
    unsigned power = g;
    unsigned order = 1;
    while (power != 1) {
      power = poly_mul_mod(power, g, modulus_, p, e);
      ++order;
    }
    if (order == q_ - 1) generator = g;
  }
  primitive_ = Elem{generator};

  unsigned power = 1;
  for (unsigned k = 0; k + 1 < q_; ++k) {
    exp_[k] = static_cast<std::uint8_t>(power);
    log_[power] = static_cast<std::uint8_t>(k);
    power = poly_mul_mod(power, generator, modulus_, p, e);
  }
  const unsigned n = q_ - 1;
  for (unsigned a = 1; a < q_; ++a) {
    inv_[a] = exp_[(n - log_[a]) % n];
    for (unsigned b = 1; b < q_; ++b)
      mul_[slot(Elem{a}, Elem{b})] = exp_[(log_[a] + log_[b]) % n];
  }
}

Field Field::of_order(unsigned q) {
  if (q < 2) throw std::invalid_argument("field order must be >= 2");
  unsigned p = 2;
  while (q % p != 0) ++p;
  unsigned e = 0;
  unsigned rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1)
    throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  return Field(p, e);
}

Elem Field::element(unsigned value) const {
  if (value >= q_)
    throw std::out_of_range("element encoding " + std::to_string(value) +
                            " outside [0, " + std::to_string(q_) + ")");
  return Elem{value};
}

Elem Field::from_int(long long n) const {
  const long long r = ((n % p_) + p_) % p_;
  return Elem{static_cast<unsigned>(r)};
}

std::vector<Elem> Field::elements() const {
  std::vector<Elem> out;
  out.reserve(q_);
  for (unsigned v = 0; v < q_; ++v) out.emplace_back(v);
  return out;
}

std::vector<Elem> Field::nonzero_elements() const {
  std::vector<Elem> out;
  out.reserve(q_ - 1);
  for (unsigned v = 1; v < q_; ++v) out.emplace_back(v);
  return out;
}

Elem Field::inv(Elem a) const {
  if (a.is_zero()) throw std::domain_error("inverse of zero");
  return Elem{inv_[a.value]};
}

Elem Field::pow(Elem a, unsigned long long n) const {
  if (n == 0) return one();
  if (a.is_zero()) return zero();
  return exp(static_cast<unsigned long long>(log_[a.value]) * (n % (q_ - 1)));
}

unsigned Field::log(Elem a) const {
  if (a.is_zero()) throw std::domain_error("logarithm of zero");
  return log_[a.value];
}

bool Field::is_square(Elem a) const {
  if (p_ == 2 || a.is_zero()) return true;
  return log_[a.value] % 2 == 0;
}

}  // namespace segre
