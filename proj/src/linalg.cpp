#include "segre/linalg.hpp"

#include <utility>

namespace segre {

Elem mat2_det(const Field& f, const Mat2& m) {
  return f.sub(f.mul(m.a, m.d), f.mul(m.b, m.c));
}

Mat2 mat2_mul(const Field& f, const Mat2& x, const Mat2& y) {
  return {f.add(f.mul(x.a, y.a), f.mul(x.b, y.c)),
          f.add(f.mul(x.a, y.b), f.mul(x.b, y.d)),
          f.add(f.mul(x.c, y.a), f.mul(x.d, y.c)),
          f.add(f.mul(x.c, y.b), f.mul(x.d, y.d))};
}

Mat2 mat2_inverse(const Field& f, const Mat2& m) {
  const Elem det = mat2_det(f, m);
  if (det.is_zero()) throw std::domain_error("singular 2x2 matrix");
  const Elem s = f.inv(det);
  return {f.mul(s, m.d), f.mul(s, f.neg(m.b)), f.mul(s, f.neg(m.c)),
          f.mul(s, m.a)};
}

Vec2 mat2_apply(const Field& f, const Mat2& m, const Vec2& v) {
  return {f.add(f.mul(m.a, v[0]), f.mul(m.b, v[1])),
          f.add(f.mul(m.c, v[0]), f.mul(m.d, v[1]))};
}

int span_rank(const Field& f, std::span<const Vec8> vectors) {
  std::vector<Vec8> rows(vectors.begin(), vectors.end());
  int rank = 0;
  for (std::size_t col = 0; col < 8 && rank < static_cast<int>(rows.size()); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    const Elem s = f.inv(rows[rank][col]);
    for (Elem& x : rows[rank]) x = f.mul(s, x);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      const Elem factor = rows[r][col];
      if (factor.is_zero()) continue;
      for (std::size_t c = col; c < 8; ++c)
        rows[r][c] = f.sub(rows[r][c], f.mul(factor, rows[rank][c]));
    }
    ++rank;
  }
  return rank;
}

ProjectiveSpace::ProjectiveSpace(const Field& field, unsigned n)
    : field_(&field), n_(n) {
  if (n < 1 || n > 8)
    throw std::invalid_argument("projective dimension out of range");
  const std::uint64_t q = field.order();
  qpow_[0] = 1;
  for (unsigned i = 1; i <= 8; ++i) qpow_[i] = qpow_[i - 1] * q;
  size_ = (qpow_[n] - 1) / (q - 1);
}

std::uint64_t ProjectiveSpace::index_of(std::span<const Elem> v) const {
  const std::uint64_t q = field_->order();
  unsigned lead = 0;
  while (lead < n_ && v[lead].is_zero()) ++lead;
  if (lead == n_ || v[lead] != field_->one())
    throw std::invalid_argument("vector is not a normalized representative");
  std::uint64_t tail = 0;
  for (unsigned m = lead + 1; m < n_; ++m) tail = tail * q + v[m].value;
  return (qpow_[n_ - 1 - lead] - 1) / (q - 1) + tail;
}

void ProjectiveSpace::unrank(std::uint64_t index, std::span<Elem> out) const {
  if (index >= size_) throw std::out_of_range("point index out of range");
  const std::uint64_t q = field_->order();
  unsigned lead = n_ - 1;
  // Points with lead at j occupy [offset(j), offset(j) + q^(n-1-j)).
  while (index >= (qpow_[n_ - lead] - 1) / (q - 1)) --lead;
  std::uint64_t tail = index - (qpow_[n_ - 1 - lead] - 1) / (q - 1);
  for (unsigned m = 0; m < n_; ++m) out[m] = Elem{0};
  out[lead] = Elem{1};
  for (unsigned m = n_; m-- > lead + 1;) {
    out[m] = Elem{static_cast<unsigned>(tail % q)};
    tail /= q;
  }
}

void ProjectiveSpace::for_each(
    const std::function<void(std::uint64_t, std::span<const Elem>)>& visit) const {
  std::array<Elem, 8> v{};
  for (std::uint64_t i = 0; i < size_; ++i) {
    unrank(i, std::span<Elem>(v.data(), n_));
    visit(i, std::span<const Elem>(v.data(), n_));
  }
}

std::string format_coords(std::span<const Elem> v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i].value);
  }
  return out;
}

}  // namespace segre
