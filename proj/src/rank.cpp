#include "segre/rank.hpp"

#include <stdexcept>
#include <string>

namespace segre {

RankValue RankSolver::rank(const Tensor222& t) const {
  if (t.is_zero()) return 0;
  const Field& f = variety_->field();
  if (is_pure(f, t)) return 1;
  const auto scalars = f.nonzero_elements();
  for (const Tensor222& s : variety_->tensors())
    for (Elem c : scalars)
      if (is_pure(f, sub_scaled(f, t, c, s))) return 2;
  return 3;
}

RankOracle::RankOracle(const Variety& variety) : variety_(&variety) {
  const Field& f = variety.field();
  if (f.order() > kMaxOrder)
    throw std::invalid_argument("rank oracle is limited to q <= " +
                                std::to_string(kMaxOrder));
  std::size_t entries = 1;
  for (int i = 0; i < 8; ++i) entries *= f.order();
  multiple_of_.assign(entries, kAbsent);
  coefficient_.assign(entries, 0);

  const auto tensors = variety.tensors();
  for (std::size_t s = 0; s < tensors.size(); ++s)
    for (Elem c : f.nonzero_elements()) {
      Tensor222 m;
      for (std::size_t i = 0; i < 8; ++i) m.a[i] = f.mul(c, tensors[s].a[i]);
      const std::size_t k = key(m);
      if (multiple_of_[k] != kAbsent)
        throw std::logic_error("Segre points with proportional tensors");
      multiple_of_[k] = static_cast<std::int32_t>(s);
      coefficient_[k] = c.value;
    }
}

std::size_t RankOracle::key(const Tensor222& t) const {
  std::size_t k = 0;
  for (Elem x : t.a) k = k * variety_->field().order() + x.value;
  return k;
}

std::optional<std::vector<RankTerm>> RankOracle::decompose(const Tensor222& t) const {
  using Terms = std::vector<RankTerm>;
  if (t.is_zero()) return Terms{};

  const Field& f = variety_->field();
  const auto tensors = variety_->tensors();
  const auto scalars = f.nonzero_elements();
  const std::size_t n = tensors.size();

  // A residual that is c * s for some s outside the excluded indices.
  const auto last_term = [&](const Tensor222& r, std::size_t a,
                             std::size_t b) -> std::optional<RankTerm> {
    const std::int32_t s = multiple_of_[key(r)];
    if (s == kAbsent) return std::nullopt;
    const auto idx = static_cast<std::size_t>(s);
    if (idx == a || idx == b) return std::nullopt;
    return RankTerm{Elem{coefficient_[key(r)]}, idx};
  };

  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  if (auto term = last_term(t, kNone, kNone)) return Terms{*term};

  for (std::size_t a = 0; a < n; ++a)
    for (Elem ca : scalars) {
      const Tensor222 r = sub_scaled(f, t, ca, tensors[a]);
      if (auto term = last_term(r, a, kNone)) return Terms{{ca, a}, *term};
    }

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (Elem ca : scalars) {
        const Tensor222 ra = sub_scaled(f, t, ca, tensors[a]);
        for (Elem cb : scalars) {
          const Tensor222 r = sub_scaled(f, ra, cb, tensors[b]);
          if (auto term = last_term(r, a, b)) return Terms{{ca, a}, {cb, b}, *term};
        }
      }
  return std::nullopt;
}

RankValue RankOracle::rank(const Tensor222& t) const {
  const auto terms = decompose(t);
  if (!terms) throw std::runtime_error("no decomposition into at most 3 pure tensors");
  return static_cast<RankValue>(terms->size());
}

}  // namespace segre
