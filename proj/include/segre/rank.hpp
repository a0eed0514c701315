#pragma once

// Tensor rank of 2x2x2 tensors: the least number of pure tensors whose
// linear combination is the tensor. Equal to the rank of the projective
// point, since rescaling does not change it.

#include <cstddef>
#include <optional>
#include <vector>

#include "segre/tensor.hpp"
#include "segre/variety.hpp"

namespace segre {

// Rank of a tensor: 0 for the zero tensor, otherwise 1, 2 or 3.
using RankValue = int;

// Rank by peeling one pure tensor: t has rank <= 2 iff t - c s is pure for
// some Segre point s and nonzero scalar c. Anything else is reported as 3.
class RankSolver {
 public:
  explicit RankSolver(const Variety& variety) : variety_(&variety) {}

  RankValue rank(const Tensor222& t) const;

 private:
  const Variety* variety_;
};

// One term c * s of a decomposition, s indexing Variety::points().
struct RankTerm {
  Elem coefficient;
  std::size_t segre_index = 0;
};

// Exhaustive search over unordered pairs and triples of Segre points with
// every nonzero coefficient combination. Purity is never tested: the pure
// tensors are looked up in a table of all nonzero multiples of the
// embedded products, so this shares no code path with RankSolver.
//
// The table has q^8 entries; construction rejects q > 3.
class RankOracle {
 public:
  static constexpr unsigned kMaxOrder = 3;

  explicit RankOracle(const Variety& variety);

  // Shortest decomposition with at most three terms, if any.
  std::optional<std::vector<RankTerm>> decompose(const Tensor222& t) const;
  // Throws std::runtime_error if no decomposition with <= 3 terms exists.
  RankValue rank(const Tensor222& t) const;

 private:
  static constexpr std::int32_t kAbsent = -1;

  std::size_t key(const Tensor222& t) const;

  const Variety* variety_;
  // key(c * s) -> (segre index, encoded c); kAbsent when not a multiple.
  std::vector<std::int32_t> multiple_of_;
  std::vector<std::uint8_t> coefficient_;
};

}  // namespace segre
