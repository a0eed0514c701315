#pragma once

// The stabiliser G_X of the Segre variety, generated by GL(2,q) acting on
// each factor and the permutations of the three factors, and its orbits
// on the points of PG(7, q).

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "segre/field.hpp"
#include "segre/linalg.hpp"
#include "segre/rank.hpp"
#include "segre/tensor.hpp"
#include "segre/variety.hpp"

namespace segre {

// g_1 (x) g_2 (x) g_3 composed after a permutation of the factors.
// perm[m] is the position that factor m moves to.
struct GroupElement {
  std::array<Mat2, 3> g = {Mat2::identity(), Mat2::identity(), Mat2::identity()};
  std::array<std::uint8_t, 3> perm = {0, 1, 2};

  static GroupElement identity() { return {}; }
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

// The element acting as e after f.
GroupElement compose(const Field& f, const GroupElement& e, const GroupElement& g);
Tensor222 act(const Field& f, const GroupElement& e, const Tensor222& t);

// [[1,1],[0,1]], diag(primitive, 1) and [[0,1],[1,0]]. Throws
// std::logic_error if they fail to generate GL(2,q).
std::vector<Mat2> gl2_generators(const Field& f);
// Size of the multiplicative closure of a set of invertible matrices.
std::size_t matrix_closure_size(const Field& f, std::span<const Mat2> generators);
std::size_t gl2_order(const Field& f);

// The lifted GL(2,q) generators on each factor, then the transposition of
// the first two factors and the 3-cycle 1 -> 2 -> 3 -> 1.
std::vector<GroupElement> stabiliser_generators(const Field& f);

enum class OrbitLabel : std::uint8_t { O1 = 1, O2, O3, O4, O5 };
std::string_view to_string(OrbitLabel label);

struct PointProfile {
  RankValue rank = 0;
  std::array<int, 3> flattening{};  // sorted ascending
  bool singular = true;
  OrbitLabel label = OrbitLabel::O1;

  // Everything except the label.
  bool same_invariants(const PointProfile& other) const {
    return rank == other.rank && flattening == other.flattening &&
           singular == other.singular;
  }
};

// Throws std::invalid_argument for the zero tensor.
PointProfile profile_point(const Variety& variety, const RankSolver& solver,
                           const Tensor222& t);
OrbitLabel classify_point(const Variety& variety, const RankSolver& solver,
                          const Tensor222& t);

class ResourceGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunOptions {
  static constexpr unsigned kMaxVerifiedOrder = 7;

  unsigned threads = 1;
  bool allow_large = false;
};

// Throws ResourceGuardError when q exceeds the verified envelope and
// allow_large is not set.
void check_envelope(const Field& f, const RunOptions& options);

struct Partition {
  std::vector<std::uint32_t> orbit_of;  // point index -> orbit id
  std::vector<PointIndex> leaders;      // least point of each orbit

  std::size_t count() const { return leaders.size(); }
};

// Closure of every point under stabiliser_generators(). Orbit ids follow
// the order of the least point index in each orbit.
Partition orbit_partition(const Variety& variety, const RunOptions& options = {});

// profile_point for every point of PG(7, q), indexed by point.
std::vector<PointProfile> profile_space(const Variety& variety,
                                        const RunOptions& options = {});

struct Classification {
  Partition partition;
  std::vector<PointProfile> profiles;
};

Classification classify_space(const Variety& variety, const RunOptions& options = {});

struct OrbitSummary {
  std::uint32_t id = 0;
  OrbitLabel label = OrbitLabel::O1;
  std::uint64_t size = 0;
  ProjPoint representative;
  RankValue rank = 0;
  std::array<int, 3> flattening{};
  bool singular = true;
};

struct OrbitReport {
  unsigned q = 0;
  std::uint64_t points = 0;
  std::vector<OrbitSummary> orbits;

  bool five_orbits = false;
  bool four_singular = false;
  bool classifier_matches = false;
  bool invariants_constant = false;
  // One line per failed check, naming a witness point.
  std::vector<std::string> failures;

  bool verified() const {
    return five_orbits && four_singular && classifier_matches && invariants_constant;
  }
};

OrbitReport build_report(const Variety& variety, const Classification& classes);
OrbitReport verify_theorems(const Variety& variety, const RunOptions& options = {});

}  // namespace segre
