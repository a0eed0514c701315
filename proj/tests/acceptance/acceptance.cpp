// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff
// every criterion passes. All checks are exact.
//
//   acceptance                 run against the frozen golden reports
//   acceptance --write-golden  regenerate tests/golden/orbits_q*.json

#include <array>
#include <chrono>
#include <cmath>
#include <cstring>
#include <iomanip>
#include <memory>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "segre/orbits.hpp"
#include "segre/rank.hpp"
#include "segre/report.hpp"
#include "segre/variety.hpp"

using namespace segre;

namespace {

const std::vector<unsigned> kOrders = {2, 3, 4, 5};

// One field, variety and classification per q, computed once.
struct Space {
  Field field;
  Variety variety;
  Classification classes;

  explicit Space(unsigned q)
      : field(Field::of_order(q)), variety(field), classes(classify_space(variety)) {}
};

std::map<unsigned, std::unique_ptr<Space>>& spaces() {
  static std::map<unsigned, std::unique_ptr<Space>> cache;
  return cache;
}

const Space& space(unsigned q) {
  auto& slot = spaces()[q];
  if (!slot) slot = std::make_unique<Space>(q);
  return *slot;
}

std::string golden_path(unsigned q) {
  return std::string(SEGRE_GOLDEN_DIR) + "/orbits_q" + std::to_string(q) + ".json";
}

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

std::set<std::uint32_t> orbits_where(const Space& s, const std::function<bool(PointIndex)>& pred) {
  std::set<std::uint32_t> out;
  for (PointIndex i = 0; i < s.variety.space().size(); ++i)
    if (pred(i)) out.insert(s.classes.partition.orbit_of[i]);
  return out;
}

// 1. Five orbits on all points.
Outcome five_orbits() {
  Outcome o;
  for (unsigned q : kOrders) {
    const Space& s = space(q);
    const std::uint64_t expected = (static_cast<std::uint64_t>(std::pow(q, 8)) - 1) / (q - 1);
    if (s.classes.partition.orbit_of.size() != expected)
      o.fail("q=" + std::to_string(q) + ": partition does not cover PG(7,q)");
    if (s.classes.partition.count() != 5)
      o.fail("q=" + std::to_string(q) + ": " + std::to_string(s.classes.partition.count()) +
             " orbits");
  }
  return o;
}

// 2. Four orbits on singular points.
Outcome four_singular() {
  Outcome o;
  for (unsigned q : kOrders) {
    const Space& s = space(q);
    const auto singular =
        orbits_where(s, [&](PointIndex i) { return s.classes.profiles[i].singular; });
    if (singular.size() != 4)
      o.fail("q=" + std::to_string(q) + ": " + std::to_string(singular.size()) +
             " singular classes");
  }
  return o;
}

// 3. Label classes and BFS orbits induce the same partition.
Outcome classifier_matches() {
  Outcome o;
  for (unsigned q : kOrders) {
    const Space& s = space(q);
    std::map<std::uint32_t, OrbitLabel> label_of;
    std::map<OrbitLabel, std::uint32_t> orbit_of;
    for (PointIndex i = 0; i < s.variety.space().size(); ++i) {
      const auto id = s.classes.partition.orbit_of[i];
      const auto label = s.classes.profiles[i].label;
      if (label_of.emplace(id, label).first->second != label ||
          orbit_of.emplace(label, id).first->second != id) {
        o.fail("q=" + std::to_string(q) + ": point " + std::to_string(i) +
               " breaks the label/orbit bijection");
        break;
      }
    }
  }
  return o;
}

// 4. Fast rank = brute-force oracle rank on PG(7,2) and PG(7,3).
Outcome rank_oracle() {
  Outcome o;
  for (unsigned q : {2u, 3u}) {
    const Space& s = space(q);
    const RankSolver solver(s.variety);
    const RankOracle oracle(s.variety);
    for (PointIndex i = 0; i < s.variety.space().size(); ++i) {
      const Tensor222 t{s.variety.space().coords(i)};
      if (solver.rank(t) != oracle.rank(t)) {
        o.fail("q=" + std::to_string(q) + ": rank mismatch at point " + std::to_string(i));
        break;
      }
    }
  }
  return o;
}

// 5. Odd q: nonsingular iff the hyperdeterminant is a non-square.
Outcome hyperdeterminant_criterion() {
  Outcome o;
  for (unsigned q : {3u, 5u}) {
    const Space& s = space(q);
    const Field& f = s.field;
    for (PointIndex i = 0; i < s.variety.space().size(); ++i) {
      const Tensor222 t{s.variety.space().coords(i)};
      if (is_nonsingular(f, t) != !f.is_square(hyperdeterminant(f, t))) {
        o.fail("q=" + std::to_string(q) + ": criterion fails at point " + std::to_string(i));
        break;
      }
    }
  }
  return o;
}

// 6. At q = 2 a point is singular iff it lies in a plane spanned by three
// Segre points whose type has some entry <= 2.
Outcome singular_plane_criterion() {
  Outcome o;
  const Space& s = space(2);
  const Field& f = s.field;
  const Variety& v = s.variety;
  const PointSpace& pg = v.space();
  const auto pts = v.points();
  const auto tensors = v.tensors();

  std::vector<bool> covered(pg.size(), false);
  std::size_t triples = 0;
  std::size_t planes = 0;
  for (std::size_t a = 0; a < pts.size(); ++a)
    for (std::size_t b = a + 1; b < pts.size(); ++b)
      for (std::size_t c = b + 1; c < pts.size(); ++c) {
        ++triples;
        const std::array<Vec8, 3> span = {tensors[a].a, tensors[b].a, tensors[c].a};
        if (span_rank(f, span) != 3) continue;
        ++planes;
        const PlaneType type = plane_type(pts[a], pts[b], pts[c]);
        if (type.sorted().a[0] > 2) continue;
        // All 7 points of the plane over GF(2).
        for (unsigned mask = 1; mask < 8; ++mask) {
          Vec8 x{};
          for (int m = 0; m < 3; ++m)
            if (mask & (1u << m))
              for (int i = 0; i < 8; ++i) x[i] = f.add(x[i], span[m][i]);
          covered[pg.point(x).index] = true;
        }
      }
  if (triples != 2925) o.fail("expected 2925 Segre triples, saw " + std::to_string(triples));
  std::size_t singular = 0;
  for (PointIndex i = 0; i < pg.size(); ++i) {
    const bool is_singular = !is_nonsingular(f, Tensor222{pg.coords(i)});
    singular += is_singular;
    if (is_singular != covered[i]) {
      o.fail("point " + std::to_string(i) + " (" + format_coords(pg.coords(i)) +
             "): singular=" + (is_singular ? "yes" : "no") +
             " covered=" + (covered[i] ? "yes" : "no"));
      break;
    }
  }
  if (o.pass)
    o.detail = std::to_string(planes) + " planes, " + std::to_string(singular) +
               " singular points of 255";
  return o;
}

// 7. Every point of every shamrock has rank <= 2.
Outcome shamrock_rank_bound() {
  Outcome o;
  for (unsigned q : {2u, 3u}) {
    const Space& s = space(q);
    for (const SegrePoint& y : s.variety.points())
      for (PointIndex p : s.variety.shamrock(y).points)
        if (s.classes.profiles[p].rank > 2) {
          o.fail("q=" + std::to_string(q) + ": point " + std::to_string(p) + " has rank " +
                 std::to_string(s.classes.profiles[p].rank));
          return o;
        }
  }
  return o;
}

// 8. Rank, flattening multiset and singularity are preserved by every
// generator at every point, hence constant on orbits.
Outcome invariance() {
  Outcome o;
  for (unsigned q : kOrders) {
    const Space& s = space(q);
    const PointSpace& pg = s.variety.space();
    const auto gens = stabiliser_generators(s.field);
    for (PointIndex i = 0; i < pg.size() && o.pass; ++i) {
      const Tensor222 t{pg.coords(i)};
      for (const GroupElement& g : gens) {
        const PointIndex j = pg.point(act(s.field, g, t).a).index;
        if (!s.classes.profiles[i].same_invariants(s.classes.profiles[j])) {
          o.fail("q=" + std::to_string(q) + ": generator moves point " + std::to_string(i) +
                 " to " + std::to_string(j) + " with different invariants");
          break;
        }
      }
      const PointIndex leader =
          s.classes.partition.leaders[s.classes.partition.orbit_of[i]];
      if (!s.classes.profiles[i].same_invariants(s.classes.profiles[leader]))
        o.fail("q=" + std::to_string(q) + ": invariants vary on the orbit of " +
               std::to_string(i));
    }
  }
  return o;
}

// 9. The reports reproduce the frozen golden files byte for byte, with one
// and with several worker threads.
Outcome golden_files() {
  Outcome o;
  for (unsigned q : kOrders) {
    const Space& s = space(q);
    std::ifstream in(golden_path(q), std::ios::binary);
    if (!in) {
      o.fail("missing " + golden_path(q));
      continue;
    }
    std::stringstream golden;
    golden << in.rdbuf();
    const std::string cached = report_json(build_report(s.variety, s.classes));
    const std::string threaded = report_json(verify_theorems(s.variety, {4, false}));
    if (cached != golden.str()) o.fail("q=" + std::to_string(q) + ": report differs from golden");
    if (threaded != golden.str())
      o.fail("q=" + std::to_string(q) + ": 4-thread report differs from golden");
  }
  return o;
}

// 10. The nonsingular points form a single orbit.
Outcome nonsingular_transitive() {
  Outcome o;
  for (unsigned q : kOrders) {
    const Space& s = space(q);
    const auto o5 = orbits_where(
        s, [&](PointIndex i) { return s.classes.profiles[i].label == OrbitLabel::O5; });
    if (o5.size() != 1)
      o.fail("q=" + std::to_string(q) + ": O5 spans " + std::to_string(o5.size()) + " orbits");
  }
  return o;
}

int write_golden() {
  for (unsigned q : kOrders) {
    const Space& s = space(q);
    std::ofstream out(golden_path(q), std::ios::binary);
    out << report_json(build_report(s.variety, s.classes));
    std::cout << "wrote " << golden_path(q) << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1 && std::strcmp(argv[1], "--write-golden") == 0) return write_golden();

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1  five orbits on PG(7,q), q=2..5", five_orbits},
      {"2  four orbits on singular points, q=2..5", four_singular},
      {"3  classifier partition = group orbits, q=2..5", classifier_matches},
      {"4  tensor_rank = rank_oracle on PG(7,2), PG(7,3)", rank_oracle},
      {"5  nonsingular <=> hyperdeterminant non-square, q=3,5", hyperdeterminant_criterion},
      {"6  singular <=> on a plane of type with some a_i <= 2, q=2", singular_plane_criterion},
      {"7  shamrock points have rank <= 2, q=2,3", shamrock_rank_bound},
      {"8  invariants preserved by every generator, q=2..5", invariance},
      {"9  golden reports reproduced byte-identically, q=2..5", golden_files},
      {"10 nonsingular points form one orbit, q=2..5", nonsingular_transitive},
  };

  int failed = 0;
  for (const auto& [name, check] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    const Outcome outcome = check();
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (outcome.pass ? "PASS  " : "FAIL  ") << name;
    if (!outcome.detail.empty()) std::cout << "  [" << outcome.detail << "]";
    std::cout << "  (" << std::fixed << std::setprecision(2) << seconds << " s)\n";
    failed += !outcome.pass;
  }
  std::cout << (failed == 0 ? "all criteria passed\n"
                            : std::to_string(failed) + " criteria failed\n");
  return failed == 0 ? 0 : 1;
}
