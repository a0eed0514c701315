#include "segre/orbits.hpp"

#include <algorithm>
#include <map>
#include <thread>

namespace segre {

namespace {

// Applies m to the given factor of t.
Tensor222 apply_on_factor(const Field& f, const Mat2& m, int pos, const Tensor222& t) {
  if (m == Mat2::identity()) return t;
  Tensor222 r;
  int idx[3];
  for (idx[0] = 0; idx[0] < 2; ++idx[0])
    for (idx[1] = 0; idx[1] < 2; ++idx[1])
      for (idx[2] = 0; idx[2] < 2; ++idx[2]) {
        int lo[3] = {idx[0], idx[1], idx[2]};
        int hi[3] = {idx[0], idx[1], idx[2]};
        lo[pos] = 0;
        hi[pos] = 1;
        const Elem x0 = t(lo[0], lo[1], lo[2]);
        const Elem x1 = t(hi[0], hi[1], hi[2]);
        const Elem y = idx[pos] == 0 ? f.add(f.mul(m.a, x0), f.mul(m.b, x1))
                                     : f.add(f.mul(m.c, x0), f.mul(m.d, x1));
        r(idx[0], idx[1], idx[2]) = y;
      }
  return r;
}

Tensor222 permute_factors(const std::array<std::uint8_t, 3>& perm, const Tensor222& t) {
  if (perm[0] == 0 && perm[1] == 1 && perm[2] == 2) return t;
  Tensor222 r;
  int src[3];
  for (src[0] = 0; src[0] < 2; ++src[0])
    for (src[1] = 0; src[1] < 2; ++src[1])
      for (src[2] = 0; src[2] < 2; ++src[2]) {
        int dst[3];
        for (int m = 0; m < 3; ++m) dst[perm[m]] = src[m];
        r(dst[0], dst[1], dst[2]) = t(src[0], src[1], src[2]);
      }
  return r;
}

std::size_t mat_key(const Mat2& m, unsigned q) {
  return ((static_cast<std::size_t>(m.a.value) * q + m.b.value) * q + m.c.value) * q +
         m.d.value;
}

template <class Fn>
void parallel_for(std::size_t n, unsigned threads, Fn&& body) {
  threads = std::max(1u, threads);
  if (threads == 1 || n < 2 * threads) {
    body(std::size_t{0}, n);
    return;
  }
  std::vector<std::jthread> pool;
  const std::size_t chunk = (n + threads - 1) / threads;
  for (unsigned w = 0; w < threads; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(n, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&body, begin, end] { body(begin, end); });
  }
}

std::string describe(const Variety& v, PointIndex p) {
  return "point " + std::to_string(p) + " (" + format_coords(v.space().coords(p)) + ")";
}

}  // namespace

GroupElement compose(const Field& f, const GroupElement& e, const GroupElement& g) {
  GroupElement r;
  std::array<std::uint8_t, 3> inv{};
  for (std::uint8_t m = 0; m < 3; ++m) inv[e.perm[m]] = m;
  for (int i = 0; i < 3; ++i) r.g[i] = mat2_mul(f, e.g[i], g.g[inv[i]]);
  for (int m = 0; m < 3; ++m) r.perm[m] = e.perm[g.perm[m]];
  return r;
}

Tensor222 act(const Field& f, const GroupElement& e, const Tensor222& t) {
  Tensor222 r = permute_factors(e.perm, t);
  for (int pos = 0; pos < 3; ++pos) r = apply_on_factor(f, e.g[pos], pos, r);
  return r;
}

std::size_t gl2_order(const Field& f) {
  const std::size_t q = f.order();
  return (q * q - 1) * (q * q - q);
}

std::size_t matrix_closure_size(const Field& f, std::span<const Mat2> generators) {
  const unsigned q = f.order();
  std::vector<bool> seen(static_cast<std::size_t>(q) * q * q * q, false);
  std::vector<Mat2> stack;
  for (const Mat2& g : generators)
    if (!seen[mat_key(g, q)]) {
      seen[mat_key(g, q)] = true;
      stack.push_back(g);
    }
  std::size_t count = stack.size();
  while (!stack.empty()) {
    const Mat2 m = stack.back();
    stack.pop_back();
    for (const Mat2& g : generators) {
      const Mat2 p = mat2_mul(f, m, g);
      if (!seen[mat_key(p, q)]) {
        seen[mat_key(p, q)] = true;
        stack.push_back(p);
        ++count;
      }
    }
  }
  return count;
}

std::vector<Mat2> gl2_generators(const Field& f) {
  std::vector<Mat2> gens = {
      {f.one(), f.one(), f.zero(), f.one()},
      {f.primitive(), f.zero(), f.zero(), f.one()},
      {f.zero(), f.one(), f.one(), f.zero()},
  };
  if (matrix_closure_size(f, gens) != gl2_order(f))
    throw std::logic_error("GL(2,q) generators do not generate the group");
  return gens;
}

std::vector<GroupElement> stabiliser_generators(const Field& f) {
  std::vector<GroupElement> gens;
  for (int pos = 0; pos < 3; ++pos)
    for (const Mat2& m : gl2_generators(f)) {
      GroupElement e;
      e.g[pos] = m;
      gens.push_back(e);
    }
  GroupElement swap12;
  swap12.perm = {1, 0, 2};
  gens.push_back(swap12);
  GroupElement cycle;
  cycle.perm = {1, 2, 0};
  gens.push_back(cycle);
  return gens;
}

std::string_view to_string(OrbitLabel label) {
  switch (label) {
    case OrbitLabel::O1:
      return "O1";
    case OrbitLabel::O2:
      return "O2";
    case OrbitLabel::O3:
      return "O3";
    case OrbitLabel::O4:
      return "O4";
    case OrbitLabel::O5:
      return "O5";
  }
  return "?";
}

PointProfile profile_point(const Variety& variety, const RankSolver& solver,
                           const Tensor222& t) {
  if (t.is_zero()) throw std::invalid_argument("zero tensor has no orbit");
  const Field& f = variety.field();
  PointProfile p;
  p.flattening = flattening_ranks(f, t);
  std::sort(p.flattening.begin(), p.flattening.end());
  p.singular = !is_nonsingular(f, t);
  p.rank = solver.rank(t);
  if (!p.singular)
    p.label = OrbitLabel::O5;
  else if (p.rank == 1)
    p.label = OrbitLabel::O1;
  else if (p.rank == 2)
    p.label = p.flattening[0] == 1 ? OrbitLabel::O2 : OrbitLabel::O3;
  else
    p.label = OrbitLabel::O4;
  return p;
}

OrbitLabel classify_point(const Variety& variety, const RankSolver& solver,
                          const Tensor222& t) {
  return profile_point(variety, solver, t).label;
}

void check_envelope(const Field& f, const RunOptions& options) {
  if (f.order() > RunOptions::kMaxVerifiedOrder && !options.allow_large)
    throw ResourceGuardError("q = " + std::to_string(f.order()) +
                             " exceeds the whole-space limit q <= " +
                             std::to_string(RunOptions::kMaxVerifiedOrder));
}

Partition orbit_partition(const Variety& variety, const RunOptions& options) {
  check_envelope(variety.field(), options);
  const Field& f = variety.field();
  const PointSpace& space = variety.space();
  const auto gens = stabiliser_generators(f);
  constexpr std::uint32_t kUnassigned = static_cast<std::uint32_t>(-1);

  Partition part;
  part.orbit_of.assign(space.size(), kUnassigned);
  std::vector<PointIndex> stack;
  for (PointIndex start = 0; start < space.size(); ++start) {
    if (part.orbit_of[start] != kUnassigned) continue;
    const auto id = static_cast<std::uint32_t>(part.leaders.size());
    part.leaders.push_back(start);
    part.orbit_of[start] = id;
    stack.push_back(start);
    while (!stack.empty()) {
      const Tensor222 t{space.coords(stack.back())};
      stack.pop_back();
      for (const GroupElement& g : gens) {
        const PointIndex image = space.point(act(f, g, t).a).index;
        if (part.orbit_of[image] == kUnassigned) {
          part.orbit_of[image] = id;
          stack.push_back(image);
        }
      }
    }
  }
  return part;
}

std::vector<PointProfile> profile_space(const Variety& variety, const RunOptions& options) {
  check_envelope(variety.field(), options);
  const PointSpace& space = variety.space();
  const RankSolver solver(variety);
  std::vector<PointProfile> profiles(space.size());
  parallel_for(space.size(), options.threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i)
      profiles[i] = profile_point(variety, solver,
                                  Tensor222{space.coords(static_cast<PointIndex>(i))});
  });
  return profiles;
}

Classification classify_space(const Variety& variety, const RunOptions& options) {
  return {orbit_partition(variety, options), profile_space(variety, options)};
}

OrbitReport build_report(const Variety& variety, const Classification& classes) {
  const Partition& part = classes.partition;
  const auto& profiles = classes.profiles;
  const PointSpace& space = variety.space();

  OrbitReport report;
  report.q = variety.field().order();
  report.points = space.size();

  for (std::uint32_t id = 0; id < part.count(); ++id) {
    const PointIndex leader = part.leaders[id];
    const PointProfile& p = profiles[leader];
    OrbitSummary s;
    s.id = id;
    s.label = p.label;
    s.representative = {space.coords(leader), leader};
    s.rank = p.rank;
    s.flattening = p.flattening;
    s.singular = p.singular;
    report.orbits.push_back(s);
  }

  bool matches = true;
  bool constant = true;
  std::map<OrbitLabel, std::uint32_t> orbit_of_label;
  for (PointIndex i = 0; i < space.size(); ++i) {
    const std::uint32_t id = part.orbit_of[i];
    OrbitSummary& s = report.orbits[id];
    ++s.size;
    const PointProfile& p = profiles[i];
    if (!p.same_invariants(profiles[s.representative.index]) && constant) {
      constant = false;
      report.failures.push_back(describe(variety, i) + " differs in rank, flattening "
                                "ranks or singularity from orbit " + std::to_string(id));
    }
    if (p.label != s.label && matches) {
      matches = false;
      report.failures.push_back(describe(variety, i) + " is labelled " +
                                std::string(to_string(p.label)) + " but lies in orbit " +
                                std::to_string(id) + " labelled " +
                                std::string(to_string(s.label)));
    }
    const auto [it, inserted] = orbit_of_label.emplace(p.label, id);
    if (!inserted && it->second != id && matches) {
      matches = false;
      report.failures.push_back(describe(variety, i) + " has label " +
                                std::string(to_string(p.label)) +
                                " which is split over orbits " +
                                std::to_string(it->second) + " and " + std::to_string(id));
    }
  }

  std::size_t singular_orbits = 0;
  for (const OrbitSummary& s : report.orbits)
    if (s.singular) ++singular_orbits;

  report.five_orbits = part.count() == 5;
  report.four_singular = constant && singular_orbits == 4;
  report.classifier_matches = matches;
  report.invariants_constant = constant;
  if (!report.five_orbits)
    report.failures.push_back("found " + std::to_string(part.count()) +
                              " orbits instead of 5");
  if (constant && singular_orbits != 4)
    report.failures.push_back("found " + std::to_string(singular_orbits) +
                              " singular orbits instead of 4");
  return report;
}

OrbitReport verify_theorems(const Variety& variety, const RunOptions& options) {
  return build_report(variety, classify_space(variety, options));
}

}  // namespace segre
