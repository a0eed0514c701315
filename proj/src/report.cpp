#include "segre/report.hpp"

namespace segre {

namespace {

nlohmann::ordered_json coords_json(const Vec8& v) {
  auto arr = nlohmann::ordered_json::array();
  for (Elem x : v) arr.push_back(x.value);
  return arr;
}

}  // namespace

nlohmann::ordered_json to_json(const OrbitReport& report) {
  nlohmann::ordered_json j;
  j["q"] = report.q;
  j["points"] = report.points;
  auto orbits = nlohmann::ordered_json::array();
  for (const OrbitSummary& s : report.orbits) {
    nlohmann::ordered_json o;
    o["label"] = std::string(to_string(s.label));
    o["size"] = s.size;
    o["representative"] = coords_json(s.representative.coords);
    o["rank"] = s.rank;
    o["flattening_ranks"] = s.flattening;
    o["singular"] = s.singular;
    orbits.push_back(std::move(o));
  }
  j["orbits"] = std::move(orbits);
  j["verified"] = {{"five_orbits", report.five_orbits},
                   {"four_singular", report.four_singular},
                   {"classifier_matches", report.classifier_matches},
                   {"invariants_constant", report.invariants_constant}};
  if (!report.failures.empty()) j["failures"] = report.failures;
  return j;
}

std::string report_json(const OrbitReport& report) { return to_json(report).dump(2) + "\n"; }

void write_csv(std::ostream& out, const Variety& variety, const Classification& classes) {
  const PointSpace& space = variety.space();
  out << "index,coords,rank,singular,label,orbit_id\n";
  for (PointIndex i = 0; i < space.size(); ++i) {
    const PointProfile& p = classes.profiles[i];
    out << i << ",\"" << format_coords(space.coords(i)) << "\"," << p.rank << ','
        << (p.singular ? "true" : "false") << ',' << to_string(p.label) << ','
        << classes.partition.orbit_of[i] << '\n';
  }
}

}  // namespace segre
