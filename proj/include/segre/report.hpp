#pragma once

// Machine-readable output of orbit classifications. The JSON body carries
// no timing or host data, so identical inputs give identical bytes.

#include <ostream>
#include <string>

#include "json.hpp"
#include "segre/orbits.hpp"

namespace segre {

nlohmann::ordered_json to_json(const OrbitReport& report);
// Two-space indented JSON with a trailing newline.
std::string report_json(const OrbitReport& report);

// Header plus one row per point:
// index,coords,rank,singular,label,orbit_id with coords quoted.
void write_csv(std::ostream& out, const Variety& variety, const Classification& classes);

}  // namespace segre
