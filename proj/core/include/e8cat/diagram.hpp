#pragma once

#include "e8cat/catalog.hpp"

#include <map>
#include <set>
#include <string>

namespace e8cat {

/// Node of an orbit diagram: a conjugate orbit inside EIX_+ or EVIII_+, with
/// the cardinalities of its intersections with the two maximal antipodal
/// sets as attributes.
struct OrbitNode {
    std::string id;       // orbit id, e.g. "EII_+", "EV_2", "fix(psi(...))"
    std::string group;    // F4 | E6 | E7 | E8
    size_t a1_count = 0;
    size_t a2_count = 0;
};

/// Orbit diagram data: nodes plus the inclusion edges computed from
/// representatives (an H1-orbit lies in an H2-orbit iff the representative's
/// H2-orbit is that orbit, for H1 inside H2).
struct OrbitDiagram {
    std::string name;
    std::vector<OrbitNode> nodes;
    std::set<std::pair<std::string, std::string>> edges;  // (from, to): from included in to
};

OrbitDiagram build_orbit_diagram(const Classifier& cl, const std::string& which);  // eix_orbits | eviii_orbits

/// Label-level inclusion diagram: 11 symmetric-space types plus the E8 apex;
/// the edge set is the label collapse of the computed orbit inclusions.
OrbitDiagram build_inclusion_diagram(const Classifier& cl);

std::string emit_dot(const OrbitDiagram& d);

/// Entry point matching the CLI surface.
std::string emit_diagram(const Classifier& cl, const std::string& which);

}  // namespace e8cat
