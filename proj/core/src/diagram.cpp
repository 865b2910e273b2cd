#include "e8cat/diagram.hpp"

#include "e8cat/parallel.hpp"

#include <algorithm>
#include <sstream>

namespace e8cat {

namespace {

const std::vector<std::string> kChain = {"F4", "E6", "E7", "E8"};

struct OrbitAccum {
    std::string group;
    size_t a1 = 0, a2 = 0;
    E8GroupElem representative = E8GroupElem::identity();
    bool have_rep = false;
};

}  // namespace

OrbitDiagram build_orbit_diagram(const Classifier& cl, const std::string& which) {
    OrbitDiagram d;
    d.name = which;
    std::string apex;
    AntipodalSet a1, a2;
    if (which == "eix_orbits") {
        apex = "EIX_+";
        a1 = build_named_set("A1(EIX+)");
        a2 = build_named_set("A2(EIX+)");
    } else if (which == "eviii_orbits") {
        apex = "EVIII_+";
        a1 = build_named_set("A1(EVIII+)");
        a2 = build_named_set("A2(EVIII+)");
    } else {
        throw std::invalid_argument("build_orbit_diagram: unknown diagram " + which);
    }

    std::map<std::string, OrbitAccum> orbits;
    auto feed = [&](const AntipodalSet& s, bool first_family) {
        for (const auto& g : s.elements) {
            std::set<std::string> ids_of_elem;  // fix-orbits can repeat across groups
            for (const auto& group : kChain) {
                std::string id;
                try {
                    id = cl.classify(g, group).orbit_id;
                } catch (const NotNormalizing&) {
                    continue;  // no totally geodesic orbit under this group
                }
                OrbitAccum& acc = orbits[id];
                acc.group = group;
                if (ids_of_elem.insert(id).second) (first_family ? acc.a1 : acc.a2) += 1;
                if (!acc.have_rep) {
                    acc.representative = g;
                    acc.have_rep = true;
                }
            }
        }
    };
    feed(a1, true);
    feed(a2, false);

    for (const auto& [id, acc] : orbits) {
        d.nodes.push_back(OrbitNode{id, acc.group, acc.a1, acc.a2});
        // inclusion edges along the subgroup chain, through the representative
        auto chain_pos = std::find(kChain.begin(), kChain.end(), acc.group);
        if (chain_pos + 1 != kChain.end()) {
            const std::string& next = *(chain_pos + 1);
            try {
                std::string parent = cl.classify(acc.representative, next).orbit_id;
                if (parent != id) d.edges.insert({id, parent});
            } catch (const NotNormalizing&) {
            }
        }
    }
    (void)apex;
    return d;
}

OrbitDiagram build_inclusion_diagram(const Classifier& cl) {
    OrbitDiagram d;
    d.name = "inclusion";
    // label-level collapse of the two orbit diagrams
    std::set<std::string> labels;
    auto label_of = [](const std::string& orbit_id) -> std::string {
        if (orbit_id.rfind("fix", 0) == 0 || orbit_id.rfind("pole", 0) == 0 ||
            orbit_id == "identity")
            return "";
        std::string s = orbit_id.substr(0, orbit_id.find_first_of("_'"));
        return s;
    };
    for (const std::string& which : {"eix_orbits", "eviii_orbits"}) {
        OrbitDiagram od = build_orbit_diagram(cl, which);
        for (const auto& e : od.edges) {
            std::string from = label_of(e.first), to = label_of(e.second);
            if (from.empty() || to.empty() || from == to) continue;
            d.edges.insert({from, to});
            labels.insert(from);
            labels.insert(to);
        }
    }
    for (const std::string& l : labels) {
        if (l == "EIX" || l == "EVIII") d.edges.insert({l, "E8"});
        d.nodes.push_back(OrbitNode{l, "", 0, 0});
    }
    d.nodes.push_back(OrbitNode{"E8", "", 0, 0});
    return d;
}

std::string emit_dot(const OrbitDiagram& d) {
    std::ostringstream os;
    os << "digraph " << d.name << " {\n";
    os << "  rankdir=BT;\n";
    std::vector<OrbitNode> nodes = d.nodes;
    std::sort(nodes.begin(), nodes.end(),
              [](const OrbitNode& x, const OrbitNode& y) { return x.id < y.id; });
    for (const auto& n : nodes) {
        os << "  \"" << n.id << "\"";
        os << " [label=\"" << n.id;
        if (n.a1_count || n.a2_count)
            os << "\\nA1:" << n.a1_count << " A2:" << n.a2_count;
        os << "\"";
        if (n.a1_count || n.a2_count)
            os << ", a1=" << n.a1_count << ", a2=" << n.a2_count;
        os << "];\n";
    }
    for (const auto& [from, to] : d.edges)
        os << "  \"" << from << "\" -> \"" << to << "\";\n";
    os << "}\n";
    return os.str();
}

std::string emit_diagram(const Classifier& cl, const std::string& which) {
    if (which == "inclusion") return emit_dot(build_inclusion_diagram(cl));
    return emit_dot(build_orbit_diagram(cl, which));
}

}  // namespace e8cat
