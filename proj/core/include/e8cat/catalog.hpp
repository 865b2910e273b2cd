#pragma once

#include "e8cat/classify.hpp"
#include "e8cat/group_elem.hpp"

#include <map>
#include <string>
#include <vector>

namespace e8cat {

struct UnknownName : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Named antipodal set from the catalog, with its expected cardinality and
/// the ambient symmetric space it lives in.
struct AntipodalSet {
    std::string name;
    std::string ambient;
    size_t expected_cardinality = 0;
    std::vector<E8GroupElem> elements;

    size_t size() const { return elements.size(); }
};

/// Stable identifiers of all catalog sets.
const std::vector<std::string>& catalog_names();

AntipodalSet build_named_set(const std::string& name);

struct AntipodalSetReport {
    std::string name;
    size_t cardinality = 0;
    size_t expected = 0;
    bool all_involutive = false;    // involutions, or identity where allowed
    bool pairwise_distinct = false;
    bool pairwise_antipodal = false;
    bool ok() const {
        return cardinality == expected && all_involutive && pairwise_distinct &&
               pairwise_antipodal;
    }
};
AntipodalSetReport check_antipodal_set(const AntipodalSet& s);

/// Elements of s whose H-conjugation orbit is `orbit_id`.
AntipodalSet intersect_with_orbit(const Classifier& cl, const AntipodalSet& s,
                                  const std::string& group, const std::string& orbit_id);

/// Closure of a set under the group law (all elements must share an
/// encoding); used for the "A_1(EIX_+) generates A_1(E8)" check.
std::vector<E8GroupElem> subgroup_closure(const std::vector<E8GroupElem>& gens);

/// Split of A_1(EVI_+) minus the pole of tau_alphabar by the polars of
/// tau_alphabar inside EVI_+; the oriented-Grassmannian part must have the
/// classical cardinality 30.
struct EviPolarSplit {
    size_t pole = 0;
    size_t grassmannian = 0;   // dim F | su2(alphabar) = 3, | spin_alpha_12 = 34
    size_t s2_diii = 0;        // dim F | su2(alphabar) = 1, | spin_alpha_12 = 36
    size_t unexpected = 0;
};
EviPolarSplit evi_polar_split(const Classifier& cl, const AntipodalSet& a_evi);

}  // namespace e8cat
