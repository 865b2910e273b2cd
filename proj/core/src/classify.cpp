#include "e8cat/classify.hpp"

#include "e8cat/parallel.hpp"

#include <sstream>

namespace e8cat {

namespace {

struct GroupTables {
    std::string subalgebra;       // fixed-space carrier of H
    std::string sig_subalgebra;   // defining subalgebra U with H = C(U)_o
    size_t dim;
    std::map<size_t, std::string> label_by_dim;
};

const GroupTables& tables_for(const std::string& group) {
    static const std::map<std::string, GroupTables> t = {
        {"E7",
         {"e7_alpha", "su2_alpha", 133,
          {{133, "pole"}, {63, "EV"}, {69, "EVI"}, {79, "EVII"}}}},
        {"E6",
         {"e6_alphabeta", "su3_alphabeta", 78,
          {{78, "fix"}, {36, "EI"}, {38, "EII"}, {46, "EIII"}, {52, "EIV"}}}},
        {"F4", {"f4", "g2", 52, {{52, "fix"}, {24, "FI"}, {36, "FII"}}}},
    };
    auto it = t.find(group);
    if (it == t.end()) throw std::invalid_argument("classify: unknown group " + group);
    return it->second;
}

// Reference elements naming the conjugate orbits seen by the catalog.
std::vector<std::pair<std::string, E8GroupElem>> reference_elements(const std::string& group) {
    std::vector<std::pair<std::string, E8GroupElem>> refs;
    if (group == "E7") {
        refs.emplace_back("EVI_+", E8GroupElem::psi(1, 0, 0, 0, 0, 0));
        refs.emplace_back("EVI'_+", E8GroupElem::psi(1, 0, 0, 1, 0, 0));
        for (int i = 1; i <= 3; ++i) {
            refs.emplace_back("EVII_" + std::to_string(i),
                              E8GroupElem::psi(0, 0, 0, 2 * i, 0, 0));
            refs.emplace_back("EV_" + std::to_string(i),
                              E8GroupElem::psi(1, 0, 0, 2 * i, 0, 0));
        }
    } else if (group == "E6") {
        refs.emplace_back("EII_+", E8GroupElem::psi(1, 0, 0, 0, 0, 0));
        refs.emplace_back("EIII_+", E8GroupElem::phi_minus_one());
        for (int i = 1; i <= 3; ++i) {
            refs.emplace_back("EII_" + std::to_string(i), E8GroupElem::psi(1, 0, 0, i, 0, 0));
            refs.emplace_back("EIII_" + std::to_string(i), E8GroupElem::psi(0, 0, 0, i, 1, 0));
        }
        for (int j = 4; j <= 7; ++j) {
            refs.emplace_back("EIV_" + std::to_string(j), E8GroupElem::psi(0, 0, 0, j, 0, 0));
            refs.emplace_back("EI_" + std::to_string(j), E8GroupElem::psi(1, 0, 0, j, 0, 0));
        }
    } else if (group == "F4") {
        refs.emplace_back("FI_+", E8GroupElem::psi(1, 0, 0, 0, 0, 0));
        refs.emplace_back("FII_+", E8GroupElem::phi_minus_one());
        for (int i = 1; i <= 7; ++i) {
            refs.emplace_back("FI_" + std::to_string(i), E8GroupElem::psi(1, 0, 0, i, 0, 0));
            refs.emplace_back("FII_" + std::to_string(i), E8GroupElem::psi(0, 0, 0, i, 1, 0));
        }
    }
    return refs;
}

}  // namespace

namespace {

ExactMatrix restrict_or_throw(const ExactMatrix& adjoint, const std::string& subalgebra) {
    const auto& sub = E8Algebra::instance().subalgebra(subalgebra);
    try {
        return restrict_to_subspace(adjoint, *sub.solver);
    } catch (const NotInvariant&) {
        throw NotNormalizing("adjoint does not normalize " + subalgebra);
    }
}

}  // namespace

size_t Classifier::ambient_dplus(const E8GroupElem& g) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = ambient_cache_.find(g.key());
        if (it != ambient_cache_.end()) return it->second;
    }
    if (!g.is_involution() && !g.is_identity())
        throw GroupNotInvolution("ambient_dplus: element is not an involution");
    size_t d = fixed_dim_plus(g.adjoint_matrix());
    std::lock_guard<std::mutex> lock(mu_);
    ambient_cache_[g.key()] = d;
    return d;
}

ExactMatrix Classifier::restrict_adjoint(const E8GroupElem& g,
                                         const std::string& subalgebra) const {
    try {
        return restrict_or_throw(g.adjoint_matrix(), subalgebra);
    } catch (NotNormalizing&) {
        throw NotNormalizing("Ad(" + g.display() + ") does not normalize " + subalgebra);
    }
}

size_t Classifier::fixed_dim_in(const E8GroupElem& g, const std::string& subalgebra) const {
    return fixed_dim_plus(restrict_adjoint(g, subalgebra));
}

std::string Classifier::signature_of(const ExactMatrix& adjoint, const std::string& sub) {
    ExactMatrix m = restrict_or_throw(adjoint, sub);
    std::ostringstream os;
    for (size_t r = 0; r < m.rows(); ++r)
        for (size_t c = 0; c < m.cols(); ++c) {
            const ExactScalar& v = m.at(r, c);
            if (!v.is_zero()) os << r << "," << c << ":" << v.str() << ";";
        }
    return os.str();
}

const std::map<std::string, std::string>& Classifier::reference_signatures(
    const std::string& group) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = ref_cache_.find(group);
        if (it != ref_cache_.end()) return it->second;
    }
    const GroupTables& t = tables_for(group);
    std::map<std::string, std::string> sig_to_name;
    for (const auto& [name, elem] : reference_elements(group)) {
        // key by (type label, restriction class); orbits of different types
        // can share the restriction class (e.g. EV_i and EVII_i differ only
        // in the first psi slot, invisible to su2_alpha)
        std::string label = name.substr(0, name.find_first_of("_'"));
        std::string tag;
        if (label == "EVI" && group == "E7") {
            // EVI_+ vs EVI'_+ need the e8-level dimension as part of the key
            tag = "@" + std::to_string(ambient_dplus(elem));
        }
        auto [it2, inserted] = sig_to_name.emplace(
            label + "|" + signature_of(elem.adjoint_matrix(), t.sig_subalgebra) + tag, name);
        if (!inserted)
            throw std::logic_error("reference orbits " + it2->second + " and " + name +
                                   " share a restriction class");
    }
    std::lock_guard<std::mutex> lock(mu_);
    return ref_cache_.emplace(group, std::move(sig_to_name)).first->second;
}

OrbitInfo Classifier::classify(const E8GroupElem& g, const std::string& group) const {
    const std::string cache_key = group + "#" + g.key();
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = classify_cache_.find(cache_key);
        if (it != classify_cache_.end()) return it->second;
    }
    OrbitInfo info;
    info.group = group;
    info.ambient_dplus = ambient_dplus(g);
    if (group == "E8") {
        info.restricted_dplus = info.ambient_dplus;
        switch (info.ambient_dplus) {
            case 248: info.label = "identity"; break;
            case 136: info.label = "EIX"; break;
            case 120: info.label = "EVIII"; break;
            default:
                throw UnclassifiedInvolution("unexpected e8 fixed dimension " +
                                             std::to_string(info.ambient_dplus));
        }
        info.orbit_id = info.label == "identity" ? "identity" : info.label + "_+";
        std::lock_guard<std::mutex> lock(mu_);
        classify_cache_.emplace(cache_key, info);
        return info;
    }
    const GroupTables& t = tables_for(group);
    ExactMatrix adjoint = g.adjoint_matrix();
    info.restricted_dplus = fixed_dim_plus(restrict_or_throw(adjoint, t.subalgebra));
    auto it = t.label_by_dim.find(info.restricted_dplus);
    if (it == t.label_by_dim.end())
        throw UnclassifiedInvolution("unexpected fixed dimension " +
                                     std::to_string(info.restricted_dplus) + " under " + group);
    info.label = it->second;
    if (g.is_identity()) {
        info.label = "identity";
        info.orbit_id = "identity";
    } else if (info.label == "pole" || info.label == "fix") {
        // zero-dimensional orbit: the element itself is the class
        info.orbit_id = info.label + "(" + g.display() + ")";
    } else {
        info.orbit_id = "";
    }
    if (!info.orbit_id.empty()) {
        std::lock_guard<std::mutex> lock(mu_);
        classify_cache_.emplace(cache_key, info);
        return info;
    }
    std::string sig = info.label + "|" + signature_of(adjoint, t.sig_subalgebra);
    if (group == "E7" && info.label == "EVI") sig += "@" + std::to_string(info.ambient_dplus);
    const auto& refs = reference_signatures(group);
    auto rit = refs.find(sig);
    if (rit == refs.end())
        throw UnclassifiedInvolution("no reference orbit for label " + info.label +
                                     " with this restriction class (element " + g.display() + ")");
    info.orbit_id = rit->second;
    std::lock_guard<std::mutex> lock(mu_);
    classify_cache_.emplace(cache_key, info);
    return info;
}

std::map<std::string, size_t> Classifier::orbit_histogram(const std::vector<E8GroupElem>& set,
                                                          const std::string& group) const {
    std::vector<std::string> ids(set.size());
    parallel_for(set.size(), workers_, [&](size_t i) {
        ids[i] = classify(set[i], group).orbit_id;
    });
    std::map<std::string, size_t> hist;
    for (const auto& id : ids) ++hist[id];
    return hist;
}

BackendCheckResult backend_consistency_check(const Classifier& cl, const E8GroupElem& g) {
    BackendCheckResult res;
    const auto& enc = g.torus_encoding();
    if (!enc) {
        res.ok = false;
        res.mismatches.push_back("element has no torus-or-x encoding");
        return res;
    }
    TorusInvolution t{enc->v};
    struct Slice {
        AmbientSubsystem ambient;
        std::string subalgebra;  // empty = full e8
    };
    static const std::vector<Slice> slices = [] {
        std::vector<Slice> s;
        s.push_back({ambient_e8(), ""});
        s.push_back({ambient_e7(root_alpha()), "e7_alpha"});
        s.push_back({ambient_su2_e7(root_alpha()), "su2_e7"});
        s.push_back({ambient_e6(root_alpha(), root_beta()), "e6_alphabeta"});
        return s;
    }();
    for (const auto& slice : slices) {
        size_t comb = combinatorial_fixed_dim(t, enc->x_flag, slice.ambient);
        size_t conc = slice.subalgebra.empty() ? cl.ambient_dplus(g)
                                               : cl.fixed_dim_in(g, slice.subalgebra);
        if (comb != conc) {
            res.ok = false;
            std::ostringstream os;
            os << slice.ambient.name << ": combinatorial=" << comb << ", matrix=" << conc;
            res.mismatches.push_back(os.str());
        }
    }
    return res;
}

}  // namespace e8cat
