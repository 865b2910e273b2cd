#include "e8cat/catalog.hpp"

#include "e8cat/parallel.hpp"

#include <algorithm>
#include <set>

namespace e8cat {

namespace {

RootE8 alphabar() { return RootVec::integral(6, 1, 7, 1); }
RootVec half_plus() {
    RootVec v{};
    for (int k = 0; k < 8; ++k) v.twice[k] = 1;
    return v;
}

std::vector<E8GroupElem> psi_family(int i_lo, int i_hi, int j_lo, int j_hi) {
    std::vector<E8GroupElem> out;
    for (int i = i_lo; i <= i_hi; ++i)
        for (int j = j_lo; j <= j_hi; ++j)
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) out.push_back(E8GroupElem::psi(i, 0, 0, j, a, b));
    return out;
}

std::vector<RootE8> slice_pos(const RootE8& a, long n) {
    std::vector<RootE8> out;
    for (const auto& g : pairing_slice(a, n))
        if (is_positive_root(g)) out.push_back(g);
    return out;
}

std::vector<RootE8> slice2(const RootE8& a, long na, const RootE8& b, long nb,
                           bool positive_only) {
    std::vector<RootE8> out;
    for (const auto& g : roots_e8())
        if (pairing(a, g) == na && pairing(b, g) == nb &&
            (!positive_only || is_positive_root(g)))
            out.push_back(g);
    return out;
}

std::vector<E8GroupElem> torus_family(const std::vector<RootVec>& exponents, bool with_x) {
    std::vector<E8GroupElem> out;
    out.reserve(exponents.size());
    for (const auto& v : exponents) out.push_back(E8GroupElem::tau(v, with_x));
    return out;
}

std::vector<RootVec> a_t_exponents() {
    std::vector<RootVec> out{RootVec{}};
    for (const auto& g : positive_roots_e8()) out.push_back(g);
    for (const auto& v : lambda_set(root_alpha(), root_beta())) out.push_back(v);
    return out;
}

}  // namespace

const std::vector<std::string>& catalog_names() {
    static const std::vector<std::string> names = {
        "A1(E8)",     "A2(E8)",    "A(T)",       "A(F4)",      "A(FI+)",    "A(FII+)",
        "A1(E6)",     "A2(E6)",    "A1(EIx)",    "A2(EIx)",    "A1(EII+)",  "A2(EII+)",
        "A(EIII+)",   "A(EIVz)",   "A(EVIIbeta)", "A1(E7)",    "A2(E7)",    "A1(EVI+)",
        "A2(EVI+)",   "A1(EIX+)",  "A2(EIX+)",   "A1(EVIII+)", "A2(EVIII+)", "A1(EVx)",
        "A2(EVphi)",  "A3(EVx)",
    };
    return names;
}

AntipodalSet build_named_set(const std::string& name) {
    const RootE8 a = root_alpha(), b = root_beta();
    AntipodalSet s;
    s.name = name;
    if (name == "A1(E8)") {
        s.ambient = "E8";
        s.expected_cardinality = 256;
        s.elements = psi_family(0, 7, 0, 7);
    } else if (name == "A(T)") {
        s.ambient = "T";
        s.expected_cardinality = 256;
        s.elements = torus_family(a_t_exponents(), false);
    } else if (name == "A2(E8)") {
        s.ambient = "E8";
        s.expected_cardinality = 512;
        s.elements = torus_family(a_t_exponents(), false);
        auto xs = torus_family(a_t_exponents(), true);
        s.elements.insert(s.elements.end(), xs.begin(), xs.end());
    } else if (name == "A(F4)") {
        s.ambient = "F4";
        s.expected_cardinality = 32;
        s.elements = psi_family(0, 7, 0, 0);
    } else if (name == "A(FI+)") {
        s.ambient = "FI";
        s.expected_cardinality = 28;
        s.elements = psi_family(1, 7, 0, 0);
    } else if (name == "A(FII+)") {
        s.ambient = "FII";
        s.expected_cardinality = 3;
        for (auto [aa, bb] : {std::pair{1, 0}, {0, 1}, {1, 1}})
            s.elements.push_back(E8GroupElem::psi(0, 0, 0, 0, aa, bb));
    } else if (name == "A1(E6)") {
        s.ambient = "E6";
        s.expected_cardinality = 32;
        s.elements = psi_family(0, 7, 0, 0);
    } else if (name == "A2(E6)") {
        s.ambient = "E6";
        s.expected_cardinality = 64;
        std::vector<RootVec> exps{RootVec{}};
        for (const auto& d : slice2(a, 0, b, 0, true)) exps.push_back(d);
        for (const auto& d : slice2(a, 0, b, 1, false)) exps.push_back(d + a);
        s.elements = torus_family(exps, false);
    } else if (name == "A1(EIx)") {
        s.ambient = "EI";
        s.expected_cardinality = 28;
        for (int i = 1; i <= 7; ++i)
            for (int aa = 0; aa < 2; ++aa)
                for (int bb = 0; bb < 2; ++bb)
                    s.elements.push_back(E8GroupElem::psi(i, 0, 0, 4, aa, bb));
    } else if (name == "A2(EIx)") {
        s.ambient = "EI";
        s.expected_cardinality = 64;
        std::vector<RootVec> exps{RootVec{}};
        for (const auto& d : slice2(a, 0, b, 0, true)) exps.push_back(d);
        for (const auto& d : slice2(a, 0, b, 1, false)) exps.push_back(d + a);
        s.elements = torus_family(exps, true);
    } else if (name == "A1(EII+)") {
        s.ambient = "EII";
        s.expected_cardinality = 28;
        s.elements = psi_family(1, 7, 0, 0);
    } else if (name == "A2(EII+)") {
        s.ambient = "EII";
        s.expected_cardinality = 36;
        std::vector<RootVec> exps;
        for (const auto& d : slice2(a, 0, b, 0, true)) exps.push_back(d);
        s.elements = torus_family(exps, false);
    } else if (name == "A(EIII+)") {
        s.ambient = "EIII";
        s.expected_cardinality = 27;
        std::vector<RootVec> exps;
        for (const auto& d : slice2(a, 0, b, 1, false)) exps.push_back(d + a);
        s.elements = torus_family(exps, false);
    } else if (name == "A(EIVz)") {
        s.ambient = "EIV";
        s.expected_cardinality = 4;
        for (int aa = 0; aa < 2; ++aa)
            for (int bb = 0; bb < 2; ++bb)
                s.elements.push_back(E8GroupElem::psi(0, 0, 0, 4, aa, bb));
    } else if (name == "A(EVIIbeta)") {
        s.ambient = "EVII";
        s.expected_cardinality = 56;
        std::vector<RootVec> exps;
        for (const auto& g : pairing_slice(a, -1)) exps.push_back(g);
        s.elements = torus_family(exps, false);
    } else if (name == "A1(E7)") {
        s.ambient = "E7";
        s.expected_cardinality = 64;
        s.elements = psi_family(0, 7, 0, 0);
        auto second = psi_family(0, 7, 1, 1);
        s.elements.insert(s.elements.end(), second.begin(), second.end());
    } else if (name == "A2(E7)") {
        s.ambient = "E7";
        s.expected_cardinality = 128;
        std::vector<RootVec> exps{RootVec{}, a};
        for (const auto& g : slice_pos(a, 0)) {
            exps.push_back(g);
            exps.push_back(g + a);
        }
        s.elements = torus_family(exps, false);
    } else if (name == "A1(EVI+)") {
        s.ambient = "EVI";
        s.expected_cardinality = 31;
        s.elements = psi_family(1, 7, 0, 0);
        for (auto [aa, bb] : {std::pair{1, 0}, {0, 1}, {1, 1}})
            s.elements.push_back(E8GroupElem::psi(0, 0, 0, 1, aa, bb));
    } else if (name == "A2(EVI+)") {
        s.ambient = "EVI";
        s.expected_cardinality = 63;
        std::vector<RootVec> exps;
        for (const auto& g : slice_pos(a, 0)) exps.push_back(g);
        s.elements = torus_family(exps, false);
    } else if (name == "A1(EIX+)") {
        s.ambient = "EIX";
        s.expected_cardinality = 56;
        s.elements = psi_family(1, 7, 0, 0);
        auto second = psi_family(0, 0, 1, 7);
        s.elements.insert(s.elements.end(), second.begin(), second.end());
    } else if (name == "A2(EIX+)") {
        s.ambient = "EIX";
        s.expected_cardinality = 120;
        std::vector<RootVec> exps;
        for (const auto& g : positive_roots_e8()) exps.push_back(g);
        s.elements = torus_family(exps, false);
    } else if (name == "A1(EVIII+)") {
        s.ambient = "EVIII";
        s.expected_cardinality = 199;
        s.elements = psi_family(1, 7, 1, 7);
        for (auto [aa, bb] : {std::pair{1, 0}, {0, 1}, {1, 1}})
            s.elements.push_back(E8GroupElem::psi(0, 0, 0, 0, aa, bb));
    } else if (name == "A2(EVIII+)") {
        s.ambient = "EVIII";
        s.expected_cardinality = 391;
        s.elements = torus_family(a_t_exponents(), true);
        std::vector<RootVec> exps;
        for (const auto& g : slice_pos(a, 0)) exps.push_back(g + a);
        for (const auto& d : slice2(a, 0, b, 0, true)) {
            exps.push_back(d + b);
            exps.push_back(d + a + b);
        }
        auto rest = torus_family(exps, false);
        s.elements.insert(s.elements.end(), rest.begin(), rest.end());
    } else if (name == "A1(EVx)") {
        s.ambient = "EV";
        s.expected_cardinality = 56;
        for (int i = 1; i <= 7; ++i)
            for (int j : {4, 5})
                for (int aa = 0; aa < 2; ++aa)
                    for (int bb = 0; bb < 2; ++bb)
                        s.elements.push_back(E8GroupElem::psi(i, 0, 0, j, aa, bb));
    } else if (name == "A2(EVphi)") {
        s.ambient = "EV";
        s.expected_cardinality = 72;
        const RootVec g = half_plus();
        std::vector<RootVec> exps;
        for (const auto& d : slice_pos(a, 0)) {
            long p = pairing(RootE8{g}, d);
            if (p == 1 || p == -1) exps.push_back(d + a);
        }
        for (const auto& d : slice2(a, 0, b, 0, true)) {
            long p = pairing(RootE8{g}, d);
            if (p != 1 && p != -1) continue;
            exps.push_back(d + b);
            exps.push_back(d + a + b);
        }
        s.elements = torus_family(exps, false);
    } else if (name == "A3(EVx)") {
        s.ambient = "EV";
        s.expected_cardinality = 128;
        std::vector<RootVec> exps{RootVec{}, a};
        for (const auto& g : slice_pos(a, 0)) {
            exps.push_back(g);
            exps.push_back(g + a);
        }
        s.elements = torus_family(exps, true);
    } else {
        throw UnknownName("build_named_set: unknown catalog name " + name);
    }
    return s;
}

AntipodalSetReport check_antipodal_set(const AntipodalSet& s) {
    AntipodalSetReport rep;
    rep.name = s.name;
    rep.cardinality = s.size();
    rep.expected = s.expected_cardinality;
    rep.all_involutive = true;
    for (const auto& g : s.elements)
        if (!g.is_identity() && !g.is_involution()) rep.all_involutive = false;
    std::set<std::string> keys;
    for (const auto& g : s.elements) keys.insert(g.key());
    rep.pairwise_distinct = keys.size() == s.size();
    rep.pairwise_antipodal = true;
    for (size_t i = 0; i < s.elements.size() && rep.pairwise_antipodal; ++i)
        for (size_t j = i + 1; j < s.elements.size(); ++j)
            if (!is_antipodal_pair(s.elements[i], s.elements[j])) {
                rep.pairwise_antipodal = false;
                break;
            }
    return rep;
}

AntipodalSet intersect_with_orbit(const Classifier& cl, const AntipodalSet& s,
                                  const std::string& group, const std::string& orbit_id) {
    AntipodalSet out;
    out.name = s.name + " n " + orbit_id;
    out.ambient = orbit_id;
    std::vector<char> keep(s.elements.size(), 0);
    parallel_for(s.elements.size(), cl.workers(), [&](size_t i) {
        keep[i] = cl.classify(s.elements[i], group).orbit_id == orbit_id ? 1 : 0;
    });
    for (size_t i = 0; i < s.elements.size(); ++i)
        if (keep[i]) out.elements.push_back(s.elements[i]);
    out.expected_cardinality = out.elements.size();
    return out;
}

std::vector<E8GroupElem> subgroup_closure(const std::vector<E8GroupElem>& gens) {
    std::map<std::string, E8GroupElem> seen;
    seen.emplace(E8GroupElem::identity().key(), E8GroupElem::identity());
    for (const auto& g : gens) seen.emplace(g.key(), g);
    for (;;) {
        std::vector<E8GroupElem> fresh;
        for (const auto& [k1, g] : seen)
            for (const auto& [k2, h] : seen) {
                E8GroupElem p = elem_mul(g, h);
                if (!seen.count(p.key())) fresh.push_back(p);
            }
        if (fresh.empty()) break;
        for (auto& g : fresh) seen.emplace(g.key(), g);
    }
    std::vector<E8GroupElem> out;
    out.reserve(seen.size());
    for (auto& [k, g] : seen) out.push_back(g);
    return out;
}

EviPolarSplit evi_polar_split(const Classifier& cl, const AntipodalSet& a_evi) {
    EviPolarSplit split;
    E8GroupElem q = E8GroupElem::tau(alphabar());
    const auto& su2 = E8Algebra::instance().subalgebra("su2_alphabar");
    const auto& spin12 = E8Algebra::instance().subalgebra("spin_alpha_12");
    std::vector<int> kind(a_evi.elements.size());
    parallel_for(a_evi.elements.size(), cl.workers(), [&](size_t idx) {
        const E8GroupElem& r = a_evi.elements[idx];
        if (r == q) {
            kind[idx] = 0;
            return;
        }
        ExactMatrix m = r.adjoint_matrix();
        size_t d_su2 = fixed_dim_plus(restrict_to_subspace(m, *su2.solver));
        size_t d_spin12 = fixed_dim_plus(restrict_to_subspace(m, *spin12.solver));
        if (d_su2 == 3 && d_spin12 == 34)
            kind[idx] = 1;
        else if (d_su2 == 1 && d_spin12 == 36)
            kind[idx] = 2;
        else
            kind[idx] = 3;
    });
    for (int k : kind) {
        if (k == 0) ++split.pole;
        if (k == 1) ++split.grassmannian;
        if (k == 2) ++split.s2_diii;
        if (k == 3) ++split.unexpected;
    }
    return split;
}

}  // namespace e8cat
