#include <doctest.h>

#include "e8cat/catalog.hpp"

#include <set>

using namespace e8cat;

TEST_CASE("catalog registry") {
    CHECK_THROWS_AS(build_named_set("A(nonsense)"), UnknownName);
    for (const auto& name : catalog_names()) {
        AntipodalSet s = build_named_set(name);
        CHECK(s.size() == s.expected_cardinality);
    }
}

TEST_CASE("A1(E8): 256 elements, abelian involutive subgroup") {
    AntipodalSet s = build_named_set("A1(E8)");
    auto rep = check_antipodal_set(s);
    CHECK(rep.cardinality == 256);
    CHECK(rep.ok());
    // closure: the subgroup generated is the set itself
    CHECK(subgroup_closure(s.elements).size() == 256);
}

TEST_CASE("A2(E8): 512 elements, pairwise antipodal") {
    AntipodalSet s = build_named_set("A2(E8)");
    auto rep = check_antipodal_set(s);
    CHECK(rep.cardinality == 512);
    CHECK(rep.ok());
}

TEST_CASE("named sets verify: cardinality, involutions, antipodality") {
    for (const auto& name : catalog_names()) {
        if (name == "A1(E8)" || name == "A2(E8)") continue;  // covered above
        AntipodalSet s = build_named_set(name);
        auto rep = check_antipodal_set(s);
        INFO(name);
        CHECK(rep.ok());
    }
}

TEST_CASE("x t vs x t' are always antipodal") {
    E8GroupElem t1 = E8GroupElem::tau(root_alpha(), true);
    E8GroupElem t2 = E8GroupElem::tau(root_beta(), true);
    CHECK(is_antipodal_pair(t1, t2));
    CHECK(is_antipodal_pair(t1, E8GroupElem::identity()));
}

TEST_CASE("A1 and A2 overlap: diagonal gamma pairs with agreeing encodings") {
    AntipodalSet a1 = build_named_set("A1(E8)");
    size_t both = 0, agree = 0;
    for (const auto& g : a1.elements) {
        if (!g.torus_encoding()) continue;
        ++both;
        E8GroupElem t = E8GroupElem::tau(g.torus_encoding()->v, g.torus_encoding()->x_flag);
        if (t == g && t.adjoint_matrix() == g.adjoint_matrix()) ++agree;
    }
    CHECK(both >= 16);
    CHECK(agree == both);
}

TEST_CASE("partition: A1(E8) = {e} + (A1 n EIX) + (A1 n EVIII)") {
    Classifier cl;
    AntipodalSet a1 = build_named_set("A1(E8)");
    auto hist = cl.orbit_histogram(a1.elements, "E8");
    CHECK(hist["identity"] == 1);
    CHECK(hist["EIX_+"] == 56);
    CHECK(hist["EVIII_+"] == 199);
}

TEST_CASE("EIX/EVIII intersections match the displayed sets") {
    Classifier cl;
    AntipodalSet a1 = build_named_set("A1(E8)");
    AntipodalSet a1_eix = intersect_with_orbit(cl, a1, "E8", "EIX_+");
    AntipodalSet expect = build_named_set("A1(EIX+)");
    std::set<std::string> got, want;
    for (const auto& g : a1_eix.elements) got.insert(g.key());
    for (const auto& g : expect.elements) want.insert(g.key());
    CHECK(got == want);
}

TEST_CASE("A1(EIX+) generates A1(E8)") {
    AntipodalSet s = build_named_set("A1(EIX+)");
    CHECK(subgroup_closure(s.elements).size() == 256);
}

TEST_CASE("A1(EVIII+) and A2 sets generate their parents") {
    CHECK(subgroup_closure(build_named_set("A1(EVIII+)").elements).size() == 256);
    CHECK(subgroup_closure(build_named_set("A2(EIX+)").elements).size() == 256);  // A(T)
}

TEST_CASE("orbit histogram: A1(EIX+) under E7") {
    Classifier cl;
    AntipodalSet s = build_named_set("A1(EIX+)");
    auto hist = cl.orbit_histogram(s.elements, "E7");
    // {pole:1, EVI:31, EVII: 3 x 8}
    size_t pole = 0, evi = 0, evii = 0;
    for (const auto& [id, n] : hist) {
        if (id.rfind("pole", 0) == 0) pole += n;
        if (id.rfind("EVI_", 0) == 0 || id.rfind("EVI'", 0) == 0) evi += n;
        if (id.rfind("EVII", 0) == 0) evii += n;
    }
    CHECK(pole == 1);
    CHECK(evi == 31);
    CHECK(evii == 24);
    CHECK(hist["EVII_1"] == 8);
    CHECK(hist["EVII_2"] == 8);
    CHECK(hist["EVII_3"] == 8);
    CHECK(hist["EVI_+"] == 31);
}

TEST_CASE("orbit histogram: A1(EIX+) under F4") {
    Classifier cl;
    AntipodalSet s = build_named_set("A1(EIX+)");
    auto hist = cl.orbit_histogram(s.elements, "F4");
    // 7 fixed points + FI_+ (28) + FII_i (3 each, i = 1..7)
    size_t fixed = 0, fii = 0;
    for (const auto& [id, n] : hist) {
        if (id.rfind("fix", 0) == 0) fixed += n;
        if (id.rfind("FII_", 0) == 0) fii += n;
    }
    CHECK(fixed == 7);
    CHECK(hist["FI_+"] == 28);
    CHECK(fii == 21);
    for (int i = 1; i <= 7; ++i) CHECK(hist["FII_" + std::to_string(i)] == 3);
}

TEST_CASE("EVI polar split: the oriented Grassmannian part has 30 points") {
    Classifier cl;
    auto split = evi_polar_split(cl, build_named_set("A1(EVI+)"));
    CHECK(split.pole == 1);
    CHECK(split.grassmannian == 30);
    CHECK(split.s2_diii == 0);
    CHECK(split.unexpected == 0);
    // cross check on A2(EVI+): 1 + 30 + 32
    auto split2 = evi_polar_split(cl, build_named_set("A2(EVI+)"));
    CHECK(split2.pole == 1);
    CHECK(split2.grassmannian == 30);
    CHECK(split2.s2_diii == 32);
    CHECK(split2.unexpected == 0);
}

TEST_CASE("FII+ has matching psi and tau descriptions") {
    AntipodalSet s = build_named_set("A(FII+)");
    // tau products: tau_{x1+x2} tau_{x3+x4}, tau_{x1-x2} tau_{x3+x4},
    // tau_{x1+x2} tau_{x1-x2}
    RootVec p12 = RootVec::integral(0, 1, 1, 1), m12 = RootVec::integral(0, 1, 1, -1);
    RootVec p34 = RootVec::integral(2, 1, 3, 1);
    std::set<std::string> tau_keys{E8GroupElem::tau(p12 + p34).key(),
                                   E8GroupElem::tau(m12 + p34).key(),
                                   E8GroupElem::tau(p12 + m12).key()};
    std::set<std::string> psi_keys;
    for (const auto& g : s.elements) psi_keys.insert(g.key());
    CHECK(tau_keys == psi_keys);
}
