#include <doctest.h>

#include "e8cat/classify.hpp"
#include "e8cat/e8algebra.hpp"
#include "e8cat/group_elem.hpp"
#include "e8cat/rng.hpp"

using namespace e8cat;

TEST_CASE("basis indexing round trip") {
    for (int k = 0; k < 120; ++k) {
        auto [i, j] = blade_pair16(k);
        CHECK(blade_index16(i, j) == k);
    }
}

TEST_CASE("bracket: skewness, so(16) check, eigenplane") {
    const E8Algebra& a = E8Algebra::instance();
    // [e_0e_1, e_1e_2] = -2 e_0e_2 (matrix bracket of [E_01, E_12] scaled)
    auto br = a.bracket_basis(blade_index16(0, 1), blade_index16(1, 2));
    REQUIRE(br.size() == 1);
    CHECK(br[0].first == blade_index16(0, 2));
    CHECK(br[0].second == ExactScalar(-2));
    // [x, x] = 0 and bilinearity via dense wrapper
    Rng rng(7);
    ExactVector x(kDimE8), y(kDimE8);
    for (int t = 0; t < 12; ++t) {
        x[rng.below(kDimE8)] = ExactScalar(rng.rational(3, 2));
        y[rng.below(kDimE8)] = ExactScalar(rng.rational(3, 2));
    }
    CHECK(is_zero_vector(a.bracket(x, x)));
    // invariance ([x,y],z) + (y,[x,z]) = 0 on random sparse triples
    for (int iter = 0; iter < 20; ++iter) {
        ExactVector u(kDimE8), v(kDimE8), w(kDimE8);
        for (int t = 0; t < 6; ++t) {
            u[rng.below(kDimE8)] = ExactScalar(rng.rational(3, 2));
            v[rng.below(kDimE8)] = ExactScalar(rng.rational(3, 2));
            w[rng.below(kDimE8)] = ExactScalar(rng.rational(3, 2));
        }
        ExactScalar s = a.inner(a.bracket(u, v), w) + a.inner(v, a.bracket(u, w));
        CHECK(s.is_zero());
    }
    // [t-element, r_gamma vector] stays inside r_gamma
    RootE8 g = root_alpha();
    auto rg = a.root_space(g);
    SubspaceSolver plane(rg);
    ExactVector tvec = a.cartan_vector(root_beta());
    for (const auto& v : rg) CHECK(plane.contains(a.bracket(tvec, v)));
}

TEST_CASE("jacobi on seeded basis triples") {
    const E8Algebra& a = E8Algebra::instance();
    Rng rng(123);
    for (int iter = 0; iter < 2000; ++iter) {
        int i = static_cast<int>(rng.below(kDimE8));
        int j = static_cast<int>(rng.below(kDimE8));
        int k = static_cast<int>(rng.below(kDimE8));
        CHECK(a.jacobi_zero(i, j, k));
    }
}

TEST_CASE("root spaces and su2/su3 bases") {
    const E8Algebra& a = E8Algebra::instance();
    CHECK(a.root_space(root_alpha()).size() == 2);
    CHECK(a.su2_basis(root_alpha()).size() == 3);
    CHECK(a.su3_basis(root_alpha(), root_beta()).size() == 8);
    // su2 closes under bracket
    SubalgebraBasis su2{"su2", a.su2_basis(root_alpha()),
                        std::make_shared<SubspaceSolver>(a.su2_basis(root_alpha()))};
    CHECK(a.is_bracket_closed(su2));
    SubalgebraBasis su3{"su3", a.su3_basis(root_alpha(), root_beta()),
                        std::make_shared<SubspaceSolver>(a.su3_basis(root_alpha(), root_beta()))};
    CHECK(a.is_bracket_closed(su3));
    // half-integral root space exists too
    RootVec h{};
    for (int k = 0; k < 8; ++k) h.twice[k] = 1;
    CHECK(a.root_space(h).size() == 2);
    // r_alpha^{+-} are one-dimensional
    CHECK(a.root_space_signed(root_alpha(), 1).size() == 1);
    CHECK(a.root_space_signed(root_alpha(), -1).size() == 1);
}

TEST_CASE("centralizer dimensions: e7 = 133, e6 = 78, f4 = 52, C(f4) = 14") {
    const E8Algebra& a = E8Algebra::instance();
    CHECK(a.subalgebra("e7_alpha").dim() == 133);
    CHECK(a.subalgebra("e6_alphabeta").dim() == 78);
    CHECK(a.subalgebra("g2").dim() == 14);
    CHECK(a.subalgebra("f4").dim() == 52);
    CHECK(a.subalgebra("c_f4").dim() == 14);
    CHECK(a.subalgebra("su2_e7").dim() == 136);
    CHECK(a.subalgebra("spin1_8").dim() == 28);
}

TEST_CASE("group elements: canonical forms and encodings") {
    E8GroupElem e = E8GroupElem::identity();
    CHECK(e.is_identity());
    E8GroupElem x = E8GroupElem::x();
    CHECK(x.is_involution());
    // x = psi(gamma_4^{0,0}, gamma_4^{0,0}) modulo the kernel
    REQUIRE(x.psi_encoding().has_value());
    CHECK(x.psi_encoding()->first.i == 4);
    CHECK(x.psi_encoding()->second.i == 4);
    CHECK(x == E8GroupElem::psi(4, 0, 0, 4, 0, 0));
    // tau_alpha = psi(gamma_0^{0,0}, gamma_1^{0,0})
    CHECK(E8GroupElem::tau(root_alpha()) == E8GroupElem::psi(0, 0, 0, 1, 0, 0));
    // tau_alphabar = psi(gamma_0^{0,0}, gamma_1^{1,0})
    RootVec abar = RootVec::integral(6, 1, 7, 1);
    CHECK(E8GroupElem::tau(abar) == E8GroupElem::psi(0, 0, 0, 1, 1, 0));
    // phi(-1) = psi(gamma_0^{0,0}, gamma_0^{1,0})
    CHECK(E8GroupElem::phi_minus_one() == E8GroupElem::psi(0, 0, 0, 0, 1, 0));
    // the kernel identification: same element through any kernel multiple
    CHECK(E8GroupElem::psi(1, 1, 0, 2, 0, 1) == E8GroupElem::psi(1, 0, 0, 2, 1, 1));
}

TEST_CASE("elem_mul in both encodings") {
    // psi route: the component sign patterns multiply like Z2 x Z2 and
    // gamma_1^2 = id, so the product lands on the gamma_0 layer
    E8GroupElem g = E8GroupElem::psi(0, 0, 0, 1, 0, 1);
    E8GroupElem h = E8GroupElem::psi(0, 0, 0, 1, 1, 0);
    E8GroupElem prod = elem_mul(g, h);
    CHECK(prod == E8GroupElem::psi(0, 0, 0, 0, 1, 1));
    CHECK(prod == elem_mul_resolved(g, h));
    // identity and involution laws
    CHECK(elem_mul(g, E8GroupElem::identity()) == g);
    CHECK(elem_mul(g, g).is_identity());
    // torus route with the dihedral rule
    E8GroupElem t1 = E8GroupElem::tau(root_alpha(), true);
    E8GroupElem t2 = E8GroupElem::tau(root_beta(), false);
    E8GroupElem p2 = elem_mul(t1, t2);
    CHECK(p2 == elem_mul_resolved(t1, t2));
    REQUIRE(p2.torus_encoding().has_value());
    CHECK(p2.torus_encoding()->x_flag);
    // tau_alpha tau_alpha = identity
    CHECK(elem_mul(E8GroupElem::tau(root_alpha()), E8GroupElem::tau(root_alpha())).is_identity());
}

TEST_CASE("encodings agree where both exist") {
    // the 16 diagonal gamma pairs are torus elements; adjoint matrices match
    int both = 0;
    for (int i = 0; i <= 3; ++i)
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
                E8GroupElem g = E8GroupElem::psi(i, a, b, 0, 0, 0);
                if (!g.torus_encoding()) continue;
                ++both;
                E8GroupElem t = E8GroupElem::tau(g.torus_encoding()->v,
                                                 g.torus_encoding()->x_flag);
                CHECK(t == g);
            }
    CHECK(both == 16);
}

TEST_CASE("adjoint matrices: identity, phi(-1), tau_alpha, x") {
    Classifier cl;
    CHECK(E8GroupElem::identity().adjoint_matrix().is_identity());
    auto d = fixed_space_dims(E8GroupElem::phi_minus_one().adjoint_matrix());
    CHECK(d.d_plus == 120);
    CHECK(d.d_minus == 128);
    d = fixed_space_dims(E8GroupElem::tau(root_alpha()).adjoint_matrix());
    CHECK(d.d_plus == 136);
    CHECK(d.d_minus == 112);
    d = fixed_space_dims(E8GroupElem::x().adjoint_matrix());
    CHECK(d.d_plus == 120);
    CHECK(d.d_minus == 128);
}

TEST_CASE("adjoint is multiplicative and orthogonal on catalog pairs") {
    const E8Algebra& alg = E8Algebra::instance();
    Rng rng(2025);
    for (int iter = 0; iter < 6; ++iter) {
        E8GroupElem g = E8GroupElem::psi(rng.below(8), rng.below(2), rng.below(2), rng.below(8),
                                         rng.below(2), rng.below(2));
        E8GroupElem h = E8GroupElem::psi(rng.below(8), rng.below(2), rng.below(2), rng.below(8),
                                         rng.below(2), rng.below(2));
        CHECK(elem_mul(g, h).adjoint_matrix() == g.adjoint_matrix() * h.adjoint_matrix());
        // orthogonality w.r.t. the invariant inner product: here the form is
        // the standard one on both blocks, so M^T M = I suffices
        ExactMatrix m = g.adjoint_matrix();
        CHECK((m.transposed() * m).is_identity());
        (void)alg;
    }
}

TEST_CASE("restriction examples from the table") {
    Classifier cl;
    // tau_alpha restricted to e7 is the identity (central in E7)
    ExactMatrix r = cl.restrict_adjoint(E8GroupElem::tau(root_alpha()), "e7_alpha");
    CHECK(r.is_identity());
    // psi(gamma_1^{0,0}, gamma_0^{0,0}) restricted to f4: involution with d+ = 24
    CHECK(cl.fixed_dim_in(E8GroupElem::psi(1, 0, 0, 0, 0, 0), "f4") == 24);
    // x on f4 -> 24 (type FI)
    CHECK(cl.fixed_dim_in(E8GroupElem::x(), "f4") == 24);
    // tau_{x7+x8} on su2+e7 -> 72; tau_delta (delta in Sigma_{a,+-1}) -> 80
    RootVec abar = RootVec::integral(6, 1, 7, 1);
    CHECK(cl.fixed_dim_in(E8GroupElem::tau(abar), "su2_e7") == 72);
    RootVec delta = RootVec::integral(5, 1, 6, 1);
    CHECK(cl.fixed_dim_in(E8GroupElem::tau(delta), "su2_e7") == 80);
}

TEST_CASE("classification of the table examples") {
    Classifier cl;
    auto info = cl.classify(E8GroupElem::psi(1, 0, 0, 0, 0, 0), "E8");
    CHECK(info.label == "EIX");
    CHECK(info.ambient_dplus == 136);
    info = cl.classify(E8GroupElem::psi(1, 0, 0, 0, 0, 0), "E7");
    CHECK(info.orbit_id == "EVI_+");
    info = cl.classify(E8GroupElem::psi(1, 0, 0, 0, 0, 0), "F4");
    CHECK(info.label == "FI");
    CHECK(info.restricted_dplus == 24);
    info = cl.classify(E8GroupElem::psi(0, 0, 0, 2, 0, 0), "E7");
    CHECK(info.label == "EVII");
    CHECK(info.restricted_dplus == 79);
    info = cl.classify(E8GroupElem::tau(root_alpha()), "E7");
    CHECK(info.label == "pole");
    // phi(-1) under E7: type EVI with the EVIII-side tag
    info = cl.classify(E8GroupElem::phi_minus_one(), "E7");
    CHECK(info.orbit_id == "EVI'_+");
    // x under E6 -> EI
    info = cl.classify(E8GroupElem::x(), "E6");
    CHECK(info.label == "EI");
    CHECK(info.orbit_id == "EI_4");
}

TEST_CASE("backend consistency on sample elements") {
    Classifier cl;
    // tau_alpha: both 136 at e8 level; tau_alpha x; tau_alpha tau_beta'
    for (bool with_x : {false, true}) {
        auto res = backend_consistency_check(cl, E8GroupElem::tau(root_alpha(), with_x));
        CHECK(res.ok);
    }
    RootVec ab = root_alpha() + RootVec::integral(0, 1, 1, -1);
    auto res = backend_consistency_check(cl, E8GroupElem::tau(ab));
    CHECK(res.ok);
    // a half-integral class
    RootVec h{};
    for (int k = 0; k < 8; ++k) h.twice[k] = 1;
    res = backend_consistency_check(cl, E8GroupElem::tau(h));
    CHECK(res.ok);
    res = backend_consistency_check(cl, E8GroupElem::tau(h, true));
    CHECK(res.ok);
}
