#include <doctest.h>

#include "e8cat/octonion.hpp"
#include "e8cat/rng.hpp"
#include "e8cat/triality.hpp"

using namespace e8cat;

namespace {

Octonion random_oct(Rng& rng) {
    Octonion x;
    for (int i = 0; i < 8; ++i) x.c[i] = ExactScalar(rng.rational(5, 4));
    return x;
}

}  // namespace

TEST_CASE("basis products from the derived table") {
    CHECK(oct_basis_mul(1, 2).index == 3);
    CHECK(oct_basis_mul(1, 2).sign == 1);
    CHECK(oct_basis_mul(2, 3).index == 1);
    CHECK(oct_basis_mul(2, 3).sign == 1);
    CHECK(oct_basis_mul(3, 1).index == 2);
    CHECK(oct_basis_mul(3, 1).sign == 1);
    // forced by the row 2F_{01} = E01+E23+E45+E67
    CHECK(oct_basis_mul(1, 4).index == 5);
    CHECK(oct_basis_mul(1, 4).sign == 1);
    // identity element
    Rng rng(5);
    Octonion x = random_oct(rng);
    CHECK(oct_mul(Octonion::one(), x) == x);
    CHECK(oct_mul(x, Octonion::one()) == x);
}

TEST_CASE("norm multiplicativity: 64 basis pairs and 1000 random pairs") {
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            Octonion p = oct_mul(Octonion::basis(i), Octonion::basis(j));
            CHECK(oct_norm2(p) == ExactScalar(1));
        }
    Rng rng(424242);
    for (int iter = 0; iter < 1000; ++iter) {
        Octonion x = random_oct(rng), y = random_oct(rng);
        CHECK(oct_norm2(oct_mul(x, y)) == oct_norm2(x) * oct_norm2(y));
    }
}

TEST_CASE("left alternativity x(xy) = (xx)y on random pairs") {
    Rng rng(777);
    for (int iter = 0; iter < 200; ++iter) {
        Octonion x = random_oct(rng), y = random_oct(rng);
        CHECK(oct_mul(x, oct_mul(x, y)) == oct_mul(oct_mul(x, x), y));
    }
}

TEST_CASE("conjugation and the two inner product formulas") {
    auto [cj, n] = oct_conj_inner(Octonion::basis(3), Octonion::basis(3));
    CHECK(cj == -Octonion::basis(3));
    CHECK(n == ExactScalar(1));
    CHECK(oct_conj_inner(Octonion::basis(2), Octonion::basis(5)).second == ExactScalar());
    Rng rng(31337);
    for (int iter = 0; iter < 200; ++iter) {
        Octonion x = random_oct(rng), y = random_oct(rng);
        ExactScalar direct;
        for (int i = 0; i < 8; ++i) direct += x.c[i] * y.c[i];
        CHECK(oct_conj_inner(x, y).second == direct);  // both formulas agree internally
    }
}

TEST_CASE("gamma elements") {
    CHECK(gamma_element(0).is_identity());
    LinearMap8 g1 = gamma_element(1);
    for (int k = 0; k < 8; ++k)
        CHECK(g1.at(k, k) == ExactScalar(k < 4 ? 1 : -1));
    LinearMap8 g4 = gamma_element(4);
    for (int k = 0; k < 8; ++k)
        CHECK(g4.at(k, k) == ExactScalar(k % 2 == 0 ? 1 : -1));
    for (int i = 1; i < 8; ++i) {
        CHECK((gamma_element(i) * gamma_element(i)).is_identity());
        CHECK(gamma_element(i).trace().is_zero());
    }
}

TEST_CASE("is_g2 on the gammas, identity, and a non-example") {
    for (int i = 0; i < 8; ++i) CHECK(is_g2(gamma_element(i)));
    CHECK(is_g2(ExactMatrix::identity(8)));
    LinearMap8 bad = ExactMatrix::identity(8);
    bad.at(1, 1) = ExactScalar(-1);  // negating only e_1 breaks (e_1, e_2)
    CHECK_FALSE(is_g2(bad));
}

TEST_CASE("A(G2): abelian involutive subgroup of order 8") {
    auto set = a_g2();
    CHECK(set.size() == 8);
    for (const auto& g : set) {
        CHECK(is_g2(g));
        CHECK((g * g).is_identity());
    }
    for (const auto& g : set)
        for (const auto& h : set) {
            CHECK(g * h == h * g);
            bool closed = false;
            LinearMap8 p = g * h;
            for (const auto& k : set) closed = closed || k == p;
            CHECK(closed);
        }
}

TEST_CASE("triality maps alpha, beta, gamma on so(8)") {
    for (int k = 1; k < 8; ++k) {
        Octonion a = Octonion::basis(k);
        LinearMap8 l = left_mul_map(a), r = right_mul_map(a), t = tee_map(a);
        CHECK(so8_triality_map(TrialityKind::beta, t) == l);       // beta(T_{e_k}) = L_{e_k}
        CHECK(so8_triality_map(TrialityKind::alpha, t) == -t);     // alpha(T_a) = -T_a
        CHECK(so8_triality_map(TrialityKind::alpha, l) == -r);     // alpha(L_a) = -R_a
        CHECK(so8_triality_map(TrialityKind::beta, l) == t);       // beta(L_a) = T_a
        CHECK(so8_triality_map(TrialityKind::gamma, l) == r);      // gamma(L_a) = R_a
        CHECK(so8_triality_map(TrialityKind::gamma, t) == -l);
    }
    CHECK_THROWS_AS(so8_triality_map(TrialityKind::beta, ExactMatrix::identity(8)), NotSkew);
}

TEST_CASE("alpha, beta generate S3; gamma has order 3") {
    // check the relations alpha^2 = beta^2 = id, (beta alpha)^3 = id on a basis
    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j) {
            LinearMap8 e = so8_E(i, j);
            auto A = [&](const LinearMap8& x) { return so8_triality_map(TrialityKind::alpha, x); };
            auto B = [&](const LinearMap8& x) { return so8_triality_map(TrialityKind::beta, x); };
            auto G = [&](const LinearMap8& x) { return so8_triality_map(TrialityKind::gamma, x); };
            CHECK(A(A(e)) == e);
            CHECK(B(B(e)) == e);
            CHECK(G(G(G(e))) == e);
            if (i == 0 && j == 1) CHECK(G(e) != e);  // gamma is not the identity map
        }
}

TEST_CASE("solve_triality on generators and brackets") {
    for (int k = 1; k < 8; ++k) {
        Octonion a = Octonion::basis(k);
        auto [x2, x3] = solve_triality(left_mul_map(a));
        CHECK(x2 == right_mul_map(a));
        CHECK(x3 == tee_map(a));
    }
    auto [z2, z3] = solve_triality(ExactMatrix(8, 8));
    CHECK(z2.is_zero());
    CHECK(z3.is_zero());
    // X1 = [L_{e_1}, L_{e_2}] -> ([R_1, R_2], [T_1, T_2])
    LinearMap8 l1 = left_mul_map(Octonion::basis(1)), l2 = left_mul_map(Octonion::basis(2));
    LinearMap8 r1 = right_mul_map(Octonion::basis(1)), r2 = right_mul_map(Octonion::basis(2));
    LinearMap8 t1 = tee_map(Octonion::basis(1)), t2 = tee_map(Octonion::basis(2));
    auto [c2, c3] = solve_triality(l1 * l2 - l2 * l1);
    CHECK(c2 == r1 * r2 - r2 * r1);
    CHECK(c3 == t1 * t2 - t2 * t1);
}

TEST_CASE("solve_triality agrees with (gamma, beta) on all 28 basis elements") {
    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j) {
            LinearMap8 e = so8_E(i, j);
            auto [x2, x3] = solve_triality(e);  // internal comparison throws on mismatch
            CHECK(x2 == so8_triality_map(TrialityKind::gamma, e));
            CHECK(x3 == so8_triality_map(TrialityKind::beta, e));
        }
}

TEST_CASE("triples gamma_i^{a,b}") {
    CHECK(triple_from_gamma(0, 0, 0) == TrialityTriple::identity());
    auto t110 = triple_from_gamma(1, 1, 0);
    CHECK(t110.x1 == gamma_element(1));
    CHECK(t110.x2 == -gamma_element(1));
    CHECK(t110.x3 == -gamma_element(1));
    auto t401 = triple_from_gamma(4, 0, 1);
    CHECK(t401.x1 == -gamma_element(4));
    CHECK(t401.x2 == -gamma_element(4));
    CHECK(t401.x3 == gamma_element(4));
}

TEST_CASE("A(Spin(8)): 32 valid, pairwise commuting involutive triples, closed") {
    auto set = a_spin8();
    CHECK(set.size() == 32);
    TrialityTriple id = TrialityTriple::identity();
    for (const auto& t : set) {
        CHECK(triple_valid(t));
        CHECK(triple_mul(t, t) == id);
        CHECK(triple_mul(t, id) == t);
    }
    size_t commuting_pairs = 0, closed = 0;
    for (const auto& s : set)
        for (const auto& t : set) {
            if (triple_mul(s, t) == triple_mul(t, s)) ++commuting_pairs;
            TrialityTriple p = triple_mul(s, t);
            for (const auto& u : set)
                if (u == p) {
                    ++closed;
                    break;
                }
        }
    CHECK(commuting_pairs == 32 * 32);
    CHECK(closed == 32 * 32);
}

TEST_CASE("gamma_2 * gamma_3 lands on gamma_1 up to the sign pattern") {
    auto p = triple_mul(triple_from_gamma(2, 0, 0), triple_from_gamma(3, 0, 0));
    auto label = gamma_label(p);
    CHECK(label.i == 1);
}

TEST_CASE("g2: 14-dimensional, brackets close") {
    auto basis = g2_basis();
    CHECK(basis.size() == 14);
    for (const auto& x : basis) {
        CHECK(is_skew(x));
        CHECK(so8_triality_map(TrialityKind::beta, x) == x);
        CHECK(so8_triality_map(TrialityKind::gamma, x) == x);
    }
}

TEST_CASE("the 28 non-identity-layer triples pairwise commute") {
    // {gamma_i^{a,b} : 1 <= i <= 7} matches the polar intersection count 28
    std::vector<TrialityTriple> polar;
    for (int i = 1; i < 8; ++i)
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) polar.push_back(triple_from_gamma(i, a, b));
    CHECK(polar.size() == 28);
    for (const auto& s : polar)
        for (const auto& t : polar) CHECK(triple_mul(s, t) == triple_mul(t, s));
}
