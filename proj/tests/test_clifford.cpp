#include <doctest.h>

#include "e8cat/clifford.hpp"
#include "e8cat/rng.hpp"
#include "e8cat/spin_module.hpp"
#include "e8cat/triality.hpp"

using namespace e8cat;

namespace {

CliffordElem random_sparse(Rng& rng, int dim, int terms) {
    CliffordElem c(dim);
    for (int t = 0; t < terms; ++t)
        c.add_term(static_cast<BladeMask>(rng.below(1u << dim)), ExactScalar(rng.rational(4, 3)));
    return c;
}

}  // namespace

TEST_CASE("blade products") {
    // e_0 e_1
    CHECK(blade_mul_sign(1u << 0, 1u << 1) == 1);
    // e_1 e_1 = -1
    CHECK(blade_mul_sign(1u << 1, 1u << 1) == -1);
    // (e_0 e_1)(e_1 e_2) = -e_0 e_2: one contraction, no swaps needed
    CliffordElem a = CliffordElem::blade(8, 0b011), b = CliffordElem::blade(8, 0b110);
    CliffordElem p = clifford_mul(a, b);
    CHECK(p.term_count() == 1);
    CHECK(p.terms()[0].first == 0b101);
    CHECK(p.terms()[0].second == ExactScalar(-1));
}

TEST_CASE("clifford product: unit, torus square, associativity") {
    Rng rng(2024);
    for (int dim : {8, 16}) {
        CliffordElem one = CliffordElem::one(dim);
        CliffordElem a = random_sparse(rng, dim, 5);
        CHECK(clifford_mul(a, one) == a);
        CHECK(clifford_mul(one, a) == a);
    }
    // (cos pi/4 + sin pi/4 e_0 e_1)^2 = e_0 e_1
    CliffordElem g = torus_element(8, {1}, {{0, 1}});
    CliffordElem g2 = clifford_mul(g, g);
    CHECK(g2 == CliffordElem::blade(8, 0b11));
    // associativity on random triples
    for (int iter = 0; iter < 100; ++iter) {
        CliffordElem x = random_sparse(rng, 16, 4), y = random_sparse(rng, 16, 4),
                     z = random_sparse(rng, 16, 4);
        CHECK(clifford_mul(clifford_mul(x, y), z) == clifford_mul(x, clifford_mul(y, z)));
    }
}

TEST_CASE("generator relations for n = 8 and n = 16") {
    for (int dim : {8, 16}) {
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) {
                CliffordElem ei = CliffordElem::blade(dim, 1u << i);
                CliffordElem ej = CliffordElem::blade(dim, 1u << j);
                CliffordElem s = clifford_mul(ei, ej) + clifford_mul(ej, ei);
                if (i == j)
                    CHECK(s == CliffordElem::scalar(dim, ExactScalar(-2)));
                else
                    CHECK(s.is_zero());
            }
    }
    CHECK(SpinModule::instance().generators_ok());
}

TEST_CASE("torus elements at quarter-turn angles are units") {
    Rng rng(11);
    std::vector<std::pair<int, int>> pairs = {{0, 1}, {2, 3}, {4, 5}, {6, 7}};
    for (int iter = 0; iter < 50; ++iter) {
        std::vector<long> turns(4);
        for (auto& t : turns) t = rng.int_in(-4, 4);
        CHECK(is_unit_spin(torus_element(8, turns, pairs)));
    }
    CHECK(torus_element(8, {0, 0, 0, 0}, pairs) == CliffordElem::one(8));
}

TEST_CASE("volume element and half-spin module shape") {
    const SpinModule& m = SpinModule::instance();
    CHECK(m.plus_indices().size() == 128);
    // omega acts as +1 on the plus basis: half_spin of the volume = identity
    CliffordElem omega = CliffordElem::blade(16, 0xFFFF);
    CHECK(clifford_mul(omega, omega) == CliffordElem::one(16));
    CHECK(m.half_spin_matrix(omega).is_identity());
    // g = -1 acts as -I on Delta+
    CHECK(m.half_spin_matrix(CliffordElem::scalar(16, ExactScalar(-1))) ==
          -ExactMatrix::identity(128));
}

TEST_CASE("vector representation") {
    const SpinModule& m = SpinModule::instance();
    CHECK(m.vector_rep_matrix(CliffordElem::one(16), 16).is_identity());
    // g = cos pi/4 + sin pi/4 e_0 e_1: pi(g) = rotation by pi/2 in (e_0, e_1)
    CliffordElem g = torus_element(16, {1}, {{0, 1}});
    ExactMatrix rot = m.vector_rep_matrix(g, 16);
    CHECK(rot.at(0, 0).is_zero());
    CHECK(rot.at(1, 0) == ExactScalar(1));
    CHECK(rot.at(0, 1) == ExactScalar(-1));
    for (int k = 2; k < 16; ++k) CHECK(rot.at(k, k).is_one());
    // pi(T_n(theta...)) = T'_n(theta...): full-turn check theta = pi
    CliffordElem gpi = torus_element(16, {2}, {{0, 1}});
    ExactMatrix rpi = m.vector_rep_matrix(gpi, 16);
    CHECK(rpi.at(0, 0) == ExactScalar(-1));
    CHECK(rpi.at(1, 1) == ExactScalar(-1));
    // g = e_0 e_1 e_2 e_3 in Cl(8): conjugation flips the blade support
    CliffordElem blade = CliffordElem::blade(8, 0b1111);
    ExactMatrix d = m.vector_rep_matrix(blade, 8);
    for (int k = 0; k < 8; ++k) CHECK(d.at(k, k) == ExactScalar(k < 4 ? -1 : 1));
    CHECK_THROWS_AS(m.vector_rep_matrix(CliffordElem(16), 16), NotInvertible);
}

TEST_CASE("blade table: all 32 gamma_i^{a,b} match their triples") {
    const SpinModule& m = SpinModule::instance();
    for (int i = 0; i < 8; ++i)
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
                CliffordElem c = gamma_clifford(i, a, b);
                TrialityTriple expect = triple_from_gamma(i, a, b);
                // vector representation = first component
                CHECK(m.vector_rep_matrix(c, 8) == expect.x1);
                // half-spin actions = second and third components
                CHECK(m.half_spin8_minus(c) == expect.x2);
                CHECK(m.half_spin8_plus(c) == expect.x3);
            }
}

TEST_CASE("group triality identity for the triple of any even unit") {
    // (pi(g) u)(rho^-(g) v) = rho^+(g)(uv): holds for the table elements and
    // for random torus elements of Spin(8)
    const SpinModule& m = SpinModule::instance();
    Rng rng(55);
    std::vector<CliffordElem> gs;
    for (int i = 0; i < 8; ++i) gs.push_back(gamma_clifford(i, rng.below(2), rng.below(2)));
    for (int iter = 0; iter < 5; ++iter) {
        std::vector<long> turns(4);
        for (auto& t : turns) t = rng.int_in(-3, 3);
        gs.push_back(torus_element(8, turns, {{0, 1}, {2, 3}, {4, 5}, {6, 7}}));
    }
    for (const auto& g : gs) {
        TrialityTriple t{m.vector_rep_matrix(g, 8), m.half_spin8_minus(g), m.half_spin8_plus(g)};
        CHECK(triple_valid(t));
    }
}

TEST_CASE("exp pi(iA) to gamma table: all 12 correspondences") {
    // iA_{x_i +- x_j} = (1/2)(e_{2i-2} e_{2i-1} +- e_{2j-2} e_{2j-1});
    // exp(pi iA) = product of quarter-turn factors with turns (+-2).
    struct Entry {
        int i, j, sj;  // x_i + sj * x_j
        int gi, ga, gb;
    };
    const Entry table[12] = {
        {1, 2, -1, 1, 0, 1}, {1, 2, +1, 1, 1, 1}, {3, 4, -1, 1, 0, 0}, {3, 4, +1, 1, 1, 0},
        {1, 3, -1, 2, 0, 1}, {1, 3, +1, 2, 1, 1}, {2, 4, -1, 2, 0, 0}, {2, 4, +1, 2, 1, 0},
        {1, 4, -1, 3, 0, 1}, {1, 4, +1, 3, 1, 1}, {2, 3, -1, 3, 0, 0}, {2, 3, +1, 3, 1, 0},
    };
    for (const auto& e : table) {
        CliffordElem g = torus_element(
            8, {2, 2 * e.sj}, {{2 * e.i - 2, 2 * e.i - 1}, {2 * e.j - 2, 2 * e.j - 1}});
        CHECK(g == gamma_clifford(e.gi, e.ga, e.gb));
    }
    // the two worked examples: exp pi(iA_{x_1 - x_2}) = -e_0e_1e_2e_3,
    // exp pi(iA_{x_1 + x_2}) = e_0e_1e_2e_3
    CHECK(torus_element(8, {2, -2}, {{0, 1}, {2, 3}}) ==
          CliffordElem::blade(8, 0b1111, ExactScalar(-1)));
    CHECK(torus_element(8, {2, 2}, {{0, 1}, {2, 3}}) == CliffordElem::blade(8, 0b1111));
}

TEST_CASE("half_spin_matrix is multiplicative") {
    const SpinModule& m = SpinModule::instance();
    Rng rng(99);
    for (int iter = 0; iter < 10; ++iter) {
        std::vector<long> t1(8), t2(8);
        for (auto& t : t1) t = rng.int_in(-2, 2);
        for (auto& t : t2) t = rng.int_in(-2, 2);
        std::vector<std::pair<int, int>> pairs;
        for (int k = 0; k < 8; ++k) pairs.push_back({2 * k, 2 * k + 1});
        CliffordElem g = torus_element(16, t1, pairs), h = torus_element(16, t2, pairs);
        CHECK(m.half_spin_matrix(clifford_mul(g, h)) ==
              m.half_spin_matrix(g) * m.half_spin_matrix(h));
    }
    CHECK_THROWS_AS(m.half_spin_matrix(CliffordElem::blade(16, 0b1)), NotEven);
}

TEST_CASE("dimension mismatch is detected") {
    CHECK_THROWS_AS(clifford_mul(CliffordElem::one(8), CliffordElem::one(16)),
                    DimensionMismatch);
}
