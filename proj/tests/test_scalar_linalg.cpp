#include <doctest.h>

#include "e8cat/linalg.hpp"
#include "e8cat/rng.hpp"

using namespace e8cat;

TEST_CASE("field axioms for Q(sqrt2) on random values") {
    Rng rng(20240801);
    for (int iter = 0; iter < 400; ++iter) {
        ExactScalar x = rng.scalar(), y = rng.scalar(), z = rng.scalar();
        CHECK((x + y) * z == x * z + y * z);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * y == y * x);
        CHECK(x + (-x) == ExactScalar());
        if (!x.is_zero()) {
            CHECK(x * x.inverse() == ExactScalar(1));
        }
    }
    CHECK(ExactScalar::sqrt2() * ExactScalar::sqrt2() == ExactScalar(2));
    CHECK(ExactScalar::inv_sqrt2() * ExactScalar::sqrt2() == ExactScalar(1));
    // a + b sqrt2 = 0 iff a = b = 0
    CHECK_FALSE(ExactScalar(Rat(1), Rat(-1)).is_zero());
}

TEST_CASE("complex layer is a field with involutive conjugation") {
    Rng rng(7);
    for (int iter = 0; iter < 100; ++iter) {
        ComplexScalar x(rng.scalar(), rng.scalar()), y(rng.scalar(), rng.scalar());
        CHECK((x * y).conj() == x.conj() * y.conj());
        CHECK(x.conj().conj() == x);
        if (!x.is_zero()) CHECK(x * x.inverse() == ComplexScalar(ExactScalar(1)));
    }
    ComplexScalar i = ComplexScalar::i();
    CHECK(i * i == ComplexScalar(ExactScalar(-1)));
}

TEST_CASE("rank basics") {
    CHECK(rank(ExactMatrix::identity(3)) == 3);
    CHECK(rank(ExactMatrix(5, 5)) == 0);
}

TEST_CASE("rank of a product of rank-4 factors is 4") {
    // 10x4 times 4x10 with random rational entries; rank 4 with probability
    // one, and the seed below is checked to give exactly 4.
    Rng rng(123456);
    ExactMatrix a(10, 4), b(4, 10);
    for (size_t i = 0; i < 10; ++i)
        for (size_t j = 0; j < 4; ++j) a.at(i, j) = ExactScalar(rng.rational());
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 10; ++j) b.at(i, j) = ExactScalar(rng.rational());
    ExactMatrix m = a * b;
    CHECK(rank(m) == 4);
    CHECK(kernel_basis(m).size() == 6);
}

TEST_CASE("rank + nullity = cols and kernel vectors are genuine") {
    Rng rng(99);
    for (int iter = 0; iter < 20; ++iter) {
        size_t r = 3 + rng.below(5), c = 3 + rng.below(5);
        ExactMatrix m(r, c);
        for (size_t i = 0; i < r; ++i)
            for (size_t j = 0; j < c; ++j)
                if (rng.below(2)) m.at(i, j) = ExactScalar(rng.rational(4, 3));
        auto ker = kernel_basis(m);
        CHECK(rank(m) + ker.size() == c);
        for (const auto& v : ker) CHECK(is_zero_vector(m.apply(v)));
    }
}

TEST_CASE("kernel of identity and zero") {
    CHECK(kernel_basis(ExactMatrix::identity(4)).empty());
    CHECK(kernel_basis(ExactMatrix(6, 6)).size() == 6);
}

TEST_CASE("kernel of a projector has n - r vectors killed by M") {
    // projector of rank 2 on 5-space: diag(1,1,0,0,0) conjugated by a shear
    ExactMatrix p(5, 5);
    p.at(0, 0) = p.at(1, 1) = ExactScalar(1);
    ExactMatrix s = ExactMatrix::identity(5);
    s.at(0, 2) = ExactScalar(rat(1, 2));
    s.at(3, 1) = ExactScalar(3);
    ExactMatrix sinv = ExactMatrix::identity(5);
    sinv.at(0, 2) = ExactScalar(rat(-1, 2));
    sinv.at(3, 1) = ExactScalar(-3);
    ExactMatrix m = s * p * sinv;
    CHECK((m * m) == m);
    auto ker = kernel_basis(m);
    CHECK(ker.size() == 3);
    for (const auto& v : ker) CHECK(is_zero_vector(m.apply(v)));
}

TEST_CASE("fixed_space_dims") {
    auto d = fixed_space_dims(ExactMatrix::identity(248));
    CHECK(d.d_plus == 248);
    CHECK(d.d_minus == 0);
    d = fixed_space_dims(-ExactMatrix::identity(128));
    CHECK(d.d_plus == 0);
    CHECK(d.d_minus == 128);

    ExactMatrix m = ExactMatrix::identity(4);
    m.at(0, 0) = ExactScalar(-1);
    m.at(2, 3) = ExactScalar(1);
    m.at(3, 2) = ExactScalar(1);
    m.at(2, 2) = m.at(3, 3) = ExactScalar();
    d = fixed_space_dims(m);
    CHECK(d.d_plus == 2);
    CHECK(d.d_minus == 2);

    ExactMatrix bad = ExactMatrix::identity(3);
    bad.at(0, 1) = ExactScalar(1);  // shear, not an involution
    CHECK_THROWS_AS(fixed_space_dims(bad), NotInvolution);
}

TEST_CASE("restrict_to_subspace") {
    // identity restricted to any basis is the identity
    std::vector<ExactVector> basis;
    for (int k = 0; k < 3; ++k) {
        ExactVector v(6);
        v[k] = ExactScalar(1);
        v[k + 3] = ExactScalar(k + 1);
        basis.push_back(v);
    }
    CHECK(restrict_to_subspace(ExactMatrix::identity(6), basis).is_identity());

    // a map that swaps the first two basis vectors
    ExactMatrix m(4, 4);
    m.at(1, 0) = m.at(0, 1) = ExactScalar(1);
    m.at(2, 2) = m.at(3, 3) = ExactScalar(1);
    std::vector<ExactVector> b2;
    ExactVector u(4), v(4);
    u[0] = ExactScalar(1);
    v[1] = ExactScalar(1);
    b2 = {u, v};
    ExactMatrix r = restrict_to_subspace(m, b2);
    CHECK(r.at(0, 1) == ExactScalar(1));
    CHECK(r.at(1, 0) == ExactScalar(1));
    CHECK(r.at(0, 0).is_zero());

    // non-invariant subspace must throw
    std::vector<ExactVector> b3 = {u};
    CHECK_THROWS_AS(restrict_to_subspace(m, b3), NotInvariant);
}

TEST_CASE("determinant") {
    CHECK(determinant(ExactMatrix::identity(5)) == ExactScalar(1));
    ExactMatrix sw = ExactMatrix::identity(4);
    std::swap(sw.at(0, 0), sw.at(0, 1));
    std::swap(sw.at(1, 1), sw.at(1, 0));
    CHECK(determinant(sw) == ExactScalar(-1));
    ExactMatrix m(2, 2);
    m.at(0, 0) = ExactScalar(rat(1, 2));
    m.at(0, 1) = ExactScalar(3);
    m.at(1, 0) = ExactScalar(-1);
    m.at(1, 1) = ExactScalar(4);
    CHECK(determinant(m) == ExactScalar(Rat(5)));
}
