#pragma once

#include "e8cat/linalg.hpp"
#include "e8cat/matrix.hpp"

#include <array>
#include <utility>
#include <vector>

namespace e8cat {

struct NotSkew : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Octonion with exact coefficients on the basis e_0..e_7; e_0 is the unit.
struct Octonion {
    std::array<ExactScalar, 8> c;

    Octonion() = default;
    static Octonion basis(int i) {
        Octonion x;
        x.c[i] = ExactScalar(1);
        return x;
    }
    static Octonion one() { return basis(0); }

    bool operator==(const Octonion& o) const { return c == o.c; }
    bool operator!=(const Octonion& o) const { return !(*this == o); }
    Octonion operator-() const {
        Octonion x;
        for (int i = 0; i < 8; ++i) x.c[i] = -c[i];
        return x;
    }
    friend Octonion operator+(const Octonion& x, const Octonion& y) {
        Octonion z;
        for (int i = 0; i < 8; ++i) z.c[i] = x.c[i] + y.c[i];
        return z;
    }
    friend Octonion operator-(const Octonion& x, const Octonion& y) {
        Octonion z;
        for (int i = 0; i < 8; ++i) z.c[i] = x.c[i] - y.c[i];
        return z;
    }
    friend Octonion operator*(const ExactScalar& s, const Octonion& y) {
        Octonion z;
        for (int i = 0; i < 8; ++i) z.c[i] = s * y.c[i];
        return z;
    }
};

/// Signed index of a basis product: e_i e_j = sign * e_{index}.
struct BasisProduct {
    int index;
    int sign;
};

/// Basis multiplication table. Derived once from the displayed expansions of
/// the seven maps L_{e_i} = 2 F_{0i} in the E_{ab} basis; the derivation is
/// re-checked on first use (anticommutativity, e_i^2 = -1, norm
/// multiplicativity on all basis pairs).
BasisProduct oct_basis_mul(int i, int j);

Octonion oct_mul(const Octonion& x, const Octonion& y);
Octonion oct_conj(const Octonion& x);

/// Returns (conjugate of x, <x,y>). The inner product is computed both as the
/// coordinate dot product and as the scalar part of (x conj(y) + y conj(x))/2;
/// the two must agree exactly.
std::pair<Octonion, ExactScalar> oct_conj_inner(const Octonion& x, const Octonion& y);

ExactScalar oct_norm2(const Octonion& x);

/// 8x8 exact matrices acting on octonion coordinates.
using LinearMap8 = ExactMatrix;

LinearMap8 left_mul_map(const Octonion& a);    // L_a
LinearMap8 right_mul_map(const Octonion& a);   // R_a
LinearMap8 tee_map(const Octonion& a);         // T_a = L_a + R_a

/// Skew so(8) generator: E_ij(e_i) = e_j, E_ij(e_j) = -e_i.
LinearMap8 so8_E(int i, int j);

Octonion apply_map(const LinearMap8& m, const Octonion& x);

/// The diagonal involutions gamma_0..gamma_7 of the octonion basis; each
/// fixes a four-dimensional subalgebra containing e_0 and negates its
/// complement. gamma_0 is the identity.
LinearMap8 gamma_element(int i);
/// Signs of gamma_i on the basis, +1/-1 per coordinate.
std::array<int, 8> gamma_signs(int i);

/// G2 membership: orthogonal, fixes e_0, and multiplicative on all 64 basis
/// pairs.
bool is_g2(const LinearMap8& f);

enum class TrialityKind { alpha, beta, gamma };

/// The outer automorphisms of so(8):
///   alpha(X)(a) = conj(X(conj a)),
///   beta(E_ij) = F_ij extended linearly,
///   gamma = beta o alpha.
/// Throws NotSkew unless X + X^T = 0.
LinearMap8 so8_triality_map(TrialityKind kind, const LinearMap8& x);

/// Given X1 in so(8), the unique (X2, X3) with (X1 u) v + u (X2 v) = X3(uv).
/// Computed two ways: by solving the 512-equation linear system directly and
/// through (gamma(X1), beta(X1)); both routes must agree.
std::pair<LinearMap8, LinearMap8> solve_triality(const LinearMap8& x1);

/// 14-dimensional space of derivations of the octonions inside so(8), i.e.
/// the fixed space of beta and gamma: the Lie algebra g2.
std::vector<LinearMap8> g2_basis();

bool is_orthogonal(const ExactMatrix& m);
bool is_skew(const ExactMatrix& m);

}  // namespace e8cat
