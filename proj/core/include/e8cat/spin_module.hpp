#pragma once

#include "e8cat/clifford.hpp"
#include "e8cat/octonion.hpp"

#include <array>
#include <memory>
#include <vector>

namespace e8cat {

/// Signed permutation of basis vectors: x_i -> sign[i] * x_{to[i]}.
struct SignedPerm {
    std::vector<int> to;
    std::vector<int> sign;

    static SignedPerm identity(int n);
    /// Composition as operators: (f then-after g)(x) = f(g(x)).
    SignedPerm after(const SignedPerm& g) const;
    bool is_diagonal() const;
};

/// Faithful real 256-dimensional module of Cl(R^16), built as the tensor
/// square of the octonion model of Cl(R^8) on O + O:
///
///   j(v)(x, y) = (v y, -conj(v) x),
///
/// which satisfies j(v)^2 = -|v|^2. Generators e_0..e_7 act as j(e_i) (x) 1
/// and e_8..e_15 as flip (x) j(e_{i-8}), where flip = diag(1, -1) on O + O.
/// Everything is a signed permutation of the monomial basis; the volume
/// element acts diagonally, and its +1 eigenspace is the 128-dimensional
/// half-spin module Delta_16^+ on which e_0...e_15 acts trivially, matching
/// the kernel of the adjoint-plus-spin map into E8.
class SpinModule {
  public:
    static const SpinModule& instance();

    /// --- Cl(R^8) layer (octonion model, 16-dim) ---
    /// Action of an even element of Cl(R^8) on the half-spin summands
    /// O^+ / O^-, as maps on O. Throws NotEven on odd or mixed input.
    LinearMap8 half_spin8_plus(const CliffordElem& g) const;
    LinearMap8 half_spin8_minus(const CliffordElem& g) const;

    /// --- Cl(R^16) layer (256-dim) ---
    int n() const { return 16; }
    const std::vector<int>& plus_indices() const { return plus_idx_; }  // 128 entries
    int plus_pos(int tensor_index) const { return plus_pos_[tensor_index]; }

    /// Signed permutation of the 256 monomials realizing a basis blade.
    SignedPerm blade_perm(BladeMask mask) const;

    /// Matrix of rho(g) restricted to the plus basis (128 x 128); g must be
    /// even so the chirality splitting is preserved.
    ExactMatrix half_spin_matrix(const CliffordElem& g) const;

    /// Vector representation u -> g u g^{-1} on R^n for unit Spin-like g
    /// (any dimension up to 16); throws NotInvertible unless g reverse(g) is
    /// a nonzero scalar.
    ExactMatrix vector_rep_matrix(const CliffordElem& g, int n) const;

    /// Generator anticommutation relations as matrices; used by tests.
    bool generators_ok() const;

    /// Tensor-index helpers: index = 16*p + q over the two O+O factors.
    static int tensor_index(int p, int q) { return 16 * p + q; }

    /// Signs of the Cl(8) volume element on the 16 monomials of O + O
    /// (diagonal); +1 entries form the Delta_8^+ copy.
    const std::array<int, 16>& vol8_signs() const { return jsign_; }

  private:
    SpinModule();

    std::array<SignedPerm, 8> j8_;     // Cl(8) generators on O + O
    std::array<int, 16> jsign_;        // vol_8 diagonal signs
    std::array<SignedPerm, 16> gen_;   // Cl(16) generators on 256
    std::array<int, 256> omega_sign_;  // volume diagonal signs
    std::vector<int> plus_idx_;
    std::array<int, 256> plus_pos_;
};

}  // namespace e8cat
