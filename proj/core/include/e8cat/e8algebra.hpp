#pragma once

#include "e8cat/linalg.hpp"
#include "e8cat/rootsys.hpp"
#include "e8cat/spin_module.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace e8cat {

struct CalibrationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Sparse vector of e8 = L + V in the fixed 248-element basis:
/// indices 0..119 are the blades e_i e_j (i < j over 0..15) of L = spin(16),
/// 120..247 are the monomials of the plus half-spin module V.
using SparseVec = std::vector<std::pair<int, ExactScalar>>;

constexpr int kDimL = 120;
constexpr int kDimV = 128;
constexpr int kDimE8 = 248;

int blade_index16(int i, int j);              // position of e_i e_j in 0..119
std::pair<int, int> blade_pair16(int index);  // inverse

struct SubalgebraBasis {
    std::string name;
    std::vector<ExactVector> basis;                  // vectors in the 248 basis
    std::shared_ptr<const SubspaceSolver> solver;    // built once

    size_t dim() const { return basis.size(); }
};

/// The concrete compact e8: structure constants over the L + V basis.
///   [A,B]   Clifford commutator of bivectors,
///   [A,u]   module action of the even element A,
///   [u,v]   the unique L-value with (A,[u,v])_L = (rho(A)u, v)_V.
/// The V inner product is scale * (standard dot on the monomial basis); the
/// Jacobi identity is degree-one homogeneous in that scale, so it constrains
/// the construction (it must vanish identically) but not the scale itself.
/// Positive scale gives the compact form; the build verifies Jacobi on a
/// mixed triple set and fixes scale = 1.
class E8Algebra {
  public:
    static const E8Algebra& instance();

    const SpinModule& module() const { return mod_; }
    const ExactScalar& v_scale() const { return v_scale_; }

    SparseVec bracket_basis(int i, int j) const;
    ExactVector bracket(const ExactVector& x, const ExactVector& y) const;

    ExactScalar inner(const ExactVector& x, const ExactVector& y) const;

    /// Jacobi residual [x_i,[x_j,x_k]] + [x_j,[x_k,x_i]] + [x_k,[x_i,x_j]]
    /// on basis triples.
    bool jacobi_zero(int i, int j, int k) const;

    /// ad(g) as a 248 x 248 matrix.
    ExactMatrix ad_matrix(const ExactVector& g) const;

    /// Exact centralizer: intersection of the kernels of ad over the
    /// generators; the result is bracket-closed.
    SubalgebraBasis centralizer_subalgebra(const std::string& name,
                                           const std::vector<ExactVector>& generators) const;

    bool is_bracket_closed(const SubalgebraBasis& sub) const;

    /// --- distinguished elements and subalgebras ---
    /// iA_gamma in the Cartan t (gamma any root, possibly half-integral).
    ExactVector cartan_vector(const RootVec& gamma) const;
    /// the 2-dimensional real root space r_gamma in the 248 basis
    std::vector<ExactVector> root_space(const RootE8& gamma) const;
    /// +/- eigenvectors of Ad(x) inside r_gamma
    std::vector<ExactVector> root_space_signed(const RootE8& gamma, int sign) const;

    std::vector<ExactVector> su2_basis(const RootE8& gamma) const;               // dim 3
    std::vector<ExactVector> su3_basis(const RootE8& a, const RootE8& b) const;  // dim 8
    std::vector<ExactVector> g2_embedded_basis() const;                          // dim 14

    /// Named subalgebra registry (built lazily, cached):
    ///   e7 = C(su2(alpha)), e6 = C(su3(alpha,beta)), f4 = C(g2),
    ///   su2_alpha, su2_alphabar, su3_alphabeta, g2, spin1_8, su2_e7,
    ///   spin_alpha_12, c_f4.
    const SubalgebraBasis& subalgebra(const std::string& name) const;

    ExactVector basis_vector(int index) const;

    /// 248 x 248 matrix of the automorphism induced by a unit even element of
    /// Cl(R^16): conjugation through the vector representation on L-blades,
    /// the half-spin action on V.
    ExactMatrix adjoint_of(const CliffordElem& c) const;
    /// Same, with the vector representation supplied by the caller (catalog
    /// encodings compute it directly instead of by Clifford conjugation).
    ExactMatrix adjoint_of_parts(const ExactMatrix& pi, const CliffordElem& c) const;

  private:
    E8Algebra();

    const SpinModule& mod_;
    ExactScalar v_scale_;
    std::vector<SignedPerm> drho_;  // action of each blade on the 128 plus coords
    // [m, n] for V basis m, n: list of (blade index, sign)
    std::vector<std::vector<std::pair<int, int>>> vv_;

    mutable std::map<std::string, SubalgebraBasis> subalgebras_;
    mutable std::map<RootVec, std::vector<ExactVector>> root_space_cache_;
    mutable std::mutex cache_mu_;

    void verify_construction() const;
};

}  // namespace e8cat
