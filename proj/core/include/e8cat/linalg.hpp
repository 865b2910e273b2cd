#pragma once

#include "e8cat/matrix.hpp"

#include <stdexcept>
#include <vector>

namespace e8cat {

struct NotInvolution : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotInvariant : std::runtime_error {
    using std::runtime_error::runtime_error;
};

size_t rank(const ExactMatrix& m);

ExactScalar determinant(const ExactMatrix& m);

/// Basis of the right kernel; vectors are linearly independent and satisfy
/// M v = 0, with count = cols - rank.
std::vector<ExactVector> kernel_basis(const ExactMatrix& m);

struct FixedDims {
    size_t d_plus;
    size_t d_minus;
};

/// Eigenspace dimensions of an involution: d_plus = dim ker(M - I),
/// d_minus = dim ker(M + I). The involution precondition M^2 = I is enforced
/// through the equivalent certificate d_plus + d_minus = n (the two
/// eigenspaces fill the space exactly when the matrix squares to identity).
FixedDims fixed_space_dims(const ExactMatrix& m);

/// dim ker(M - I) alone, valid when the involution property of M has already
/// been certified elsewhere (e.g. at the group-element level).
size_t fixed_dim_plus(const ExactMatrix& m);

/// Coordinate solver for a fixed subspace, built once per basis. Internally
/// keeps a Gram-Schmidt orthogonalization of the basis (exact, without
/// normalization); input coordinates are still reported in the caller's
/// original basis.
class SubspaceSolver {
  public:
    explicit SubspaceSolver(std::vector<ExactVector> basis);

    size_t dim() const { return basis_.size(); }
    size_t ambient_dim() const { return ambient_; }
    const std::vector<ExactVector>& basis() const { return basis_; }

    /// Coordinates of v in the original basis; throws NotInvariant if v is
    /// not in the span.
    ExactVector coordinates(const ExactVector& v) const;

    bool contains(const ExactVector& v) const;

  private:
    size_t ambient_;
    std::vector<ExactVector> basis_;        // original vectors
    std::vector<ExactVector> ortho_;        // Gram-Schmidt images
    std::vector<ExactScalar> ortho_self_;   // <o_k, o_k>
    std::vector<ExactVector> ortho_in_basis_;  // o_k in original-basis coords
};

/// Matrix of M restricted to span(basis), in the coordinates of the given
/// basis. Throws NotInvariant if some M b leaves the span.
ExactMatrix restrict_to_subspace(const ExactMatrix& m, const std::vector<ExactVector>& basis);
ExactMatrix restrict_to_subspace(const ExactMatrix& m, const SubspaceSolver& solver);

}  // namespace e8cat
