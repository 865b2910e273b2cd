#pragma once

#include "e8cat/matrix.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace e8cat {

struct DimensionMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotEven : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotInvertible : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Index set of a basis blade of Cl(R^n), n <= 16, as a bitmask.
using BladeMask = uint32_t;

/// Sign and support of the product of two basis blades under
/// e_i e_j + e_j e_i = -2 delta_ij. The resulting support is the symmetric
/// difference; the sign counts transpositions plus contractions.
int blade_mul_sign(BladeMask a, BladeMask b);

/// Sign of reversing a blade of the given grade: (-1)^{k(k-1)/2}.
int reverse_sign(int grade);

/// Sparse element of Cl(R^n) with coefficients in Q(v2). Terms are kept
/// sorted by mask with no explicit zeros.
class CliffordElem {
  public:
    explicit CliffordElem(int dim = 16) : dim_(dim) {}

    static CliffordElem scalar(int dim, ExactScalar v);
    static CliffordElem one(int dim) { return scalar(dim, ExactScalar(1)); }
    static CliffordElem blade(int dim, BladeMask mask, ExactScalar coeff = ExactScalar(1));

    int dim() const { return dim_; }
    const std::vector<std::pair<BladeMask, ExactScalar>>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    void add_term(BladeMask mask, const ExactScalar& coeff);
    ExactScalar coeff(BladeMask mask) const;

    /// +1 if all terms even grade, -1 if all odd, 0 if mixed or zero.
    int parity() const;

    CliffordElem operator-() const;
    friend CliffordElem operator+(const CliffordElem& x, const CliffordElem& y);
    friend CliffordElem operator-(const CliffordElem& x, const CliffordElem& y);
    friend CliffordElem operator*(const ExactScalar& s, const CliffordElem& y);

    bool operator==(const CliffordElem& o) const { return dim_ == o.dim_ && terms_ == o.terms_; }
    bool operator!=(const CliffordElem& o) const { return !(*this == o); }

    /// Deterministic total order, used for canonical group representatives.
    bool lex_less(const CliffordElem& o) const;

    CliffordElem reversed() const;

    std::string str() const;

  private:
    int dim_;
    std::vector<std::pair<BladeMask, ExactScalar>> terms_;
};

CliffordElem clifford_mul(const CliffordElem& a, const CliffordElem& b);

/// g * reverse(g) for unit Spin-like elements must be the scalar 1.
bool is_unit_spin(const CliffordElem& g);

/// cos(t*pi/4) and sin(t*pi/4) as elements of Q(v2).
ExactScalar cos_quarter(long t);
ExactScalar sin_quarter(long t);

/// Product of factors cos(theta_k/2) + sin(theta_k/2) e_{a_k} e_{b_k} with
/// theta_k = quarter_turns[k] * pi/2. One turn count per listed pair.
CliffordElem torus_element(int dim, const std::vector<long>& quarter_turns,
                           const std::vector<std::pair<int, int>>& pairing);

/// The Clifford form of gamma_i^{a,b} inside Cl(R^8) (the blade table), e.g.
/// gamma_1^{0,0} = -e_4 e_5 e_6 e_7. `shift` moves the support, used to place
/// the element in the second Spin(8) factor of Cl(R^16).
CliffordElem gamma_clifford(int i, int a, int b, int dim = 8, int shift = 0);

}  // namespace e8cat
