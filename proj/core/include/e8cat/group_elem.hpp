#pragma once

#include "e8cat/clifford.hpp"
#include "e8cat/e8algebra.hpp"
#include "e8cat/rootsys.hpp"
#include "e8cat/triality.hpp"

#include <optional>
#include <string>

namespace e8cat {

struct MixedEncoding : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct GroupNotInvolution : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Catalog group element of E8 = Aut(e8). Internally a unit even element of
/// Cl(R^16) determined modulo the kernel {1, omega} of the adjoint-plus-spin
/// map; the canonical representative is the lex-smaller of {c, omega c}.
/// Carries the psi-pair / torus-exponent encodings when they exist.
class E8GroupElem {
  public:
    struct PsiPair {
        GammaLabel first, second;  // first normalized to (a,b) = (0,0)
    };
    struct TorusX {
        RootVec v;  // exponent, an E8 lattice point mod Gamma (canonical rep)
        bool x_flag;
    };

    static E8GroupElem identity();
    static E8GroupElem psi(int i, int a, int b, int j, int c, int d);
    static E8GroupElem tau(const RootVec& v, bool with_x = false);
    static E8GroupElem x();
    static E8GroupElem phi_minus_one();

    const CliffordElem& clifford() const { return c_; }
    const std::optional<PsiPair>& psi_encoding() const { return psi_; }
    const std::optional<TorusX>& torus_encoding() const { return torus_; }
    const std::string& display() const { return display_; }

    bool operator==(const E8GroupElem& o) const { return c_ == o.c_; }
    bool operator!=(const E8GroupElem& o) const { return !(*this == o); }
    bool operator<(const E8GroupElem& o) const { return c_.lex_less(o.c_); }

    /// Stable text key for maps and reports.
    std::string key() const { return c_.str(); }

    bool is_identity() const;
    /// g^2 = e in E8, i.e. c^2 in {1, omega} in the Clifford algebra.
    bool is_involution() const;

    E8GroupElem inverse() const;

    /// Vector representation pi(g) on R^16. Catalog encodings make this a
    /// direct rotation/sign computation; the generic Clifford conjugation is
    /// the fallback.
    ExactMatrix pi16() const;

    /// 248 x 248 matrix of Ad(g) on e8 (block diagonal over L + V).
    ExactMatrix adjoint_matrix() const;

    friend E8GroupElem elem_mul(const E8GroupElem& g, const E8GroupElem& h);

    /// Multiplication through the resolved Clifford form, usable for any pair
    /// of elements (tests cross-check it against the encoding-level product).
    friend E8GroupElem elem_mul_resolved(const E8GroupElem& g, const E8GroupElem& h);

  private:
    E8GroupElem() : c_(16) {}
    static E8GroupElem from_clifford(CliffordElem c);
    void canonicalize();
    void derive_encodings();

    CliffordElem c_;
    std::optional<PsiPair> psi_;
    std::optional<TorusX> torus_;
    std::string display_;
};

/// Antipodality of two involutions: s_g(h) = h iff gh = hg. Decided in the
/// group encoding (torus exponents / gamma triples / Clifford commutation),
/// never through 248 x 248 matrices.
bool is_antipodal_pair(const E8GroupElem& g, const E8GroupElem& h);

}  // namespace e8cat
