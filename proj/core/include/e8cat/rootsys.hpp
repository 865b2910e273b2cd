#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace e8cat {

/// Vector of the E8 weight space with coordinates in (1/2)Z, stored doubled
/// so everything is integer arithmetic. Roots have squared length 2, i.e.
/// doubled coordinates of squared length 8.
struct RootVec {
    std::array<int, 8> twice{};  // 2x the coordinates

    bool operator==(const RootVec& o) const { return twice == o.twice; }
    bool operator!=(const RootVec& o) const { return !(*this == o); }
    bool operator<(const RootVec& o) const { return twice < o.twice; }

    RootVec operator+(const RootVec& o) const {
        RootVec r;
        for (int i = 0; i < 8; ++i) r.twice[i] = twice[i] + o.twice[i];
        return r;
    }
    RootVec operator-(const RootVec& o) const {
        RootVec r;
        for (int i = 0; i < 8; ++i) r.twice[i] = twice[i] - o.twice[i];
        return r;
    }
    RootVec operator-() const {
        RootVec r;
        for (int i = 0; i < 8; ++i) r.twice[i] = -twice[i];
        return r;
    }
    bool is_zero() const {
        for (int v : twice)
            if (v) return false;
        return true;
    }

    /// 4 <(.,.)>: inner products of roots are integers, times 4 here.
    long dot4(const RootVec& o) const {
        long s = 0;
        for (int i = 0; i < 8; ++i) s += static_cast<long>(twice[i]) * o.twice[i];
        return s;
    }

    static RootVec integral(int i, int si, int j, int sj) {
        RootVec r;
        r.twice[i] = 2 * si;
        r.twice[j] = 2 * sj;
        return r;
    }
    static RootVec half(const std::array<int, 8>& eps) {
        RootVec r;
        for (int i = 0; i < 8; ++i) r.twice[i] = eps[i];
        return r;
    }

    std::string str() const;
};

using RootE8 = RootVec;

/// All 240 roots: 112 integral +-u_i +-u_j plus 128 half-integral with an
/// even number of minus signs.
const std::vector<RootE8>& roots_e8();
/// The 120 positive roots under the order with epsilon_1 = 1.
const std::vector<RootE8>& positive_roots_e8();
bool is_root(const RootVec& v);
bool is_positive_root(const RootVec& v);

/// Pairing 2(alpha,beta)/(alpha,alpha) = (alpha,beta) for E8 (simply laced,
/// (alpha,alpha) = 2).
long pairing(const RootE8& alpha, const RootVec& beta);

/// Sigma_{alpha,n}: roots beta with pairing(alpha, beta) = n.
std::vector<RootE8> pairing_slice(const RootE8& alpha, long n);

/// Membership in Gamma = span_Z{2 gamma : gamma in Sigma} = 2 * (E8 lattice).
bool in_gamma_lattice(const RootVec& v);
/// The paper's sufficient criterion for v not in Gamma: some root lambda has
/// (lambda, v) odd. Returns such a witness root if one exists.
std::optional<RootE8> odd_pairing_witness(const RootVec& v);

bool congruent_mod_gamma(const RootVec& a, const RootVec& b);

RootE8 root_alpha();  // x_7 - x_8
RootE8 root_beta();   // x_6 - x_7

/// Lambda_{alpha,beta} = {alpha + gamma} u {beta + delta, alpha + beta + delta}.
std::vector<RootVec> lambda_set(const RootE8& alpha, const RootE8& beta);

struct LatticeLemmaReport {
    size_t set_size = 0;
    size_t pairs_checked = 0;
    size_t collisions = 0;
    size_t witness_fallbacks = 0;  // pairs decided by full membership, not the parity witness
    bool ok() const { return collisions == 0; }
};
LatticeLemmaReport check_lattice_lemma(const RootE8& alpha, const RootE8& beta);

/// Order-two element of the maximal torus: exp(pi i A_v) stored by its
/// exponent vector v, an E8 lattice point determined modulo Gamma (= 2L).
struct TorusInvolution {
    RootVec v;

    bool same_class(const TorusInvolution& o) const { return congruent_mod_gamma(v, o.v); }
    /// Canonical representative of v mod 2L: integer coordinates k of v in a
    /// fixed lattice basis, reduced mod 2 and mapped back.
    RootVec canonical() const;
    bool is_identity_class() const { return in_gamma_lattice(v); }
};

/// The 256 classes {0} u Sigma^+ u {gamma+alpha} u {delta+beta, delta+alpha+beta}.
std::vector<TorusInvolution> enumerate_torus_involutions(const RootE8& alpha,
                                                         const RootE8& beta);

/// Root subsystem descriptor for the combinatorial fixed-dimension counts.
struct AmbientSubsystem {
    std::string name;
    int torus_rank;
    std::vector<RootE8> positive_roots;
};

AmbientSubsystem ambient_e8();
AmbientSubsystem ambient_e7(const RootE8& alpha);                       // Sigma_{alpha,0}
AmbientSubsystem ambient_su2_e7(const RootE8& alpha);                   // {alpha} u Sigma_{alpha,0}
AmbientSubsystem ambient_e6(const RootE8& alpha, const RootE8& beta);   // Sigma_{a,0} n Sigma_{b,0}

/// dim F^+(Ad(exp(pi i A_v) x^eps), ambient): the torus contributes its rank
/// unless killed by x; each root pair contributes 2 when (gamma, v) is even
/// and 0 when odd; with x present each pair contributes exactly 1 (x fixes
/// one of r_gamma^+/-).
size_t combinatorial_fixed_dim(const TorusInvolution& t, bool with_x,
                               const AmbientSubsystem& ambient);

/// The six displayed formula shapes. Throws UnsupportedSpec for anything
/// else; the general entry point above covers arbitrary torus classes.
struct UnsupportedSpec : std::runtime_error {
    using std::runtime_error::runtime_error;
};
enum class FixedDimShape {
    X,                 // Ad(x)
    TauAlpha,          // Ad(tau_alpha)
    TauAlphaX,         // Ad(tau_alpha x)
    TauAlphaTauBeta,   // Ad(tau_alpha tau_beta), beta in Sigma_{alpha,0}
    TauAlphaTauBetaX,  // Ad(tau_alpha tau_beta x)
    PhiMinusOne,       // Ad(tau_alpha tau_alphabar) = Ad(phi(-1))
};
size_t combinatorial_fixed_dim_spec(FixedDimShape shape, const AmbientSubsystem& ambient);

/// Weyl reflection s_gamma(beta) = beta - (beta, gamma) gamma.
RootVec weyl_reflect(const RootE8& gamma, const RootVec& beta);

struct WeylTransitivityReport {
    bool e7_slices_transitive = false;   // W(Sigma_{a,0}) on Sigma_{a,0}, Sigma_{a,+-1}
    bool e6_slices_transitive = false;   // W(Sigma_{a,0} n Sigma_{b,0}) on the four slices
    bool corner_identity = false;        // Sigma_{a,1} n Sigma_{b,1} = {a+b}
    std::vector<std::pair<std::string, size_t>> orbit_sizes;
    bool ok() const { return e7_slices_transitive && e6_slices_transitive && corner_identity; }
};
WeylTransitivityReport weyl_transitivity_check(const RootE8& alpha, const RootE8& beta);

}  // namespace e8cat
