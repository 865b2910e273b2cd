#include "e8cat/rootsys.hpp"

#include "e8cat/linalg.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <sstream>

namespace e8cat {

std::string RootVec::str() const {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < 8; ++i) {
        if (i) os << ",";
        if (twice[i] % 2 == 0)
            os << twice[i] / 2;
        else
            os << twice[i] << "/2";
    }
    os << ")";
    return os.str();
}

const std::vector<RootE8>& roots_e8() {
    static const std::vector<RootE8> roots = [] {
        std::vector<RootE8> r;
        for (int i = 0; i < 8; ++i)
            for (int j = i + 1; j < 8; ++j)
                for (int si : {1, -1})
                    for (int sj : {1, -1}) r.push_back(RootVec::integral(i, si, j, sj));
        for (int bits = 0; bits < 256; ++bits) {
            if (std::popcount(static_cast<unsigned>(bits)) % 2) continue;  // even # of -1
            std::array<int, 8> eps;
            for (int i = 0; i < 8; ++i) eps[i] = (bits >> i) & 1 ? -1 : 1;
            r.push_back(RootVec::half(eps));
        }
        if (r.size() != 240) throw std::logic_error("roots_e8: expected 240 roots");
        return r;
    }();
    return roots;
}

bool is_positive_root(const RootVec& v) {
    // integral: u_i + u_j or u_i - u_j with i < j; half-integral: eps_1 = +1
    for (int i = 0; i < 8; ++i) {
        if (v.twice[i] == 0) continue;
        return v.twice[i] > 0;
    }
    return false;
}

const std::vector<RootE8>& positive_roots_e8() {
    static const std::vector<RootE8> pos = [] {
        std::vector<RootE8> p;
        for (const auto& r : roots_e8())
            if (is_positive_root(r)) p.push_back(r);
        if (p.size() != 120) throw std::logic_error("positive_roots_e8: expected 120");
        return p;
    }();
    return pos;
}

bool is_root(const RootVec& v) {
    static const std::set<RootVec> all(roots_e8().begin(), roots_e8().end());
    return all.count(v) > 0;
}

long pairing(const RootE8& alpha, const RootVec& beta) {
    long num = alpha.dot4(beta);  // 4 (alpha, beta); (alpha,alpha) = 2
    if (num % 4 != 0) throw std::logic_error("pairing: non-integral pairing");
    return num / 4;
}

std::vector<RootE8> pairing_slice(const RootE8& alpha, long n) {
    std::vector<RootE8> out;
    for (const auto& b : roots_e8())
        if (pairing(alpha, b) == n) out.push_back(b);
    return out;
}

bool in_gamma_lattice(const RootVec& v) {
    // Gamma = 2 * L(E8); v in Gamma iff v/2 in L(E8), i.e. all coordinates
    // integral or all half-integral, with even coordinate sum.
    long sum = 0;
    int mod = ((v.twice[0] % 4) + 4) % 4;
    if (mod % 2 != 0) return false;
    for (int i = 0; i < 8; ++i) {
        int m = ((v.twice[i] % 4) + 4) % 4;
        if (m % 2 != 0 || m != mod) return false;
        sum += v.twice[i];
    }
    return sum % 8 == 0;
}

std::optional<RootE8> odd_pairing_witness(const RootVec& v) {
    for (const auto& lam : roots_e8()) {
        long num = lam.dot4(v);
        if (num % 4 != 0) continue;  // pairing not even integral; skip (v outside weight lattice)
        if ((num / 4) % 2 != 0) return lam;
    }
    return std::nullopt;
}

bool congruent_mod_gamma(const RootVec& a, const RootVec& b) { return in_gamma_lattice(a - b); }

RootE8 root_alpha() { return RootVec::integral(6, 1, 7, -1); }
RootE8 root_beta() { return RootVec::integral(5, 1, 6, -1); }

std::vector<RootVec> lambda_set(const RootE8& alpha, const RootE8& beta) {
    std::vector<RootVec> out;
    for (const auto& g : pairing_slice(alpha, 0))
        if (is_positive_root(g)) out.push_back(alpha + g);
    for (const auto& d : pairing_slice(alpha, 0)) {
        if (!is_positive_root(d) || pairing(beta, d) != 0) continue;
        out.push_back(beta + d);
        out.push_back(alpha + beta + d);
    }
    return out;
}

LatticeLemmaReport check_lattice_lemma(const RootE8& alpha, const RootE8& beta) {
    LatticeLemmaReport rep;
    auto lam = lambda_set(alpha, beta);
    rep.set_size = lam.size();
    for (size_t i = 0; i < lam.size(); ++i)
        for (size_t j = i + 1; j < lam.size(); ++j) {
            ++rep.pairs_checked;
            RootVec d = lam[i] - lam[j];
            if (odd_pairing_witness(d)) continue;  // primary criterion: not in Gamma
            ++rep.witness_fallbacks;
            if (in_gamma_lattice(d)) ++rep.collisions;
        }
    return rep;
}

namespace {

// E8 simple roots in this coordinate system (Bourbaki); they span the full
// lattice since E8 is unimodular.
const std::array<RootVec, 8>& lattice_basis() {
    static const std::array<RootVec, 8> basis = [] {
        std::array<RootVec, 8> b{};
        b[0] = RootVec::half({1, -1, -1, -1, -1, -1, -1, 1});
        b[1] = RootVec::integral(0, 1, 1, 1);
        b[2] = RootVec::integral(0, -1, 1, 1);
        b[3] = RootVec::integral(1, -1, 2, 1);
        b[4] = RootVec::integral(2, -1, 3, 1);
        b[5] = RootVec::integral(3, -1, 4, 1);
        b[6] = RootVec::integral(4, -1, 5, 1);
        b[7] = RootVec::integral(5, -1, 6, 1);
        return b;
    }();
    return basis;
}

// Inverse of the basis matrix over Q, computed once.
const ExactMatrix& lattice_basis_inverse() {
    static const ExactMatrix inv = [] {
        ExactMatrix m(8, 8);
        for (int c = 0; c < 8; ++c)
            for (int r = 0; r < 8; ++r) m.at(r, c) = ExactScalar(rat(lattice_basis()[c].twice[r], 2));
        ExactScalar det = determinant(m);
        if (det != ExactScalar(1) && det != ExactScalar(-1))
            throw std::logic_error("lattice basis is not unimodular");
        // invert by solving m X = I column by column through the kernel trick
        ExactMatrix inv_m(8, 8);
        for (int c = 0; c < 8; ++c) {
            ExactMatrix aug(8, 9);
            for (int r = 0; r < 8; ++r) {
                for (int k = 0; k < 8; ++k) aug.at(r, k) = m.at(r, k);
                aug.at(r, 8) = r == c ? ExactScalar(-1) : ExactScalar();
            }
            auto ker = kernel_basis(aug);
            ExactVector sol;
            for (const auto& kv : ker)
                if (!kv[8].is_zero()) {
                    sol = kv;
                    break;
                }
            if (sol.empty()) throw std::logic_error("lattice basis inversion failed");
            ExactScalar t = sol[8].inverse();
            for (int r = 0; r < 8; ++r) inv_m.at(r, c) = t * sol[r];
        }
        return inv_m;
    }();
    return inv;
}

}  // namespace

RootVec TorusInvolution::canonical() const {
    const ExactMatrix& inv = lattice_basis_inverse();
    std::array<long, 8> k{};
    for (int r = 0; r < 8; ++r) {
        ExactScalar c;
        for (int j = 0; j < 8; ++j) c += inv.at(r, j) * ExactScalar(rat(v.twice[j], 2));
        if (!c.is_rational() || c.a.get_den() != 1)
            throw std::logic_error("TorusInvolution: exponent is not a lattice point");
        k[r] = c.a.get_num().get_si() & 1;  // coordinates mod 2
    }
    RootVec out{};
    for (int r = 0; r < 8; ++r)
        if (k[r])
            for (int j = 0; j < 8; ++j) out.twice[j] += lattice_basis()[r].twice[j];
    return out;
}

std::vector<TorusInvolution> enumerate_torus_involutions(const RootE8& alpha,
                                                         const RootE8& beta) {
    std::vector<TorusInvolution> out;
    out.push_back(TorusInvolution{RootVec{}});
    for (const auto& g : positive_roots_e8()) out.push_back(TorusInvolution{g});
    for (const auto& v : lambda_set(alpha, beta)) out.push_back(TorusInvolution{v});
    return out;
}

AmbientSubsystem ambient_e8() {
    return AmbientSubsystem{"e8", 8, positive_roots_e8()};
}

AmbientSubsystem ambient_e7(const RootE8& alpha) {
    AmbientSubsystem a{"e7", 7, {}};
    for (const auto& g : pairing_slice(alpha, 0))
        if (is_positive_root(g)) a.positive_roots.push_back(g);
    return a;
}

AmbientSubsystem ambient_su2_e7(const RootE8& alpha) {
    AmbientSubsystem a = ambient_e7(alpha);
    a.name = "su2+e7";
    a.torus_rank = 8;
    a.positive_roots.push_back(is_positive_root(alpha) ? alpha : -alpha);
    return a;
}

AmbientSubsystem ambient_e6(const RootE8& alpha, const RootE8& beta) {
    AmbientSubsystem a{"e6", 6, {}};
    for (const auto& g : pairing_slice(alpha, 0))
        if (is_positive_root(g) && pairing(beta, g) == 0) a.positive_roots.push_back(g);
    return a;
}

size_t combinatorial_fixed_dim(const TorusInvolution& t, bool with_x,
                               const AmbientSubsystem& ambient) {
    if (with_x) return ambient.positive_roots.size();
    size_t even = 0;
    for (const auto& g : ambient.positive_roots)
        if (pairing(g, t.v) % 2 == 0) ++even;
    return static_cast<size_t>(ambient.torus_rank) + 2 * even;
}

size_t combinatorial_fixed_dim_spec(FixedDimShape shape, const AmbientSubsystem& ambient) {
    const RootE8 a = root_alpha();
    const RootE8 beta0 = RootVec::integral(0, 1, 1, -1);  // x_1 - x_2, in Sigma_{alpha,0}
    const RootE8 abar = RootVec::integral(6, 1, 7, 1);    // x_7 + x_8
    switch (shape) {
        case FixedDimShape::X:
            return combinatorial_fixed_dim(TorusInvolution{RootVec{}}, true, ambient);
        case FixedDimShape::TauAlpha:
            return combinatorial_fixed_dim(TorusInvolution{a}, false, ambient);
        case FixedDimShape::TauAlphaX:
            return combinatorial_fixed_dim(TorusInvolution{a}, true, ambient);
        case FixedDimShape::TauAlphaTauBeta:
            return combinatorial_fixed_dim(TorusInvolution{a + beta0}, false, ambient);
        case FixedDimShape::TauAlphaTauBetaX:
            return combinatorial_fixed_dim(TorusInvolution{a + beta0}, true, ambient);
        case FixedDimShape::PhiMinusOne:
            return combinatorial_fixed_dim(TorusInvolution{a + abar}, false, ambient);
    }
    throw UnsupportedSpec("combinatorial_fixed_dim_spec: unknown shape");
}

RootVec weyl_reflect(const RootE8& gamma, const RootVec& beta) {
    long p = pairing(gamma, beta);
    RootVec out = beta;
    for (int i = 0; i < 8; ++i) out.twice[i] -= static_cast<int>(p) * gamma.twice[i];
    return out;
}

namespace {

std::set<RootVec> weyl_orbit(const RootVec& start, const std::vector<RootE8>& reflections) {
    std::set<RootVec> orbit{start};
    std::vector<RootVec> frontier{start};
    while (!frontier.empty()) {
        std::vector<RootVec> next;
        for (const auto& v : frontier)
            for (const auto& g : reflections) {
                RootVec w = weyl_reflect(g, v);
                if (orbit.insert(w).second) next.push_back(w);
            }
        frontier = std::move(next);
    }
    return orbit;
}

bool orbit_equals_slice(const RootVec& seed, const std::vector<RootE8>& gens,
                        const std::vector<RootE8>& slice) {
    auto orbit = weyl_orbit(seed, gens);
    if (orbit.size() != slice.size()) return false;
    for (const auto& s : slice)
        if (!orbit.count(s)) return false;
    return true;
}

}  // namespace

WeylTransitivityReport weyl_transitivity_check(const RootE8& alpha, const RootE8& beta) {
    WeylTransitivityReport rep;
    auto e7_roots = pairing_slice(alpha, 0);
    std::vector<RootE8> e6_roots;
    for (const auto& g : e7_roots)
        if (pairing(beta, g) == 0) e6_roots.push_back(g);

    auto slice = [&](long na, long nb) {
        std::vector<RootE8> s;
        for (const auto& g : roots_e8())
            if (pairing(alpha, g) == na && pairing(beta, g) == nb) s.push_back(g);
        return s;
    };

    rep.e7_slices_transitive = true;
    for (long n : {0L, 1L, -1L}) {
        auto sl = pairing_slice(alpha, n);
        bool ok = orbit_equals_slice(sl.front(), e7_roots, sl);
        rep.orbit_sizes.emplace_back("Sigma_{a," + std::to_string(n) + "}", sl.size());
        rep.e7_slices_transitive = rep.e7_slices_transitive && ok;
    }

    rep.e6_slices_transitive = true;
    const std::pair<long, long> four[] = {{0, 0}, {0, 1}, {1, 0}, {1, -1}};
    for (auto [na, nb] : four) {
        auto sl = slice(na, nb);
        bool ok = !sl.empty() && orbit_equals_slice(sl.front(), e6_roots, sl);
        rep.orbit_sizes.emplace_back(
            "Sigma_{a," + std::to_string(na) + "} n Sigma_{b," + std::to_string(nb) + "}",
            sl.size());
        rep.e6_slices_transitive = rep.e6_slices_transitive && ok;
    }

    auto corner = slice(1, 1);
    rep.corner_identity = corner.size() == 1 && corner.front() == alpha + beta;
    return rep;
}

}  // namespace e8cat
