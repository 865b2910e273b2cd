#include "e8cat/spin_module.hpp"

#include <bit>
#include <stdexcept>

namespace e8cat {

SignedPerm SignedPerm::identity(int n) {
    SignedPerm p;
    p.to.resize(n);
    p.sign.assign(n, 1);
    for (int i = 0; i < n; ++i) p.to[i] = i;
    return p;
}

SignedPerm SignedPerm::after(const SignedPerm& g) const {
    SignedPerm r;
    int n = static_cast<int>(to.size());
    r.to.resize(n);
    r.sign.resize(n);
    for (int i = 0; i < n; ++i) {
        r.to[i] = to[g.to[i]];
        r.sign[i] = g.sign[i] * sign[g.to[i]];
    }
    return r;
}

bool SignedPerm::is_diagonal() const {
    for (size_t i = 0; i < to.size(); ++i)
        if (to[i] != static_cast<int>(i)) return false;
    return true;
}

namespace {

// j(e_i) on O + O in the 16-monomial basis: p < 8 is (e_p, 0), p >= 8 is
// (0, e_{p-8}).
SignedPerm make_j(int i) {
    SignedPerm p;
    p.to.resize(16);
    p.sign.resize(16);
    for (int q = 0; q < 16; ++q) {
        if (q < 8) {
            // (e_q, 0) -> (0, -conj(e_i) e_q)
            if (i == 0) {
                p.to[q] = 8 + q;
                p.sign[q] = -1;
            } else {
                BasisProduct pr = oct_basis_mul(i, q);
                p.to[q] = 8 + pr.index;
                p.sign[q] = pr.sign;  // -conj(e_i) = e_i for imaginary e_i
            }
        } else {
            // (0, e_{q-8}) -> (e_i e_{q-8}, 0)
            if (i == 0) {
                p.to[q] = q - 8;
                p.sign[q] = 1;
            } else {
                BasisProduct pr = oct_basis_mul(i, q - 8);
                p.to[q] = pr.index;
                p.sign[q] = pr.sign;
            }
        }
    }
    return p;
}

}  // namespace

SpinModule::SpinModule() {
    for (int i = 0; i < 8; ++i) j8_[i] = make_j(i);

    // Volume of Cl(8) on O + O; must be diagonal with the two copies as
    // eigenspaces (each copy is irreducible under the even part).
    SignedPerm vol8 = SignedPerm::identity(16);
    for (int i = 0; i < 8; ++i) vol8 = vol8.after(j8_[i]);
    if (!vol8.is_diagonal()) throw std::logic_error("SpinModule: vol_8 not diagonal");
    for (int i = 0; i < 16; ++i) jsign_[i] = vol8.sign[i];
    for (int i = 0; i < 8; ++i) {
        if (jsign_[i] != 1 || jsign_[8 + i] != -1)
            throw std::logic_error("SpinModule: unexpected chirality layout of O + O");
    }

    // Cl(16) generators on the 256 monomials; flip = diag(1, -1) grades O+O.
    for (int g = 0; g < 16; ++g) {
        SignedPerm p;
        p.to.resize(256);
        p.sign.resize(256);
        for (int pq = 0; pq < 256; ++pq) {
            int a = pq / 16, b = pq % 16;
            if (g < 8) {
                p.to[pq] = tensor_index(j8_[g].to[a], b);
                p.sign[pq] = j8_[g].sign[a];
            } else {
                int flip = a < 8 ? 1 : -1;
                p.to[pq] = tensor_index(a, j8_[g - 8].to[b]);
                p.sign[pq] = flip * j8_[g - 8].sign[b];
            }
        }
        gen_[g] = p;
    }

    SignedPerm omega = SignedPerm::identity(256);
    for (int g = 0; g < 16; ++g) omega = omega.after(gen_[g]);
    if (!omega.is_diagonal()) throw std::logic_error("SpinModule: volume not diagonal");
    plus_pos_.fill(-1);
    for (int t = 0; t < 256; ++t) {
        omega_sign_[t] = omega.sign[t];
        if (omega.sign[t] == 1) {
            plus_pos_[t] = static_cast<int>(plus_idx_.size());
            plus_idx_.push_back(t);
        }
    }
    if (plus_idx_.size() != 128) throw std::logic_error("SpinModule: dim Delta_16^+ != 128");
}

const SpinModule& SpinModule::instance() {
    static SpinModule m;
    return m;
}

SignedPerm SpinModule::blade_perm(BladeMask mask) const {
    SignedPerm acc = SignedPerm::identity(256);
    for (int i = 0; i < 16; ++i)
        if (mask & (1u << i)) acc = acc.after(gen_[i]);
    return acc;
}

ExactMatrix SpinModule::half_spin_matrix(const CliffordElem& g) const {
    if (g.dim() != 16) throw DimensionMismatch("half_spin_matrix: need Cl(R^16)");
    if (g.parity() != 1) throw NotEven("half_spin_matrix: element not even");
    ExactMatrix m(128, 128);
    for (const auto& [mask, coeff] : g.terms()) {
        SignedPerm p = blade_perm(mask);
        for (int col = 0; col < 128; ++col) {
            int src = plus_idx_[col];
            int dst = p.to[src];
            int row = plus_pos_[dst];
            if (row < 0) throw std::logic_error("half_spin_matrix: chirality not preserved");
            ExactScalar v = coeff;
            if (p.sign[src] < 0) v = -v;
            m.at(row, col) += v;
        }
    }
    return m;
}

namespace {

// rho_8 of an even Cl(8) element on one copy of O inside O + O.
LinearMap8 half_spin8(const std::array<SignedPerm, 8>& j8, const CliffordElem& g, int offset) {
    if (g.dim() != 8) throw DimensionMismatch("half_spin8: need Cl(R^8)");
    if (g.parity() != 1) throw NotEven("half_spin8: element not even");
    LinearMap8 m(8, 8);
    for (const auto& [mask, coeff] : g.terms()) {
        SignedPerm p = SignedPerm::identity(16);
        for (int i = 0; i < 8; ++i)
            if (mask & (1u << i)) p = p.after(j8[i]);
        for (int col = 0; col < 8; ++col) {
            int dst = p.to[offset + col];
            if (dst / 8 != offset / 8) throw std::logic_error("half_spin8: copy not preserved");
            ExactScalar v = coeff;
            if (p.sign[offset + col] < 0) v = -v;
            m.at(dst % 8, col) += v;
        }
    }
    return m;
}

}  // namespace

LinearMap8 SpinModule::half_spin8_plus(const CliffordElem& g) const {
    return half_spin8(j8_, g, 0);  // copy 1 carries vol_8 = +1
}

LinearMap8 SpinModule::half_spin8_minus(const CliffordElem& g) const {
    return half_spin8(j8_, g, 8);
}

ExactMatrix SpinModule::vector_rep_matrix(const CliffordElem& g, int n) const {
    CliffordElem grev = g.reversed();
    CliffordElem norm = clifford_mul(g, grev);
    if (norm.term_count() != 1 || norm.terms()[0].first != 0)
        throw NotInvertible("vector_rep_matrix: g reverse(g) is not scalar");
    ExactScalar inv = norm.terms()[0].second.inverse();
    ExactMatrix m(n, n);
    for (int k = 0; k < n; ++k) {
        CliffordElem img =
            inv * clifford_mul(clifford_mul(g, CliffordElem::blade(g.dim(), 1u << k)), grev);
        for (const auto& [mask, coeff] : img.terms()) {
            if (std::popcount(mask) != 1)
                throw std::logic_error("vector_rep_matrix: image not grade one");
            int row = std::countr_zero(mask);
            if (row >= n) throw std::logic_error("vector_rep_matrix: image leaves R^n");
            m.at(row, k) = coeff;
        }
    }
    return m;
}

bool SpinModule::generators_ok() const {
    for (int i = 0; i < 16; ++i)
        for (int j = 0; j < 16; ++j) {
            SignedPerm ij = gen_[i].after(gen_[j]);
            SignedPerm ji = gen_[j].after(gen_[i]);
            for (int t = 0; t < 256; ++t) {
                int lhs_to = ij.to[t], rhs_to = ji.to[t];
                int lhs_sign = ij.sign[t], rhs_sign = ji.sign[t];
                if (i == j) {
                    // e_i^2 = -1
                    if (lhs_to != t || lhs_sign != -1) return false;
                } else {
                    if (lhs_to != rhs_to || lhs_sign != -rhs_sign) return false;
                }
            }
        }
    return true;
}

}  // namespace e8cat
