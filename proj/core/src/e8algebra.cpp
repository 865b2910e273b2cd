#include "e8cat/e8algebra.hpp"

#include "e8cat/rng.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace e8cat {

int blade_index16(int i, int j) { return i * 16 - i * (i + 1) / 2 + (j - i - 1); }

std::pair<int, int> blade_pair16(int index) {
    for (int i = 0; i < 16; ++i) {
        int row = 15 - i;
        if (index < row) return {i, i + 1 + index};
        index -= row;
    }
    throw std::out_of_range("blade_pair16");
}

E8Algebra::E8Algebra() : mod_(SpinModule::instance()), v_scale_(1) {
    // dRho: every blade acts on the plus monomials by a signed permutation.
    drho_.resize(kDimL);
    vv_.resize(kDimV * kDimV);
    for (int k = 0; k < kDimL; ++k) {
        auto [i, j] = blade_pair16(k);
        SignedPerm full = mod_.blade_perm((1u << i) | (1u << j));
        SignedPerm r;
        r.to.resize(kDimV);
        r.sign.resize(kDimV);
        for (int p = 0; p < kDimV; ++p) {
            int src = mod_.plus_indices()[p];
            int dst = full.to[src];
            int pos = mod_.plus_pos(dst);
            if (pos < 0) throw std::logic_error("E8Algebra: blade action leaves Delta+");
            r.to[p] = pos;
            r.sign[p] = full.sign[src];
        }
        drho_[k] = std::move(r);
        for (int m = 0; m < kDimV; ++m)
            vv_[m * kDimV + drho_[k].to[m]].push_back({k, drho_[k].sign[m]});
    }
    verify_construction();
}

const E8Algebra& E8Algebra::instance() {
    static E8Algebra a;
    return a;
}

SparseVec E8Algebra::bracket_basis(int a, int b) const {
    SparseVec out;
    const bool aL = a < kDimL, bL = b < kDimL;
    if (aL && bL) {
        auto [i, j] = blade_pair16(a);
        auto [k, l] = blade_pair16(b);
        BladeMask ma = (1u << i) | (1u << j), mb = (1u << k) | (1u << l);
        int shared = std::popcount(ma & mb);
        if (shared != 1) return out;  // equal or disjoint bivectors commute
        int s = blade_mul_sign(ma, mb);
        BladeMask mc = ma ^ mb;
        int hi = 31 - std::countl_zero(mc);
        int lo = std::countr_zero(mc);
        out.push_back({blade_index16(lo, hi), ExactScalar(2 * s)});
        return out;
    }
    if (aL && !bL) {
        int m = b - kDimL;
        out.push_back({kDimL + drho_[a].to[m], ExactScalar(drho_[a].sign[m])});
        return out;
    }
    if (!aL && bL) {
        int m = a - kDimL;
        out.push_back({kDimL + drho_[b].to[m], ExactScalar(-drho_[b].sign[m])});
        return out;
    }
    const auto& lst = vv_[(a - kDimL) * kDimV + (b - kDimL)];
    out.reserve(lst.size());
    for (auto [k, s] : lst) out.push_back({k, ExactScalar(s) * v_scale_});
    return out;
}

ExactVector E8Algebra::bracket(const ExactVector& x, const ExactVector& y) const {
    if (x.size() != kDimE8 || y.size() != kDimE8)
        throw std::invalid_argument("bracket: vectors must have 248 coordinates");
    ExactVector out(kDimE8);
    for (int i = 0; i < kDimE8; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < kDimE8; ++j) {
            if (y[j].is_zero()) continue;
            for (const auto& [t, c] : bracket_basis(i, j)) out[t] += x[i] * y[j] * c;
        }
    }
    return out;
}

ExactScalar E8Algebra::inner(const ExactVector& x, const ExactVector& y) const {
    ExactScalar sL, sV;
    for (int i = 0; i < kDimL; ++i)
        if (!x[i].is_zero() && !y[i].is_zero()) sL += x[i] * y[i];
    for (int i = kDimL; i < kDimE8; ++i)
        if (!x[i].is_zero() && !y[i].is_zero()) sV += x[i] * y[i];
    return sL + v_scale_ * sV;
}

bool E8Algebra::jacobi_zero(int i, int j, int k) const {
    std::map<int, ExactScalar> acc;
    auto add_nested = [&](int a, int b, int c) {
        // [x_a, [x_b, x_c]]
        for (const auto& [t, v] : bracket_basis(b, c))
            for (const auto& [u, w] : bracket_basis(a, t)) {
                acc[u] += v * w;
            }
    };
    add_nested(i, j, k);
    add_nested(j, k, i);
    add_nested(k, i, j);
    for (const auto& [t, v] : acc)
        if (!v.is_zero()) return false;
    return true;
}

ExactMatrix E8Algebra::ad_matrix(const ExactVector& g) const {
    ExactMatrix m(kDimE8, kDimE8);
    for (int i = 0; i < kDimE8; ++i) {
        if (g[i].is_zero()) continue;
        for (int j = 0; j < kDimE8; ++j)
            for (const auto& [t, c] : bracket_basis(i, j)) m.at(t, j) += g[i] * c;
    }
    return m;
}

SubalgebraBasis E8Algebra::centralizer_subalgebra(
    const std::string& name, const std::vector<ExactVector>& generators) const {
    ExactMatrix stacked(kDimE8 * generators.size(), kDimE8);
    for (size_t g = 0; g < generators.size(); ++g) {
        ExactMatrix ad = ad_matrix(generators[g]);
        for (int r = 0; r < kDimE8; ++r)
            for (int c = 0; c < kDimE8; ++c)
                if (!ad.at(r, c).is_zero()) stacked.at(g * kDimE8 + r, c) = ad.at(r, c);
    }
    SubalgebraBasis sub;
    sub.name = name;
    sub.basis = kernel_basis(stacked);
    sub.solver = std::make_shared<SubspaceSolver>(sub.basis);
    return sub;
}

bool E8Algebra::is_bracket_closed(const SubalgebraBasis& sub) const {
    for (size_t i = 0; i < sub.basis.size(); ++i)
        for (size_t j = i + 1; j < sub.basis.size(); ++j)
            if (!sub.solver->contains(bracket(sub.basis[i], sub.basis[j]))) return false;
    return true;
}

ExactVector E8Algebra::basis_vector(int index) const {
    ExactVector v(kDimE8);
    v[index] = ExactScalar(1);
    return v;
}

ExactVector E8Algebra::cartan_vector(const RootVec& gamma) const {
    // iA_gamma = sum_k gamma_k t_k with t_k = (1/2) e_{2k} e_{2k+1}
    ExactVector v(kDimE8);
    for (int k = 0; k < 8; ++k)
        if (gamma.twice[k] != 0)
            v[blade_index16(2 * k, 2 * k + 1)] = ExactScalar(rat(gamma.twice[k], 4));
    return v;
}

std::vector<ExactVector> E8Algebra::root_space(const RootE8& gamma) const {
    {
        std::lock_guard<std::mutex> lock(cache_mu_);
        auto it = root_space_cache_.find(gamma);
        if (it != root_space_cache_.end()) return it->second;
    }
    // generic Cartan element with pairwise distinct |gamma(T)| over the roots
    static const long kCoef[8] = {1, 3, 9, 27, 81, 243, 729, 2187};
    static const bool separated = [] {
        std::set<Rat> values;
        for (const auto& r : roots_e8()) {
            Rat q(0);
            for (int k = 0; k < 8; ++k) q += rat(r.twice[k], 2) * rat(kCoef[k]);
            if (sgn(q) < 0) q = -q;
            if (sgn(q) == 0) return false;
            values.insert(q);
        }
        return values.size() == 120;  // each |value| shared by exactly +-gamma
    }();
    if (!separated) throw std::logic_error("root_space: generic Cartan element is not generic");

    ExactVector big(kDimE8);
    for (int k = 0; k < 8; ++k)
        big[blade_index16(2 * k, 2 * k + 1)] = ExactScalar(rat(kCoef[k], 2));
    ExactMatrix ad = ad_matrix(big);
    ExactMatrix ad2 = ad * ad;
    Rat q(0);
    for (int k = 0; k < 8; ++k) q += rat(gamma.twice[k], 2) * rat(kCoef[k]);
    ExactScalar q2(q * q);
    for (int d = 0; d < kDimE8; ++d) ad2.at(d, d) += q2;
    auto ker = kernel_basis(ad2);
    if (ker.size() != 2) throw std::logic_error("root_space: expected a 2-dimensional r_gamma");
    {
        std::lock_guard<std::mutex> lock(cache_mu_);
        root_space_cache_[gamma] = ker;
    }
    return ker;
}

std::vector<ExactVector> E8Algebra::root_space_signed(const RootE8& gamma, int sign) const {
    // x = e_0 e_2 ... e_14; Ad(x) preserves each r_gamma with eigenvalues +-1
    static const CliffordElem x_elem = [] {
        BladeMask m = 0;
        for (int i = 0; i < 16; i += 2) m |= 1u << i;
        return CliffordElem::blade(16, m);
    }();
    ExactMatrix adx = adjoint_of(x_elem);
    auto rg = root_space(gamma);
    SubspaceSolver solver(rg);
    ExactMatrix restr = restrict_to_subspace(adx, solver);
    ExactMatrix shifted = restr;
    shifted.at(0, 0) -= ExactScalar(sign);
    shifted.at(1, 1) -= ExactScalar(sign);
    auto ker = kernel_basis(shifted);
    std::vector<ExactVector> out;
    for (const auto& c : ker) {
        ExactVector v(kDimE8);
        for (size_t b = 0; b < rg.size(); ++b)
            for (int t = 0; t < kDimE8; ++t)
                if (!rg[b][t].is_zero()) v[t] += c[b] * rg[b][t];
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<ExactVector> E8Algebra::su2_basis(const RootE8& gamma) const {
    std::vector<ExactVector> out{cartan_vector(gamma)};
    for (auto& v : root_space(gamma)) out.push_back(v);
    return out;
}

std::vector<ExactVector> E8Algebra::su3_basis(const RootE8& a, const RootE8& b) const {
    if (pairing(a, b) != -1)
        throw std::invalid_argument("su3_basis: need pairing(a, b) = -1");
    std::vector<ExactVector> out{cartan_vector(a), cartan_vector(b)};
    for (const RootE8& g : {a, b, a + b})
        for (auto& v : root_space(g)) out.push_back(v);
    return out;
}

std::vector<ExactVector> E8Algebra::g2_embedded_basis() const {
    // E_ij of the second so(8) factor equals pi((1/2) e_{8+i} e_{8+j})
    std::vector<ExactVector> out;
    for (const LinearMap8& x : g2_basis()) {
        ExactVector v(kDimE8);
        for (int i = 0; i < 8; ++i)
            for (int j = i + 1; j < 8; ++j) {
                const ExactScalar& c = x.at(j, i);  // coefficient of E_ij
                if (c.is_zero()) continue;
                v[blade_index16(8 + i, 8 + j)] = ExactScalar(rat(1, 2)) * c;
            }
        out.push_back(std::move(v));
    }
    return out;
}

ExactMatrix E8Algebra::adjoint_of(const CliffordElem& c) const {
    if (c.dim() != 16) throw DimensionMismatch("adjoint_of: need Cl(R^16)");
    return adjoint_of_parts(mod_.vector_rep_matrix(c, 16), c);
}

ExactMatrix E8Algebra::adjoint_of_parts(const ExactMatrix& pi, const CliffordElem& c) const {
    ExactMatrix out(kDimE8, kDimE8);
    // L block: Ad(g)(e_i e_j) = (pi(g) e_i)(pi(g) e_j)
    for (int col = 0; col < kDimL; ++col) {
        auto [i, j] = blade_pair16(col);
        for (int k = 0; k < 16; ++k) {
            if (pi.at(k, i).is_zero()) continue;
            for (int l = 0; l < 16; ++l) {
                if (l == k || pi.at(l, j).is_zero()) continue;
                ExactScalar v = pi.at(k, i) * pi.at(l, j);
                if (k < l)
                    out.at(blade_index16(k, l), col) += v;
                else
                    out.at(blade_index16(l, k), col) -= v;
            }
        }
    }
    // V block
    ExactMatrix hv = mod_.half_spin_matrix(c);
    for (int r = 0; r < kDimV; ++r)
        for (int cc = 0; cc < kDimV; ++cc)
            if (!hv.at(r, cc).is_zero()) out.at(kDimL + r, kDimL + cc) = hv.at(r, cc);
    return out;
}

const SubalgebraBasis& E8Algebra::subalgebra(const std::string& name) const {
    {
        std::lock_guard<std::mutex> lock(cache_mu_);
        auto it = subalgebras_.find(name);
        if (it != subalgebras_.end()) return it->second;
    }
    const RootE8 alpha = root_alpha();
    const RootE8 beta = root_beta();
    const RootE8 alphabar = RootVec::integral(6, 1, 7, 1);
    SubalgebraBasis sub;
    auto direct = [&](const std::string& nm, std::vector<ExactVector> b) {
        SubalgebraBasis s;
        s.name = nm;
        s.basis = std::move(b);
        s.solver = std::make_shared<SubspaceSolver>(s.basis);
        return s;
    };
    if (name == "su2_alpha") {
        sub = direct(name, su2_basis(alpha));
    } else if (name == "su2_alphabar") {
        sub = direct(name, su2_basis(alphabar));
    } else if (name == "su3_alphabeta") {
        sub = direct(name, su3_basis(alpha, beta));
    } else if (name == "g2") {
        sub = direct(name, g2_embedded_basis());
    } else if (name == "spin1_8") {
        std::vector<ExactVector> b;
        for (int i = 8; i < 16; ++i)
            for (int j = i + 1; j < 16; ++j) b.push_back(basis_vector(blade_index16(i, j)));
        sub = direct(name, std::move(b));
    } else if (name == "spin_alpha_12") {
        std::vector<ExactVector> b;
        for (int i = 0; i < 12; ++i)
            for (int j = i + 1; j < 12; ++j) b.push_back(basis_vector(blade_index16(i, j)));
        sub = direct(name, std::move(b));
    } else if (name == "e7_alpha") {
        sub = centralizer_subalgebra(name, su2_basis(alpha));
    } else if (name == "e6_alphabeta") {
        sub = centralizer_subalgebra(name, su3_basis(alpha, beta));
    } else if (name == "f4") {
        sub = centralizer_subalgebra(name, g2_embedded_basis());
    } else if (name == "c_f4") {
        sub = centralizer_subalgebra(name, subalgebra("f4").basis);
    } else if (name == "su2_e7") {
        std::vector<ExactVector> b = su2_basis(alpha);
        for (const auto& v : subalgebra("e7_alpha").basis) b.push_back(v);
        sub = direct(name, std::move(b));
    } else if (name == "e7_halfroot") {
        // C(su2(gamma)) for the half-integral root gamma = (+^8)/2
        RootVec g{};
        for (int k = 0; k < 8; ++k) g.twice[k] = 1;
        sub = centralizer_subalgebra(name, su2_basis(g));
    } else {
        throw std::invalid_argument("unknown subalgebra: " + name);
    }
    std::lock_guard<std::mutex> lock(cache_mu_);
    return subalgebras_.emplace(name, std::move(sub)).first->second;
}

void E8Algebra::verify_construction() const {
    // A canonical mixed Jacobi triple must vanish; if the half-spin chirality
    // or the pairing were off, no inner-product scale could repair it.
    Rng rng(20250101);
    for (int iter = 0; iter < 200; ++iter) {
        int i = static_cast<int>(rng.below(kDimE8));
        int j = static_cast<int>(rng.below(kDimE8));
        int k = static_cast<int>(rng.below(kDimE8));
        if (!jacobi_zero(i, j, k))
            throw CalibrationFailure("e8 construction: Jacobi identity fails on basis triple (" +
                                     std::to_string(i) + "," + std::to_string(j) + "," +
                                     std::to_string(k) + ")");
    }
    // two all-V triples exercise the V-V pairing explicitly
    if (!jacobi_zero(kDimL, kDimL + 1, kDimL + 2) || !jacobi_zero(kDimL + 3, kDimL + 70, kDimL + 99))
        throw CalibrationFailure("e8 construction: V-V-V Jacobi fails");
}

}  // namespace e8cat
