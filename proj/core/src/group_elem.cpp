#include "e8cat/group_elem.hpp"

#include <bit>
#include <map>
#include <mutex>
#include <sstream>

namespace e8cat {

namespace {

const CliffordElem& omega16() {
    static const CliffordElem w = CliffordElem::blade(16, 0xFFFF);
    return w;
}

BladeMask x_mask() {
    BladeMask m = 0;
    for (int i = 0; i < 16; i += 2) m |= 1u << i;
    return m;
}

CliffordElem torus_clifford(const RootVec& v) {
    std::vector<long> turns(8);
    std::vector<std::pair<int, int>> pairs(8);
    for (int k = 0; k < 8; ++k) {
        turns[k] = v.twice[k];  // theta_k = pi v_k, i.e. 2 v_k quarter turns
        pairs[k] = {2 * k, 2 * k + 1};
    }
    return torus_element(16, turns, pairs);
}

/// Torus exponent of a single gamma_i^{a,b} (i <= 3) in x-coordinates
/// offset..offset+3, from the exp table at the end of the octonion section.
std::optional<RootVec> gamma_exponent(const GammaLabel& g, int offset) {
    if (g.i > 3) return std::nullopt;
    RootVec v{};
    if (g.i == 0) {
        switch (g.a * 2 + g.b) {
            case 0:  // identity
                return v;
            case 2:  // -1 = exp(pi i A_{2 x_1})
                v.twice[offset] = 4;
                return v;
            case 1:  // volume = exp(pi i A_{x_1+x_2+x_3+x_4})
                for (int k = 0; k < 4; ++k) v.twice[offset + k] = 2;
                return v;
            default:  // -volume
                for (int k = 0; k < 4; ++k) v.twice[offset + k] = 2;
                v.twice[offset] += 4;
                return v;
        }
    }
    // gamma_i^{a,1} = exp(pi i A_{x_1 +- x_{i+1}}), gamma_i^{a,0} the
    // complementary index pair; the sign is + for a = 1.
    static const int comp[4][2][2] = {{{0, 0}, {0, 0}},
                                      {{3, 4}, {1, 2}},   // gamma_1
                                      {{2, 4}, {1, 3}},   // gamma_2
                                      {{2, 3}, {1, 4}}};  // gamma_3
    int i = comp[g.i][g.b][0], j = comp[g.i][g.b][1];
    v.twice[offset + i - 1] = 2;
    v.twice[offset + j - 1] = g.a == 1 ? 2 : -2;
    return v;
}

std::optional<GammaLabel> match_gamma_blade(const CliffordElem& c) {
    for (int i = 0; i < 8; ++i)
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
                if (gamma_clifford(i, a, b) == c) return GammaLabel{i, a, b};
    return std::nullopt;
}

}  // namespace

E8GroupElem E8GroupElem::from_clifford(CliffordElem c) {
    E8GroupElem g;
    g.c_ = std::move(c);
    g.canonicalize();
    g.derive_encodings();
    return g;
}

void E8GroupElem::canonicalize() {
    CliffordElem alt = clifford_mul(omega16(), c_);
    if (alt.lex_less(c_)) c_ = std::move(alt);
}

void E8GroupElem::derive_encodings() {
    psi_.reset();
    torus_.reset();
    // psi encoding: +- blade splitting into two Cl(8) factors from the table
    const CliffordElem alt_form = clifford_mul(omega16(), c_);
    for (const CliffordElem* cand : {static_cast<const CliffordElem*>(&c_), &alt_form}) {
        const CliffordElem& cc = *cand;
        if (cc.term_count() != 1) continue;
        BladeMask mask = cc.terms()[0].first;
        const ExactScalar& coeff = cc.terms()[0].second;
        if (coeff != ExactScalar(1) && coeff != ExactScalar(-1)) continue;
        BladeMask low = mask & 0xFF, high = mask >> 8;
        int sign = coeff == ExactScalar(1) ? 1 : -1;
        // disjoint ascending supports concatenate without sign
        for (int sign_low : {sign, 1}) {
            int sign_high = sign / sign_low;
            auto l = match_gamma_blade(
                CliffordElem::blade(8, low, ExactScalar(sign_low)));
            auto h = match_gamma_blade(
                CliffordElem::blade(8, high, ExactScalar(sign_high)));
            if (l && h) {
                // normalize modulo the kernel {(g0^{s,t}, g0^{s,t})}
                PsiPair p;
                p.first = GammaLabel{l->i, 0, 0};
                p.second = GammaLabel{h->i, h->a ^ l->a, h->b ^ l->b};
                psi_ = p;
                break;
            }
        }
        if (psi_) break;
    }
    // torus encoding: match against exp(pi i A_v) x^eps generated candidates
    // is derived at construction time by the tau()/x() builders; recognizing
    // arbitrary Clifford forms is only needed for psi-encodable elements:
    if (psi_ && psi_->first.i <= 3 && psi_->second.i <= 3) {
        auto v1 = gamma_exponent(psi_->first, 0);
        auto v2 = gamma_exponent(psi_->second, 4);
        if (v1 && v2) {
            TorusX t{TorusInvolution{*v1 + *v2}.canonical(), false};
            torus_ = t;
        }
    }
    // display string
    std::ostringstream os;
    if (psi_) {
        os << "psi(g" << psi_->first.i << ":" << psi_->first.a << ":" << psi_->first.b << ", g"
           << psi_->second.i << ":" << psi_->second.a << ":" << psi_->second.b << ")";
    } else if (torus_) {
        os << "tau" << torus_->v.str();
        if (torus_->x_flag) os << "*x";
    } else {
        os << "elem[" << c_.str() << "]";
    }
    display_ = os.str();
}

E8GroupElem E8GroupElem::identity() { return psi(0, 0, 0, 0, 0, 0); }

E8GroupElem E8GroupElem::psi(int i, int a, int b, int j, int c, int d) {
    // kernel-normalized label: (i, 0, 0; j, c^a, d^b); 1024 raw signatures
    // collapse onto 256 canonical elements, built once
    static const std::vector<E8GroupElem> cache = [] {
        std::vector<E8GroupElem> all;
        all.reserve(256);
        for (int i2 = 0; i2 < 8; ++i2)
            for (int j2 = 0; j2 < 8; ++j2)
                for (int c2 = 0; c2 < 2; ++c2)
                    for (int d2 = 0; d2 < 2; ++d2) {
                        CliffordElem lo = gamma_clifford(i2, 0, 0, 16, 0);
                        CliffordElem hi = gamma_clifford(j2, c2, d2, 16, 8);
                        all.push_back(from_clifford(clifford_mul(lo, hi)));
                    }
        return all;
    }();
    return cache[((i * 8 + j) * 2 + (c ^ a)) * 2 + (d ^ b)];
}

E8GroupElem E8GroupElem::tau(const RootVec& v, bool with_x) {
    TorusInvolution ti{v};
    RootVec canon = ti.canonical();  // also validates v as a lattice point
    static std::map<std::pair<RootVec, bool>, E8GroupElem> cache;
    static std::mutex mu;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find({canon, with_x});
        if (it != cache.end()) return it->second;
    }
    CliffordElem c = torus_clifford(canon);
    if (with_x) c = clifford_mul(c, CliffordElem::blade(16, x_mask()));
    E8GroupElem g = from_clifford(std::move(c));
    TorusX t{canon, with_x};
    g.torus_ = t;
    if (!g.psi_) {
        std::ostringstream os;
        os << "tau" << canon.str();
        if (with_x) os << "*x";
        g.display_ = os.str();
    }
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(std::make_pair(canon, with_x), g).first->second;
}

E8GroupElem E8GroupElem::x() { return tau(RootVec{}, true); }

E8GroupElem E8GroupElem::phi_minus_one() {
    RootVec v{};
    v.twice[0] = 4;  // 2 x_1
    return tau(v);
}

bool E8GroupElem::is_identity() const {
    return c_ == CliffordElem::one(16) || c_ == omega16();
}

bool E8GroupElem::is_involution() const {
    // gamma-pair triples square to the identity triple; torus classes square
    // into Gamma and x inverts the torus, so both encodings force g^2 = e.
    if (psi_ || torus_) return true;
    CliffordElem sq = clifford_mul(c_, c_);
    return sq == CliffordElem::one(16) || sq == omega16();
}

E8GroupElem E8GroupElem::inverse() const {
    CliffordElem rev = c_.reversed();
    if (!is_unit_spin(c_)) throw std::logic_error("inverse: element is not a unit");
    E8GroupElem g = from_clifford(rev);
    return g;
}

ExactMatrix E8GroupElem::pi16() const {
    if (psi_) {
        // first component of gamma_i^{a,b} is +gamma_i for b = 0 and
        // -gamma_i for b = 1; the per-factor sign matters on mixed blades
        ExactMatrix pi(16, 16);
        auto lo = gamma_signs(psi_->first.i), hi = gamma_signs(psi_->second.i);
        int slo = psi_->first.b ? -1 : 1, shi = psi_->second.b ? -1 : 1;
        for (int k = 0; k < 8; ++k) {
            pi.at(k, k) = ExactScalar(slo * lo[k]);
            pi.at(8 + k, 8 + k) = ExactScalar(shi * hi[k]);
        }
        return pi;
    }
    if (torus_) {
        // rotation by pi*v_k in each coordinate plane, then conjugation by x
        ExactMatrix pi(16, 16);
        for (int k = 0; k < 8; ++k) {
            ExactScalar c = cos_quarter(2L * torus_->v.twice[k]);
            ExactScalar s = sin_quarter(2L * torus_->v.twice[k]);
            pi.at(2 * k, 2 * k) = c;
            pi.at(2 * k + 1, 2 * k + 1) = c;
            pi.at(2 * k + 1, 2 * k) = s;
            pi.at(2 * k, 2 * k + 1) = -s;
        }
        if (torus_->x_flag) {
            BladeMask xm = x_mask();
            for (int j = 0; j < 16; ++j) {
                // pi(x) e_j = x e_j x (x^2 = 1), a diagonal sign
                int sgn = blade_mul_sign(xm, 1u << j) * blade_mul_sign(xm ^ (1u << j), xm);
                if (sgn < 0)
                    for (int r = 0; r < 16; ++r) pi.at(r, j) = -pi.at(r, j);
            }
        }
        return pi;
    }
    return SpinModule::instance().vector_rep_matrix(c_, 16);
}

ExactMatrix E8GroupElem::adjoint_matrix() const {
    return E8Algebra::instance().adjoint_of_parts(pi16(), c_);
}

E8GroupElem elem_mul_resolved(const E8GroupElem& g, const E8GroupElem& h) {
    return E8GroupElem::from_clifford(clifford_mul(g.c_, h.c_));
}

E8GroupElem elem_mul(const E8GroupElem& g, const E8GroupElem& h) {
    if (g.torus_ && h.torus_) {
        RootVec v2 = h.torus_->v;
        if (g.torus_->x_flag) v2 = -v2;  // x t x = t^{-1}
        return E8GroupElem::tau(TorusInvolution{g.torus_->v + v2}.canonical(),
                                g.torus_->x_flag != h.torus_->x_flag);
    }
    if (g.psi_ && h.psi_) {
        GammaLabel lf = gamma_label_mul(g.psi_->first, h.psi_->first);
        GammaLabel ls = gamma_label_mul(g.psi_->second, h.psi_->second);
        return E8GroupElem::psi(lf.i, lf.a, lf.b, ls.i, ls.a, ls.b);
    }
    throw MixedEncoding("elem_mul: operands have no common encoding");
}

bool is_antipodal_pair(const E8GroupElem& g, const E8GroupElem& h) {
    if (!(g.is_involution() || g.is_identity()) || !(h.is_involution() || h.is_identity()))
        throw GroupNotInvolution("is_antipodal_pair: arguments must be involutions");
    const auto& gt = g.torus_encoding();
    const auto& ht = h.torus_encoding();
    if (gt && ht) {
        // the dihedral relations make any two torus-or-x involutions commute:
        // (t1 x^a)(t2 x^b) = t1 t2^{+-1} x^{a+b} and both orders agree because
        // t^2 = e mod Gamma for each factor; verify through the exponents.
        RootVec lhs = gt->v + (gt->x_flag ? -ht->v : ht->v);
        RootVec rhs = ht->v + (ht->x_flag ? -gt->v : gt->v);
        return congruent_mod_gamma(lhs, rhs);
    }
    const auto& gp = g.psi_encoding();
    const auto& hp = h.psi_encoding();
    if (gp && hp) {
        // products in both orders, compared modulo the kernel: the gamma
        // matrices are diagonal so the label products commute on the nose
        auto fwd1 = gamma_label_mul(gp->first, hp->first);
        auto bwd1 = gamma_label_mul(hp->first, gp->first);
        auto fwd2 = gamma_label_mul(gp->second, hp->second);
        auto bwd2 = gamma_label_mul(hp->second, gp->second);
        if (fwd1.i != bwd1.i || fwd2.i != bwd2.i) return false;
        return std::pair(fwd1.a ^ bwd1.a, fwd1.b ^ bwd1.b) ==
               std::pair(fwd2.a ^ bwd2.a, fwd2.b ^ bwd2.b);
    }
    // mixed encodings: exact Clifford commutation modulo the kernel
    CliffordElem gh = clifford_mul(g.clifford(), h.clifford());
    CliffordElem hg = clifford_mul(h.clifford(), g.clifford());
    return gh == hg || gh == clifford_mul(omega16(), hg);
}

}  // namespace e8cat
