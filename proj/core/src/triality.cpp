#include "e8cat/triality.hpp"

namespace e8cat {

TrialityTriple TrialityTriple::identity() {
    LinearMap8 id = ExactMatrix::identity(8);
    return TrialityTriple{id, id, id};
}

bool triple_valid(const TrialityTriple& t) {
    for (const LinearMap8* m : {&t.x1, &t.x2, &t.x3}) {
        if (!is_orthogonal(*m)) return false;
        if (determinant(*m) != ExactScalar(1)) return false;
    }
    std::array<Octonion, 8> a1, a2;
    for (int i = 0; i < 8; ++i) {
        a1[i] = apply_map(t.x1, Octonion::basis(i));
        a2[i] = apply_map(t.x2, Octonion::basis(i));
    }
    for (int u = 0; u < 8; ++u)
        for (int v = 0; v < 8; ++v) {
            BasisProduct p = oct_basis_mul(u, v);
            Octonion lhs = oct_mul(a1[u], a2[v]);
            Octonion rhs = apply_map(t.x3, Octonion::basis(p.index));
            if (p.sign < 0) rhs = -rhs;
            if (lhs != rhs) return false;
        }
    return true;
}

TrialityTriple triple_mul(const TrialityTriple& s, const TrialityTriple& t) {
    return TrialityTriple{s.x1 * t.x1, s.x2 * t.x2, s.x3 * t.x3};
}

TrialityTriple triple_from_gamma(int i, int a, int b) {
    LinearMap8 g = gamma_element(i);
    LinearMap8 ng = -g;
    if (a == 0 && b == 0) return TrialityTriple{g, g, g};
    if (a == 1 && b == 0) return TrialityTriple{g, ng, ng};
    if (a == 0 && b == 1) return TrialityTriple{ng, ng, g};
    return TrialityTriple{ng, g, ng};
}

std::vector<LinearMap8> a_g2() {
    std::vector<LinearMap8> v;
    for (int i = 0; i < 8; ++i) v.push_back(gamma_element(i));
    return v;
}

std::vector<TrialityTriple> a_spin8() {
    std::vector<TrialityTriple> v;
    for (int i = 0; i < 8; ++i)
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) v.push_back(triple_from_gamma(i, a, b));
    return v;
}

GammaLabel gamma_label(const TrialityTriple& t) {
    for (int i = 0; i < 8; ++i)
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
                if (triple_from_gamma(i, a, b) == t) return GammaLabel{i, a, b};
    throw std::invalid_argument("gamma_label: triple is not of gamma type");
}

int gamma_product_index(int i, int j) {
    // The gamma involutions close under products with no signs: the diagonal
    // sign patterns form an elementary abelian group.
    static const std::array<std::array<int, 8>, 8> table = [] {
        std::array<std::array<int, 8>, 8> t{};
        for (int i2 = 0; i2 < 8; ++i2)
            for (int j2 = 0; j2 < 8; ++j2) {
                auto si = gamma_signs(i2), sj = gamma_signs(j2);
                std::array<int, 8> prod;
                for (int k = 0; k < 8; ++k) prod[k] = si[k] * sj[k];
                int found = -1;
                for (int m = 0; m < 8 && found < 0; ++m)
                    if (gamma_signs(m) == prod) found = m;
                if (found < 0) throw std::logic_error("gamma products do not close");
                t[i2][j2] = found;
            }
        return t;
    }();
    return table[i][j];
}

GammaLabel gamma_label_mul(const GammaLabel& s, const GammaLabel& t) {
    return GammaLabel{gamma_product_index(s.i, t.i), s.a ^ t.a, s.b ^ t.b};
}

}  // namespace e8cat
