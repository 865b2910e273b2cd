#pragma once

#include "e8cat/octonion.hpp"

#include <vector>

namespace e8cat {

/// A Spin(8) element in the triple model: three orthogonal maps with
/// (x1 u)(x2 v) = x3(uv) for all u, v. Componentwise products of triples are
/// again triples.
struct TrialityTriple {
    LinearMap8 x1, x2, x3;

    static TrialityTriple identity();

    bool operator==(const TrialityTriple& o) const {
        return x1 == o.x1 && x2 == o.x2 && x3 == o.x3;
    }
    bool operator!=(const TrialityTriple& o) const { return !(*this == o); }
};

/// Checks the defining relation on all 64 basis pairs plus orthogonality and
/// determinant one of each component.
bool triple_valid(const TrialityTriple& t);

TrialityTriple triple_mul(const TrialityTriple& s, const TrialityTriple& t);

/// gamma_i^{a,b}: the four sign patterns (g,g,g), (g,-g,-g), (-g,-g,g),
/// (-g,g,-g) over the diagonal involution gamma_i.
TrialityTriple triple_from_gamma(int i, int a, int b);

/// The eight diagonal involutions, a maximal antipodal subgroup of G2.
std::vector<LinearMap8> a_g2();

/// The 32 triples gamma_i^{a,b}, a maximal antipodal subgroup of Spin(8).
std::vector<TrialityTriple> a_spin8();

/// Decomposes a diagonal-sign triple as (i, a, b) with
/// t == triple_from_gamma(i, a, b); throws if t is not of that form.
struct GammaLabel {
    int i, a, b;
};
GammaLabel gamma_label(const TrialityTriple& t);

/// Index k with gamma_i gamma_j = gamma_k (the products carry no signs).
int gamma_product_index(int i, int j);
/// Label arithmetic mirror of triple_mul on gamma-type triples.
GammaLabel gamma_label_mul(const GammaLabel& s, const GammaLabel& t);

}  // namespace e8cat
