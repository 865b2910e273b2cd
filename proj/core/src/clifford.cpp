#include "e8cat/clifford.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace e8cat {

namespace {
constexpr BladeMask mask_of(std::initializer_list<int> bits) {
    BladeMask m = 0;
    for (int b : bits) m |= 1u << b;
    return m;
}
}  // namespace

int blade_mul_sign(BladeMask a, BladeMask b) {
    int swaps = 0;
    for (BladeMask rest = b; rest;) {
        int bit = std::countr_zero(rest);
        rest &= rest - 1;
        swaps += std::popcount(a >> (bit + 1));
    }
    int contractions = std::popcount(a & b);
    return ((swaps + contractions) % 2) ? -1 : 1;
}

int reverse_sign(int grade) { return (grade * (grade - 1) / 2) % 2 ? -1 : 1; }

CliffordElem CliffordElem::scalar(int dim, ExactScalar v) {
    CliffordElem c(dim);
    c.add_term(0, v);
    return c;
}

CliffordElem CliffordElem::blade(int dim, BladeMask mask, ExactScalar coeff) {
    CliffordElem c(dim);
    c.add_term(mask, coeff);
    return c;
}

void CliffordElem::add_term(BladeMask mask, const ExactScalar& coeff) {
    if (coeff.is_zero()) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), mask,
                               [](const auto& t, BladeMask m) { return t.first < m; });
    if (it != terms_.end() && it->first == mask) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    } else {
        terms_.insert(it, {mask, coeff});
    }
}

ExactScalar CliffordElem::coeff(BladeMask mask) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), mask,
                               [](const auto& t, BladeMask m) { return t.first < m; });
    if (it != terms_.end() && it->first == mask) return it->second;
    return ExactScalar();
}

int CliffordElem::parity() const {
    if (terms_.empty()) return 0;
    int p = std::popcount(terms_[0].first) % 2;
    for (const auto& [mask, c] : terms_)
        if (std::popcount(mask) % 2 != p) return 0;
    return p == 0 ? 1 : -1;
}

CliffordElem CliffordElem::operator-() const {
    CliffordElem c(dim_);
    c.terms_.reserve(terms_.size());
    for (const auto& [mask, v] : terms_) c.terms_.emplace_back(mask, -v);
    return c;
}

CliffordElem operator+(const CliffordElem& x, const CliffordElem& y) {
    if (x.dim_ != y.dim_) throw DimensionMismatch("clifford add: dimension mismatch");
    CliffordElem c = x;
    for (const auto& [mask, v] : y.terms_) c.add_term(mask, v);
    return c;
}

CliffordElem operator-(const CliffordElem& x, const CliffordElem& y) {
    if (x.dim_ != y.dim_) throw DimensionMismatch("clifford sub: dimension mismatch");
    CliffordElem c = x;
    for (const auto& [mask, v] : y.terms_) c.add_term(mask, -v);
    return c;
}

CliffordElem operator*(const ExactScalar& s, const CliffordElem& y) {
    CliffordElem c(y.dim_);
    if (s.is_zero()) return c;
    c.terms_.reserve(y.terms_.size());
    for (const auto& [mask, v] : y.terms_) c.terms_.emplace_back(mask, s * v);
    return c;
}

bool CliffordElem::lex_less(const CliffordElem& o) const {
    size_t n = std::min(terms_.size(), o.terms_.size());
    for (size_t i = 0; i < n; ++i) {
        if (terms_[i].first != o.terms_[i].first) return terms_[i].first < o.terms_[i].first;
        if (terms_[i].second != o.terms_[i].second) return terms_[i].second < o.terms_[i].second;
    }
    return terms_.size() < o.terms_.size();
}

CliffordElem CliffordElem::reversed() const {
    CliffordElem c(dim_);
    c.terms_.reserve(terms_.size());
    for (const auto& [mask, v] : terms_) {
        int s = reverse_sign(std::popcount(mask));
        c.terms_.emplace_back(mask, s < 0 ? -v : v);
    }
    return c;
}

std::string CliffordElem::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mask, v] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << v.str() << ")";
        for (int i = 0; i < dim_; ++i)
            if (mask & (1u << i)) os << "e" << i;
    }
    return os.str();
}

CliffordElem clifford_mul(const CliffordElem& a, const CliffordElem& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("clifford_mul: dimension mismatch");
    CliffordElem c(a.dim());
    for (const auto& [ma, va] : a.terms())
        for (const auto& [mb, vb] : b.terms()) {
            int s = blade_mul_sign(ma, mb);
            ExactScalar v = va * vb;
            c.add_term(ma ^ mb, s < 0 ? -v : v);
        }
    return c;
}

bool is_unit_spin(const CliffordElem& g) {
    CliffordElem p = clifford_mul(g, g.reversed());
    return p.term_count() == 1 && p.terms()[0].first == 0 && p.terms()[0].second.is_one();
}

ExactScalar cos_quarter(long t) {
    static const int kA[8] = {1, 0, 0, 0, -1, 0, 0, 0};
    static const int kB2[8] = {0, 1, 0, -1, 0, -1, 0, 1};  // doubled sqrt2 coeff
    long r = ((t % 8) + 8) % 8;
    return ExactScalar(rat(kA[r]), rat(kB2[r], 2));
}

ExactScalar sin_quarter(long t) { return cos_quarter(t - 2); }

CliffordElem torus_element(int dim, const std::vector<long>& quarter_turns,
                           const std::vector<std::pair<int, int>>& pairing) {
    if (quarter_turns.size() != pairing.size())
        throw std::invalid_argument("torus_element: one turn count per pair");
    CliffordElem g = CliffordElem::one(dim);
    for (size_t k = 0; k < pairing.size(); ++k) {
        // theta = quarter_turns[k] * pi/2, factor cos(theta/2) + sin(theta/2) e_a e_b
        CliffordElem f(dim);
        f.add_term(0, cos_quarter(quarter_turns[k]));
        BladeMask m = (1u << pairing[k].first) | (1u << pairing[k].second);
        int s = pairing[k].first < pairing[k].second ? 1 : -1;
        ExactScalar sv = sin_quarter(quarter_turns[k]);
        f.add_term(m, s < 0 ? -sv : sv);
        g = clifford_mul(g, f);
    }
    return g;
}

CliffordElem gamma_clifford(int i, int a, int b, int dim, int shift) {
    // Blade table: gamma_i^{0,1} is a signed blade on the "plus" support of
    // gamma_i (the four coordinates it fixes), gamma_i^{0,0} on the
    // complement; gamma_i^{1,b} is the negative of gamma_i^{0,b}.
    static const struct {
        BladeMask mask00;
        int sign00;
        BladeMask mask01;
        int sign01;
    } kTable[8] = {
        {0x00, +1, 0xFF, +1},                                        // gamma_0: 1 / vol
        {mask_of({4, 5, 6, 7}), -1, mask_of({0, 1, 2, 3}), -1},      // gamma_1
        {mask_of({2, 3, 6, 7}), -1, mask_of({0, 1, 4, 5}), -1},      // gamma_2
        {mask_of({2, 3, 4, 5}), -1, mask_of({0, 1, 6, 7}), -1},      // gamma_3
        {mask_of({1, 3, 5, 7}), +1, mask_of({0, 2, 4, 6}), +1},      // gamma_4
        {mask_of({1, 3, 4, 6}), -1, mask_of({0, 2, 5, 7}), -1},      // gamma_5
        {mask_of({1, 2, 5, 6}), -1, mask_of({0, 3, 4, 7}), -1},      // gamma_6
        {mask_of({1, 2, 4, 7}), -1, mask_of({0, 3, 5, 6}), -1},      // gamma_7
    };
    BladeMask mask = b == 0 ? kTable[i].mask00 : kTable[i].mask01;
    int sign = b == 0 ? kTable[i].sign00 : kTable[i].sign01;
    if (a == 1) sign = -sign;
    return CliffordElem::blade(dim, mask << shift,
                               sign < 0 ? ExactScalar(-1) : ExactScalar(1));
}

}  // namespace e8cat
