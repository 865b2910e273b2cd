#include "e8cat/octonion.hpp"

#include <algorithm>

namespace e8cat {

namespace {

// The seven expansions 2F_{0i} = L_{e_i} in the skew E_{ab} basis, as
// displayed in the source model: each row lists four signed pairs (a, b).
struct SignedPair {
    int sign, a, b;
};
constexpr SignedPair kLeftMulRows[7][4] = {
    {{+1, 0, 1}, {+1, 2, 3}, {+1, 4, 5}, {+1, 6, 7}},  // L_{e_1}
    {{+1, 0, 2}, {-1, 1, 3}, {-1, 4, 6}, {+1, 5, 7}},  // L_{e_2}
    {{+1, 0, 3}, {+1, 1, 2}, {+1, 4, 7}, {+1, 5, 6}},  // L_{e_3}
    {{+1, 0, 4}, {-1, 1, 5}, {+1, 2, 6}, {-1, 3, 7}},  // L_{e_4}
    {{+1, 0, 5}, {+1, 1, 4}, {-1, 2, 7}, {-1, 3, 6}},  // L_{e_5}
    {{+1, 0, 6}, {-1, 1, 7}, {-1, 2, 4}, {+1, 3, 5}},  // L_{e_6}
    {{+1, 0, 7}, {+1, 1, 6}, {+1, 2, 5}, {+1, 3, 4}},  // L_{e_7}
};

struct MulTable {
    int idx[8][8];
    int sgn[8][8];
};

MulTable derive_table() {
    MulTable t{};
    for (int j = 0; j < 8; ++j) {
        t.idx[0][j] = j;
        t.sgn[0][j] = 1;  // e_0 is the unit
        t.idx[j][0] = j;
        t.sgn[j][0] = 1;
    }
    for (int i = 1; i < 8; ++i) {
        for (const SignedPair& p : kLeftMulRows[i - 1]) {
            // sign * E_{ab}: e_a -> sign*e_b, e_b -> -sign*e_a
            t.idx[i][p.a] = p.b;
            t.sgn[i][p.a] = p.sign;
            t.idx[i][p.b] = p.a;
            t.sgn[i][p.b] = -p.sign;
        }
    }
    return t;
}

Octonion mul_with(const MulTable& t, const Octonion& x, const Octonion& y) {
    Octonion z;
    for (int i = 0; i < 8; ++i) {
        if (x.c[i].is_zero()) continue;
        for (int j = 0; j < 8; ++j) {
            if (y.c[j].is_zero()) continue;
            ExactScalar term = x.c[i] * y.c[j];
            if (t.sgn[i][j] < 0) term = -term;
            z.c[t.idx[i][j]] += term;
        }
    }
    return z;
}

void selfcheck_table(const MulTable& t) {
    // anticommutativity and squares
    for (int i = 1; i < 8; ++i) {
        if (t.idx[i][i] != 0 || t.sgn[i][i] != -1)
            throw std::logic_error("octonion table: e_i^2 != -1");
        for (int j = 1; j < 8; ++j) {
            if (i == j) continue;
            if (t.idx[i][j] != t.idx[j][i] || t.sgn[i][j] != -t.sgn[j][i])
                throw std::logic_error("octonion table: not anticommutative");
        }
    }
    // norm multiplicativity on basis pairs is immediate for a monomial table;
    // check it on the sums (e_i + e_j) against all e_k instead.
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            if (i == j) continue;
            Octonion x = Octonion::basis(i) + Octonion::basis(j);
            for (int k = 0; k < 8; ++k) {
                Octonion y = Octonion::basis(k);
                Octonion xy = mul_with(t, x, y);
                if (oct_norm2(xy) != oct_norm2(x) * oct_norm2(y))
                    throw std::logic_error("octonion table: |xy|^2 != |x|^2 |y|^2");
            }
        }
}

const MulTable& table() {
    static const MulTable t = [] {
        MulTable raw = derive_table();
        selfcheck_table(raw);
        return raw;
    }();
    return t;
}

}  // namespace

BasisProduct oct_basis_mul(int i, int j) {
    const MulTable& t = table();
    return BasisProduct{t.idx[i][j], t.sgn[i][j]};
}

Octonion oct_mul(const Octonion& x, const Octonion& y) { return mul_with(table(), x, y); }

Octonion oct_conj(const Octonion& x) {
    Octonion z = x;
    for (int i = 1; i < 8; ++i) z.c[i] = -z.c[i];
    return z;
}

std::pair<Octonion, ExactScalar> oct_conj_inner(const Octonion& x, const Octonion& y) {
    ExactScalar inner;
    for (int i = 0; i < 8; ++i) inner += x.c[i] * y.c[i];
    Octonion s = oct_mul(x, oct_conj(y)) + oct_mul(y, oct_conj(x));
    ExactScalar half(rat(1, 2));
    ExactScalar other = half * s.c[0];
    Octonion imag = s;
    imag.c[0] = ExactScalar();
    if (other != inner || !std::all_of(imag.c.begin() + 1, imag.c.end(),
                                       [](const ExactScalar& v) { return v.is_zero(); }))
        throw std::logic_error("oct_conj_inner: the two inner-product formulas disagree");
    return {oct_conj(x), inner};
}

ExactScalar oct_norm2(const Octonion& x) {
    ExactScalar s;
    for (int i = 0; i < 8; ++i) s += x.c[i] * x.c[i];
    return s;
}

LinearMap8 left_mul_map(const Octonion& a) {
    LinearMap8 m(8, 8);
    for (int j = 0; j < 8; ++j) {
        Octonion col = oct_mul(a, Octonion::basis(j));
        for (int i = 0; i < 8; ++i) m.at(i, j) = col.c[i];
    }
    return m;
}

LinearMap8 right_mul_map(const Octonion& a) {
    LinearMap8 m(8, 8);
    for (int j = 0; j < 8; ++j) {
        Octonion col = oct_mul(Octonion::basis(j), a);
        for (int i = 0; i < 8; ++i) m.at(i, j) = col.c[i];
    }
    return m;
}

LinearMap8 tee_map(const Octonion& a) { return left_mul_map(a) + right_mul_map(a); }

LinearMap8 so8_E(int i, int j) {
    LinearMap8 m(8, 8);
    m.at(j, i) = ExactScalar(1);
    m.at(i, j) = ExactScalar(-1);
    return m;
}

Octonion apply_map(const LinearMap8& m, const Octonion& x) {
    Octonion z;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            if (!m.at(i, j).is_zero() && !x.c[j].is_zero()) z.c[i] += m.at(i, j) * x.c[j];
    return z;
}

std::array<int, 8> gamma_signs(int i) {
    static constexpr int kPlus[8][4] = {
        {0, 1, 2, 3},  // unused for gamma_0 (identity on everything)
        {0, 1, 2, 3}, {0, 1, 4, 5}, {0, 1, 6, 7}, {0, 2, 4, 6},
        {0, 2, 5, 7}, {0, 3, 4, 7}, {0, 3, 5, 6},
    };
    std::array<int, 8> s;
    if (i == 0) {
        s.fill(1);
        return s;
    }
    s.fill(-1);
    for (int k : kPlus[i]) s[k] = 1;
    return s;
}

LinearMap8 gamma_element(int i) {
    LinearMap8 m(8, 8);
    auto s = gamma_signs(i);
    for (int k = 0; k < 8; ++k) m.at(k, k) = ExactScalar(s[k]);
    return m;
}

bool is_orthogonal(const ExactMatrix& m) {
    if (m.rows() != m.cols()) return false;
    return (m.transposed() * m).is_identity();
}

bool is_skew(const ExactMatrix& m) {
    if (m.rows() != m.cols()) return false;
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j <= i; ++j)
            if (m.at(i, j) != -m.at(j, i)) return false;
    return true;
}

bool is_g2(const LinearMap8& f) {
    if (!is_orthogonal(f)) return false;
    if (apply_map(f, Octonion::one()) != Octonion::one()) return false;
    std::array<Octonion, 8> img;
    for (int i = 0; i < 8; ++i) img[i] = apply_map(f, Octonion::basis(i));
    for (int u = 0; u < 8; ++u)
        for (int v = 0; v < 8; ++v) {
            BasisProduct p = oct_basis_mul(u, v);
            Octonion lhs = oct_mul(img[u], img[v]);
            Octonion rhs = p.sign < 0 ? -img[p.index] : img[p.index];
            if (lhs != rhs) return false;
        }
    return true;
}

namespace {

// F_{0i} = (1/2) L_{e_i}, F_{ij} = (1/4)[L_{e_i}, L_{e_j}] for i, j >= 1.
LinearMap8 so8_F(int i, int j) {
    if (i == 0) return ExactScalar(rat(1, 2)) * left_mul_map(Octonion::basis(j));
    LinearMap8 li = left_mul_map(Octonion::basis(i));
    LinearMap8 lj = left_mul_map(Octonion::basis(j));
    return ExactScalar(rat(1, 4)) * (li * lj - lj * li);
}

// beta as a 28x28 table over the E_ij coordinates of so(8).
struct BetaTable {
    // beta(E_ij) expressed in E-coordinates: columns indexed by pair (i,j).
    std::vector<std::vector<ExactScalar>> cols;  // 28 columns of 28 coords
};

int pair_idx8(int i, int j) {  // i < j in 0..7
    return i * 8 - i * (i + 1) / 2 + (j - i - 1);
}

std::vector<ExactScalar> e_coords(const LinearMap8& x) {
    // X = sum_{i<j} c_ij E_ij with c_ij = X(j, i)
    std::vector<ExactScalar> c(28);
    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j) c[pair_idx8(i, j)] = x.at(j, i);
    return c;
}

const BetaTable& beta_table() {
    static BetaTable t = [] {
        BetaTable bt;
        bt.cols.resize(28);
        for (int i = 0; i < 8; ++i)
            for (int j = i + 1; j < 8; ++j) bt.cols[pair_idx8(i, j)] = e_coords(so8_F(i, j));
        return bt;
    }();
    return t;
}

LinearMap8 from_e_coords(const std::vector<ExactScalar>& c) {
    LinearMap8 m(8, 8);
    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j) {
            const ExactScalar& v = c[pair_idx8(i, j)];
            if (v.is_zero()) continue;
            m.at(j, i) += v;
            m.at(i, j) -= v;
        }
    return m;
}

}  // namespace

LinearMap8 so8_triality_map(TrialityKind kind, const LinearMap8& x) {
    if (!is_skew(x)) throw NotSkew("so8_triality_map: argument not in so(8)");
    if (kind == TrialityKind::alpha) {
        // alpha(X)(a) = conj(X(conj a)) = (K X K)(a), K = diag(1, -1^7)
        LinearMap8 m = x;
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j)
                if ((i == 0) != (j == 0)) m.at(i, j) = -m.at(i, j);
        return m;
    }
    if (kind == TrialityKind::gamma)
        return so8_triality_map(TrialityKind::beta, so8_triality_map(TrialityKind::alpha, x));
    // beta
    std::vector<ExactScalar> in = e_coords(x), out(28);
    const BetaTable& bt = beta_table();
    for (int k = 0; k < 28; ++k) {
        if (in[k].is_zero()) continue;
        for (int r = 0; r < 28; ++r)
            if (!bt.cols[k][r].is_zero()) out[r] += in[k] * bt.cols[k][r];
    }
    return from_e_coords(out);
}

std::pair<LinearMap8, LinearMap8> solve_triality(const LinearMap8& x1) {
    if (!is_skew(x1)) throw NotSkew("solve_triality: argument not in so(8)");
    // Route 1: through the outer automorphisms.
    LinearMap8 x2 = so8_triality_map(TrialityKind::gamma, x1);
    LinearMap8 x3 = so8_triality_map(TrialityKind::beta, x1);

    // Route 2: solve (X1 e_p) e_q + e_p (X2 e_q) = X3(e_p e_q) directly, with
    // X2, X3 in so(8) parameterized by their 28 lower entries each. This is
    // where uniqueness holds (without skewness the scalar direction
    // (c id, c id) would be free).
    const int kUnknowns = 57;  // 28 + 28 skew entries + 1 homogenization column
    ExactMatrix aug(512, kUnknowns);
    auto skew_coeff = [](int row, int col, int* unknown, int* sign) {
        // entry X[row][col] of a skew matrix in lower-entry coordinates
        if (row == col) {
            *unknown = -1;
            return;
        }
        int i = std::min(row, col), j = std::max(row, col);
        *unknown = i * 8 - i * (i + 1) / 2 + (j - i - 1);
        *sign = row > col ? 1 : -1;  // unknown is X[j][i], i < j
    };
    std::array<Octonion, 8> x1img;
    for (int p = 0; p < 8; ++p) x1img[p] = apply_map(x1, Octonion::basis(p));
    int eq = 0;
    for (int p = 0; p < 8; ++p)
        for (int q = 0; q < 8; ++q) {
            Octonion known = oct_mul(x1img[p], Octonion::basis(q));
            BasisProduct pq = oct_basis_mul(p, q);
            for (int out = 0; out < 8; ++out, ++eq) {
                aug.at(eq, 56) = known.c[out];
                // e_p (X2 e_q) = sum_k X2[k][q] * (e_p e_k)
                for (int k = 0; k < 8; ++k) {
                    BasisProduct pk = oct_basis_mul(p, k);
                    if (pk.index != out) continue;
                    int unknown, sign = 1;
                    skew_coeff(k, q, &unknown, &sign);
                    if (unknown >= 0) aug.at(eq, unknown) += ExactScalar(pk.sign * sign);
                }
                // -X3(e_p e_q) = -pq.sign * X3[out][pq.index]
                int unknown, sign = 1;
                skew_coeff(out, pq.index, &unknown, &sign);
                if (unknown >= 0) aug.at(eq, 28 + unknown) -= ExactScalar(pq.sign * sign);
            }
        }
    auto ker = kernel_basis(aug);
    if (ker.size() != 1 || ker[0][56].is_zero())
        throw std::logic_error("solve_triality: linear system is not uniquely solvable");
    // homogenization: A y + t * known = 0, the solution is y / t scaled so
    // that the known column has weight one
    ExactScalar t = ker[0][56].inverse();
    LinearMap8 y2(8, 8), y3(8, 8);
    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j) {
            int unknown = i * 8 - i * (i + 1) / 2 + (j - i - 1);
            y2.at(j, i) = t * ker[0][unknown];
            y2.at(i, j) = -y2.at(j, i);
            y3.at(j, i) = t * ker[0][28 + unknown];
            y3.at(i, j) = -y3.at(j, i);
        }
    if (y2 != x2 || y3 != x3)
        throw std::logic_error("solve_triality: direct solution disagrees with (gamma, beta)");
    return {x2, x3};
}

std::vector<LinearMap8> g2_basis() {
    // g2 = { X in so(8) : beta(X) = X and gamma(X) = X }; compute the joint
    // fixed space in E-coordinates.
    ExactMatrix sys(56, 28);
    for (int k = 0; k < 28; ++k) {
        int i = 0, j = 0, left = k;
        for (i = 0; i < 8; ++i) {
            int row_len = 7 - i;
            if (left < row_len) {
                j = i + 1 + left;
                break;
            }
            left -= row_len;
        }
        LinearMap8 e = so8_E(i, j);
        auto bcoords = e_coords(so8_triality_map(TrialityKind::beta, e));
        auto gcoords = e_coords(so8_triality_map(TrialityKind::gamma, e));
        for (int r = 0; r < 28; ++r) {
            sys.at(r, k) = bcoords[r] - (r == k ? ExactScalar(1) : ExactScalar());
            sys.at(28 + r, k) = gcoords[r] - (r == k ? ExactScalar(1) : ExactScalar());
        }
    }
    std::vector<LinearMap8> basis;
    for (const auto& v : kernel_basis(sys)) basis.push_back(from_e_coords(v));
    return basis;
}

}  // namespace e8cat
