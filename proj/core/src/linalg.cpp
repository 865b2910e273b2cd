#include "e8cat/linalg.hpp"

#include <algorithm>
#include <limits>

namespace e8cat {

namespace {

struct Row {
    ExactVector v;
    size_t nnz = 0;

    void recount() {
        nnz = 0;
        for (const auto& x : v)
            if (!x.is_zero()) ++nnz;
    }
};

std::vector<Row> to_rows(const ExactMatrix& m) {
    std::vector<Row> rows(m.rows());
    for (size_t i = 0; i < m.rows(); ++i) {
        rows[i].v = m.row(i);
        rows[i].recount();
    }
    return rows;
}

// Forward elimination with sparsity-aware pivoting. Pivot rows are chosen by
// minimal fill (fewest nonzeros), and within the row by simplest coefficient,
// which keeps the signed-permutation-like matrices of this project cheap.
// Returns the rank; if pivot_cols is non-null also records pivot columns and
// leaves `rows` in echelon order (pivot rows first, in order).
size_t eliminate(std::vector<Row>& rows, std::vector<size_t>* pivot_cols) {
    const size_t nrows = rows.size();
    size_t rank = 0;
    std::vector<char> done(nrows, 0);
    for (;;) {
        size_t best = nrows;
        for (size_t i = 0; i < nrows; ++i) {
            if (done[i] || rows[i].nnz == 0) continue;
            if (best == nrows || rows[i].nnz < rows[best].nnz) best = i;
        }
        if (best == nrows) break;

        Row& p = rows[best];
        size_t pc = p.v.size();
        size_t best_cx = std::numeric_limits<size_t>::max();
        for (size_t c = 0; c < p.v.size(); ++c) {
            if (p.v[c].is_zero()) continue;
            size_t cx = p.v[c].complexity();
            if (cx < best_cx) {
                best_cx = cx;
                pc = c;
            }
        }
        const ExactScalar pinv = p.v[pc].inverse();
        for (size_t i = 0; i < nrows; ++i) {
            // In kernel mode reduce fully (Gauss-Jordan); for rank, forward
            // elimination on the unprocessed rows is enough.
            if (i == best || rows[i].v[pc].is_zero() || (done[i] && !pivot_cols)) continue;
            Row& r = rows[i];
            ExactScalar f = r.v[pc] * pinv;
            for (size_t c = 0; c < r.v.size(); ++c) {
                if (p.v[c].is_zero()) continue;
                r.v[c].submul(f, p.v[c]);
            }
            r.v[pc] = ExactScalar();
            r.recount();
        }
        done[best] = 1;
        ++rank;
        if (pivot_cols) {
            pivot_cols->push_back(pc);
            std::swap(rows[rank - 1], rows[best]);
            std::swap(done[rank - 1], done[best]);
        }
    }
    return rank;
}

}  // namespace

size_t rank(const ExactMatrix& m) {
    auto rows = to_rows(m);
    return eliminate(rows, nullptr);
}

ExactScalar determinant(const ExactMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: not square");
    const size_t n = m.rows();
    auto rows = to_rows(m);
    ExactScalar det(1);
    std::vector<char> used_row(n, 0), used_col(n, 0);
    int swaps = 0;
    std::vector<size_t> row_of_col(n), col_of_step;
    for (size_t step = 0; step < n; ++step) {
        size_t pr = n, pc = n;
        for (size_t i = 0; i < n && pr == n; ++i) {
            if (used_row[i]) continue;
            for (size_t c = 0; c < n; ++c)
                if (!used_col[c] && !rows[i].v[c].is_zero()) {
                    pr = i;
                    pc = c;
                    break;
                }
        }
        if (pr == n) return ExactScalar();  // singular
        used_row[pr] = used_col[pc] = 1;
        row_of_col[pc] = pr;
        col_of_step.push_back(pc);
        det *= rows[pr].v[pc];
        ExactScalar pinv = rows[pr].v[pc].inverse();
        for (size_t i = 0; i < n; ++i) {
            if (used_row[i] || rows[i].v[pc].is_zero()) continue;
            ExactScalar f = rows[i].v[pc] * pinv;
            for (size_t c = 0; c < n; ++c)
                if (!rows[pr].v[c].is_zero()) rows[i].v[c].submul(f, rows[pr].v[c]);
            rows[i].v[pc] = ExactScalar();
        }
    }
    // parity of the pivot permutation (column step -> row)
    std::vector<size_t> perm(n);
    for (size_t step = 0; step < n; ++step) perm[step] = row_of_col[col_of_step[step]];
    std::vector<char> seen(n, 0);
    for (size_t i = 0; i < n; ++i) {
        if (seen[i]) continue;
        size_t len = 0, j = i;
        while (!seen[j]) {
            seen[j] = 1;
            j = perm[j];
            ++len;
        }
        swaps += static_cast<int>(len - 1);
    }
    // also account for column order vs natural order
    std::vector<size_t> cperm = col_of_step;
    std::fill(seen.begin(), seen.end(), 0);
    for (size_t i = 0; i < n; ++i) {
        if (seen[i]) continue;
        size_t len = 0, j = i;
        while (!seen[j]) {
            seen[j] = 1;
            j = cperm[j];
            ++len;
        }
        swaps += static_cast<int>(len - 1);
    }
    return (swaps % 2) ? -det : det;
}

std::vector<ExactVector> kernel_basis(const ExactMatrix& m) {
    auto rows = to_rows(m);
    std::vector<size_t> pivot_cols;
    size_t r = eliminate(rows, &pivot_cols);

    // Rows 0..r-1 now hold a (fully reduced) echelon system: the elimination
    // above clears the pivot column in *all* other rows, so each pivot
    // variable appears in exactly one row.
    const size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (size_t c : pivot_cols) is_pivot[c] = true;

    std::vector<ExactVector> basis;
    basis.reserve(n - r);
    for (size_t free_c = 0; free_c < n; ++free_c) {
        if (is_pivot[free_c]) continue;
        ExactVector v(n);
        v[free_c] = ExactScalar(1);
        for (size_t i = 0; i < r; ++i) {
            const ExactVector& row = rows[i].v;
            if (row[free_c].is_zero()) continue;
            // pivot_cols[i] * x = -row[free_c] * x_free
            v[pivot_cols[i]] = -(row[free_c] / row[pivot_cols[i]]);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

namespace {

size_t corank_shifted(const ExactMatrix& m, int shift) {
    // rank of (M - shift*I) computed without materializing the sum
    std::vector<Row> rows(m.rows());
    for (size_t i = 0; i < m.rows(); ++i) {
        rows[i].v = m.row(i);
        rows[i].v[i] -= ExactScalar(shift);
        rows[i].recount();
    }
    return m.cols() - eliminate(rows, nullptr);
}

}  // namespace

FixedDims fixed_space_dims(const ExactMatrix& m) {
    if (m.rows() != m.cols()) throw NotInvolution("fixed_space_dims: matrix not square");
    size_t dp = corank_shifted(m, 1);
    size_t dm = corank_shifted(m, -1);
    if (dp + dm != m.rows())
        throw NotInvolution("fixed_space_dims: matrix does not square to identity");
    return FixedDims{dp, dm};
}

size_t fixed_dim_plus(const ExactMatrix& m) {
    if (m.rows() != m.cols()) throw NotInvolution("fixed_dim_plus: matrix not square");
    return corank_shifted(m, 1);
}

SubspaceSolver::SubspaceSolver(std::vector<ExactVector> basis)
    : ambient_(basis.empty() ? 0 : basis[0].size()), basis_(std::move(basis)) {
    ortho_.reserve(basis_.size());
    ortho_self_.reserve(basis_.size());
    ortho_in_basis_.reserve(basis_.size());
    for (size_t k = 0; k < basis_.size(); ++k) {
        if (basis_[k].size() != ambient_)
            throw std::invalid_argument("SubspaceSolver: inconsistent vector sizes");
        ExactVector o = basis_[k];
        ExactVector in_basis(basis_.size());
        in_basis[k] = ExactScalar(1);
        for (size_t j = 0; j < k; ++j) {
            ExactScalar mu = dot(o, ortho_[j]) / ortho_self_[j];
            if (mu.is_zero()) continue;
            for (size_t c = 0; c < ambient_; ++c)
                if (!ortho_[j][c].is_zero()) o[c].submul(mu, ortho_[j][c]);
            for (size_t c = 0; c < basis_.size(); ++c)
                if (!ortho_in_basis_[j][c].is_zero()) in_basis[c].submul(mu, ortho_in_basis_[j][c]);
        }
        ExactScalar self = dot(o, o);
        if (self.is_zero()) throw std::invalid_argument("SubspaceSolver: basis not independent");
        ortho_.push_back(std::move(o));
        ortho_self_.push_back(std::move(self));
        ortho_in_basis_.push_back(std::move(in_basis));
    }
}

ExactVector SubspaceSolver::coordinates(const ExactVector& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("SubspaceSolver: wrong ambient size");
    ExactVector coords(basis_.size());
    ExactVector resid = v;
    for (size_t k = 0; k < ortho_.size(); ++k) {
        ExactScalar c = dot(resid, ortho_[k]) / ortho_self_[k];
        if (c.is_zero()) continue;
        for (size_t j = 0; j < ambient_; ++j)
            if (!ortho_[k][j].is_zero()) resid[j].submul(c, ortho_[k][j]);
        for (size_t j = 0; j < basis_.size(); ++j)
            if (!ortho_in_basis_[k][j].is_zero()) coords[j] += c * ortho_in_basis_[k][j];
    }
    if (!is_zero_vector(resid))
        throw NotInvariant("SubspaceSolver: vector leaves the span");
    return coords;
}

bool SubspaceSolver::contains(const ExactVector& v) const {
    ExactVector resid = v;
    for (size_t k = 0; k < ortho_.size(); ++k) {
        ExactScalar c = dot(resid, ortho_[k]) / ortho_self_[k];
        if (c.is_zero()) continue;
        for (size_t j = 0; j < ambient_; ++j)
            if (!ortho_[k][j].is_zero()) resid[j].submul(c, ortho_[k][j]);
    }
    return is_zero_vector(resid);
}

ExactMatrix restrict_to_subspace(const ExactMatrix& m, const SubspaceSolver& solver) {
    const size_t k = solver.dim();
    ExactMatrix out(k, k);
    for (size_t j = 0; j < k; ++j) {
        ExactVector img = m.apply(solver.basis()[j]);
        ExactVector coords = solver.coordinates(img);  // throws NotInvariant
        for (size_t i = 0; i < k; ++i) out.at(i, j) = coords[i];
    }
    return out;
}

ExactMatrix restrict_to_subspace(const ExactMatrix& m, const std::vector<ExactVector>& basis) {
    return restrict_to_subspace(m, SubspaceSolver(basis));
}

}  // namespace e8cat
