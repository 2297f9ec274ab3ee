#pragma once

/**
 * Exact rational and integer linear algebra: determinants, inverses, linear
 * solves, Hermite and Smith normal forms, and LLL basis reduction.
 *
 * Everything works on dense matrices at desk scale (d <= ~6); asymptotics are
 * not a goal here, exactness is.
 */

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "latcount/errors.hpp"
#include "latcount/rational.hpp"

namespace latcount {

class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t r, std::size_t c) : rows_(r), cols_(c), m_(r, RatVec(c, Rat(0))) {}

    static RatMatrix identity(std::size_t n) {
        RatMatrix I(n, n);
        for (std::size_t i = 0; i < n; ++i)
            I.at(i, i) = 1;
        return I;
    }

    static RatMatrix from_rows(std::vector<RatVec> rows) {
        RatMatrix M;
        M.rows_ = rows.size();
        M.cols_ = rows.empty() ? 0 : rows.front().size();
        for (const auto& r : rows)
            if (r.size() != M.cols_)
                throw DimensionMismatch("from_rows: ragged rows");
        M.m_ = std::move(rows);
        return M;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Rat& at(std::size_t i, std::size_t j) { return m_[i][j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return m_[i][j]; }
    RatVec& row(std::size_t i) { return m_[i]; }
    const RatVec& row(std::size_t i) const { return m_[i]; }

    RatVec column(std::size_t j) const {
        RatVec c(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            c[i] = m_[i][j];
        return c;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<RatVec> m_;
};

using IntMat = std::vector<IntVec>;

inline RatMatrix to_rat_matrix(const IntMat& M) {
    std::vector<RatVec> rows;
    rows.reserve(M.size());
    for (const auto& r : M)
        rows.push_back(to_rat(r));
    return RatMatrix::from_rows(std::move(rows));
}

/// Matrix whose columns are the given integer vectors.
inline RatMatrix columns_matrix(const std::vector<IntVec>& cols) {
    if (cols.empty())
        throw DimensionMismatch("columns_matrix: no columns");
    std::size_t d = cols.front().size();
    RatMatrix M(d, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != d)
            throw DimensionMismatch("columns_matrix: ragged columns");
        for (std::size_t i = 0; i < d; ++i)
            M.at(i, j) = Rat(cols[j][i]);
    }
    return M;
}

inline RatVec mat_vec(const RatMatrix& M, const RatVec& x) {
    if (M.cols() != x.size())
        throw DimensionMismatch("mat_vec: size mismatch");
    RatVec y(M.rows(), Rat(0));
    for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t j = 0; j < M.cols(); ++j)
            y[i] += M.at(i, j) * x[j];
    return y;
}

inline RatMatrix mat_mul(const RatMatrix& A, const RatMatrix& B) {
    if (A.cols() != B.rows())
        throw DimensionMismatch("mat_mul: size mismatch");
    RatMatrix C(A.rows(), B.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t k = 0; k < A.cols(); ++k)
            if (A.at(i, k) != 0)
                for (std::size_t j = 0; j < B.cols(); ++j)
                    C.at(i, j) += A.at(i, k) * B.at(k, j);
    return C;
}

/// Exact determinant by rational Gaussian elimination.
inline Rat det(RatMatrix M) {
    if (!M.square())
        throw DimensionMismatch("det: matrix not square");
    std::size_t n = M.rows();
    Rat result = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && M.at(piv, col) == 0)
            ++piv;
        if (piv == n)
            return Rat(0);
        if (piv != col) {
            std::swap(M.row(piv), M.row(col));
            result = -result;
        }
        result *= M.at(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (M.at(i, col) == 0)
                continue;
            Rat f = M.at(i, col) / M.at(col, col);
            for (std::size_t j = col; j < n; ++j)
                M.at(i, j) -= f * M.at(col, j);
        }
    }
    return result;
}

inline Int int_det(const IntMat& M) {
    Rat d = det(to_rat_matrix(M));
    if (!is_integer(d))
        throw InternalError("int_det: non-integer determinant");
    return rat_num(d);
}

/// Exact inverse by Gauss-Jordan elimination; throws SingularMatrix.
inline RatMatrix inverse(RatMatrix M) {
    if (!M.square())
        throw DimensionMismatch("inverse: matrix not square");
    std::size_t n = M.rows();
    RatMatrix inv = RatMatrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && M.at(piv, col) == 0)
            ++piv;
        if (piv == n)
            throw SingularMatrix("inverse: singular matrix");
        if (piv != col) {
            std::swap(M.row(piv), M.row(col));
            std::swap(inv.row(piv), inv.row(col));
        }
        Rat p = M.at(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            M.at(col, j) /= p;
            inv.at(col, j) /= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || M.at(i, col) == 0)
                continue;
            Rat f = M.at(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                M.at(i, j) -= f * M.at(col, j);
                inv.at(i, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

/// Solve M x = b for square nonsingular M.
inline RatVec solve(const RatMatrix& M, const RatVec& b) {
    return mat_vec(inverse(M), b);
}

inline std::size_t rank(RatMatrix M) {
    std::size_t r = 0;
    std::size_t nrows = M.rows(), ncols = M.cols();
    for (std::size_t col = 0; col < ncols && r < nrows; ++col) {
        std::size_t piv = r;
        while (piv < nrows && M.at(piv, col) == 0)
            ++piv;
        if (piv == nrows)
            continue;
        if (piv != r)
            std::swap(M.row(piv), M.row(r));
        for (std::size_t i = r + 1; i < nrows; ++i) {
            if (M.at(i, col) == 0)
                continue;
            Rat f = M.at(i, col) / M.at(r, col);
            for (std::size_t j = col; j < ncols; ++j)
                M.at(i, j) -= f * M.at(r, j);
        }
        ++r;
    }
    return r;
}

/**
 * One nonzero kernel vector of M (n columns, any row count), deterministic:
 * the first free column in echelon order gets value 1.  Throws SingularMatrix
 * when the kernel is trivial.
 */
inline RatVec kernel_vector(RatMatrix M) {
    std::size_t nrows = M.rows(), ncols = M.cols();
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t col = 0; col < ncols && r < nrows; ++col) {
        std::size_t piv = r;
        while (piv < nrows && M.at(piv, col) == 0)
            ++piv;
        if (piv == nrows)
            continue;
        if (piv != r)
            std::swap(M.row(piv), M.row(r));
        Rat p = M.at(r, col);
        for (std::size_t j = col; j < ncols; ++j)
            M.at(r, j) /= p;
        for (std::size_t i = 0; i < nrows; ++i) {
            if (i == r || M.at(i, col) == 0)
                continue;
            Rat f = M.at(i, col);
            for (std::size_t j = col; j < ncols; ++j)
                M.at(i, j) -= f * M.at(r, j);
        }
        pivot_col.push_back(col);
        ++r;
    }
    // first free column
    std::size_t free_col = ncols;
    for (std::size_t col = 0, k = 0; col < ncols; ++col) {
        if (k < pivot_col.size() && pivot_col[k] == col) {
            ++k;
            continue;
        }
        free_col = col;
        break;
    }
    if (free_col == ncols)
        throw SingularMatrix("kernel_vector: trivial kernel");
    RatVec x(ncols, Rat(0));
    x[free_col] = 1;
    for (std::size_t k = 0; k < pivot_col.size(); ++k)
        x[pivot_col[k]] = -M.at(k, free_col);
    return x;
}

namespace detail {

inline void negate_row(IntVec& r) {
    for (auto& x : r)
        x = -x;
}

} // namespace detail

/**
 * Row-style Hermite normal form of a full-row-rank integer matrix: H = U * M
 * with U unimodular, H in echelon form with positive pivots and the entries
 * above each pivot reduced into [0, pivot).  Canonical, so two bases span the
 * same lattice iff their HNFs are equal.
 */
inline IntMat hnf(IntMat M) {
    std::size_t nrows = M.size();
    if (nrows == 0)
        return M;
    std::size_t ncols = M.front().size();
    std::size_t r = 0;
    for (std::size_t col = 0; col < ncols && r < nrows; ++col) {
        // Euclid on rows r..end until at most one nonzero entry in this column
        while (true) {
            std::size_t best = nrows;
            for (std::size_t i = r; i < nrows; ++i)
                if (M[i][col] != 0 && (best == nrows || abs_int(M[i][col]) < abs_int(M[best][col])))
                    best = i;
            if (best == nrows)
                break; // column all zero below
            std::swap(M[best], M[r]);
            bool cleared = true;
            for (std::size_t i = r + 1; i < nrows; ++i) {
                if (M[i][col] == 0)
                    continue;
                Int q = M[i][col] / M[r][col]; // truncated division is fine for Euclid
                for (std::size_t j = 0; j < ncols; ++j)
                    M[i][j] -= q * M[r][j];
                if (M[i][col] != 0)
                    cleared = false;
            }
            if (cleared)
                break;
        }
        if (M[r][col] == 0)
            continue;
        if (M[r][col] < 0)
            detail::negate_row(M[r]);
        for (std::size_t i = 0; i < r; ++i) {
            Int q = M[i][col] / M[r][col];
            if (M[i][col] - q * M[r][col] < 0)
                --q; // floor division: residues in [0, pivot)
            if (q != 0)
                for (std::size_t j = 0; j < ncols; ++j)
                    M[i][j] -= q * M[r][j];
        }
        ++r;
    }
    return M;
}

struct SmithNormalForm {
    IntMat U, D, V; // U * M * V = D, U and V unimodular, D = diag(d_1 | d_2 | ...)
};

/// Smith normal form of a square nonsingular integer matrix.
inline SmithNormalForm snf(IntMat M) {
    std::size_t n = M.size();
    for (const auto& r : M)
        if (r.size() != n)
            throw DimensionMismatch("snf: matrix not square");
    if (int_det(M) == 0)
        throw SingularMatrix("snf: singular matrix");

    IntMat U(n, IntVec(n, 0)), V(n, IntVec(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        U[i][i] = V[i][i] = 1;

    auto row_sub = [&](std::size_t i, std::size_t k, const Int& q) {
        for (std::size_t j = 0; j < n; ++j) {
            M[i][j] -= q * M[k][j];
            U[i][j] -= q * U[k][j];
        }
    };
    auto col_sub = [&](std::size_t j, std::size_t k, const Int& q) {
        for (std::size_t i = 0; i < n; ++i) {
            M[i][j] -= q * M[i][k];
            V[i][j] -= q * V[i][k];
        }
    };

    for (std::size_t t = 0; t < n; ++t) {
        while (true) {
            // smallest nonzero entry of the trailing submatrix into the pivot slot
            std::size_t pi = n, pj = n;
            for (std::size_t i = t; i < n; ++i)
                for (std::size_t j = t; j < n; ++j)
                    if (M[i][j] != 0 &&
                        (pi == n || abs_int(M[i][j]) < abs_int(M[pi][pj]))) {
                        pi = i;
                        pj = j;
                    }
            if (pi == n)
                throw SingularMatrix("snf: rank deficiency");
            if (pi != t) {
                std::swap(M[pi], M[t]);
                std::swap(U[pi], U[t]);
            }
            if (pj != t)
                for (std::size_t i = 0; i < n; ++i) {
                    std::swap(M[i][pj], M[i][t]);
                    std::swap(V[i][pj], V[i][t]);
                }
            if (M[t][t] < 0) {
                detail::negate_row(M[t]);
                detail::negate_row(U[t]);
            }
            bool clean = true;
            for (std::size_t i = t + 1; i < n; ++i)
                if (M[i][t] != 0) {
                    row_sub(i, t, M[i][t] / M[t][t]);
                    if (M[i][t] != 0)
                        clean = false;
                }
            for (std::size_t j = t + 1; j < n; ++j)
                if (M[t][j] != 0) {
                    col_sub(j, t, M[t][j] / M[t][t]);
                    if (M[t][j] != 0)
                        clean = false;
                }
            if (!clean)
                continue;
            // enforce divisibility: fold any non-divisible entry into this column
            bool fixed = false;
            for (std::size_t i = t + 1; i < n && !fixed; ++i)
                for (std::size_t j = t + 1; j < n && !fixed; ++j)
                    if (M[i][j] % M[t][t] != 0) {
                        col_sub(t, j, Int(-1)); // add column j to column t
                        fixed = true;
                    }
            if (!fixed)
                break;
        }
    }

    IntMat D(n, IntVec(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        D[i][i] = M[i][i];
    return SmithNormalForm{std::move(U), std::move(D), std::move(V)};
}

/**
 * LLL reduction (delta = 3/4) of a basis given as matrix rows.  Rows may be
 * rational; the output spans the same lattice.  Throws DependentRows.
 */
inline RatMatrix lll_reduce(RatMatrix B, const Rat& delta = Rat(3, 4)) {
    std::size_t n = B.rows();
    if (n == 0)
        return B;

    std::vector<RatVec> star(n);
    std::vector<RatVec> mu(n, RatVec(n, Rat(0)));
    std::vector<Rat> norm2(n);

    auto gram_schmidt = [&]() {
        for (std::size_t i = 0; i < n; ++i) {
            star[i] = B.row(i);
            for (std::size_t j = 0; j < i; ++j) {
                mu[i][j] = dot(B.row(i), star[j]) / norm2[j];
                star[i] = vec_sub(star[i], vec_scale(mu[i][j], star[j]));
            }
            norm2[i] = dot(star[i], star[i]);
            if (norm2[i] == 0)
                throw DependentRows("lll_reduce: rows are linearly dependent");
        }
    };

    gram_schmidt();
    std::size_t k = 1;
    while (k < n) {
        for (std::size_t jj = k; jj-- > 0;) {
            Int r = round_half_up(mu[k][jj]);
            if (r != 0) {
                B.row(k) = vec_sub(B.row(k), vec_scale(Rat(r), B.row(jj)));
                gram_schmidt();
            }
        }
        if (norm2[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * norm2[k - 1]) {
            ++k;
        } else {
            std::swap(B.row(k), B.row(k - 1));
            gram_schmidt();
            k = (k > 1) ? k - 1 : 1;
        }
    }
    return B;
}

} // namespace latcount
