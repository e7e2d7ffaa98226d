#pragma once

#include <vector>

#include "hek/rational.hpp"

namespace hek {

/**
 * Reduced row echelon form over an exact field scalar (pivots scaled to 1,
 * pivot columns cleared above and below).  Column order is respected: the
 * pivot search scans columns left to right, so callers control which
 * unknowns become pivots by ordering columns.
 *
 * If pivots is non-null it receives the pivot column index of each pivot row.
 */
template <class T>
Matrix<T> row_echelon_form(Matrix<T> a, std::vector<int>* pivots = nullptr) {
    const Eigen::Index rows = a.rows(), cols = a.cols();
    if (pivots) pivots->clear();
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
        Eigen::Index lead = -1;
        for (Eigen::Index i = r; i < rows; ++i)
            if (a(i, c) != 0) {
                lead = i;
                break;
            }
        if (lead < 0) continue;
        if (lead != r) a.row(lead).swap(a.row(r));
        const T inv = T(1) / a(r, c);
        for (Eigen::Index j = c; j < cols; ++j) a(r, j) *= inv;
        for (Eigen::Index i = 0; i < rows; ++i) {
            if (i == r || a(i, c) == 0) continue;
            const T f = a(i, c);
            for (Eigen::Index j = c; j < cols; ++j) a(i, j) -= f * a(r, j);
        }
        if (pivots) pivots->push_back(static_cast<int>(c));
        ++r;
    }
    return a;
}

template <class T>
int rank_of(const Matrix<T>& a) {
    std::vector<int> pivots;
    row_echelon_form(a, &pivots);
    return static_cast<int>(pivots.size());
}

/**
 * Basis of the right nullspace of a, one column per free variable, computed
 * from the reduced echelon form.  The free variable of each basis column is
 * set to 1, so columns are readable against the original unknown order.
 */
template <class T>
Matrix<T> kernel(const Matrix<T>& a) {
    std::vector<int> pivots;
    const Matrix<T> r = row_echelon_form(a, &pivots);
    const Eigen::Index cols = a.cols();
    std::vector<bool> is_pivot(cols, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<int> free_cols;
    for (Eigen::Index c = 0; c < cols; ++c)
        if (!is_pivot[c]) free_cols.push_back(static_cast<int>(c));

    Matrix<T> basis = Matrix<T>::Zero(cols, static_cast<Eigen::Index>(free_cols.size()));
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        const int fc = free_cols[k];
        basis(fc, static_cast<Eigen::Index>(k)) = T(1);
        for (std::size_t i = 0; i < pivots.size(); ++i)
            basis(pivots[i], static_cast<Eigen::Index>(k)) = -r(static_cast<Eigen::Index>(i), fc);
    }
    return basis;
}

/** Determinant by exact Gaussian elimination. */
template <class T>
T exact_det(Matrix<T> a) {
    const Eigen::Index n = a.rows();
    if (n != a.cols()) throw std::invalid_argument("exact_det: square matrix required");
    T det(1);
    for (Eigen::Index c = 0; c < n; ++c) {
        Eigen::Index lead = -1;
        for (Eigen::Index i = c; i < n; ++i)
            if (a(i, c) != 0) {
                lead = i;
                break;
            }
        if (lead < 0) return T(0);
        if (lead != c) {
            a.row(lead).swap(a.row(c));
            det = -det;
        }
        det *= a(c, c);
        const T inv = T(1) / a(c, c);
        for (Eigen::Index i = c + 1; i < n; ++i) {
            if (a(i, c) == 0) continue;
            const T f = a(i, c) * inv;
            for (Eigen::Index j = c; j < n; ++j) a(i, j) -= f * a(c, j);
        }
    }
    return det;
}

}  // namespace hek
