#pragma once

#include <vector>

#include "snn/mat.hpp"

namespace snn {

/// Compact SVD of a d1 x d2 matrix with d1 <= d2:
///   A = phi * Diag(sigma) * psi^T,
/// phi d1 x d1 orthogonal, psi d2 x d1 with orthonormal columns (truncated to
/// d1 columns, one per left singular vector), sigma non-negative and
/// non-increasing. Sign convention: in each column of phi the entry of
/// largest magnitude is non-negative (ties broken by lowest row index).
struct CompactSvd {
    Mat phi;
    std::vector<double> sigma;
    Mat psi;

    /// phi * Diag(sigma) * psi^T.
    Mat reconstruct() const;
};

/// Deterministic one-sided Jacobi SVD. Throws DimensionError if
/// a.rows() > a.cols() (callers transpose first), ConvergenceError if the
/// sweep limit is exhausted.
CompactSvd compact_svd(const Mat& a);

/// Singular values only (non-increasing).
std::vector<double> singular_values(const Mat& a);

} // namespace snn
