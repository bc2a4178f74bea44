#pragma once

#include <vector>

#include "snn/mat.hpp"
#include "snn/rng.hpp"
#include "snn/svd.hpp"

namespace snn {

/// Khatri-Rao product of psi (d2 x K) and phi (K x K): column i is
/// vec(phi_i psi_i^T), a (d1*d2) x K matrix. Pure rearrangement of products,
/// so column identities hold bit-exactly.
Mat khatri_rao(const Mat& psi, const Mat& phi);

/// Column-stacking vectorization: vec(A) = [A_{*1}^T ... A_{*d2}^T]^T.
std::vector<double> vec(const Mat& a);

/// Inverse of vec for a known shape.
Mat unvec(const std::vector<double>& v, int rows, int cols);

/// Main diagonal, length min(rows, cols).
std::vector<double> diag_of(const Mat& a);

/// Rectangular diagonal matrix with v on the main diagonal;
/// v.size() must equal min(rows, cols).
Mat rect_diag(const std::vector<double>& v, int rows, int cols);

/// <A, B> = tr(A^T B).
double frobenius_inner(const Mat& a, const Mat& b);

/// Sum of singular values (input of any shape; transposed internally when
/// rows > cols).
double nuclear_norm(const Mat& a);

/// Singular values below this fraction of sigma_max count as zero for rank
/// and effective-rank purposes.
inline constexpr double kSigmaZeroRel = 1e-12;

/// Haar-like random orthogonal matrix: QR of a Gaussian matrix with the R
/// diagonal sign fix.
Mat random_orthogonal(int n, Rng& rng);

/// Minimum-norm least-squares solution of A x = b via SVD pseudoinverse.
/// Relative cutoff on singular values defaults to 1e-12.
std::vector<double> lstsq_min_norm(const Mat& a, const std::vector<double>& b,
                                   double rel_cutoff = 1e-12);

/// Orthonormal basis of the complement of the column space of q (n x k,
/// orthonormal columns); returns n x (n-k).
Mat orth_complement(const Mat& q);

double dot(const std::vector<double>& a, const std::vector<double>& b);
double norm2(const std::vector<double>& v);
std::vector<double> matvec(const Mat& a, const std::vector<double>& x);
std::vector<double> matvec_t(const Mat& a, const std::vector<double>& x);

} // namespace snn
