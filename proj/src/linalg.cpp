#include "snn/linalg.hpp"

#include <algorithm>
#include <cmath>

#include "snn/errors.hpp"

namespace snn {

Mat khatri_rao(const Mat& psi, const Mat& phi) {
    if (phi.rows() != phi.cols() || psi.cols() != phi.cols())
        throw DimensionError("khatri_rao: psi.cols must equal phi.rows = phi.cols");
    const int d1 = phi.rows();
    const int d2 = psi.rows();
    Mat theta(d1 * d2, d1);
    // vec(phi_i psi_i^T)[j*d1 + r] = phi(r,i) * psi(j,i)
    for (int i = 0; i < d1; ++i)
        for (int j = 0; j < d2; ++j)
            for (int r = 0; r < d1; ++r) theta(j * d1 + r, i) = phi(r, i) * psi(j, i);
    return theta;
}

std::vector<double> vec(const Mat& a) {
    std::vector<double> v(size_t(a.rows()) * a.cols());
    for (int j = 0; j < a.cols(); ++j)
        for (int i = 0; i < a.rows(); ++i) v[size_t(j) * a.rows() + i] = a(i, j);
    return v;
}

Mat unvec(const std::vector<double>& v, int rows, int cols) {
    if (int(v.size()) != rows * cols) throw DimensionError("unvec: size mismatch");
    Mat a(rows, cols);
    for (int j = 0; j < cols; ++j)
        for (int i = 0; i < rows; ++i) a(i, j) = v[size_t(j) * rows + i];
    return a;
}

std::vector<double> diag_of(const Mat& a) {
    const int n = std::min(a.rows(), a.cols());
    std::vector<double> d(n);
    for (int i = 0; i < n; ++i) d[i] = a(i, i);
    return d;
}

Mat rect_diag(const std::vector<double>& v, int rows, int cols) {
    if (int(v.size()) != std::min(rows, cols))
        throw DimensionError("rect_diag: need min(rows, cols) diagonal entries");
    Mat a(rows, cols);
    for (int i = 0; i < int(v.size()); ++i) a(i, i) = v[i];
    return a;
}

double frobenius_inner(const Mat& a, const Mat& b) {
    a.require_same_shape(b, "frobenius_inner");
    double s = 0.0;
    auto ea = a.entries();
    auto eb = b.entries();
    for (size_t i = 0; i < ea.size(); ++i) s += ea[i] * eb[i];
    return s;
}

double nuclear_norm(const Mat& a) {
    const auto sv = singular_values(a);
    double s = 0.0;
    for (double x : sv) s += x;
    return s;
}

Mat random_orthogonal(int n, Rng& rng) {
    Mat g(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g(i, j) = rng.normal();
    // Modified Gram-Schmidt QR; sign of R_ii fixes the column sign.
    Mat q(n, n);
    for (int j = 0; j < n; ++j) {
        std::vector<double> v(n);
        for (int i = 0; i < n; ++i) v[i] = g(i, j);
        for (int c = 0; c < j; ++c) {
            double d = 0.0;
            for (int i = 0; i < n; ++i) d += q(i, c) * v[i];
            for (int i = 0; i < n; ++i) v[i] -= d * q(i, c);
        }
        double nrm = norm2(v);
        if (nrm < 1e-12) throw ConvergenceError("random_orthogonal: degenerate draw");
        const double sign = v[j] >= 0 ? 1.0 : -1.0; // R_jj = sign * nrm
        for (int i = 0; i < n; ++i) q(i, j) = sign * v[i] / nrm;
    }
    return q;
}

std::vector<double> lstsq_min_norm(const Mat& a, const std::vector<double>& b,
                                   double rel_cutoff) {
    if (int(b.size()) != a.rows()) throw DimensionError("lstsq_min_norm: rhs size mismatch");
    // Work with the transposed factorization when a is tall.
    const bool tall = a.rows() > a.cols();
    const CompactSvd s = tall ? compact_svd(a.transpose()) : compact_svd(a);
    // a (m x n), m <= n: a = phi Diag(sigma) psi^T, x = psi Diag(1/sigma) phi^T b
    // a tall:            a = psi Diag(sigma) phi^T, x = phi Diag(1/sigma) psi^T b
    const double smax = s.sigma.empty() ? 0.0 : s.sigma[0];
    const double cut = smax * rel_cutoff;
    const Mat& left = tall ? s.psi : s.phi;
    const Mat& right = tall ? s.phi : s.psi;
    std::vector<double> t = matvec_t(left, b); // left^T b
    for (size_t i = 0; i < t.size(); ++i) t[i] = (s.sigma[i] > cut) ? t[i] / s.sigma[i] : 0.0;
    return matvec(right, t);
}

Mat orth_complement(const Mat& q) {
    const int n = q.rows();
    const int k = q.cols();
    if (k >= n) throw DimensionError("orth_complement: no complement");
    Mat out(n, n - k);
    int filled = 0;
    for (int cand = 0; cand < n && filled < n - k; ++cand) {
        std::vector<double> v(n, 0.0);
        v[cand] = 1.0;
        for (int c = 0; c < k; ++c) {
            double d = 0.0;
            for (int i = 0; i < n; ++i) d += q(i, c) * v[i];
            for (int i = 0; i < n; ++i) v[i] -= d * q(i, c);
        }
        for (int c = 0; c < filled; ++c) {
            double d = 0.0;
            for (int i = 0; i < n; ++i) d += out(i, c) * v[i];
            for (int i = 0; i < n; ++i) v[i] -= d * out(i, c);
        }
        const double nrm = norm2(v);
        if (nrm > 0.5) {
            for (int i = 0; i < n; ++i) out(i, filled) = v[i] / nrm;
            ++filled;
        }
    }
    if (filled != n - k) throw ConvergenceError("orth_complement: completion failed");
    return out;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm2(const std::vector<double>& v) { return std::sqrt(dot(v, v)); }

std::vector<double> matvec(const Mat& a, const std::vector<double>& x) {
    if (int(x.size()) != a.cols()) throw DimensionError("matvec: size mismatch");
    std::vector<double> y(a.rows(), 0.0);
    for (int i = 0; i < a.rows(); ++i) {
        double s = 0.0;
        for (int j = 0; j < a.cols(); ++j) s += a(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

std::vector<double> matvec_t(const Mat& a, const std::vector<double>& x) {
    if (int(x.size()) != a.rows()) throw DimensionError("matvec_t: size mismatch");
    std::vector<double> y(a.cols(), 0.0);
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) y[j] += a(i, j) * x[i];
    return y;
}

} // namespace snn
