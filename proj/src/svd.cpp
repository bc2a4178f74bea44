#include "snn/svd.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "snn/errors.hpp"

namespace snn {

namespace {

// Orthonormalize-and-complete: for columns of w with norm <= floor, substitute
// a canonical basis vector orthogonalized against all other columns. Scan
// order over e_1, e_2, ... keeps the completion deterministic.
void complete_orthonormal(Mat& q, const std::vector<bool>& is_null) {
    const int n = q.rows();
    const int k = q.cols();
    for (int j = 0; j < k; ++j) {
        if (!is_null[j]) continue;
        for (int cand = 0; cand < n; ++cand) {
            std::vector<double> v(n, 0.0);
            v[cand] = 1.0;
            for (int c = 0; c < k; ++c) {
                if (c == j) continue;
                if (is_null[c] && c > j) continue; // not yet filled
                double dot = 0.0;
                for (int i = 0; i < n; ++i) dot += q(i, c) * v[i];
                for (int i = 0; i < n; ++i) v[i] -= dot * q(i, c);
            }
            double nrm = 0.0;
            for (double x : v) nrm += x * x;
            nrm = std::sqrt(nrm);
            if (nrm > 0.5) { // candidate not (nearly) in the span
                for (int i = 0; i < n; ++i) q(i, j) = v[i] / nrm;
                break;
            }
        }
    }
}

} // namespace

Mat CompactSvd::reconstruct() const {
    const int d1 = phi.rows();
    Mat scaled = phi; // phi * Diag(sigma)
    for (int j = 0; j < d1; ++j)
        for (int i = 0; i < d1; ++i) scaled(i, j) *= sigma[j];
    return scaled * psi.transpose();
}

CompactSvd compact_svd(const Mat& a) {
    if (a.rows() > a.cols())
        throw DimensionError("compact_svd: rows > cols, transpose the input first");
    const int d1 = a.rows();
    const int d2 = a.cols();

    // One-sided Jacobi on M = A^T (d2 x d1, tall): rotate column pairs of M
    // until mutually orthogonal. M J = Q Diag(sigma) with J accumulating the
    // rotations, so A = J Diag(sigma) Q^T.
    Mat m = a.transpose();
    Mat j = Mat::identity(d1);

    const double eps = 1e-15;
    const int max_sweeps = 60;
    bool converged = false;
    for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
        converged = true;
        for (int p = 0; p < d1 - 1; ++p) {
            for (int q = p + 1; q < d1; ++q) {
                double app = 0.0, aqq = 0.0, apq = 0.0;
                for (int i = 0; i < d2; ++i) {
                    app += m(i, p) * m(i, p);
                    aqq += m(i, q) * m(i, q);
                    apq += m(i, p) * m(i, q);
                }
                if (std::fabs(apq) <= eps * std::sqrt(app * aqq) || apq == 0.0) continue;
                converged = false;
                const double tau = (aqq - app) / (2.0 * apq);
                const double t = (tau >= 0 ? 1.0 : -1.0) / (std::fabs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                for (int i = 0; i < d2; ++i) {
                    const double mp = m(i, p), mq = m(i, q);
                    m(i, p) = c * mp - s * mq;
                    m(i, q) = s * mp + c * mq;
                }
                for (int i = 0; i < d1; ++i) {
                    const double jp = j(i, p), jq = j(i, q);
                    j(i, p) = c * jp - s * jq;
                    j(i, q) = s * jp + c * jq;
                }
            }
        }
    }
    if (!converged) throw ConvergenceError("compact_svd: Jacobi sweeps did not converge");

    std::vector<double> sigma(d1);
    for (int col = 0; col < d1; ++col) {
        double s = 0.0;
        for (int i = 0; i < d2; ++i) s += m(i, col) * m(i, col);
        sigma[col] = std::sqrt(s);
    }

    // Sort descending; stable on ties for determinism.
    std::vector<int> order(d1);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return sigma[x] > sigma[y]; });

    const double sigma_max = sigma.empty() ? 0.0 : sigma[order[0]];
    const double null_floor = sigma_max * 1e-300 + 1e-300; // exact-zero columns only

    CompactSvd out;
    out.phi = Mat(d1, d1);
    out.psi = Mat(d2, d1);
    out.sigma.resize(d1);
    std::vector<bool> is_null(d1, false);
    for (int k = 0; k < d1; ++k) {
        const int src = order[k];
        out.sigma[k] = sigma[src];
        for (int i = 0; i < d1; ++i) out.phi(i, k) = j(i, src);
        if (sigma[src] <= null_floor) {
            is_null[k] = true;
            out.sigma[k] = 0.0;
            continue;
        }
        for (int i = 0; i < d2; ++i) out.psi(i, k) = m(i, src) / sigma[src];
    }
    complete_orthonormal(out.psi, is_null);

    // Sign convention on phi columns, compensated in psi.
    for (int k = 0; k < d1; ++k) {
        int arg = 0;
        double best = std::fabs(out.phi(0, k));
        for (int i = 1; i < d1; ++i) {
            const double v = std::fabs(out.phi(i, k));
            if (v > best) {
                best = v;
                arg = i;
            }
        }
        if (out.phi(arg, k) < 0.0) {
            for (int i = 0; i < d1; ++i) out.phi(i, k) = -out.phi(i, k);
            for (int i = 0; i < d2; ++i) out.psi(i, k) = -out.psi(i, k);
        }
    }
    return out;
}

std::vector<double> singular_values(const Mat& a) {
    if (a.rows() > a.cols()) return compact_svd(a.transpose()).sigma;
    return compact_svd(a).sigma;
}

} // namespace snn
