#include "snn/measurements.hpp"

#include <algorithm>
#include <cmath>

#include "snn/errors.hpp"
#include "snn/linalg.hpp"
#include "snn/rng.hpp"
#include "snn/svd.hpp"

namespace snn {

namespace {

std::vector<double> sorted_uniform_desc(Rng& rng, int n) {
    std::vector<double> v(n);
    for (auto& x : v) x = rng.uniform();
    std::sort(v.begin(), v.end(), std::greater<>());
    return v;
}

// Smallest c >= 0 with min singular value of (X + c I_rect) >= level.
// Monotone for the PSD targets this library generates; verified after the
// search either way.
double smallest_positivity_shift(const Mat& x, double level) {
    auto min_sv = [&](double c) {
        Mat shifted = x + c * Mat::rect_identity(x.rows(), x.cols());
        const Mat probe = shifted.rows() <= shifted.cols() ? shifted : shifted.transpose();
        const auto sv = singular_values(probe);
        return sv.back();
    };
    if (min_sv(0.0) >= level) return 0.0;
    double hi = level;
    while (min_sv(hi) < level) {
        hi *= 2.0;
        if (hi > 1e6) throw InfeasibleInit("positivity shift: no feasible c found");
    }
    double lo = 0.0;
    for (int it = 0; it < 80; ++it) {
        const double mid = 0.5 * (lo + hi);
        (min_sv(mid) >= level ? hi : lo) = mid;
    }
    return hi;
}

} // namespace

GroundTruth gen_ground_truth(int d1, int d2, int inner_dim, std::uint64_t seed) {
    if (d1 <= 0 || d2 <= 0 || inner_dim <= 0)
        throw DimensionError("gen_ground_truth: dimensions must be positive");
    Rng rng = Rng::stream(seed, Stream::GroundTruth);
    Mat xt(d1, inner_dim);
    for (int i = 0; i < d1; ++i)
        for (int j = 0; j < inner_dim; ++j) xt(i, j) = rng.uniform();
    Mat x;
    if (d1 == d2) {
        x = xt * xt.transpose();
    } else {
        Mat yt(d2, inner_dim);
        for (int i = 0; i < d2; ++i)
            for (int j = 0; j < inner_dim; ++j) yt(i, j) = rng.uniform();
        x = xt * yt.transpose();
    }
    const double nn = nuclear_norm(x);
    if (nn <= 0.0) throw InvariantViolation("gen_ground_truth: zero target");
    x *= 1.0 / nn;
    return {x, nn};
}

MeasurementEnsemble gen_commuting_ensemble(int d1, int d2, int m, std::uint64_t seed,
                                           GroundTruth& target, PhiPsiSource source) {
    if (d1 > d2) throw DimensionError("gen_commuting_ensemble: requires d1 <= d2");
    if (m < d1) throw DimensionError("gen_commuting_ensemble: requires m >= d1");
    if (target.x_star.rows() != d1 || target.x_star.cols() != d2)
        throw DimensionError("gen_commuting_ensemble: target shape mismatch");

    MeasurementEnsemble e;
    e.kind = EnsembleKind::Commuting;

    const double positivity_floor = 1e-12;
    Mat phi(1, 1), psi(1, 1);
    std::vector<double> sigma_star;

    if (source == PhiPsiSource::SvdOfTarget) {
        CompactSvd s = compact_svd(target.x_star);
        if (s.sigma.back() <= positivity_floor * std::max(1.0, s.sigma.front())) {
            // Rank-deficient target: shift, then re-derive the factors from
            // the shifted matrix so sigma* is its (positive) spectrum.
            const double c = smallest_positivity_shift(target.x_star, 0.05);
            target.x_star += c * Mat::rect_identity(d1, d2);
            e.shift_c = c;
            s = compact_svd(target.x_star);
        }
        phi = s.phi;
        psi = s.psi;
        sigma_star = s.sigma;
    } else {
        Rng orng = Rng::stream(seed, Stream::Orthogonal);
        phi = random_orthogonal(d1, orng);
        Mat psi_full = random_orthogonal(d2, orng);
        psi = Mat(d2, d1);
        for (int i = 0; i < d2; ++i)
            for (int j = 0; j < d1; ++j) psi(i, j) = psi_full(i, j);
        sigma_star = diag_of(phi.transpose() * target.x_star * psi);
        double min_s = *std::min_element(sigma_star.begin(), sigma_star.end());
        if (min_s <= positivity_floor) {
            // sigma*(c) = sigma* + c * diag(phi^T I psi); linear in c.
            const std::vector<double> t = diag_of(phi.transpose() * Mat::rect_identity(d1, d2) * psi);
            double c = 0.0;
            for (int i = 0; i < d1; ++i) {
                if (sigma_star[i] >= 0.05) continue;
                if (t[i] <= 0.0)
                    throw InfeasibleInit(
                        "gen_commuting_ensemble: positivity shift infeasible for this frame");
                c = std::max(c, (0.05 - sigma_star[i]) / t[i]);
            }
            target.x_star += c * Mat::rect_identity(d1, d2);
            e.shift_c = c;
            sigma_star = diag_of(phi.transpose() * target.x_star * psi);
        }
    }

    Rng rng = Rng::stream(seed, Stream::Ensemble);
    Mat b(d1, m);
    e.a.reserve(m);
    const Mat psi_t = psi.transpose();
    for (int i = 0; i < m; ++i) {
        const auto sv = sorted_uniform_desc(rng, d1);
        for (int r = 0; r < d1; ++r) b(r, i) = sv[r];
        e.a.push_back(phi * rect_diag(sv, d1, d1) * psi_t);
    }

    e.phi = phi;
    e.psi = psi;
    e.b = b;
    e.c = b * b.transpose();
    e.sigma_star = sigma_star;
    measure(e, target.x_star, 0.0, seed);

    // Assumption checks before handing the ensemble out.
    if (quasi_commute_check(e.a) > 1e-9)
        throw InvariantViolation("gen_commuting_ensemble: quasi-commutation failed");
    std::vector<double> ones(d1, 1.0);
    const auto nu = lstsq_min_norm(b.transpose(), ones);
    auto bn = matvec(b, nu);
    double res = 0.0;
    for (int i = 0; i < d1; ++i) res += (bn[i] - 1.0) * (bn[i] - 1.0);
    if (std::sqrt(res) > 1e-8)
        throw InvariantViolation("gen_commuting_ensemble: ones not in range(B)");
    for (double s : sigma_star)
        if (s <= 0.0) throw InvariantViolation("gen_commuting_ensemble: sigma* not positive");

    return e;
}

MeasurementEnsemble gen_gaussian_ensemble(int d1, int d2, int m, std::uint64_t seed) {
    if (d1 <= 0 || d2 <= 0 || m <= 0)
        throw DimensionError("gen_gaussian_ensemble: dimensions must be positive");
    MeasurementEnsemble e;
    e.kind = EnsembleKind::Gaussian;
    Rng rng = Rng::stream(seed, Stream::Ensemble);
    e.a.reserve(m);
    for (int k = 0; k < m; ++k) {
        Mat a(d1, d2);
        for (int i = 0; i < d1; ++i)
            for (int j = 0; j < d2; ++j) a(i, j) = rng.normal();
        e.a.push_back(std::move(a));
    }
    e.y.assign(m, 0.0);
    return e;
}

void measure(MeasurementEnsemble& e, const Mat& x_star, double noise_std, std::uint64_t seed) {
    e.y.resize(e.a.size());
    Rng noise = Rng::stream(seed, Stream::Noise);
    for (size_t i = 0; i < e.a.size(); ++i) {
        e.a[i].require_same_shape(x_star, "measure");
        e.y[i] = frobenius_inner(e.a[i], x_star);
        if (noise_std != 0.0) e.y[i] += noise_std * noise.normal();
    }
}

double quasi_commute_check(std::span<const Mat> a_list) {
    double worst = 0.0;
    for (size_t i = 0; i < a_list.size(); ++i) {
        for (size_t j = i + 1; j < a_list.size(); ++j) {
            const Mat& ai = a_list[i];
            const Mat& aj = a_list[j];
            ai.require_same_shape(aj, "quasi_commute_check");
            const Mat left = ai * aj.transpose() - aj * ai.transpose();
            const Mat right = ai.transpose() * aj - aj.transpose() * ai;
            worst = std::max({worst, left.frobenius_norm(), right.frobenius_norm()});
        }
    }
    return worst;
}

} // namespace snn
