#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "snn/mat.hpp"

namespace snn {

enum class EnsembleKind { Commuting, Gaussian };
enum class PhiPsiSource { SvdOfTarget, RandomOrthogonal };

/// Ground truth X* together with the nuclear norm it was scaled by.
struct GroundTruth {
    Mat x_star;
    double normalization = 1.0;
};

/// The m sensing matrices plus, for commuting ensembles, the derived
/// spectral objects: shared factors (phi, psi), the singular-value matrix
/// B (column i = sigma^(i)), C = B B^T, and the target spectrum sigma*.
struct MeasurementEnsemble {
    std::vector<Mat> a;
    std::optional<Mat> phi;                        // d1 x d1
    std::optional<Mat> psi;                        // d2 x d1, orthonormal columns
    std::optional<Mat> b;                          // d1 x m
    std::optional<Mat> c;                          // d1 x d1
    std::vector<double> y;                         // length m
    std::optional<std::vector<double>> sigma_star; // length d1
    EnsembleKind kind = EnsembleKind::Gaussian;
    double shift_c = 0.0; // positivity shift applied to the target, 0 if none

    int d1() const { return a.empty() ? 0 : a.front().rows(); }
    int d2() const { return a.empty() ? 0 : a.front().cols(); }
    int m() const { return int(a.size()); }
};

/// Target from uniform[0,1] factor entries: X~ X~^T when d1 == d2, else
/// X~ Y~^T; scaled to nuclear norm 1.
GroundTruth gen_ground_truth(int d1, int d2, int inner_dim, std::uint64_t seed);

/// Quasi-commuting ensemble per the shared-singular-vector construction:
/// Abar_i diagonal entries uniform[0,1] sorted descending, A_i = phi Abar_i
/// psi^T. When the target spectrum has entries <= 0 the positivity shift
/// X* <- X* + c I is applied (smallest c with min sigma* >= 0.05) and
/// recorded; the target is updated in place. All ensemble invariants are
/// verified before return (InvariantViolation otherwise).
MeasurementEnsemble gen_commuting_ensemble(int d1, int d2, int m, std::uint64_t seed,
                                           GroundTruth& target, PhiPsiSource source);

/// m matrices of iid standard normal entries.
MeasurementEnsemble gen_gaussian_ensemble(int d1, int d2, int m, std::uint64_t seed);

/// y_i = <A_i, X*> + noise_std * eps_i with eps iid standard normal from the
/// seed's noise stream. noise_std = 0 gives exact measurements.
void measure(MeasurementEnsemble& e, const Mat& x_star, double noise_std, std::uint64_t seed);

/// Max over pairs of ||A_i A_j^T - A_j A_i^T||_F and ||A_i^T A_j - A_j^T A_i||_F.
double quasi_commute_check(std::span<const Mat> a_list);

} // namespace snn
