#pragma once

#include <functional>
#include <optional>
#include <string>

namespace snn {

/// Scalar activation applied to singular values. gamma_prime must be the
/// derivative of gamma wherever gamma is differentiable; zero_locus_hint
/// marks where gamma vanishes (boundary point, or -inf for sigmoid-like
/// functions) so validators and diagnostics can avoid kinks.
struct ActivationFn {
    std::string name;
    std::function<double(double)> gamma;
    std::function<double(double)> gamma_prime;
    std::optional<double> zero_locus_hint;

    double operator()(double x) const { return gamma(x); }
};

enum class TanhVariant {
    Raw,     // gamma(x) = tanh(x), as used in the experiments
    Clamped, // gamma(x) = max(tanh(x), 0), satisfies the [0,1] range
};

ActivationFn tanh_act(TanhVariant variant = TanhVariant::Raw);
ActivationFn sigmoid_act();
/// Smoothstep 3x^2 - 2x^3 on [0,1], clamped outside: a smoothed clipped ReLU.
ActivationFn smoothed_clipped_relu();

ActivationFn activation_by_name(const std::string& name, bool clamped);

/// Checks the activation regularity requirements on a grid: range within
/// [0,1], non-decreasing, and gamma_prime consistent with central finite
/// differences (kink neighborhoods from zero_locus_hint are skipped).
/// Returns the first violation, or nullopt if the activation passes.
std::optional<std::string> assumption3_check(const ActivationFn& act, double lo = -2.0,
                                             double hi = 2.0, int n = 401);

} // namespace snn
