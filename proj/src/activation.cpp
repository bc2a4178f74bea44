#include "snn/activation.hpp"

#include <cmath>
#include <limits>

#include "snn/errors.hpp"

namespace snn {

ActivationFn tanh_act(TanhVariant variant) {
    if (variant == TanhVariant::Raw) {
        return {"tanh",
                [](double x) { return std::tanh(x); },
                [](double x) {
                    const double t = std::tanh(x);
                    return 1.0 - t * t;
                },
                0.0};
    }
    return {"tanh_clamped",
            [](double x) { return x <= 0.0 ? 0.0 : std::tanh(x); },
            [](double x) {
                if (x < 0.0) return 0.0;
                const double t = std::tanh(x);
                return 1.0 - t * t;
            },
            0.0};
}

ActivationFn sigmoid_act() {
    return {"sigmoid",
            [](double x) { return 1.0 / (1.0 + std::exp(-x)); },
            [](double x) {
                const double s = 1.0 / (1.0 + std::exp(-x));
                return s * (1.0 - s);
            },
            -std::numeric_limits<double>::infinity()};
}

ActivationFn smoothed_clipped_relu() {
    return {"smoothed_clipped_relu",
            [](double x) {
                if (x <= 0.0) return 0.0;
                if (x >= 1.0) return 1.0;
                return x * x * (3.0 - 2.0 * x);
            },
            [](double x) {
                if (x <= 0.0 || x >= 1.0) return 0.0;
                return 6.0 * x * (1.0 - x);
            },
            0.0};
}

ActivationFn activation_by_name(const std::string& name, bool clamped) {
    if (name == "tanh") return tanh_act(clamped ? TanhVariant::Clamped : TanhVariant::Raw);
    if (name == "sigmoid") return sigmoid_act();
    if (name == "smoothed_clipped_relu") return smoothed_clipped_relu();
    throw Error("unknown activation: " + name);
}

std::optional<std::string> assumption3_check(const ActivationFn& act, double lo, double hi,
                                             int n) {
    const double h = 1e-5;
    const double kink_radius = 1e-3;
    double prev = 0.0;
    bool have_prev = false;
    for (int i = 0; i < n; ++i) {
        const double x = lo + (hi - lo) * i / (n - 1);
        const double g = act.gamma(x);
        if (g < -1e-12 || g > 1.0 + 1e-12)
            return "range violation at x=" + std::to_string(x) + ": gamma=" + std::to_string(g);
        if (have_prev && g < prev - 1e-12)
            return "not non-decreasing at x=" + std::to_string(x);
        prev = g;
        have_prev = true;
        if (act.zero_locus_hint && std::isfinite(*act.zero_locus_hint) &&
            std::fabs(x - *act.zero_locus_hint) < kink_radius)
            continue;
        const double fd = (act.gamma(x + h) - act.gamma(x - h)) / (2.0 * h);
        if (std::fabs(fd - act.gamma_prime(x)) > 1e-6)
            return "gamma_prime mismatch at x=" + std::to_string(x);
    }
    return std::nullopt;
}

} // namespace snn
