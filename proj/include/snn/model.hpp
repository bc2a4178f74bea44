#pragma once

#include <cstdint>
#include <vector>

#include "snn/activation.hpp"
#include "snn/mat.hpp"
#include "snn/measurements.hpp"

namespace snn {

/// Trainable parameters of the depth-1 block: X = sum_k alpha_k Gamma(U_k V_k^T).
struct SnnParams {
    std::vector<double> alpha;
    std::vector<Mat> u; // each d1 x d
    std::vector<Mat> v; // each d2 x d
    ActivationFn activation;

    int k_neurons() const { return int(alpha.size()); }
    int d1() const { return u.empty() ? 0 : u.front().rows(); }
    int d2() const { return v.empty() ? 0 : v.front().rows(); }
    int d() const { return u.empty() ? 0 : u.front().cols(); }
};

/// Layer sizes L_0..L_D and one activation per layer transition; blocks in
/// layer i consume all L_{i-1} outputs of the previous layer.
struct SnnLayerSpec {
    std::vector<int> layer_sizes;
    std::vector<ActivationFn> activations; // size layer_sizes.size() - 1
};

/// Elemental neuron: apply gamma to the singular values, keep the singular
/// subspaces. Requires rows <= cols.
Mat spectral_activation(const Mat& x, const ActivationFn& act);

/// sum_k alpha_k * spectral_activation(inputs[k]).
Mat snn_block_forward(const std::vector<Mat>& inputs, const std::vector<double>& alpha,
                      const ActivationFn& act);

Mat snn_forward(const SnnParams& p);

/// Deep forward pass; alphas[layer][block] is that block's coefficient
/// vector (length = previous layer size). The final layer must have a single
/// block.
Mat deep_snn_forward(const SnnLayerSpec& spec,
                     const std::vector<std::vector<std::vector<double>>>& alphas,
                     const std::vector<Mat>& inputs);

/// Spectral initialization: U_k(0) = Phi~ Ubar_k(0) G, V_k(0) = Psi~ Vbar_k(0) G
/// with diagonal Ubar, Vbar (entries uniform[0,1] sorted descending) and alpha
/// scaled so that sum_k alpha_k gamma(ubar_i vbar_i) <= 0.9 sigma*_i.
struct SpectralInit {
    SnnParams params;
    std::vector<std::vector<double>> ubar; // K vectors, length d1
    std::vector<std::vector<double>> vbar; // K vectors, length d1
    Mat g;                                 // the d x d orthogonal mixer
};

SpectralInit spectral_init(const Mat& phi, const Mat& psi, const std::vector<double>& sigma_star,
                           int k_neurons, int d, std::uint64_t seed, const ActivationFn& act);

/// General-setting initialization: U_k, V_k rectangular diagonal with
/// diagonal entries scale + jitter * eps, alpha uniform[0,1].
SnnParams near_zero_init(int d1, int d2, int d, int k_neurons, double scale, double jitter,
                         std::uint64_t seed, const ActivationFn& act);

/// 1/2 sum_i (y_i - <A_i, X>)^2.
double loss(const Mat& x, const MeasurementEnsemble& e);

} // namespace snn
