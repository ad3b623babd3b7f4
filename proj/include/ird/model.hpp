// model.hpp — Model parameters, Kac normalization, and the power-law coupling kernel.

#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>
#include <string>

namespace ird {

// Thrown when a computation would exceed the configured size guards.
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Kac constant 𝒩 = (1/(N-1)) Σ_{j≠k} |j-k|^(-alpha).
inline double kac_norm(int n, double alpha) {
    if (n < 2) throw std::invalid_argument("kac_norm: n must be >= 2");
    if (alpha < 0) throw std::invalid_argument("kac_norm: alpha must be >= 0");
    double sum = 0.0;
    for (int d = 1; d < n; ++d) {
        // n-d ordered pairs at distance d, each counted twice in Σ_{j≠k}
        sum += 2.0 * (n - d) * std::exp(-alpha * std::log(double(d)));
    }
    return sum / (n - 1);
}

struct ModelParams {
    int n = 0;           // number of spin-1/2 sites, even, >= 4
    double s = 0.0;      // interaction/field balance in [0,1]
    double alpha = 0.0;  // power-law exponent, >= 0
    double kac = 0.0;    // Kac constant 𝒩, derived
    bool degenerate_marginals = false;  // alpha = 0: constant kernel marginals

    ModelParams() = default;

    ModelParams(int n_, double s_, double alpha_) : n(n_), s(s_), alpha(alpha_) {
        if (n < 4 || n % 2 != 0)
            throw std::invalid_argument("ModelParams: n must be even and >= 4, got " + std::to_string(n));
        if (s < 0.0 || s > 1.0)
            throw std::invalid_argument("ModelParams: s must be in [0,1]");
        if (alpha < 0.0)
            throw std::invalid_argument("ModelParams: alpha must be >= 0");
        kac = kac_norm(n, alpha);
        degenerate_marginals = (alpha == 0.0);
    }
};

// Pairwise weights |j-k|^(-alpha) with marginals λ1[j] = Σ_k w[j][k] and
// λ0 = Σ_{j>k} w[j][k]. Zero diagonal.
struct CouplingKernel {
    Eigen::MatrixXd weights;
    Eigen::VectorXd lambda1;
    double lambda0 = 0.0;
};

inline CouplingKernel build_kernel(int n, double alpha) {
    if (n < 2) throw std::invalid_argument("build_kernel: n must be >= 2");
    if (alpha < 0) throw std::invalid_argument("build_kernel: alpha must be >= 0");
    CouplingKernel k;
    k.weights = Eigen::MatrixXd::Zero(n, n);
    for (int j = 0; j < n; ++j)
        for (int l = j + 1; l < n; ++l) {
            const double w = std::exp(-alpha * std::log(double(l - j)));
            k.weights(j, l) = w;
            k.weights(l, j) = w;
        }
    k.lambda1 = k.weights.rowwise().sum();
    k.lambda0 = 0.5 * k.lambda1.sum();
    return k;
}

inline CouplingKernel build_kernel(const ModelParams& p) { return build_kernel(p.n, p.alpha); }

// Mean-field energy per spin of the collective limit,
// E(s;θ,φ) = (s-1) sinθ cosφ - (s/2) cos²θ.
inline double classical_energy(double s, double theta, double phi) {
    const double ct = std::cos(theta);
    return (s - 1.0) * std::sin(theta) * std::cos(phi) - 0.5 * s * ct * ct;
}

}  // namespace ird
