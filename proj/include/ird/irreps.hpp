// irreps.hpp — Irrep bookkeeping, distilled computational amplitudes, and
// symmetric-subspace state constructors.

#pragma once

#include "ird/clebsch_gordan.hpp"
#include "ird/model.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace ird {

// Multiplicity d_N(J) = (2J+1)/(N/2+J+1) · C(N, N/2-J), evaluated in the log
// domain and rounded to the nearest integer.
inline double irrep_degeneracy(int n, double J) {
    if (n < 1) throw std::invalid_argument("irrep_degeneracy: n must be >= 1");
    const double jmin = (n % 2 == 0) ? 0.0 : 0.5;
    if (J < jmin - 1e-9 || J > 0.5 * n + 1e-9 ||
        std::abs(J - jmin - std::round(J - jmin)) > 1e-9)
        throw std::invalid_argument("irrep_degeneracy: J out of range for n=" + std::to_string(n));
    const double k = 0.5 * n - J;
    const double logbin = std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
    const double v = std::exp(std::log(2.0 * J + 1.0) - std::log(0.5 * n + J + 1.0) + logbin);
    return std::round(v);
}

// Layout of the 3(N-1)-dimensional distilled basis: delta-major blocks,
// M ascending within each block. The symmetric subspace occupies the leading
// N+1 coordinates.
struct BasisLayout {
    int n = 0;

    explicit BasisLayout(int n_) : n(n_) {}
    BasisLayout() = default;

    int dim() const { return 3 * (n - 1); }
    double spin(int delta) const { return 0.5 * n - delta; }
    int block_dim(int delta) const { return n + 1 - 2 * delta; }
    int offset(int delta) const { return delta == 0 ? 0 : (delta == 1 ? n + 1 : 2 * n); }
    int flat(int delta, int m) const { return offset(delta) + m + int(spin(delta)); }

    struct DickeIndex {
        int delta;
        int m;
    };
    DickeIndex unflat(int i) const {
        for (int delta = 2; delta >= 0; --delta)
            if (i >= offset(delta)) return {delta, i - offset(delta) - int(spin(delta))};
        throw std::out_of_range("BasisLayout::unflat");
    }
};

struct DistilledState {
    Eigen::VectorXcd amplitudes;

    double norm() const { return amplitudes.norm(); }
};

// Distilled computational amplitudes c^(1,1), c^(2,1) (Eqs. of the bright
// irreps). `degenerate` marks constant marginals (alpha = 0) or a vanishing
// normalization radicand; the amplitudes are then a fixed orthonormal filler.
struct DistilledAmplitudes {
    Eigen::VectorXd c1;
    Eigen::MatrixXd c2;
    bool degenerate = false;
};

namespace detail {

// Fixed orthonormal filler satisfying the zero-sum / symmetry / normalization
// constraints; used when the couplings vanish identically.
inline DistilledAmplitudes degenerate_amplitudes(int n) {
    DistilledAmplitudes a;
    a.degenerate = true;
    a.c1 = Eigen::VectorXd::Zero(n);
    a.c1(0) = 1.0 / std::sqrt(2.0);
    a.c1(1) = -1.0 / std::sqrt(2.0);
    Eigen::VectorXd x = Eigen::VectorXd::Zero(n), y = Eigen::VectorXd::Zero(n);
    x(0) = 1.0 / std::sqrt(2.0);
    x(1) = -1.0 / std::sqrt(2.0);
    y(2) = 1.0 / std::sqrt(2.0);
    y(3) = -1.0 / std::sqrt(2.0);
    a.c2 = x * y.transpose() + y * x.transpose();
    return a;
}

}  // namespace detail

inline DistilledAmplitudes distill(const CouplingKernel& kernel, int n, double alpha) {
    if (n < 4) throw std::invalid_argument("distill: n must be >= 4");
    const Eigen::VectorXd& lam1 = kernel.lambda1;
    const double lam0 = kernel.lambda0;
    const double sumsq = lam1.squaredNorm();

    const double rad1 = sumsq - 4.0 * lam0 * lam0 / n;
    const CouplingKernel k2 = build_kernel(n, 2.0 * alpha);
    const double rad2 = (n - 2) * k2.lambda0 + 2.0 * lam0 * lam0 / (n - 1) - sumsq;

    // Relative floor: the analytic zero at alpha = 0 is reached only up to
    // cancellation noise ~ eps * scale, so an absolute 1e-20 test never fires
    // at large n.
    const bool deg = alpha == 0.0 || rad1 <= 1e-12 * sumsq || rad2 <= 1e-12 * (n - 2) * k2.lambda0;
    if (deg) return detail::degenerate_amplitudes(n);

    DistilledAmplitudes a;
    a.c1 = (lam1.array() - 2.0 * lam0 / n).matrix() / std::sqrt(rad1);
    const double d2 = std::sqrt(double(n - 2)) * std::sqrt(rad2);
    a.c2 = ((n - 2) * kernel.weights.array() - lam1.replicate(1, n).array() -
            lam1.transpose().replicate(n, 1).array() + 2.0 * lam0 / (n - 1)) /
           d2;
    a.c2.diagonal().setZero();
    return a;
}

inline DistilledAmplitudes distill(const ModelParams& p) {
    return distill(build_kernel(p), p.n, p.alpha);
}

// Spin-coherent state |θ,φ⟩ in the distilled basis (delta = 0 support only),
// amplitudes sqrt(C(N,k)) cos^(N/2+M) sin^(N/2-M) e^{-iMφ} via log-binomials.
inline DistilledState scs_amplitudes(int n, double theta, double phi) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("scs_amplitudes: n must be even, >= 2");
    const BasisLayout layout(n);
    DistilledState st;
    st.amplitudes = Eigen::VectorXcd::Zero(n >= 4 ? layout.dim() : n + 1);
    const double c = std::cos(0.5 * theta), sn = std::sin(0.5 * theta);
    const double j = 0.5 * n;
    for (int m = -n / 2; m <= n / 2; ++m) {
        const double k = j - m;  // number of down spins
        double amp;
        if (c == 0.0)
            amp = (m == -n / 2) ? 1.0 : 0.0;
        else if (sn == 0.0)
            amp = (m == n / 2) ? 1.0 : 0.0;
        else {
            const double logbin =
                std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
            amp = std::exp(0.5 * logbin + (j + m) * std::log(c) + (j - m) * std::log(sn));
        }
        st.amplitudes(m + n / 2) = amp * std::exp(std::complex<double>(0.0, -m * phi));
    }
    return st;
}

enum class SpecialState { z_polarized, ghz, x_polarized };

inline SpecialState parse_special_state(const std::string& kind) {
    if (kind == "z_polarized") return SpecialState::z_polarized;
    if (kind == "ghz") return SpecialState::ghz;
    if (kind == "x_polarized") return SpecialState::x_polarized;
    throw std::invalid_argument("special_states: unknown kind '" + kind + "'");
}

inline DistilledState special_states(int n, SpecialState kind) {
    if (n < 4 || n % 2 != 0) throw std::invalid_argument("special_states: n must be even, >= 4");
    const BasisLayout layout(n);
    DistilledState st;
    switch (kind) {
        case SpecialState::z_polarized:
            st.amplitudes = Eigen::VectorXcd::Zero(layout.dim());
            st.amplitudes(layout.flat(0, n / 2)) = 1.0;
            return st;
        case SpecialState::ghz:
            st.amplitudes = Eigen::VectorXcd::Zero(layout.dim());
            st.amplitudes(layout.flat(0, n / 2)) = 1.0 / std::sqrt(2.0);
            st.amplitudes(layout.flat(0, -n / 2)) = 1.0 / std::sqrt(2.0);
            return st;
        case SpecialState::x_polarized:
            return scs_amplitudes(n, 0.5 * M_PI, 0.0);
    }
    throw std::invalid_argument("special_states: unknown kind");
}

}  // namespace ird
