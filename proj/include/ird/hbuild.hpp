// hbuild.hpp — Tensor weights F0/F1/F2 and assembly of the distilled
// Hamiltonian H_D(s, α) on the 3(N-1)-dimensional distilled space.

#pragma once

#include "ird/clebsch_gordan.hpp"
#include "ird/irreps.hpp"
#include "ird/model.hpp"

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace ird {

// F1[J] = sqrt(J(J+1)(2J+1)/6).
inline double weight_f1(double J) {
    if (J < 0.5) throw std::invalid_argument("weight_f1: J must be >= 1/2");
    return std::sqrt(J * (J + 1.0) * (2.0 * J + 1.0) / 6.0);
}

// Scalar weights of the spherical-tensor expansion, evaluated for the
// distilled (u = v = 1) irreps. f2 is symmetric in its block pair.
struct TensorWeights {
    std::array<double, 3> f0{};
    std::array<double, 3> f1{};
    double f2[3][3] = {};
    bool degenerate = false;
};

namespace detail {

// Closed forms at a constant kernel (alpha = 0 limit); independent of the
// amplitude choice, so valid for the flagged degenerate filler too.
inline TensorWeights degenerate_weights(int n) {
    TensorWeights w;
    w.degenerate = true;
    const double dn = n;
    w.f0[0] = std::sqrt(dn + 1) * (1 - dn) / 12.0;
    w.f0[1] = std::sqrt(dn - 1) * (5 - dn) / 12.0;
    w.f0[2] = std::sqrt(dn - 3) * (dn - 1) * (8 - dn) / (12.0 * dn);
    for (int d = 0; d < 3; ++d) w.f1[d] = weight_f1(0.5 * n - d);
    w.f2[0][0] = -std::sqrt((dn + 3) * (dn + 2) * (dn + 1) * (dn - 1) / (5 * dn)) / 6.0;
    w.f2[1][1] = std::sqrt((dn + 1) * dn * (dn - 1) / (5 * (dn - 2) * (dn - 3))) / 6.0 *
                 ((1 - dn) + (4 * dn - 6) / dn);
    w.f2[2][2] = std::sqrt((dn - 1) * (dn - 2) * (dn - 3) / (5 * (dn - 4) * (dn - 5))) / 6.0 *
                 ((1 - dn) + (8 * dn - 20) / dn);
    return w;
}

}  // namespace detail

// Appendix-style closed forms with u = v = 1; all pair sums exclude j = k and
// the O(N^3) inner sums are expressed as matrix products.
inline TensorWeights weight_table(const ModelParams& p, const DistilledAmplitudes& amps) {
    const int n = p.n;
    if (n < 6) throw std::invalid_argument("weight_table: n must be >= 6 (delta = 2 closed forms)");
    if (amps.degenerate) return detail::degenerate_weights(n);

    const CouplingKernel k = build_kernel(n, p.alpha);
    const Eigen::MatrixXd& w = k.weights;
    const Eigen::VectorXd& lam1 = k.lambda1;
    const double nk = p.kac;
    const double dn = n;
    const Eigen::VectorXd& c1 = amps.c1;
    const Eigen::MatrixXd& c2 = amps.c2;

    TensorWeights tw;
    for (int d = 0; d < 3; ++d) tw.f1[d] = weight_f1(0.5 * n - d);

    tw.f0[0] = std::sqrt(dn + 1) * (1 - dn) / 12.0;

    // Σ w (c1_j - c1_k)^2 and Σ w (2(c1_j^2+c1_k^2) + 2 c1_j c1_k)
    const double c1sq_lam = c1.array().square().matrix().dot(lam1);
    const double c1wc1 = c1.dot(w * c1);
    const double s_f01 = 2.0 * c1sq_lam - 2.0 * c1wc1;
    tw.f0[1] = std::sqrt(dn - 1) / 12.0 * ((1 - dn) + 2.0 / nk * s_f01);

    const Eigen::VectorXd r = c2.array().square().rowwise().sum();  // r_j = Σ_m c2_jm^2
    const Eigen::MatrixXd g = c2 * c2;                              // g_jk = Σ_m c2_jm c2_km
    const Eigen::MatrixXd rjk = r.replicate(1, n) + r.transpose().replicate(n, 1);

    const double s_f02 = (w.array() * (2.0 * g.array() + 2.0 * c2.array().square() - rjk.array())).sum();
    tw.f0[2] = std::sqrt(dn - 3) / 12.0 * ((1 - dn) - 2.0 / nk * s_f02);

    tw.f2[0][0] = -std::sqrt((dn + 3) * (dn + 2) * (dn + 1) * (dn - 1) / (5 * dn)) / 6.0;
    tw.f2[0][1] = -1.0 / (2.0 * nk) * std::sqrt((dn + 2) * (dn + 1) / (30 * (dn - 2))) *
                  2.0 * c1.dot(lam1);
    tw.f2[0][2] = -1.0 / nk * std::sqrt((dn + 1) / 30.0) * (w.array() * c2.array()).sum();

    const double s_f211 = 4.0 * c1sq_lam + 2.0 * c1wc1;
    tw.f2[1][1] = std::sqrt((dn + 1) * dn * (dn - 1) / (5 * (dn - 2) * (dn - 3))) / 6.0 *
                  ((1 - dn) + s_f211 / nk);

    const Eigen::VectorXd h = c2 * c1;
    const Eigen::MatrixXd c1jk = c1.replicate(1, n) + c1.transpose().replicate(n, 1);
    const Eigen::MatrixXd hjk = h.replicate(1, n) + h.transpose().replicate(n, 1);
    const double s_f212 = (w.array() * (2.0 * c1jk.array() * c2.array() - hjk.array())).sum();
    tw.f2[1][2] = 1.0 / (2.0 * nk) * std::sqrt(dn * (dn - 1) / (30 * (dn - 4))) * s_f212;

    const double s_f222 =
        (w.array() * (4.0 * c2.array().square() - 2.0 * g.array() - 2.0 * rjk.array())).sum();
    tw.f2[2][2] = std::sqrt((dn - 1) * (dn - 2) * (dn - 3) / (5 * (dn - 4) * (dn - 5))) / 6.0 *
                  ((1 - dn) - s_f222 / nk);

    tw.f2[1][0] = tw.f2[0][1];
    tw.f2[2][0] = tw.f2[0][2];
    tw.f2[2][1] = tw.f2[1][2];
    return tw;
}

struct DistilledHamiltonian {
    Eigen::MatrixXd matrix;  // real symmetric, 3(N-1) x 3(N-1)
    ModelParams params;
    BasisLayout layout;
};

// H_D(s, α): transverse ladder elements within each block plus the q = 0
// interaction rule; equals the compression P·H·P of the exact Hamiltonian.
inline DistilledHamiltonian assemble(const ModelParams& p, const TensorWeights& tw) {
    const int n = p.n;
    const BasisLayout layout(n);
    const double s = p.s;
    Eigen::MatrixXd hd = Eigen::MatrixXd::Zero(layout.dim(), layout.dim());

    for (int delta = 0; delta < 3; ++delta) {
        const double J = layout.spin(delta);
        const int o = layout.offset(delta);
        const int bd = layout.block_dim(delta);
        for (int i = 0; i < bd; ++i) {
            const double m = -J + i;
            if (i + 1 < bd) {
                const double t = (s - 1.0) * 0.5 * std::sqrt(J * (J + 1.0) - m * (m + 1.0));
                hd(o + i + 1, o + i) += t;
                hd(o + i, o + i + 1) += t;
            }
            hd(o + i, o + i) += s * (tw.f0[delta] / std::sqrt(2.0 * J + 1.0) +
                                     tw.f2[delta][delta] * std::sqrt(5.0 / (2.0 * J + 1.0)) *
                                         cg_coefficient(J, m, 2, 0, J, m));
        }
    }
    const int cross[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    for (auto [da, db] : cross) {
        const double ja = layout.spin(da), jb = layout.spin(db);
        const double f2 = tw.degenerate ? 0.0 : tw.f2[da][db];
        if (f2 == 0.0) continue;
        for (int kk = 0; kk < layout.block_dim(db); ++kk) {
            const double m = -jb + kk;
            if (std::abs(m) > ja) continue;
            const double val =
                s * f2 * std::sqrt(5.0 / (2.0 * ja + 1.0)) * cg_coefficient(jb, m, 2, 0, ja, m);
            hd(layout.flat(da, int(m)), layout.flat(db, int(m))) += val;
            hd(layout.flat(db, int(m)), layout.flat(da, int(m))) += val;
        }
    }
    return {std::move(hd), p, layout};
}

inline DistilledHamiltonian assemble(const ModelParams& p, const DistilledAmplitudes& amps) {
    return assemble(p, weight_table(p, amps));
}

// Block-diagonal reference H_D(s, 0): cross-irrep couplings exactly zero,
// diagonal blocks at their constant-kernel values.
inline DistilledHamiltonian assemble_reference(const ModelParams& p) {
    return assemble(p, detail::degenerate_weights(p.n));
}

// Distilled spin-flip parity: reflection M -> -M with block sign (-1)^delta.
inline Eigen::VectorXcd apply_parity(const BasisLayout& layout, const Eigen::VectorXcd& v) {
    Eigen::VectorXcd out(v.size());
    for (int delta = 0; delta < 3; ++delta) {
        const int o = layout.offset(delta), bd = layout.block_dim(delta);
        const double sign = (delta % 2 == 0) ? 1.0 : -1.0;
        for (int i = 0; i < bd; ++i) out(o + i) = sign * v(o + bd - 1 - i);
    }
    return out;
}

inline Eigen::MatrixXd parity_matrix(const BasisLayout& layout) {
    Eigen::MatrixXd pm = Eigen::MatrixXd::Zero(layout.dim(), layout.dim());
    for (int delta = 0; delta < 3; ++delta) {
        const int o = layout.offset(delta), bd = layout.block_dim(delta);
        const double sign = (delta % 2 == 0) ? 1.0 : -1.0;
        for (int i = 0; i < bd; ++i) pm(o + i, o + bd - 1 - i) = sign;
    }
    return pm;
}

// Collective operators on the distilled space. Jz is diagonal (value M);
// Jx, Jy are tridiagonal within each block and exactly zero across blocks.
inline Eigen::VectorXd jz_diagonal(const BasisLayout& layout) {
    Eigen::VectorXd jz(layout.dim());
    for (int delta = 0; delta < 3; ++delta) {
        const double J = layout.spin(delta);
        for (int i = 0; i < layout.block_dim(delta); ++i)
            jz(layout.offset(delta) + i) = -J + i;
    }
    return jz;
}

inline Eigen::MatrixXd jx_matrix(const BasisLayout& layout) {
    Eigen::MatrixXd jx = Eigen::MatrixXd::Zero(layout.dim(), layout.dim());
    for (int delta = 0; delta < 3; ++delta) {
        const double J = layout.spin(delta);
        const int o = layout.offset(delta);
        for (int i = 0; i + 1 < layout.block_dim(delta); ++i) {
            const double m = -J + i;
            const double t = 0.5 * std::sqrt(J * (J + 1.0) - m * (m + 1.0));
            jx(o + i + 1, o + i) = t;
            jx(o + i, o + i + 1) = t;
        }
    }
    return jx;
}

inline Eigen::MatrixXcd jy_matrix(const BasisLayout& layout) {
    Eigen::MatrixXcd jy = Eigen::MatrixXcd::Zero(layout.dim(), layout.dim());
    const std::complex<double> I(0.0, 1.0);
    for (int delta = 0; delta < 3; ++delta) {
        const double J = layout.spin(delta);
        const int o = layout.offset(delta);
        for (int i = 0; i + 1 < layout.block_dim(delta); ++i) {
            const double m = -J + i;
            const double t = 0.5 * std::sqrt(J * (J + 1.0) - m * (m + 1.0));
            jy(o + i + 1, o + i) = -I * t;  // (1/2i) J+
            jy(o + i, o + i + 1) = I * t;
        }
    }
    return jy;
}

// Binary dump: 16-byte header (magic "IRDH", u32 version, u32 n, u32 reserved)
// followed by the upper triangle of H_D, row major, little-endian f64.
inline void write_packed(const std::string& path, const DistilledHamiltonian& hd) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("write_packed: cannot open " + path);
    const char magic[4] = {'I', 'R', 'D', 'H'};
    const std::uint32_t version = 1, n = std::uint32_t(hd.params.n), reserved = 0;
    f.write(magic, 4);
    f.write(reinterpret_cast<const char*>(&version), 4);
    f.write(reinterpret_cast<const char*>(&n), 4);
    f.write(reinterpret_cast<const char*>(&reserved), 4);
    const int d = hd.layout.dim();
    for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j) {
            const double v = hd.matrix(i, j);
            f.write(reinterpret_cast<const char*>(&v), 8);
        }
}

inline Eigen::MatrixXd read_packed(const std::string& path, int* n_out = nullptr) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("read_packed: cannot open " + path);
    char magic[4];
    std::uint32_t version = 0, n = 0, reserved = 0;
    f.read(magic, 4);
    f.read(reinterpret_cast<char*>(&version), 4);
    f.read(reinterpret_cast<char*>(&n), 4);
    f.read(reinterpret_cast<char*>(&reserved), 4);
    if (std::memcmp(magic, "IRDH", 4) != 0 || version != 1)
        throw std::runtime_error("read_packed: bad header in " + path);
    const int d = 3 * (int(n) - 1);
    Eigen::MatrixXd m(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j) {
            double v;
            f.read(reinterpret_cast<char*>(&v), 8);
            m(i, j) = v;
            m(j, i) = v;
        }
    if (!f) throw std::runtime_error("read_packed: truncated file " + path);
    if (n_out) *n_out = int(n);
    return m;
}

}  // namespace ird
