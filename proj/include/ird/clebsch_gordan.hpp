// clebsch_gordan.hpp — Closed-form Clebsch-Gordan coefficients <j1 m1; j2 m2 | J M>
// for tensor ranks j2 ∈ {1/2, 1, 2}, Condon-Shortley convention.
//
// Each coefficient is a signed polynomial in (j1, m1) times the square root of a
// rational product of linear factors. The square roots are evaluated in the log
// domain, so values stay finite well beyond j1 = 1024.

#pragma once

#include <cmath>
#include <stdexcept>

namespace ird {

namespace detail {

inline bool is_half_integral(double x) {
    return std::abs(2.0 * x - std::round(2.0 * x)) < 1e-9;
}

// sqrt(Π num_i / Π den_i) via logs; any non-positive numerator factor gives 0.
template <std::size_t NN, std::size_t ND>
double sqrt_ratio(const double (&num)[NN], const double (&den)[ND]) {
    double ln = 0.0;
    for (double f : num) {
        if (f <= 0.0) return 0.0;
        ln += std::log(f);
    }
    for (double f : den) ln -= std::log(f);
    return std::exp(0.5 * ln);
}

}  // namespace detail

// <j1 m1; j2 m2 | J M> with j2 ∈ {1/2, 1, 2}. Selection-rule violations return
// exactly 0; unsupported or unphysical spins throw.
inline double cg_coefficient(double j1, double m1, double j2, double m2, double J, double M) {
    using detail::is_half_integral;
    using detail::sqrt_ratio;

    const bool j2_ok = std::abs(j2 - 0.5) < 1e-9 || std::abs(j2 - 1.0) < 1e-9 || std::abs(j2 - 2.0) < 1e-9;
    if (!j2_ok) throw std::invalid_argument("cg_coefficient: only j2 in {1/2, 1, 2} supported");
    if (j1 < 0 || J < 0 || !is_half_integral(j1) || !is_half_integral(m1) ||
        !is_half_integral(m2) || !is_half_integral(J) || !is_half_integral(M))
        throw std::invalid_argument("cg_coefficient: spins must be non-negative half-integers");

    // selection rules
    if (std::abs(M - (m1 + m2)) > 1e-9) return 0.0;
    if (std::abs(m1) > j1 + 1e-9 || std::abs(m2) > j2 + 1e-9 || std::abs(M) > J + 1e-9) return 0.0;
    if (J > j1 + j2 + 1e-9 || J < std::abs(j1 - j2) - 1e-9) return 0.0;
    if (!is_half_integral(J - j1 - j2)) return 0.0;
    if (!is_half_integral(m1 - j1) || !is_half_integral(m2 - j2)) return 0.0;

    const double j = j1, m = m1;
    const int d = int(std::round(J - j1));
    const int tm2 = int(std::round(2.0 * m2));

    if (std::abs(j2 - 0.5) < 1e-9) {
        if (d == 0) return 0.0;  // J = j1 ± 1/2 only; d rounds to 0 never valid here
        const bool up = J > j1;  // J = j1 + 1/2
        if (up) {
            if (tm2 == 1) return sqrt_ratio({j + m + 1}, {2 * j + 1});
            return sqrt_ratio({j - m + 1}, {2 * j + 1});
        }
        if (tm2 == 1) return -sqrt_ratio({j - m}, {2 * j + 1});
        return sqrt_ratio({j + m}, {2 * j + 1});
    }

    if (std::abs(j2 - 1.0) < 1e-9) {
        switch (d) {
            case 1:
                if (tm2 == 2) return sqrt_ratio({j + m + 1, j + m + 2}, {2 * (j + 1), 2 * j + 1});
                if (tm2 == 0) return sqrt_ratio({j - m + 1, j + m + 1}, {j + 1, 2 * j + 1});
                return sqrt_ratio({j - m + 1, j - m + 2}, {2 * (j + 1), 2 * j + 1});
            case 0:
                if (tm2 == 2) return -sqrt_ratio({j - m, j + m + 1}, {2 * j, j + 1});
                if (tm2 == 0) return m * sqrt_ratio({1.0}, {j, j + 1});
                return sqrt_ratio({j + m, j - m + 1}, {2 * j, j + 1});
            case -1:
                if (tm2 == 2) return sqrt_ratio({j - m, j - m - 1}, {2 * j, 2 * j + 1});
                if (tm2 == 0) return -sqrt_ratio({j - m, j + m}, {j, 2 * j + 1});
                return sqrt_ratio({j + m, j + m - 1}, {2 * j, 2 * j + 1});
            default: return 0.0;
        }
    }

    // j2 = 2
    switch (d) {
        case 2:
            if (tm2 == 4)
                return 0.5 * sqrt_ratio({j + m + 1, j + m + 2, j + m + 3, j + m + 4},
                                        {j + 1, j + 2, 2 * j + 1, 2 * j + 3});
            if (tm2 == 2)
                return sqrt_ratio({j - m + 1, j + m + 1, j + m + 2, j + m + 3},
                                  {j + 1, j + 2, 2 * j + 1, 2 * j + 3});
            if (tm2 == 0)
                return sqrt_ratio({3, j - m + 1, j - m + 2, j + m + 1, j + m + 2},
                                  {2, j + 1, j + 2, 2 * j + 1, 2 * j + 3});
            if (tm2 == -2)
                return sqrt_ratio({j - m + 1, j - m + 2, j - m + 3, j + m + 1},
                                  {j + 1, j + 2, 2 * j + 1, 2 * j + 3});
            return 0.5 * sqrt_ratio({j - m + 1, j - m + 2, j - m + 3, j - m + 4},
                                    {j + 1, j + 2, 2 * j + 1, 2 * j + 3});
        case 1:
            if (tm2 == 4)
                return -sqrt_ratio({j - m, j + m + 1, j + m + 2, j + m + 3},
                                   {2 * j, j + 1, j + 2, 2 * j + 1});
            if (tm2 == 2)
                return -(j - 2 * m) * sqrt_ratio({j + m + 1, j + m + 2},
                                                 {2 * j, j + 1, j + 2, 2 * j + 1});
            if (tm2 == 0)
                return m * sqrt_ratio({3, j - m + 1, j + m + 1}, {j, j + 1, j + 2, 2 * j + 1});
            if (tm2 == -2)
                return (j + 2 * m) * sqrt_ratio({j - m + 1, j - m + 2},
                                                {2 * j, j + 1, j + 2, 2 * j + 1});
            return sqrt_ratio({j + m, j - m + 1, j - m + 2, j - m + 3},
                              {2 * j, j + 1, j + 2, 2 * j + 1});
        case 0:
            if (tm2 == 4)
                return sqrt_ratio({3, j - m, j - m - 1, j + m + 1, j + m + 2},
                                  {2, j, j + 1, 2 * j - 1, 2 * j + 3});
            if (tm2 == 2)
                return -(2 * m + 1) * sqrt_ratio({3, j - m, j + m + 1},
                                                 {2, j, j + 1, 2 * j - 1, 2 * j + 3});
            if (tm2 == 0)
                return (3 * m * m - j * (j + 1)) *
                       sqrt_ratio({1.0}, {j, j + 1, 2 * j - 1, 2 * j + 3});
            if (tm2 == -2)
                return (2 * m - 1) * sqrt_ratio({3, j + m, j - m + 1},
                                                {2, j, j + 1, 2 * j - 1, 2 * j + 3});
            return sqrt_ratio({3, j + m, j + m - 1, j - m + 1, j - m + 2},
                              {2, j, j + 1, 2 * j - 1, 2 * j + 3});
        case -1:
            if (tm2 == 4)
                return -sqrt_ratio({j - m, j - m - 1, j - m - 2, j + m + 1},
                                   {2 * j, j - 1, j + 1, 2 * j + 1});
            if (tm2 == 2)
                return (j + 2 * m + 1) * sqrt_ratio({j - m, j - m - 1},
                                                    {2 * j, j - 1, j + 1, 2 * j + 1});
            if (tm2 == 0)
                return -m * sqrt_ratio({3, j - m, j + m}, {j, j - 1, j + 1, 2 * j + 1});
            if (tm2 == -2)
                return -(j - 2 * m + 1) * sqrt_ratio({j + m, j + m - 1},
                                                     {2 * j, j - 1, j + 1, 2 * j + 1});
            return sqrt_ratio({j + m, j - m + 1, j + m - 1, j + m - 2},
                              {2 * j, j - 1, j + 1, 2 * j + 1});
        case -2:
            if (tm2 == 4)
                return 0.5 * sqrt_ratio({j - m, j - m - 1, j - m - 2, j - m - 3},
                                        {j, j - 1, 2 * j - 1, 2 * j + 1});
            if (tm2 == 2)
                return -sqrt_ratio({j - m, j - m - 1, j - m - 2, j + m},
                                   {j, j - 1, 2 * j - 1, 2 * j + 1});
            if (tm2 == 0)
                return sqrt_ratio({3, j - m, j - m - 1, j + m, j + m - 1},
                                  {2, j, j - 1, 2 * j - 1, 2 * j + 1});
            if (tm2 == -2)
                return -sqrt_ratio({j - m, j + m, j + m - 1, j + m - 2},
                                   {j, j - 1, 2 * j - 1, 2 * j + 1});
            return 0.5 * sqrt_ratio({j + m, j + m - 1, j + m - 2, j + m - 3},
                                    {j, j - 1, 2 * j - 1, 2 * j + 1});
        default: return 0.0;
    }
}

}  // namespace ird
