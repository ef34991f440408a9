#ifndef SBS_TESTS_ORACLES_HPP
#define SBS_TESTS_ORACLES_HPP

// Independent reference computations for the test suites. Nothing here calls
// into the code paths it is used to check.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;

// Rates/detunings of a two-mode problem, kept separate from the library types.
struct Modes
{
    double d_opt = 0.0, d_ac = 0.0;
    double k_ext = 0.0, k_int = 0.0;
    double g_ext = 0.0, g_int = 0.0;
    cplx coupling; // g0 * sqrt(Np)
};

// Solves the steady state of the beam-splitter Langevin pair
//   (dw + i k) a + g b  = sqrt(2 k0) a_in
//   g* a + (dW + i G) b = sqrt(2 G0) c_in
// by Cramer's rule and applies a_out = a_in - i sqrt(2 k0) a,
// c_out = c_in - i sqrt(2 G0) b. Returns {{S11, S12}, {S21, S22}}.
inline std::array<std::array<cplx, 2>, 2> beam_splitter_smatrix(const Modes& m)
{
    const cplx i{0.0, 1.0};
    const cplx m11 = m.d_opt + i * (m.k_ext + m.k_int);
    const cplx m12 = m.coupling;
    const cplx m21 = std::conj(m.coupling);
    const cplx m22 = m.d_ac + i * (m.g_ext + m.g_int);
    const cplx det = m11 * m22 - m12 * m21;
    const double pa = std::sqrt(2.0 * m.k_ext);
    const double pc = std::sqrt(2.0 * m.g_ext);

    const auto solve = [&](cplx rhs1, cplx rhs2) {
        const cplx a = (rhs1 * m22 - m12 * rhs2) / det;
        const cplx b = (m11 * rhs2 - m21 * rhs1) / det;
        return std::array<cplx, 2>{a, b};
    };
    // unit optical input
    const auto x1 = solve(pa, 0.0);
    // unit microwave input
    const auto x2 = solve(0.0, pc);
    std::array<std::array<cplx, 2>, 2> s{};
    s[0][0] = 1.0 - i * pa * x1[0];
    s[1][0] = -i * pc * x1[1];
    s[0][1] = -i * pa * x2[0];
    s[1][1] = 1.0 - i * pc * x2[1];
    return s;
}

// Stokes channel: Heisenberg equations of H = -hbar (g a^dag b^dag + h.c.)
// with damping, written for (a, b^dag):
//   a'     = (i dw - k) a + i g b^dag - i sqrt(2k0) a_in
//   b^dag' = (-i dW - G) b^dag - i g* a + i sqrt(2G0) c_in^dag
// Steady state by Cramer's rule for a unit optical input; returns
// {a_out/a_in, c_out^dag/a_in}.
inline std::array<cplx, 2> amplifier_response(const Modes& m)
{
    const cplx i{0.0, 1.0};
    const double k = m.k_ext + m.k_int;
    const double G = m.g_ext + m.g_int;
    const cplx A11 = i * m.d_opt - k;
    const cplx A12 = i * m.coupling;
    const cplx A21 = -i * std::conj(m.coupling);
    const cplx A22 = -i * m.d_ac - G;
    const double pa = std::sqrt(2.0 * m.k_ext);
    const double pc = std::sqrt(2.0 * m.g_ext);
    // A x = -u, u = (-i pa, 0)
    const cplx r1 = i * pa;
    const cplx r2 = 0.0;
    const cplx det = A11 * A22 - A12 * A21;
    const cplx a = (r1 * A22 - A12 * r2) / det;
    const cplx bd = (A11 * r2 - A21 * r1) / det;
    // c_out^dag = c_in^dag + i sqrt(2G0) b^dag
    return {1.0 - i * pa * a, i * pc * bd};
}

// Composite Simpson rule for f on [lo, hi] with n (even) panels.
inline double simpson(const std::function<double(double)>& f, double lo, double hi, int n)
{
    if (n % 2)
        ++n;
    const double h = (hi - lo) / n;
    double acc = f(lo) + f(hi);
    for (int k = 1; k < n; ++k)
        acc += f(lo + k * h) * (k % 2 ? 4.0 : 2.0);
    return acc * h / 3.0;
}

// Normalized 1D Gaussian with |f|^2 integrating to 1: f = (2/(pi w^2))^{1/4} e^{-y^2/w^2}.
inline double gaussian(double y, double w)
{
    return std::pow(2.0 / (std::numbers::pi * w * w), 0.25) * std::exp(-y * y / (w * w));
}

// int g(y,w1) g(y,w2) g(y,w3) dy in closed form.
inline double gaussian_triple(double w1, double w2, double w3)
{
    const double c = std::pow(2.0 / std::numbers::pi, 0.75) / std::sqrt(w1 * w2 * w3);
    const double a = 1.0 / (w1 * w1) + 1.0 / (w2 * w2) + 1.0 / (w3 * w3);
    return c * std::sqrt(std::numbers::pi / a);
}

// Power spectrum |sum_k x_k e^{-i w t_k}|^2 on a uniform time grid.
inline double dft_power(const std::vector<double>& t, const std::vector<cplx>& x, double w)
{
    cplx acc{};
    for (std::size_t k = 0; k < t.size(); ++k)
        acc += x[k] * std::exp(cplx{0.0, -w * t[k]});
    return std::norm(acc);
}

// max |(S^dag S - 1)_{ij}| for a 2x2 matrix.
inline double unitarity_defect(cplx s11, cplx s12, cplx s21, cplx s22)
{
    const cplx m00 = std::conj(s11) * s11 + std::conj(s21) * s21 - 1.0;
    const cplx m01 = std::conj(s11) * s12 + std::conj(s21) * s22;
    const cplx m10 = std::conj(s12) * s11 + std::conj(s22) * s21;
    const cplx m11 = std::conj(s12) * s12 + std::conj(s22) * s22 - 1.0;
    return std::max({std::abs(m00), std::abs(m01), std::abs(m10), std::abs(m11)});
}

inline double log_uniform(std::mt19937_64& rng, double lo, double hi)
{
    std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
    return std::exp(u(rng));
}

inline double uniform(std::mt19937_64& rng, double lo, double hi)
{
    std::uniform_real_distribution<double> u(lo, hi);
    return u(rng);
}

} // namespace oracle

#endif // SBS_TESTS_ORACLES_HPP
