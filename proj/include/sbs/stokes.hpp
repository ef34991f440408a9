#ifndef SBS_STOKES_HPP
#define SBS_STOKES_HPP

#include <array>
#include <cmath>
#include <complex>

#include "sbs/error.hpp"
#include "sbs/scattering.hpp"

namespace sbs {

/// Bogoliubov scattering of the Stokes (parametric-amplifier) channel.
/// s11 = a_out / a_in (signal gain amplitude), s12 = c_out^dag / a_in
/// (signal-to-idler conversion).
struct AmplifierResult
{
    cplx s11;
    cplx s12;
    double gain = 0.0;            // |S11|^2
    double pair_rate_proxy = 0.0; // |S12|^2
};

namespace detail {

// Growth rates of the (a, b^dag) pair obey x' = A x with
//   A = [[i dw - k, i g], [-i g*, -i dW - G]].
inline std::array<cplx, 2> amplifier_rates(const ResonatorSpec& r, const DetuningConfig& det,
                                           double coupling2)
{
    const cplx i{0.0, 1.0};
    const cplx m11 = i * det.d_opt() - r.opt_total();
    const cplx m22 = -i * det.d_ac() - r.ac_total();
    const cplx mean = 0.5 * (m11 + m22);
    const cplx half_diff = 0.5 * (m11 - m22);
    // m12 * m21 = (i g)(-i g*) = |g|^2
    const cplx root = std::sqrt(half_diff * half_diff + coupling2);
    return {mean + root, mean - root};
}

} // namespace detail

/// True when the Stokes pair is dynamically stable (all growth rates
/// negative). On resonance this reduces to |g0|^2 Np < kappa * Gamma.
inline bool stokes_stable(const ResonatorSpec& r, const DetuningConfig& det, cplx g0, double np)
{
    const auto rates = detail::amplifier_rates(r, det, std::norm(g0) * np);
    // Relative slack so that the marginal point |g|^2 = kG counts as unstable.
    const double slack = 1e-12 * (r.opt_total() + r.ac_total());
    return rates[0].real() < -slack && rates[1].real() < -slack;
}

/// Steady-state response of the Stokes channel, derived from the
/// amplifier Hamiltonian with the acoustic mode conjugated:
///   (dw + i k) a + g b^dag        = sqrt(2 k0) a_in
///   (dW - i G) b^dag + g* a       = sqrt(2 G0) c_in^dag
/// D_s = (dw + i k)(dW - i G) - |g|^2,
/// S11 = 1 - 2i k0 (dW - i G) / D_s, S12 = -2i g* sqrt(k0 G0) / D_s.
/// Throws ParametricOscillation at or above the oscillation threshold.
inline AmplifierResult stokes_smatrix(const ResonatorSpec& r, const DetuningConfig& det, cplx g0,
                                      double np)
{
    validate(r);
    if (!(np >= 0.0) || !std::isfinite(np))
        fail_validation("stokes_smatrix: pump photon number ", np, " must be finite and >= 0");
    const double coupling2 = std::norm(g0) * np;
    if (!stokes_stable(r, det, g0, np))
        throw ParametricOscillation(detail::concat(
            "stokes_smatrix: parametric oscillation (|g0|^2 Np=", coupling2,
            ", kappa*Gamma=", r.opt_total() * r.ac_total(), ", d_omega=", det.d_opt(),
            ", d_Omega=", det.d_ac(), ")"));

    const cplx i{0.0, 1.0};
    const cplx opt_pole = det.d_opt() + i * r.opt_total();
    const cplx ac_pole = det.d_ac() - i * r.ac_total();
    const cplx denom = opt_pole * ac_pole - coupling2;
    if (std::abs(denom) == 0.0)
        throw SingularDenominator("stokes_smatrix: singular response denominator");

    AmplifierResult out;
    out.s11 = 1.0 - 2.0 * i * r.opt_ext * ac_pole / denom;
    out.s12 = -2.0 * i * std::conj(g0) * std::sqrt(np * r.opt_ext * r.ac_ext) / denom;
    out.gain = std::norm(out.s11);
    out.pair_rate_proxy = std::norm(out.s12);
    return out;
}

/// Pump photon number at which the resonant Stokes channel starts to
/// oscillate: kappa * Gamma / g0^2.
inline double oscillation_threshold(double kappa, double gamma, double g0)
{
    if (!(kappa >= 0.0) || !(gamma >= 0.0))
        fail_validation("oscillation_threshold: rates must be >= 0");
    if (!(std::abs(g0) > 0.0))
        fail_validation("oscillation_threshold: g0 = 0 gives an infinite threshold");
    return kappa * gamma / (g0 * g0);
}

struct SidebandReport
{
    bool resolved = false;
    double margin = 0.0;     // 2 Omega / kappa
    double qopt_bound = 0.0; // omega_s / (2 Omega)
};

/// Resolved-sideband test kappa < 2 Omega and the implied optical Q bound.
inline SidebandReport sideband_resolution(double kappa, double omega_ac, double omega_s)
{
    if (!(kappa > 0.0) || !(omega_ac > 0.0) || !(omega_s > 0.0))
        fail_validation("sideband_resolution: inputs must be positive (kappa=", kappa,
                        ", Omega=", omega_ac, ", omega_s=", omega_s, ")");
    SidebandReport rep;
    rep.resolved = kappa < 2.0 * omega_ac;
    rep.margin = 2.0 * omega_ac / kappa;
    rep.qopt_bound = omega_s / (2.0 * omega_ac);
    return rep;
}

/// Detuning of the Stokes sideband from the signal cavity resonance when the
/// anti-Stokes signal is on resonance: the sideband sits 2 Omega below it.
inline DetuningConfig stokes_operating_detuning(const ResonatorSpec& r)
{
    return DetuningConfig::from_signal(2.0 * r.omega_ac, 0.0);
}

} // namespace sbs

#endif // SBS_STOKES_HPP
