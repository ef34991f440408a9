#ifndef SBS_SCATTERING_HPP
#define SBS_SCATTERING_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "sbs/error.hpp"

namespace sbs {

using cplx = std::complex<double>;

/// Coupled optical + acoustic cavity. All rates are amplitude damping rates
/// in rad/s; "ext" is the engineered port coupling (fiber for optics,
/// IDT/transmission line for acoustics), "int" the intrinsic loss.
struct ResonatorSpec
{
    double omega_s = 0.0;  // optical signal frequency
    double omega_ac = 0.0; // acoustic frequency Omega
    double opt_ext = 0.0;  // kappa_0
    double opt_int = 0.0;
    double ac_ext = 0.0;   // Gamma_0
    double ac_int = 0.0;
    double volume = 0.0;   // cm^3

    double opt_total() const { return opt_ext + opt_int; }
    double ac_total() const { return ac_ext + ac_int; }
};

inline void validate(const ResonatorSpec& r)
{
    const double rates[] = {r.opt_ext, r.opt_int, r.ac_ext, r.ac_int};
    for (double v : rates)
        if (!(v >= 0.0) || !std::isfinite(v))
            fail_validation("resonator: loss rates must be finite and >= 0");
    if (!(r.omega_ac > 0.0) || !(r.omega_s > r.omega_ac) || !std::isfinite(r.omega_s))
        fail_validation("resonator: need omega_s > Omega > 0 (omega_s=", r.omega_s,
                        ", Omega=", r.omega_ac, ")");
    if (!(r.volume >= 0.0))
        fail_validation("resonator: volume must be >= 0");
}

/// Signal, acoustic and pump detunings tied by d_opt - d_ac = 2 * half_pump.
class DetuningConfig
{
public:
    DetuningConfig() = default;

    DetuningConfig(double d_opt, double d_ac, double half_pump)
        : d_opt_(d_opt), d_ac_(d_ac), half_pump_(half_pump)
    {
        if (!std::isfinite(d_opt) || !std::isfinite(d_ac) || !std::isfinite(half_pump))
            fail_validation("detuning: values must be finite");
        const double scale = std::max({std::abs(d_opt), std::abs(d_ac), std::abs(2.0 * half_pump)});
        if (std::abs(d_opt - d_ac - 2.0 * half_pump) > 1e-9 * scale)
            fail_validation("detuning: d_omega - d_Omega = ", d_opt - d_ac,
                            " does not equal 2*delta = ", 2.0 * half_pump);
    }

    /// Pump detuning implied by the two signal detunings.
    static DetuningConfig from_signal(double d_opt, double d_ac)
    {
        return {d_opt, d_ac, 0.5 * (d_opt - d_ac)};
    }

    static DetuningConfig resonant() { return {}; }

    double d_opt() const { return d_opt_; }
    double d_ac() const { return d_ac_; }
    double half_pump() const { return half_pump_; }

private:
    double d_opt_ = 0.0;
    double d_ac_ = 0.0;
    double half_pump_ = 0.0;
};

/// Normalized pump strength eps = |g0|^2 Np / (kappa_0 Gamma_0).
inline double normalized_pump(double g0_abs, double np, double opt_ext, double ac_ext)
{
    if (!(opt_ext > 0.0) || !(ac_ext > 0.0))
        fail_validation("normalized pump needs positive external rates");
    if (!(np >= 0.0))
        fail_validation("pump photon number ", np, " must be >= 0");
    return g0_abs * g0_abs * np / (opt_ext * ac_ext);
}

/// Inverse of normalized_pump.
inline double pump_photons_for(double epsilon, double g0_abs, double opt_ext, double ac_ext)
{
    if (!(epsilon >= 0.0))
        fail_validation("normalized pump ", epsilon, " must be >= 0");
    if (!(g0_abs > 0.0))
        fail_validation("pump photon number is undefined for g0 = 0");
    return epsilon * opt_ext * ac_ext / (g0_abs * g0_abs);
}

struct PumpStrength
{
    double np = 0.0;
    double epsilon = 0.0;

    static PumpStrength from_np(double np, double g0_abs, const ResonatorSpec& r)
    {
        return {np, normalized_pump(g0_abs, np, r.opt_ext, r.ac_ext)};
    }
    static PumpStrength from_epsilon(double eps, double g0_abs, const ResonatorSpec& r)
    {
        return {pump_photons_for(eps, g0_abs, r.opt_ext, r.ac_ext), eps};
    }
};

/// Port 1 is optical, port 2 is microwave/acoustic. s12 = out1/in2.
struct ScatterResult
{
    cplx s11, s12, s21, s22;
    double efficiency = 0.0; // |S12|^2
    double refl_opt = 0.0;   // |S11|^2
    double refl_ac = 0.0;    // |S22|^2
};

namespace detail {

// |D| below this fraction of its natural scale is treated as a pole.
inline constexpr double kSingularRelTol = 1e-14;

inline std::string describe(const ResonatorSpec& r, const DetuningConfig& d, double coupling)
{
    return detail::concat("kappa=", r.opt_total(), ", Gamma=", r.ac_total(),
                          ", d_omega=", d.d_opt(), ", d_Omega=", d.d_ac(),
                          ", g0*sqrt(Np)=", coupling);
}

} // namespace detail

/// Beam-splitter (anti-Stokes) steady-state scattering matrix.
///   D   = (dw + i k)(dW + i G) - |g0|^2 Np
///   S11 = 1 - 2i k0 (dW + i G) / D
///   S22 = 1 - 2i G0 (dw + i k) / D
///   S12 = 2i g0  sqrt(Np k0 G0) / D    (a_out <- c_in)
///   S21 = 2i g0* sqrt(Np k0 G0) / D    (c_out <- a_in)
/// with a_out = a_in - i sqrt(2 k0) a and c_out = c_in - i sqrt(2 G0) b.
inline ScatterResult smatrix(const ResonatorSpec& r, const DetuningConfig& det, cplx g0, double np)
{
    validate(r);
    if (!(np >= 0.0) || !std::isfinite(np))
        fail_validation("smatrix: pump photon number ", np, " must be finite and >= 0");
    const cplx i{0.0, 1.0};
    const double kappa = r.opt_total();
    const double gamma = r.ac_total();
    const cplx opt_pole = det.d_opt() + i * kappa;
    const cplx ac_pole = det.d_ac() + i * gamma;
    const double coupling2 = std::norm(g0) * np;
    const cplx denom = opt_pole * ac_pole - coupling2;

    const double scale = std::abs(opt_pole) * std::abs(ac_pole) + coupling2;
    if (scale == 0.0 || std::abs(denom) <= detail::kSingularRelTol * scale)
        throw SingularDenominator("smatrix: singular response denominator D=0 (" +
                                  detail::describe(r, det, std::sqrt(coupling2)) + ")");

    const double port = std::sqrt(np * r.opt_ext * r.ac_ext);
    ScatterResult s;
    s.s11 = 1.0 - 2.0 * i * r.opt_ext * ac_pole / denom;
    s.s22 = 1.0 - 2.0 * i * r.ac_ext * opt_pole / denom;
    s.s12 = 2.0 * i * g0 * port / denom;
    s.s21 = 2.0 * i * std::conj(g0) * port / denom;
    s.efficiency = std::norm(s.s12);
    s.refl_opt = std::norm(s.s11);
    s.refl_ac = std::norm(s.s22);
    return s;
}

/// Lossless, fully resonant conversion efficiency 4 eps / (1 + eps)^2.
inline double efficiency_on_resonance(double epsilon)
{
    if (!(epsilon >= 0.0))
        fail_validation("efficiency_on_resonance: epsilon=", epsilon, " must be >= 0");
    if (std::isinf(epsilon))
        return 0.0;
    return 4.0 * epsilon / ((1.0 + epsilon) * (1.0 + epsilon));
}

/// Above threshold (eps >= 1) the lossless reflection S11 vanishes at
/// d_omega = k0 sqrt(eps - 1), d_Omega = (G0/k0) d_omega.
inline DetuningConfig full_conversion_detunings(double epsilon, double opt_ext, double ac_ext)
{
    if (!(epsilon >= 1.0))
        fail_validation("full_conversion_detunings: epsilon=", epsilon,
                        " is below the full-conversion threshold 1");
    if (!(opt_ext > 0.0) || !(ac_ext > 0.0))
        fail_validation("full_conversion_detunings: external rates must be positive");
    const double d_opt = opt_ext * std::sqrt(epsilon - 1.0);
    const double d_ac = (ac_ext / opt_ext) * d_opt;
    return DetuningConfig::from_signal(d_opt, d_ac);
}

// ---------------------------------------------------------------------------
// sweeps over the normalized pump

enum class DetuningPolicy {
    resonant, // all detunings zero
    fixed,    // user-supplied detunings
    scaled,   // d_omega = k0, d_Omega = G0, delta = (k0 - G0)/2
    common,   // delta = 0, d_Omega = d_omega = G0
};

struct SweepPolicy
{
    DetuningPolicy kind = DetuningPolicy::resonant;
    DetuningConfig fixed{};
};

inline DetuningConfig detunings_for(const SweepPolicy& policy, const ResonatorSpec& r)
{
    switch (policy.kind) {
    case DetuningPolicy::resonant:
        return DetuningConfig::resonant();
    case DetuningPolicy::fixed:
        return policy.fixed;
    case DetuningPolicy::scaled:
        return {r.opt_ext, r.ac_ext, 0.5 * (r.opt_ext - r.ac_ext)};
    case DetuningPolicy::common:
        return {r.ac_ext, r.ac_ext, 0.0};
    }
    fail_validation("unknown detuning policy");
}

struct SweepRow
{
    double epsilon = 0.0;
    ScatterResult s;
};

/// Sweeps eps over [eps_min, eps_max] in `steps` evenly spaced points
/// (a degenerate range yields a single row). The coupling is taken real
/// with |g0|^2 Np = eps k0 G0.
inline std::vector<SweepRow> sweep(const ResonatorSpec& r, const SweepPolicy& policy,
                                   double eps_min, double eps_max, int steps)
{
    validate(r);
    if (!(r.opt_ext > 0.0) || !(r.ac_ext > 0.0))
        fail_validation("sweep: external rates must be positive");
    if (!(eps_min >= 0.0) || !(eps_max >= eps_min) || !std::isfinite(eps_max))
        fail_validation("sweep: need 0 <= eps_min <= eps_max (got [", eps_min, ", ", eps_max, "])");
    if (steps < 2)
        fail_validation("sweep: steps=", steps, " must be >= 2");

    const DetuningConfig det = detunings_for(policy, r);
    const int count = (eps_max == eps_min) ? 1 : steps;
    const double norm = r.opt_ext * r.ac_ext;

    std::vector<SweepRow> rows;
    rows.reserve(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) {
        // Written as min + span*k/(n-1) so the endpoints and integer
        // fractions land exactly on grid points.
        const double eps = count == 1 ? eps_min
                                      : eps_min + (eps_max - eps_min) * k / (count - 1);
        rows.push_back({eps, smatrix(r, det, cplx{1.0, 0.0}, eps * norm)});
    }
    return rows;
}

} // namespace sbs

#endif // SBS_SCATTERING_HPP
