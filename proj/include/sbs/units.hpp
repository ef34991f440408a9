#ifndef SBS_UNITS_HPP
#define SBS_UNITS_HPP

// Physics runs in CGS-Gaussian units with angular frequencies (rad/s).
// The helpers below are the only place SI boundary quantities are converted.

#include <numbers>

namespace sbs::units {

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

inline constexpr double hbar_cgs = 1.054571817e-27; // erg s
inline constexpr double c_cgs = 2.99792458e10;      // cm/s

inline constexpr double cm_per_um = 1e-4;
inline constexpr double cm3_per_um3 = 1e-12;
inline constexpr double cm_per_nm = 1e-7;
inline constexpr double erg_per_s_per_uw = 10.0; // 1 uW = 1e-6 W = 10 erg/s

constexpr double um3_to_cm3(double v) { return v * cm3_per_um3; }
constexpr double cm3_to_um3(double v) { return v / cm3_per_um3; }
constexpr double um_to_cm(double x) { return x * cm_per_um; }
constexpr double nm_to_cm(double x) { return x * cm_per_nm; }

// Cyclic GHz -> rad/s.
constexpr double ghz_to_rad_per_s(double f) { return two_pi * f * 1e9; }
constexpr double rad_per_s_to_ghz(double w) { return w / two_pi * 1e-9; }

constexpr double ns_to_s(double t) { return t * 1e-9; }

constexpr double erg_per_s_to_uw(double p) { return p / erg_per_s_per_uw; }

// Vacuum wavelength -> optical angular frequency.
constexpr double wavelength_nm_to_omega(double lambda_nm)
{
    return two_pi * c_cgs / nm_to_cm(lambda_nm);
}

} // namespace sbs::units

#endif // SBS_UNITS_HPP
