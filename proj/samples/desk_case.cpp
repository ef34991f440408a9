// LiNbO3 ring, 1 um^3, telecom pump: coupling rate, pump requirement and
// verdict, plus the Stokes-channel numbers at the operating point.

#include <complex>
#include <cstdio>

#include "sbs/design.hpp"
#include "sbs/stokes.hpp"
#include "sbs/units.hpp"

int main()
{
    sbs::DesignInputs in;
    in.material = sbs::material_lookup("LiNbO3");
    in.volume_um3 = 1.0;
    in.lambda_nm = 1550.0;
    in.q_opt = 1e5;
    in.q_opt_int = 1e6;
    in.q_ac = 1e4;
    in.q_ac_int = 1e5;

    const auto rep = sbs::feasibility_report(in);
    const auto r = sbs::design_resonator(in);
    std::printf("Omega/2pi         %.3f GHz\n", sbs::units::rad_per_s_to_ghz(rep.omega_ac));
    std::printf("g0                %.3e rad/s\n", rep.g0);
    std::printf("Np (eps = 1)      %.3e\n", rep.np_min);
    std::printf("heat load         %.3f uW/um^3\n", rep.dissipated_power_density);
    std::printf("pump estimate     %.2f uW\n", rep.pump_power_estimate);
    std::printf("verdict           %s\n", std::string(sbs::to_string(rep.verdict)).c_str());

    const auto side = sbs::sideband_resolution(r.opt_total(), r.omega_ac, r.omega_s);
    const auto stokes = sbs::stokes_smatrix(r, sbs::stokes_operating_detuning(r),
                                            std::complex<double>{rep.g0, 0.0}, rep.np_min);
    std::printf("2 Omega / kappa   %.2f (resolved: %s)\n", side.margin, side.resolved ? "yes" : "no");
    std::printf("Stokes gain       %.4f\n", stokes.gain);
}
