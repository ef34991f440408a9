// Conversion efficiency versus normalized pump for the resonant, scaled and
// common detuning policies; lossless cavity with kappa_0 = Gamma_0.

#include <cstdio>

#include "sbs/scattering.hpp"

int main()
{
    sbs::ResonatorSpec r;
    r.omega_s = 100.0;
    r.omega_ac = 1.0;
    r.opt_ext = 1.0;
    r.ac_ext = 1.0;

    const sbs::DetuningPolicy policies[] = {sbs::DetuningPolicy::resonant,
                                            sbs::DetuningPolicy::scaled,
                                            sbs::DetuningPolicy::common};
    const auto a = sbs::sweep(r, {policies[0]}, 0.0, 6.0, 61);
    const auto b = sbs::sweep(r, {policies[1]}, 0.0, 6.0, 61);
    const auto c = sbs::sweep(r, {policies[2]}, 0.0, 6.0, 61);

    std::printf("%8s %12s %12s %12s\n", "epsilon", "resonant", "scaled", "common");
    for (std::size_t k = 0; k < a.size(); ++k)
        std::printf("%8.2f %12.6f %12.6f %12.6f\n", a[k].epsilon, a[k].s.efficiency,
                    b[k].s.efficiency, c[k].s.efficiency);
}
