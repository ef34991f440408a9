#ifndef SBS_COUPLING_HPP
#define SBS_COUPLING_HPP

#include <cmath>
#include <complex>
#include <filesystem>
#include <fstream>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "sbs/error.hpp"
#include "sbs/quantities.hpp"
#include "sbs/units.hpp"

namespace sbs {

using cplx = std::complex<double>;

/// Backscattering phase matching: q = 2k = 2 n omega / c and Omega = s q.
inline double brillouin_frequency(double n, double s, double omega_opt)
{
    if (!(omega_opt > 0.0) || !std::isfinite(omega_opt))
        fail_validation("brillouin_frequency: optical frequency ", omega_opt, " must be positive");
    if (!(s >= 0.0) || !std::isfinite(s))
        fail_validation("brillouin_frequency: sound speed ", s, " must be >= 0");
    if (n < 1.0)
        fail_validation("brillouin_frequency: n=", n, " must be >= 1");
    return 2.0 * n * s * omega_opt / units::c_cgs;
}

inline double brillouin_frequency(const Material& m, double omega_opt)
{
    return brillouin_frequency(m.n, m.s, omega_opt);
}

/// Phase-matched acoustic wavenumber q = 2 n omega / c (1/cm).
inline double brillouin_wavenumber(const Material& m, double omega_opt)
{
    return 2.0 * m.n * omega_opt / units::c_cgs;
}

/// Overlap of uniform modes filling the interaction volume: gamma / sqrt(V).
inline double overlap_uniform(double gamma, double volume_cm3)
{
    if (!(volume_cm3 > 0.0) || !std::isfinite(volume_cm3))
        fail_validation("overlap_uniform: volume ", volume_cm3, " cm^3 must be positive");
    return gamma / std::sqrt(volume_cm3);
}

// ---------------------------------------------------------------------------
// transverse mode profiles

/// Transverse profiles of the pump, signal and acoustic modes sampled on a
/// shared 1D grid. The cross-section is taken as symmetric and separable:
/// each mode is f(y) f(z) with the same 1D factor in both directions, so
/// every 1D profile is normalized to int |f|^2 dy = 1.
struct ModeProfileSet
{
    std::vector<double> grid; // cm
    std::vector<cplx> psi_p;
    std::vector<cplx> psi_s;
    std::vector<cplx> phi;
    double length = 0.0;     // resonator circumference L (cm)
    double wavenumber = 0.0; // acoustic q (1/cm)
};

inline constexpr double kProfileNormTolerance = 1e-8;

/// Composite trapezoidal rule on a (possibly nonuniform) grid.
template <typename T>
T trapezoid(std::span<const double> x, std::span<const T> f)
{
    T acc{};
    for (std::size_t i = 1; i < x.size(); ++i)
        acc += 0.5 * (x[i] - x[i - 1]) * (f[i] + f[i - 1]);
    return acc;
}

inline double profile_norm(std::span<const double> grid, std::span<const cplx> f)
{
    std::vector<double> mod2(f.size());
    for (std::size_t i = 0; i < f.size(); ++i)
        mod2[i] = std::norm(f[i]);
    return trapezoid<double>(grid, mod2);
}

/// Rescales `f` so that its trapezoidal norm on `grid` is one.
inline std::vector<cplx> normalized(std::span<const double> grid, std::span<const cplx> f)
{
    const double norm = profile_norm(grid, f);
    if (!(norm > 0.0))
        fail_validation("cannot normalize an identically zero profile");
    std::vector<cplx> out(f.begin(), f.end());
    const double scale = 1.0 / std::sqrt(norm);
    for (auto& v : out)
        v *= scale;
    return out;
}

/// Checks the grid and normalization invariants. `phi` may be identically
/// zero (no acoustic mode); any nonzero profile must be normalized.
inline void validate(const ModeProfileSet& set)
{
    const std::size_t n = set.grid.size();
    if (n < 2)
        fail_validation("mode profiles: grid needs at least two points");
    if (set.psi_p.size() != n || set.psi_s.size() != n || set.phi.size() != n)
        fail_validation("mode profiles: psi_p/psi_s/phi are not sampled on the shared grid");
    for (std::size_t i = 1; i < n; ++i)
        if (!(set.grid[i] > set.grid[i - 1]))
            fail_validation("mode profiles: grid is not strictly increasing at index ",
                            static_cast<double>(i));
    if (!(set.length > 0.0))
        fail_validation("mode profiles: resonator length L=", set.length, " must be positive");

    const auto check = [&](const std::vector<cplx>& f, const char* label, bool allow_zero) {
        const double norm = profile_norm(set.grid, f);
        if (allow_zero && norm == 0.0)
            return;
        if (std::abs(norm - 1.0) > kProfileNormTolerance)
            fail_validation("mode profiles: ", label, " is not normalized (norm=", norm, ")");
    };
    check(set.psi_p, "psi_p", false);
    check(set.psi_s, "psi_s", false);
    check(set.phi, "phi", true);
}

/// Truncated overlap integral with the longitudinal (i * phi) term kept:
/// M = gamma / sqrt(L) * int dA psi_p psi_s (i phi). Returns the complex
/// value; callers report |M|.
inline cplx overlap_integral(const ModeProfileSet& set, double gamma)
{
    validate(set);
    std::vector<cplx> product(set.grid.size());
    for (std::size_t i = 0; i < product.size(); ++i)
        product[i] = set.psi_p[i] * set.psi_s[i] * set.phi[i];
    const cplx line = trapezoid<cplx>(set.grid, product);
    const cplx i_unit{0.0, 1.0};
    return gamma / std::sqrt(set.length) * i_unit * line * line;
}

/// Reads a columnar profile file. The first line is a header carrying
/// `L=<cm>` and `q=<1/cm>`; data rows are either
///   y psi_p psi_s phi                      (real profiles), or
///   y re_psi_p im_psi_p re_psi_s im_psi_s re_phi im_phi.
/// Further lines starting with '#' are comments.
inline ModeProfileSet load_mode_profiles(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        fail_validation("cannot open mode profile file '", path.string(), "'");

    ModeProfileSet set;
    std::string line;
    bool have_header = false;
    bool have_l = false;
    bool have_q = false;
    std::size_t lineno = 0;
    int columns = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        if (!have_header) {
            have_header = true;
            std::string text = line;
            for (auto& c : text)
                if (c == '#' || c == ',' || c == ';')
                    c = ' ';
            std::istringstream hs(text);
            std::string tok;
            while (hs >> tok) {
                const auto eq = tok.find('=');
                if (eq == std::string::npos)
                    continue;
                const std::string key = tok.substr(0, eq);
                double value = 0.0;
                try {
                    value = std::stod(tok.substr(eq + 1));
                } catch (const std::exception&) {
                    fail_validation(path.string(), ":", static_cast<double>(lineno),
                                    ": bad header value '", tok, "'");
                }
                if (key == "L") {
                    set.length = value;
                    have_l = true;
                } else if (key == "q") {
                    set.wavenumber = value;
                    have_q = true;
                }
            }
            if (!have_l || !have_q)
                fail_validation(path.string(), ": header must carry L=<cm> and q=<1/cm>");
            continue;
        }
        if (line.find_first_not_of(" \t") != std::string::npos &&
            line[line.find_first_not_of(" \t")] == '#')
            continue;

        std::istringstream row(line);
        std::vector<double> v;
        double x = 0.0;
        while (row >> x)
            v.push_back(x);
        if (!row.eof())
            fail_validation(path.string(), ":", static_cast<double>(lineno), ": non-numeric field");
        if (columns == 0)
            columns = static_cast<int>(v.size());
        if ((columns != 4 && columns != 7) || static_cast<int>(v.size()) != columns)
            fail_validation(path.string(), ":", static_cast<double>(lineno),
                            ": expected 4 or 7 columns consistently, got ",
                            static_cast<double>(v.size()));
        set.grid.push_back(v[0]);
        if (columns == 4) {
            set.psi_p.emplace_back(v[1], 0.0);
            set.psi_s.emplace_back(v[2], 0.0);
            set.phi.emplace_back(v[3], 0.0);
        } else {
            set.psi_p.emplace_back(v[1], v[2]);
            set.psi_s.emplace_back(v[3], v[4]);
            set.phi.emplace_back(v[5], v[6]);
        }
    }
    if (!have_header)
        fail_validation(path.string(), ": empty mode profile file");
    validate(set);
    return set;
}

// ---------------------------------------------------------------------------
// vacuum coupling rate

/// g0 = |M| sqrt(hbar omega_p omega_s Omega / (32 eps^2 rho s^2)), CGS.
inline double vacuum_coupling_rate(double overlap, double omega_p, double omega_s,
                                   double omega_ac, const Material& m)
{
    if (!(omega_p > 0.0) || !(omega_s > 0.0) || !(omega_ac > 0.0))
        fail_validation("vacuum_coupling_rate: frequencies must be positive (omega_p=", omega_p,
                        ", omega_s=", omega_s, ", Omega=", omega_ac, ")");
    if (!std::isfinite(overlap))
        fail_validation("vacuum_coupling_rate: overlap is not finite");
    validate(m);
    const double num = units::hbar_cgs * omega_p * omega_s * omega_ac;
    const double den = 32.0 * m.epsilon * m.epsilon * m.rho * m.s * m.s;
    return std::abs(overlap) * std::sqrt(num / den);
}

struct CouplingResult
{
    double overlap = 0.0; // |M|, cm^-3/2
    double g0 = 0.0;      // rad/s
    double omega_ac = 0.0; // Omega, rad/s
    double omega_p = 0.0;
    double omega_s = 0.0;
};

/// Uniform-mode chain: Omega from phase matching, signal on the anti-Stokes
/// sideband (omega_s = omega_p + Omega), M = gamma/sqrt(V), then g0.
inline CouplingResult couple_uniform(const Material& m, double volume_cm3, double omega_p)
{
    CouplingResult r;
    r.omega_p = omega_p;
    r.omega_ac = brillouin_frequency(m, omega_p);
    r.omega_s = omega_p + r.omega_ac;
    r.overlap = overlap_uniform(m.gamma, volume_cm3);
    r.g0 = vacuum_coupling_rate(r.overlap, r.omega_p, r.omega_s, r.omega_ac, m);
    return r;
}

/// Same chain with the overlap evaluated from mode profiles.
inline CouplingResult couple_profiles(const Material& m, const ModeProfileSet& profiles,
                                      double omega_p)
{
    CouplingResult r;
    r.omega_p = omega_p;
    r.omega_ac = brillouin_frequency(m, omega_p);
    r.omega_s = omega_p + r.omega_ac;
    r.overlap = std::abs(overlap_integral(profiles, m.gamma));
    r.g0 = vacuum_coupling_rate(r.overlap, r.omega_p, r.omega_s, r.omega_ac, m);
    return r;
}

} // namespace sbs

#endif // SBS_COUPLING_HPP
