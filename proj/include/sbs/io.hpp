#ifndef SBS_IO_HPP
#define SBS_IO_HPP

// CSV and JSON renderings of the library results. Numbers are written in
// shortest round-trip form so outputs are exact and byte-stable.

#include <charconv>
#include <complex>
#include <ostream>
#include <span>
#include <string>
#include <system_error>
#include <vector>

#include <json.hpp>

#include "sbs/coupling.hpp"
#include "sbs/design.hpp"
#include "sbs/dynamics.hpp"
#include "sbs/quantities.hpp"
#include "sbs/scattering.hpp"
#include "sbs/stokes.hpp"

namespace sbs::io {

using json = nlohmann::ordered_json;

inline std::string fmt(double v)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    if (res.ec != std::errc{})
        return "nan";
    return std::string(buf, res.ptr);
}

inline json complex_pair(std::complex<double> z) { return json::array({z.real(), z.imag()}); }

// --- materials -------------------------------------------------------------

inline json to_json(const Material& m)
{
    return json{{"name", m.name}, {"n", m.n},     {"p", m.p},           {"gamma", m.gamma},
                {"epsilon", m.epsilon}, {"rho", m.rho}, {"s", m.s}, {"source", m.source}};
}

inline void write_materials_csv(std::ostream& os, std::span<const Material> mats)
{
    os << "name,n,p,gamma,epsilon,rho,s\n";
    for (const auto& m : mats)
        os << m.name << ',' << fmt(m.n) << ',' << fmt(m.p) << ',' << fmt(m.gamma) << ','
           << fmt(m.epsilon) << ',' << fmt(m.rho) << ',' << fmt(m.s) << '\n';
}

// --- coupling --------------------------------------------------------------

inline json to_json(const CouplingResult& c)
{
    return json{{"overlap", c.overlap},   {"g0", c.g0},           {"omega_ac", c.omega_ac},
                {"omega_p", c.omega_p},   {"omega_s", c.omega_s}};
}

inline void write_coupling_csv(std::ostream& os, const CouplingResult& c)
{
    os << "overlap,g0,omega_ac,omega_p,omega_s\n"
       << fmt(c.overlap) << ',' << fmt(c.g0) << ',' << fmt(c.omega_ac) << ',' << fmt(c.omega_p)
       << ',' << fmt(c.omega_s) << '\n';
}

// --- scattering ------------------------------------------------------------

inline json to_json(const ScatterResult& s)
{
    return json{{"s11", complex_pair(s.s11)},  {"s12", complex_pair(s.s12)},
                {"s21", complex_pair(s.s21)},  {"s22", complex_pair(s.s22)},
                {"efficiency", s.efficiency},  {"refl_opt", s.refl_opt},
                {"refl_ac", s.refl_ac}};
}

inline void write_smatrix_csv(std::ostream& os, const ScatterResult& s)
{
    os << "entry,re,im,abs2\n";
    const auto row = [&](const char* name, std::complex<double> z) {
        os << name << ',' << fmt(z.real()) << ',' << fmt(z.imag()) << ',' << fmt(std::norm(z))
           << '\n';
    };
    row("s11", s.s11);
    row("s12", s.s12);
    row("s21", s.s21);
    row("s22", s.s22);
}

inline void write_sweep_csv(std::ostream& os, std::span<const SweepRow> rows)
{
    os << "epsilon,efficiency,refl_opt,refl_ac\n";
    for (const auto& r : rows)
        os << fmt(r.epsilon) << ',' << fmt(r.s.efficiency) << ',' << fmt(r.s.refl_opt) << ','
           << fmt(r.s.refl_ac) << '\n';
}

inline json sweep_json(std::span<const SweepRow> rows)
{
    json out = json::array();
    for (const auto& r : rows) {
        json row{{"epsilon", r.epsilon}};
        const json entries = to_json(r.s);
        for (const auto& [k, v] : entries.items())
            row[k] = v;
        out.push_back(std::move(row));
    }
    return out;
}

// --- dynamics --------------------------------------------------------------

inline void write_trace_csv(std::ostream& os, const Trace& tr)
{
    os << "t,re_a,im_a,re_b,im_b,re_aout,im_aout,re_cout,im_cout\n";
    for (std::size_t k = 0; k < tr.size(); ++k) {
        os << fmt(tr.times[k]) << ',' << fmt(tr.a[k].real()) << ',' << fmt(tr.a[k].imag()) << ','
           << fmt(tr.b[k].real()) << ',' << fmt(tr.b[k].imag()) << ',' << fmt(tr.a_out[k].real())
           << ',' << fmt(tr.a_out[k].imag()) << ',' << fmt(tr.c_out[k].real()) << ','
           << fmt(tr.c_out[k].imag()) << '\n';
    }
}

inline json to_json(const Trace& tr)
{
    json out{{"t", tr.times}, {"a", json::array()}, {"b", json::array()},
             {"a_out", json::array()}, {"c_out", json::array()}};
    for (std::size_t k = 0; k < tr.size(); ++k) {
        out["a"].push_back(complex_pair(tr.a[k]));
        out["b"].push_back(complex_pair(tr.b[k]));
        out["a_out"].push_back(complex_pair(tr.a_out[k]));
        out["c_out"].push_back(complex_pair(tr.c_out[k]));
    }
    return out;
}

// --- stokes ----------------------------------------------------------------

struct StokesReport
{
    SidebandReport sideband;
    double threshold_np = 0.0;
    double gain_at_operating_point = 0.0;
};

inline json to_json(const StokesReport& r)
{
    return json{{"resolved", r.sideband.resolved},
                {"margin", r.sideband.margin},
                {"qopt_bound", r.sideband.qopt_bound},
                {"threshold_np", r.threshold_np},
                {"gain_at_operating_point", r.gain_at_operating_point}};
}

inline json to_json(const AmplifierResult& a)
{
    return json{{"s11", complex_pair(a.s11)}, {"s12", complex_pair(a.s12)},
                {"gain", a.gain}, {"pair_rate_proxy", a.pair_rate_proxy}};
}

// --- design ----------------------------------------------------------------

inline json to_json(const FeasibilityReport& r)
{
    return json{
        {"g0", r.g0},
        {"omega_ac", r.omega_ac},
        {"np_min", r.np_min},
        {"np_density", r.np_density},
        {"dissipated_power_density", r.dissipated_power_density},
        {"pump_power_estimate", r.pump_power_estimate},
        {"unitarity_margins", json::array({r.margin_optical, r.margin_acoustic})},
        {"sideband_resolved", r.sideband_resolved},
        {"verdict", std::string(to_string(r.verdict))},
        {"flags",
         json{{"sideband_resolved", r.flags.sideband_resolved},
              {"optical_unitarity", r.flags.optical_unitarity},
              {"acoustic_unitarity", r.flags.acoustic_unitarity},
              {"pump_within_budget", r.flags.pump_within_budget}}},
    };
}

/// Aligned two-column text table for terminal output.
inline void write_table(std::ostream& os, const json& obj)
{
    std::size_t width = 0;
    for (auto it = obj.begin(); it != obj.end(); ++it)
        width = std::max(width, it.key().size());
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        os << it.key() << std::string(width - it.key().size() + 2, ' ');
        if (it->is_number_float())
            os << fmt(it->get<double>());
        else if (it->is_string())
            os << it->get<std::string>();
        else
            os << it->dump();
        os << '\n';
    }
}

} // namespace sbs::io

#endif // SBS_IO_HPP
