#ifndef SBS_CLI_HPP
#define SBS_CLI_HPP

// Command layer behind the `sbs` executable. Each command turns a RunConfig
// into library inputs, calls one operation family and serializes the result.

#include <cmath>
#include <iostream>
#include <limits>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "sbs/config.hpp"
#include "sbs/coupling.hpp"
#include "sbs/design.hpp"
#include "sbs/dynamics.hpp"
#include "sbs/error.hpp"
#include "sbs/io.hpp"
#include "sbs/quantities.hpp"
#include "sbs/scattering.hpp"
#include "sbs/stokes.hpp"
#include "sbs/units.hpp"

namespace sbs::cli {

enum class Command { materials, coupling, smatrix, sweep, dynamics, stokes, design };
enum class Format { csv, json };

enum ExitCode : int { ok = 0, validation_error = 1, numerical_error = 2 };

inline std::optional<Command> parse_command(std::string_view name)
{
    if (name == "materials") return Command::materials;
    if (name == "coupling") return Command::coupling;
    if (name == "smatrix") return Command::smatrix;
    if (name == "sweep") return Command::sweep;
    if (name == "dynamics") return Command::dynamics;
    if (name == "stokes") return Command::stokes;
    if (name == "design") return Command::design;
    return std::nullopt;
}

inline Format default_format(Command c)
{
    switch (c) {
    case Command::materials:
    case Command::sweep:
    case Command::dynamics:
        return Format::csv;
    default:
        return Format::json;
    }
}

// ---------------------------------------------------------------------------
// config -> library inputs

inline const std::set<std::string>& known_keys()
{
    static const std::set<std::string> keys = {
        "material", "material.name", "material.n", "material.p", "material.rho", "material.s",
        "material.epsilon", "material.gamma",
        "geometry.volume_um3", "geometry.lambda_nm", "geometry.length_um",
        "losses.q_opt", "losses.q_opt_int", "losses.q_ac", "losses.q_ac_int",
        "pump.np", "pump.epsilon",
        "detuning.policy", "detuning.d_omega_ghz", "detuning.d_Omega_ghz", "detuning.delta_ghz",
        "coupling.profiles",
        "sweep.eps_min", "sweep.eps_max", "sweep.steps",
        "dynamics.t_ns", "dynamics.dt_ns", "dynamics.stride",
        "dynamics.initial.a_re", "dynamics.initial.a_im",
        "dynamics.initial.b_re", "dynamics.initial.b_im",
        "drive.optical.kind", "drive.optical.amplitude", "drive.optical.detuning_ghz",
        "drive.optical.t_on_ns", "drive.optical.t_off_ns",
        "drive.microwave.kind", "drive.microwave.amplitude", "drive.microwave.detuning_ghz",
        "drive.microwave.t_on_ns", "drive.microwave.t_off_ns",
        "design.recycling", "design.pump_budget_uw",
    };
    return keys;
}

/// `material = <name|path>` or inline `material.n/p/rho/s[/epsilon/gamma]`.
inline Material material_from(const RunConfig& cfg)
{
    if (cfg.has("material"))
        return material_lookup(cfg.required_text("material"));
    if (cfg.has("material.n") || cfg.has("material.p")) {
        Material m = make_material(cfg.text("material.name").value_or("inline"),
                                   cfg.required_number("material.n"),
                                   cfg.required_number("material.p"),
                                   cfg.positive("material.rho"), cfg.positive("material.s"),
                                   cfg.number("material.epsilon"), "inline config");
        if (const auto g = cfg.number("material.gamma"))
            m.gamma = *g;
        validate(m);
        return m;
    }
    fail_validation(cfg.origin(), ": missing required key 'material' (a bundled name, a data "
                                  "file, or inline material.n/material.p/material.rho/material.s)");
}

inline double pump_omega(const RunConfig& cfg)
{
    return units::wavelength_nm_to_omega(cfg.positive("geometry.lambda_nm", 1550.0));
}

inline CouplingResult coupling_from(const RunConfig& cfg, const Material& m)
{
    const double omega_p = pump_omega(cfg);
    if (const auto path = cfg.text("coupling.profiles"))
        return couple_profiles(m, load_mode_profiles(*path), omega_p);
    const double volume = units::um3_to_cm3(cfg.positive("geometry.volume_um3", 1.0));
    return couple_uniform(m, volume, omega_p);
}

inline DesignInputs design_inputs_from(const RunConfig& cfg)
{
    DesignInputs in;
    in.material = material_from(cfg);
    in.volume_um3 = cfg.positive("geometry.volume_um3", 1.0);
    in.lambda_nm = cfg.positive("geometry.lambda_nm", 1550.0);
    in.q_opt = cfg.positive("losses.q_opt");
    in.q_ac = cfg.positive("losses.q_ac");
    const double inf = std::numeric_limits<double>::infinity();
    in.q_opt_int = cfg.positive("losses.q_opt_int", inf, true);
    in.q_ac_int = cfg.positive("losses.q_ac_int", inf, true);
    in.recycling = cfg.positive("design.recycling", 10.0);
    in.pump_budget_uw = cfg.positive("design.pump_budget_uw", 100.0);
    return in;
}

struct Device
{
    Material material;
    CouplingResult coupling;
    ResonatorSpec resonator;
};

inline Device device_from(const RunConfig& cfg)
{
    Device d;
    const DesignInputs in = design_inputs_from(cfg);
    d.material = in.material;
    d.resonator = design_resonator(in);
    d.coupling = coupling_from(cfg, d.material);
    return d;
}

inline double pump_photons_from(const RunConfig& cfg, const Device& d)
{
    const bool has_np = cfg.has("pump.np");
    const bool has_eps = cfg.has("pump.epsilon");
    if (has_np == has_eps)
        fail_validation(cfg.origin(), ": exactly one of 'pump.np' or 'pump.epsilon' is required");
    if (has_np) {
        const double np = cfg.required_number("pump.np");
        if (!(np >= 0.0) || std::isinf(np))
            fail_validation(cfg.where("pump.np"), "key 'pump.np' must be finite and >= 0");
        return np;
    }
    const double eps = cfg.required_number("pump.epsilon");
    if (!(eps >= 0.0) || std::isinf(eps))
        fail_validation(cfg.where("pump.epsilon"), "key 'pump.epsilon' must be finite and >= 0");
    return pump_photons_for(eps, d.coupling.g0, d.resonator.opt_ext, d.resonator.ac_ext);
}

inline SweepPolicy policy_from(const RunConfig& cfg, const ResonatorSpec& r,
                               std::optional<double> epsilon = std::nullopt)
{
    const std::string name = cfg.text("detuning.policy").value_or("resonant");
    SweepPolicy p;
    if (name == "resonant") {
        p.kind = DetuningPolicy::resonant;
    } else if (name == "scaled") {
        p.kind = DetuningPolicy::scaled;
    } else if (name == "common") {
        p.kind = DetuningPolicy::common;
    } else if (name == "fixed") {
        p.kind = DetuningPolicy::fixed;
        const double d_opt = units::ghz_to_rad_per_s(cfg.required_number("detuning.d_omega_ghz"));
        const double d_ac = units::ghz_to_rad_per_s(cfg.required_number("detuning.d_Omega_ghz"));
        if (const auto delta = cfg.number("detuning.delta_ghz")) {
            try {
                p.fixed = DetuningConfig(d_opt, d_ac, units::ghz_to_rad_per_s(*delta));
            } catch (const ValidationError& e) {
                fail_validation(cfg.where("detuning.delta_ghz"), e.what());
            }
        } else {
            p.fixed = DetuningConfig::from_signal(d_opt, d_ac);
        }
    } else if (name == "full_conversion") {
        if (!epsilon)
            fail_validation(cfg.where("detuning.policy"),
                            "policy 'full_conversion' is not available for this command");
        p.kind = DetuningPolicy::fixed;
        p.fixed = full_conversion_detunings(*epsilon, r.opt_ext, r.ac_ext);
    } else {
        fail_validation(cfg.where("detuning.policy"), "key 'detuning.policy' must be one of "
                                                      "resonant|fixed|scaled|common|full_conversion, got '",
                        name, "'");
    }
    return p;
}

inline std::vector<DriveSignal> drives_from(const RunConfig& cfg)
{
    std::vector<DriveSignal> drives;
    for (const std::string port : {"optical", "microwave"}) {
        const std::string base = "drive." + port + ".";
        const std::string kind = cfg.text(base + "kind").value_or("off");
        DriveSignal d;
        d.port = port == "optical" ? DrivePort::optical_in : DrivePort::microwave_in;
        if (kind == "off")
            continue;
        d.amplitude = cfg.number_or(base + "amplitude", 1.0);
        if (kind == "constant") {
            d.kind = DriveKind::constant;
        } else if (kind == "tone") {
            d.kind = DriveKind::tone;
            d.detuning = units::ghz_to_rad_per_s(cfg.required_number(base + "detuning_ghz"));
        } else if (kind == "pulse") {
            d.kind = DriveKind::pulse;
            d.t_on = units::ns_to_s(cfg.required_number(base + "t_on_ns"));
            d.t_off = units::ns_to_s(cfg.required_number(base + "t_off_ns"));
            if (!(d.t_on < d.t_off))
                fail_validation(cfg.where(base + "t_off_ns"), "key '", base,
                                "t_off_ns' must exceed '", base, "t_on_ns'");
        } else {
            fail_validation(cfg.where(base + "kind"), "key '", base,
                            "kind' must be off|constant|tone|pulse, got '", kind, "'");
        }
        drives.push_back(d);
    }
    return drives;
}

// ---------------------------------------------------------------------------
// commands

inline void emit_key_values(std::ostream& out, const io::json& obj)
{
    out << "key,value\n";
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        out << it.key() << ',';
        if (it->is_number_float())
            out << io::fmt(it->get<double>());
        else if (it->is_string())
            out << it->get<std::string>();
        else
            out << it->dump();
        out << '\n';
    }
}

inline void cmd_materials(const RunConfig& cfg, std::ostream& out, Format fmt)
{
    std::vector<Material> mats;
    if (cfg.has("material") || cfg.has("material.n"))
        mats.push_back(material_from(cfg));
    else
        mats = bundled_materials();
    if (fmt == Format::csv) {
        io::write_materials_csv(out, mats);
    } else {
        io::json arr = io::json::array();
        for (const auto& m : mats)
            arr.push_back(io::to_json(m));
        out << io::json{{"materials", arr}}.dump(2) << '\n';
    }
}

inline void cmd_coupling(const RunConfig& cfg, std::ostream& out, Format fmt)
{
    const Material m = material_from(cfg);
    const CouplingResult c = coupling_from(cfg, m);
    if (fmt == Format::csv)
        io::write_coupling_csv(out, c);
    else
        out << io::to_json(c).dump(2) << '\n';
}

inline void cmd_smatrix(const RunConfig& cfg, std::ostream& out, Format fmt)
{
    const Device d = device_from(cfg);
    const double np = pump_photons_from(cfg, d);
    const double eps = normalized_pump(d.coupling.g0, np, d.resonator.opt_ext, d.resonator.ac_ext);
    const DetuningConfig det = detunings_for(policy_from(cfg, d.resonator, eps), d.resonator);
    const ScatterResult s = smatrix(d.resonator, det, cplx{d.coupling.g0, 0.0}, np);
    if (fmt == Format::csv) {
        io::write_smatrix_csv(out, s);
    } else {
        io::json j = io::to_json(s);
        j["epsilon"] = eps;
        j["np"] = np;
        j["g0"] = d.coupling.g0;
        out << j.dump(2) << '\n';
    }
}

inline void cmd_sweep(const RunConfig& cfg, std::ostream& out, Format fmt)
{
    const Device d = device_from(cfg);
    const double lo = cfg.number_or("sweep.eps_min", 0.0);
    const double hi = cfg.number_or("sweep.eps_max", 6.0);
    if (!(lo >= 0.0) || !(hi >= lo))
        fail_validation(cfg.where("sweep.eps_max"), "need 0 <= sweep.eps_min <= sweep.eps_max");
    const double steps = cfg.number_or("sweep.steps", 121.0);
    if (!(steps >= 2.0) || steps != std::floor(steps) || steps > 1e7)
        fail_validation(cfg.where("sweep.steps"), "key 'sweep.steps' must be an integer >= 2");
    const auto rows = sweep(d.resonator, policy_from(cfg, d.resonator), lo, hi,
                            static_cast<int>(steps));
    if (fmt == Format::csv)
        io::write_sweep_csv(out, rows);
    else
        out << io::sweep_json(rows).dump(2) << '\n';
}

inline void cmd_dynamics(const RunConfig& cfg, std::ostream& out, Format fmt)
{
    const Device d = device_from(cfg);
    const double np = pump_photons_from(cfg, d);
    const double eps = normalized_pump(d.coupling.g0, np, d.resonator.opt_ext, d.resonator.ac_ext);
    const DetuningConfig det = detunings_for(policy_from(cfg, d.resonator, eps), d.resonator);
    const auto drives = drives_from(cfg);
    const double t_end = units::ns_to_s(cfg.positive("dynamics.t_ns"));
    const double dt = units::ns_to_s(cfg.positive("dynamics.dt_ns"));
    const double stride = cfg.number_or("dynamics.stride", 1.0);
    if (!(stride >= 1.0) || stride != std::floor(stride))
        fail_validation(cfg.where("dynamics.stride"), "key 'dynamics.stride' must be an integer >= 1");
    InitialState init;
    init.a = {cfg.number_or("dynamics.initial.a_re", 0.0), cfg.number_or("dynamics.initial.a_im", 0.0)};
    init.b = {cfg.number_or("dynamics.initial.b_re", 0.0), cfg.number_or("dynamics.initial.b_im", 0.0)};
    const Trace tr = integrate(d.resonator, det, cplx{d.coupling.g0, 0.0}, np, drives, t_end, dt,
                               init, static_cast<std::size_t>(stride));
    if (fmt == Format::csv)
        io::write_trace_csv(out, tr);
    else
        out << io::to_json(tr).dump() << '\n';
}

inline io::StokesReport stokes_report(const Device& d, double np)
{
    const ResonatorSpec& r = d.resonator;
    io::StokesReport rep;
    rep.sideband = sideband_resolution(r.opt_total(), r.omega_ac, r.omega_s);
    rep.threshold_np = oscillation_threshold(r.opt_total(), r.ac_total(), d.coupling.g0);
    rep.gain_at_operating_point =
        stokes_smatrix(r, stokes_operating_detuning(r), cplx{d.coupling.g0, 0.0}, np).gain;
    return rep;
}

inline void cmd_stokes(const RunConfig& cfg, std::ostream& out, Format fmt)
{
    const Device d = device_from(cfg);
    const double np = pump_photons_from(cfg, d);
    const io::json j = io::to_json(stokes_report(d, np));
    if (fmt == Format::csv)
        emit_key_values(out, j);
    else
        out << j.dump(2) << '\n';
}

inline void cmd_design(const RunConfig& cfg, std::ostream& out, Format fmt, std::ostream* table)
{
    const FeasibilityReport rep = feasibility_report(design_inputs_from(cfg));
    const io::json j = io::to_json(rep);
    if (fmt == Format::csv)
        emit_key_values(out, j);
    else
        out << j.dump(2) << '\n';
    if (table)
        io::write_table(*table, j);
}

/// Runs one command. Returns 0 on success, 1 on a validation error, 2 on a
/// numerical error; failures print one line to `err`. `table`, when set,
/// receives human-readable summaries (design report).
inline int run(Command cmd, const RunConfig& cfg, std::ostream& out, Format fmt,
               std::ostream& err, std::ostream* table = nullptr)
{
    try {
        cfg.require_known(known_keys());
        switch (cmd) {
        case Command::materials:
            cmd_materials(cfg, out, fmt);
            break;
        case Command::coupling:
            cmd_coupling(cfg, out, fmt);
            break;
        case Command::smatrix:
            cmd_smatrix(cfg, out, fmt);
            break;
        case Command::sweep:
            cmd_sweep(cfg, out, fmt);
            break;
        case Command::dynamics:
            cmd_dynamics(cfg, out, fmt);
            break;
        case Command::stokes:
            cmd_stokes(cfg, out, fmt);
            break;
        case Command::design:
            cmd_design(cfg, out, fmt, table);
            break;
        }
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return validation_error;
    } catch (const NumericalError& e) {
        err << "numerical error: " << e.what() << '\n';
        return numerical_error;
    }
    return ok;
}

} // namespace sbs::cli

#endif // SBS_CLI_HPP
