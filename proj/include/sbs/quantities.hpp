#ifndef SBS_QUANTITIES_HPP
#define SBS_QUANTITIES_HPP

#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "sbs/bundled_materials.hpp"
#include "sbs/error.hpp"

namespace sbs {

/// gamma = p * n^4. Converts a Pockels (photo-elastic) coefficient into the
/// dielectric-modulation coefficient used by the overlap integral.
inline double pockels_to_gamma(double p, double n)
{
    if (!std::isfinite(p) || !std::isfinite(n))
        fail_validation("pockels_to_gamma: non-finite input (p=", p, ", n=", n, ")");
    if (n < 1.0)
        fail_validation("pockels_to_gamma: refractive index n=", n, " must be >= 1");
    const double n2 = n * n;
    return p * (n2 * n2);
}

/// Scalar optical/acoustic constants of a crystal. CGS: rho in g/cm^3, s in cm/s.
struct Material
{
    std::string name;
    double n = 1.0;
    double p = 0.0;
    double gamma = 0.0;
    double epsilon = 1.0;
    double rho = 1.0;
    double s = 1.0;
    std::string source;
};

inline void validate(const Material& m)
{
    const auto finite = [&](double v, const char* key) {
        if (!std::isfinite(v))
            fail_validation("material '", m.name, "': ", key, " is not finite");
    };
    finite(m.n, "n");
    finite(m.p, "p");
    finite(m.gamma, "gamma");
    finite(m.epsilon, "epsilon");
    finite(m.rho, "rho");
    finite(m.s, "s");
    if (m.n < 1.0)
        fail_validation("material '", m.name, "': n=", m.n, " must be >= 1");
    if (m.epsilon < 1.0)
        fail_validation("material '", m.name, "': epsilon=", m.epsilon, " must be >= 1");
    if (!(m.rho > 0.0))
        fail_validation("material '", m.name, "': rho=", m.rho, " must be > 0");
    if (!(m.s > 0.0))
        fail_validation("material '", m.name, "': s=", m.s, " must be > 0");
}

/// Builds a material from its Pockels coefficient. gamma is derived as p*n^4
/// and epsilon defaults to n^2 (optically isotropic) unless overridden.
inline Material make_material(std::string name, double n, double p, double rho, double s,
                              std::optional<double> epsilon = std::nullopt,
                              std::string source = {})
{
    Material m;
    m.name = std::move(name);
    m.n = n;
    m.p = p;
    m.gamma = pockels_to_gamma(p, n);
    m.epsilon = epsilon.value_or(n * n);
    m.rho = rho;
    m.s = s;
    m.source = std::move(source);
    validate(m);
    return m;
}

// Ranges spanned by the bundled crystals. The gamma upper end is the commonly
// quoted value (~20); GaAs with p=0.165, n=3.37 lands at 21.3, so the
// check allows 10% headroom above it.
inline constexpr double kBundledPockelsMin = 0.02;
inline constexpr double kBundledPockelsMax = 0.2;
inline constexpr double kBundledGammaMin = 0.3;
inline constexpr double kBundledGammaMax = 20.0 * 1.1;

enum class RateOrigin { direct, from_q_factor };

struct RateSet
{
    double value = 0.0; // rad/s
    RateOrigin origin = RateOrigin::direct;
};

/// Loss rate implied by a quality factor: omega / Q.
inline double q_to_rate(double omega, double q)
{
    if (!(omega > 0.0) || !std::isfinite(omega))
        fail_validation("q_to_rate: omega=", omega, " must be positive and finite");
    // Q = inf is an ideal (lossless) channel.
    if (!(q > 0.0))
        fail_validation("q_to_rate: Q=", q, " must be positive");
    return omega / q;
}

inline RateSet rate_from_q(double omega, double q)
{
    return {q_to_rate(omega, q), RateOrigin::from_q_factor};
}

inline RateSet direct_rate(double value)
{
    if (!(value >= 0.0) || !std::isfinite(value))
        fail_validation("rate ", value, " must be finite and >= 0");
    return {value, RateOrigin::direct};
}

// ---------------------------------------------------------------------------
// material data files

namespace detail {

inline double required_number(const nlohmann::json& rec, const char* key, const std::string& who)
{
    if (!rec.contains(key) || !rec.at(key).is_number())
        fail_validation("material record '", who, "': missing numeric field '", key, "'");
    return rec.at(key).get<double>();
}

inline std::optional<double> optional_number(const nlohmann::json& rec, const char* key,
                                             const std::string& who)
{
    if (!rec.contains(key) || rec.at(key).is_null())
        return std::nullopt;
    if (!rec.at(key).is_number())
        fail_validation("material record '", who, "': field '", key, "' must be a number or null");
    return rec.at(key).get<double>();
}

inline Material material_from_record(const nlohmann::json& rec)
{
    if (!rec.is_object())
        fail_validation("material record is not an object");
    if (!rec.contains("name") || !rec.at("name").is_string())
        fail_validation("material record without a string 'name'");
    const std::string name = rec.at("name").get<std::string>();

    const double n = required_number(rec, "n", name);
    const double p = required_number(rec, "p", name);
    const double rho = required_number(rec, "rho", name);
    const double s = required_number(rec, "s", name);
    const auto eps = optional_number(rec, "epsilon", name);
    const auto gamma = optional_number(rec, "gamma", name);
    std::string source;
    if (rec.contains("source") && rec.at("source").is_string())
        source = rec.at("source").get<std::string>();

    Material m = make_material(name, n, p, rho, s, eps, std::move(source));
    if (gamma) {
        // Explicit gamma overrides the Pockels conversion (e.g. a measured value).
        m.gamma = *gamma;
        validate(m);
    }
    return m;
}

} // namespace detail

/// Parses a material database (JSON: {"materials": [ {name, n, p, gamma,
/// epsilon, rho, s, source}, ... ]}). gamma/epsilon may be null.
inline std::vector<Material> parse_material_database(std::string_view text)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        fail_validation("malformed material data: ", e.what());
    }
    const nlohmann::json* records = &doc;
    if (doc.is_object()) {
        if (!doc.contains("materials"))
            fail_validation("malformed material data: no 'materials' array");
        records = &doc.at("materials");
    }
    if (!records->is_array())
        fail_validation("malformed material data: 'materials' is not an array");

    std::vector<Material> out;
    out.reserve(records->size());
    for (const auto& rec : *records)
        out.push_back(detail::material_from_record(rec));
    return out;
}

inline std::vector<Material> load_material_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        fail_validation("cannot open material file '", path.string(), "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_material_database(ss.str());
}

/// The crystals shipped with the library (data/materials.json).
inline const std::vector<Material>& bundled_materials()
{
    static const std::vector<Material> db = [] {
        auto mats = parse_material_database(bundled_materials_json);
        for (const auto& m : mats) {
            if (m.p < kBundledPockelsMin || m.p > kBundledPockelsMax ||
                m.gamma < kBundledGammaMin || m.gamma > kBundledGammaMax)
                throw std::logic_error("bundled material '" + m.name +
                                       "' outside the supported photo-elastic range");
        }
        return mats;
    }();
    return db;
}

/// Looks a material up by bundled name, or loads it from a data file when
/// `name` is a path to an existing file (the file must hold exactly one
/// record, or the record selected with "path:name").
inline Material material_lookup(std::string_view name)
{
    for (const auto& m : bundled_materials())
        if (m.name == name)
            return m;

    std::string path(name);
    std::string select;
    if (!std::filesystem::exists(path)) {
        const auto colon = path.rfind(':');
        if (colon != std::string::npos && std::filesystem::exists(path.substr(0, colon))) {
            select = path.substr(colon + 1);
            path = path.substr(0, colon);
        } else {
            fail_validation("unknown material '", std::string(name), "'");
        }
    }

    const auto mats = load_material_file(path);
    if (select.empty()) {
        if (mats.size() != 1)
            fail_validation("material file '", path, "' holds ", static_cast<double>(mats.size()),
                            " records; select one with '", path, ":<name>'");
        return mats.front();
    }
    for (const auto& m : mats)
        if (m.name == select)
            return m;
    fail_validation("material '", select, "' not found in '", path, "'");
}

} // namespace sbs

#endif // SBS_QUANTITIES_HPP
