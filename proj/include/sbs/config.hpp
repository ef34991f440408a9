#ifndef SBS_CONFIG_HPP
#define SBS_CONFIG_HPP

// Flat `dotted.key = value` run configuration. Values are parsed lazily by
// the typed getters; every failure names the key and the constraint.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>

#include "sbs/error.hpp"

namespace sbs {

class RunConfig
{
public:
    struct Entry
    {
        std::string value;
        int line = 0;
    };

    static RunConfig parse(std::string_view text, std::string origin = "<config>")
    {
        RunConfig cfg;
        cfg.origin_ = std::move(origin);
        std::istringstream in{std::string(text)};
        std::string raw;
        int lineno = 0;
        while (std::getline(in, raw)) {
            ++lineno;
            std::string line = raw;
            if (const auto hash = line.find('#'); hash != std::string::npos)
                line.erase(hash);
            line = trim(line);
            if (line.empty())
                continue;
            const auto eq = line.find('=');
            if (eq == std::string::npos)
                fail_validation(cfg.origin_, ":", lineno, ": expected 'key = value', got '", raw, "'");
            std::string key = trim(line.substr(0, eq));
            std::string value = trim(line.substr(eq + 1));
            if (key.empty())
                fail_validation(cfg.origin_, ":", lineno, ": empty key");
            if (value.size() >= 2 && value.front() == '"' && value.back() == '"')
                value = value.substr(1, value.size() - 2);
            if (cfg.entries_.count(key))
                fail_validation(cfg.origin_, ":", lineno, ": duplicate key '", key, "'");
            cfg.entries_[key] = {value, lineno};
        }
        return cfg;
    }

    static RunConfig load(const std::filesystem::path& path)
    {
        std::ifstream in(path);
        if (!in)
            fail_validation("cannot open config '", path.string(), "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        return parse(ss.str(), path.string());
    }

    /// Programmatic construction (tests, embedding).
    RunConfig& set(const std::string& key, const std::string& value)
    {
        entries_[key] = {value, 0};
        return *this;
    }

    bool has(const std::string& key) const { return entries_.count(key) != 0; }

    /// Rejects keys outside `allowed`.
    void require_known(const std::set<std::string>& allowed) const
    {
        for (const auto& [key, e] : entries_)
            if (!allowed.count(key))
                fail_validation(where(key), "unknown key '", key, "'");
    }

    std::optional<std::string> text(const std::string& key) const
    {
        const auto it = entries_.find(key);
        if (it == entries_.end())
            return std::nullopt;
        return it->second.value;
    }

    std::string required_text(const std::string& key) const
    {
        auto v = text(key);
        if (!v || v->empty())
            fail_validation(origin_, ": missing required key '", key, "'");
        return *v;
    }

    std::optional<double> number(const std::string& key) const
    {
        const auto v = text(key);
        if (!v)
            return std::nullopt;
        const std::string s = lower(*v);
        if (s == "inf" || s == "infinity")
            return std::numeric_limits<double>::infinity();
        std::size_t used = 0;
        double out = 0.0;
        try {
            out = std::stod(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != s.size() || std::isnan(out))
            fail_validation(where(key), "key '", key, "' expects a number, got '", *v, "'");
        return out;
    }

    double number_or(const std::string& key, double fallback) const
    {
        return number(key).value_or(fallback);
    }

    double required_number(const std::string& key) const
    {
        const auto v = number(key);
        if (!v)
            fail_validation(origin_, ": missing required key '", key, "'");
        return *v;
    }

    /// Number that must be strictly positive (inf allowed when `allow_inf`).
    double positive(const std::string& key, std::optional<double> fallback = std::nullopt,
                    bool allow_inf = false) const
    {
        const auto v = number(key);
        if (!v && !fallback)
            fail_validation(origin_, ": missing required key '", key, "'");
        const double x = v.value_or(*fallback);
        if (!(x > 0.0) || (!allow_inf && std::isinf(x)))
            fail_validation(where(key), "key '", key, "' must be positive",
                            allow_inf ? "" : " and finite", " (got ", x, ")");
        return x;
    }

    bool flag(const std::string& key, bool fallback) const
    {
        const auto v = text(key);
        if (!v)
            return fallback;
        const std::string s = lower(*v);
        if (s == "true" || s == "yes" || s == "1" || s == "on")
            return true;
        if (s == "false" || s == "no" || s == "0" || s == "off")
            return false;
        fail_validation(where(key), "key '", key, "' expects true/false, got '", *v, "'");
    }

    const std::string& origin() const { return origin_; }

    std::string where(const std::string& key) const
    {
        const auto it = entries_.find(key);
        if (it == entries_.end() || it->second.line == 0)
            return origin_ + ": ";
        return origin_ + ":" + std::to_string(it->second.line) + ": ";
    }

private:
    static std::string trim(std::string s)
    {
        const auto b = s.find_first_not_of(" \t\r");
        if (b == std::string::npos)
            return {};
        const auto e = s.find_last_not_of(" \t\r");
        return s.substr(b, e - b + 1);
    }

    static std::string lower(std::string s)
    {
        for (auto& c : s)
            c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        return s;
    }

    std::map<std::string, Entry> entries_;
    std::string origin_ = "<config>";
};

} // namespace sbs

#endif // SBS_CONFIG_HPP
