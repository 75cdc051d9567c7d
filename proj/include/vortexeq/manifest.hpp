#ifndef VORTEXEQ_MANIFEST_HPP
#define VORTEXEQ_MANIFEST_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "family.hpp"
#include "io.hpp"

namespace vortexeq
{

/// Everything a CLI run depends on. Parameter values stay in their exact
/// text form so the manifest round-trips without loss.
struct RunManifest
{
    std::string command;
    std::string family;
    std::optional<int> n;
    std::vector<std::pair<std::string, std::string>> params; ///< name → exact text
    std::vector<std::string> values;                          ///< list form, bound in order
    std::string input;
    std::string output;
    std::string svg;
    std::string csv;
    std::optional<int> index;
    int width = 480;
    std::uint64_t seed = 0;
    bool exact = false;
    bool numeric = false;
    double residual_tol = 1e-9;
    double root_tol = 1e-12;
    double gradient_tol = 1e-4;

    friend bool operator==(const RunManifest&, const RunManifest&) = default;
};

inline io::json encode(const RunManifest& m)
{
    io::json params = io::json::object();
    for (const auto& [k, v] : m.params)
        params[k] = v;
    return io::json{
        {"command", m.command},
        {"family", m.family},
        {"n", m.n ? io::json(*m.n) : io::json(nullptr)},
        {"params", std::move(params)},
        {"values", m.values},
        {"input", m.input},
        {"outputs", {{"output", m.output}, {"svg", m.svg}, {"csv", m.csv}}},
        {"index", m.index ? io::json(*m.index) : io::json(nullptr)},
        {"width", m.width},
        {"seed", m.seed},
        {"checks", {{"exact", m.exact}, {"numeric", m.numeric}}},
        {"tolerances", {{"residual", m.residual_tol}, {"root", m.root_tol}, {"gradient", m.gradient_tol}}},
    };
}

/// Fields absent from the file keep their current values, so a config
/// file can be layered under command-line flags.
inline void merge_manifest(RunManifest& m, const io::json& j)
{
    if (!j.is_object())
        throw ParseError("config must be a JSON object");
    auto str = [&](const io::json& o, const char* key, std::string& dst) {
        if (o.contains(key) && !o[key].is_null())
        {
            if (!o[key].is_string())
                throw ParseError(std::string("config field '") + key + "' must be a string");
            dst = o[key].get<std::string>();
        }
    };
    auto opt_int = [&](const io::json& o, const char* key, std::optional<int>& dst) {
        if (!o.contains(key))
            return;
        if (o[key].is_null())
            dst.reset();
        else if (o[key].is_number_integer())
            dst = o[key].get<int>();
        else
            throw ParseError(std::string("config field '") + key + "' must be an integer");
    };
    auto num = [&](const io::json& o, const char* key, double& dst) {
        if (o.contains(key))
        {
            if (!o[key].is_number())
                throw ParseError(std::string("config field '") + key + "' must be a number");
            dst = o[key].get<double>();
        }
    };
    auto flag = [&](const io::json& o, const char* key, bool& dst) {
        if (o.contains(key))
        {
            if (!o[key].is_boolean())
                throw ParseError(std::string("config field '") + key + "' must be a boolean");
            dst = o[key].get<bool>();
        }
    };
    str(j, "command", m.command);
    str(j, "family", m.family);
    opt_int(j, "n", m.n);
    if (j.contains("params"))
    {
        if (!j["params"].is_object())
            throw ParseError("config field 'params' must be an object");
        m.params.clear();
        for (const auto& [k, v] : j["params"].items())
        {
            if (!v.is_string())
                throw ParseError("parameter '" + k + "' must be an exact string");
            m.params.emplace_back(k, v.get<std::string>());
        }
    }
    if (j.contains("values"))
        m.values = j["values"].get<std::vector<std::string>>();
    str(j, "input", m.input);
    if (j.contains("outputs"))
    {
        const auto& o = j["outputs"];
        str(o, "output", m.output);
        str(o, "svg", m.svg);
        str(o, "csv", m.csv);
    }
    opt_int(j, "index", m.index);
    if (j.contains("width"))
    {
        if (!j["width"].is_number_integer())
            throw ParseError("config field 'width' must be an integer");
        m.width = j["width"].get<int>();
    }
    if (j.contains("seed"))
    {
        if (!j["seed"].is_number_unsigned())
            throw ParseError("config field 'seed' must be a nonnegative integer");
        m.seed = j["seed"].get<std::uint64_t>();
    }
    if (j.contains("checks"))
    {
        flag(j["checks"], "exact", m.exact);
        flag(j["checks"], "numeric", m.numeric);
    }
    if (j.contains("tolerances"))
    {
        const auto& t = j["tolerances"];
        num(t, "residual", m.residual_tol);
        num(t, "root", m.root_tol);
        num(t, "gradient", m.gradient_tol);
    }
}

inline RunManifest decode_manifest(const io::json& j)
{
    RunManifest m;
    merge_manifest(m, j);
    return m;
}

/// Named parameters parsed to exact values.
inline ParamMap manifest_params(const RunManifest& m)
{
    ParamMap out;
    for (const auto& [k, v] : m.params)
        out.set(k, GaussianRational::parse(v));
    return out;
}

} // namespace vortexeq

#endif
