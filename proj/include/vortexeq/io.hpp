#ifndef VORTEXEQ_IO_HPP
#define VORTEXEQ_IO_HPP

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "error.hpp"
#include "family.hpp"
#include "numerics.hpp"
#include "suite.hpp"

namespace vortexeq::io
{

using json = nlohmann::ordered_json;

/// Shortest decimal that round-trips the double.
inline std::string format_double(double v)
{
    char buf[40];
    for (int prec = 1; prec <= 17; ++prec)
    {
        std::snprintf(buf, sizeof buf, "%.*g", prec, v);
        if (std::strtod(buf, nullptr) == v)
            break;
    }
    return buf;
}

inline json encode(const GaussianRational& c) { return c.to_string(); }

inline GaussianRational decode_coeff(const json& j)
{
    if (!j.is_string())
        throw ParseError("coefficient must be a string, got " + j.dump());
    try
    {
        return GaussianRational::parse(j.get<std::string>());
    }
    catch (const DomainError& e)
    {
        throw ParseError(e.what());
    }
}

inline json encode(const HalfPoly& p)
{
    json c = json::array();
    for (const auto& x : p.body().coeffs())
        c.push_back(encode(x));
    return json{{"halfpower", p.parity()}, {"coeffs", std::move(c)}};
}

inline HalfPoly decode_poly(const json& j)
{
    if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
        throw ParseError("polynomial must be an object with a coeffs array");
    unsigned k = 0;
    if (j.contains("halfpower"))
    {
        const auto& h = j["halfpower"];
        if (!h.is_number_integer() || (h.get<int>() != 0 && h.get<int>() != 1))
            throw ParseError("halfpower must be 0 or 1");
        k = h.get<unsigned>();
    }
    std::vector<GaussianRational> c;
    for (const auto& x : j["coeffs"])
        c.push_back(decode_coeff(x));
    return HalfPoly(k, Poly(std::move(c)));
}

inline json encode(const RatFun& r) { return json{{"num", encode(r.num())}, {"den", encode(r.den())}}; }

inline RatFun decode_ratfun(const json& j)
{
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        throw ParseError("rational function must have num and den");
    return RatFun(decode_poly(j["num"]), decode_poly(j["den"]));
}

inline json encode(const ParamMap& m)
{
    json o = json::object();
    for (const auto& [k, v] : m.entries())
        o[k] = encode(v);
    return o;
}

inline ParamMap decode_params(const json& j)
{
    if (!j.is_object())
        throw ParseError("params must be an object");
    ParamMap m;
    for (const auto& [k, v] : j.items())
        m.set(k, decode_coeff(v));
    return m;
}

inline json encode(const SequenceItem& it)
{
    json scales = json::array();
    for (const auto& s : it.scales)
        scales.push_back(encode(s));
    json o{{"n", it.n},           {"label", it.label()},      {"q_index", it.q_index},
           {"p_index", it.p_index}, {"q", encode(it.q)},       {"p", encode(it.p)},
           {"params", encode(it.params)}, {"scales", std::move(scales)}};
    if (!it.warnings.empty())
        o["warnings"] = it.warnings;
    return o;
}

inline json encode(const Sequence& s)
{
    json items = json::array();
    for (const auto& it : s.items)
        items.push_back(encode(it));
    json steps = json::array();
    for (const auto& st : s.steps)
        steps.push_back({{"member", st.member},
                         {"param", st.param.empty() ? json(nullptr) : json(st.param)},
                         {"param_value", encode(st.param_value)},
                         {"abel_scale", encode(st.abel_scale)},
                         {"constant", encode(st.constant)}});
    json term = nullptr;
    if (s.termination)
        term = {{"member", s.termination->member}, {"index", s.termination->index}, {"reason", s.termination->reason}};
    return json{{"family", std::string(family_name(s.family))},
                {"lambda", family_lambda(s.family)},
                {"n_target", s.n_target},
                {"items", std::move(items)},
                {"steps", std::move(steps)},
                {"termination", std::move(term)}};
}

namespace detail
{

inline const json& require(const json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw ParseError(std::string("missing field '") + key + "'");
    return j[key];
}

inline int require_int(const json& j, const char* key)
{
    const json& v = require(j, key);
    if (!v.is_number_integer())
        throw ParseError(std::string("field '") + key + "' must be an integer");
    return v.get<int>();
}

inline std::string require_string(const json& j, const char* key)
{
    const json& v = require(j, key);
    if (!v.is_string())
        throw ParseError(std::string("field '") + key + "' must be a string");
    return v.get<std::string>();
}

} // namespace detail

inline Sequence decode_sequence(const json& j)
{
    Sequence s;
    s.family = parse_family(detail::require_string(j, "family"));
    s.n_target = j.contains("n_target") ? detail::require_int(j, "n_target") : 0;
    for (const auto& ji : detail::require(j, "items"))
    {
        SequenceItem it;
        it.family = s.family;
        it.n = detail::require_int(ji, "n");
        it.q_index = ji.contains("q_index") ? detail::require_int(ji, "q_index") : it.n;
        it.p_index = ji.contains("p_index") ? detail::require_int(ji, "p_index") : it.n;
        it.q = decode_poly(detail::require(ji, "q"));
        it.p = decode_poly(detail::require(ji, "p"));
        if (ji.contains("params"))
            it.params = decode_params(ji["params"]);
        if (ji.contains("scales"))
            for (const auto& c : ji["scales"])
                it.scales.push_back(decode_coeff(c));
        if (ji.contains("warnings"))
            it.warnings = ji["warnings"].get<std::vector<std::string>>();
        s.items.push_back(std::move(it));
    }
    if (j.contains("steps"))
        for (const auto& js : j["steps"])
        {
            StepRecord st;
            st.member = detail::require_string(js, "member");
            if (js.contains("param") && js["param"].is_string())
                st.param = js["param"].get<std::string>();
            st.param_value = js.contains("param_value") ? decode_coeff(js["param_value"]) : GaussianRational(0);
            st.abel_scale = decode_coeff(detail::require(js, "abel_scale"));
            st.constant = decode_coeff(detail::require(js, "constant"));
            s.steps.push_back(std::move(st));
        }
    if (j.contains("termination") && !j["termination"].is_null())
    {
        const auto& t = j["termination"];
        s.termination = Termination{detail::require_string(t, "member"), detail::require_int(t, "index"),
                                    t.contains("reason") ? t["reason"].get<std::string>() : std::string()};
    }
    return s;
}

/// Residual display is truncated to the leading 10 terms; the full
/// residual object is always included.
inline json encode(const CheckReport& r)
{
    json ctx = json::object();
    for (const auto& [k, v] : r.context)
        ctx[k] = v;
    json o{{"name", r.name}, {"pass", r.pass}, {"applicable", r.applicable}};
    o["residual_display"] = to_display(r.residual, 10);
    o["residual"] = encode(r.residual);
    o["context"] = std::move(ctx);
    if (!r.note.empty())
        o["note"] = r.note;
    return o;
}

inline json encode(const NumericCheck& c)
{
    json o{{"name", c.name}, {"pass", c.pass}, {"value", c.value}, {"tolerance", c.tolerance}};
    if (!c.note.empty())
        o["note"] = c.note;
    return o;
}

inline json encode(const Configuration& c)
{
    json charges = json::array();
    for (const auto& ch : c.charges)
        charges.push_back({{"re", ch.z.real()}, {"im", ch.z.imag()}, {"q", ch.q.to_string()}});
    return json{{"charges", std::move(charges)},
                {"origin_charge", c.origin_charge ? json(c.origin_charge->to_string()) : json(nullptr)},
                {"residual", c.residual_max},
                {"origin_residual", c.origin_residual ? json(*c.origin_residual) : json(nullptr)},
                {"source",
                 {{"family", std::string(family_name(c.source.family))},
                  {"item", c.source.label},
                  {"q_index", c.source.q_index},
                  {"p_index", c.source.p_index}}}};
}

inline json encode(const SuiteReport& r)
{
    json seq = json::array();
    for (const auto& c : r.sequence_checks)
        seq.push_back(encode(c));
    json items = json::array();
    for (const auto& ir : r.items)
    {
        json ex = json::array(), nu = json::array();
        for (const auto& c : ir.exact)
            ex.push_back(encode(c));
        for (const auto& c : ir.numeric)
            nu.push_back(encode(c));
        json o{{"item", ir.label}, {"pass", ir.pass}, {"exact", std::move(ex)}, {"numeric", std::move(nu)}};
        if (ir.configuration)
            o["configuration"] = encode(*ir.configuration);
        items.push_back(std::move(o));
    }
    json term = nullptr;
    if (r.termination)
        term = {{"member", r.termination->member}, {"index", r.termination->index}, {"reason", r.termination->reason}};
    return json{{"family", std::string(family_name(r.family))},
                {"pass", r.pass},
                {"termination", std::move(term)},
                {"sequence_checks", std::move(seq)},
                {"items", std::move(items)}};
}

/// CSV with header re,im,q; the origin charge, when present, is the last row.
inline std::string to_csv(const Configuration& c)
{
    std::string out = "re,im,q\n";
    for (const auto& ch : c.charges)
        out += format_double(ch.z.real()) + "," + format_double(ch.z.imag()) + "," + ch.q.to_string() + "\n";
    if (c.origin_charge)
        out += "0,0," + c.origin_charge->to_string() + "\n";
    return out;
}

inline json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open '" + path + "'");
    try
    {
        return json::parse(in);
    }
    catch (const json::parse_error& e)
    {
        throw ParseError("'" + path + "': " + e.what());
    }
}

inline void write_text_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("cannot write '" + path + "'");
    out << text;
    if (!out)
        throw IoError("write to '" + path + "' failed");
}

} // namespace vortexeq::io

#endif
