// vortexeq: generate equilibrium sequences, verify them, and render
// configurations.
//
// Exit codes: 0 success, 1 a check failed (or root finding failed while
// rendering), 2 usage or I/O error.

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vortexeq/vortexeq.hpp"

namespace
{

using namespace vortexeq;
using io::json;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct UsageError : Error
{
    using Error::Error;
};

struct Flags
{
    std::string config, save_config;
    std::string family, input, output, svg, csv;
    int n = 0, index = 0, width = 480;
    std::uint64_t seed = 0;
    std::vector<std::string> params;
    std::vector<std::string> values;
    bool exact = false, numeric = false;
    double tol = 1e-9, root_tol = 1e-12, grad_tol = 1e-4;
};

struct Options
{
    CLI::Option* family = nullptr;
    CLI::Option* n = nullptr;
    CLI::Option* params = nullptr;
    CLI::Option* values = nullptr;
    CLI::Option* input = nullptr;
    CLI::Option* output = nullptr;
    CLI::Option* svg = nullptr;
    CLI::Option* csv = nullptr;
    CLI::Option* index = nullptr;
    CLI::Option* width = nullptr;
    CLI::Option* seed = nullptr;
    CLI::Option* exact = nullptr;
    CLI::Option* numeric = nullptr;
    CLI::Option* tol = nullptr;
    CLI::Option* root_tol = nullptr;
    CLI::Option* grad_tol = nullptr;
};

bool given(const CLI::Option* o) { return o != nullptr && o->count() > 0; }

std::pair<std::string, std::string> split_param(const std::string& text)
{
    const auto eq = text.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == text.size())
        throw UsageError("--param expects name=value, got '" + text + "'");
    std::string name = text.substr(0, eq), value = text.substr(eq + 1);
    GaussianRational::parse(value); // reject malformed values early
    return {name, value};
}

/// Config file first, then every flag given on the command line.
RunManifest build_manifest(const std::string& command, const Flags& f, const Options& o)
{
    RunManifest m;
    m.command = command;
    if (!f.config.empty())
        merge_manifest(m, io::read_json_file(f.config));
    m.command = command;
    if (given(o.family))
        m.family = f.family;
    if (given(o.n))
        m.n = f.n;
    if (given(o.params))
    {
        for (const auto& p : f.params)
        {
            auto [k, v] = split_param(p);
            bool replaced = false;
            for (auto& [mk, mv] : m.params)
                if (mk == k)
                {
                    mv = v;
                    replaced = true;
                }
            if (!replaced)
                m.params.emplace_back(k, v);
        }
    }
    if (given(o.values))
    {
        m.values = f.values;
        for (const auto& v : m.values)
            GaussianRational::parse(v);
    }
    if (given(o.input))
        m.input = f.input;
    if (given(o.output))
        m.output = f.output;
    if (given(o.svg))
        m.svg = f.svg;
    if (given(o.csv))
        m.csv = f.csv;
    if (given(o.index))
        m.index = f.index;
    if (given(o.width))
        m.width = f.width;
    if (given(o.seed))
        m.seed = f.seed;
    if (given(o.exact))
        m.exact = f.exact;
    if (given(o.numeric))
        m.numeric = f.numeric;
    if (given(o.tol))
        m.residual_tol = f.tol;
    if (given(o.root_tol))
        m.root_tol = f.root_tol;
    if (given(o.grad_tol))
        m.gradient_tol = f.grad_tol;
    return m;
}

void emit(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-")
        std::cout << text;
    else
        io::write_text_file(path, text);
}

Sequence generate_from(const RunManifest& m)
{
    if (m.family.empty())
        throw UsageError("--family is required");
    if (!m.n)
        throw UsageError("--n is required");
    const Family fam = parse_family(m.family);
    int n = *m.n;
    if (fam == Family::Lambda2Descending && n > 0)
        n = -n;
    if (fam != Family::Lambda2Descending && n < 0)
        throw UsageError("--n must be nonnegative for family " + m.family);
    if (!m.values.empty() && !m.params.empty())
        throw UsageError("use either --param or --values, not both");
    if (!m.values.empty())
    {
        std::vector<GaussianRational> v;
        for (const auto& s : m.values)
            v.push_back(GaussianRational::parse(s));
        try
        {
            return generate(fam, n, v);
        }
        catch (const DomainError& e)
        {
            throw UsageError(e.what());
        }
    }
    const ParamMap params = manifest_params(m);
    const auto known = family_parameter_names(fam, n);
    for (const auto& [k, v] : params.entries())
        if (std::find(known.begin(), known.end(), k) == known.end())
            throw UsageError("parameter '" + k + "' is not used by family " + m.family + " up to n = " +
                             std::to_string(n));
    return generate(fam, n, params);
}

Sequence load_or_generate(const RunManifest& m)
{
    if (!m.input.empty())
        return io::decode_sequence(io::read_json_file(m.input));
    return generate_from(m);
}

int cmd_generate(const RunManifest& m)
{
    const Sequence s = generate_from(m);
    emit(m.output, io::encode(s).dump(2) + "\n");
    if (s.termination)
        std::cerr << "generate: sequence terminated at " << s.termination->member << " (" << s.termination->reason
                  << ")\n";
    return kOk;
}

int cmd_verify(RunManifest m)
{
    if (m.input.empty())
        throw UsageError("verify needs an input sequence file");
    const Sequence s = io::decode_sequence(io::read_json_file(m.input));
    SuiteOptions opt;
    opt.exact = m.exact || !m.numeric;
    opt.numeric = m.numeric || !m.exact;
    opt.residual_tol = m.residual_tol;
    opt.gradient_tol = m.gradient_tol;
    opt.roots.target_error = m.root_tol;
    opt.roots.seed = m.seed;
    SuiteReport rep;
    try
    {
        rep = verify_sequence(s, opt);
    }
    catch (const Error& e)
    {
        std::cerr << "verify: check aborted: " << e.what() << "\n";
        return kCheckFailed;
    }
    emit(m.output, io::encode(rep).dump(2) + "\n");
    std::size_t total = 0, failed = 0;
    auto count = [&](bool pass) {
        ++total;
        failed += pass ? 0 : 1;
    };
    for (const auto& c : rep.sequence_checks)
        count(c.pass);
    for (const auto& it : rep.items)
    {
        for (const auto& c : it.exact)
            count(c.pass);
        for (const auto& c : it.numeric)
            count(c.pass);
    }
    std::cerr << "verify: " << total << " checks, " << failed << " failed\n";
    return rep.pass ? kOk : kCheckFailed;
}

int cmd_render(const RunManifest& m)
{
    const Sequence s = load_or_generate(m);
    if (s.items.empty())
        throw UsageError("sequence has no items");
    const int idx = m.index.value_or(static_cast<int>(s.items.size()) - 1);
    if (idx < 0 || idx >= static_cast<int>(s.items.size()))
        throw UsageError("--index " + std::to_string(idx) + " out of range [0, " +
                         std::to_string(s.items.size() - 1) + "]");
    const SequenceItem& item = s.items[static_cast<std::size_t>(idx)];
    RootOptions ro;
    ro.target_error = m.root_tol;
    ro.seed = m.seed;
    Configuration c;
    try
    {
        c = build_configuration(item, ro);
    }
    catch (const NumericError& e)
    {
        std::cerr << "render: " << e.what() << "\n";
        return kCheckFailed;
    }
    SvgOptions so;
    so.width = m.width;
    so.title = std::string(family_name(s.family)) + " " + item.label();
    if (!m.svg.empty())
        emit(m.svg, render_svg(c, so));
    if (!m.csv.empty())
        emit(m.csv, io::to_csv(c));
    if (!m.output.empty() || (m.svg.empty() && m.csv.empty()))
        emit(m.output, io::encode(c).dump(2) + "\n");
    return kOk;
}

void add_source_options(CLI::App* sub, Flags& f, Options& o)
{
    o.family = sub->add_option("--family", f.family, "am, l2, l2-neg, am-half or l2-term");
    o.n = sub->add_option("--n", f.n, "target index (l2-neg counts downward)");
    o.params = sub->add_option("--param", f.params, "named parameter, e.g. s2=1+5i (repeatable)");
    o.values = sub->add_option("--values", f.values, "parameters in injection order")->delimiter(',');
}

void add_common(CLI::App* sub, Flags& f, Options& o)
{
    sub->add_option("--config", f.config, "read run settings from a JSON manifest");
    sub->add_option("--save-config", f.save_config, "write the effective manifest to this file");
    o.output = sub->add_option("-o,--output", f.output, "output file (default: stdout)");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact construction and verification of 2D point-charge equilibria"};
    app.require_subcommand(1);

    Flags f;
    Options go, vo, ro;

    auto* gen = app.add_subcommand("generate", "generate a sequence of equilibrium pairs");
    add_common(gen, f, go);
    add_source_options(gen, f, go);

    auto* ver = app.add_subcommand("verify", "run exact and numeric checks over a sequence file");
    add_common(ver, f, vo);
    vo.input = ver->add_option("input", f.input, "sequence JSON file");
    vo.exact = ver->add_flag("--exact", f.exact, "exact identity checks");
    vo.numeric = ver->add_flag("--numeric", f.numeric, "root finding and equilibrium residuals");
    vo.tol = ver->add_option("--tol", f.tol, "equilibrium residual tolerance");
    vo.root_tol = ver->add_option("--root-tol", f.root_tol, "root backward-error tolerance");
    vo.grad_tol = ver->add_option("--grad-tol", f.grad_tol, "relative energy-gradient tolerance");
    vo.seed = ver->add_option("--seed", f.seed, "phase seed for the root finder");

    auto* ren = app.add_subcommand("render", "compute one configuration and write SVG/CSV/JSON");
    add_common(ren, f, ro);
    ro.input = ren->add_option("input", f.input, "sequence JSON file (or use --family/--n)");
    add_source_options(ren, f, ro);
    ro.index = ren->add_option("--index", f.index, "item index within the sequence (default: last)");
    ro.svg = ren->add_option("--svg", f.svg, "SVG output file");
    ro.csv = ren->add_option("--csv", f.csv, "CSV output file");
    ro.width = ren->add_option("--width", f.width, "SVG width in pixels");
    ro.seed = ren->add_option("--seed", f.seed, "phase seed for the root finder");
    ro.root_tol = ren->add_option("--root-tol", f.root_tol, "root backward-error tolerance");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e)
    {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try
    {
        if (gen->parsed())
        {
            RunManifest m = build_manifest("generate", f, go);
            if (!f.save_config.empty())
                io::write_text_file(f.save_config, encode(m).dump(2) + "\n");
            return cmd_generate(m);
        }
        if (ver->parsed())
        {
            RunManifest m = build_manifest("verify", f, vo);
            if (!f.save_config.empty())
                io::write_text_file(f.save_config, encode(m).dump(2) + "\n");
            return cmd_verify(m);
        }
        RunManifest m = build_manifest("render", f, ro);
        if (!f.save_config.empty())
            io::write_text_file(f.save_config, encode(m).dump(2) + "\n");
        return cmd_render(m);
    }
    catch (const vortexeq::Error& e)
    {
        std::cerr << "vortexeq: " << e.what() << "\n";
        return kUsage;
    }
    catch (const std::exception& e)
    {
        std::cerr << "vortexeq: " << e.what() << "\n";
        return kUsage;
    }
}
