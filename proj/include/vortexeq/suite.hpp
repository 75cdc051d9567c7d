#ifndef VORTEXEQ_SUITE_HPP
#define VORTEXEQ_SUITE_HPP

#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "family.hpp"
#include "numerics.hpp"
#include "parallel.hpp"
#include "sequences.hpp"
#include "verification.hpp"

namespace vortexeq
{

/// A floating-point check against a tolerance.
struct NumericCheck
{
    std::string name;
    bool pass = false;
    double value = 0.0;
    double tolerance = 0.0;
    std::string note;
};

struct ItemReport
{
    std::string label;
    int q_index = 0;
    int p_index = 0;
    std::vector<CheckReport> exact;
    std::vector<NumericCheck> numeric;
    std::optional<Configuration> configuration;
    bool pass = true;
};

struct SuiteOptions
{
    bool exact = true;
    bool numeric = false;
    double residual_tol = 1e-9;
    double gradient_tol = 1e-4;
    RootOptions roots;
};

struct SuiteReport
{
    Family family = Family::AdlerMoser;
    std::vector<CheckReport> sequence_checks;
    std::vector<ItemReport> items;
    std::optional<Termination> termination;
    bool pass = true;
};

/// Closed-form recurrence constant for a standard-family member, in the
/// orientation the recurrence is written: 2n+1 relates P_{n+1} to P_{n-1},
/// 3n+1 relates q_{n+1} to q_n, 6n-1 relates p_n to p_{n-1}. A member with
/// negative index is the lower one of its identity.
inline std::optional<GaussianRational> standard_constant(Family family, char letter, int index)
{
    if (!is_standard(family))
        return std::nullopt;
    const long k = index;
    if (letter == 'P')
        return GaussianRational(2 * (k - 1) + 1);
    if (letter == 'q')
        return GaussianRational(k > 0 ? 3 * (k - 1) + 1 : 3 * k + 1);
    if (letter == 'p')
        return GaussianRational(k > 0 ? 6 * k - 1 : 6 * (k + 1) - 1);
    return std::nullopt;
}

/// Splits "q_-2" into ('q', -2).
inline std::pair<char, int> parse_member(const std::string& name)
{
    if (name.size() < 3 || name[1] != '_')
        throw ParseError("malformed member name '" + name + "'");
    try
    {
        std::size_t used = 0;
        int idx = std::stoi(name.substr(2), &used);
        if (used != name.size() - 2)
            throw ParseError("malformed member name '" + name + "'");
        return {name[0], idx};
    }
    catch (const std::logic_error&)
    {
        throw ParseError("malformed member name '" + name + "'");
    }
}

namespace detail
{

/// Residual of f_new' f_old - f_new f_old' - c·W for the recurrence that
/// produced a member, taken from the stored polynomials.
inline std::optional<RatFun> recurrence_residual(const Sequence& seq, const StepRecord& step)
{
    const auto [letter, idx] = parse_member(step.member);
    const GaussianRational& c = step.constant;
    if (family_lambda(seq.family) == 1)
    {
        std::map<int, HalfPoly> P;
        for (const auto& m : tau_chain(seq))
            P.emplace(m.index, m.poly);
        auto hi = P.find(idx), mid = P.find(idx - 1), lo = P.find(idx - 2);
        if (hi == P.end() || mid == P.end() || lo == P.end())
            return std::nullopt;
        HalfPoly lhs = wronskian(hi->second, lo->second);
        return RatFun(lhs - mid->second * mid->second * c);
    }
    std::map<int, HalfPoly> Q;
    for (const auto& m : tau_chain(seq))
        Q.emplace(m.index, m.poly);
    const auto Pm = p_members(seq);
    if (letter == 'q')
    {
        // q_k' q_{k-1} - q_k q_{k-1}' = c p_{k-1}, read downward when k < 0
        const int lo_i = idx > 0 ? idx - 1 : idx + 1;
        const int p_i = idx > 0 ? idx - 1 : idx;
        auto a = Q.find(idx), b = Q.find(lo_i);
        auto w = Pm.find(p_i);
        if (a == Q.end() || b == Q.end() || w == Pm.end())
            return std::nullopt;
        const HalfPoly& hi = idx > 0 ? a->second : b->second;
        const HalfPoly& lo = idx > 0 ? b->second : a->second;
        return RatFun(wronskian(hi, lo) - w->second * c);
    }
    if (letter == 'p')
    {
        // p_k' p_{k-1} - p_k p_{k-1}' = c q_k⁴
        const int other = idx > 0 ? idx - 1 : idx + 1;
        const int q_i = idx > 0 ? idx : idx + 1;
        auto a = Pm.find(idx), b = Pm.find(other);
        auto w = Q.find(q_i);
        if (a == Pm.end() || b == Pm.end() || w == Q.end())
            return std::nullopt;
        const HalfPoly& hi = idx > 0 ? a->second : b->second;
        const HalfPoly& lo = idx > 0 ? b->second : a->second;
        return RatFun(wronskian(hi, lo) - pow(w->second, 4) * c);
    }
    throw ParseError("unknown member letter in '" + step.member + "'");
}

inline std::vector<CheckReport> sequence_exact_checks(const Sequence& seq)
{
    std::vector<CheckReport> out;
    const long lambda = family_lambda(seq.family);
    const int weight = lambda == 1 ? 2 : 6;
    const int order = lambda == 1 ? 2 : 3;

    // recurrence identities with the stored constants
    for (const auto& step : seq.steps)
    {
        auto res = recurrence_residual(seq, step);
        if (!res)
            continue;
        auto r = make_report("recurrence_identity", *res);
        r.add_context("member", step.member);
        r.add_context("constant", step.constant.to_string());
        const auto [letter, idx] = parse_member(step.member);
        if (auto want = standard_constant(seq.family, letter, idx); want && !(*want == step.constant))
        {
            r.pass = false;
            r.note = "constant differs from the closed form " + want->to_string();
        }
        out.push_back(std::move(r));
    }

    std::vector<HalfPoly> taus;
    for (const auto& m : tau_chain(seq))
        taus.push_back(m.poly);
    auto chain = check_darboux_chain(taus, weight);
    chain.add_context("family", std::string(family_name(seq.family)));
    out.push_back(std::move(chain));

    if (taus.size() >= 2)
    {
        std::vector<RatFun> kappas;
        for (std::size_t k = 0; k + 1 < taus.size(); ++k)
            kappas.push_back(RatFun(taus[k + 1]) / RatFun(taus[k]));
        RatFun u = weight == 2 ? nth_derivative(kappas[0], 2) / kappas[0]
                               : nth_derivative(kappas[0], 3) / derivative(kappas[0]);
        for (std::size_t k = 0; k < kappas.size(); ++k)
        {
            auto f = check_factorizations(u, kappas[k], order);
            f.add_context("level", std::to_string(k));
            out.push_back(std::move(f));
            u = darboux_potential(u, kappas[k], weight);
        }
    }

    if (lambda == 2 && is_standard(seq.family))
    {
        for (std::size_t k = 1; k + 1 < taus.size(); ++k)
        {
            auto r = check_third_order_kernel(taus[k], {taus[k - 1], taus[k], taus[k + 1]});
            auto chain_members = tau_chain(seq);
            r.add_context("q_index", std::to_string(chain_members[k].index));
            out.push_back(std::move(r));
        }
    }
    return out;
}

inline std::vector<CheckReport> item_exact_checks(const SequenceItem& item)
{
    std::vector<CheckReport> out;
    const BigRational lambda(family_lambda(item.family));
    if (is_standard(item.family))
        out.push_back(check_bilinear(item.p, item.q, lambda));
    else
    {
        auto r = check_bilinear(item.p, item.q, lambda);
        auto na = not_applicable("bilinear", "terminating family; certified by the Darboux chain");
        na.residual = r.residual;
        out.push_back(std::move(na));
    }
    out.push_back(check_degree_laws(item));
    out.push_back(check_coprime_squarefree(item));
    if (family_lambda(item.family) == 2)
    {
        if (is_standard(item.family))
            out.push_back(check_miura(item.p, item.q));
        else
            out.push_back(not_applicable("miura", "terminating family"));
    }
    for (auto& r : out)
        r.add_context("item", item.label());
    return out;
}

inline void item_numeric_checks(const SequenceItem& item, const SuiteOptions& opt, ItemReport& rep)
{
    Configuration c;
    try
    {
        c = build_configuration(item, opt.roots);
    }
    catch (const Error& e)
    {
        rep.numeric.push_back({"roots", false, 0.0, opt.roots.target_error, e.what()});
        return;
    }
    rep.numeric.push_back({"equilibrium_residual", c.residual_max < opt.residual_tol, c.residual_max, opt.residual_tol, ""});
    if (c.origin_residual)
        rep.numeric.push_back({"origin_residual", true, *c.origin_residual, 0.0, "reported, not asserted"});
    auto cb = check_charge_balance(exact_charges(c));
    cb.add_context("item", item.label());
    rep.exact.push_back(std::move(cb));
    if (c.charges.size() >= 2)
    {
        const auto g = gradient_check(c);
        rep.numeric.push_back({"energy_gradient", g.fd_norm < opt.gradient_tol, g.fd_norm, opt.gradient_tol,
                               "finite-difference gradient relative to the force scale"});
        rep.numeric.push_back({"gradient_consistency", g.mismatch < opt.gradient_tol, g.mismatch, opt.gradient_tol,
                               "finite-difference vs analytic gradient"});
    }
    rep.configuration = std::move(c);
}

} // namespace detail

/// Runs the selected exact and numeric checks over every item of a
/// sequence, using only its stored polynomials and constants.
inline SuiteReport verify_sequence(const Sequence& seq, const SuiteOptions& opt = {})
{
    SuiteReport rep;
    rep.family = seq.family;
    rep.termination = seq.termination;
    if (opt.exact)
        rep.sequence_checks = detail::sequence_exact_checks(seq);

    rep.items.resize(seq.items.size());
    parallel_for(seq.items.size(), [&](std::size_t k) {
        const auto& it = seq.items[k];
        ItemReport& ir = rep.items[k];
        ir.label = it.label();
        ir.q_index = it.q_index;
        ir.p_index = it.p_index;
        if (opt.exact)
            ir.exact = detail::item_exact_checks(it);
        if (opt.numeric)
            detail::item_numeric_checks(it, opt, ir);
        for (const auto& c : ir.exact)
            ir.pass = ir.pass && c.pass;
        for (const auto& c : ir.numeric)
            ir.pass = ir.pass && c.pass;
    });

    for (const auto& c : rep.sequence_checks)
        rep.pass = rep.pass && c.pass;
    for (const auto& ir : rep.items)
        rep.pass = rep.pass && ir.pass;
    return rep;
}

} // namespace vortexeq

#endif
