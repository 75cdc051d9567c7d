#ifndef VORTEXEQ_SEQUENCES_HPP
#define VORTEXEQ_SEQUENCES_HPP

#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "family.hpp"
#include "integrate.hpp"
#include "verification.hpp"

namespace vortexeq
{

/// A newly generated member together with the induced Abel constant.
struct StepResult
{
    HalfPoly member;
    GaussianRational scale; ///< c in g'f - gf' = c·W
    std::vector<std::string> warnings;
};

namespace detail
{

inline StepResult abel_step(const HalfPoly& f, const HalfPoly& W, const GaussianRational& s_new)
{
    AbelSolution sol = abel_solve(f, W);
    HalfPoly g = sol.particular;
    if (!s_new.is_zero())
        g += f * s_new;
    return {std::move(g), sol.scale, {}};
}

inline void warn_if_degenerate(StepResult& r, const HalfPoly& partner, bool origin_exempt)
{
    Poly a = r.member.body(), b = partner.body();
    if (origin_exempt)
    {
        a = a.shift_down(a.valuation());
        b = b.shift_down(b.valuation());
    }
    if (!gcd(a, b).is_constant())
        r.warnings.push_back("generated member shares a root with its partner (degenerate parameter locus)");
    if (!is_squarefree(a))
        r.warnings.push_back("generated member has a multiple root");
}

} // namespace detail

/// P_{n+1} from (P_{n-1}, P_n): P'_{n+1}P_{n-1} - P_{n+1}P'_{n-1} = c P_n².
inline StepResult adler_moser_step(const HalfPoly& p_prev, const HalfPoly& p_cur, const GaussianRational& s_new)
{
    StepResult r = detail::abel_step(p_prev, p_cur * p_cur, s_new);
    detail::warn_if_degenerate(r, p_cur, p_prev.parity() || p_cur.parity());
    return r;
}

/// p_n from (q_n, p_{n-1}): p'_n p_{n-1} - p_n p'_{n-1} = c q_n⁴.
inline StepResult lambda2_step_p(const HalfPoly& q_n, const HalfPoly& p_prev, const GaussianRational& t_new)
{
    StepResult r = detail::abel_step(p_prev, pow(q_n, 4), t_new);
    detail::warn_if_degenerate(r, q_n, false);
    return r;
}

/// q_{n+1} from (q_n, p_n): q'_{n+1} q_n - q_{n+1} q'_n = c p_n.
inline StepResult lambda2_step_q(const HalfPoly& q_n, const HalfPoly& p_n, const GaussianRational& s_new)
{
    StepResult r = detail::abel_step(q_n, p_n, s_new);
    detail::warn_if_degenerate(r, p_n, false);
    return r;
}

/// p_{n-1} from (p_n, q_n), the lower solution of the same Abel identity.
inline StepResult lambda2_descend_p(const HalfPoly& p_n, const HalfPoly& q_n, const GaussianRational& t_new)
{
    StepResult r = detail::abel_step(p_n, pow(q_n, 4), t_new);
    detail::warn_if_degenerate(r, q_n, false);
    return r;
}

/// q_{n-1} from (q_n, p_{n-1}).
inline StepResult lambda2_descend_q(const HalfPoly& q_n, const HalfPoly& p_lower, const GaussianRational& s_new)
{
    StepResult r = detail::abel_step(q_n, p_lower, s_new);
    detail::warn_if_degenerate(r, p_lower, false);
    return r;
}

/// One full descending step (q_n, p_n) → (q_{n-1}, p_{n-1}): p_{n-1} first,
/// then q_{n-1}.
inline SequenceItem lambda2_descend(const SequenceItem& item, const GaussianRational& t_new,
                                    const GaussianRational& s_new)
{
    StepResult p = lambda2_descend_p(item.p, item.q, t_new);
    StepResult q = lambda2_descend_q(item.q, p.member, s_new);
    SequenceItem out = item;
    out.n = item.n - 1;
    out.q_index = item.q_index - 1;
    out.p_index = item.p_index - 1;
    out.q = q.member;
    out.p = p.member;
    // recurrence orientation: constants 6n-1 and 3(n-1)+1 with n the old index
    out.scales.push_back(-p.scale);
    out.scales.push_back(-q.scale);
    out.warnings = q.warnings;
    out.warnings.insert(out.warnings.end(), p.warnings.begin(), p.warnings.end());
    return out;
}

/// û = u - weight·(log κ)''.
inline RatFun darboux_potential(const RatFun& u, const RatFun& kappa, int weight)
{
    if (weight != 2 && weight != 6)
        throw DomainError("darboux_potential: weight must be 2 or 6");
    return u - detail::log_second(kappa) * GaussianRational(weight);
}

/// Zero-level second-order transform κ̂ = (c_scale/κ)(∫κ² dz + c_int).
inline RatFun darboux2_zero(const RatFun& kappa, const GaussianRational& c_int, const GaussianRational& c_scale)
{
    if (kappa.is_zero() || derivative(kappa).is_zero())
        throw DomainError("darboux2_zero: κ' = 0");
    RatFun prim = rational_primitive(kappa * kappa);
    if (!c_int.is_zero())
        prim += RatFun(c_int);
    return prim / kappa * c_scale;
}

/// Zero-level third-order transform
/// κ̂ = (∫κ³/κ'² dz + c1) - (1/κ)(∫κ⁴/κ'² dz + c2).
inline RatFun darboux3_zero(const RatFun& kappa, const GaussianRational& c1, const GaussianRational& c2)
{
    const RatFun dk = derivative(kappa);
    if (kappa.is_zero() || dk.is_zero())
        throw DomainError("darboux3_zero: κ' = 0");
    const RatFun dk2 = dk * dk;
    const RatFun k2 = kappa * kappa;
    RatFun i3 = rational_primitive(k2 * kappa / dk2);
    RatFun i4 = rational_primitive(k2 * k2 / dk2);
    if (!c1.is_zero())
        i3 += RatFun(c1);
    if (!c2.is_zero())
        i4 += RatFun(c2);
    return i3 - i4 / kappa;
}

struct Darboux2Constants
{
    GaussianRational c_int;
    GaussianRational c_scale;
};

/// Solves darboux2_zero(κ, c_int, c_scale) == target for the constants.
/// With F = ∫κ², target·κ = c_scale(F + c_int), so c_scale = (target·κ)'/κ²
/// and c_int = target·κ/c_scale - F; both must be constants.
inline Darboux2Constants match_darboux2(const RatFun& kappa, const RatFun& target)
{
    const RatFun X = target * kappa;
    const RatFun cs = derivative(X) / (kappa * kappa);
    if (!cs.is_constant() || cs.is_zero())
        throw InconsistentError("match_darboux2: target is not a transform of κ");
    const GaussianRational c_scale = cs.constant_value();
    const RatFun ci = X * (GaussianRational(1) / c_scale) - rational_primitive(kappa * kappa);
    if (!(ci.is_constant() || ci.is_zero()))
        throw InconsistentError("match_darboux2: integration constant is not constant");
    return {ci.is_zero() ? GaussianRational(0) : ci.constant_value(), c_scale};
}

struct Darboux3Constants
{
    GaussianRational mu; ///< target = mu · darboux3_zero(κ, c1, c2)
    GaussianRational c1;
    GaussianRational c2;
};

/// Solves mu·darboux3_zero(κ, c1, c2) == target. With Y = target and
/// I4 = ∫κ⁴/κ'²: Y'κ²/κ' = mu(I4 + c2), whose derivative gives
/// mu = (Y'κ²/κ')' κ'²/κ⁴; then c2 and c1 follow.
inline Darboux3Constants match_darboux3(const RatFun& kappa, const RatFun& target)
{
    const RatFun dk = derivative(kappa);
    const RatFun k2 = kappa * kappa;
    const RatFun dk2 = dk * dk;
    const RatFun Z = derivative(target) * k2 / dk;
    const RatFun mu_r = derivative(Z) * dk2 / (k2 * k2);
    if (!mu_r.is_constant() || mu_r.is_zero())
        throw InconsistentError("match_darboux3: target is not in the transform family");
    const GaussianRational mu = mu_r.constant_value();
    const GaussianRational inv_mu = GaussianRational(1) / mu;
    const RatFun c2_r = Z * inv_mu - rational_primitive(k2 * k2 / dk2);
    if (!(c2_r.is_zero() || c2_r.is_constant()))
        throw InconsistentError("match_darboux3: c2 is not constant");
    const GaussianRational c2 = c2_r.is_zero() ? GaussianRational(0) : c2_r.constant_value();
    const RatFun c1_r = target * inv_mu - darboux3_zero(kappa, GaussianRational(0), c2);
    if (!(c1_r.is_zero() || c1_r.is_constant()))
        throw InconsistentError("match_darboux3: c1 is not constant");
    return {mu, c1_r.is_zero() ? GaussianRational(0) : c1_r.constant_value(), c2};
}

/// Parameter names consumed by generate(), in injection order.
inline std::vector<std::string> family_parameter_names(Family family, int n_target)
{
    std::vector<std::string> names;
    const int N = n_target < 0 ? -n_target : n_target;
    switch (family)
    {
    case Family::AdlerMoser:
        for (int k = 1; k + 1 <= N; ++k)
            names.push_back("s" + std::to_string(k));
        break;
    case Family::TerminatingHalf:
        for (int k = 1; k + 1 <= N; ++k)
            names.push_back("t" + std::to_string(k));
        break;
    case Family::Lambda2Ascending:
        for (int k = 1; k <= N; ++k)
        {
            if (k > 1)
                names.push_back("s" + std::to_string(k));
            names.push_back("t" + std::to_string(k));
        }
        break;
    case Family::Lambda2Descending:
        for (int k = 1; k <= N; ++k)
        {
            if (k > 1)
                names.push_back("t-" + std::to_string(k));
            names.push_back("s-" + std::to_string(k));
        }
        break;
    case Family::TerminatingL2:
        for (int k = 1; k <= 2 * N; ++k)
            names.push_back("t" + std::to_string(k));
        break;
    }
    return names;
}

namespace detail
{

inline void validate_item(SequenceItem& item)
{
    if (!is_standard(item.family))
        return;
    auto cs = check_coprime_squarefree(item);
    if (!cs.pass)
        item.warnings.push_back("coprimality/squarefree: " + cs.note);
    auto dl = check_degree_laws(item);
    if (!dl.pass)
        item.warnings.push_back("degree law violated");
    auto bl = check_bilinear(item.p, item.q, BigRational(family_lambda(item.family)));
    if (!bl.pass)
        throw InconsistentError("generated pair " + item.label() + " violates the bilinear equation");
}

class Builder
{
public:
    Builder(Family family, int n_target, const ParamMap& params) : params_(params)
    {
        seq_.family = family;
        seq_.n_target = n_target;
    }

    GaussianRational take(const std::string& name)
    {
        GaussianRational v = params_.get_or_zero(name);
        cumulative_.set(name, v);
        return v;
    }

    void record(std::string member, std::string param, const GaussianRational& value, const StepResult& r,
                GaussianRational constant)
    {
        seq_.steps.push_back({std::move(member), std::move(param), value, r.scale, constant});
        scales_.push_back(std::move(constant));
        pending_warnings_ = r.warnings;
    }

    void push_item(int q_index, int p_index, const HalfPoly& q, const HalfPoly& p)
    {
        SequenceItem it;
        it.family = seq_.family;
        it.n = q_index;
        it.q_index = q_index;
        it.p_index = p_index;
        it.q = q;
        it.p = p;
        it.params = cumulative_;
        it.scales = scales_;
        it.warnings = std::move(pending_warnings_);
        pending_warnings_.clear();
        validate_item(it);
        seq_.items.push_back(std::move(it));
    }

    void terminate(std::string member, int index, const std::string& why)
    {
        seq_.termination = Termination{std::move(member), index, why};
    }

    Sequence finish() { return std::move(seq_); }

private:
    ParamMap params_;
    ParamMap cumulative_;
    Sequence seq_;
    std::vector<GaussianRational> scales_;
    std::vector<std::string> pending_warnings_;
};

inline std::string member_name(char letter, int index) { return std::string(1, letter) + "_" + std::to_string(index); }

inline Sequence generate_lambda1(Family family, int n_target, const ParamMap& params)
{
    Builder b(family, n_target, params);
    HalfPoly prev = HalfPoly::one();
    HalfPoly cur = family == Family::AdlerMoser ? HalfPoly::z() : HalfPoly::sqrt_z();
    const std::string letter = family == Family::AdlerMoser ? "s" : "t";
    if (n_target >= 1)
        b.push_item(1, 0, cur, prev);
    for (int n = 1; n + 1 <= n_target; ++n)
    {
        const std::string pname = letter + std::to_string(n);
        const std::string mname = member_name('P', n + 1);
        GaussianRational s = b.take(pname);
        StepResult r;
        try
        {
            r = adler_moser_step(prev, cur, s);
        }
        catch (const Error& e)
        {
            b.terminate(mname, n + 1, e.what());
            break;
        }
        b.record(mname, pname, s, r, r.scale);
        prev = cur;
        cur = r.member;
        b.push_item(n + 1, n, cur, prev);
    }
    return b.finish();
}

inline Sequence generate_lambda2_up(Family family, int n_target, const ParamMap& params)
{
    Builder b(family, n_target, params);
    HalfPoly q = HalfPoly::one();
    HalfPoly p = family == Family::Lambda2Ascending ? HalfPoly::one() : HalfPoly(Poly::monomial(2));
    b.push_item(0, 0, q, p);
    int next_t = 1; // l2-term numbering
    for (int n = 0; n < n_target; ++n)
    {
        // q_{n+1} from (q_n, p_n), constant 3n+1
        {
            std::string pname;
            GaussianRational s(0);
            if (family == Family::Lambda2Ascending)
            {
                if (n > 0)
                    pname = "s" + std::to_string(n + 1);
            }
            else
                pname = "t" + std::to_string(next_t++);
            if (!pname.empty())
                s = b.take(pname);
            const std::string mname = member_name('q', n + 1);
            StepResult r;
            try
            {
                r = lambda2_step_q(q, p, s);
            }
            catch (const Error& e)
            {
                b.terminate(mname, n + 1, e.what());
                break;
            }
            b.record(mname, pname, s, r, r.scale);
            q = r.member;
            b.push_item(n + 1, n, q, p);
        }
        // p_{n+1} from (q_{n+1}, p_n), constant 6(n+1)-1
        {
            const std::string pname =
                family == Family::Lambda2Ascending ? "t" + std::to_string(n + 1) : "t" + std::to_string(next_t++);
            GaussianRational t = b.take(pname);
            const std::string mname = member_name('p', n + 1);
            StepResult r;
            try
            {
                r = lambda2_step_p(q, p, t);
            }
            catch (const Error& e)
            {
                b.terminate(mname, n + 1, e.what());
                break;
            }
            b.record(mname, pname, t, r, r.scale);
            p = r.member;
            b.push_item(n + 1, n + 1, q, p);
        }
    }
    return b.finish();
}

inline Sequence generate_lambda2_down(int n_target, const ParamMap& params)
{
    const int N = n_target < 0 ? -n_target : n_target;
    Builder b(Family::Lambda2Descending, -N, params);
    HalfPoly q = HalfPoly::one(), p = HalfPoly::one();
    b.push_item(0, 0, q, p);
    for (int n = 0; n > -N; --n)
    {
        // p_{n-1} from (p_n, q_n); recurrence constant 6n-1
        {
            std::string pname = n == 0 ? std::string() : "t-" + std::to_string(1 - n);
            GaussianRational t = pname.empty() ? GaussianRational(0) : b.take(pname);
            const std::string mname = member_name('p', n - 1);
            StepResult r;
            try
            {
                r = lambda2_descend_p(p, q, t);
            }
            catch (const Error& e)
            {
                b.terminate(mname, n - 1, e.what());
                break;
            }
            b.record(mname, pname, t, r, -r.scale);
            p = r.member;
            b.push_item(n, n - 1, q, p);
        }
        // q_{n-1} from (q_n, p_{n-1}); recurrence constant 3(n-1)+1
        {
            std::string pname = "s-" + std::to_string(1 - n);
            GaussianRational s = b.take(pname);
            const std::string mname = member_name('q', n - 1);
            StepResult r;
            try
            {
                r = lambda2_descend_q(q, p, s);
            }
            catch (const Error& e)
            {
                b.terminate(mname, n - 1, e.what());
                break;
            }
            b.record(mname, pname, s, r, -r.scale);
            q = r.member;
            b.push_item(n - 1, n - 1, q, p);
        }
    }
    return b.finish();
}

} // namespace detail

/// Generates the family from its initial conditions up to n_target. A
/// missing named parameter is taken as 0. A step without a polynomial
/// solution ends the sequence and is recorded as its termination.
inline Sequence generate(Family family, int n_target, const ParamMap& params)
{
    switch (family)
    {
    case Family::AdlerMoser:
    case Family::TerminatingHalf:
        return detail::generate_lambda1(family, n_target, params);
    case Family::Lambda2Ascending:
    case Family::TerminatingL2:
        return detail::generate_lambda2_up(family, n_target, params);
    case Family::Lambda2Descending:
        return detail::generate_lambda2_down(n_target, params);
    }
    throw DomainError("generate: unknown family");
}

/// List form: values are bound to family_parameter_names() in order;
/// a shorter list leaves the remaining parameters at 0.
inline Sequence generate(Family family, int n_target, const std::vector<GaussianRational>& values)
{
    const auto names = family_parameter_names(family, n_target);
    if (values.size() > names.size())
        throw DomainError("generate: " + std::to_string(values.size()) + " parameters given, family takes " +
                          std::to_string(names.size()));
    ParamMap params;
    for (std::size_t k = 0; k < values.size(); ++k)
        params.set(names[k], values[k]);
    return generate(family, n_target, params);
}

} // namespace vortexeq

#endif
