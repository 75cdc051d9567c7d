#ifndef VORTEXEQ_VERIFICATION_HPP
#define VORTEXEQ_VERIFICATION_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "family.hpp"
#include "operator.hpp"
#include "ratfun.hpp"

namespace vortexeq
{

/// Outcome of one exact identity check. pass is true iff the residual is
/// identically zero; a check that does not apply to the input is reported
/// with applicable = false and pass = true.
struct CheckReport
{
    std::string name;
    bool pass = false;
    bool applicable = true;
    RatFun residual;
    std::vector<std::pair<std::string, std::string>> context;
    std::string note;

    void add_context(std::string key, std::string value) { context.emplace_back(std::move(key), std::move(value)); }
};

namespace detail
{

inline CheckReport make_report(std::string name, RatFun residual)
{
    CheckReport r;
    r.name = std::move(name);
    r.pass = residual.is_zero();
    r.residual = std::move(residual);
    return r;
}

inline CheckReport not_applicable(std::string name, std::string note)
{
    CheckReport r;
    r.name = std::move(name);
    r.pass = true;
    r.applicable = false;
    r.note = std::move(note);
    return r;
}

inline RatFun log_derivative(const RatFun& k) { return derivative(k) / k; }

/// (log κ)'' for a rational κ.
inline RatFun log_second(const RatFun& k) { return derivative(log_derivative(k)); }

} // namespace detail

/// Residual p''q - 2λ p'q' + λ² p q''.
inline CheckReport check_bilinear(const HalfPoly& p, const HalfPoly& q, const BigRational& lambda)
{
    RatFun residual;
    if (p.parity() == 0 && q.parity() == 0)
    {
        const Poly &P = p.body(), &Q = q.body();
        Poly dP = derivative(P), dQ = derivative(Q);
        GaussianRational l(lambda);
        residual = RatFun(derivative(dP) * Q - dP * dQ * (l * GaussianRational(2)) + P * derivative(dQ) * (l * l));
    }
    else
    {
        RatFun dp = derivative(p), dq = derivative(q);
        GaussianRational l(lambda);
        residual = derivative(dp) * RatFun(q) - dp * dq * (l * GaussianRational(2)) + RatFun(p) * derivative(dq) * (l * l);
    }
    auto r = detail::make_report("bilinear", std::move(residual));
    r.add_context("lambda", lambda.to_string());
    return r;
}

/// ∂³ - u∂
inline OperatorRep third_order_operator(const RatFun& u) { return OperatorRep({RatFun(), -u, RatFun(), RatFun(1)}); }

/// -∂² + u
inline OperatorRep schrodinger_operator(const RatFun& u)
{
    return OperatorRep({u, RatFun(), RatFun(GaussianRational(-1))});
}

/// (∂³ - u_n∂)(m/q_n) = 0 for each member m, for a fixed linear combination
/// of them, and for the constant 1; u_n = -6(log q_n)''.
inline CheckReport check_third_order_kernel(const HalfPoly& q_n, const std::vector<HalfPoly>& members)
{
    const RatFun u = log_second_derivative(q_n, BigRational(-6));
    const OperatorRep L = third_order_operator(u);
    RatFun first_nonzero;
    bool pass = true;
    auto test = [&](const RatFun& x) {
        RatFun r = apply_operator(L, x);
        if (!r.is_zero() && pass)
        {
            pass = false;
            first_nonzero = r;
        }
    };
    const RatFun qn(q_n);
    RatFun combo(GaussianRational(BigRational(3, 7)));
    test(RatFun(1));
    for (std::size_t k = 0; k < members.size(); ++k)
    {
        RatFun x = RatFun(members[k]) / qn;
        test(x);
        // weights 1, 2+i, -5/3, ... fixed and distinct
        GaussianRational w = k == 0 ? GaussianRational(1)
                           : k == 1 ? GaussianRational(BigRational(2), BigRational(1))
                                    : GaussianRational(BigRational(-5, 3 * static_cast<long>(k)));
        if (x.parity() == combo.parity())
            combo += x * w;
    }
    test(combo);
    auto r = detail::make_report("third_order_kernel", first_nonzero);
    r.pass = pass;
    r.add_context("members", std::to_string(members.size()));
    return r;
}

/// Zero-level factorization checks:
///   order 2: A*A = -∂² + u with A = ∂ - f, A* = -∂ - f, f = κ'/κ;
///   order 3: BA = ∂³ - u∂, AB = ÂB̂ and B̂Â = ∂³ - û∂ with f̂ = -f and
///            û = u - 6(log κ)''.
inline CheckReport check_factorizations(const RatFun& u, const RatFun& kappa, int order)
{
    if (order != 2 && order != 3)
        throw DomainError("check_factorizations: order must be 2 or 3");
    if (kappa.is_zero() || derivative(kappa).is_zero())
    {
        CheckReport r;
        r.name = "factorization";
        r.pass = false;
        r.note = "seed has zero derivative";
        return r;
    }
    const std::string name = order == 2 ? "factorization_2" : "factorization_3";
    const OperatorRep H = order == 2 ? schrodinger_operator(u) : third_order_operator(u);
    RatFun kernel = apply_operator(H, kappa);
    if (!kernel.is_zero())
    {
        auto r = detail::make_report(name, kernel);
        r.note = "seed is not in the kernel; factorization not attempted";
        return r;
    }
    const RatFun f = detail::log_derivative(kappa);
    const OperatorRep A({-f, RatFun(1)});
    auto operator_residual = [](const OperatorRep& a, const OperatorRep& b) {
        // first nonzero coefficient difference
        for (std::size_t j = 0; j <= std::max(a.order(), b.order()); ++j)
        {
            RatFun d = a.coeff(j) - b.coeff(j);
            if (!d.is_zero())
                return d;
        }
        return RatFun();
    };
    if (order == 2)
    {
        const OperatorRep Astar({f, RatFun(1)}, GaussianRational(-1)); // -(∂ + f)
        return detail::make_report(name, operator_residual(compose_operators(Astar, A), H));
    }
    const RatFun df = derivative(f);
    const RatFun ddf_over_f = derivative(df) / f;
    const OperatorRep B({-df - ddf_over_f, f, RatFun(1)});
    const OperatorRep Ahat({f, RatFun(1)});
    const OperatorRep Bhat({df - ddf_over_f, -f, RatFun(1)});
    const RatFun uhat = u - detail::log_second(kappa) * GaussianRational(6);

    RatFun res = operator_residual(compose_operators(B, A), H);
    std::string failed;
    if (!res.is_zero())
        failed = "BA != L";
    if (res.is_zero())
    {
        res = operator_residual(compose_operators(A, B), compose_operators(Ahat, Bhat));
        if (!res.is_zero())
            failed = "AB != ÂB̂";
    }
    if (res.is_zero())
    {
        res = operator_residual(compose_operators(Bhat, Ahat), third_order_operator(uhat));
        if (!res.is_zero())
            failed = "B̂Â != ∂³ - û∂";
    }
    auto r = detail::make_report(name, res);
    r.note = failed;
    return r;
}

/// Iterated Darboux chain over consecutive ratios κ_k = τ_{k+1}/τ_k.
/// weight 2: u_0 = κ_0''/κ_0, (-∂² + u_k)κ_k = 0, u_{k+1} = u_k - 2(log κ_k)''.
/// weight 6: u_0 = κ_0'''/κ_0', (∂³ - u_k∂)κ_k = 0, u_{k+1} = u_k - 6(log κ_k)''.
inline CheckReport check_darboux_chain(const std::vector<HalfPoly>& taus, int weight)
{
    if (weight != 2 && weight != 6)
        throw DomainError("check_darboux_chain: weight must be 2 or 6");
    if (taus.size() < 2)
        return detail::not_applicable("darboux_chain", "fewer than two members");
    std::vector<RatFun> kappas;
    for (std::size_t k = 0; k + 1 < taus.size(); ++k)
        kappas.push_back(RatFun(taus[k + 1]) / RatFun(taus[k]));
    RatFun u = weight == 2 ? nth_derivative(kappas[0], 2) / kappas[0]
                           : nth_derivative(kappas[0], 3) / derivative(kappas[0]);
    for (std::size_t k = 0; k < kappas.size(); ++k)
    {
        const OperatorRep H = weight == 2 ? schrodinger_operator(u) : third_order_operator(u);
        RatFun res = apply_operator(H, kappas[k]);
        if (!res.is_zero())
        {
            auto r = detail::make_report("darboux_chain", res);
            r.add_context("level", std::to_string(k));
            r.add_context("weight", std::to_string(weight));
            return r;
        }
        u = u - detail::log_second(kappas[k]) * GaussianRational(weight);
    }
    auto r = detail::make_report("darboux_chain", RatFun());
    r.add_context("levels", std::to_string(kappas.size()));
    r.add_context("weight", std::to_string(weight));
    return r;
}

/// Miura map for a Λ = 2 pair: with φ = p/q², w = φ'/φ,
/// w' + w² = -6(log q)'' and 2w' - w² = 3(log p)''.
inline CheckReport check_miura(const HalfPoly& p, const HalfPoly& q)
{
    const RatFun phi = RatFun(p) / (RatFun(q) * RatFun(q));
    const RatFun w = detail::log_derivative(phi);
    const RatFun dw = derivative(w);
    const RatFun w2 = w * w;
    RatFun res_u = dw + w2 - log_second_derivative(q, BigRational(-6));
    RatFun res_v = dw * GaussianRational(2) - w2 - log_second_derivative(p, BigRational(3));
    auto r = detail::make_report("miura", res_u.is_zero() ? res_v : res_u);
    if (!res_u.is_zero())
        r.note = "u residual";
    else if (!res_v.is_zero())
        r.note = "v residual";
    return r;
}

/// Σ_{i<j} Q_i Q_j over all charges.
inline CheckReport check_charge_balance(const std::vector<BigRational>& charges)
{
    BigRational total, squares;
    for (const auto& q : charges)
    {
        total += q;
        squares += q * q;
    }
    BigRational pairs = (total * total - squares) / BigRational(2);
    auto r = detail::make_report("charge_balance", RatFun(GaussianRational(pairs)));
    r.add_context("charges", std::to_string(charges.size()));
    return r;
}

/// Closed-form degree laws for standard families.
inline CheckReport check_degree_laws(const SequenceItem& item)
{
    if (!is_standard(item.family))
        return detail::not_applicable("degree_laws", "terminating family");
    long want_q = 0, want_p = 0;
    if (item.family == Family::AdlerMoser)
    {
        want_q = adler_moser_degree(item.q_index);
        want_p = adler_moser_degree(item.p_index);
    }
    else
    {
        want_q = lambda2_q_degree(item.q_index);
        want_p = lambda2_p_degree(item.p_index);
    }
    const long got_q = static_cast<long>(item.q.twice_degree() / 2), got_p = static_cast<long>(item.p.twice_degree() / 2);
    bool ok = item.q.parity() == 0 && item.p.parity() == 0 && got_q == want_q && got_p == want_p;
    CheckReport r;
    r.name = "degree_laws";
    r.pass = ok;
    r.residual = RatFun(GaussianRational(got_q != want_q ? got_q - want_q : got_p - want_p));
    r.add_context("deg_q", std::to_string(got_q) + " (law " + std::to_string(want_q) + ")");
    r.add_context("deg_p", std::to_string(got_p) + " (law " + std::to_string(want_p) + ")");
    return r;
}

/// Coprime and squarefree pair away from the origin (standard families:
/// everywhere).
inline CheckReport check_coprime_squarefree(const SequenceItem& item)
{
    Poly qb = item.q.body(), pb = item.p.body();
    if (!is_standard(item.family))
    {
        qb = qb.shift_down(qb.valuation());
        pb = pb.shift_down(pb.valuation());
    }
    CheckReport r;
    r.name = "coprime_squarefree";
    Poly g = (qb.is_zero() || pb.is_zero()) ? Poly() : gcd(qb, pb);
    bool coprime = g.is_constant() && !g.is_zero();
    bool sq = is_squarefree(qb) && is_squarefree(pb);
    r.pass = coprime && sq;
    r.residual = coprime ? RatFun() : RatFun(g);
    if (!coprime)
        r.note = "q and p share a root";
    else if (!sq)
        r.note = "multiple root";
    return r;
}

} // namespace vortexeq

#endif
