#ifndef VORTEXEQ_INTEGRATE_HPP
#define VORTEXEQ_INTEGRATE_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "error.hpp"
#include "half_poly.hpp"
#include "ratfun.hpp"

namespace vortexeq
{

namespace detail
{

/// ∫ p dz with zero constant term.
inline Poly integrate_poly(const Poly& p)
{
    if (p.is_zero())
        return {};
    std::vector<GaussianRational> v(p.size() + 1);
    for (std::size_t k = 0; k < p.size(); ++k)
        v[k + 1] = p.coeffs()[k] / GaussianRational(static_cast<long>(k + 1));
    return Poly(std::move(v));
}

/// ∫ N/D dz for integer-power polynomials by Hermite reduction. Returns the
/// polynomial part (zero constant term) plus the proper rational part, or
/// throws NotRationalError when a logarithmic part remains.
inline RatFun integrate_integer_ratio(const Poly& N, const Poly& D)
{
    auto [quo, rem] = divmod(N, D);
    RatFun result(integrate_poly(quo));
    if (rem.is_zero())
        return result;

    const GaussianRational lead = D.leading();
    Poly A = rem * (GaussianRational(1) / lead);
    Poly Dcur = monic(D);
    const auto factors = squarefree_factors(Dcur);
    for (std::size_t idx = 1; idx < factors.size(); ++idx)
    {
        const Poly& V = factors[idx];
        if (V.is_constant())
            continue;
        const unsigned mult = static_cast<unsigned>(idx + 1);
        const Poly U = exact_div(Dcur, pow(V, mult));
        const Poly UdV = U * derivative(V);
        for (unsigned j = mult - 1; j >= 1; --j)
        {
            const GaussianRational inv_j = GaussianRational(BigRational(-1, static_cast<long>(j)));
            auto [B, C] = solve_diophantine(UdV, V, A * inv_j);
            if (!B.is_zero())
                result += RatFun(HalfPoly(B), HalfPoly(pow(V, j)));
            A = -(C * GaussianRational(static_cast<long>(j))) - U * derivative(B);
        }
        Dcur = U * V;
    }
    // A / Dcur with Dcur squarefree: rational only if nothing proper is left
    auto [q2, r2] = divmod(A, Dcur);
    if (!r2.is_zero())
        throw NotRationalError("primitive has a logarithmic part");
    if (!q2.is_zero())
        result += RatFun(integrate_poly(q2));
    return result;
}

} // namespace detail

/// Rational primitive F with F' = r. The polynomial part of F has zero
/// constant term; integration constants are left to the caller.
inline RatFun rational_primitive(const RatFun& r)
{
    if (r.is_zero())
        return {};
    const HalfPoly& N = r.num();
    const HalfPoly& D = r.den();
    if (r.parity() == 0)
        return detail::integrate_integer_ratio(N.body(), D.body());

    // z^(1/2)-type integrand: substitute z = x², dz = 2x dx
    Poly xnum, xden;
    if (N.parity() == 1)
    {
        // z^(1/2) A/B -> 2 x² A(x²)/B(x²)
        xnum = spread_square(N.body()).shift_up(2) * GaussianRational(2);
        xden = spread_square(D.body());
    }
    else
    {
        // A/(z^(1/2) B) -> 2 A(x²)/B(x²)
        xnum = spread_square(N.body()) * GaussianRational(2);
        xden = spread_square(D.body());
    }
    RatFun F = detail::integrate_integer_ratio(xnum, xden);
    if (F.is_zero())
        return {};
    // F is odd in x; map x·G(x²) or G(x²)/x back to z
    const Poly& Fn = F.num().body();
    const Poly& Fd = F.den().body();
    if (Fd.deg() % 2 == 0)
        return RatFun(HalfPoly(1, compress_square(Fn, 1)), HalfPoly(compress_square(Fd, 0)));
    return RatFun(HalfPoly(compress_square(Fn, 0)), HalfPoly(1, compress_square(Fd, 1)));
}

struct AbelSolution
{
    HalfPoly particular;
    GaussianRational scale;
};

/// Finds the monic g with g'f - g f' = scale·W. The coefficient of g at the
/// power of f's leading term is set to zero; the general solution is
/// particular + s·f.
inline AbelSolution abel_solve(const HalfPoly& f, const HalfPoly& W)
{
    if (f.is_zero() || !f.is_monic())
        throw DomainError("abel_solve: f must be monic");
    if (W.is_zero())
        throw DomainError("abel_solve: W = 0");

    const Poly& F = f.body();
    const Poly& Wb = W.body();
    const long kf = f.parity(), kW = W.parity();
    const long kg = (kW + kf) % 2;
    const long d = static_cast<long>(F.deg());
    const long f_top = 2 * d + kf;                              // twice the exponent of f's leading term
    const long g_top = 2 * static_cast<long>(Wb.deg()) + kW + 2 - f_top; // twice the exponent of g's leading term
    if (g_top < kg || g_top == f_top)
        throw InconsistentError("abel_solve: no polynomial solution (degree obstruction)");
    const long m = (g_top - kg) / 2;

    // twice exponent of the g_i term is 2i + kg, of f_j is 2j + kf; the
    // product term of g'f - gf' carries ((2i+kg) - (2j+kf))/2 at twice exponent
    // (2i+kg) + (2j+kf) - 2
    const GaussianRational scale = GaussianRational(BigRational(g_top - f_top, 2)) / Wb.leading();
    auto target = [&](long twice_exp) -> GaussianRational {
        if (twice_exp < kW || (twice_exp - kW) % 2 != 0)
            return GaussianRational(0);
        return Wb[static_cast<std::size_t>((twice_exp - kW) / 2)] * scale;
    };

    std::vector<GaussianRational> g(static_cast<std::size_t>(m + 1));
    g[static_cast<std::size_t>(m)] = GaussianRational(1);
    for (long i = m - 1; i >= 0; --i)
    {
        const long a_i = 2 * i + kg;
        if (a_i == f_top)
            continue; // free-parameter slot
        const long E = a_i + f_top - 2;
        GaussianRational rhs = target(E);
        for (long ip = i + 1; ip <= m && ip - i <= d; ++ip)
        {
            const long j = d - (ip - i);
            const GaussianRational& fj = F.coeffs()[static_cast<std::size_t>(j)];
            const GaussianRational& gp = g[static_cast<std::size_t>(ip)];
            if (fj.is_zero() || gp.is_zero())
                continue;
            const long w = (2 * ip + kg) - (2 * j + kf);
            rhs -= GaussianRational(BigRational(w, 2)) * gp * fj;
        }
        g[static_cast<std::size_t>(i)] = rhs / GaussianRational(BigRational(a_i - f_top, 2));
    }

    HalfPoly particular(static_cast<unsigned>(kg), Poly(std::move(g)));
    HalfPoly check;
    try
    {
        check = wronskian(particular, f);
    }
    catch (const NotPolynomialError&)
    {
        throw InconsistentError("abel_solve: no polynomial solution (negative power)");
    }
    if (check != W * scale)
        throw InconsistentError("abel_solve: no polynomial solution (logarithmic obstruction)");
    return {std::move(particular), scale};
}

} // namespace vortexeq

#endif
