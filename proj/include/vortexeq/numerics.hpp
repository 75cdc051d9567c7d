#ifndef VORTEXEQ_NUMERICS_HPP
#define VORTEXEQ_NUMERICS_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "error.hpp"
#include "exact.hpp"
#include "family.hpp"
#include "parallel.hpp"
#include "poly.hpp"

namespace vortexeq
{

using cld = std::complex<long double>;

/// Nearest long double to an exact rational (ties aside).
inline long double to_long_double(const mpq_class& q)
{
    if (q == 0)
        return 0.0L;
    mpz_class n = abs(q.get_num());
    const mpz_class& d = q.get_den();
    const long e = static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 2)) -
                   static_cast<long>(mpz_sizeinbase(d.get_mpz_t(), 2));
    // m ≈ n/d · 2^(64-e), an integer of about 64 bits
    mpz_class m;
    const long shift = 64 - e;
    if (shift >= 0)
    {
        mpz_class t = n << static_cast<mp_bitcnt_t>(shift);
        m = t / d;
    }
    else
    {
        mpz_class t = d << static_cast<mp_bitcnt_t>(-shift);
        m = n / t;
    }
    long double v = std::strtold(m.get_str().c_str(), nullptr);
    v = std::ldexp(v, static_cast<int>(-shift));
    return q < 0 ? -v : v;
}

inline cld to_cld(const GaussianRational& c) { return {to_long_double(c.re().raw()), to_long_double(c.im().raw())}; }

struct RootEstimate
{
    std::complex<double> z;
    double error_bound = 0.0; ///< radius of a disc certified to contain a root
};

struct RootOptions
{
    double target_error = 1e-12;  ///< backward-error tolerance, relative
    int max_iterations = 2000;
    std::uint64_t seed = 0;       ///< 0 keeps the fixed default phase
};

namespace detail
{

/// p and p' at x together with Σ|a_k||x|^k.
struct HornerValue
{
    cld p, dp;
    long double magnitude;
};

inline HornerValue horner(const std::vector<cld>& a, cld x)
{
    cld p = 0, dp = 0;
    long double mag = 0, ax = std::abs(x);
    for (std::size_t k = a.size(); k-- > 0;)
    {
        dp = dp * x + p;
        p = p * x + a[k];
        mag = mag * ax + std::abs(a[k]);
    }
    return {p, dp, mag};
}

inline long double fujiwara_bound(const std::vector<cld>& a)
{
    const std::size_t n = a.size() - 1;
    const long double lead = std::abs(a[n]);
    long double best = 0;
    for (std::size_t k = 1; k <= n; ++k)
    {
        long double c = std::abs(a[n - k]) / lead;
        if (k == n)
            c /= 2;
        best = std::max(best, std::pow(c, 1.0L / static_cast<long double>(k)));
    }
    return 2 * best;
}

inline std::vector<cld> aberth(const std::vector<cld>& a, const RootOptions& opt)
{
    const std::size_t n = a.size() - 1;
    const long double R = std::max(fujiwara_bound(a), std::numeric_limits<long double>::min());
    long double phase = std::sqrt(2.0L);
    if (opt.seed != 0)
    {
        std::mt19937_64 rng(opt.seed);
        phase = std::uniform_real_distribution<long double>(0.0L, 6.283185307179586476925L)(rng);
    }
    const long double two_pi = 6.283185307179586476925L;
    std::vector<cld> z(n);
    for (std::size_t k = 0; k < n; ++k)
        z[k] = std::polar(R, two_pi * static_cast<long double>(k) / static_cast<long double>(n) + phase);

    const long double eps = std::numeric_limits<long double>::epsilon();
    std::vector<char> done(n, 0);
    std::size_t remaining = n;
    for (int it = 0; it < opt.max_iterations && remaining > 0; ++it)
    {
        for (std::size_t k = 0; k < n; ++k)
        {
            if (done[k])
                continue;
            const HornerValue h = horner(a, z[k]);
            if (std::abs(h.p) <= 4 * eps * h.magnitude)
            {
                done[k] = 1;
                --remaining;
                continue;
            }
            const cld ratio = h.dp == cld(0) ? cld(1) : h.p / h.dp;
            cld s = 0;
            for (std::size_t j = 0; j < n; ++j)
                if (j != k)
                    s += 1.0L / (z[k] - z[j]);
            const cld w = ratio / (1.0L - ratio * s);
            z[k] -= w;
            if (std::abs(w) <= 4 * eps * std::abs(z[k]))
            {
                done[k] = 1;
                --remaining;
            }
        }
    }
    return z;
}

} // namespace detail

/// All roots of p with multiplicity. The z^m factor is removed exactly and
/// reported as m roots at 0 with zero error; the rest are found by
/// Aberth-Ehrlich iteration and polished by Newton steps. Every root must
/// satisfy |p(z)| ≤ target_error · Σ|a_k||z|^k, otherwise NumericError.
inline std::vector<RootEstimate> find_roots(const Poly& poly, const RootOptions& opt = {})
{
    if (poly.is_zero())
        throw DomainError("find_roots: zero polynomial");
    std::vector<RootEstimate> out;
    const std::size_t m = poly.valuation();
    for (std::size_t k = 0; k < m; ++k)
        out.push_back({{0.0, 0.0}, 0.0});
    const Poly body = poly.shift_down(m);
    if (body.is_constant())
        return out;

    std::vector<cld> a;
    a.reserve(body.size());
    for (const auto& c : body.coeffs())
        a.push_back(to_cld(c));
    const long double lead = std::abs(a.back());
    for (auto& c : a)
        c /= lead;

    std::vector<cld> z;
    const std::size_t n = a.size() - 1;
    if (n == 1)
        z = {-a[0] / a[1]};
    else
        z = detail::aberth(a, opt);

    for (auto& x : z)
    {
        for (int it = 0; it < 4; ++it)
        {
            const auto h = detail::horner(a, x);
            if (h.dp == cld(0) || h.p == cld(0))
                break;
            const cld step = h.p / h.dp;
            x -= step;
            if (std::abs(step) <= std::numeric_limits<long double>::epsilon() * std::abs(x))
                break;
        }
    }

    std::vector<RootEstimate> found;
    double worst = 0;
    for (const auto& x : z)
    {
        const auto h = detail::horner(a, x);
        const long double backward = h.magnitude > 0 ? std::abs(h.p) / h.magnitude : 0;
        worst = std::max(worst, static_cast<double>(backward));
        const long double bound =
            h.dp == cld(0) ? std::numeric_limits<long double>::infinity()
                           : static_cast<long double>(n) * std::abs(h.p / h.dp);
        found.push_back({{static_cast<double>(x.real()), static_cast<double>(x.imag())}, static_cast<double>(bound)});
    }
    out.insert(out.end(), found.begin(), found.end());
    if (worst > opt.target_error)
        throw NumericError("find_roots: backward error " + std::to_string(worst) + " above tolerance after " +
                           std::to_string(opt.max_iterations) + " iterations");
    return out;
}

struct Charge
{
    std::complex<double> z;
    BigRational q;
};

struct ConfigurationSource
{
    Family family = Family::AdlerMoser;
    std::string label;
    int q_index = 0;
    int p_index = 0;
};

struct Configuration
{
    std::vector<Charge> charges;
    /// Net charge of the third species at z = 0 (terminating families).
    std::optional<BigRational> origin_charge;
    double residual_max = 0.0;
    /// Force at the origin from all other charges, when origin_charge is set.
    std::optional<double> origin_residual;
    ConfigurationSource source;
};

/// Σ_{j≠i} Q_j/(z_i - z_j) for each movable charge; the origin charge, when
/// present, contributes as a fixed source.
inline std::vector<std::complex<double>> equilibrium_forces(const Configuration& c)
{
    const std::size_t N = c.charges.size();
    std::vector<std::complex<double>> F(N);
    const double q0 = c.origin_charge ? c.origin_charge->to_double() : 0.0;
    for (std::size_t i = 0; i < N; ++i)
    {
        std::complex<double> s = 0;
        for (std::size_t j = 0; j < N; ++j)
        {
            if (j == i)
                continue;
            const auto d = c.charges[i].z - c.charges[j].z;
            if (d == std::complex<double>(0))
                throw DomainError("equilibrium_residual: coincident charges");
            s += c.charges[j].q.to_double() / d;
        }
        if (q0 != 0.0)
        {
            if (c.charges[i].z == std::complex<double>(0))
                throw DomainError("equilibrium_residual: charge placed on the origin charge");
            s += q0 / c.charges[i].z;
        }
        F[i] = s;
    }
    return F;
}

inline double equilibrium_residual(const Configuration& c)
{
    double worst = 0;
    for (const auto& f : equilibrium_forces(c))
        worst = std::max(worst, std::abs(f));
    return worst;
}

/// |Σ_j Q_j/(0 - z_j)|, the force on the origin charge.
inline std::optional<double> origin_residual(const Configuration& c)
{
    if (!c.origin_charge)
        return std::nullopt;
    std::complex<double> s = 0;
    for (const auto& ch : c.charges)
        s -= ch.q.to_double() / ch.z;
    return std::abs(s);
}

namespace detail
{

/// Positions and charges with the origin charge appended as a fixed particle.
inline std::pair<std::vector<std::complex<double>>, std::vector<double>> all_particles(const Configuration& c)
{
    std::vector<std::complex<double>> z;
    std::vector<double> q;
    for (const auto& ch : c.charges)
    {
        z.push_back(ch.z);
        q.push_back(ch.q.to_double());
    }
    if (c.origin_charge)
    {
        z.push_back(0.0);
        q.push_back(c.origin_charge->to_double());
    }
    return {z, q};
}

inline double energy_of(const std::vector<std::complex<double>>& z, const std::vector<double>& q)
{
    double E = 0;
    for (std::size_t i = 0; i < z.size(); ++i)
        for (std::size_t j = i + 1; j < z.size(); ++j)
        {
            const double d = std::abs(z[i] - z[j]);
            if (d == 0.0)
                throw DomainError("coulomb_energy: coincident charges");
            E -= q[i] * q[j] * std::log(d);
        }
    return E;
}

} // namespace detail

/// E = -Σ_{i<j} Q_i Q_j log|z_i - z_j|, origin charge included.
inline double coulomb_energy(const Configuration& c)
{
    auto [z, q] = detail::all_particles(c);
    return detail::energy_of(z, q);
}

/// ∂E/∂x_i + i ∂E/∂y_i = -Q_i · conj(F_i) for each movable charge.
inline std::vector<std::complex<double>> energy_gradient(const Configuration& c)
{
    auto F = equilibrium_forces(c);
    std::vector<std::complex<double>> g(F.size());
    for (std::size_t i = 0; i < F.size(); ++i)
        g[i] = -c.charges[i].q.to_double() * std::conj(F[i]);
    return g;
}

/// Central-difference gradient of coulomb_energy with step h.
inline std::vector<std::complex<double>> energy_gradient_fd(const Configuration& c, double h = 1e-6)
{
    auto [z, q] = detail::all_particles(c);
    std::vector<std::complex<double>> g(c.charges.size());
    for (std::size_t i = 0; i < c.charges.size(); ++i)
    {
        const auto z0 = z[i];
        double comp[2];
        for (int axis = 0; axis < 2; ++axis)
        {
            const std::complex<double> dz = axis == 0 ? std::complex<double>(h, 0) : std::complex<double>(0, h);
            z[i] = z0 + dz;
            const double ep = detail::energy_of(z, q);
            z[i] = z0 - dz;
            const double em = detail::energy_of(z, q);
            comp[axis] = (ep - em) / (2 * h);
        }
        z[i] = z0;
        g[i] = {comp[0], comp[1]};
    }
    return g;
}

/// max_i Σ_j |Q_i Q_j| / |z_i - z_j|: the size of a single force term,
/// used to make gradient comparisons scale-free.
inline double force_scale(const Configuration& c)
{
    auto [z, q] = detail::all_particles(c);
    double worst = 0;
    for (std::size_t i = 0; i < c.charges.size(); ++i)
    {
        double s = 0;
        for (std::size_t j = 0; j < z.size(); ++j)
            if (j != i)
                s += std::abs(q[i] * q[j]) / std::abs(z[i] - z[j]);
        worst = std::max(worst, s);
    }
    return worst;
}

struct GradientCheck
{
    double fd_norm = 0;        ///< max_i |∇_i E| by finite differences, relative
    double mismatch = 0;       ///< max_i |FD_i - analytic_i|, relative
};

inline GradientCheck gradient_check(const Configuration& c, double h = 1e-6)
{
    const auto fd = energy_gradient_fd(c, h);
    const auto an = energy_gradient(c);
    const double scale = std::max(force_scale(c), std::numeric_limits<double>::min());
    GradientCheck out;
    for (std::size_t i = 0; i < fd.size(); ++i)
    {
        out.fd_norm = std::max(out.fd_norm, std::abs(fd[i]) / scale);
        out.mismatch = std::max(out.mismatch, std::abs(fd[i] - an[i]) / scale);
    }
    return out;
}

/// Exact charges of the item's species: q roots carry +Λ, p roots -1.
/// In terminating families the net z-power of φ = p/q^Λ becomes the
/// origin charge; standard families keep a root at 0 as an ordinary charge.
inline Configuration build_configuration(const SequenceItem& item, const RootOptions& opt = {})
{
    Configuration c;
    c.source = {item.family, item.label(), item.q_index, item.p_index};
    const long lambda = family_lambda(item.family);
    const bool terminating = !is_standard(item.family);

    Poly qb = item.q.body(), pb = item.p.body();
    if (terminating)
    {
        const long tq = static_cast<long>(item.q.twice_valuation());
        const long tp = static_cast<long>(item.p.twice_valuation());
        BigRational net(lambda * tq - tp, 2);
        if (!net.is_zero())
            c.origin_charge = net;
        qb = qb.shift_down(qb.valuation());
        pb = pb.shift_down(pb.valuation());
    }
    else if (item.q.parity() || item.p.parity())
        throw ParityError("build_configuration: half-power member in a standard family");

    std::vector<RootEstimate> rq, rp;
    parallel_for(2, [&](std::size_t k) {
        if (k == 0)
            rq = qb.is_constant() ? std::vector<RootEstimate>{} : find_roots(qb, opt);
        else
            rp = pb.is_constant() ? std::vector<RootEstimate>{} : find_roots(pb, opt);
    });
    for (const auto& r : rq)
        c.charges.push_back({r.z, BigRational(lambda)});
    for (const auto& r : rp)
        c.charges.push_back({r.z, BigRational(-1)});

    c.residual_max = equilibrium_residual(c);
    c.origin_residual = origin_residual(c);
    return c;
}

/// All exact charges of a configuration, origin charge included.
inline std::vector<BigRational> exact_charges(const Configuration& c)
{
    std::vector<BigRational> q;
    for (const auto& ch : c.charges)
        q.push_back(ch.q);
    if (c.origin_charge)
        q.push_back(*c.origin_charge);
    return q;
}

} // namespace vortexeq

#endif
