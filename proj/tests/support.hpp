#ifndef VORTEXEQ_TESTS_SUPPORT_HPP
#define VORTEXEQ_TESTS_SUPPORT_HPP

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <string_view>
#include <utility>
#include <vector>

#include "vortexeq/vortexeq.hpp"

namespace vortexeq::testing
{

/// Small random rationals and Gaussian rationals from a fixed seed.
class RationalSource
{
public:
    explicit RationalSource(std::uint32_t seed) : gen_(seed) {}

    BigRational rational()
    {
        std::uniform_int_distribution<long> num(-12, 12), den(1, 9);
        return BigRational(num(gen_), den(gen_));
    }

    BigRational nonzero_rational()
    {
        for (;;)
        {
            BigRational r = rational();
            if (!r.is_zero())
                return r;
        }
    }

    GaussianRational gaussian() { return {rational(), rational()}; }

    GaussianRational nonzero_gaussian()
    {
        for (;;)
        {
            GaussianRational g = gaussian();
            if (!g.is_zero())
                return g;
        }
    }

    /// Random polynomial of exact degree `deg` with Gaussian coefficients.
    Poly poly(std::size_t deg, bool monic = false)
    {
        std::vector<GaussianRational> c(deg + 1);
        for (auto& x : c)
            x = gaussian();
        c[deg] = monic ? GaussianRational(1) : nonzero_gaussian();
        return Poly(std::move(c));
    }

    std::mt19937& engine() { return gen_; }

private:
    std::mt19937 gen_;
};

inline GaussianRational Q(std::string_view text) { return GaussianRational::parse(text); }

inline GaussianRational R(long num, long den = 1) { return GaussianRational(BigRational(num, den)); }

/// Polynomial from (power, coefficient) terms; repeated powers add up.
inline Poly terms(std::initializer_list<std::pair<std::size_t, GaussianRational>> ts)
{
    std::size_t top = 0;
    for (const auto& [k, c] : ts)
        top = std::max(top, k);
    std::vector<GaussianRational> v(top + 1);
    for (const auto& [k, c] : ts)
        v[k] += c;
    return Poly(std::move(v));
}

inline HalfPoly H(Poly p) { return HalfPoly(std::move(p)); }

/// z^(1/2)·p(z)
inline HalfPoly Hhalf(Poly p) { return HalfPoly(1, std::move(p)); }

inline HalfPoly zpow(std::size_t k) { return HalfPoly(Poly::monomial(k)); }

/// Central difference of a complex function along the real direction.
template <typename F>
std::complex<double> central_difference(F&& f, std::complex<double> z, double h = 1e-5)
{
    return (f(z + h) - f(z - h)) / (2.0 * h);
}

} // namespace vortexeq::testing

#endif
