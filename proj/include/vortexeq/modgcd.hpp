#ifndef VORTEXEQ_MODGCD_HPP
#define VORTEXEQ_MODGCD_HPP

// Multi-modular gcd over Q(i). Each prime p ≡ 1 (mod 4) splits in Z[i], so
// a polynomial over Z[i] has two images in F_p[z] (i ↦ r and i ↦ -r with
// r² = -1). The two monic gcds there give the real and imaginary parts of
// the monic gcd modulo p; Chinese remaindering and rational reconstruction
// lift them, and exact trial division certifies the result.

#include <cstdint>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "exact.hpp"

namespace vortexeq::detail::modgcd
{

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mul_mod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

inline u64 pow_mod(u64 a, u64 e, u64 p)
{
    u64 r = 1;
    a %= p;
    while (e)
    {
        if (e & 1u)
            r = mul_mod(r, a, p);
        a = mul_mod(a, a, p);
        e >>= 1u;
    }
    return r;
}

inline u64 inv_mod(u64 a, u64 p) { return pow_mod(a, p - 2, p); }

/// Deterministic Miller-Rabin for 64-bit integers.
inline bool is_prime(u64 n)
{
    if (n < 2)
        return false;
    for (u64 sp : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull})
    {
        if (n % sp == 0)
            return n == sp;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1u) == 0)
    {
        d >>= 1u;
        ++s;
    }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull})
    {
        u64 x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (int k = 1; k < s; ++k)
        {
            x = mul_mod(x, x, n);
            if (x == n - 1)
            {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

struct SplitPrime
{
    u64 p;
    u64 r; ///< a square root of -1 modulo p
};

/// The k-th prime ≡ 1 (mod 4) below 2^62, in decreasing order.
inline SplitPrime split_prime(std::size_t k)
{
    static std::mutex mu;
    static std::vector<SplitPrime> cache;
    std::lock_guard<std::mutex> lock(mu);
    u64 cand = cache.empty() ? (u64{1} << 62) - 3 : cache.back().p - 4;
    while (cache.size() <= k)
    {
        // (2^62 - 3) ≡ 1 mod 4; stepping by 4 keeps the residue
        while (!is_prime(cand))
            cand -= 4;
        u64 r = 0;
        for (u64 g = 2;; ++g)
        {
            if (pow_mod(g, (cand - 1) / 2, cand) == cand - 1)
            {
                r = pow_mod(g, (cand - 1) / 4, cand);
                break;
            }
        }
        cache.push_back({cand, r});
        cand -= 4;
    }
    return cache[k];
}

/// Coefficients scaled to Gaussian integers: re[k] + i·im[k].
struct IntegerImage
{
    std::vector<mpz_class> re, im;
};

inline IntegerImage clear_denominators(const std::vector<GaussianRational>& c)
{
    mpz_class L = 1;
    for (const auto& x : c)
    {
        mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), x.re().raw().get_den_mpz_t());
        mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), x.im().raw().get_den_mpz_t());
    }
    IntegerImage out;
    out.re.reserve(c.size());
    out.im.reserve(c.size());
    for (const auto& x : c)
    {
        out.re.push_back(L / x.re().raw().get_den() * x.re().raw().get_num());
        out.im.push_back(L / x.im().raw().get_den() * x.im().raw().get_num());
    }
    return out;
}

inline u64 reduce(const mpz_class& v, u64 p)
{
    // mpz_fdiv_ui returns the nonnegative residue
    return mpz_fdiv_ui(v.get_mpz_t(), p);
}

using ModPoly = std::vector<u64>; // ascending, no trailing zeros

inline void trim(ModPoly& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

inline ModPoly image(const IntegerImage& a, u64 p, u64 r)
{
    ModPoly out(a.re.size());
    for (std::size_t k = 0; k < out.size(); ++k)
    {
        u64 x = reduce(a.re[k], p), y = reduce(a.im[k], p);
        out[k] = (x + mul_mod(y, r, p)) % p;
    }
    trim(out);
    return out;
}

/// a mod b in place.
inline void rem_in_place(ModPoly& a, const ModPoly& b, u64 p)
{
    const std::size_t db = b.size() - 1;
    const u64 inv = inv_mod(b.back(), p);
    while (a.size() >= b.size())
    {
        const u64 q = mul_mod(a.back(), inv, p);
        const std::size_t off = a.size() - b.size();
        if (q != 0)
            for (std::size_t j = 0; j <= db; ++j)
                a[off + j] = (a[off + j] + p - mul_mod(q, b[j], p)) % p;
        a.pop_back();
        trim(a);
    }
}

inline ModPoly monic_gcd(ModPoly a, ModPoly b, u64 p)
{
    if (a.size() < b.size())
        std::swap(a, b);
    while (!b.empty())
    {
        rem_in_place(a, b, p);
        std::swap(a, b);
    }
    if (a.empty())
        return a;
    const u64 inv = inv_mod(a.back(), p);
    for (auto& c : a)
        c = mul_mod(c, inv, p);
    return a;
}

/// n/d with |n|, d ≤ sqrt(M/2) and n ≡ u·d (mod M), or nothing.
inline std::optional<mpq_class> rational_reconstruct(const mpz_class& u, const mpz_class& M)
{
    mpz_class bound;
    mpz_class half = M / 2;
    mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
    mpz_class r0 = M, r1 = u, t0 = 0, t1 = 1, q, tmp;
    while (r1 > bound)
    {
        mpz_fdiv_q(q.get_mpz_t(), r0.get_mpz_t(), r1.get_mpz_t());
        tmp = r0 - q * r1;
        r0 = r1;
        r1 = tmp;
        tmp = t0 - q * t1;
        t0 = t1;
        t1 = tmp;
    }
    if (abs(t1) > bound || t1 == 0)
        return std::nullopt;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
    if (g != 1)
        return std::nullopt;
    mpq_class out(r1, t1);
    out.canonicalize();
    return out;
}

} // namespace vortexeq::detail::modgcd

#endif
