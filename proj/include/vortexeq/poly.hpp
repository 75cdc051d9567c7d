#ifndef VORTEXEQ_POLY_HPP
#define VORTEXEQ_POLY_HPP

#include <algorithm>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <ostream>
#include <string>
#include <utility>
#include <type_traits>
#include <vector>

#include "error.hpp"
#include "exact.hpp"
#include "modgcd.hpp"

namespace vortexeq
{

namespace detail
{

inline bool coeff_is_zero(const GaussianRational& c) { return c.is_zero(); }
inline bool coeff_is_zero(const BigRational& c) { return c.is_zero(); }
template <typename R>
bool coeff_is_zero(const std::complex<R>& c)
{
    return c == std::complex<R>(0);
}
inline bool coeff_is_zero(double c) { return c == 0.0; }

} // namespace detail

/// Dense univariate polynomial, coefficients in ascending degree.
/// The zero polynomial has an empty coefficient list; its degree is
/// reported as std::nullopt.
template <typename T>
class BasicPoly
{
public:
    using coefficient_type = T;

    BasicPoly() = default;
    BasicPoly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
    BasicPoly(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

    static BasicPoly constant(T v) { return BasicPoly(std::vector<T>{std::move(v)}); }

    /// c·z^k
    static BasicPoly monomial(std::size_t k, T c = T(1))
    {
        std::vector<T> v(k + 1, T(0));
        v[k] = std::move(c);
        return BasicPoly(std::move(v));
    }

    static BasicPoly z() { return monomial(1); }

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    std::optional<std::size_t> degree() const
    {
        if (c_.empty())
            return std::nullopt;
        return c_.size() - 1;
    }
    /// Degree for callers that already know the polynomial is nonzero.
    std::size_t deg() const
    {
        if (c_.empty())
            throw DomainError("degree of the zero polynomial");
        return c_.size() - 1;
    }

    std::size_t size() const { return c_.size(); }
    const std::vector<T>& coeffs() const { return c_; }

    /// Coefficient of z^k (zero beyond the stored range).
    T operator[](std::size_t k) const { return k < c_.size() ? c_[k] : T(0); }

    const T& leading() const
    {
        if (c_.empty())
            throw DomainError("leading coefficient of the zero polynomial");
        return c_.back();
    }

    bool is_monic() const { return !c_.empty() && c_.back() == T(1); }

    /// Multiplicity of the root z = 0.
    std::size_t valuation() const
    {
        std::size_t k = 0;
        while (k < c_.size() && detail::coeff_is_zero(c_[k]))
            ++k;
        return k;
    }

    /// Multiplies by z^k.
    BasicPoly shift_up(std::size_t k) const
    {
        if (is_zero() || k == 0)
            return *this;
        std::vector<T> v(k, T(0));
        v.insert(v.end(), c_.begin(), c_.end());
        return BasicPoly(std::move(v));
    }

    /// Divides by z^k; the low coefficients must vanish.
    BasicPoly shift_down(std::size_t k) const
    {
        if (k == 0 || is_zero())
            return *this;
        if (valuation() < k)
            throw DomainError("shift_down: polynomial not divisible by z^k");
        return BasicPoly(std::vector<T>(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end()));
    }

    template <typename X>
    X operator()(const X& x) const
    {
        X acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        {
            if constexpr (std::is_constructible_v<X, const T&>)
                acc = acc * x + X(*it);
            else
                acc = acc * x + X(it->to_complex());
        }
        return acc;
    }

    BasicPoly operator-() const
    {
        std::vector<T> v(c_);
        for (auto& c : v)
            c = -c;
        return BasicPoly(std::move(v));
    }

    BasicPoly& operator+=(const BasicPoly& o)
    {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size(), T(0));
        for (std::size_t k = 0; k < o.c_.size(); ++k)
            c_[k] += o.c_[k];
        trim();
        return *this;
    }
    BasicPoly& operator-=(const BasicPoly& o)
    {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size(), T(0));
        for (std::size_t k = 0; k < o.c_.size(); ++k)
            c_[k] -= o.c_[k];
        trim();
        return *this;
    }
    BasicPoly& operator*=(const T& s)
    {
        if (detail::coeff_is_zero(s))
        {
            c_.clear();
            return *this;
        }
        for (auto& c : c_)
            c *= s;
        return *this;
    }

    friend BasicPoly operator+(BasicPoly a, const BasicPoly& b) { return a += b; }
    friend BasicPoly operator-(BasicPoly a, const BasicPoly& b) { return a -= b; }
    friend BasicPoly operator*(BasicPoly a, const T& s) { return a *= s; }
    friend BasicPoly operator*(const T& s, BasicPoly a) { return a *= s; }

    friend BasicPoly operator*(const BasicPoly& a, const BasicPoly& b)
    {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<T> v(a.c_.size() + b.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
        {
            if (detail::coeff_is_zero(a.c_[i]))
                continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                v[i + j] += a.c_[i] * b.c_[j];
        }
        return BasicPoly(std::move(v));
    }
    BasicPoly& operator*=(const BasicPoly& o) { return *this = *this * o; }

    friend bool operator==(const BasicPoly& a, const BasicPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const BasicPoly& a, const BasicPoly& b) { return !(a == b); }

    template <typename U>
    BasicPoly<U> map(auto&& f) const
    {
        std::vector<U> v;
        v.reserve(c_.size());
        for (const auto& c : c_)
            v.push_back(f(c));
        return BasicPoly<U>(std::move(v));
    }

private:
    void trim()
    {
        while (!c_.empty() && detail::coeff_is_zero(c_.back()))
            c_.pop_back();
    }

    std::vector<T> c_;
};

using Poly = BasicPoly<GaussianRational>;

template <typename T>
BasicPoly<T> derivative(const BasicPoly<T>& p)
{
    if (p.size() <= 1)
        return {};
    std::vector<T> v(p.size() - 1);
    for (std::size_t k = 1; k < p.size(); ++k)
        v[k - 1] = p.coeffs()[k] * T(static_cast<long>(k));
    return BasicPoly<T>(std::move(v));
}

template <typename T>
BasicPoly<T> pow(const BasicPoly<T>& p, unsigned n)
{
    BasicPoly<T> r = BasicPoly<T>::constant(T(1)), b = p;
    while (n)
    {
        if (n & 1u)
            r *= b;
        n >>= 1u;
        if (n)
            b *= b;
    }
    return r;
}

/// Quotient and remainder; the divisor must be nonzero.
template <typename T>
std::pair<BasicPoly<T>, BasicPoly<T>> divmod(const BasicPoly<T>& a, const BasicPoly<T>& b)
{
    if (b.is_zero())
        throw DomainError("polynomial division by zero");
    if (a.is_zero() || a.size() < b.size())
        return {BasicPoly<T>{}, a};
    std::vector<T> rem = a.coeffs();
    const std::size_t db = b.size() - 1;
    std::vector<T> quo(a.size() - db, T(0));
    const T inv = T(1) / b.leading();
    const bool lead_one = b.leading() == T(1);
    for (std::size_t k = rem.size(); k-- > db;)
    {
        if (detail::coeff_is_zero(rem[k]))
            continue;
        T q = lead_one ? rem[k] : rem[k] * inv;
        for (std::size_t j = 0; j <= db; ++j)
            rem[k - db + j] -= q * b.coeffs()[j];
        quo[k - db] = std::move(q);
    }
    rem.resize(db);
    return {BasicPoly<T>(std::move(quo)), BasicPoly<T>(std::move(rem))};
}

/// Exact quotient; throws when the division leaves a remainder.
template <typename T>
BasicPoly<T> exact_div(const BasicPoly<T>& a, const BasicPoly<T>& b)
{
    auto [q, r] = divmod(a, b);
    if (!r.is_zero())
        throw DomainError("exact_div: nonzero remainder");
    return q;
}

template <typename T>
BasicPoly<T> monic(const BasicPoly<T>& p)
{
    if (p.is_zero() || p.leading() == T(1))
        return p;
    return p * (T(1) / p.leading());
}

namespace detail
{

/// Monic gcd of nonzero a, b over Q(i) by the multi-modular method.
inline Poly modular_gcd(const Poly& a, const Poly& b)
{
    using namespace modgcd;
    const IntegerImage A = clear_denominators(a.coeffs());
    const IntegerImage B = clear_denominators(b.coeffs());
    const std::size_t bound_deg = std::min(a.deg(), b.deg());

    std::size_t dmin = bound_deg + 1;
    std::vector<mpz_class> acc_re, acc_im;
    mpz_class M;
    std::size_t used = 0, next_try = 1;
    std::optional<Poly> previous;
    for (std::size_t k = 0;; ++k)
    {
        const SplitPrime sp = split_prime(k);
        const u64 p = sp.p, r = sp.r, mr = p - sp.r;
        ModPoly a1 = image(A, p, r), a2 = image(A, p, mr);
        ModPoly b1 = image(B, p, r), b2 = image(B, p, mr);
        if (a1.size() != a.size() || a2.size() != a.size() || b1.size() != b.size() || b2.size() != b.size())
            continue; // leading coefficient vanishes mod p
        ModPoly g1 = monic_gcd(std::move(a1), std::move(b1), p);
        ModPoly g2 = monic_gcd(std::move(a2), std::move(b2), p);
        if (g1.size() != g2.size())
            continue;
        const std::size_t d = g1.size() - 1;
        if (d == 0)
            return Poly::constant(GaussianRational(1));
        if (d > dmin)
            continue;
        if (d < dmin)
        {
            dmin = d;
            acc_re.assign(d + 1, mpz_class(0));
            acc_im.assign(d + 1, mpz_class(0));
            M = 1;
            used = 0;
            next_try = 1;
            previous.reset();
        }
        // x = (g1 + g2)/2, y = (g1 - g2)/(2r): the images of re and im
        const u64 inv2 = inv_mod(2, p);
        const u64 inv2r = inv_mod(mul_mod(2, r, p), p);
        const mpz_class P(static_cast<unsigned long>(p));
        const u64 Minv = used == 0 ? 0 : inv_mod(reduce(M, p), p);
        for (std::size_t j = 0; j <= d; ++j)
        {
            const u64 x = mul_mod((g1[j] + g2[j]) % p, inv2, p);
            const u64 y = mul_mod((g1[j] + p - g2[j]) % p, inv2r, p);
            for (auto [acc, val] : {std::pair<mpz_class*, u64>{&acc_re[j], x}, {&acc_im[j], y}})
            {
                if (used == 0)
                {
                    *acc = static_cast<unsigned long>(val);
                    continue;
                }
                // acc + M·((val - acc)·M⁻¹ mod p)
                const u64 cur = reduce(*acc, p);
                const u64 t = mul_mod((val + p - cur) % p, Minv, p);
                *acc += M * static_cast<unsigned long>(t);
            }
        }
        M = used == 0 ? P : M * P;
        ++used;
        if (used < next_try)
            continue;
        next_try = used + (used + 1) / 2;

        std::vector<GaussianRational> coeffs(d + 1);
        bool ok = true;
        for (std::size_t j = 0; j <= d && ok; ++j)
        {
            auto re = rational_reconstruct(acc_re[j], M);
            auto im = rational_reconstruct(acc_im[j], M);
            if (!re || !im)
                ok = false;
            else
                coeffs[j] = GaussianRational(BigRational(*re), BigRational(*im));
        }
        if (!ok)
            continue;
        Poly cand(std::move(coeffs));
        if (previous && *previous == cand)
        {
            if (divmod(a, cand).second.is_zero() && divmod(b, cand).second.is_zero())
                return cand;
        }
        previous = std::move(cand);
    }
}

} // namespace detail

namespace detail
{

/// Monic gcd by the Euclidean remainder sequence.
template <typename T>
BasicPoly<T> euclid_gcd(BasicPoly<T> a, BasicPoly<T> b)
{
    if (a.size() < b.size())
        std::swap(a, b);
    while (!b.is_zero())
    {
        if (b.is_constant())
            return BasicPoly<T>::constant(T(1));
        auto r = monic(divmod(a, b).second);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

} // namespace detail

/// Monic greatest common divisor; gcd(0, 0) = 0. Over Q(i) the
/// multi-modular algorithm is used.
template <typename T>
BasicPoly<T> gcd(BasicPoly<T> a, BasicPoly<T> b)
{
    if constexpr (std::is_same_v<T, GaussianRational>)
    {
        if (a.is_zero())
            return monic(b);
        if (b.is_zero())
            return monic(a);
        if (a.is_constant() || b.is_constant())
            return BasicPoly<T>::constant(T(1));
        return detail::modular_gcd(a, b);
    }
    else
        return detail::euclid_gcd(std::move(a), std::move(b));
}

template <typename T>
bool is_squarefree(const BasicPoly<T>& p)
{
    if (p.is_constant())
        return true;
    return gcd(p, derivative(p)).is_constant();
}

struct GcdSquarefree
{
    Poly gcd;
    bool a_squarefree;
    bool b_squarefree;
};

/// Monic gcd of two nonzero polynomials plus squarefree flags.
inline GcdSquarefree gcd_and_squarefree(const Poly& a, const Poly& b)
{
    if (a.is_zero() || b.is_zero())
        throw DomainError("gcd_and_squarefree: zero argument");
    return {gcd(a, b), is_squarefree(a), is_squarefree(b)};
}

/// Yun's squarefree decomposition: returns monic, pairwise coprime,
/// squarefree factors f[0], f[1], ... with p = lc(p) · prod f[i]^(i+1).
template <typename T>
std::vector<BasicPoly<T>> squarefree_factors(const BasicPoly<T>& p)
{
    std::vector<BasicPoly<T>> out;
    if (p.is_constant())
        return out;
    BasicPoly<T> m = monic(p);
    BasicPoly<T> dp = derivative(m);
    BasicPoly<T> a = gcd(m, dp);
    BasicPoly<T> b = exact_div(m, a);
    BasicPoly<T> c = exact_div(dp, a);
    BasicPoly<T> d = c - derivative(b);
    while (!b.is_constant())
    {
        BasicPoly<T> f = gcd(b, d);
        out.push_back(f);
        b = exact_div(b, f);
        c = exact_div(d, f);
        d = c - derivative(b);
    }
    while (!out.empty() && out.back().is_constant())
        out.pop_back();
    return out;
}

/// Solves s·a + t·b = c with deg s < deg b, for coprime a, b.
template <typename T>
std::pair<BasicPoly<T>, BasicPoly<T>> solve_diophantine(const BasicPoly<T>& a, const BasicPoly<T>& b,
                                                         const BasicPoly<T>& c)
{
    // extended Euclid: track s with s·a ≡ r (mod b)
    BasicPoly<T> r0 = a, r1 = b;
    BasicPoly<T> s0 = BasicPoly<T>::constant(T(1)), s1;
    while (!r1.is_zero())
    {
        auto [q, r] = divmod(r0, r1);
        BasicPoly<T> s = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (!r0.is_constant())
        throw DomainError("solve_diophantine: arguments not coprime");
    // s0·a ≡ r0 (mod b), r0 a nonzero constant
    const T inv = T(1) / r0.leading();
    BasicPoly<T> s = divmod(s0 * c * inv, b).second;
    BasicPoly<T> t = exact_div(c - s * a, b);
    return {s, t};
}

/// p(z) ↦ p(z²)
template <typename T>
BasicPoly<T> spread_square(const BasicPoly<T>& p)
{
    if (p.is_zero())
        return {};
    std::vector<T> v(2 * p.size() - 1, T(0));
    for (std::size_t k = 0; k < p.size(); ++k)
        v[2 * k] = p.coeffs()[k];
    return BasicPoly<T>(std::move(v));
}

/// Inverse of spread_square restricted to coefficients of the given
/// parity: returns r with p(x) = x^parity · r(x²). Throws when p has a
/// nonzero coefficient of the other parity.
template <typename T>
BasicPoly<T> compress_square(const BasicPoly<T>& p, unsigned parity)
{
    std::vector<T> v;
    for (std::size_t k = 0; k < p.size(); ++k)
    {
        if (k % 2 == parity)
            v.push_back(p.coeffs()[k]);
        else if (!detail::coeff_is_zero(p.coeffs()[k]))
            throw DomainError("compress_square: mixed parity");
    }
    return BasicPoly<T>(std::move(v));
}

/// Human-readable form, descending powers, e.g. "z^3 + 1".
template <typename T>
std::string to_display(const BasicPoly<T>& p, std::size_t max_terms = 0, const std::string& var = "z")
{
    if (p.is_zero())
        return "0";
    std::string out;
    std::size_t shown = 0, nonzero = 0;
    for (const auto& c : p.coeffs())
        if (!detail::coeff_is_zero(c))
            ++nonzero;
    for (std::size_t k = p.size(); k-- > 0;)
    {
        const T& c = p.coeffs()[k];
        if (detail::coeff_is_zero(c))
            continue;
        if (max_terms && shown == max_terms)
        {
            out += " + ... (" + std::to_string(nonzero - shown) + " more terms)";
            break;
        }
        std::string cs;
        if constexpr (requires { c.to_string(); })
            cs = c.to_string();
        else
        {
            std::ostringstream os;
            os << c;
            cs = os.str();
        }
        bool paren = cs.find_first_of("+-", 1) != std::string::npos;
        if (!out.empty())
        {
            if (!paren && cs.front() == '-')
            {
                out += " - ";
                cs.erase(0, 1);
            }
            else
                out += " + ";
        }
        else if (!paren && k > 0 && cs == "-1")
        {
            out += "-";
            cs = "1";
        }
        if (k == 0)
            out += cs;
        else
        {
            if (cs != "1")
                out += (paren ? "(" + cs + ")" : cs) + "*";
            out += var;
            if (k > 1)
                out += "^" + std::to_string(k);
        }
        ++shown;
    }
    return out;
}

template <typename T>
std::ostream& operator<<(std::ostream& os, const BasicPoly<T>& p)
{
    return os << to_display(p);
}

} // namespace vortexeq

#endif
