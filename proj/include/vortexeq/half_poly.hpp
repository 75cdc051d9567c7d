#ifndef VORTEXEQ_HALF_POLY_HPP
#define VORTEXEQ_HALF_POLY_HPP

#include <complex>
#include <string>
#include <utility>

#include "error.hpp"
#include "poly.hpp"

namespace vortexeq
{

/// z^(k/2) · body(z) with k ∈ {0, 1}. Integer powers of z are always kept
/// in the body, so equality is structural. Zero is stored with k = 0 and
/// acts as the neutral element for either parity.
class HalfPoly
{
public:
    HalfPoly() = default;
    HalfPoly(Poly body) : body_(std::move(body)) {}
    HalfPoly(unsigned k, Poly body) : k_(k % 2), body_(std::move(body))
    {
        if (body_.is_zero())
            k_ = 0;
    }

    static HalfPoly one() { return HalfPoly(Poly::constant(1)); }
    static HalfPoly z() { return HalfPoly(Poly::z()); }
    /// z^(1/2)
    static HalfPoly sqrt_z() { return HalfPoly(1, Poly::constant(1)); }

    unsigned parity() const { return k_; }
    const Poly& body() const { return body_; }

    bool is_zero() const { return body_.is_zero(); }
    bool is_monic() const { return body_.is_monic(); }

    /// Twice the degree in z, so half-integer degrees stay exact.
    std::size_t twice_degree() const { return 2 * body_.deg() + k_; }

    /// Degree in z for integer-parity values.
    std::size_t degree() const
    {
        if (k_ != 0)
            throw ParityError("degree: value has a half-integer degree");
        return body_.deg();
    }

    /// Twice the order of vanishing at z = 0.
    std::size_t twice_valuation() const { return 2 * body_.valuation() + k_; }

    HalfPoly operator-() const { return HalfPoly(k_, -body_); }

    HalfPoly& operator+=(const HalfPoly& o)
    {
        if (o.is_zero())
            return *this;
        if (is_zero())
            return *this = o;
        if (k_ != o.k_)
            throw ParityError("addition of half-power values with different parity");
        body_ += o.body_;
        if (body_.is_zero())
            k_ = 0;
        return *this;
    }
    HalfPoly& operator-=(const HalfPoly& o) { return *this += -o; }
    HalfPoly& operator*=(const GaussianRational& s)
    {
        body_ *= s;
        if (body_.is_zero())
            k_ = 0;
        return *this;
    }

    friend HalfPoly operator+(HalfPoly a, const HalfPoly& b) { return a += b; }
    friend HalfPoly operator-(HalfPoly a, const HalfPoly& b) { return a -= b; }
    friend HalfPoly operator*(HalfPoly a, const GaussianRational& s) { return a *= s; }
    friend HalfPoly operator*(const GaussianRational& s, HalfPoly a) { return a *= s; }

    friend HalfPoly operator*(const HalfPoly& a, const HalfPoly& b)
    {
        Poly body = a.body_ * b.body_;
        unsigned k = a.k_ + b.k_;
        if (k == 2)
        {
            body = body.shift_up(1);
            k = 0;
        }
        return HalfPoly(k, std::move(body));
    }
    HalfPoly& operator*=(const HalfPoly& o) { return *this = *this * o; }

    friend bool operator==(const HalfPoly& a, const HalfPoly& b) { return a.k_ == b.k_ && a.body_ == b.body_; }
    friend bool operator!=(const HalfPoly& a, const HalfPoly& b) { return !(a == b); }

    /// Principal branch of z^(1/2).
    std::complex<double> operator()(std::complex<double> x) const
    {
        auto v = body_(x);
        return k_ ? v * std::sqrt(x) : v;
    }

private:
    unsigned k_ = 0;
    Poly body_;
};

inline HalfPoly pow(const HalfPoly& p, unsigned n)
{
    HalfPoly r = HalfPoly::one(), b = p;
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

/// f' g - f g' as a half-power polynomial.
inline HalfPoly wronskian(const HalfPoly& f, const HalfPoly& g)
{
    if (f.is_zero() || g.is_zero())
        return {};
    // f = z^(a/2) F, g = z^(b/2) G:
    // f'g - fg' = z^((a+b)/2 - 1) · [ z (F'G - FG') + ((a-b)/2) F G ]
    const Poly& F = f.body();
    const Poly& G = g.body();
    Poly inner = (derivative(F) * G - F * derivative(G)).shift_up(1);
    if (f.parity() != g.parity())
    {
        GaussianRational half(BigRational(static_cast<long>(f.parity()) - static_cast<long>(g.parity()), 2));
        inner += F * G * half;
    }
    if (inner.is_zero())
        return {};
    const unsigned s = f.parity() + g.parity();
    if (s == 2)
        return HalfPoly(0, std::move(inner));
    // remaining factor z^(-1) (s = 0) or z^(-1/2) (s = 1)
    if (inner.valuation() == 0)
        throw NotPolynomialError("wronskian: result carries a negative power of z");
    return HalfPoly(s, inner.shift_down(1));
}

inline std::string to_display(const HalfPoly& p, std::size_t max_terms = 0)
{
    if (p.parity() == 0)
        return to_display(p.body(), max_terms);
    return "z^(1/2)*(" + to_display(p.body(), max_terms) + ")";
}

inline std::ostream& operator<<(std::ostream& os, const HalfPoly& p) { return os << to_display(p); }

} // namespace vortexeq

#endif
