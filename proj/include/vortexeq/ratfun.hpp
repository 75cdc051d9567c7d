#ifndef VORTEXEQ_RATFUN_HPP
#define VORTEXEQ_RATFUN_HPP

#include <complex>
#include <string>
#include <utility>

#include "error.hpp"
#include "half_poly.hpp"

namespace vortexeq
{

/// Quotient of two half-power polynomials in canonical form: the bodies are
/// coprime and free of common z factors, the denominator body is monic, and
/// the net power of z sits entirely in the numerator (when nonnegative) or
/// entirely in the denominator. Zero is 0/1.
class RatFun
{
public:
    RatFun() : den_(HalfPoly::one()) {}
    RatFun(HalfPoly p) : num_(std::move(p)), den_(HalfPoly::one()) { normalize(); }
    RatFun(Poly p) : RatFun(HalfPoly(std::move(p))) {}
    RatFun(GaussianRational c) : RatFun(Poly::constant(std::move(c))) {}
    RatFun(long c) : RatFun(GaussianRational(c)) {}
    RatFun(int c) : RatFun(GaussianRational(c)) {}
    RatFun(HalfPoly num, HalfPoly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    const HalfPoly& num() const { return num_; }
    const HalfPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_ == HalfPoly::one(); }
    bool is_constant() const { return is_polynomial() && num_.parity() == 0 && num_.body().is_constant(); }

    GaussianRational constant_value() const
    {
        if (!is_constant())
            throw DomainError("RatFun is not a constant");
        return num_.body()[0];
    }

    /// Net parity of the power of z: the value lies in z^(parity/2)·Q(i)(z).
    unsigned parity() const { return (num_.parity() + den_.parity()) % 2; }

    HalfPoly as_half_poly() const
    {
        if (!is_polynomial())
            throw NotPolynomialError("RatFun has a nontrivial denominator");
        return num_;
    }

    RatFun operator-() const
    {
        RatFun r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend RatFun operator+(const RatFun& a, const RatFun& b)
    {
        if (a.is_zero())
            return b;
        if (b.is_zero())
            return a;
        if (a.parity() != b.parity())
            throw ParityError("addition of rational functions with different parity");
        if (a.den_ == b.den_)
            return RatFun(a.num_ + b.num_, a.den_);
        return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

    friend RatFun operator*(const RatFun& a, const RatFun& b)
    {
        if (a.is_zero() || b.is_zero())
            return {};
        if (a.is_polynomial() && b.is_polynomial())
            return RatFun(a.num_ * b.num_);
        return RatFun(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFun operator/(const RatFun& a, const RatFun& b)
    {
        if (b.is_zero())
            throw DomainError("RatFun: division by zero");
        return RatFun(a.num_ * b.den_, a.den_ * b.num_);
    }

    RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
    RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
    RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
    RatFun& operator/=(const RatFun& o) { return *this = *this / o; }

    friend RatFun operator*(const RatFun& a, const GaussianRational& s)
    {
        if (s.is_zero())
            return {};
        RatFun r = a;
        r.num_ *= s;
        return r;
    }
    friend RatFun operator*(const GaussianRational& s, const RatFun& a) { return a * s; }

    friend bool operator==(const RatFun& a, const RatFun& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

    std::complex<double> operator()(std::complex<double> x) const { return num_(x) / den_(x); }

private:
    void normalize()
    {
        if (den_.is_zero())
            throw DomainError("RatFun: zero denominator");
        if (num_.is_zero())
        {
            num_ = HalfPoly();
            den_ = HalfPoly::one();
            return;
        }
        const Poly& n0 = num_.body();
        const Poly& d0 = den_.body();
        const std::size_t vn = n0.valuation(), vd = d0.valuation();
        const long twice_net = static_cast<long>(2 * vn + num_.parity()) - static_cast<long>(2 * vd + den_.parity());
        Poly nb = n0.shift_down(vn);
        Poly db = d0.shift_down(vd);
        if (!nb.is_constant() && !db.is_constant())
        {
            Poly g = gcd(nb, db);
            if (!g.is_constant())
            {
                nb = exact_div(nb, g);
                db = exact_div(db, g);
            }
        }
        if (!db.is_monic())
        {
            GaussianRational inv = GaussianRational(1) / db.leading();
            nb *= inv;
            db *= inv;
        }
        if (twice_net >= 0)
        {
            const auto t = static_cast<std::size_t>(twice_net);
            num_ = HalfPoly(t % 2, nb.shift_up(t / 2));
            den_ = HalfPoly(0, std::move(db));
        }
        else
        {
            const auto t = static_cast<std::size_t>(-twice_net);
            num_ = HalfPoly(0, std::move(nb));
            den_ = HalfPoly(t % 2, db.shift_up(t / 2));
        }
    }

    HalfPoly num_;
    HalfPoly den_;
};

/// Exact d/dz of a rational function (half powers included).
inline RatFun derivative(const RatFun& r)
{
    if (r.is_zero())
        return {};
    // r = z^e A/B with 2e = a - b; r' = z^(e-1) [z(A'B - AB') + e A B] / B^2
    const HalfPoly& N = r.num();
    const HalfPoly& D = r.den();
    const Poly& A = N.body();
    const Poly& B = D.body();
    const long twice_e = static_cast<long>(N.parity()) - static_cast<long>(D.parity());
    Poly inner = (derivative(A) * B - A * derivative(B)).shift_up(1);
    if (twice_e != 0)
        inner += A * B * GaussianRational(BigRational(twice_e, 2));
    if (inner.is_zero())
        return {};
    // z^(e-1) moves to the denominator as z^((2 - 2e)/2)
    const auto t = static_cast<std::size_t>(2 - twice_e);
    return RatFun(HalfPoly(0, std::move(inner)), HalfPoly(t % 2, (B * B).shift_up(t / 2)));
}

/// Exact d/dz of a half-power polynomial. For odd parity the result is
/// z^(-1/2)·(body/2 + z·body') with denominator z^(1/2).
inline RatFun derivative(const HalfPoly& p) { return derivative(RatFun(p)); }

inline RatFun nth_derivative(RatFun r, unsigned n)
{
    for (unsigned k = 0; k < n; ++k)
        r = derivative(r);
    return r;
}

/// weight·(log q)''.
inline RatFun log_second_derivative(const HalfPoly& q, const BigRational& weight)
{
    if (q.is_zero())
        throw DomainError("log_second_derivative: q = 0");
    if (weight.is_zero())
        return {};
    const Poly& Q = q.body();
    // (log Q)'' = (Q''Q - Q'^2)/Q^2, plus (k/2)(log z)'' = -k/(2 z^2)
    Poly dq = derivative(Q);
    RatFun r(HalfPoly(derivative(dq) * Q - dq * dq), HalfPoly(Q * Q));
    if (q.parity())
        r = r - RatFun(HalfPoly(Poly::constant(BigRational(1, 2))), HalfPoly(Poly::monomial(2)));
    return r * GaussianRational(weight);
}

inline std::string to_display(const RatFun& r, std::size_t max_terms = 0)
{
    if (r.is_polynomial())
        return to_display(r.num(), max_terms);
    return "(" + to_display(r.num(), max_terms) + ")/(" + to_display(r.den(), max_terms) + ")";
}

inline std::ostream& operator<<(std::ostream& os, const RatFun& r) { return os << to_display(r); }

} // namespace vortexeq

#endif
