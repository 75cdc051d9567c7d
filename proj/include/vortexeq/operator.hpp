#ifndef VORTEXEQ_OPERATOR_HPP
#define VORTEXEQ_OPERATOR_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "ratfun.hpp"

namespace vortexeq
{

/// Linear differential operator scale · Σ_j coeffs[j] ∂^j with rational
/// function coefficients and monic leading coefficient. The overall
/// constant factor is carried separately so that e.g. -∂² + u is stored
/// as scale -1, coeffs {-u, 0, 1}.
class OperatorRep
{
public:
    OperatorRep() : coeffs_{RatFun(1)} {}

    /// Takes coefficients in ascending derivative order; the leading one
    /// must be a nonzero constant and is folded into the scale.
    explicit OperatorRep(std::vector<RatFun> coeffs, GaussianRational scale = 1)
        : scale_(std::move(scale)), coeffs_(std::move(coeffs))
    {
        while (coeffs_.size() > 1 && coeffs_.back().is_zero())
            coeffs_.pop_back();
        if (coeffs_.empty() || coeffs_.back().is_zero())
            throw DomainError("OperatorRep: zero operator");
        if (!coeffs_.back().is_constant())
            throw DomainError("OperatorRep: leading coefficient must be constant");
        GaussianRational lead = coeffs_.back().constant_value();
        if (!lead.is_one())
        {
            GaussianRational inv = GaussianRational(1) / lead;
            for (auto& c : coeffs_)
                c = c * inv;
            scale_ *= lead;
        }
        if (scale_.is_zero())
            throw DomainError("OperatorRep: zero scale");
    }

    /// ∂^n
    static OperatorRep d(std::size_t n = 1)
    {
        std::vector<RatFun> c(n + 1);
        c[n] = RatFun(1);
        return OperatorRep(std::move(c));
    }

    /// Multiplication by a function (order zero).
    static OperatorRep multiply(const RatFun& f) { return OperatorRep({f}); }

    std::size_t order() const { return coeffs_.size() - 1; }
    const GaussianRational& scale() const { return scale_; }
    const std::vector<RatFun>& coeffs() const { return coeffs_; }

    /// Coefficient of ∂^j including the scale.
    RatFun coeff(std::size_t j) const { return j < coeffs_.size() ? coeffs_[j] * scale_ : RatFun(); }

    friend bool operator==(const OperatorRep& a, const OperatorRep& b)
    {
        return a.scale_ == b.scale_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const OperatorRep& a, const OperatorRep& b) { return !(a == b); }

    friend OperatorRep operator+(const OperatorRep& a, const OperatorRep& b)
    {
        std::vector<RatFun> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t j = 0; j < c.size(); ++j)
            c[j] = a.coeff(j) + b.coeff(j);
        return OperatorRep(std::move(c));
    }
    friend OperatorRep operator-(const OperatorRep& a, const OperatorRep& b) { return a + b * GaussianRational(-1); }
    friend OperatorRep operator*(const OperatorRep& a, const GaussianRational& s)
    {
        OperatorRep r = a;
        r.scale_ *= s;
        if (r.scale_.is_zero())
            throw DomainError("OperatorRep: zero scale");
        return r;
    }

private:
    GaussianRational scale_{1};
    std::vector<RatFun> coeffs_;
};

/// Σ scale·coeffs[j]·x^(j)
inline RatFun apply_operator(const OperatorRep& op, const RatFun& x)
{
    RatFun acc;
    RatFun dx = x;
    for (std::size_t j = 0; j <= op.order(); ++j)
    {
        if (j > 0)
            dx = derivative(dx);
        if (!op.coeffs()[j].is_zero())
            acc += op.coeffs()[j] * dx;
    }
    return acc * op.scale();
}

/// a ∘ b by Leibniz: (f ∂^i)(g ∂^j) = Σ_k C(i,k) f g^(k) ∂^(i-k+j).
inline OperatorRep compose_operators(const OperatorRep& a, const OperatorRep& b)
{
    const std::size_t order = a.order() + b.order();
    std::vector<RatFun> c(order + 1);
    for (std::size_t j = 0; j <= b.order(); ++j)
    {
        const RatFun& g = b.coeffs()[j];
        if (g.is_zero())
            continue;
        RatFun dg = g;
        for (std::size_t k = 0; k <= a.order(); ++k)
        {
            if (k > 0)
                dg = derivative(dg);
            if (dg.is_zero())
                break;
            // binomial C(i, k) accumulated over i >= k
            for (std::size_t i = k; i <= a.order(); ++i)
            {
                const RatFun& f = a.coeffs()[i];
                if (f.is_zero())
                    continue;
                long binom = 1;
                for (std::size_t t = 0; t < k; ++t)
                    binom = binom * static_cast<long>(i - t) / static_cast<long>(t + 1);
                c[i - k + j] += f * dg * GaussianRational(binom);
            }
        }
    }
    return OperatorRep(std::move(c), a.scale() * b.scale());
}

inline std::string to_display(const OperatorRep& op)
{
    std::string out;
    if (!op.scale().is_one())
        out = "(" + op.scale().to_string() + ")*[";
    bool first = true;
    for (std::size_t j = op.order() + 1; j-- > 0;)
    {
        if (op.coeffs()[j].is_zero())
            continue;
        if (!first)
            out += " + ";
        first = false;
        std::string c = to_display(op.coeffs()[j]);
        if (j == 0)
            out += "(" + c + ")";
        else
        {
            if (c != "1")
                out += "(" + c + ")";
            out += "d";
            if (j > 1)
                out += "^" + std::to_string(j);
        }
    }
    if (!op.scale().is_one())
        out += "]";
    return out;
}

} // namespace vortexeq

#endif
