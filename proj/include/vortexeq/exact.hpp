#ifndef VORTEXEQ_EXACT_HPP
#define VORTEXEQ_EXACT_HPP

#include <gmpxx.h>

#include <cctype>
#include <complex>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "error.hpp"

namespace vortexeq
{

/// Arbitrary-precision rational in lowest terms with a positive denominator.
class BigRational
{
public:
    BigRational() = default;
    BigRational(long v) : q_(v) {}
    BigRational(int v) : q_(static_cast<long>(v)) {}
    BigRational(long num, long den)
    {
        if (den == 0)
            throw DomainError("BigRational: zero denominator");
        q_ = mpq_class(mpz_class(num), mpz_class(den));
        q_.canonicalize();
    }
    explicit BigRational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    /// Parses "a" or "a/b" (optional leading sign, decimal digits only).
    static BigRational parse(std::string_view text)
    {
        auto digits = [](std::string_view s) {
            if (s.empty())
                return false;
            for (char c : s)
                if (!std::isdigit(static_cast<unsigned char>(c)))
                    return false;
            return true;
        };
        std::string_view body = text;
        bool negative = false;
        if (!body.empty() && (body.front() == '+' || body.front() == '-'))
        {
            negative = body.front() == '-';
            body.remove_prefix(1);
        }
        auto slash = body.find('/');
        std::string_view num = body.substr(0, slash);
        std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
        if (!digits(num) || !digits(den))
            throw ParseError("malformed rational '" + std::string(text) + "'");
        mpz_class n(std::string(num), 10), d(std::string(den), 10);
        if (d == 0)
            throw DomainError("zero denominator in '" + std::string(text) + "'");
        if (negative)
            n = -n;
        return BigRational(mpq_class(n, d));
    }

    const mpq_class& raw() const { return q_; }
    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    int sign() const { return sgn(q_); }
    bool is_integer() const { return q_.get_den() == 1; }
    double to_double() const { return q_.get_d(); }

    /// "a" when the denominator is 1, otherwise "a/b".
    std::string to_string() const
    {
        if (is_integer())
            return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

    BigRational operator-() const { return BigRational(mpq_class(-q_)); }

    BigRational& operator+=(const BigRational& o)
    {
        q_ += o.q_;
        return *this;
    }
    BigRational& operator-=(const BigRational& o)
    {
        q_ -= o.q_;
        return *this;
    }
    BigRational& operator*=(const BigRational& o)
    {
        q_ *= o.q_;
        return *this;
    }
    BigRational& operator/=(const BigRational& o)
    {
        if (o.is_zero())
            throw DomainError("BigRational: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

    friend bool operator==(const BigRational& a, const BigRational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const BigRational& a, const BigRational& b) { return a.q_ != b.q_; }
    friend bool operator<(const BigRational& a, const BigRational& b) { return a.q_ < b.q_; }
    friend bool operator>(const BigRational& a, const BigRational& b) { return a.q_ > b.q_; }
    friend bool operator<=(const BigRational& a, const BigRational& b) { return a.q_ <= b.q_; }
    friend bool operator>=(const BigRational& a, const BigRational& b) { return a.q_ >= b.q_; }

    friend std::ostream& operator<<(std::ostream& os, const BigRational& r) { return os << r.to_string(); }

private:
    mpq_class q_{0};
};

/// Element of Q(i).
class GaussianRational
{
public:
    GaussianRational() = default;
    GaussianRational(long re) : re_(re) {}
    GaussianRational(int re) : re_(re) {}
    GaussianRational(BigRational re) : re_(std::move(re)) {}
    GaussianRational(BigRational re, BigRational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return {BigRational(0), BigRational(1)}; }

    /// Parses "a/b", "c/di", "a/b+c/di", "a/b-c/di"; "i" alone means 1i.
    /// Omitted parts default to 0 and omitted denominators to 1.
    static GaussianRational parse(std::string_view text)
    {
        if (text.empty())
            throw ParseError("empty Gaussian rational");
        for (char c : text)
            if (std::isspace(static_cast<unsigned char>(c)))
                throw ParseError("whitespace in Gaussian rational '" + std::string(text) + "'");

        // split at a sign that is not the leading character
        std::size_t split = std::string_view::npos;
        for (std::size_t k = 1; k < text.size(); ++k)
            if (text[k] == '+' || text[k] == '-')
            {
                if (split != std::string_view::npos)
                    throw ParseError("too many terms in '" + std::string(text) + "'");
                split = k;
            }

        BigRational re, im;
        bool have_re = false, have_im = false;
        auto take = [&](std::string_view term) {
            if (!term.empty() && term.back() == 'i')
            {
                if (have_im)
                    throw ParseError("two imaginary parts in '" + std::string(text) + "'");
                have_im = true;
                term.remove_suffix(1);
                if (term.empty() || term == "+")
                    im = 1;
                else if (term == "-")
                    im = -1;
                else
                    im = BigRational::parse(term);
            }
            else
            {
                if (have_re)
                    throw ParseError("two real parts in '" + std::string(text) + "'");
                have_re = true;
                re = BigRational::parse(term);
            }
        };
        if (split == std::string_view::npos)
            take(text);
        else
        {
            take(text.substr(0, split));
            take(text.substr(split));
        }
        return {re, im};
    }

    const BigRational& re() const { return re_; }
    const BigRational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }
    bool is_one() const { return im_.is_zero() && re_ == BigRational(1); }

    GaussianRational conj() const { return {re_, -im_}; }
    BigRational norm() const { return re_ * re_ + im_ * im_; }

    GaussianRational inverse() const
    {
        if (is_zero())
            throw DomainError("GaussianRational: division by zero");
        BigRational n = norm();
        return {re_ / n, -im_ / n};
    }

    std::complex<double> to_complex() const { return {re_.to_double(), im_.to_double()}; }

    /// Canonical text: "a/b", "c/di", or "a/b+c/di" (sign folded into the
    /// imaginary term); zero is "0".
    std::string to_string() const
    {
        if (im_.is_zero())
            return re_.to_string();
        std::string im_text = im_.to_string() + "i";
        if (re_.is_zero())
            return im_text;
        return re_.to_string() + (im_.sign() > 0 ? "+" : "") + im_text;
    }

    GaussianRational operator-() const { return {-re_, -im_}; }

    GaussianRational& operator+=(const GaussianRational& o)
    {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o)
    {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o)
    {
        if (im_.is_zero() && o.im_.is_zero())
        {
            re_ *= o.re_;
            return *this;
        }
        BigRational r = re_ * o.re_ - im_ * o.im_;
        BigRational i = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o)
    {
        if (o.im_.is_zero())
        {
            if (o.re_.is_zero())
                throw DomainError("GaussianRational: division by zero");
            re_ /= o.re_;
            im_ /= o.re_;
            return *this;
        }
        return *this *= o.inverse();
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b)
    {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const GaussianRational& g) { return os << g.to_string(); }

private:
    BigRational re_;
    BigRational im_;
};

} // namespace vortexeq

#endif
