#pragma once

/**
 * @file exactalg.hpp
 * @brief Exact univariate polynomial and rational-function arithmetic.
 *
 * Polynomials have arbitrary-precision integer coefficients stored in
 * ascending order of the exponent of t. Rational functions are kept in a
 * canonical form:
 * - numerator and denominator are coprime in Q[t],
 * - the integer content common to both is removed,
 * - the lowest-order nonzero denominator coefficient is positive,
 * - zero is represented uniquely as 0/1.
 *
 * With this form, equal rational functions have identical representations,
 * so equality is a plain comparison of coefficient vectors.
 */

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "errors.hpp"

namespace hypalg {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds a reduced rational with positive denominator.
inline Rational make_rational(const Integer& num, const Integer& den)
{
    if (den == 0)
        throw InvalidInput("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

class Polynomial {
public:
    Polynomial() = default;

    explicit Polynomial(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients))
    {
        trim();
    }

    Polynomial(std::initializer_list<long> coefficients)
    {
        coeffs_.reserve(coefficients.size());
        for (long c : coefficients)
            coeffs_.emplace_back(c);
        trim();
    }

    static Polynomial constant(const Integer& c) { return Polynomial(std::vector<Integer>{c}); }

    static Polynomial monomial(const Integer& c, std::size_t degree)
    {
        std::vector<Integer> v(degree + 1, 0);
        v[degree] = c;
        return Polynomial(std::move(v));
    }

    /// The indeterminate t.
    static Polynomial t() { return monomial(1, 1); }

    /// (1 + t)^e, used everywhere as the exterior-algebra factor.
    static Polynomial one_plus_t_pow(std::size_t e) { return Polynomial{1, 1}.pow(e); }

    bool is_zero() const { return coeffs_.empty(); }

    /// Degree, or -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

    const std::vector<Integer>& coefficients() const { return coeffs_; }

    /// Coefficient of t^k (zero beyond the degree).
    Integer operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Integer(0); }

    const Integer& leading() const { return coeffs_.back(); }

    /// Lowest-order nonzero coefficient; the polynomial must be nonzero.
    const Integer& lowest_nonzero() const
    {
        for (const auto& c : coeffs_)
            if (c != 0)
                return c;
        throw InvalidInput("lowest_nonzero of zero polynomial");
    }

    Polynomial operator-() const
    {
        Polynomial r = *this;
        for (auto& c : r.coeffs_)
            c = -c;
        return r;
    }

    Polynomial& operator+=(const Polynomial& o)
    {
        if (o.coeffs_.size() > coeffs_.size())
            coeffs_.resize(o.coeffs_.size(), 0);
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k)
            coeffs_[k] += o.coeffs_[k];
        trim();
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o)
    {
        if (o.coeffs_.size() > coeffs_.size())
            coeffs_.resize(o.coeffs_.size(), 0);
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k)
            coeffs_[k] -= o.coeffs_[k];
        trim();
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
    {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<Integer> r(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0)
                continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                r[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return Polynomial(std::move(r));
    }

    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend Polynomial operator*(const Integer& c, const Polynomial& p)
    {
        if (c == 0)
            return {};
        Polynomial r = p;
        for (auto& x : r.coeffs_)
            x *= c;
        return r;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

    Polynomial pow(std::size_t e) const
    {
        Polynomial result{1};
        Polynomial base = *this;
        while (e) {
            if (e & 1U)
                result *= base;
            e >>= 1U;
            if (e)
                base *= base;
        }
        return result;
    }

    /// p(-t).
    Polynomial negate_variable() const
    {
        Polynomial r = *this;
        for (std::size_t k = 1; k < r.coeffs_.size(); k += 2)
            r.coeffs_[k] = -r.coeffs_[k];
        return r;
    }

    Rational evaluate(const Rational& q) const
    {
        Rational acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * q + Rational(*it);
        return acc;
    }

    /// Nonnegative gcd of the coefficients (zero for the zero polynomial).
    Integer content() const
    {
        Integer g = 0;
        for (const auto& c : coeffs_)
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        return g;
    }

    Polynomial primitive_part() const
    {
        if (is_zero())
            return {};
        Polynomial r = *this;
        Integer g = content();
        for (auto& c : r.coeffs_)
            mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
        if (r.leading() < 0)
            r = -r;
        return r;
    }

    /// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
    static Polynomial pseudo_remainder(Polynomial a, const Polynomial& b)
    {
        if (b.is_zero())
            throw InvalidInput("pseudo-remainder by zero polynomial");
        const long db = b.degree();
        const Integer& lb = b.leading();
        while (!a.is_zero() && a.degree() >= db) {
            const long shift = a.degree() - db;
            Integer la = a.leading();
            for (auto& c : a.coeffs_)
                c *= lb;
            for (long k = 0; k <= db; ++k)
                a.coeffs_[static_cast<std::size_t>(k + shift)] -= la * b.coeffs_[static_cast<std::size_t>(k)];
            a.trim();
        }
        return a;
    }

    /// Primitive gcd with positive leading coefficient; gcd(0, 0) = 0.
    static Polynomial gcd(const Polynomial& a, const Polynomial& b)
    {
        Polynomial x = a.primitive_part();
        Polynomial y = b.primitive_part();
        if (x.degree() < y.degree())
            std::swap(x, y);
        while (!y.is_zero()) {
            Polynomial r = pseudo_remainder(x, y).primitive_part();
            x = std::move(y);
            y = std::move(r);
        }
        return x;
    }

    /// Exact quotient a / b in Z[t]; throws if b does not divide a there.
    static Polynomial divide_exact(const Polynomial& a, const Polynomial& b)
    {
        if (b.is_zero())
            throw InvalidInput("division by zero polynomial");
        if (a.is_zero())
            return {};
        if (a.degree() < b.degree())
            throw InvalidInput("inexact polynomial division");
        Polynomial rem = a;
        const long db = b.degree();
        std::vector<Integer> q(static_cast<std::size_t>(a.degree() - db + 1), 0);
        for (long k = a.degree() - db; k >= 0; --k) {
            const Integer& top = rem.coeffs_[static_cast<std::size_t>(k + db)];
            if (top == 0)
                continue;
            if (!mpz_divisible_p(top.get_mpz_t(), b.leading().get_mpz_t()))
                throw InvalidInput("inexact polynomial division");
            Integer c = top / b.leading();
            for (long i = 0; i <= db; ++i)
                rem.coeffs_[static_cast<std::size_t>(k + i)] -= c * b.coeffs_[static_cast<std::size_t>(i)];
            q[static_cast<std::size_t>(k)] = std::move(c);
        }
        rem.trim();
        if (!rem.is_zero())
            throw InvalidInput("inexact polynomial division");
        return Polynomial(std::move(q));
    }

    /// Ascending rendering with explicit signs, e.g. "1 + 2t - t^2".
    std::string to_string() const
    {
        if (is_zero())
            return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            const Integer& c = coeffs_[k];
            if (c == 0)
                continue;
            Integer mag = abs(c);
            if (first)
                os << (c < 0 ? "-" : "");
            else
                os << (c < 0 ? " - " : " + ");
            first = false;
            if (k == 0 || mag != 1)
                os << mag.get_str();
            if (k >= 1)
                os << 't';
            if (k >= 2)
                os << '^' << k;
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

private:
    void trim()
    {
        while (!coeffs_.empty() && coeffs_.back() == 0)
            coeffs_.pop_back();
    }

    std::vector<Integer> coeffs_;
};

class RationalFunction {
public:
    /// The zero function.
    RationalFunction() : num_(), den_{1} {}

    RationalFunction(const Polynomial& p) : num_(p), den_{1} { normalize(); } // NOLINT: implicit by intent

    RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den))
    {
        normalize();
    }

    const Polynomial& numerator() const { return num_; }
    const Polynomial& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b)
    {
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b)
    {
        return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b)
    {
        return {a.num_ * b.num_, a.den_ * b.den_};
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b)
    {
        if (b.is_zero())
            throw InvalidInput("division by the zero rational function");
        return {a.num_ * b.den_, a.den_ * b.num_};
    }
    RationalFunction operator-() const { return {-num_, den_}; }

    RationalFunction reciprocal() const
    {
        if (is_zero())
            throw InvalidInput("reciprocal of the zero rational function");
        return {den_, num_};
    }

    /// f(-t).
    RationalFunction negate_variable() const { return {num_.negate_variable(), den_.negate_variable()}; }

    RationalFunction pow(std::size_t e) const { return {num_.pow(e), den_.pow(e)}; }

    /// Rendering with powers of (1+t) and (1-t) pulled out of each side.
    std::string to_display_string() const;

    /// Fully expanded "(num) / (den)".
    std::string to_string() const
    {
        return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
    }

    friend std::ostream& operator<<(std::ostream& os, const RationalFunction& f) { return os << f.to_string(); }

private:
    void normalize()
    {
        if (den_.is_zero())
            throw InvalidInput("rational function with zero denominator");
        if (num_.is_zero()) {
            den_ = Polynomial{1};
            return;
        }
        Polynomial g = Polynomial::gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = Polynomial::divide_exact(num_, g);
            den_ = Polynomial::divide_exact(den_, g);
        }
        Integer c = gcd(num_.content(), den_.content());
        if (c != 1) {
            num_ = Polynomial::divide_exact(num_, Polynomial::constant(c));
            den_ = Polynomial::divide_exact(den_, Polynomial::constant(c));
        }
        if (den_.lowest_nonzero() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
    }

    Polynomial num_;
    Polynomial den_;
};

/// Canonical form of num/den; a zero denominator raises InvalidInput.
inline RationalFunction ratfun_normalize(const Polynomial& num, const Polynomial& den)
{
    return {num, den};
}

namespace detail {

/// Strips the largest power of `factor` dividing p; returns the exponent.
inline std::size_t strip_factor(Polynomial& p, const Polynomial& factor)
{
    std::size_t e = 0;
    while (p.degree() > 0) {
        try {
            p = Polynomial::divide_exact(p, factor);
        } catch (const InvalidInput&) {
            break;
        }
        ++e;
    }
    return e;
}

/// Renders p as a power of (1+t) or (1-t) when it is one, else expanded.
inline std::string render_factored(Polynomial p)
{
    if (p.degree() <= 0)
        return p.to_string();
    for (const auto& [factor, name] : {std::pair{Polynomial{1, 1}, "(1 + t)"}, std::pair{Polynomial{1, -1}, "(1 - t)"}}) {
        Polynomial rest = p;
        const std::size_t e = strip_factor(rest, factor);
        if (e > 0 && rest.degree() == 0 && abs(rest[0]) == 1) {
            std::string out = rest[0] < 0 ? "-" : "";
            out += name;
            if (e > 1)
                out += "^" + std::to_string(e);
            return out;
        }
    }
    return "(" + p.to_string() + ")";
}

} // namespace detail

inline std::string RationalFunction::to_display_string() const
{
    if (den_ == Polynomial{1})
        return detail::render_factored(num_);
    return detail::render_factored(num_) + " / " + detail::render_factored(den_);
}

/// Coefficients c_0..c_order of the power series of f.
///
/// The denominator must have a nonzero constant term and every coefficient
/// must come out integral (always the case when that term is +-1).
inline std::vector<Integer> series_expand(const RationalFunction& f, std::size_t order)
{
    const Polynomial& num = f.numerator();
    const Polynomial& den = f.denominator();
    const Integer d0 = den[0];
    if (d0 == 0)
        throw NotPowerSeries("denominator vanishes at t = 0: " + f.to_string());
    std::vector<Integer> c(order + 1, 0);
    const auto dlen = static_cast<std::size_t>(den.degree() + 1);
    for (std::size_t k = 0; k <= order; ++k) {
        Integer acc = num[k];
        for (std::size_t i = 1; i < dlen && i <= k; ++i)
            acc -= den.coefficients()[i] * c[k - i];
        if (!mpz_divisible_p(acc.get_mpz_t(), d0.get_mpz_t()))
            throw InvalidInput("power series has non-integral coefficients: " + f.to_string());
        mpz_divexact(c[k].get_mpz_t(), acc.get_mpz_t(), d0.get_mpz_t());
    }
    return c;
}

/// Exact value f(q); a vanishing denominator raises PoleError.
inline Rational eval_at_rational(const RationalFunction& f, const Rational& q)
{
    Rational d = f.denominator().evaluate(q);
    if (d == 0)
        throw PoleError("pole at t = " + q.get_str());
    Rational r = f.numerator().evaluate(q) / d;
    r.canonicalize();
    return r;
}

} // namespace hypalg
