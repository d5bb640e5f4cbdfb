#pragma once

#include <optional>

#include "dunkl/linalg.hpp"
#include "dunkl/poly.hpp"

namespace dunkl {

struct PolyOps {
    static Polynomial partial(const Polynomial& p, int k) { return p.partial(k); }
    static Polynomial substitute(const Polynomial& p, const Mat& g, int nsp) {
        return p.substitute_spatial(g, nsp);
    }
    static constexpr bool laurent = false;
};

struct LaurentOps {
    static Polynomial partial(const Polynomial& p, int k) { return laurent_partial(p, k); }
    static Polynomial substitute(const Polynomial& p, const Mat& g, int nsp) {
        return laurent_substitute(p, g, nsp);
    }
    static constexpr bool laurent = true;
};

/// Fraction num/den of sparse polynomials, kept unreduced. Equality is
/// cross-multiplied; zero testing never depends on gcd normalization.
template <class Ops>
class Fraction {
public:
    Fraction() : num_(0), den_(Polynomial::constant(0, Scalar(1))) {}
    explicit Fraction(Polynomial num)
        : num_(std::move(num)), den_(Polynomial::constant(num_.dim(), Scalar(1))) {}
    Fraction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw std::domain_error("Fraction: zero denominator");
    }
    static Fraction constant(int dim, const Scalar& c) {
        return Fraction(Polynomial::constant(dim, c));
    }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    int dim() const { return num_.dim(); }

    bool is_zero() const { return num_.is_zero(); }

    Fraction operator-() const { return Fraction(-num_, den_); }
    Fraction operator+(const Fraction& o) const {
        if (num_.is_zero()) return o;
        if (o.num_.is_zero()) return *this;
        if (den_ == o.den_) return Fraction(num_ + o.num_, den_);
        return Fraction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    Fraction operator-(const Fraction& o) const { return *this + (-o); }
    Fraction operator*(const Fraction& o) const {
        if (num_.is_zero() || o.num_.is_zero())
            return Fraction(Polynomial::zero(num_.dim()),
                            Polynomial::constant(num_.dim(), Scalar(1)));
        if (den_.is_one() && o.den_.is_one()) return Fraction(num_ * o.num_);
        return Fraction(num_ * o.num_, den_ * o.den_);
    }
    Fraction operator*(const Scalar& c) const { return Fraction(num_ * c, den_); }
    Fraction& operator+=(const Fraction& o) { *this = *this + o; return *this; }

    bool operator==(const Fraction& o) const { return (num_ * o.den_) == (o.num_ * den_); }
    bool operator!=(const Fraction& o) const { return !(*this == o); }

    Fraction partial(int k) const {
        if (den_.is_one()) return Fraction(Ops::partial(num_, k));
        // quotient rule
        return Fraction(Ops::partial(num_, k) * den_ - num_ * Ops::partial(den_, k),
                        den_ * den_);
    }
    Fraction substitute(const Mat& g, int nsp) const {
        return Fraction(Ops::substitute(num_, g, nsp), Ops::substitute(den_, g, nsp));
    }
    Fraction conj() const {
        auto cj = [](const Polynomial& p) {
            Polynomial r(p.dim());
            for (const auto& [e, c] : p.terms()) r.add_term(e, c.conj());
            return r;
        };
        return Fraction(cj(num_), cj(den_));
    }
    /// Scalar c with num = c * den, if the fraction is constant
    std::optional<Scalar> constant_value() const {
        if (num_.is_zero()) return Scalar(0);
        const auto& ln = *num_.terms().rbegin();
        const auto& ld = *den_.terms().rbegin();
        if (ln.first != ld.first) return std::nullopt;
        Scalar c = ln.second / ld.second;
        return (num_ == den_ * c) ? std::optional<Scalar>(c) : std::nullopt;
    }
    Scalar eval(const std::vector<Scalar>& point) const {
        return num_.eval(point) / den_.eval(point);
    }

    std::string str(const Space& sp) const {
        if (den_.is_one()) return num_.str(sp, Ops::laurent);
        return "(" + num_.str(sp, Ops::laurent) + ") / (" + den_.str(sp, Ops::laurent) + ")";
    }

private:
    Polynomial num_, den_;
};

using RatFunc = Fraction<PolyOps>;
using LaurentFrac = Fraction<LaurentOps>;

template <class Ops>
Fraction<Ops> operator*(const Scalar& c, const Fraction<Ops>& f) {
    return f * c;
}

}  // namespace dunkl
