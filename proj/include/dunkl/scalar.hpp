#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace dunkl {

/// Exact field element: (a + b*sqrt5) + (c + d*sqrt5)*i over arbitrary-precision
/// rationals. Pure rationals keep b = c = d = 0, so the common case stays cheap.
class Scalar {
public:
    Scalar() : a_(0) {}
    Scalar(long v) : a_(v) {}
    Scalar(long p, long q) : a_(p, q) {
        if (q == 0) throw std::invalid_argument("Scalar: zero denominator");
        a_.canonicalize();
    }
    explicit Scalar(const mpq_class& v) : a_(v) {}
    Scalar(mpq_class a, mpq_class b, mpq_class c, mpq_class d)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

    static Scalar i() { return Scalar(0, 0, 1, 0); }
    static Scalar sqrt5() { return Scalar(0, 1, 0, 0); }
    /// golden ratio (1+sqrt5)/2
    static Scalar phi() { return Scalar(mpq_class(1, 2), mpq_class(1, 2), 0, 0); }
    static Scalar rational(const mpq_class& v) { return Scalar(v); }

    const mpq_class& ra() const { return a_; }
    const mpq_class& rb() const { return b_; }
    const mpq_class& rc() const { return c_; }
    const mpq_class& rd() const { return d_; }

    bool is_zero() const { return a_ == 0 && b_ == 0 && c_ == 0 && d_ == 0; }
    bool is_one() const { return a_ == 1 && b_ == 0 && c_ == 0 && d_ == 0; }
    bool is_rational() const { return b_ == 0 && c_ == 0 && d_ == 0; }
    bool is_real() const { return c_ == 0 && d_ == 0; }
    bool is_integer() const { return is_rational() && a_.get_den() == 1; }
    long to_long() const;

    Scalar operator-() const { return Scalar(-a_, -b_, -c_, -d_); }
    Scalar operator+(const Scalar& o) const {
        return Scalar(a_ + o.a_, b_ + o.b_, c_ + o.c_, d_ + o.d_);
    }
    Scalar operator-(const Scalar& o) const {
        return Scalar(a_ - o.a_, b_ - o.b_, c_ - o.c_, d_ - o.d_);
    }
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }
    Scalar& operator+=(const Scalar& o) { *this = *this + o; return *this; }
    Scalar& operator-=(const Scalar& o) { *this = *this - o; return *this; }
    Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }

    Scalar inverse() const;
    /// complex conjugate (i -> -i)
    Scalar conj() const { return Scalar(a_, b_, -c_, -d_); }

    bool operator==(const Scalar& o) const {
        return a_ == o.a_ && b_ == o.b_ && c_ == o.c_ && d_ == o.d_;
    }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// numeric sign for real values; throws on a nonzero imaginary part
    int sign() const;
    /// numeric order on real scalars
    bool less_than(const Scalar& o) const { return (*this - o).sign() < 0; }
    /// arbitrary total order (structural), usable as a map key ordering
    int cmp_structural(const Scalar& o) const;

    std::string str() const;

private:
    mpq_class a_, b_, c_, d_;  // (a + b r5) + (c + d r5) i
};

inline Scalar operator*(long k, const Scalar& s) { return Scalar(k) * s; }

struct ScalarStructuralLess {
    bool operator()(const Scalar& x, const Scalar& y) const {
        return x.cmp_structural(y) < 0;
    }
};

}  // namespace dunkl
