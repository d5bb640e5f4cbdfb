#include "dunkl/scalar.hpp"

#include <sstream>

namespace dunkl {

long Scalar::to_long() const {
    if (!is_integer()) throw std::domain_error("Scalar: not an integer");
    if (!a_.get_num().fits_slong_p()) throw std::domain_error("Scalar: integer overflow");
    return a_.get_num().get_si();
}

Scalar Scalar::operator*(const Scalar& o) const {
    if (is_rational()) {
        if (a_ == 0) return Scalar();
        return Scalar(a_ * o.a_, a_ * o.b_, a_ * o.c_, a_ * o.d_);
    }
    if (o.is_rational()) {
        if (o.a_ == 0) return Scalar();
        return Scalar(a_ * o.a_, b_ * o.a_, c_ * o.a_, d_ * o.a_);
    }
    // (A + Bi)(C + Di) with quad components A = (a,b) etc.
    // quad product: (p,q)(r,s) = (pr + 5qs, ps + qr)
    auto qmul_a = [](const mpq_class& p, const mpq_class& q, const mpq_class& r,
                     const mpq_class& s) { return p * r + 5 * q * s; };
    auto qmul_b = [](const mpq_class& p, const mpq_class& q, const mpq_class& r,
                     const mpq_class& s) { return p * s + q * r; };
    mpq_class re_a = qmul_a(a_, b_, o.a_, o.b_) - qmul_a(c_, d_, o.c_, o.d_);
    mpq_class re_b = qmul_b(a_, b_, o.a_, o.b_) - qmul_b(c_, d_, o.c_, o.d_);
    mpq_class im_a = qmul_a(a_, b_, o.c_, o.d_) + qmul_a(c_, d_, o.a_, o.b_);
    mpq_class im_b = qmul_b(a_, b_, o.c_, o.d_) + qmul_b(c_, d_, o.a_, o.b_);
    return Scalar(re_a, re_b, im_a, im_b);
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("Scalar: division by zero");
    if (is_rational()) return Scalar(1 / a_, 0, 0, 0);
    // 1/z = conj(z) / (z conj(z)), z conj(z) = |re|^2 + |im|^2 is quad and nonzero
    Scalar zc = conj();
    mpq_class na = a_ * a_ + 5 * b_ * b_ + c_ * c_ + 5 * d_ * d_;
    mpq_class nb = 2 * a_ * b_ + 2 * c_ * d_;
    // invert the quad (na + nb r5): (na - nb r5) / (na^2 - 5 nb^2)
    mpq_class det = na * na - 5 * nb * nb;
    if (det == 0) throw std::domain_error("Scalar: singular norm");
    Scalar inv_norm(na / det, -nb / det, 0, 0);
    return zc * inv_norm;
}

int Scalar::sign() const {
    if (c_ != 0 || d_ != 0) throw std::domain_error("Scalar: sign of non-real value");
    if (b_ == 0) return sgn(a_);
    if (a_ == 0) return sgn(b_);
    int sa = sgn(a_), sb = sgn(b_);
    if (sa == sb) return sa;
    mpq_class det = a_ * a_ - 5 * b_ * b_;
    return det > 0 ? sa : sb;
}

int Scalar::cmp_structural(const Scalar& o) const {
    if (int c = cmp(a_, o.a_)) return c;
    if (int c = cmp(b_, o.b_)) return c;
    if (int c = cmp(c_, o.c_)) return c;
    return cmp(d_, o.d_);
}

namespace {

std::string rat_str(const mpq_class& q) { return q.get_str(); }

// render a + b r5
std::string quad_str(const mpq_class& a, const mpq_class& b, bool* compound) {
    *compound = false;
    if (b == 0) return rat_str(a);
    mpq_class babs = abs(b);
    std::string mag = (babs == 1) ? "r5" : rat_str(babs) + "*r5";
    if (a == 0) return b < 0 ? "-" + mag : mag;
    *compound = true;
    return rat_str(a) + (b < 0 ? "-" : "+") + mag;
}

}  // namespace

std::string Scalar::str() const {
    bool comp_re = false, comp_im = false;
    std::string re = quad_str(a_, b_, &comp_re);
    if (c_ == 0 && d_ == 0) return re;
    std::string im = quad_str(c_, d_, &comp_im);
    std::string im_part;
    if (im == "1") im_part = "i";
    else if (im == "-1") im_part = "-i";
    else im_part = (comp_im ? "(" + im + ")" : im) + "*i";
    if (a_ == 0 && b_ == 0) return im_part;
    std::string re_part = comp_re ? "(" + re + ")" : re;
    if (!im_part.empty() && im_part[0] == '-') return re_part + im_part;
    return re_part + "+" + im_part;
}

}  // namespace dunkl
