#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <sstream>

#include "dunkl/fraction.hpp"

namespace dunkl {

/// sign of sorting theta_a wedge theta_b into ascending order (disjoint masks)
inline int merge_sign(uint32_t a, uint32_t b) {
    int inv = 0;
    while (b) {
        int j = std::countr_zero(b);
        b &= b - 1;
        inv += std::popcount(a >> (j + 1));
    }
    return (inv & 1) ? -1 : 1;
}

/// Horizontal form: graded exterior-algebra element in theta_1..theta_n with
/// coefficients in the ring K (rational functions in x, or Laurent fractions
/// in t). Components are indexed by bitmask of the strictly increasing theta
/// subset; zero coefficients are never stored.
template <class K>
class Form {
public:
    Form() : sp_{} {}
    explicit Form(Space sp) : sp_(sp) {}

    static Form zero(Space sp) { return Form(sp); }
    static Form from_coef(Space sp, K c) {
        Form f(sp);
        f.add(0u, std::move(c));
        return f;
    }
    static Form theta(Space sp, int k) {
        Form f(sp);
        f.add(1u << k, K::constant(sp.dim(), Scalar(1)));
        return f;
    }
    /// constant-coefficient 1-form sum_k alpha_k theta_k
    static Form covector(Space sp, const Vec& alpha) {
        Form f(sp);
        for (int k = 0; k < sp.nsp; ++k)
            f.add(1u << k, K::constant(sp.dim(), alpha[k]));
        return f;
    }

    const Space& space() const { return sp_; }
    const std::map<uint32_t, K>& comps() const { return comps_; }
    bool is_zero() const { return comps_.empty(); }
    int max_degree() const {
        int d = 0;
        for (const auto& [m, c] : comps_) d = std::max(d, std::popcount(m));
        return d;
    }
    bool is_homogeneous(int* deg_out = nullptr) const {
        int deg = comps_.empty() ? 0 : std::popcount(comps_.begin()->first);
        for (const auto& [m, c] : comps_)
            if (std::popcount(m) != deg) return false;
        if (deg_out) *deg_out = deg;
        return true;
    }
    K component(uint32_t mask) const {
        auto it = comps_.find(mask);
        return it == comps_.end() ? K::constant(sp_.dim(), Scalar(0)) : it->second;
    }

    void add(uint32_t mask, const K& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = comps_.emplace(mask, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) comps_.erase(it);
        }
    }

    Form operator-() const {
        Form r(sp_);
        for (const auto& [m, c] : comps_) r.comps_.emplace(m, -c);
        return r;
    }
    Form operator+(const Form& o) const {
        Form r = *this;
        for (const auto& [m, c] : o.comps_) r.add(m, c);
        return r;
    }
    Form operator-(const Form& o) const { return *this + (-o); }
    Form& operator+=(const Form& o) {
        for (const auto& [m, c] : o.comps_) add(m, c);
        return *this;
    }
    /// wedge product
    Form operator*(const Form& o) const {
        Form r(sp_);
        for (const auto& [m1, c1] : comps_)
            for (const auto& [m2, c2] : o.comps_) {
                if (m1 & m2) continue;
                K c = c1 * c2;
                if (merge_sign(m1, m2) < 0) c = -c;
                r.add(m1 | m2, c);
            }
        return r;
    }
    Form operator*(const K& c) const {
        Form r(sp_);
        for (const auto& [m, c0] : comps_) r.add(m, c0 * c);
        return r;
    }
    Form operator*(const Scalar& s) const {
        Form r(sp_);
        for (const auto& [m, c0] : comps_) r.add(m, c0 * s);
        return r;
    }

    bool operator==(const Form& o) const { return (*this - o).is_zero(); }
    bool operator!=(const Form& o) const { return !(*this == o); }

    Form conj() const {
        Form r(sp_);
        for (const auto& [m, c] : comps_) r.comps_.emplace(m, c.conj());
        return r;
    }

    /// de Rham differential D
    Form de_rham() const {
        Form r(sp_);
        for (const auto& [m, c] : comps_) {
            for (int k = 0; k < sp_.nsp; ++k) {
                uint32_t mk = 1u << k;
                if (m & mk) continue;
                K dc = c.partial(k);
                if (dc.is_zero()) continue;
                if (merge_sign(mk, m) < 0) dc = -dc;
                r.add(mk | m, dc);
            }
        }
        return r;
    }

    /// right action phi_g, the pullback along x -> x g (coefficients compose
    /// with x g, theta_k maps to sum_i g[i][k] theta_i)
    Form act(const Mat& g) const {
        std::vector<Form> theta_img(sp_.nsp, Form(sp_));
        for (int k = 0; k < sp_.nsp; ++k) {
            Form f(sp_);
            for (int i = 0; i < sp_.nsp; ++i)
                if (!g[i][k].is_zero())
                    f.add(1u << i, K::constant(sp_.dim(), g[i][k]));
            theta_img[k] = f;
        }
        Form r(sp_);
        for (const auto& [m, c] : comps_) {
            Form piece = from_coef(sp_, c.substitute(g, sp_.nsp));
            uint32_t mm = m;
            while (mm) {
                int k = std::countr_zero(mm);
                mm &= mm - 1;
                piece = piece * theta_img[k];
            }
            r += piece;
        }
        return r;
    }

    std::string str() const {
        if (comps_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : comps_) {
            if (!first) os << " + ";
            first = false;
            os << "(" << c.str(sp_) << ")";
            uint32_t mm = m;
            while (mm) {
                int k = std::countr_zero(mm);
                mm &= mm - 1;
                os << " th" << (k + 1);
            }
        }
        return os.str();
    }

private:
    Space sp_;
    std::map<uint32_t, K> comps_;
};

template <class K>
Form<K> operator*(const Scalar& s, const Form<K>& f) {
    return f * s;
}

using HForm = Form<RatFunc>;
using LForm = Form<LaurentFrac>;

}  // namespace dunkl
