#include "dunkl/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace dunkl {

Polynomial Polynomial::constant(int dim, const Scalar& c) {
    Polynomial p(dim);
    if (!c.is_zero()) p.terms_.emplace(Exps(dim, 0), c);
    return p;
}

Polynomial Polynomial::variable(int dim, int k, int power) {
    if (k < 0 || k >= dim) throw std::out_of_range("Polynomial::variable");
    Exps e(dim, 0);
    e[k] = power;
    return monomial(dim, e, Scalar(1));
}

Polynomial Polynomial::monomial(int dim, Exps e, const Scalar& c) {
    if ((int)e.size() != dim) throw std::invalid_argument("Polynomial::monomial: bad exponent length");
    Polynomial p(dim);
    if (!c.is_zero()) p.terms_.emplace(std::move(e), c);
    return p;
}

bool Polynomial::is_one() const {
    if (terms_.size() != 1) return false;
    const auto& [e, c] = *terms_.begin();
    for (auto v : e)
        if (v != 0) return false;
    return c.is_one();
}

bool Polynomial::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    for (auto v : terms_.begin()->first)
        if (v != 0) return false;
    return true;
}

Scalar Polynomial::constant_term() const {
    Exps zero(dim_, 0);
    auto it = terms_.find(zero);
    return it == terms_.end() ? Scalar() : it->second;
}

long Polynomial::total_degree() const {
    if (terms_.empty()) return -1;
    const auto& e = terms_.rbegin()->first;  // graded-lex max
    long s = 0;
    for (auto v : e) s += v;
    return s;
}

void Polynomial::add_term(const Exps& e, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r(dim_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r = *this;
    r += o;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial r = *this;
    r -= o;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (dim_ != o.dim_) throw std::invalid_argument("Polynomial: dimension mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (dim_ != o.dim_) throw std::invalid_argument("Polynomial: dimension mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("Polynomial: dimension mismatch");
    Polynomial r(dim_);
    Exps e(dim_);
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : o.terms_) {
            for (int i = 0; i < dim_; ++i) e[i] = e1[i] + e2[i];
            r.add_term(e, c1 * c2);
        }
    }
    return r;
}

Polynomial Polynomial::operator*(const Scalar& c) const {
    Polynomial r(dim_);
    if (c.is_zero()) return r;
    for (const auto& [e, c0] : terms_) r.terms_.emplace(e, c0 * c);
    return r;
}

Polynomial Polynomial::pow(int e) const {
    if (e < 0) throw std::invalid_argument("Polynomial::pow: negative exponent");
    Polynomial r = constant(dim_, Scalar(1));
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
}

bool Polynomial::less_structural(const Polynomial& o) const {
    if (dim_ != o.dim_) return dim_ < o.dim_;
    auto it1 = terms_.begin(), it2 = o.terms_.begin();
    for (; it1 != terms_.end() && it2 != o.terms_.end(); ++it1, ++it2) {
        GradedLexLess lt;
        if (lt(it1->first, it2->first)) return true;
        if (lt(it2->first, it1->first)) return false;
        int c = it1->second.cmp_structural(it2->second);
        if (c != 0) return c < 0;
    }
    return it1 == terms_.end() && it2 != o.terms_.end();
}

Polynomial Polynomial::partial(int k) const {
    Polynomial r(dim_);
    for (const auto& [e, c] : terms_) {
        if (e[k] == 0) continue;
        if (e[k] < 0) throw std::domain_error("Polynomial::partial on negative exponent");
        Exps e2 = e;
        e2[k] -= 1;
        r.add_term(e2, c * Scalar(e[k]));
    }
    return r;
}

Polynomial Polynomial::substitute_spatial(const std::vector<std::vector<Scalar>>& M,
                                          int nsp) const {
    if ((int)M.size() != nsp) throw std::invalid_argument("substitute_spatial: bad matrix");
    // image of x_k is the linear form sum_i x_i M[i][k]
    std::vector<Polynomial> image(nsp, Polynomial(dim_));
    for (int k = 0; k < nsp; ++k) {
        Polynomial lf(dim_);
        for (int i = 0; i < nsp; ++i) {
            if (!M[i][k].is_zero()) lf += variable(dim_, i) * M[i][k];
        }
        image[k] = lf;
    }
    std::vector<std::vector<Polynomial>> powers(nsp);  // powers[k][j] = image[k]^j
    auto power_of = [&](int k, int j) -> const Polynomial& {
        auto& v = powers[k];
        if (v.empty()) v.push_back(constant(dim_, Scalar(1)));
        while ((int)v.size() <= j) v.push_back(v.back() * image[k]);
        return v[j];
    };
    Polynomial r(dim_);
    for (const auto& [e, c] : terms_) {
        Polynomial term = constant(dim_, Scalar(1));
        for (int k = 0; k < nsp; ++k) {
            if (e[k] < 0) throw std::domain_error("substitute_spatial on negative exponent");
            if (e[k] > 0) term = term * power_of(k, e[k]);
        }
        Exps par(dim_, 0);
        for (int k = nsp; k < dim_; ++k) par[k] = e[k];
        r += term * monomial(dim_, par, c);
    }
    return r;
}

Polynomial Polynomial::divide_exact(const Polynomial& d) const {
    if (dim_ != d.dim_) throw std::invalid_argument("divide_exact: dimension mismatch");
    if (d.is_zero()) throw std::domain_error("divide_exact: zero divisor");
    Polynomial q(dim_), rem(dim_), r = *this;
    const auto& [ed, cd] = *d.terms_.rbegin();
    while (!r.is_zero()) {
        const auto& [er, cr] = *r.terms_.rbegin();
        bool ok = true;
        for (int i = 0; i < dim_; ++i) {
            if (er[i] < ed[i]) { ok = false; break; }
        }
        if (ok) {
            Exps em(dim_);
            for (int i = 0; i < dim_; ++i) em[i] = er[i] - ed[i];
            Polynomial m = monomial(dim_, em, cr / cd);
            q += m;
            r -= m * d;
        } else {
            rem.add_term(er, cr);
            r.terms_.erase(std::prev(r.terms_.end()));
        }
    }
    if (!rem.is_zero())
        throw NotDivisible("not exactly divisible; remainder = " +
                           rem.str(Space{dim_, 0}));
    return q;
}

Scalar Polynomial::eval(const std::vector<Scalar>& point) const {
    if ((int)point.size() != dim_) throw std::invalid_argument("eval: bad point size");
    Scalar acc;
    for (const auto& [e, c] : terms_) {
        Scalar t = c;
        for (int i = 0; i < dim_; ++i) {
            int p = e[i];
            if (p == 0) continue;
            Scalar base = point[i];
            if (p < 0) { base = base.inverse(); p = -p; }
            for (int j = 0; j < p; ++j) t *= base;
        }
        acc += t;
    }
    return acc;
}

Polynomial laurent_partial(const Polynomial& p, int k) {
    Polynomial r(p.dim());
    for (const auto& [e, c] : p.terms()) {
        if (e[k] == 0) continue;
        r.add_term(e, c * Scalar(e[k]));
    }
    return r;
}

Polynomial laurent_substitute(const Polynomial& p,
                              const std::vector<std::vector<Scalar>>& g, int nsp) {
    Polynomial r(p.dim());
    Exps e2;
    for (const auto& [e, c] : p.terms()) {
        e2 = e;
        for (int i = 0; i < nsp; ++i) {
            Scalar v;
            for (int k = 0; k < nsp; ++k) v += g[i][k] * Scalar(e[k]);
            if (!v.is_integer())
                throw std::domain_error("laurent_substitute: exponent leaves the lattice");
            e2[i] = (int32_t)v.to_long();
        }
        r.add_term(e2, c);
    }
    return r;
}

std::string exps_str(const Exps& e, const Space& sp, bool laurent) {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < (int)e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!first) os << " ";
        first = false;
        if (i < sp.nsp) os << (laurent ? "t" : "x") << (i + 1);
        else os << "k" << (i - sp.nsp + 1);
        if (e[i] != 1) os << "^" << e[i];
    }
    return os.str();
}

std::string Polynomial::str(const Space& sp, bool laurent) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // leading terms first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        std::string cs = it->second.str();
        std::string ms = exps_str(it->first, sp, laurent);
        if (!first) os << " + ";
        first = false;
        if (ms.empty()) os << cs;
        else if (cs == "1") os << ms;
        else if (cs == "-1") os << "-" << ms;
        else {
            bool wrap = cs.find_first_of("+-") != std::string::npos &&
                        cs.find_first_of("+-", 1) != std::string::npos;
            if (wrap) os << "(" << cs << ")*" << ms;
            else os << cs << "*" << ms;
        }
    }
    return os.str();
}

}  // namespace dunkl
