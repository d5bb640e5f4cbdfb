#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dunkl/scalar.hpp"

namespace dunkl {

using Exps = std::vector<int32_t>;

/// Variable layout: the first `nsp` variables are spatial coordinates, the
/// remaining `npar` are per-orbit multiplicity indeterminates.
struct Space {
    int nsp = 0;
    int npar = 0;
    int dim() const { return nsp + npar; }
};

struct GradedLexLess {
    bool operator()(const Exps& x, const Exps& y) const {
        long sx = 0, sy = 0;
        for (auto v : x) sx += v;
        for (auto v : y) sy += v;
        if (sx != sy) return sx < sy;
        return x < y;
    }
};

class Polynomial;

/// thrown by divide_exact; carries the nonzero remainder
struct NotDivisible : std::runtime_error {
    explicit NotDivisible(std::string what) : std::runtime_error(std::move(what)) {}
};

/// Sparse exact multivariate polynomial over Scalar with graded-lex canonical
/// term order. Negative exponents are allowed so the same container backs
/// Laurent polynomials in t_i = e^{x_i}; the Laurent-specific derivative and
/// substitution are the laurent_* free functions below.
class Polynomial {
public:
    using TermMap = std::map<Exps, Scalar, GradedLexLess>;

    explicit Polynomial(int dim = 0) : dim_(dim) {}

    static Polynomial zero(int dim) { return Polynomial(dim); }
    static Polynomial constant(int dim, const Scalar& c);
    static Polynomial variable(int dim, int k, int power = 1);
    static Polynomial monomial(int dim, Exps e, const Scalar& c);

    int dim() const { return dim_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const;
    Scalar constant_term() const;
    /// max total degree, -1 for the zero polynomial
    long total_degree() const;
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    void add_term(const Exps& e, const Scalar& c);

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial operator*(const Scalar& c) const;
    Polynomial pow(int e) const;

    bool operator==(const Polynomial& o) const { return dim_ == o.dim_ && terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }
    /// structural total order for map keys
    bool less_structural(const Polynomial& o) const;

    /// d/dx_k for genuine polynomial variables
    Polynomial partial(int k) const;
    /// substitute x -> x M on the first nsp variables (M is nsp x nsp)
    Polynomial substitute_spatial(const std::vector<std::vector<Scalar>>& M, int nsp) const;
    /// exact division; throws NotDivisible (with remainder rendered) otherwise
    Polynomial divide_exact(const Polynomial& d) const;
    /// evaluation; negative exponents invert the (then necessarily nonzero) base
    Scalar eval(const std::vector<Scalar>& point) const;

    std::string str(const Space& sp, bool laurent = false) const;

private:
    int dim_;
    TermMap terms_;
};

inline Polynomial operator*(const Scalar& c, const Polynomial& p) { return p * c; }

/// d/dx_k acting on Laurent monomials T^m = e^{<x,m>}: multiplies by m_k
Polynomial laurent_partial(const Polynomial& p, int k);
/// pullback of T^m along x -> x g for orthogonal g: exponent m -> m g^T on the
/// spatial block; throws if the image leaves the integer lattice
Polynomial laurent_substitute(const Polynomial& p,
                              const std::vector<std::vector<Scalar>>& g, int nsp);

std::string exps_str(const Exps& e, const Space& sp, bool laurent);

}  // namespace dunkl
