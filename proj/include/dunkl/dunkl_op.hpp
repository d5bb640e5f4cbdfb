#pragma once

#include "dunkl/coxeter.hpp"
#include "dunkl/rootsystem.hpp"

namespace dunkl {

struct ProfileNotOdd : std::runtime_error {
    explicit ProfileNotOdd(std::string what) : std::runtime_error(std::move(what)) {}
};

enum class ProfileKind { Standard, OddPolynomial, Radial, Trivial };

/// one monomial coeff * kappa_orbit^kappa_power * r^degree of a profile psi(r)
struct ProfileTerm {
    int degree = 1;
    Scalar coeff = Scalar(1);
    int kappa_power = 0;
};
using OrbitProfile = std::vector<ProfileTerm>;

struct Profile {
    ProfileKind kind = ProfileKind::Standard;
    std::vector<OrbitProfile> per_orbit;  // OddPolynomial / Radial

    /// psi(r) = kappa * r, one entry per orbit
    static Profile linear(int num_orbits);
    static Profile odd_polynomial(std::vector<OrbitProfile> per_orbit);
    /// even-degree profiles (Radial displacements); degree 0 allowed
    static Profile radial(std::vector<OrbitProfile> per_orbit);

    /// psi_alpha(<alpha,x>) as a polynomial in the ambient ring
    Polynomial evaluate(const Polynomial& r_poly, int orbit, const Space& sp,
                        const Multiplicity& kappa) const;
};

/// inner product <alpha, x> as a linear polynomial in the ambient ring
Polynomial root_linear_form(const Vec& alpha, const Space& sp);

/// directional Dunkl operator (real form, no factor i)
struct DunklOperator {
    const RootSystem* R = nullptr;
    PositiveSystem pos;
    Multiplicity kappa;
    Profile profile;
    Vec xi;

    Space space() const { return Space{R->n, kappa.symbolic ? kappa.num_orbits : 0}; }
    Polynomial apply(const Polynomial& f) const;
    /// the (1/2) sum-over-all-of-R form; agrees with apply for odd profiles
    Polynomial apply_full(const Polynomial& f) const;
};

/// low-level kernel: partial_xi f + sum over the listed roots of
/// weight_alpha * <alpha,xi> * (f - f o sigma_alpha) [/ <alpha,x> when dividing]
/// weight semantics per profile kind; per-root kappa passed explicitly so
/// deliberately corrupted (non-invariant) assignments are testable
Polynomial dunkl_apply_general(const Polynomial& f, const RootSystem& R,
                               const std::vector<int>& root_indices,
                               const std::vector<Polynomial>& per_root_kappa,
                               const Profile& profile, const Multiplicity& kappa,
                               const Vec& xi, const Space& sp, const Scalar& prefactor);

/// covariant partial derivative of Eq-style coordinate form:
/// d^k b + i sum_{alpha in R+} psi_alpha[<x,alpha>] (b - b o sigma_alpha) alpha_k
Polynomial covariant_partial(int k, const Polynomial& b, const RootSystem& R,
                             const PositiveSystem& pos, const Multiplicity& kappa,
                             const Profile& profile);

/// (T_xi T_eta - T_eta T_xi) f
Polynomial commutator_apply(const DunklOperator& Txi, const DunklOperator& Teta,
                            const Polynomial& f);

/// T(fg) - T(f) g - f T(g) + sum_{alpha in R+} kappa <alpha,xi> (f-f^s)(g-g^s)/<alpha,x>
Polynomial deformed_leibniz_residual(const DunklOperator& T, const Polynomial& f,
                                     const Polynomial& g);

/// all monomials prod <x,b_i>^{a_i} with sum a_i <= degree over the essential
/// basis, graded-lex order on exponents
std::vector<Polynomial> essential_monomials(const RootSystem& R, const Space& sp,
                                            int degree);

}  // namespace dunkl
