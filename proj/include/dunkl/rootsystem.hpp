#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dunkl/linalg.hpp"
#include "dunkl/poly.hpp"

namespace dunkl {

struct InvalidRootSystem : std::runtime_error {
    explicit InvalidRootSystem(std::string what) : std::runtime_error(std::move(what)) {}
};
struct DegenerateOrderVector : std::runtime_error {
    explicit DegenerateOrderVector(std::string what) : std::runtime_error(std::move(what)) {}
};

/// Finite set of nonzero vectors closed under its own reflections. Roots keep
/// integer coordinates where the catalog allows it; norm normalization is
/// reported but never enforced.
struct RootSystem {
    std::string name;
    int n = 0;  // ambient dimension
    std::vector<Vec> roots;

    int root_index(const Vec& v) const;
    bool contains(const Vec& v) const { return root_index(v) >= 0; }
};

/// catalog: A1.., B2.., C2.., D2.., G2, I2(3|4|5|6), H3, E(mpty)
RootSystem build_standard(const std::string& name);
RootSystem build_custom(const std::string& name, std::vector<Vec> roots);
std::vector<std::string> catalog_names();

/// checks Definition axioms (negation closure, +-1 multiples, reflection
/// closure, duplicates); throws InvalidRootSystem with a witness
void validate_root_system(const RootSystem& R);
/// whether all roots have squared norm 2 (reported, not enforced)
bool normalized_norms(const RootSystem& R);

struct PositiveSystem {
    const RootSystem* R = nullptr;
    std::optional<Vec> order_vector;  // empty = lexicographic order
    std::vector<int> positives;       // indices into R->roots

    bool is_positive(const Vec& v) const;
};

/// positive subsystem w.r.t. <.,w>; throws DegenerateOrderVector if some
/// root is orthogonal to w
PositiveSystem positive_subsystem(const RootSystem& R, const Vec& w);
/// default generic order: lexicographic positivity
PositiveSystem positive_lex(const RootSystem& R);

class CoxeterGroup;

/// G-invariant multiplicity assignment, one value (or symbolic indeterminate)
/// per orbit
struct Multiplicity {
    std::vector<int> orbit_of;  // per root index
    int num_orbits = 0;
    bool symbolic = true;
    std::vector<Scalar> values;  // per orbit, when numeric

    /// kappa_alpha as an element of the coefficient ring: the orbit
    /// indeterminate in symbolic mode, a constant otherwise
    Polynomial kappa_poly(int root_index, const Space& sp) const;
    Scalar kappa_value(int root_index) const;
};

std::vector<std::vector<int>> root_orbits(const RootSystem& R, const CoxeterGroup& G);
Multiplicity orbits_and_multiplicity(const RootSystem& R, const CoxeterGroup& G);
Multiplicity orbits_and_multiplicity(const RootSystem& R, const CoxeterGroup& G,
                                     const std::vector<Scalar>& per_orbit_values);

/// maximal linearly independent subset of the lex-positive roots, in lex order
std::vector<Vec> essential_basis(const RootSystem& R);

}  // namespace dunkl
