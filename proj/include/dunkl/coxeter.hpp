#pragma once

#include <map>
#include <string>
#include <vector>

#include "dunkl/rootsystem.hpp"

namespace dunkl {

struct OrderCapExceeded : std::runtime_error {
    explicit OrderCapExceeded(std::string what) : std::runtime_error(std::move(what)) {}
};

/// Finite reflection group with full multiplication table. Element 0 is the
/// identity. Immutable once generated.
class CoxeterGroup {
public:
    static CoxeterGroup generate(const RootSystem& R, size_t order_cap = 10000);

    int dim() const { return n_; }
    int order() const { return (int)elems_.size(); }
    const std::vector<Mat>& elements() const { return elems_; }
    const Mat& mat(int g) const { return elems_[g]; }
    int mul(int g, int h) const { return table_[g][h]; }
    int inv(int g) const { return inv_[g]; }
    int element_order(int g) const { return order_[g]; }
    int index_of(const Mat& M) const;  // -1 if absent

    /// reflection set S (element indices, sorted); every s is sigma_alpha
    const std::vector<int>& reflections() const { return refl_; }
    bool is_reflection(int g) const { return is_refl_[g]; }
    /// some root alpha with sigma_alpha = s; lex-positive representative
    int positive_root_of(int s) const { return pos_root_of_refl_.at(s); }
    /// element index of sigma_{alpha_i}
    int reflection_of_root(int root_idx) const { return refl_of_root_[root_idx]; }

    const std::vector<std::vector<int>>& conjugacy_classes() const { return classes_; }
    int class_of(int g) const { return class_of_[g]; }

    const RootSystem& roots() const { return *R_; }

private:
    const RootSystem* R_ = nullptr;
    int n_ = 0;
    std::vector<Mat> elems_;
    std::vector<std::vector<int>> table_;
    std::vector<int> inv_;
    std::vector<int> order_;
    std::vector<int> refl_;
    std::vector<char> is_refl_;
    std::vector<int> refl_of_root_;
    std::map<int, int> pos_root_of_refl_;
    std::vector<std::vector<int>> classes_;
    std::vector<int> class_of_;
    std::map<Mat, int, MatStructuralLess> index_;
};

/// product of two distinct reflections; proper when its order exceeds two.
/// w_rho is the oriented plane volume 2-form (proper rotations only), stored
/// as wedge coefficients w[k<l] of theta_k theta_l.
struct TwoRotation {
    int elem = -1;
    int order = 0;
    bool proper = false;
    std::vector<std::pair<int, int>> decomps;  // ordered reflection pairs (s,t), st = elem
    std::map<std::pair<int, int>, Scalar> w;   // {(k,l), coeff}, k < l
};

/// all products of two distinct reflections, each with its exhaustive ordered
/// decomposition list; w fixed per inverse-pair so that w_{rho^{-1}} = -w_rho
std::vector<TwoRotation> two_rotations(const CoxeterGroup& G);
const TwoRotation* find_rotation(const std::vector<TwoRotation>& rots, int elem);

enum class Rank2Kind { Orthogonal, Hexagonal, Octagonal, Dodecagonal, Other };

struct Rank2Classification {
    Rank2Kind kind = Rank2Kind::Other;
    int plane_root_count = 0;
    bool arithmetic_half = false;
};

Rank2Classification classify_rank2(const RootSystem& R, const CoxeterGroup& G,
                                   const TwoRotation& rot);
std::string rank2_kind_name(Rank2Kind k);

/// true iff v_k - v_{k+1} = v_0 for all 1 <= k <= len-2 (list length >= 3)
bool arithmetic_type_check(const std::vector<Vec>& seq);

/// exact coordinates of an in-plane vector v = x a + y b w.r.t. the basis (a, b)
std::pair<Scalar, Scalar> planar_coords(const Vec& a, const Vec& b, const Vec& v);
/// vectors of a 2-plane sorted in cyclic angular order (exact sign arithmetic)
std::vector<Vec> plane_roots_cyclic(const std::vector<Vec>& vs, const Vec& a, const Vec& b);

}  // namespace dunkl
