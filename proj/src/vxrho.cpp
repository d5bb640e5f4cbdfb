#include "dunkl/vxrho.hpp"

#include "dunkl/coxeter.hpp"
#include "dunkl/poly.hpp"
#include "dunkl/rootsystem.hpp"

namespace dunkl {

bool vxrho_sequence_identity(const std::vector<Vec>& vs) {
    size_t m = vs.size();
    if (m < 2) throw std::invalid_argument("vxrho_sequence_identity: need m >= 2");
    int n = (int)vs[0].size();
    std::vector<Polynomial> lin;
    for (const auto& v : vs) {
        Polynomial l(n);
        for (int k = 0; k < n; ++k)
            if (!v[k].is_zero()) l += Polynomial::variable(n, k) * v[k];
        if (l.is_zero()) throw std::invalid_argument("vxrho_sequence_identity: zero vector");
        lin.push_back(l);
    }
    auto product_skipping = [&](size_t i0, size_t i1) {
        Polynomial p = Polynomial::constant(n, Scalar(1));
        for (size_t i = 0; i < m; ++i)
            if (i != i0 && i != i1) p = p * lin[i];
        return p;
    };
    Polynomial lhs(n);
    for (size_t j = 0; j + 1 < m; ++j) lhs += product_skipping(j, j + 1);
    Polynomial rhs = product_skipping(0, m - 1);
    return (lhs - rhs).is_zero();
}

Mat make_plane_rotation(int m) {
    switch (m) {
        case 2: {
            // quarter turn in R^2
            Mat M = {{Scalar(0), Scalar(1)}, {Scalar(-1), Scalar(0)}};
            return M;
        }
        case 3: {
            // -(cyclic permutation) on the plane x1+x2+x3 = 0 in R^3
            Mat M(3, Vec(3));
            M[0][1] = Scalar(-1);
            M[1][2] = Scalar(-1);
            M[2][0] = Scalar(-1);
            return M;
        }
        case 5: {
            // order-10 rotation of the I2(5) plane, defined by shifting the
            // decagon of roots one step in angular order
            RootSystem R = build_standard("I2(5)");
            Vec a = R.roots[0], b;
            for (const auto& v : R.roots) {
                if (rank_of({a, v}) == 2) {
                    b = v;
                    break;
                }
            }
            auto cyc = plane_roots_cyclic(R.roots, a, b);
            Vec axis = {Scalar(1), Scalar(0), Scalar::phi()};
            Mat B = {cyc[0], cyc[1], axis};
            Mat C = {cyc[1], cyc[2], axis};
            Mat M = mat_mul(mat_inverse(B), C);
            // sanity: orthogonal and of order 10 on the plane
            if (!mat_eq(mat_mul(M, transpose(M)), identity(3)))
                throw std::logic_error("plane rotation not orthogonal");
            return M;
        }
        default:
            throw UnrepresentableRotation(
                "plane rotation of order 2m for m=" + std::to_string(m) +
                " has no exact representation over the shipped scalar fields");
    }
}

bool vxrho_identity_check(const Vec& v, const Mat& rho, int m) {
    if (m < 2) throw std::invalid_argument("vxrho_identity_check: need m >= 2");
    std::vector<Vec> vs;
    Vec cur = v;
    for (int j = 0; j < m; ++j) {
        vs.push_back(cur);
        cur = vec_mat(cur, rho);
    }
    if (!veq(cur, vneg(v)))
        throw std::invalid_argument("vxrho_identity_check: rho^m != -1 on the vector");
    return vxrho_sequence_identity(vs);
}

}  // namespace dunkl
