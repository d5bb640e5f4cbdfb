#pragma once

#include <vector>

#include "dunkl/scalar.hpp"

namespace dunkl {

using Vec = std::vector<Scalar>;
using Mat = std::vector<std::vector<Scalar>>;  // row-major; vectors act as rows: x -> x M

Vec vec_from_ints(const std::vector<long>& v);
Scalar dot(const Vec& a, const Vec& b);
Vec vneg(const Vec& a);
Vec vadd(const Vec& a, const Vec& b);
Vec vsub(const Vec& a, const Vec& b);
Vec vscale(const Scalar& c, const Vec& a);
bool veq(const Vec& a, const Vec& b);
/// numeric lexicographic order (componentwise sign comparisons)
bool vlex_less(const Vec& a, const Vec& b);
/// first nonzero component is positive
bool vlex_positive(const Vec& a);

Mat identity(int n);
Mat mat_mul(const Mat& A, const Mat& B);
Vec vec_mat(const Vec& v, const Mat& M);
Mat transpose(const Mat& M);
bool mat_eq(const Mat& A, const Mat& B);
/// reflection in the hyperplane orthogonal to alpha (row-vector convention)
Mat reflection_matrix(const Vec& alpha);

struct MatStructuralLess {
    bool operator()(const Mat& A, const Mat& B) const;
};

/// rank over the exact field
int rank_of(std::vector<Vec> rows);
/// exact inverse; throws on singular input
Mat mat_inverse(const Mat& M);

}  // namespace dunkl
