#include "dunkl/linalg.hpp"

#include <stdexcept>

namespace dunkl {

Vec vec_from_ints(const std::vector<long>& v) {
    Vec r;
    r.reserve(v.size());
    for (long x : v) r.emplace_back(x);
    return r;
}

Scalar dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
    Scalar s;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Vec vneg(const Vec& a) {
    Vec r = a;
    for (auto& x : r) x = -x;
    return r;
}

Vec vadd(const Vec& a, const Vec& b) {
    Vec r = a;
    for (size_t i = 0; i < a.size(); ++i) r[i] += b[i];
    return r;
}

Vec vsub(const Vec& a, const Vec& b) {
    Vec r = a;
    for (size_t i = 0; i < a.size(); ++i) r[i] -= b[i];
    return r;
}

Vec vscale(const Scalar& c, const Vec& a) {
    Vec r = a;
    for (auto& x : r) x *= c;
    return r;
}

bool veq(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

bool vlex_less(const Vec& a, const Vec& b) {
    for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
        int s = (a[i] - b[i]).sign();
        if (s < 0) return true;
        if (s > 0) return false;
    }
    return a.size() < b.size();
}

bool vlex_positive(const Vec& a) {
    for (const auto& x : a) {
        int s = x.sign();
        if (s > 0) return true;
        if (s < 0) return false;
    }
    return false;
}

Mat identity(int n) {
    Mat M(n, Vec(n));
    for (int i = 0; i < n; ++i) M[i][i] = Scalar(1);
    return M;
}

Mat mat_mul(const Mat& A, const Mat& B) {
    int n = (int)A.size(), m = (int)B[0].size(), k = (int)B.size();
    Mat R(n, Vec(m));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) {
            Scalar s;
            for (int l = 0; l < k; ++l) s += A[i][l] * B[l][j];
            R[i][j] = s;
        }
    return R;
}

Vec vec_mat(const Vec& v, const Mat& M) {
    int n = (int)M.size(), m = (int)M[0].size();
    Vec r(m);
    for (int j = 0; j < m; ++j) {
        Scalar s;
        for (int i = 0; i < n; ++i) s += v[i] * M[i][j];
        r[j] = s;
    }
    return r;
}

Mat transpose(const Mat& M) {
    int n = (int)M.size(), m = (int)M[0].size();
    Mat R(m, Vec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) R[j][i] = M[i][j];
    return R;
}

bool mat_eq(const Mat& A, const Mat& B) {
    if (A.size() != B.size()) return false;
    for (size_t i = 0; i < A.size(); ++i)
        if (!veq(A[i], B[i])) return false;
    return true;
}

Mat reflection_matrix(const Vec& alpha) {
    Scalar nrm = dot(alpha, alpha);
    if (nrm.is_zero()) throw std::invalid_argument("reflection_matrix: zero vector");
    int n = (int)alpha.size();
    Mat M = identity(n);
    Scalar f = Scalar(2) / nrm;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) M[i][j] -= f * alpha[i] * alpha[j];
    return M;
}

bool MatStructuralLess::operator()(const Mat& A, const Mat& B) const {
    if (A.size() != B.size()) return A.size() < B.size();
    for (size_t i = 0; i < A.size(); ++i)
        for (size_t j = 0; j < A[i].size(); ++j) {
            int c = A[i][j].cmp_structural(B[i][j]);
            if (c) return c < 0;
        }
    return false;
}

Mat mat_inverse(const Mat& M) {
    int n = (int)M.size();
    Mat a = M;
    Mat inv = identity(n);
    for (int col = 0; col < n; ++col) {
        int piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) throw std::domain_error("mat_inverse: singular matrix");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        Scalar f = a[col][col].inverse();
        for (int j = 0; j < n; ++j) {
            a[col][j] *= f;
            inv[col][j] *= f;
        }
        for (int i = 0; i < n; ++i) {
            if (i == col || a[i][col].is_zero()) continue;
            Scalar g = a[i][col];
            for (int j = 0; j < n; ++j) {
                a[i][j] -= g * a[col][j];
                inv[i][j] -= g * inv[col][j];
            }
        }
    }
    return inv;
}

int rank_of(std::vector<Vec> rows) {
    if (rows.empty()) return 0;
    size_t m = rows[0].size();
    int rank = 0;
    size_t col = 0;
    for (size_t r = 0; r < rows.size() && col < m; ++col) {
        size_t piv = r;
        while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        Scalar inv = rows[r][col].inverse();
        for (size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][col].is_zero()) continue;
            Scalar f = rows[i][col] * inv;
            for (size_t j = col; j < m; ++j) rows[i][j] -= f * rows[r][j];
        }
        ++r;
        ++rank;
    }
    return rank;
}

}  // namespace dunkl
