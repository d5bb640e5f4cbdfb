#include "dunkl/coxeter.hpp"

#include <algorithm>
#include <deque>

namespace dunkl {

CoxeterGroup CoxeterGroup::generate(const RootSystem& R, size_t order_cap) {
    CoxeterGroup G;
    G.R_ = &R;
    G.n_ = R.n;
    std::vector<Mat> gens;
    for (const auto& a : R.roots) gens.push_back(reflection_matrix(a));

    Mat id = identity(R.n);
    G.elems_.push_back(id);
    G.index_.emplace(id, 0);
    std::deque<int> work{0};
    while (!work.empty()) {
        int gi = work.front();
        work.pop_front();
        for (const auto& s : gens) {
            Mat P = mat_mul(G.elems_[gi], s);
            if (G.index_.find(P) == G.index_.end()) {
                if (G.elems_.size() >= order_cap)
                    throw OrderCapExceeded("group order exceeds cap " +
                                           std::to_string(order_cap));
                G.index_.emplace(P, (int)G.elems_.size());
                G.elems_.push_back(P);
                work.push_back((int)G.elems_.size() - 1);
            }
        }
    }
    int N = (int)G.elems_.size();
    G.table_.assign(N, std::vector<int>(N, -1));
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            auto it = G.index_.find(mat_mul(G.elems_[i], G.elems_[j]));
            if (it == G.index_.end()) throw std::logic_error("group not closed");
            G.table_[i][j] = it->second;
        }
    G.inv_.assign(N, -1);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            if (G.table_[i][j] == 0) G.inv_[i] = j;
    G.order_.assign(N, 0);
    for (int i = 0; i < N; ++i) {
        int p = i, k = 1;
        while (p != 0) {
            p = G.table_[p][i];
            ++k;
        }
        G.order_[i] = k;
    }
    G.is_refl_.assign(N, 0);
    G.refl_of_root_.assign(R.roots.size(), -1);
    for (size_t r = 0; r < R.roots.size(); ++r) {
        auto it = G.index_.find(reflection_matrix(R.roots[r]));
        if (it == G.index_.end()) throw std::logic_error("generator missing from group");
        G.refl_of_root_[r] = it->second;
        G.is_refl_[it->second] = 1;
    }
    for (int i = 0; i < N; ++i)
        if (G.is_refl_[i]) G.refl_.push_back(i);
    // lex-positive, lex-least representative root per reflection
    for (int s : G.refl_) {
        int best = -1;
        for (size_t r = 0; r < R.roots.size(); ++r) {
            if (G.refl_of_root_[r] != s) continue;
            if (!vlex_positive(R.roots[r])) continue;
            if (best < 0 || vlex_less(R.roots[r], R.roots[best])) best = (int)r;
        }
        G.pos_root_of_refl_[s] = best;
    }
    // conjugacy classes
    G.class_of_.assign(N, -1);
    for (int i = 0; i < N; ++i) {
        if (G.class_of_[i] >= 0) continue;
        int cid = (int)G.classes_.size();
        std::vector<int> cls;
        for (int g = 0; g < N; ++g) {
            int c = G.table_[G.table_[G.inv_[g]][i]][g];  // g^{-1} i g
            if (G.class_of_[c] < 0) {
                G.class_of_[c] = cid;
                cls.push_back(c);
            }
        }
        std::sort(cls.begin(), cls.end());
        G.classes_.push_back(std::move(cls));
    }
    return G;
}

int CoxeterGroup::index_of(const Mat& M) const {
    auto it = index_.find(M);
    return it == index_.end() ? -1 : it->second;
}

namespace {

// wedge coefficients of a ^ b
std::map<std::pair<int, int>, Scalar> wedge_coeffs(const Vec& a, const Vec& b) {
    std::map<std::pair<int, int>, Scalar> w;
    int n = (int)a.size();
    for (int k = 0; k < n; ++k)
        for (int l = k + 1; l < n; ++l) {
            Scalar c = a[k] * b[l] - a[l] * b[k];
            if (!c.is_zero()) w[{k, l}] = c;
        }
    return w;
}

std::map<std::pair<int, int>, Scalar> wedge_neg(
    const std::map<std::pair<int, int>, Scalar>& w) {
    auto r = w;
    for (auto& [k, v] : r) v = -v;
    return r;
}

bool mat_lex_leq(const Mat& A, const Mat& B) {
    MatStructuralLess less;
    return !less(B, A);
}

}  // namespace

std::vector<TwoRotation> two_rotations(const CoxeterGroup& G) {
    const auto& S = G.reflections();
    std::map<int, TwoRotation> rot;
    for (int s : S)
        for (int t : S) {
            if (s == t) continue;
            int p = G.mul(s, t);
            auto& r = rot[p];
            if (r.elem < 0) {
                r.elem = p;
                r.order = G.element_order(p);
                r.proper = r.order > 2;
            }
            r.decomps.emplace_back(s, t);
        }
    // orient w per inverse pair: primary = matrix-lex smaller of {rho, rho^{-1}}
    const RootSystem& R = G.roots();
    for (auto& [elem, r] : rot) {
        if (!r.proper || !r.w.empty()) continue;
        int j = G.inv(elem);
        int prim = mat_lex_leq(G.mat(elem), G.mat(j)) ? elem : j;
        int other = (prim == elem) ? j : elem;
        auto& rp = rot.at(prim);
        auto dec = rp.decomps;
        std::sort(dec.begin(), dec.end(), [&](const auto& x, const auto& y) {
            const Vec& ax = R.roots[G.positive_root_of(x.first)];
            const Vec& ay = R.roots[G.positive_root_of(y.first)];
            if (!veq(ax, ay)) return vlex_less(ax, ay);
            return vlex_less(R.roots[G.positive_root_of(x.second)],
                             R.roots[G.positive_root_of(y.second)]);
        });
        const Vec& a = R.roots[G.positive_root_of(dec[0].first)];
        const Vec& b = R.roots[G.positive_root_of(dec[0].second)];
        rp.w = wedge_coeffs(a, b);
        rot.at(other).w = wedge_neg(rp.w);
    }
    std::vector<TwoRotation> out;
    for (auto& [elem, r] : rot) out.push_back(std::move(r));
    std::sort(out.begin(), out.end(),
              [](const TwoRotation& x, const TwoRotation& y) { return x.elem < y.elem; });
    return out;
}

const TwoRotation* find_rotation(const std::vector<TwoRotation>& rots, int elem) {
    for (const auto& r : rots)
        if (r.elem == elem) return &r;
    return nullptr;
}

Rank2Classification classify_rank2(const RootSystem& R, const CoxeterGroup& G,
                                   const TwoRotation& rot) {
    Rank2Classification out;
    if (!rot.proper) {
        out.kind = Rank2Kind::Orthogonal;
    }
    // plane of the rotation: span of the roots of any decomposition
    const Vec& a = R.roots[G.positive_root_of(rot.decomps[0].first)];
    const Vec& b = R.roots[G.positive_root_of(rot.decomps[0].second)];
    std::vector<Vec> plane_roots;
    for (const auto& v : R.roots) {
        if (rank_of({a, b, v}) == 2) plane_roots.push_back(v);
    }
    out.plane_root_count = (int)plane_roots.size();
    if (rot.proper) {
        switch (out.plane_root_count) {
            case 6: out.kind = Rank2Kind::Hexagonal; break;
            case 8: out.kind = Rank2Kind::Octagonal; break;
            case 12: out.kind = Rank2Kind::Dodecagonal; break;
            default: out.kind = Rank2Kind::Other; break;
        }
    }
    // does some ordering of some positive half form an arithmetic-type
    // sequence? positive halves of a planar system are exactly the blocks of
    // m angularly consecutive roots
    auto cyc = plane_roots_cyclic(plane_roots, a, b);
    size_t m = cyc.size() / 2;
    if (m >= 3 && m <= 6) {
        for (size_t start = 0; start < cyc.size() && !out.arithmetic_half; ++start) {
            std::vector<Vec> half;
            for (size_t i = 0; i < m; ++i) half.push_back(cyc[(start + i) % cyc.size()]);
            std::sort(half.begin(), half.end(), vlex_less);
            std::vector<int> perm(m);
            for (size_t i = 0; i < m; ++i) perm[i] = (int)i;
            do {
                std::vector<Vec> seq;
                for (int i : perm) seq.push_back(half[i]);
                if (arithmetic_type_check(seq)) {
                    out.arithmetic_half = true;
                    break;
                }
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
    }
    return out;
}

std::string rank2_kind_name(Rank2Kind k) {
    switch (k) {
        case Rank2Kind::Orthogonal: return "orthogonal";
        case Rank2Kind::Hexagonal: return "hexagonal";
        case Rank2Kind::Octagonal: return "octagonal";
        case Rank2Kind::Dodecagonal: return "dodecagonal";
        default: return "other";
    }
}

bool arithmetic_type_check(const std::vector<Vec>& seq) {
    if (seq.size() < 3)
        throw std::invalid_argument("arithmetic_type_check: need at least 3 vectors");
    for (size_t k = 1; k + 1 < seq.size(); ++k)
        if (!veq(vsub(seq[k], seq[k + 1]), seq[0])) return false;
    return true;
}

std::pair<Scalar, Scalar> planar_coords(const Vec& a, const Vec& b, const Vec& v) {
    Scalar g00 = dot(a, a), g01 = dot(a, b), g11 = dot(b, b);
    Scalar det = g00 * g11 - g01 * g01;
    Scalar r0 = dot(v, a), r1 = dot(v, b);
    Scalar x = (r0 * g11 - r1 * g01) / det;
    Scalar y = (g00 * r1 - g01 * r0) / det;
    return {x, y};
}

std::vector<Vec> plane_roots_cyclic(const std::vector<Vec>& vs, const Vec& a, const Vec& b) {
    struct P {
        Vec v;
        Scalar x, y;
    };
    std::vector<P> ps;
    for (const auto& v : vs) {
        auto [x, y] = planar_coords(a, b, v);
        ps.push_back({v, x, y});
    }
    auto half = [](const P& p) {
        int sy = p.y.sign();
        if (sy > 0) return 0;
        if (sy < 0) return 1;
        return p.x.sign() > 0 ? 0 : 1;
    };
    std::sort(ps.begin(), ps.end(), [&](const P& p, const P& q) {
        int hp = half(p), hq = half(q);
        if (hp != hq) return hp < hq;
        return (p.x * q.y - q.x * p.y).sign() > 0;
    });
    std::vector<Vec> out;
    for (auto& p : ps) out.push_back(std::move(p.v));
    return out;
}

}  // namespace dunkl
