#include "dunkl/rootsystem.hpp"

#include <algorithm>
#include <regex>
#include <sstream>

#include "dunkl/coxeter.hpp"

namespace dunkl {

namespace {

std::string vec_str(const Vec& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].str();
    os << ")";
    return os.str();
}

void push_pm(std::vector<Vec>& roots, const Vec& v) {
    roots.push_back(v);
    roots.push_back(vneg(v));
}

std::vector<Vec> roots_A(int n) {  // in R^{n+1}: e_i - e_j
    std::vector<Vec> r;
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
            if (i == j) continue;
            Vec v(n + 1);
            v[i] = Scalar(1);
            v[j] = Scalar(-1);
            r.push_back(v);
        }
    return r;
}

std::vector<Vec> roots_B(int n) {
    std::vector<Vec> r;
    for (int i = 0; i < n; ++i) {
        Vec v(n);
        v[i] = Scalar(1);
        push_pm(r, v);
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int s : {1, -1}) {
                Vec v(n);
                v[i] = Scalar(1);
                v[j] = Scalar(s);
                push_pm(r, v);
            }
    return r;
}

std::vector<Vec> roots_C(int n) {
    std::vector<Vec> r;
    for (int i = 0; i < n; ++i) {
        Vec v(n);
        v[i] = Scalar(2);
        push_pm(r, v);
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int s : {1, -1}) {
                Vec v(n);
                v[i] = Scalar(1);
                v[j] = Scalar(s);
                push_pm(r, v);
            }
    return r;
}

std::vector<Vec> roots_D(int n) {
    std::vector<Vec> r;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int s : {1, -1}) {
                Vec v(n);
                v[i] = Scalar(1);
                v[j] = Scalar(s);
                push_pm(r, v);
            }
    return r;
}

std::vector<Vec> roots_G2() {  // in the plane x1+x2+x3 = 0
    std::vector<Vec> r;
    push_pm(r, vec_from_ints({1, -1, 0}));
    push_pm(r, vec_from_ints({0, 1, -1}));
    push_pm(r, vec_from_ints({1, 0, -1}));
    push_pm(r, vec_from_ints({2, -1, -1}));
    push_pm(r, vec_from_ints({-1, 2, -1}));
    push_pm(r, vec_from_ints({-1, -1, 2}));
    return r;
}

std::vector<Vec> roots_H3() {
    std::vector<Vec> r;
    for (int i = 0; i < 3; ++i) {
        Vec v(3);
        v[i] = Scalar(2);
        push_pm(r, v);
    }
    Scalar phi = Scalar::phi();
    Scalar phinv = phi - Scalar(1);  // 1/phi = phi - 1
    Scalar base[3] = {Scalar(1), phi, phinv};
    for (int cyc = 0; cyc < 3; ++cyc) {
        for (int s0 : {1, -1})
            for (int s1 : {1, -1})
                for (int s2 : {1, -1}) {
                    Vec v(3);
                    v[0] = Scalar(s0) * base[cyc % 3];
                    v[1] = Scalar(s1) * base[(cyc + 1) % 3];
                    v[2] = Scalar(s2) * base[(cyc + 2) % 3];
                    r.push_back(v);
                }
    }
    return r;
}

// I2(5): the planar subsystem of H3 orthogonal to the 5-fold axis (1,0,phi)
std::vector<Vec> roots_I25() {
    Vec axis = {Scalar(1), Scalar(0), Scalar::phi()};
    std::vector<Vec> r;
    for (const Vec& v : roots_H3())
        if (dot(v, axis).is_zero()) r.push_back(v);
    return r;
}

}  // namespace

int RootSystem::root_index(const Vec& v) const {
    for (size_t i = 0; i < roots.size(); ++i)
        if (veq(roots[i], v)) return (int)i;
    return -1;
}

RootSystem build_custom(const std::string& name, std::vector<Vec> roots) {
    RootSystem R;
    R.name = name;
    R.n = roots.empty() ? 0 : (int)roots[0].size();
    R.roots = std::move(roots);
    validate_root_system(R);
    return R;
}

RootSystem build_standard(const std::string& name) {
    std::smatch m;
    std::vector<Vec> roots;
    int n = 0;
    if (name == "empty") {
        RootSystem R;
        R.name = name;
        R.n = 1;
        return R;
    } else if (std::regex_match(name, m, std::regex("A_?([0-9]+)"))) {
        int k = std::stoi(m[1]);
        if (k < 1) throw std::invalid_argument("A_n needs n >= 1");
        if (k == 1) {
            roots = {Vec{Scalar(1)}, Vec{Scalar(-1)}};
            n = 1;
        } else {
            roots = roots_A(k);
            n = k + 1;
        }
    } else if (std::regex_match(name, m, std::regex("B_?([0-9]+)"))) {
        int k = std::stoi(m[1]);
        if (k < 2) throw std::invalid_argument("B_n needs n >= 2");
        roots = roots_B(k);
        n = k;
    } else if (std::regex_match(name, m, std::regex("C_?([0-9]+)"))) {
        int k = std::stoi(m[1]);
        if (k < 2) throw std::invalid_argument("C_n needs n >= 2");
        roots = roots_C(k);
        n = k;
    } else if (std::regex_match(name, m, std::regex("D_?([0-9]+)"))) {
        int k = std::stoi(m[1]);
        if (k < 2) throw std::invalid_argument("D_n needs n >= 2");
        roots = roots_D(k);
        n = k;
    } else if (name == "G2" || name == "G_2") {
        roots = roots_G2();
        n = 3;
    } else if (name == "H3" || name == "H_3") {
        roots = roots_H3();
        n = 3;
    } else if (std::regex_match(name, m, std::regex("I_?2\\(([0-9]+)\\)"))) {
        int k = std::stoi(m[1]);
        switch (k) {
            case 3: roots = roots_A(2); n = 3; break;
            case 4: roots = roots_B(2); n = 2; break;
            case 5: roots = roots_I25(); n = 3; break;
            case 6: roots = roots_G2(); n = 3; break;
            default:
                throw std::invalid_argument(
                    "I2(m) supported for m in {3,4,5,6} only (exact scalar fields)");
        }
    } else {
        throw std::invalid_argument("unknown root system: " + name);
    }
    RootSystem R;
    R.name = name;
    R.n = n;
    R.roots = std::move(roots);
    validate_root_system(R);
    return R;
}

std::vector<std::string> catalog_names() {
    return {"A1", "A2", "A3", "B2", "B3", "C3", "D3", "D4", "G2", "I2(3)", "I2(4)", "I2(5)", "I2(6)", "H3"};
}

void validate_root_system(const RootSystem& R) {
    for (const auto& v : R.roots) {
        if ((int)v.size() != R.n)
            throw InvalidRootSystem("root with wrong dimension " + vec_str(v));
        bool allzero = true;
        for (const auto& x : v) allzero = allzero && x.is_zero();
        if (allzero) throw InvalidRootSystem("zero vector listed as root");
    }
    for (size_t i = 0; i < R.roots.size(); ++i)
        for (size_t j = i + 1; j < R.roots.size(); ++j)
            if (veq(R.roots[i], R.roots[j]))
                throw InvalidRootSystem("duplicate root " + vec_str(R.roots[i]));
    for (const auto& v : R.roots) {
        if (!R.contains(vneg(v)))
            throw InvalidRootSystem("axiom 1 (negation) fails at " + vec_str(v));
    }
    // axiom 2: r alpha in R forces r = +-1; with exact scalars it suffices to
    // find proportional pairs and check the ratio
    for (const auto& v : R.roots)
        for (const auto& w : R.roots) {
            // proportional? w = r v for scalar r
            int piv = -1;
            for (int k = 0; k < R.n; ++k)
                if (!v[k].is_zero()) { piv = k; break; }
            Scalar r = w[piv] / v[piv];
            bool prop = true;
            for (int k = 0; k < R.n; ++k)
                if (w[k] != r * v[k]) { prop = false; break; }
            if (prop && !r.is_zero() && r != Scalar(1) && r != Scalar(-1))
                throw InvalidRootSystem("axiom 2 (reduced) fails at " + vec_str(v) + " ~ " +
                                        vec_str(w));
        }
    for (const auto& a : R.roots) {
        Mat s = reflection_matrix(a);
        for (const auto& b : R.roots) {
            Vec img = vec_mat(b, s);
            if (!R.contains(img))
                throw InvalidRootSystem("axiom 3 (reflection closure) fails: " + vec_str(b) +
                                        " under sigma_" + vec_str(a) + " -> " + vec_str(img));
        }
    }
}

bool normalized_norms(const RootSystem& R) {
    for (const auto& v : R.roots)
        if (dot(v, v) != Scalar(2)) return false;
    return true;
}

bool PositiveSystem::is_positive(const Vec& v) const {
    if (order_vector) return dot(v, *order_vector).sign() > 0;
    return vlex_positive(v);
}

PositiveSystem positive_subsystem(const RootSystem& R, const Vec& w) {
    PositiveSystem P;
    P.R = &R;
    P.order_vector = w;
    for (size_t i = 0; i < R.roots.size(); ++i) {
        int s = dot(R.roots[i], w).sign();
        if (s == 0)
            throw DegenerateOrderVector("order vector orthogonal to root " +
                                        vec_str(R.roots[i]));
        if (s > 0) P.positives.push_back((int)i);
    }
    return P;
}

PositiveSystem positive_lex(const RootSystem& R) {
    PositiveSystem P;
    P.R = &R;
    for (size_t i = 0; i < R.roots.size(); ++i)
        if (vlex_positive(R.roots[i])) P.positives.push_back((int)i);
    return P;
}

Polynomial Multiplicity::kappa_poly(int root_index, const Space& sp) const {
    int orb = orbit_of.at(root_index);
    if (symbolic) return Polynomial::variable(sp.dim(), sp.nsp + orb);
    return Polynomial::constant(sp.dim(), values.at(orb));
}

Scalar Multiplicity::kappa_value(int root_index) const {
    if (symbolic) throw std::logic_error("kappa_value on symbolic multiplicity");
    return values.at(orbit_of.at(root_index));
}

std::vector<std::vector<int>> root_orbits(const RootSystem& R, const CoxeterGroup& G) {
    std::vector<std::vector<int>> orbits;
    std::vector<int> seen(R.roots.size(), 0);
    for (size_t i = 0; i < R.roots.size(); ++i) {
        if (seen[i]) continue;
        std::vector<int> orb;
        for (const Mat& g : G.elements()) {
            int j = R.root_index(vec_mat(R.roots[i], g));
            if (j < 0) throw std::logic_error("root orbit leaves the system");
            if (!seen[j]) {
                seen[j] = 1;
                orb.push_back(j);
            }
        }
        std::sort(orb.begin(), orb.end());
        orbits.push_back(std::move(orb));
    }
    return orbits;
}

Multiplicity orbits_and_multiplicity(const RootSystem& R, const CoxeterGroup& G) {
    Multiplicity k;
    auto orbits = root_orbits(R, G);
    k.num_orbits = (int)orbits.size();
    k.symbolic = true;
    k.orbit_of.assign(R.roots.size(), -1);
    for (size_t o = 0; o < orbits.size(); ++o)
        for (int idx : orbits[o]) k.orbit_of[idx] = (int)o;
    return k;
}

Multiplicity orbits_and_multiplicity(const RootSystem& R, const CoxeterGroup& G,
                                     const std::vector<Scalar>& per_orbit_values) {
    Multiplicity k = orbits_and_multiplicity(R, G);
    if ((int)per_orbit_values.size() != k.num_orbits)
        throw std::invalid_argument("expected one multiplicity value per orbit (" +
                                    std::to_string(k.num_orbits) + ")");
    k.symbolic = false;
    k.values = per_orbit_values;
    return k;
}

std::vector<Vec> essential_basis(const RootSystem& R) {
    std::vector<Vec> pos;
    for (const auto& v : R.roots)
        if (vlex_positive(v)) pos.push_back(v);
    std::sort(pos.begin(), pos.end(), vlex_less);
    std::vector<Vec> basis;
    for (const auto& v : pos) {
        auto cand = basis;
        cand.push_back(v);
        if (rank_of(cand) > (int)basis.size()) basis.push_back(v);
    }
    return basis;
}

}  // namespace dunkl
