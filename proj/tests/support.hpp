#pragma once

#include <random>

#include "xalg/functors.hpp"
#include "xalg/higher.hpp"

namespace xalg::testing {

// --- fixtures -------------------------------------------------------------
//
// FIX-A0: the Lie algebra aff(1), basis (h, e) with [h, e] = e.
// FIX-A1: dg Lie, V0 = span{h, e}, V1 = span{v}, dv = e, [h, v] = v,
//         [e, v] = 0.
// FIX-ASSOC: dg associative, V0 = span{u} with u u = u, V1 = span{m},
//         dm = u, m u = u m = m.
// FIX-BAD: associative crossed module with X = span{x}, x x = x, B = 0,
//         zero action, d = 0; violates the Peiffer identity at (x, x).

inline PAlgebra fix_a0() {
    PAlgebra a;
    a.dim = 2;
    BilinearMap bracket(2, 2, 2);
    bracket.at(1, 0, 1) = Rational(1);   // [h,e] = e
    bracket.at(1, 1, 0) = Rational(-1);  // [e,h] = -e
    a.mult["bracket"] = std::move(bracket);
    return a;
}

/// FIX-A0 as a dg Lie algebra concentrated in degree 0 (V1 = 0).
inline DgPAlgebra1 fix_a0_dg() {
    DgPAlgebra1 g;
    g.carrier = Complex01(0, 2, Matrix(2, 0));
    DgMult m;
    m.m00 = fix_a0().mult.at("bracket");
    m.m10 = BilinearMap(0, 2, 0);
    m.m01 = BilinearMap(2, 0, 0);
    g.mult["bracket"] = std::move(m);
    return g;
}

inline DgPAlgebra1 fix_a1() {
    DgPAlgebra1 a;
    Matrix d(2, 1);
    d.at(1, 0) = Rational(1);  // dv = e
    a.carrier = Complex01(1, 2, std::move(d));
    DgMult m;
    m.m00 = fix_a0().mult.at("bracket");
    m.m10 = BilinearMap(1, 2, 1);
    m.m10.at(0, 0, 0) = Rational(-1);  // [v,h] = -v
    m.m01 = BilinearMap(2, 1, 1);
    m.m01.at(0, 0, 0) = Rational(1);   // [h,v] = v
    a.mult["bracket"] = std::move(m);
    return a;
}

inline DgPAlgebra1 fix_assoc() {
    DgPAlgebra1 a;
    Matrix d(1, 1);
    d.at(0, 0) = Rational(1);  // dm = u
    a.carrier = Complex01(1, 1, std::move(d));
    DgMult m;
    m.m00 = BilinearMap(1, 1, 1);
    m.m00.at(0, 0, 0) = Rational(1);  // u u = u
    m.m10 = BilinearMap(1, 1, 1);
    m.m10.at(0, 0, 0) = Rational(1);  // m u = m
    m.m01 = BilinearMap(1, 1, 1);
    m.m01.at(0, 0, 0) = Rational(1);  // u m = m
    a.mult["mul"] = std::move(m);
    return a;
}

inline CrossedModule fix_bad() {
    CrossedModule cm;
    cm.x.dim = 1;
    BilinearMap mx(1, 1, 1);
    mx.at(0, 0, 0) = Rational(1);  // x x = x
    cm.x.mult["mul"] = std::move(mx);
    cm.b = PAlgebra::zero(builtin_presentation("assoc"), 0);
    cm.act_left["mul"] = BilinearMap(0, 1, 1);
    cm.act_right["mul"] = BilinearMap(1, 0, 1);
    cm.d = Matrix(0, 1);
    return cm;
}

/// The ideal extension span{e} inside aff(1): action by the ambient
/// bracket, d the inclusion.
inline CrossedModule ideal_xmod_lie() {
    CrossedModule cm;
    cm.x.dim = 1;
    cm.x.mult["bracket"] = BilinearMap(1, 1, 1);  // [e,e] = 0
    cm.b = fix_a0();
    BilinearMap al(2, 1, 1);
    al.at(0, 0, 0) = Rational(1);  // [h, e] = e
    BilinearMap ar(1, 2, 1);
    ar.at(0, 0, 0) = Rational(-1);  // [e, h] = -e
    cm.act_left["bracket"] = std::move(al);
    cm.act_right["bracket"] = std::move(ar);
    cm.d = Matrix(2, 1);
    cm.d.at(1, 0) = Rational(1);
    return cm;
}

/// aff(1) acting on itself with d = id (the whole algebra as an ideal).
inline CrossedModule full_ideal_lie() {
    CrossedModule cm;
    cm.x = fix_a0();
    cm.b = fix_a0();
    BilinearMap al(2, 2, 2), ar(2, 2, 2);
    const BilinearMap& br = cm.b.mult.at("bracket");
    for (int k = 0; k < 2; ++k)
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                al.at(k, i, j) = br.at(k, i, j);
                ar.at(k, i, j) = br.at(k, i, j);
            }
    cm.act_left["bracket"] = std::move(al);
    cm.act_right["bracket"] = std::move(ar);
    cm.d = Matrix::identity(2);
    return cm;
}

/// Weight module: B = aff(1), X = span{x} abelian, [h, x] = w x,
/// [e, x] = 0, d = 0.
inline CrossedModule weight_module_lie(const Rational& w) {
    CrossedModule cm;
    cm.x.dim = 1;
    cm.x.mult["bracket"] = BilinearMap(1, 1, 1);
    cm.b = fix_a0();
    BilinearMap al(2, 1, 1), ar(1, 2, 1);
    al.at(0, 0, 0) = w;
    ar.at(0, 0, 0) = -w;
    cm.act_left["bracket"] = std::move(al);
    cm.act_right["bracket"] = std::move(ar);
    cm.d = Matrix(2, 1);
    return cm;
}

/// Dual numbers k[n]/(n^2) with the nilpotent ideal span{n}.
inline CrossedModule ideal_xmod_assoc() {
    CrossedModule cm;
    cm.x.dim = 1;
    cm.x.mult["mul"] = BilinearMap(1, 1, 1);  // n n = 0
    cm.b.dim = 2;                             // basis (u, n)
    BilinearMap mb(2, 2, 2);
    mb.at(0, 0, 0) = Rational(1);  // u u = u
    mb.at(1, 0, 1) = Rational(1);  // u n = n
    mb.at(1, 1, 0) = Rational(1);  // n u = n
    cm.b.mult["mul"] = std::move(mb);
    BilinearMap al(2, 1, 1), ar(1, 2, 1);
    al.at(0, 0, 0) = Rational(1);  // u . n = n
    ar.at(0, 0, 0) = Rational(1);  // n . u = n
    cm.act_left["mul"] = std::move(al);
    cm.act_right["mul"] = std::move(ar);
    cm.d = Matrix(2, 1);
    cm.d.at(1, 0) = Rational(1);
    return cm;
}

/// One-dimensional idempotent algebra acting on itself, d = id.
inline CrossedModule full_ideal_comm() {
    CrossedModule cm;
    cm.x.dim = 1;
    BilinearMap m(1, 1, 1);
    m.at(0, 0, 0) = Rational(1);
    cm.x.mult["mul"] = m;
    cm.b.dim = 1;
    cm.b.mult["mul"] = m;
    cm.act_left["mul"] = m;
    cm.act_right["mul"] = m;
    cm.d = Matrix::identity(1);
    return cm;
}

/// aff(1) as a (right) Leibniz algebra with its ideal span{e}.
inline CrossedModule ideal_xmod_leibniz() {
    CrossedModule cm = ideal_xmod_lie();
    CrossedModule out;
    out.x.dim = cm.x.dim;
    out.x.mult["bracket"] = cm.x.mult.at("bracket");
    out.b.dim = cm.b.dim;
    out.b.mult["bracket"] = cm.b.mult.at("bracket");
    out.act_left["bracket"] = cm.act_left.at("bracket");
    out.act_right["bracket"] = cm.act_right.at("bracket");
    out.d = cm.d;
    return out;
}

/// Reflexive graph with s = t and a non-abelian kernel: E = aff(1) (+)
/// aff(1) with the product bracket, s = t the second projection, i the
/// diagonal-zero section. Fails the Cat1 condition.
inline Cat1Algebra invalid_cat1_lie() {
    Cat1Algebra c;
    c.e.dim = 4;  // basis h1, e1, h2, e2
    BilinearMap m(4, 4, 4);
    m.at(1, 0, 1) = Rational(1);
    m.at(1, 1, 0) = Rational(-1);
    m.at(3, 2, 3) = Rational(1);
    m.at(3, 3, 2) = Rational(-1);
    c.e.mult["bracket"] = std::move(m);
    c.b = fix_a0();
    c.s = Matrix(2, 4);
    c.s.at(0, 2) = Rational(1);
    c.s.at(1, 3) = Rational(1);
    c.t = c.s;
    c.i = Matrix(4, 2);
    c.i.at(2, 0) = Rational(1);
    c.i.at(3, 1) = Rational(1);
    return c;
}

// --- pseudo-random valid instances ----------------------------------------

struct Rng {
    std::mt19937_64 eng;
    explicit Rng(uint64_t seed) : eng(seed) {}
    int uniform(int lo, int hi) {  // inclusive
        return int(std::uniform_int_distribution<long>(lo, hi)(eng));
    }
};

/// Invertible rational matrix built from elementary row operations.
inline Matrix random_invertible(Rng& rng, int n) {
    Matrix m = Matrix::identity(n);
    if (n == 0) return m;
    int ops = 3 + rng.uniform(0, 3);
    for (int k = 0; k < ops; ++k) {
        int kind = rng.uniform(0, 2);
        int i = rng.uniform(0, n - 1), j = rng.uniform(0, n - 1);
        if (kind == 0 && i != j) {
            static const int coeffs[] = {-2, -1, 1, 2};
            Rational c(coeffs[rng.uniform(0, 3)]);
            for (int col = 0; col < n; ++col) m.at(i, col) += c * m.at(j, col);
        } else if (kind == 1 && i != j) {
            for (int col = 0; col < n; ++col) std::swap(m.at(i, col), m.at(j, col));
        } else {
            static const Rational scales[] = {Rational(-1), Rational(2), Rational(1, 2)};
            Rational c = scales[size_t(rng.uniform(0, 2))];
            for (int col = 0; col < n; ++col) m.at(i, col) *= c;
        }
    }
    return m;
}

inline PAlgebra conjugate(const PAlgebra& a, const Matrix& g, const Matrix& ginv) {
    PAlgebra out;
    out.dim = a.dim;
    for (const auto& [gen, m] : a.mult) {
        BilinearMap t(a.dim, a.dim, a.dim);
        for (int i = 0; i < a.dim; ++i)
            for (int j = 0; j < a.dim; ++j) {
                Vec prod = ginv * m.eval(g.col(i), g.col(j));
                for (int k = 0; k < a.dim; ++k) t.at(k, i, j) = prod[size_t(k)];
            }
        out.mult[gen] = std::move(t);
    }
    return out;
}

/// Transport a crossed module along basis changes S of X and T of B.
inline CrossedModule conjugate(const CrossedModule& cm, const Matrix& s, const Matrix& t) {
    Matrix sinv = s.inverse(), tinv = t.inverse();
    CrossedModule out;
    out.x = conjugate(cm.x, s, sinv);
    out.b = conjugate(cm.b, t, tinv);
    for (const auto& [gen, m] : cm.act_left) {
        BilinearMap al(cm.b.dim, cm.x.dim, cm.x.dim);
        for (int i = 0; i < cm.b.dim; ++i)
            for (int j = 0; j < cm.x.dim; ++j) {
                Vec prod = sinv * m.eval(t.col(i), s.col(j));
                for (int k = 0; k < cm.x.dim; ++k) al.at(k, i, j) = prod[size_t(k)];
            }
        out.act_left[gen] = std::move(al);
    }
    for (const auto& [gen, m] : cm.act_right) {
        BilinearMap ar(cm.x.dim, cm.b.dim, cm.x.dim);
        for (int i = 0; i < cm.x.dim; ++i)
            for (int j = 0; j < cm.b.dim; ++j) {
                Vec prod = sinv * m.eval(s.col(i), t.col(j));
                for (int k = 0; k < cm.x.dim; ++k) ar.at(k, i, j) = prod[size_t(k)];
            }
        out.act_right[gen] = std::move(ar);
    }
    out.d = tinv * cm.d * s;
    return out;
}

struct RandomInstance {
    std::string theory;
    CrossedModule cm;
};

/// Valid crossed modules with dims <= 3: fixed ideal extensions and weight
/// modules with randomized actions, transported along random basis changes.
inline std::vector<RandomInstance> random_valid_xmods(int count, uint64_t seed) {
    Rng rng(seed);
    std::vector<RandomInstance> out;
    for (int k = 0; k < count; ++k) {
        RandomInstance inst;
        switch (k % 6) {
            case 0: inst = {"lie", ideal_xmod_lie()}; break;
            case 1: inst = {"lie", full_ideal_lie()}; break;
            case 2: {
                Rational w(rng.uniform(-3, 3), 1 + rng.uniform(0, 2));
                inst = {"lie", weight_module_lie(w)};
                break;
            }
            case 3: inst = {"assoc", ideal_xmod_assoc()}; break;
            case 4: inst = {"comm", full_ideal_comm()}; break;
            default: inst = {"leibniz", ideal_xmod_leibniz()}; break;
        }
        Matrix s = random_invertible(rng, inst.cm.x.dim);
        Matrix t = random_invertible(rng, inst.cm.b.dim);
        inst.cm = conjugate(inst.cm, s, t);
        out.push_back(std::move(inst));
    }
    return out;
}

/// Peiffer-violating precrossed modules: a non-trivial algebra X over
/// B = 0 is always precrossed, and Peiffer forces mu_X = 0.
inline std::vector<RandomInstance> random_peiffer_violations(int count, uint64_t seed) {
    Rng rng(seed);
    std::vector<RandomInstance> out;
    for (int k = 0; k < count; ++k) {
        RandomInstance inst;
        if (k % 2 == 0) {
            inst.theory = "lie";
            inst.cm.x = fix_a0();
            inst.cm.b = PAlgebra::zero(builtin_presentation("lie"), 0);
            inst.cm.act_left["bracket"] = BilinearMap(0, 2, 2);
            inst.cm.act_right["bracket"] = BilinearMap(2, 0, 2);
            inst.cm.d = Matrix(0, 2);
        } else {
            inst.theory = "assoc";
            inst.cm = fix_bad();
        }
        Matrix s = random_invertible(rng, inst.cm.x.dim);
        inst.cm = conjugate(inst.cm, s, Matrix::identity(0));
        out.push_back(std::move(inst));
    }
    return out;
}

}  // namespace xalg::testing
