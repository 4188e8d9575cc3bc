#include "xalg/structures.hpp"

namespace xalg {

void check_derivation(const OperadPresentation& pres, const MultTable& mult,
                      const GradedDifferential& diff, CheckResult& out) {
    for (const auto& gen : pres.generators)
        for (const auto& [a, na] : mult.dims())
            for (const auto& [b, nb] : mult.dims()) {
                Deg target = a + b + diff.delta;
                if (!mult.carries(target) || mult.dim(target) == 0 || na == 0 || nb == 0)
                    continue;
                int sign = diff.delta.pairing(a) ? -1 : 1;
                const Matrix* da = diff.map_at(a);
                const Matrix* db = diff.map_at(b);
                const Matrix* dab = diff.map_at(a + b);
                for (int i = 0; i < na; ++i)
                    for (int j = 0; j < nb; ++j) {
                        Vec ei = basis_vec(na, i), ej = basis_vec(nb, j);
                        Vec defect = zero_vec(mult.dim(target));
                        if (dab && mult.carries(a + b) && mult.dim(a + b) > 0)
                            defect = (*dab) * mult.eval(gen.name, a, b, ei, ej);
                        if (da)
                            defect = sub(defect, mult.eval(gen.name, a + diff.delta, b,
                                                           (*da) * ei, ej));
                        if (db)
                            axpy(defect, Rational(-sign),
                                 mult.eval(gen.name, a, b + diff.delta, ei, (*db) * ej));
                        if (!is_zero(defect)) {
                            out.pass = false;
                            out.witnesses.push_back(Witness{out.name,
                                                            diff.name + "-" + gen.name,
                                                            a.str() + "," + b.str(),
                                                            {i, j}, defect});
                        }
                    }
            }
}

MultTable PAlgebra::table() const {
    MultTable t;
    t.set_dim(Deg(0), dim);
    for (const auto& [gen, m] : mult) t.set(gen, Deg(0), Deg(0), m);
    return t;
}

Vec PAlgebra::eval(const std::string& gen, int i, int j) const {
    auto it = mult.find(gen);
    if (it == mult.end()) throw MissingComponent("missing multiplication for " + gen);
    return it->second.eval_basis(i, j);
}

Vec PAlgebra::eval(const std::string& gen, const Vec& u, const Vec& v) const {
    auto it = mult.find(gen);
    if (it == mult.end()) throw MissingComponent("missing multiplication for " + gen);
    return it->second.eval(u, v);
}

PAlgebra PAlgebra::zero(const OperadPresentation& pres, int dim) {
    PAlgebra a;
    a.dim = dim;
    for (const auto& g : pres.generators) a.mult[g.name] = BilinearMap(dim, dim, dim);
    return a;
}

MultTable DgPAlgebra1::table() const {
    MultTable t;
    t.set_dim(Deg(0), carrier.dim0);
    t.set_dim(Deg(1), carrier.dim1);
    for (const auto& [gen, m] : mult) {
        t.set(gen, Deg(0), Deg(0), m.m00);
        t.set(gen, Deg(1), Deg(0), m.m10);
        t.set(gen, Deg(0), Deg(1), m.m01);
    }
    return t;
}

GradedDifferential DgPAlgebra1::differential() const {
    GradedDifferential d;
    d.name = "d";
    d.delta = Deg(-1);
    d.maps[Deg(1)] = carrier.d;
    return d;
}

const BilinearMap& CrossedModule::left(const std::string& gen) const {
    auto it = act_left.find(gen);
    if (it == act_left.end()) throw MissingComponent("missing left action for " + gen);
    return it->second;
}

const BilinearMap& CrossedModule::right(const std::string& gen) const {
    auto it = act_right.find(gen);
    if (it == act_right.end()) throw MissingComponent("missing right action for " + gen);
    return it->second;
}

Report validate_algebra(const OperadPresentation& pres, const PAlgebra& a) {
    pres.check_well_formed();
    for (const auto& g : pres.generators)
        if (!a.mult.count(g.name))
            throw MissingComponent("algebra lacks multiplication for generator " + g.name);
    MultTable t = a.table();
    Report report;
    check_relations(pres, t, report.open("relations"));
    check_symmetry(pres, t, report.open("symmetry"));
    return report;
}

Report validate_dg1(const OperadPresentation& pres, const DgPAlgebra1& a) {
    pres.check_well_formed();
    MultTable t = a.table();
    Report report;
    check_relations(pres, t, report.open("relations"));
    check_derivation(pres, t, a.differential(), report.open("derivation"));
    check_symmetry(pres, t, report.open("symmetry"));
    return report;
}

PAlgebra action_block_algebra(const OperadPresentation& pres, const CrossedModule& cm) {
    int nx = cm.x.dim, nb = cm.b.dim, n = nx + nb;
    PAlgebra e;
    e.dim = n;
    for (const auto& g : pres.generators) {
        const BilinearMap& mx = cm.x.mult.at(g.name);
        const BilinearMap& mb = cm.b.mult.at(g.name);
        const BilinearMap& al = cm.left(g.name);
        const BilinearMap& ar = cm.right(g.name);
        BilinearMap m(n, n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Vec prod;
                bool to_x = true;
                if (i < nx && j < nx) prod = mx.eval_basis(i, j);
                else if (i < nx) prod = ar.eval_basis(i, j - nx);
                else if (j < nx) prod = al.eval_basis(i - nx, j);
                else { prod = mb.eval_basis(i - nx, j - nx); to_x = false; }
                for (int k = 0; k < int(prod.size()); ++k)
                    m.at(to_x ? k : nx + k, i, j) = prod[size_t(k)];
            }
        e.mult[g.name] = std::move(m);
    }
    return e;
}

void append_morphism_check(const OperadPresentation& pres, const Matrix& f, const PAlgebra& src,
                           const PAlgebra& dst, CheckResult& out) {
    if (f.rows() != dst.dim || f.cols() != src.dim)
        throw ShapeError("morphism matrix shape mismatch");
    for (const auto& g : pres.generators)
        for (int i = 0; i < src.dim; ++i)
            for (int j = 0; j < src.dim; ++j) {
                Vec lhs = f * src.eval(g.name, i, j);
                Vec rhs = dst.eval(g.name, f.col(i), f.col(j));
                Vec defect = sub(lhs, rhs);
                if (!is_zero(defect)) {
                    out.pass = false;
                    out.witnesses.push_back(Witness{out.name, g.name, "0,0", {i, j}, defect});
                }
            }
}

Report is_morphism(const OperadPresentation& pres, const Matrix& f, const PAlgebra& src,
                   const PAlgebra& dst) {
    Report report;
    append_morphism_check(pres, f, src, dst, report.open("morphism"));
    return report;
}

namespace {

void check_shapes_xmod(const CrossedModule& cm) {
    if (cm.d.rows() != cm.b.dim || cm.d.cols() != cm.x.dim)
        throw ShapeError("crossed module d must be X -> B");
    for (const auto& [gen, m] : cm.act_left)
        if (m.dim_a() != cm.b.dim || m.dim_b() != cm.x.dim || m.dim_out() != cm.x.dim)
            throw ShapeError("left action must be B x X -> X");
    for (const auto& [gen, m] : cm.act_right)
        if (m.dim_a() != cm.x.dim || m.dim_b() != cm.b.dim || m.dim_out() != cm.x.dim)
            throw ShapeError("right action must be X x B -> X");
}

}  // namespace

Report validate_xmod(const OperadPresentation& pres, const CrossedModule& cm) {
    pres.check_well_formed();
    check_shapes_xmod(cm);
    Report report;
    report.merge("x-", validate_algebra(pres, cm.x));
    report.merge("b-", validate_algebra(pres, cm.b));

    // Action axioms via Act = SplitEpi: the block structure on X (+) B must
    // itself be an algebra over the presentation.
    PAlgebra block = action_block_algebra(pres, cm);
    report.merge("action-", validate_algebra(pres, block));

    CheckResult& equiv = report.open("equivariance");
    for (const auto& g : pres.generators) {
        for (int bi = 0; bi < cm.b.dim; ++bi)
            for (int xi = 0; xi < cm.x.dim; ++xi) {
                Vec lhs = cm.d * cm.left(g.name).eval_basis(bi, xi);
                Vec rhs = cm.b.eval(g.name, basis_vec(cm.b.dim, bi), cm.d.col(xi));
                Vec defect = sub(lhs, rhs);
                if (!is_zero(defect)) {
                    equiv.pass = false;
                    equiv.witnesses.push_back(
                        Witness{equiv.name, g.name + "-left", "b,x", {bi, xi}, defect});
                }
            }
        for (int xi = 0; xi < cm.x.dim; ++xi)
            for (int bi = 0; bi < cm.b.dim; ++bi) {
                Vec lhs = cm.d * cm.right(g.name).eval_basis(xi, bi);
                Vec rhs = cm.b.eval(g.name, cm.d.col(xi), basis_vec(cm.b.dim, bi));
                Vec defect = sub(lhs, rhs);
                if (!is_zero(defect)) {
                    equiv.pass = false;
                    equiv.witnesses.push_back(
                        Witness{equiv.name, g.name + "-right", "x,b", {xi, bi}, defect});
                }
            }
    }

    append_morphism_check(pres, cm.d, cm.x, cm.b, report.open("d-morphism"));

    CheckResult& peiffer = report.open("peiffer");
    for (const auto& g : pres.generators)
        for (int i = 0; i < cm.x.dim; ++i)
            for (int j = 0; j < cm.x.dim; ++j) {
                Vec prod = cm.x.eval(g.name, i, j);
                Vec via_right = cm.right(g.name).eval(basis_vec(cm.x.dim, i), cm.d.col(j));
                Vec via_left = cm.left(g.name).eval(cm.d.col(i), basis_vec(cm.x.dim, j));
                Vec defect_r = sub(prod, via_right);
                if (!is_zero(defect_r)) {
                    peiffer.pass = false;
                    peiffer.witnesses.push_back(
                        Witness{peiffer.name, g.name + "-right", "x,x", {i, j}, defect_r});
                }
                Vec defect_l = sub(prod, via_left);
                if (!is_zero(defect_l)) {
                    peiffer.pass = false;
                    peiffer.witnesses.push_back(
                        Witness{peiffer.name, g.name + "-left", "x,x", {i, j}, defect_l});
                }
            }
    return report;
}

Report validate_cat1(const OperadPresentation& pres, const Cat1Algebra& c) {
    pres.check_well_formed();
    if (c.s.rows() != c.b.dim || c.s.cols() != c.e.dim || c.t.rows() != c.b.dim ||
        c.t.cols() != c.e.dim || c.i.rows() != c.e.dim || c.i.cols() != c.b.dim)
        throw ShapeError("cat1 structure maps have inconsistent shapes");
    Report report;
    report.merge("e-", validate_algebra(pres, c.e));
    report.merge("b-", validate_algebra(pres, c.b));

    append_morphism_check(pres, c.s, c.e, c.b, report.open("s-morphism"));
    append_morphism_check(pres, c.t, c.e, c.b, report.open("t-morphism"));
    append_morphism_check(pres, c.i, c.b, c.e, report.open("i-morphism"));

    CheckResult& section = report.open("section");
    Matrix idb = Matrix::identity(c.b.dim);
    if (c.s * c.i != idb) {
        section.pass = false;
        section.witnesses.push_back(Witness{"section", "s*i", "", {}, {}});
    }
    if (c.t * c.i != idb) {
        section.pass = false;
        section.witnesses.push_back(Witness{"section", "t*i", "", {}, {}});
    }

    // mu_E(ker s, ker t) = 0 and mu_E(ker t, ker s) = 0.
    CheckResult& cat1 = report.open("cat1");
    Subspace ker_s = kernel_basis(c.s);
    Subspace ker_t = kernel_basis(c.t);
    for (const auto& g : pres.generators)
        for (int u = 0; u < ker_s.dim(); ++u)
            for (int w = 0; w < ker_t.dim(); ++w) {
                const Vec& ku = ker_s.basis()[size_t(u)];
                const Vec& kw = ker_t.basis()[size_t(w)];
                Vec fwd = c.e.eval(g.name, ku, kw);
                if (!is_zero(fwd)) {
                    cat1.pass = false;
                    cat1.witnesses.push_back(
                        Witness{"cat1", g.name + "(ker s, ker t)", "", {u, w}, fwd});
                }
                Vec bwd = c.e.eval(g.name, kw, ku);
                if (!is_zero(bwd)) {
                    cat1.pass = false;
                    cat1.witnesses.push_back(
                        Witness{"cat1", g.name + "(ker t, ker s)", "", {w, u}, bwd});
                }
            }
    return report;
}

}  // namespace xalg
