#include "xalg/functors.hpp"

namespace xalg {

namespace {

void require_valid(Report r, const std::string& what) {
    if (!r.valid()) throw InvalidStructure(what + " is not valid; refusing", std::move(r));
}

/// Degree split of an E = V1 (+) V0 basis index (V1 coordinates first).
struct ESplit {
    int deg;    // 1 or 0
    int index;  // index within V1 or V0
};

ESplit split_e(const Complex01& c, int e_index) {
    if (e_index < c.dim1) return {1, e_index};
    return {0, e_index - c.dim1};
}

/// Evaluate a left-nested composite of the generator's graded components
/// on homogeneous vectors; arity 2 or 3. Dispatch through the mult table.
Vec eval_composite(const MultTable& t, const std::string& gen, int slot,
                   const std::vector<Deg>& degs, const std::vector<Vec>& vecs) {
    if (degs.size() == 2) return t.eval(gen, degs[0], degs[1], vecs[0], vecs[1]);
    if (slot == 1) {
        Vec w = t.eval(gen, degs[0], degs[1], vecs[0], vecs[1]);
        return t.eval(gen, degs[0] + degs[1], degs[2], w, vecs[2]);
    }
    Vec w = t.eval(gen, degs[1], degs[2], vecs[1], vecs[2]);
    return t.eval(gen, degs[0], degs[1] + degs[2], vecs[0], w);
}

/// Boundary precomposition at arity n on one basis tensor of (V1 (+) V0)^n.
/// Returns the value embedded back into V1 (+) V0 coordinates.
Vec semidirect_eval(const Complex01& c, const MultTable& table, const std::string& gen,
                    int slot, const std::vector<int>& e_basis) {
    int n = int(e_basis.size());

    Shuffle sh;
    sh.p = 0;
    sh.q = 0;
    std::vector<int> input(static_cast<size_t>(n));
    for (int pos = 1; pos <= n; ++pos) {
        ESplit es = split_e(c, e_basis[size_t(pos - 1)]);
        input[size_t(pos - 1)] = es.index;
        if (es.deg == 1) {
            sh.mu.push_back(pos);
            ++sh.p;
        } else {
            sh.nu.push_back(pos);
            ++sh.q;
        }
    }

    BoundaryImage img = partial_boundary(c, n, sh, input);
    std::vector<Deg> degs(size_t(n), Deg(0));
    if (img.v1_position > 0) degs[size_t(img.v1_position - 1)] = Deg(1);
    int out_deg = img.v1_position > 0 ? 1 : 0;
    Vec out = zero_vec(c.dim1 + c.dim0);
    for (const auto& [idx, coeff] : img.terms) {
        std::vector<Vec> vecs(static_cast<size_t>(n));
        for (int k = 0; k < n; ++k)
            vecs[size_t(k)] = basis_vec(table.dim(degs[size_t(k)]), idx[size_t(k)]);
        Vec value = eval_composite(table, gen, slot, degs, vecs);
        int offset = out_deg == 1 ? 0 : c.dim1;
        for (int k = 0; k < int(value.size()); ++k) out[size_t(offset + k)] += coeff * value[size_t(k)];
    }
    return out;
}

}  // namespace

CrossedModule dg_to_xmod(const OperadPresentation& pres, const DgPAlgebra1& a) {
    require_valid(validate_dg1(pres, a), "dg algebra");
    CrossedModule cm;
    int n1 = a.carrier.dim1, n0 = a.carrier.dim0;
    cm.b.dim = n0;
    cm.x.dim = n1;
    cm.d = a.carrier.d;
    for (const auto& [gen, m] : a.mult) {
        cm.b.mult[gen] = m.m00;
        cm.act_right[gen] = m.m10;
        cm.act_left[gen] = m.m01;
        // derived multiplication mu_X(x, y) = mult10(x, dy)
        BilinearMap derived(n1, n1, n1);
        for (int i = 0; i < n1; ++i)
            for (int j = 0; j < n1; ++j) {
                Vec prod = m.m10.eval(basis_vec(n1, i), a.carrier.d.col(j));
                for (int k = 0; k < n1; ++k) derived.at(k, i, j) = prod[size_t(k)];
            }
        cm.x.mult[gen] = std::move(derived);
    }
    return cm;
}

DgPAlgebra1 xmod_to_dg(const OperadPresentation& pres, const CrossedModule& cm) {
    require_valid(validate_xmod(pres, cm), "crossed module");
    DgPAlgebra1 a;
    a.carrier = Complex01(cm.x.dim, cm.b.dim, cm.d);
    for (const auto& g : pres.generators) {
        DgMult m;
        m.m00 = cm.b.mult.at(g.name);
        m.m10 = cm.right(g.name);
        m.m01 = cm.left(g.name);
        a.mult[g.name] = std::move(m);
    }
    return a;
}

namespace {

Cat1Algebra semidirect_from_dg(const OperadPresentation& pres, const DgPAlgebra1& a) {
    int n1 = a.carrier.dim1, n0 = a.carrier.dim0, n = n1 + n0;
    MultTable table = a.table();
    Cat1Algebra c;
    c.e.dim = n;
    c.b.dim = n0;
    for (const auto& g : pres.generators) {
        c.b.mult[g.name] = a.mult.at(g.name).m00;
        BilinearMap m(n, n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Vec prod = semidirect_eval(a.carrier, table, g.name, 1, {i, j});
                for (int k = 0; k < n; ++k) m.at(k, i, j) = prod[size_t(k)];
            }
        c.e.mult[g.name] = std::move(m);
    }
    c.s = Matrix::hcat(Matrix::zero(n0, n1), Matrix::identity(n0));
    c.t = Matrix::hcat(a.carrier.d, Matrix::identity(n0));
    c.i = Matrix::vcat(Matrix::zero(n1, n0), Matrix::identity(n0));
    return c;
}

}  // namespace

Cat1Algebra dg_to_cat1(const OperadPresentation& pres, const DgPAlgebra1& a) {
    require_valid(validate_dg1(pres, a), "dg algebra");
    return semidirect_from_dg(pres, a);
}

Cat1Algebra build_semidirect(const OperadPresentation& pres, const CrossedModule& cm) {
    Cat1Algebra c;
    c.e = action_block_algebra(pres, cm);
    c.b = cm.b;
    int n1 = cm.x.dim, n0 = cm.b.dim;
    c.s = Matrix::hcat(Matrix::zero(n0, n1), Matrix::identity(n0));
    c.t = Matrix::hcat(cm.d, Matrix::identity(n0));
    c.i = Matrix::vcat(Matrix::zero(n1, n0), Matrix::identity(n0));
    return c;
}

Cat1Algebra xmod_to_cat1(const OperadPresentation& pres, const CrossedModule& cm) {
    require_valid(validate_xmod(pres, cm), "crossed module");
    // For a valid crossed module the block-algebra graph coincides with
    // dg_to_cat1(xmod_to_dg(cm)): the Peiffer identity equates mu_X with
    // the boundary-precomposed product on the V1 x V1 summand.
    return build_semidirect(pres, cm);
}

CrossedModule cat1_to_xmod(const OperadPresentation& pres, const Cat1Algebra& c) {
    require_valid(validate_cat1(pres, c), "cat1 algebra");
    Subspace ker_s = kernel_basis(c.s);
    int m = ker_s.dim();
    Matrix k = ker_s.basis_matrix();

    CrossedModule cm;
    cm.b = c.b;
    cm.x.dim = m;
    cm.d = c.t * k;

    auto in_kernel = [&](const Vec& v) {
        auto coords = ker_s.coordinates(v);
        if (!coords)
            throw InternalError("product of kernel elements left ker(s)");
        return *coords;
    };

    for (const auto& g : pres.generators) {
        BilinearMap mx(m, m, m), al(c.b.dim, m, m), ar(m, c.b.dim, m);
        for (int u = 0; u < m; ++u)
            for (int v = 0; v < m; ++v) {
                Vec prod = in_kernel(c.e.eval(g.name, k.col(u), k.col(v)));
                for (int w = 0; w < m; ++w) mx.at(w, u, v) = prod[size_t(w)];
            }
        for (int bi = 0; bi < c.b.dim; ++bi)
            for (int v = 0; v < m; ++v) {
                Vec prod = in_kernel(c.e.eval(g.name, c.i.col(bi), k.col(v)));
                for (int w = 0; w < m; ++w) al.at(w, bi, v) = prod[size_t(w)];
            }
        for (int u = 0; u < m; ++u)
            for (int bi = 0; bi < c.b.dim; ++bi) {
                Vec prod = in_kernel(c.e.eval(g.name, k.col(u), c.i.col(bi)));
                for (int w = 0; w < m; ++w) ar.at(w, u, bi) = prod[size_t(w)];
            }
        cm.x.mult[g.name] = std::move(mx);
        cm.act_left[g.name] = std::move(al);
        cm.act_right[g.name] = std::move(ar);
    }
    return cm;
}

bool CompositionReport::closed_pass() const {
    const CheckResult* c = report.find("pullback-closed");
    return c && c->pass;
}
bool CompositionReport::morphism_pass() const {
    const CheckResult* c = report.find("composition-morphism");
    return c && c->pass;
}
bool CompositionReport::units_pass() const {
    const CheckResult* c = report.find("unit-laws");
    return c && c->pass;
}

CompositionReport cat1_compose(const OperadPresentation& pres, const Cat1Algebra& c) {
    int n = c.e.dim;
    if (c.s.rows() != c.b.dim || c.s.cols() != n || c.t.rows() != c.b.dim || c.t.cols() != n ||
        c.i.rows() != n || c.i.cols() != c.b.dim)
        throw ShapeError("cat1 structure maps have inconsistent shapes");

    CompositionReport out;
    // P = ker(s p1 - t p2) inside E (+) E; coordinates (g, f).
    Matrix pull = Matrix::hcat(c.s, -c.t);
    Subspace p = kernel_basis(pull);
    out.pullback_dim = p.dim();

    // c(g, f) = f + g - isg as a matrix E (+) E -> E.
    Matrix comp = Matrix::hcat(Matrix::identity(n) - c.i * c.s, Matrix::identity(n));

    CheckResult& closed = out.report.open("pullback-closed");
    CheckResult& morphism = out.report.open("composition-morphism");
    for (const auto& g : pres.generators) {
        const BilinearMap& me = c.e.mult.at(g.name);
        for (int u = 0; u < p.dim(); ++u)
            for (int v = 0; v < p.dim(); ++v) {
                const Vec& pu = p.basis()[size_t(u)];
                const Vec& pv = p.basis()[size_t(v)];
                Vec gu(pu.begin(), pu.begin() + n), fu(pu.begin() + n, pu.end());
                Vec gv(pv.begin(), pv.begin() + n), fv(pv.begin() + n, pv.end());
                Vec gprod = me.eval(gu, gv), fprod = me.eval(fu, fv);
                Vec w(gprod);
                w.insert(w.end(), fprod.begin(), fprod.end());
                if (!p.contains(w)) {
                    closed.pass = false;
                    closed.witnesses.push_back(
                        Witness{"pullback-closed", g.name, "", {u, v}, w});
                }
                Vec lhs = comp * w;
                Vec rhs = me.eval(comp * pu, comp * pv);
                Vec defect = sub(lhs, rhs);
                if (!is_zero(defect)) {
                    morphism.pass = false;
                    morphism.witnesses.push_back(
                        Witness{"composition-morphism", g.name, "", {u, v}, defect});
                }
            }
    }

    CheckResult& units = out.report.open("unit-laws");
    for (int gi = 0; gi < n; ++gi) {
        Vec g = basis_vec(n, gi);
        Vec isg = c.i * (c.s * g);
        Vec pair(g);
        pair.insert(pair.end(), isg.begin(), isg.end());
        Vec defect = sub(comp * pair, g);
        if (!is_zero(defect)) {
            units.pass = false;
            units.witnesses.push_back(Witness{"unit-laws", "right-unit", "", {gi}, defect});
        }
        Vec itf = c.i * (c.t * g);
        Vec pair2(itf);
        pair2.insert(pair2.end(), g.begin(), g.end());
        Vec defect2 = sub(comp * pair2, g);
        if (!is_zero(defect2)) {
            units.pass = false;
            units.witnesses.push_back(Witness{"unit-laws", "left-unit", "", {gi}, defect2});
        }
    }
    return out;
}

Vec semidirect_ternary(const DgPAlgebra1& a, const std::string& gen, int slot,
                       std::array<int, 3> e_basis) {
    return semidirect_eval(a.carrier, a.table(), gen, slot, {e_basis[0], e_basis[1], e_basis[2]});
}

std::string kind_of(const Structure& s) {
    if (std::holds_alternative<DgPAlgebra1>(s)) return "dg1";
    if (std::holds_alternative<CrossedModule>(s)) return "xmod";
    return "cat1";
}

namespace {

void mismatch(std::vector<Witness>& out, const std::string& what) {
    out.push_back(Witness{"roundtrip", what, "", {}, {}});
}

void compare_dg1(const DgPAlgebra1& a, const DgPAlgebra1& b, std::vector<Witness>& out) {
    if (a.carrier.dim0 != b.carrier.dim0 || a.carrier.dim1 != b.carrier.dim1) {
        mismatch(out, "carrier dimensions");
        return;
    }
    if (a.carrier.d != b.carrier.d) mismatch(out, "differential");
    for (const auto& [gen, m] : a.mult) {
        auto it = b.mult.find(gen);
        if (it == b.mult.end()) {
            mismatch(out, "missing generator " + gen);
            continue;
        }
        if (m.m00 != it->second.m00) mismatch(out, "mult-" + gen + "-00");
        if (m.m10 != it->second.m10) mismatch(out, "mult-" + gen + "-10");
        if (m.m01 != it->second.m01) mismatch(out, "mult-" + gen + "-01");
    }
}

void compare_xmod(const CrossedModule& a, const CrossedModule& b, std::vector<Witness>& out) {
    if (a.x.dim != b.x.dim || a.b.dim != b.b.dim) {
        mismatch(out, "carrier dimensions");
        return;
    }
    if (a.d != b.d) mismatch(out, "d");
    for (const auto& [gen, m] : a.x.mult)
        if (!(b.x.mult.count(gen) && m == b.x.mult.at(gen))) mismatch(out, "x-mult-" + gen);
    for (const auto& [gen, m] : a.b.mult)
        if (!(b.b.mult.count(gen) && m == b.b.mult.at(gen))) mismatch(out, "b-mult-" + gen);
    for (const auto& [gen, m] : a.act_left)
        if (!(b.act_left.count(gen) && m == b.act_left.at(gen))) mismatch(out, "act-left-" + gen);
    for (const auto& [gen, m] : a.act_right)
        if (!(b.act_right.count(gen) && m == b.act_right.at(gen)))
            mismatch(out, "act-right-" + gen);
}

/// Compare a Cat1 obtained by a round trip against the original through the
/// canonical alignment phi : X (+) B -> E, (x, b) |-> K x + i b, with K the
/// RREF basis of ker(s). For block-form inputs phi is the identity.
void compare_cat1(const OperadPresentation& pres, const Cat1Algebra& orig,
                  const Cat1Algebra& back, std::vector<Witness>& out) {
    Subspace ker_s = kernel_basis(orig.s);
    Matrix phi = Matrix::hcat(ker_s.basis_matrix(), orig.i);
    if (phi.cols() != back.e.dim || orig.b.dim != back.b.dim) {
        mismatch(out, "carrier dimensions");
        return;
    }
    if (phi.rank() != orig.e.dim) mismatch(out, "alignment not invertible");
    if (orig.s * phi != back.s) mismatch(out, "s");
    if (orig.t * phi != back.t) mismatch(out, "t");
    if (phi * back.i != orig.i) mismatch(out, "i");
    for (const auto& g : pres.generators) {
        const BilinearMap& mo = orig.e.mult.at(g.name);
        const BilinearMap& mb = back.e.mult.at(g.name);
        for (int u = 0; u < back.e.dim; ++u)
            for (int v = 0; v < back.e.dim; ++v) {
                Vec lhs = phi * mb.eval_basis(u, v);
                Vec rhs = mo.eval(phi.col(u), phi.col(v));
                if (lhs != rhs) {
                    out.push_back(Witness{"roundtrip", "mult-" + g.name, "", {u, v},
                                          sub(lhs, rhs)});
                }
            }
    }
}

}  // namespace

RoundTripReport roundtrip(const OperadPresentation& pres, const Structure& start,
                          const std::vector<std::string>& path) {
    RoundTripReport rep;
    for (size_t i = 0; i < path.size(); ++i)
        rep.direction += (i ? "," : "") + path[i];

    Structure current = start;
    for (const auto& step : path) {
        if (step == "dg_to_xmod") {
            auto* a = std::get_if<DgPAlgebra1>(&current);
            if (!a) throw ArgumentError("path error: dg_to_xmod needs a dg1 structure");
            current = dg_to_xmod(pres, *a);
        } else if (step == "xmod_to_dg") {
            auto* cm = std::get_if<CrossedModule>(&current);
            if (!cm) throw ArgumentError("path error: xmod_to_dg needs an xmod structure");
            current = xmod_to_dg(pres, *cm);
        } else if (step == "dg_to_cat1") {
            auto* a = std::get_if<DgPAlgebra1>(&current);
            if (!a) throw ArgumentError("path error: dg_to_cat1 needs a dg1 structure");
            current = dg_to_cat1(pres, *a);
        } else if (step == "xmod_to_cat1") {
            auto* cm = std::get_if<CrossedModule>(&current);
            if (!cm) throw ArgumentError("path error: xmod_to_cat1 needs an xmod structure");
            current = xmod_to_cat1(pres, *cm);
        } else if (step == "cat1_to_xmod") {
            auto* c = std::get_if<Cat1Algebra>(&current);
            if (!c) throw ArgumentError("path error: cat1_to_xmod needs a cat1 structure");
            current = cat1_to_xmod(pres, *c);
        } else {
            throw ArgumentError("path error: unknown functor " + step);
        }
    }
    if (kind_of(current) != kind_of(start))
        throw ArgumentError("path error: path does not return to the source kind");

    if (auto* a = std::get_if<DgPAlgebra1>(&start))
        compare_dg1(*a, std::get<DgPAlgebra1>(current), rep.mismatches);
    else if (auto* cm = std::get_if<CrossedModule>(&start))
        compare_xmod(*cm, std::get<CrossedModule>(current), rep.mismatches);
    else
        compare_cat1(pres, std::get<Cat1Algebra>(start), std::get<Cat1Algebra>(current),
                     rep.mismatches);
    rep.isomorphic = rep.mismatches.empty();
    return rep;
}

}  // namespace xalg
