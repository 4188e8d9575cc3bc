#include "xalg/higher.hpp"

namespace xalg {

namespace {

const std::array<Deg, 4> kBidegrees{Deg(0, 0), Deg(1, 0), Deg(0, 1), Deg(1, 1)};

bool in_square(Deg d) { return d.a >= 0 && d.a <= 1 && d.b >= 0 && d.b <= 1; }

}  // namespace

MultTable TwoCrossed::table() const {
    MultTable t;
    for (Deg d : kBidegrees) t.set_dim(d, square.dim(d));
    for (const auto& [gen, comps] : mult)
        for (const auto& [degs, m] : comps) t.set(gen, degs.first, degs.second, m);
    return t;
}

GradedDifferential TwoCrossed::horizontal() const {
    GradedDifferential d;
    d.name = "dh";
    d.delta = Deg(-1, 0);
    d.maps[Deg(1, 0)] = square.dh0;
    d.maps[Deg(1, 1)] = square.dh1;
    return d;
}

GradedDifferential TwoCrossed::vertical() const {
    GradedDifferential d;
    d.name = "dv";
    d.delta = Deg(0, -1);
    d.maps[Deg(0, 1)] = square.dv0;
    d.maps[Deg(1, 1)] = square.dv1;
    return d;
}

MultTable DgPAlgebra2::table() const {
    MultTable t;
    for (int k = 0; k < 3; ++k) t.set_dim(Deg(k), dims[size_t(k)]);
    for (const auto& [gen, comps] : mult)
        for (const auto& [degs, m] : comps) t.set(gen, Deg(degs.first), Deg(degs.second), m);
    return t;
}

GradedDifferential DgPAlgebra2::differential() const {
    GradedDifferential d;
    d.name = "d";
    d.delta = Deg(-1);
    d.maps[Deg(1)] = d1;
    d.maps[Deg(2)] = d2;
    return d;
}

Report validate_2crossed(const OperadPresentation& pres, const TwoCrossed& t) {
    pres.check_well_formed();
    t.square.check_shapes();
    Report report;
    CheckResult& sq = report.open("square");
    if (!t.square.commutes()) {
        sq.pass = false;
        sq.witnesses.push_back(Witness{"square", "dv0*dh1 != dh0*dv1", "", {}, {}});
    }
    for (const auto& [gen, comps] : t.mult)
        for (const auto& [degs, m] : comps)
            if (!in_square(degs.first + degs.second))
                throw ShapeError("multiplication component with target outside the square");
    MultTable table = t.table();
    check_derivation(pres, table, t.horizontal(), report.open("derivation-h"));
    check_derivation(pres, table, t.vertical(), report.open("derivation-v"));
    check_symmetry(pres, table, report.open("symmetry"));
    check_relations(pres, table, report.open("relations"));
    return report;
}

Report validate_dg2(const OperadPresentation& pres, const DgPAlgebra2& a) {
    pres.check_well_formed();
    Report report;
    CheckResult& square = report.open("d-squared");
    if (a.d1.rows() != a.dims[0] || a.d1.cols() != a.dims[1] || a.d2.rows() != a.dims[1] ||
        a.d2.cols() != a.dims[2])
        throw ShapeError("dg2 differentials have inconsistent shapes");
    if (!(a.d1 * a.d2).is_zero()) {
        square.pass = false;
        square.witnesses.push_back(Witness{"d-squared", "d1*d2 != 0", "", {}, {}});
    }
    MultTable table = a.table();
    check_derivation(pres, table, a.differential(), report.open("derivation"));
    check_symmetry(pres, table, report.open("symmetry"));
    check_relations(pres, table, report.open("relations"));
    return report;
}

namespace {

/// Offset of a bidegree block inside its total-degree summand of Tot.
int tot_offset(const Square11& sq, Deg d) {
    return d == Deg(0, 1) ? sq.dim10 : 0;
}

}  // namespace

DgPAlgebra2 tot_algebra(const OperadPresentation& pres, const TwoCrossed& t) {
    Report r = validate_2crossed(pres, t);
    if (!r.valid()) throw InvalidStructure("2-crossed structure is not valid; refusing", std::move(r));

    const Square11& sq = t.square;
    TotComplex tot = tot2(sq);
    DgPAlgebra2 out;
    out.dims = tot.dims;
    out.d1 = tot.d1;
    out.d2 = tot.d2;

    MultTable table = t.table();
    for (const auto& gen : pres.generators) {
        for (int k = 0; k <= 2; ++k)
            for (int l = 0; k + l <= 2; ++l) {
                BilinearMap m(out.dims[size_t(k)], out.dims[size_t(l)],
                              out.dims[size_t(k + l)]);
                for (Deg a : kBidegrees) {
                    if (a.a + a.b != k || sq.dim(a) == 0) continue;
                    for (Deg b : kBidegrees) {
                        if (b.a + b.b != l || sq.dim(b) == 0) continue;
                        Deg target = a + b;
                        if (!in_square(target) || sq.dim(target) == 0) continue;
                        const BilinearMap* comp = table.component(gen.name, a, b);
                        if (!comp)
                            throw MissingComponent("missing component " + gen.name + " at " +
                                                   a.str() + "," + b.str());
                        // Eilenberg-Zilber style merge sign for the lax
                        // monoidal totalization.
                        int sign = (a.a * b.b) & 1 ? -1 : 1;
                        int oa = tot_offset(sq, a), ob = tot_offset(sq, b),
                            oc = tot_offset(sq, target);
                        for (int kk = 0; kk < sq.dim(target); ++kk)
                            for (int i = 0; i < sq.dim(a); ++i)
                                for (int j = 0; j < sq.dim(b); ++j)
                                    m.at(oc + kk, oa + i, ob + j) =
                                        Rational(sign) * comp->at(kk, i, j);
                    }
                }
                out.mult[gen.name][{k, l}] = std::move(m);
            }
    }
    return out;
}

namespace {

/// Derived corner bracket [x, y]_corner = mu(x, pre(y)) together with the
/// companion form mu(post(x), y); both must agree on all basis pairs.
PAlgebra corner(const MultTable& table, const std::string& gen, Deg corner_deg,
                const Matrix& pre, Deg pre_deg, const Matrix& post, Deg post_deg,
                const std::string& label) {
    int n = table.dim(corner_deg);
    PAlgebra out;
    out.dim = n;
    BilinearMap m(n, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec main = table.eval(gen, corner_deg, pre_deg, basis_vec(n, i), pre * basis_vec(n, j));
            Vec alt = table.eval(gen, post_deg, corner_deg, post * basis_vec(n, i), basis_vec(n, j));
            if (main != alt)
                throw InternalError("corner " + label +
                                    " alternative forms disagree at basis pair (" +
                                    std::to_string(i) + "," + std::to_string(j) + ")");
            for (int k = 0; k < n; ++k) m.at(k, i, j) = main[size_t(k)];
        }
    out.mult[gen] = std::move(m);
    return out;
}

}  // namespace

CornerAlgebras corner_algebras(const OperadPresentation& pres, const TwoCrossed& t) {
    if (pres.generators.size() != 1)
        throw ArgumentError("corner algebras are defined for a single bracket generator");
    Report r = validate_2crossed(pres, t);
    if (!r.valid()) throw InvalidStructure("2-crossed structure is not valid; refusing", std::move(r));

    const std::string gen = pres.generators.front().name;
    const Square11& sq = t.square;
    MultTable table = t.table();
    CornerAlgebras out;

    // g00: the ambient bidegree (0,0) bracket unchanged.
    out.g00.dim = sq.dim00;
    {
        BilinearMap m(sq.dim00, sq.dim00, sq.dim00);
        if (const BilinearMap* comp = table.component(gen, Deg(0, 0), Deg(0, 0))) m = *comp;
        out.g00.mult[gen] = std::move(m);
    }
    // g01: [x, dv0 y] = [dv0 x, y].
    out.g01 = corner(table, gen, Deg(0, 1), sq.dv0, Deg(0, 0), sq.dv0, Deg(0, 0), "g01");
    // g10: [x, dh0 y] = [dh0 x, y].
    out.g10 = corner(table, gen, Deg(1, 0), sq.dh0, Deg(0, 0), sq.dh0, Deg(0, 0), "g10");
    // g11: [x, dh0 dv1 y] with three companion forms.
    {
        int n = sq.dim11;
        Matrix both = sq.dh0 * sq.dv1;
        BilinearMap m(n, n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Vec ei = basis_vec(n, i), ej = basis_vec(n, j);
                Vec main = table.eval(gen, Deg(1, 1), Deg(0, 0), ei, both * ej);
                Vec alt1 = table.eval(gen, Deg(0, 1), Deg(1, 0), sq.dh1 * ei, sq.dv1 * ej);
                Vec alt2 = table.eval(gen, Deg(1, 0), Deg(0, 1), sq.dv1 * ei, sq.dh1 * ej);
                Vec alt3 = table.eval(gen, Deg(0, 0), Deg(1, 1), sq.dv0 * (sq.dh1 * ei), ej);
                if (main != alt1 || main != alt2 || main != alt3)
                    throw InternalError("corner g11 alternative forms disagree at basis pair (" +
                                        std::to_string(i) + "," + std::to_string(j) + ")");
                for (int k = 0; k < n; ++k) m.at(k, i, j) = main[size_t(k)];
            }
        out.g11.dim = n;
        out.g11.mult[gen] = std::move(m);
    }

    for (const PAlgebra* a : {&out.g00, &out.g10, &out.g01, &out.g11}) {
        Report check = validate_algebra(pres, *a);
        if (!check.valid())
            throw InternalError("derived corner bracket fails the algebra relations");
    }
    return out;
}

namespace {

// Vectorization order for degree-0 derivation unknowns: the n0 x n0 block
// row-major, then the n1 x n1 block row-major.
struct Der0Vars {
    int n0, n1;
    int total() const { return n0 * n0 + n1 * n1; }
    int v0(int i, int j) const { return i * n0 + j; }
    int v1(int i, int j) const { return n0 * n0 + i * n1 + j; }
};

std::pair<Matrix, Matrix> unpack_der0(const Der0Vars& vars, const Vec& v) {
    Matrix d0(vars.n0, vars.n0), d1(vars.n1, vars.n1);
    for (int i = 0; i < vars.n0; ++i)
        for (int j = 0; j < vars.n0; ++j) d0.at(i, j) = v[size_t(vars.v0(i, j))];
    for (int i = 0; i < vars.n1; ++i)
        for (int j = 0; j < vars.n1; ++j) d1.at(i, j) = v[size_t(vars.v1(i, j))];
    return {d0, d1};
}

Vec pack_der0(const Der0Vars& vars, const Matrix& d0, const Matrix& d1) {
    Vec v(static_cast<size_t>(vars.total()));
    for (int i = 0; i < vars.n0; ++i)
        for (int j = 0; j < vars.n0; ++j) v[size_t(vars.v0(i, j))] = d0.at(i, j);
    for (int i = 0; i < vars.n1; ++i)
        for (int j = 0; j < vars.n1; ++j) v[size_t(vars.v1(i, j))] = d1.at(i, j);
    return v;
}

Vec pack_matrix(const Matrix& m) {
    Vec v(size_t(m.rows()) * size_t(m.cols()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) v[size_t(i * m.cols() + j)] = m.at(i, j);
    return v;
}

Matrix unpack_matrix(int rows, int cols, const Vec& v) {
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = v[size_t(i * cols + j)];
    return m;
}

/// Direct residuals of the degree-0 derivation laws; kept separate from
/// the constraint-matrix assembly so solutions are re-checked by an
/// independent route.
bool verify_der0(const DgPAlgebra1& g, const std::string& gen, const Matrix& d0,
                 const Matrix& d1) {
    const DgMult& m = g.mult.at(gen);
    int n0 = g.carrier.dim0, n1 = g.carrier.dim1;
    for (int i = 0; i < n0; ++i)
        for (int j = 0; j < n0; ++j) {
            Vec lhs = d0 * m.m00.eval_basis(i, j);
            Vec rhs = add(m.m00.eval(d0.col(i), basis_vec(n0, j)),
                          m.m00.eval(basis_vec(n0, i), d0.col(j)));
            if (lhs != rhs) return false;
        }
    for (int b = 0; b < n0; ++b)
        for (int x = 0; x < n1; ++x) {
            Vec lhs = d1 * m.m01.eval_basis(b, x);
            Vec rhs = add(m.m01.eval(d0.col(b), basis_vec(n1, x)),
                          m.m01.eval(basis_vec(n0, b), d1.col(x)));
            if (lhs != rhs) return false;
            Vec lhs2 = d1 * m.m10.eval_basis(x, b);
            Vec rhs2 = add(m.m10.eval(d1.col(x), basis_vec(n0, b)),
                           m.m10.eval(basis_vec(n1, x), d0.col(b)));
            if (lhs2 != rhs2) return false;
        }
    return g.carrier.d * d1 == d0 * g.carrier.d;
}

bool verify_der1(const DgPAlgebra1& g, const std::string& gen, const Matrix& e) {
    const DgMult& m = g.mult.at(gen);
    int n0 = g.carrier.dim0;
    for (int i = 0; i < n0; ++i)
        for (int j = 0; j < n0; ++j) {
            Vec lhs = e * m.m00.eval_basis(i, j);
            Vec rhs = add(m.m10.eval(e.col(i), basis_vec(n0, j)),
                          m.m01.eval(basis_vec(n0, i), e.col(j)));
            if (lhs != rhs) return false;
        }
    return true;
}

}  // namespace

DerivationAlgebra derivations(const OperadPresentation& pres, const DgPAlgebra1& g) {
    if (pres.generators.size() != 1)
        throw ArgumentError("derivation algebra is defined for a single bracket generator");
    Report r = validate_dg1(pres, g);
    if (!r.valid()) throw InvalidStructure("dg algebra is not valid; refusing", std::move(r));

    const std::string gen = pres.generators.front().name;
    const DgMult& m = g.mult.at(gen);
    int n0 = g.carrier.dim0, n1 = g.carrier.dim1;
    Der0Vars vars{n0, n1};

    // Degree-0 derivations: Leibniz in every component plus d D1 = D0 d.
    std::vector<Vec> rows;
    auto new_rows = [&](int count) {
        size_t base = rows.size();
        for (int k = 0; k < count; ++k) rows.push_back(zero_vec(vars.total()));
        return base;
    };
    for (int i = 0; i < n0; ++i)
        for (int j = 0; j < n0; ++j) {
            size_t base = new_rows(n0);
            Vec c = m.m00.eval_basis(i, j);
            for (int k = 0; k < n0; ++k) {
                for (int b = 0; b < n0; ++b) {
                    rows[base + k][size_t(vars.v0(k, b))] += c[size_t(b)];
                    rows[base + k][size_t(vars.v0(b, i))] -= m.m00.at(k, b, j);
                    rows[base + k][size_t(vars.v0(b, j))] -= m.m00.at(k, i, b);
                }
            }
        }
    for (int b = 0; b < n0; ++b)
        for (int x = 0; x < n1; ++x) {
            size_t base = new_rows(n1);
            Vec c = m.m01.eval_basis(b, x);
            for (int k = 0; k < n1; ++k)
                for (int a = 0; a < n1; ++a) rows[base + k][size_t(vars.v1(k, a))] += c[size_t(a)];
            for (int k = 0; k < n1; ++k) {
                for (int a = 0; a < n0; ++a)
                    rows[base + k][size_t(vars.v0(a, b))] -= m.m01.at(k, a, x);
                for (int a = 0; a < n1; ++a)
                    rows[base + k][size_t(vars.v1(a, x))] -= m.m01.at(k, b, a);
            }
            size_t base2 = new_rows(n1);
            Vec c2 = m.m10.eval_basis(x, b);
            for (int k = 0; k < n1; ++k)
                for (int a = 0; a < n1; ++a) rows[base2 + k][size_t(vars.v1(k, a))] += c2[size_t(a)];
            for (int k = 0; k < n1; ++k) {
                for (int a = 0; a < n1; ++a)
                    rows[base2 + k][size_t(vars.v1(a, x))] -= m.m10.at(k, a, b);
                for (int a = 0; a < n0; ++a)
                    rows[base2 + k][size_t(vars.v0(a, b))] -= m.m10.at(k, x, a);
            }
        }
    for (int x = 0; x < n1; ++x) {
        size_t base = new_rows(n0);
        for (int k = 0; k < n0; ++k) {
            for (int a = 0; a < n1; ++a)
                rows[base + k][size_t(vars.v1(a, x))] += g.carrier.d.at(k, a);
            for (int b = 0; b < n0; ++b)
                rows[base + k][size_t(vars.v0(k, b))] -= g.carrier.d.at(b, x);
        }
    }
    Matrix system0(int(rows.size()), vars.total());
    for (int i = 0; i < int(rows.size()); ++i)
        for (int j = 0; j < vars.total(); ++j) system0.at(i, j) = rows[size_t(i)][size_t(j)];
    Subspace der0 = kernel_basis(system0);

    // Degree-1 derivations g0 -> g1: E[x,y] = [Ex,y] + [x,Ey] on degree-0
    // pairs; the remaining components overflow the carrier.
    std::vector<Vec> rows1;
    for (int i = 0; i < n0; ++i)
        for (int j = 0; j < n0; ++j) {
            size_t base = rows1.size();
            for (int k = 0; k < n1; ++k) rows1.push_back(zero_vec(n1 * n0));
            Vec c = m.m00.eval_basis(i, j);
            for (int k = 0; k < n1; ++k) {
                for (int b = 0; b < n0; ++b) rows1[base + k][size_t(k * n0 + b)] += c[size_t(b)];
                for (int a = 0; a < n1; ++a) {
                    rows1[base + k][size_t(a * n0 + i)] -= m.m10.at(k, a, j);
                    rows1[base + k][size_t(a * n0 + j)] -= m.m01.at(k, i, a);
                }
            }
        }
    Matrix system1(int(rows1.size()), n1 * n0);
    for (int i = 0; i < int(rows1.size()); ++i)
        for (int j = 0; j < n1 * n0; ++j) system1.at(i, j) = rows1[size_t(i)][size_t(j)];
    Subspace der1 = kernel_basis(system1);

    DerivationAlgebra out;
    for (const Vec& v : der0.basis()) {
        auto [d0, d1] = unpack_der0(vars, v);
        if (!verify_der0(g, gen, d0, d1))
            throw InternalError("degree-0 derivation solution fails its Leibniz residual");
        out.der0_basis.push_back({std::move(d0), std::move(d1)});
    }
    for (const Vec& v : der1.basis()) {
        Matrix e = unpack_matrix(n1, n0, v);
        if (!verify_der1(g, gen, e))
            throw InternalError("degree-1 derivation solution fails its Leibniz residual");
        out.der1_basis.push_back(std::move(e));
    }

    int m0 = int(out.der0_basis.size()), m1 = int(out.der1_basis.size());
    auto der0_coords = [&](const Matrix& d0, const Matrix& d1) {
        auto coords = der0.coordinates(pack_der0(vars, d0, d1));
        if (!coords) throw InternalError("operator is not expressible in the Der0 basis");
        return *coords;
    };
    auto der1_coords = [&](const Matrix& e) {
        auto coords = der1.coordinates(pack_matrix(e));
        if (!coords) throw InternalError("operator is not expressible in the Der1 basis");
        return *coords;
    };

    // Boundary E |-> (d E, E d) and the graded commutator brackets.
    Matrix boundary(m0, m1);
    for (int j = 0; j < m1; ++j) {
        const Matrix& e = out.der1_basis[size_t(j)];
        boundary.set_col(j, der0_coords(g.carrier.d * e, e * g.carrier.d));
    }
    BilinearMap b00(m0, m0, m0), b01(m0, m1, m1), b10(m1, m0, m1);
    for (int i = 0; i < m0; ++i)
        for (int j = 0; j < m0; ++j) {
            const auto& [a0, a1] = out.der0_basis[size_t(i)];
            const auto& [c0, c1] = out.der0_basis[size_t(j)];
            Vec coords = der0_coords(a0 * c0 - c0 * a0, a1 * c1 - c1 * a1);
            for (int k = 0; k < m0; ++k) b00.at(k, i, j) = coords[size_t(k)];
        }
    for (int i = 0; i < m0; ++i)
        for (int j = 0; j < m1; ++j) {
            const auto& [a0, a1] = out.der0_basis[size_t(i)];
            const Matrix& e = out.der1_basis[size_t(j)];
            Vec coords = der1_coords(a1 * e - e * a0);
            for (int k = 0; k < m1; ++k) {
                b01.at(k, i, j) = coords[size_t(k)];
                b10.at(k, j, i) = -coords[size_t(k)];
            }
        }

    out.algebra.carrier = Complex01(m1, m0, std::move(boundary));
    DgMult dm;
    dm.m00 = std::move(b00);
    dm.m01 = std::move(b01);
    dm.m10 = std::move(b10);
    out.algebra.mult[gen] = std::move(dm);
    return out;
}

TwoCrossed ad_square(const OperadPresentation& pres, const DgPAlgebra1& g) {
    DerivationAlgebra der = derivations(pres, g);
    const std::string gen = pres.generators.front().name;
    const DgMult& gm = g.mult.at(gen);
    int n0 = g.carrier.dim0, n1 = g.carrier.dim1;
    int m0 = int(der.der0_basis.size()), m1 = int(der.der1_basis.size());

    // Re-solve coordinates in the derivation bases through the subspaces
    // spanned by the packed basis vectors.
    Der0Vars vars{n0, n1};
    std::vector<Vec> der0_vecs, der1_vecs;
    for (const auto& [d0, d1] : der.der0_basis) der0_vecs.push_back(pack_der0(vars, d0, d1));
    for (const auto& e : der.der1_basis) der1_vecs.push_back(pack_matrix(e));
    Subspace der0_space(vars.total(), der0_vecs);
    Subspace der1_space(n1 * n0, der1_vecs);

    TwoCrossed out;
    out.square.dim00 = m0;
    out.square.dim10 = n0;
    out.square.dim01 = m1;
    out.square.dim11 = n1;

    // Horizontal maps: ad in the derivation-basis coordinates.
    Matrix dh0(m0, n0);
    for (int b = 0; b < n0; ++b) {
        Matrix a0(n0, n0), a1(n1, n1);
        for (int j = 0; j < n0; ++j) a0.set_col(j, gm.m00.eval_basis(b, j));
        for (int j = 0; j < n1; ++j) a1.set_col(j, gm.m01.eval_basis(b, j));
        auto coords = der0_space.coordinates(pack_der0(vars, a0, a1));
        if (!coords) throw InternalError("ad of a degree-0 element is not a derivation");
        dh0.set_col(b, *coords);
    }
    Matrix dh1(m1, n1);
    for (int x = 0; x < n1; ++x) {
        Matrix e(n1, n0);
        for (int j = 0; j < n0; ++j) e.set_col(j, gm.m10.eval_basis(x, j));
        auto coords = der1_space.coordinates(pack_matrix(e));
        if (!coords) throw InternalError("ad of a degree-1 element is not a derivation");
        dh1.set_col(x, *coords);
    }
    out.square.dh0 = std::move(dh0);
    out.square.dh1 = std::move(dh1);
    out.square.dv0 = der.algebra.carrier.d;
    out.square.dv1 = g.carrier.d;

    const DgMult& dm = der.algebra.mult.at(gen);
    auto& comps = out.mult[gen];
    comps[{Deg(0, 0), Deg(0, 0)}] = dm.m00;
    comps[{Deg(0, 0), Deg(0, 1)}] = dm.m01;
    comps[{Deg(0, 1), Deg(0, 0)}] = dm.m10;

    // Evaluation actions of the derivation side on g, antisymmetrized.
    BilinearMap act00_10(m0, n0, n0), act10_00(n0, m0, n0);
    BilinearMap act00_11(m0, n1, n1), act11_00(n1, m0, n1);
    BilinearMap act01_10(m1, n0, n1), act10_01(n0, m1, n1);
    for (int dd = 0; dd < m0; ++dd) {
        const auto& [d0, d1] = der.der0_basis[size_t(dd)];
        for (int j = 0; j < n0; ++j)
            for (int k = 0; k < n0; ++k) {
                act00_10.at(k, dd, j) = d0.at(k, j);
                act10_00.at(k, j, dd) = -d0.at(k, j);
            }
        for (int j = 0; j < n1; ++j)
            for (int k = 0; k < n1; ++k) {
                act00_11.at(k, dd, j) = d1.at(k, j);
                act11_00.at(k, j, dd) = -d1.at(k, j);
            }
    }
    for (int ee = 0; ee < m1; ++ee) {
        const Matrix& e = der.der1_basis[size_t(ee)];
        for (int j = 0; j < n0; ++j)
            for (int k = 0; k < n1; ++k) {
                act01_10.at(k, ee, j) = e.at(k, j);
                act10_01.at(k, j, ee) = -e.at(k, j);
            }
    }
    comps[{Deg(0, 0), Deg(1, 0)}] = std::move(act00_10);
    comps[{Deg(1, 0), Deg(0, 0)}] = std::move(act10_00);
    comps[{Deg(0, 0), Deg(1, 1)}] = std::move(act00_11);
    comps[{Deg(1, 1), Deg(0, 0)}] = std::move(act11_00);
    comps[{Deg(0, 1), Deg(1, 0)}] = std::move(act01_10);
    comps[{Deg(1, 0), Deg(0, 1)}] = std::move(act10_01);
    return out;
}

}  // namespace xalg
