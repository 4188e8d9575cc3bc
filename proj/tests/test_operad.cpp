#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "xalg/operad.hpp"
#include "xalg/structures.hpp"
#include "support.hpp"

using namespace xalg;
using namespace xalg::testing;

namespace {

/// Upper-triangular 2x2 matrices: a known associative algebra with basis
/// e11, e12, e22. Oracle for the assoc relation trees.
PAlgebra upper_triangular() {
    PAlgebra a;
    a.dim = 3;
    BilinearMap m(3, 3, 3);
    // e11*e11=e11, e11*e12=e12, e12*e22=e12, e22*e22=e22
    m.at(0, 0, 0) = Rational(1);
    m.at(1, 0, 1) = Rational(1);
    m.at(1, 1, 2) = Rational(1);
    m.at(2, 2, 2) = Rational(1);
    a.mult["mul"] = std::move(m);
    return a;
}

/// Brute-force Jacobi defect [[a,b],c] + [[b,c],a] + [[c,a],b] straight
/// from the structure constants; independent of the relation evaluator.
Vec jacobi_oracle(const BilinearMap& br, int i, int j, int k) {
    int n = br.dim_a();
    Vec term1 = br.eval(br.eval_basis(i, j), basis_vec(n, k));
    Vec term2 = br.eval(br.eval_basis(j, k), basis_vec(n, i));
    Vec term3 = br.eval(br.eval_basis(k, i), basis_vec(n, j));
    return add(add(term1, term2), term3);
}

}  // namespace

TEST_CASE("builtin presentations") {
    OperadPresentation assoc = builtin_presentation("assoc");
    CHECK(assoc.generators.size() == 1);
    CHECK(assoc.generators[0].symmetry == Symmetry::None);
    REQUIRE(assoc.relations.size() == 1);
    CHECK(assoc.relations[0].size() == 2);

    OperadPresentation lie = builtin_presentation("lie");
    CHECK(lie.generators[0].symmetry == Symmetry::Antisymmetric);
    REQUIRE(lie.relations.size() == 1);
    CHECK(lie.relations[0].size() == 3);

    OperadPresentation comm = builtin_presentation("comm");
    CHECK(comm.generators[0].symmetry == Symmetry::Symmetric);

    OperadPresentation leib = builtin_presentation("leibniz");
    CHECK(leib.generators[0].symmetry == Symmetry::None);
    CHECK(leib.relations[0].size() == 3);

    CHECK_THROWS_AS(builtin_presentation("jordan"), ArgumentError);
}

TEST_CASE("assoc relation vanishes on a known associative algebra") {
    OperadPresentation assoc = builtin_presentation("assoc");
    PAlgebra a = upper_triangular();
    MultTable t = a.table();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) {
                Vec defect = relation_defect(assoc, t, assoc.relations[0],
                                             {Deg(0), Deg(0), Deg(0)}, {i, j, k});
                CHECK(is_zero(defect));
            }
}

TEST_CASE("comm on a 1-dim idempotent algebra") {
    OperadPresentation comm = builtin_presentation("comm");
    PAlgebra a;
    a.dim = 1;
    BilinearMap m(1, 1, 1);
    m.at(0, 0, 0) = Rational(1);
    a.mult["mul"] = std::move(m);
    CHECK(validate_algebra(comm, a).valid());
}

TEST_CASE("lie relation against the Jacobi brute-force oracle") {
    OperadPresentation lie = builtin_presentation("lie");
    PAlgebra aff = fix_a0();
    MultTable t = aff.table();
    const BilinearMap& br = aff.mult.at("bracket");
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) {
                Vec defect = relation_defect(lie, t, lie.relations[0],
                                             {Deg(0), Deg(0), Deg(0)}, {i, j, k});
                CHECK(is_zero(defect));
                CHECK(is_zero(jacobi_oracle(br, i, j, k)));
            }

    // perturbed bracket [h,e] = e, [e,h] = -e, [h,h] = e: Jacobi fails and
    // the relation evaluator agrees with the oracle about it
    PAlgebra bad = aff;
    BilinearMap perturbed = bad.mult.at("bracket");
    perturbed.at(1, 0, 0) = Rational(1);
    bad.mult["bracket"] = perturbed;
    MultTable tb = bad.table();
    bool evaluator_found = false, oracle_found = false;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) {
                if (!is_zero(relation_defect(lie, tb, lie.relations[0],
                                             {Deg(0), Deg(0), Deg(0)}, {i, j, k})))
                    evaluator_found = true;
                if (!is_zero(jacobi_oracle(perturbed, i, j, k))) oracle_found = true;
            }
    CHECK(evaluator_found);
    CHECK(oracle_found);
}

TEST_CASE("leibniz holds on aff(1) viewed as a Leibniz algebra") {
    OperadPresentation leib = builtin_presentation("leibniz");
    PAlgebra a;
    a.dim = 2;
    a.mult["bracket"] = fix_a0().mult.at("bracket");
    CHECK(validate_algebra(leib, a).valid());
}

TEST_CASE("graded lie relation on FIX-A1") {
    OperadPresentation lie = builtin_presentation("lie");
    DgPAlgebra1 a = fix_a1();
    MultTable t = a.table();
    // hand oracle on the (0,0,1) pattern with inputs (h,e,v): all three
    // nested brackets vanish, so the defect must be zero
    Vec defect = relation_defect(lie, t, lie.relations[0], {Deg(0), Deg(0), Deg(1)}, {0, 1, 0});
    CHECK(is_zero(defect));
    // full sweep of in-range degree patterns
    CHECK(validate_dg1(lie, a).valid());
}

TEST_CASE("relation_defect is multilinear in each input") {
    OperadPresentation lie = builtin_presentation("lie");
    MultTable t = fix_a0().table();
    std::mt19937_64 eng(23);
    std::uniform_int_distribution<int> num(-3, 3);
    auto rand_vec = [&] {
        Vec v(2);
        v[0] = Rational(num(eng));
        v[1] = Rational(num(eng));
        return v;
    };
    std::array<Deg, 3> degs{Deg(0), Deg(0), Deg(0)};
    for (int trial = 0; trial < 30; ++trial) {
        Vec u = rand_vec(), v = rand_vec(), w = rand_vec(), z = rand_vec();
        Rational c(num(eng));
        for (int pos = 0; pos < 3; ++pos) {
            std::array<Vec, 3> base{u, v, w};
            std::array<Vec, 3> shifted = base;
            shifted[size_t(pos)] = add(base[size_t(pos)], scale(c, z));
            std::array<Vec, 3> only = base;
            only[size_t(pos)] = z;
            Vec lhs = relation_defect_vec(lie, t, lie.relations[0], degs, shifted);
            Vec rhs = add(relation_defect_vec(lie, t, lie.relations[0], degs, base),
                          scale(c, relation_defect_vec(lie, t, lie.relations[0], degs, only)));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("symmetry normalization across degree components") {
    OperadPresentation lie = builtin_presentation("lie");
    DgPAlgebra1 a = fix_a1();
    MultTable t = a.table();
    // antisymmetric generator: mu(a,b) = -(-1)^{|a||b|} mu(b,a) on all
    // homogeneous basis pairs
    for (const auto& [da, na] : t.dims())
        for (const auto& [db, nb] : t.dims()) {
            if (!t.carries(da + db) || t.dim(da + db) == 0) continue;
            for (int i = 0; i < na; ++i)
                for (int j = 0; j < nb; ++j) {
                    Vec lhs = t.eval("bracket", da, db, basis_vec(na, i), basis_vec(nb, j));
                    Vec rhs = t.eval("bracket", db, da, basis_vec(nb, j), basis_vec(na, i));
                    int sign = da.pairing(db) ? 1 : -1;  // -(-1)^{kl}
                    CHECK(lhs == scale(Rational(sign), rhs));
                }
        }
}

TEST_CASE("missing multiplication component is reported by name") {
    MultTable t;
    t.set_dim(Deg(0), 1);
    CHECK_THROWS_WITH_AS(t.eval("mul", Deg(0), Deg(0), basis_vec(1, 0), basis_vec(1, 0)),
                         doctest::Contains("mul"), MissingComponent);
}

TEST_CASE("regular representation sweep for every builtin") {
    CHECK(validate_algebra(builtin_presentation("assoc"), upper_triangular()).valid());
    CHECK(validate_algebra(builtin_presentation("lie"), fix_a0()).valid());
    PAlgebra leib;
    leib.dim = 2;
    leib.mult["bracket"] = fix_a0().mult.at("bracket");
    CHECK(validate_algebra(builtin_presentation("leibniz"), leib).valid());
    PAlgebra comm;
    comm.dim = 1;
    BilinearMap m(1, 1, 1);
    m.at(0, 0, 0) = Rational(1);
    comm.mult["mul"] = std::move(m);
    CHECK(validate_algebra(builtin_presentation("comm"), comm).valid());
}
