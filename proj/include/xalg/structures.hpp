#pragma once

#include <map>
#include <string>

#include "xalg/operad.hpp"

namespace xalg {

/// Differential family on a graded carrier: one matrix C_d -> C_{d+delta}
/// per degree where the map is nonzero. Moving the differential past a
/// factor of degree a costs (-1)^{pairing(delta, a)}.
struct GradedDifferential {
    std::string name;
    Deg delta;
    std::map<Deg, Matrix> maps;

    const Matrix* map_at(Deg d) const {
        auto it = maps.find(d);
        return it == maps.end() ? nullptr : &it->second;
    }
    Vec apply(Deg d, const Vec& v) const {
        const Matrix* m = map_at(d);
        if (!m) return {};
        return (*m) * v;
    }
};

/// Leibniz rule sweep: for every pair of carrier degrees and every basis
/// pair, D(mu(x,y)) = mu(Dx,y) + (-1)^{pairing(delta,|x|)} mu(x,Dy), with
/// absent components read as zero. Covers the overflow constraints where
/// the product itself lives outside the carrier.
void check_derivation(const OperadPresentation& pres, const MultTable& mult,
                      const GradedDifferential& diff, CheckResult& out);

/// Plain algebra over the presentation: one structure map per generator.
struct PAlgebra {
    int dim = 0;
    std::map<std::string, BilinearMap> mult;

    MultTable table() const;
    /// Product of basis vectors e_i, e_j under the named generator.
    Vec eval(const std::string& gen, int i, int j) const;
    Vec eval(const std::string& gen, const Vec& u, const Vec& v) const;

    static PAlgebra zero(const OperadPresentation& pres, int dim);
    bool operator==(const PAlgebra& o) const { return dim == o.dim && mult == o.mult; }
};

/// Algebra structure on a two-term chain complex V1 -d-> V0. The degree
/// (1,1) component is identically zero because the carrier stops at
/// degree 1, and d is required to be a derivation.
struct DgMult {
    BilinearMap m00;  // V0 x V0 -> V0
    BilinearMap m10;  // V1 x V0 -> V1
    BilinearMap m01;  // V0 x V1 -> V1
    bool operator==(const DgMult& o) const {
        return m00 == o.m00 && m10 == o.m10 && m01 == o.m01;
    }
};

struct DgPAlgebra1 {
    Complex01 carrier;
    std::map<std::string, DgMult> mult;

    MultTable table() const;
    GradedDifferential differential() const;
    bool operator==(const DgPAlgebra1& o) const {
        return carrier.dim0 == o.carrier.dim0 && carrier.dim1 == o.carrier.dim1 &&
               carrier.d == o.carrier.d && mult == o.mult;
    }
};

/// Crossed module: algebras X and B, mixed action maps per generator, and
/// an equivariant morphism d : X -> B subject to the Peiffer identity.
struct CrossedModule {
    PAlgebra x;
    PAlgebra b;
    std::map<std::string, BilinearMap> act_left;   // B x X -> X
    std::map<std::string, BilinearMap> act_right;  // X x B -> X
    Matrix d;                                      // X -> B

    const BilinearMap& left(const std::string& gen) const;
    const BilinearMap& right(const std::string& gen) const;
    bool operator==(const CrossedModule& o) const {
        return x == o.x && b == o.b && act_left == o.act_left && act_right == o.act_right &&
               d == o.d;
    }
};

/// Reflexive graph of algebras with source, target and unit section.
struct Cat1Algebra {
    PAlgebra e;
    PAlgebra b;
    Matrix s;  // E -> B
    Matrix t;  // E -> B
    Matrix i;  // B -> E

    bool operator==(const Cat1Algebra& o) const {
        return e == o.e && b == o.b && s == o.s && t == o.t && i == o.i;
    }
};

/// Relation defects and symmetry violations on all basis triples/pairs.
Report validate_algebra(const OperadPresentation& pres, const PAlgebra& a);

/// Graded relations (degree patterns summing to <= 1), the derivation law
/// for d in every mixed component, and Koszul-signed symmetry.
Report validate_dg1(const OperadPresentation& pres, const DgPAlgebra1& a);

/// Sub-checks, in order: X and B are algebras; the block structure on
/// X (+) B is an algebra (this encodes the action axioms); d is
/// B-equivariant; d is an algebra morphism; the Peiffer identity
/// mu_X(x,y) = act_right(x, dy) = act_left(dx, y) holds on basis pairs.
Report validate_xmod(const OperadPresentation& pres, const CrossedModule& cm);

/// Sub-checks: E and B are algebras; s, t, i are morphisms; si = ti = id;
/// and the Cat1 condition mu_E(ker s, ker t) = 0 in both argument orders.
Report validate_cat1(const OperadPresentation& pres, const Cat1Algebra& c);

/// Basis pairs where f(mu_src(u,v)) differs from mu_dst(f u, f v).
Report is_morphism(const OperadPresentation& pres, const Matrix& f, const PAlgebra& src,
                   const PAlgebra& dst);

/// The block algebra on X (+) B induced by the action: X-part from
/// mu_X/act_left/act_right, B-part from mu_B, no B x B -> X component.
/// Basis order: X coordinates first, then B.
PAlgebra action_block_algebra(const OperadPresentation& pres, const CrossedModule& cm);

void append_morphism_check(const OperadPresentation& pres, const Matrix& f, const PAlgebra& src,
                           const PAlgebra& dst, CheckResult& out);

}  // namespace xalg
