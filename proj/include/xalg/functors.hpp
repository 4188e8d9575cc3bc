#pragma once

#include <variant>

#include "xalg/structures.hpp"

namespace xalg {

/// Derived operations: X = V1 with mu_X(x,y) = mult10(x, dy), B = V0,
/// actions the mixed components, d the carrier differential. Refuses
/// invalid input with its validation report.
CrossedModule dg_to_xmod(const OperadPresentation& pres, const DgPAlgebra1& a);

/// mult00 = mu_B, mult10 = act_right, mult01 = act_left; the degree >= 2
/// components vanish. Refuses invalid input.
DgPAlgebra1 xmod_to_dg(const OperadPresentation& pres, const CrossedModule& cm);

/// Universal semidirect product: E = V1 (+) V0 with the multiplication
/// obtained by precomposing the structure maps with the boundary map on
/// shuffle summands, s = (0 | id), t = (d | id), i the inclusion of V0.
Cat1Algebra dg_to_cat1(const OperadPresentation& pres, const DgPAlgebra1& a);

/// Composite of xmod_to_dg and dg_to_cat1 (equal, by Peiffer, to the
/// reflexive graph on the block algebra X (+) B). Refuses invalid input.
Cat1Algebra xmod_to_cat1(const OperadPresentation& pres, const CrossedModule& cm);

/// Reflexive graph on the block algebra X (+) B of a (pre)crossed module,
/// built without validation. Diagnostic hook: on Peiffer-violating input
/// the result fails the Cat1 condition in exactly the mirrored spots.
Cat1Algebra build_semidirect(const OperadPresentation& pres, const CrossedModule& cm);

/// X = ker(s) in its RREF basis with the restricted multiplication,
/// actions through the section i, d = t restricted. Refuses invalid input.
CrossedModule cat1_to_xmod(const OperadPresentation& pres, const Cat1Algebra& c);

/// Diagnostic for the unique candidate composition c(g,f) = f + g - isg on
/// the pullback P = {(g,f) : sg = tf}. Valid on any reflexive graph of the
/// right shapes; check (b) holds iff the Cat1 condition does.
struct CompositionReport {
    Report report;
    int pullback_dim = 0;

    bool closed_pass() const;    // (a) P closed under the product
    bool morphism_pass() const;  // (b) composition is an algebra morphism
    bool units_pass() const;     // (c) c(g, isg) = g and c(itf, f) = f
};

CompositionReport cat1_compose(const OperadPresentation& pres, const Cat1Algebra& c);

/// Ternary probe for the semidirect construction: evaluates the composite
/// gamma = gen o_slot gen on basis elements of V1 (+) V0 by precomposition
/// with the arity-3 boundary map. slot 1 is gen(gen(a,b),c), slot 2 is
/// gen(a, gen(b,c)).
Vec semidirect_ternary(const DgPAlgebra1& a, const std::string& gen, int slot,
                       std::array<int, 3> e_basis);

using Structure = std::variant<DgPAlgebra1, CrossedModule, Cat1Algebra>;

struct RoundTripReport {
    std::string direction;
    bool isomorphic = false;
    std::vector<Witness> mismatches;
};

/// Applies the named functors in order; the path must return to the kind
/// of the input, which is then compared against the result up to the
/// canonical basis alignment (the RREF kernel identification for Cat1
/// inputs, literal equality otherwise).
RoundTripReport roundtrip(const OperadPresentation& pres, const Structure& start,
                          const std::vector<std::string>& path);

std::string kind_of(const Structure& s);

}  // namespace xalg
