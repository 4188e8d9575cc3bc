#pragma once

#include "xalg/structures.hpp"

namespace xalg {

/// Algebra structure on a commuting square concentrated in bidegrees
/// {0,1}^2. Multiplication components C_a x C_b -> C_{a+b} are stored only
/// where the componentwise sum stays inside the square; everything else is
/// zero. Bidegrees are (horizontal, vertical).
struct TwoCrossed {
    Square11 square;
    std::map<std::string, std::map<std::pair<Deg, Deg>, BilinearMap>> mult;

    MultTable table() const;
    GradedDifferential horizontal() const;
    GradedDifferential vertical() const;
};

/// Graded algebra on a three-term complex Tot2 -> Tot1 -> Tot0, one
/// multiplication component per pair of total degrees summing to <= 2.
struct DgPAlgebra2 {
    std::array<int, 3> dims{0, 0, 0};
    Matrix d1;
    Matrix d2;
    std::map<std::string, std::map<std::pair<int, int>, BilinearMap>> mult;

    MultTable table() const;
    GradedDifferential differential() const;
};

/// Square commutation, both derivation laws with their level-wise Koszul
/// signs, bidegree-signed symmetry, and all graded relation defects.
Report validate_2crossed(const OperadPresentation& pres, const TwoCrossed& t);

/// d1 d2 = 0, the derivation law for the total differential, symmetry and
/// relations in the total grading.
Report validate_dg2(const OperadPresentation& pres, const DgPAlgebra2& a);

/// Totalization with the multiplication assembled blockwise: merging
/// factors of bidegrees (p1,q1) and (p2,q2) carries the sign (-1)^{p1 q2},
/// the convention forced by d2 = (dv1 ; -dh1). Refuses invalid input.
DgPAlgebra2 tot_algebra(const OperadPresentation& pres, const TwoCrossed& t);

struct CornerAlgebras {
    PAlgebra g00, g10, g01, g11;
};

/// The four derived corner brackets of a 2-crossed Lie structure:
/// [x,y] on C00 unchanged, [x, dv0 y] on C01, [x, dh0 y] on C10 and
/// [x, dh0 dv1 y] on C11. Verifies that the companion forms written with
/// the differential on the other argument(s) agree, and that every corner
/// is itself a valid algebra; disagreement raises InternalError.
CornerAlgebras corner_algebras(const OperadPresentation& pres, const TwoCrossed& t);

/// Derivations of a dg Lie algebra g concentrated in degrees 0 and 1.
/// Degree 0: pairs of matrices commuting with d that satisfy the Leibniz
/// rule in every component; degree 1: maps g0 -> g1 with the graded rule.
/// The carrier of `algebra` is Der1 -boundary-> Der0 with the commutator
/// brackets; boundary is E |-> (d E, E d).
struct DerivationAlgebra {
    DgPAlgebra1 algebra;
    std::vector<std::pair<Matrix, Matrix>> der0_basis;  // (action on g0, action on g1)
    std::vector<Matrix> der1_basis;                     // g0 -> g1
};

DerivationAlgebra derivations(const OperadPresentation& pres, const DgPAlgebra1& g);

/// The 2-crossed structure on the square
///
///     Der(g)1 <--ad-- g1
///        |            |
///        |            |
///     Der(g)0 <--ad-- g0
///
/// with the derivation boundary and the differential of g as vertical
/// maps, commutator brackets on the Der side and evaluation actions at
/// every bidegree with an in-square target.
TwoCrossed ad_square(const OperadPresentation& pres, const DgPAlgebra1& g);

}  // namespace xalg
