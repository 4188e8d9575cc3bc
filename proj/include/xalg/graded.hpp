#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "xalg/linalg.hpp"

namespace xalg {

/// Homogeneous degree, at most two grading levels deep. Plain algebras live
/// at (0,0), chain complexes at (k,0), bicomplexes at (p,q).
struct Deg {
    int a = 0;
    int b = 0;

    Deg() = default;
    Deg(int a_) : a(a_) {}
    Deg(int a_, int b_) : a(a_), b(b_) {}

    Deg operator+(Deg o) const { return Deg(a + o.a, b + o.b); }
    bool operator==(Deg o) const { return a == o.a && b == o.b; }
    bool operator!=(Deg o) const { return !(*this == o); }
    bool operator<(Deg o) const { return a != o.a ? a < o.a : b < o.b; }

    /// Koszul pairing mod 2: transposing factors of degrees d, e costs
    /// (-1)^{pair(d,e)}, one product per grading level.
    int pairing(Deg o) const { return (a * o.a + b * o.b) & 1; }

    std::string str() const {
        return b == 0 && a < 10 ? std::to_string(a)
                                : "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    }
};

/// Sign of rearranging homogeneous tensor factors so that the factor at
/// position i moves to position perm[i] (0-based). Each adjacent swap of
/// factors with degrees k, l contributes (-1)^{kl}; the result does not
/// depend on the chosen decomposition into swaps.
int koszul_sign(std::span<const int> perm, std::span<const Deg> degrees);
int koszul_sign(std::span<const int> perm, std::span<const int> degrees);

bool is_permutation(std::span<const int> perm);

/// A (p,q)-shuffle, stored as the partition (mu, nu) of {1, ..., p+q} with
/// mu increasing of size p and nu increasing of size q.
struct Shuffle {
    int p = 0;
    int q = 0;
    std::vector<int> mu;  // 1-based positions of the V1 factors
    std::vector<int> nu;  // 1-based positions of the V0 factors

    bool operator==(const Shuffle& o) const {
        return p == o.p && q == o.q && mu == o.mu && nu == o.nu;
    }
};

/// All (p,q)-shuffles in lexicographic order of mu; size binomial(p+q, p).
std::vector<Shuffle> enumerate_shuffles(int p, int q);

/// Two-term chain complex 0 -> V1 -d-> V0 -> 0.
struct Complex01 {
    int dim1 = 0;
    int dim0 = 0;
    Matrix d;  // dim0 x dim1

    Complex01() = default;
    Complex01(int dim1_, int dim0_, Matrix d_);
};

/// Image of one basis tensor of a shuffle summand under the boundary map.
/// The map keeps the leftmost V1 factor and applies d to every other V1
/// copy, landing in the summand with V1 in position v1_position only;
/// (0,n)- and (1,n-1)-shuffles are included by the identity.
struct BoundaryImage {
    /// 1-based position of the surviving V1 factor; 0 when the image lies
    /// in the degree-0 part V0^{(x)n}.
    int v1_position = 0;
    /// Expansion over basis tensors of the target summand.
    std::vector<std::pair<std::vector<int>, Rational>> terms;
};

/// Boundary of the basis tensor with indices `input` (position mu_k indexes
/// the V1 basis, position nu_k the V0 basis) in the (p, n-p) summand named
/// by `shuffle`.
BoundaryImage partial_boundary(const Complex01& v, int n, const Shuffle& shuffle,
                               std::span<const int> input);

/// Commuting square of spaces concentrated in bidegrees {0,1}^2:
///
///     C01 <--dh1-- C11
///      |            |
///     dv0          dv1
///      |            |
///     C00 <--dh0-- C10
struct Square11 {
    int dim00 = 0, dim10 = 0, dim01 = 0, dim11 = 0;
    Matrix dh0;  // C10 -> C00
    Matrix dh1;  // C11 -> C01
    Matrix dv0;  // C01 -> C00
    Matrix dv1;  // C11 -> C10

    int dim(Deg d) const;
    bool commutes() const { return dv0 * dh1 == dh0 * dv1; }
    void check_shapes() const;
};

/// Three-term complex Tot2 -d2-> Tot1 -d1-> Tot0 with d1 d2 = 0.
struct TotComplex {
    std::array<int, 3> dims{0, 0, 0};
    Matrix d1;  // Tot1 -> Tot0
    Matrix d2;  // Tot2 -> Tot1
};

/// Totalization: Tot0 = C00, Tot1 = C10 (+) C01, Tot2 = C11, with
/// d1 = (dh0 | dv0) and d2 = (dv1 ; -dh1). Throws ArgumentError when the
/// square does not commute.
TotComplex tot2(const Square11& sq);

}  // namespace xalg
