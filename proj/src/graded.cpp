#include "xalg/graded.hpp"

#include <algorithm>
#include <numeric>

namespace xalg {

bool is_permutation(std::span<const int> perm) {
    std::vector<bool> seen(perm.size(), false);
    for (int p : perm) {
        if (p < 0 || p >= int(perm.size()) || seen[size_t(p)]) return false;
        seen[size_t(p)] = true;
    }
    return true;
}

int koszul_sign(std::span<const int> perm, std::span<const Deg> degrees) {
    if (perm.size() != degrees.size()) throw ShapeError("permutation/degree length mismatch");
    if (!is_permutation(perm)) throw ArgumentError("not a permutation");
    // Weighted inversion count: equals the product of (-1)^{kl} over any
    // realization by adjacent swaps.
    int parity = 0;
    for (size_t i = 0; i < perm.size(); ++i)
        for (size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) parity ^= degrees[i].pairing(degrees[j]);
    return parity ? -1 : 1;
}

int koszul_sign(std::span<const int> perm, std::span<const int> degrees) {
    std::vector<Deg> degs(degrees.begin(), degrees.end());
    return koszul_sign(perm, degs);
}

std::vector<Shuffle> enumerate_shuffles(int p, int q) {
    if (p < 0 || q < 0) throw ArgumentError("negative shuffle parameters");
    std::vector<Shuffle> out;
    int n = p + q;
    std::vector<int> mu(static_cast<size_t>(p));
    std::iota(mu.begin(), mu.end(), 1);
    while (true) {
        Shuffle s;
        s.p = p;
        s.q = q;
        s.mu = mu;
        std::vector<bool> used(size_t(n) + 1, false);
        for (int m : mu) used[size_t(m)] = true;
        for (int i = 1; i <= n; ++i)
            if (!used[size_t(i)]) s.nu.push_back(i);
        out.push_back(std::move(s));
        // next p-subset of {1..n} in lexicographic order
        int i = p - 1;
        while (i >= 0 && mu[size_t(i)] == n - (p - 1 - i)) --i;
        if (i < 0) break;
        ++mu[size_t(i)];
        for (int j = i + 1; j < p; ++j) mu[size_t(j)] = mu[size_t(j - 1)] + 1;
    }
    return out;
}

Complex01::Complex01(int dim1_, int dim0_, Matrix d_) : dim1(dim1_), dim0(dim0_), d(std::move(d_)) {
    if (d.rows() != dim0 || d.cols() != dim1)
        throw ShapeError("differential must be dim0 x dim1");
}

BoundaryImage partial_boundary(const Complex01& v, int n, const Shuffle& shuffle,
                               std::span<const int> input) {
    if (shuffle.p + shuffle.q != n || int(input.size()) != n)
        throw ArgumentError("shuffle does not match the arity");
    std::vector<bool> in_mu(size_t(n) + 1, false);
    for (int m : shuffle.mu) {
        if (m < 1 || m > n || in_mu[size_t(m)]) throw ArgumentError("invalid shuffle positions");
        in_mu[size_t(m)] = true;
    }
    for (int pos = 1; pos <= n; ++pos) {
        int lim = in_mu[size_t(pos)] ? v.dim1 : v.dim0;
        if (input[size_t(pos - 1)] < 0 || input[size_t(pos - 1)] >= lim)
            throw ArgumentError("basis index out of range for its factor");
    }

    BoundaryImage img;
    if (shuffle.p <= 1) {
        img.v1_position = shuffle.p == 1 ? shuffle.mu[0] : 0;
        img.terms.push_back({std::vector<int>(input.begin(), input.end()), Rational(1)});
        return img;
    }
    img.v1_position = shuffle.mu[0];
    // Expand d on every V1 copy after the leftmost one.
    img.terms.push_back({std::vector<int>(input.begin(), input.end()), Rational(1)});
    for (size_t k = 1; k < shuffle.mu.size(); ++k) {
        int pos = shuffle.mu[k];
        std::vector<std::pair<std::vector<int>, Rational>> next;
        for (const auto& [idx, coeff] : img.terms) {
            int src = idx[size_t(pos - 1)];
            for (int tgt = 0; tgt < v.dim0; ++tgt) {
                const Rational& entry = v.d.at(tgt, src);
                if (entry.is_zero()) continue;
                std::vector<int> idx2 = idx;
                idx2[size_t(pos - 1)] = tgt;
                next.push_back({std::move(idx2), coeff * entry});
            }
        }
        img.terms = std::move(next);
    }
    return img;
}

int Square11::dim(Deg d) const {
    if (d == Deg(0, 0)) return dim00;
    if (d == Deg(1, 0)) return dim10;
    if (d == Deg(0, 1)) return dim01;
    if (d == Deg(1, 1)) return dim11;
    return 0;
}

void Square11::check_shapes() const {
    if (dh0.rows() != dim00 || dh0.cols() != dim10) throw ShapeError("dh0 must be C10 -> C00");
    if (dh1.rows() != dim01 || dh1.cols() != dim11) throw ShapeError("dh1 must be C11 -> C01");
    if (dv0.rows() != dim00 || dv0.cols() != dim01) throw ShapeError("dv0 must be C01 -> C00");
    if (dv1.rows() != dim10 || dv1.cols() != dim11) throw ShapeError("dv1 must be C11 -> C10");
}

TotComplex tot2(const Square11& sq) {
    sq.check_shapes();
    if (!sq.commutes()) throw ArgumentError("square differentials do not commute");
    TotComplex t;
    t.dims = {sq.dim00, sq.dim10 + sq.dim01, sq.dim11};
    t.d1 = Matrix::hcat(sq.dh0, sq.dv0);
    t.d2 = Matrix::vcat(sq.dv1, -sq.dh1);
    return t;
}

}  // namespace xalg
