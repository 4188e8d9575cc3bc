#pragma once

#include <initializer_list>
#include <optional>
#include <vector>

#include "xalg/rational.hpp"

namespace xalg {

using Vec = std::vector<Rational>;

Vec zero_vec(int n);
Vec basis_vec(int n, int i);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Rational& c, const Vec& v);
bool is_zero(const Vec& v);
/// In-place a += c*b.
void axpy(Vec& a, const Rational& c, const Vec& b);

/// Dense exact matrix. Rows index the target basis, columns the source basis,
/// so composition of linear maps reads as the matrix product.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols) {}
    Matrix(std::initializer_list<std::initializer_list<Rational>> grid);

    static Matrix identity(int n);
    static Matrix zero(int rows, int cols) { return Matrix(rows, cols); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& at(int i, int j) { return data_[size_t(i) * cols_ + j]; }
    const Rational& at(int i, int j) const { return data_[size_t(i) * cols_ + j]; }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator-() const;
    Vec operator*(const Vec& v) const;

    bool is_zero() const;
    Matrix transpose() const;
    int rank() const;
    /// Inverse of a square matrix; throws ArgumentError if singular.
    Matrix inverse() const;

    /// Column j as a vector in the target space.
    Vec col(int j) const;
    void set_col(int j, const Vec& v);

    /// [a | b] side by side.
    static Matrix hcat(const Matrix& a, const Matrix& b);
    /// [a ; b] stacked.
    static Matrix vcat(const Matrix& a, const Matrix& b);
    /// Matrix whose columns are the given vectors.
    static Matrix from_cols(int ambient, const std::vector<Vec>& cols);

private:
    int rows_, cols_;
    std::vector<Rational> data_;
};

/// Subspace of Q^n given by a basis in reduced row echelon form, so two
/// subspaces are equal iff their stored grids are equal.
class Subspace {
public:
    Subspace() : ambient_(0) {}
    Subspace(int ambient, std::vector<Vec> basis);

    int ambient_dim() const { return ambient_; }
    int dim() const { return int(basis_.size()); }
    const std::vector<Vec>& basis() const { return basis_; }

    bool contains(const Vec& v) const;
    /// Coordinates of v in the stored basis; nullopt when v is outside.
    std::optional<Vec> coordinates(const Vec& v) const;
    /// Basis vectors as the columns of an ambient x dim matrix.
    Matrix basis_matrix() const;

    bool operator==(const Subspace& o) const {
        return ambient_ == o.ambient_ && basis_ == o.basis_;
    }

private:
    int ambient_;
    std::vector<Vec> basis_;  // RREF rows
};

/// In-place Gauss-Jordan reduction; returns the pivot columns.
std::vector<int> rref(Matrix& m);

/// RREF basis of the null space {v : m v = 0}.
Subspace kernel_basis(const Matrix& m);

/// One exact solution of m x = rhs, or nullopt when the system is
/// inconsistent. Free variables are set to zero.
std::optional<Vec> solve(const Matrix& m, const Vec& rhs);

/// Trilinear structure tensor of a bilinear map A x B -> Out over fixed
/// bases: entry (k, i, j) is the k-th output coordinate of e_i * e_j.
class BilinearMap {
public:
    BilinearMap() : dim_a_(0), dim_b_(0), dim_out_(0) {}
    BilinearMap(int dim_a, int dim_b, int dim_out)
        : dim_a_(dim_a), dim_b_(dim_b), dim_out_(dim_out),
          tensor_(size_t(dim_out) * dim_a * dim_b) {}

    int dim_a() const { return dim_a_; }
    int dim_b() const { return dim_b_; }
    int dim_out() const { return dim_out_; }

    Rational& at(int k, int i, int j) {
        return tensor_[(size_t(k) * dim_a_ + i) * dim_b_ + j];
    }
    const Rational& at(int k, int i, int j) const {
        return tensor_[(size_t(k) * dim_a_ + i) * dim_b_ + j];
    }

    Vec eval(const Vec& u, const Vec& v) const;
    Vec eval_basis(int i, int j) const;

    bool is_zero() const;
    bool operator==(const BilinearMap& o) const {
        return dim_a_ == o.dim_a_ && dim_b_ == o.dim_b_ && dim_out_ == o.dim_out_ &&
               tensor_ == o.tensor_;
    }

private:
    int dim_a_, dim_b_, dim_out_;
    std::vector<Rational> tensor_;
};

}  // namespace xalg
