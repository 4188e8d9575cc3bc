#include "xalg/linalg.hpp"

namespace xalg {

Vec zero_vec(int n) { return Vec(size_t(n)); }

Vec basis_vec(int n, int i) {
    Vec v(static_cast<size_t>(n));
    v[size_t(i)] = Rational(1);
    return v;
}

Vec add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw ShapeError("vector sizes differ in add");
    Vec r(a);
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return r;
}

Vec sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw ShapeError("vector sizes differ in sub");
    Vec r(a);
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return r;
}

Vec scale(const Rational& c, const Vec& v) {
    Vec r(v);
    for (auto& x : r) x *= c;
    return r;
}

bool is_zero(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

void axpy(Vec& a, const Rational& c, const Vec& b) {
    if (a.size() != b.size()) throw ShapeError("vector sizes differ in axpy");
    for (size_t i = 0; i < b.size(); ++i) a[i] += c * b[i];
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> grid) {
    rows_ = int(grid.size());
    cols_ = rows_ ? int(grid.begin()->size()) : 0;
    data_.reserve(size_t(rows_) * cols_);
    for (const auto& row : grid) {
        if (int(row.size()) != cols_) throw ShapeError("ragged matrix initializer");
        for (const auto& x : row) data_.push_back(x);
    }
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw ShapeError("matrix product shape mismatch");
    Matrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rational& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix sum shape mismatch");
    Matrix r(*this);
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix difference shape mismatch");
    Matrix r(*this);
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
    return r;
}

Matrix Matrix::operator-() const {
    Matrix r(*this);
    for (auto& x : r.data_) x = -x;
    return r;
}

Vec Matrix::operator*(const Vec& v) const {
    if (int(v.size()) != cols_) throw ShapeError("matrix-vector shape mismatch");
    Vec r(static_cast<size_t>(rows_));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero()) r[size_t(i)] += at(i, j) * v[size_t(j)];
    return r;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

Matrix Matrix::transpose() const {
    Matrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

int Matrix::rank() const {
    Matrix copy(*this);
    return int(rref(copy).size());
}

Matrix Matrix::inverse() const {
    if (rows_ != cols_) throw ArgumentError("inverse of a non-square matrix");
    Matrix aug = hcat(*this, identity(rows_));
    std::vector<int> pivots = rref(aug);
    if (int(pivots.size()) != rows_) throw ArgumentError("inverse of a singular matrix");
    Matrix r(rows_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < rows_; ++j) r.at(i, j) = aug.at(i, cols_ + j);
    return r;
}

Vec Matrix::col(int j) const {
    Vec v(static_cast<size_t>(rows_));
    for (int i = 0; i < rows_; ++i) v[size_t(i)] = at(i, j);
    return v;
}

void Matrix::set_col(int j, const Vec& v) {
    if (int(v.size()) != rows_) throw ShapeError("column length mismatch");
    for (int i = 0; i < rows_; ++i) at(i, j) = v[size_t(i)];
}

Matrix Matrix::hcat(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_) throw ShapeError("hcat row mismatch");
    Matrix r(a.rows_, a.cols_ + b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
        for (int j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols_; ++j) r.at(i, a.cols_ + j) = b.at(i, j);
    }
    return r;
}

Matrix Matrix::vcat(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.cols_) throw ShapeError("vcat column mismatch");
    Matrix r(a.rows_ + b.rows_, a.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows_; ++i)
        for (int j = 0; j < b.cols_; ++j) r.at(a.rows_ + i, j) = b.at(i, j);
    return r;
}

Matrix Matrix::from_cols(int ambient, const std::vector<Vec>& cols) {
    Matrix r(ambient, int(cols.size()));
    for (int j = 0; j < int(cols.size()); ++j) r.set_col(j, cols[size_t(j)]);
    return r;
}

std::vector<int> rref(Matrix& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int pivot = -1;
        for (int i = row; i < m.rows(); ++i)
            if (!m.at(i, col).is_zero()) { pivot = i; break; }
        if (pivot < 0) continue;
        if (pivot != row)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(row, j), m.at(pivot, j));
        Rational inv = m.at(row, col).inverse();
        for (int j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            Rational f = m.at(i, col);
            for (int j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

Subspace::Subspace(int ambient, std::vector<Vec> basis) : ambient_(ambient) {
    Matrix m(int(basis.size()), ambient);
    for (int i = 0; i < int(basis.size()); ++i) {
        if (int(basis[size_t(i)].size()) != ambient)
            throw ShapeError("subspace basis vector of wrong length");
        for (int j = 0; j < ambient; ++j) m.at(i, j) = basis[size_t(i)][size_t(j)];
    }
    std::vector<int> pivots = rref(m);
    basis_.resize(pivots.size());
    for (int i = 0; i < int(pivots.size()); ++i) {
        basis_[size_t(i)].resize(size_t(ambient));
        for (int j = 0; j < ambient; ++j) basis_[size_t(i)][size_t(j)] = m.at(i, j);
    }
}

bool Subspace::contains(const Vec& v) const {
    return coordinates(v).has_value();
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
    if (int(v.size()) != ambient_) throw ShapeError("vector length differs from ambient dim");
    // Reduce against the RREF rows; the eliminated coefficients are the
    // coordinates because each row has a unit leading entry.
    Vec residue = v;
    Vec coords(basis_.size());
    for (size_t r = 0; r < basis_.size(); ++r) {
        int lead = -1;
        for (int j = 0; j < ambient_; ++j)
            if (!basis_[r][size_t(j)].is_zero()) { lead = j; break; }
        if (lead < 0) continue;
        Rational c = residue[size_t(lead)];
        if (c.is_zero()) continue;
        coords[r] = c;
        axpy(residue, -c, basis_[r]);
    }
    if (!is_zero(residue)) return std::nullopt;
    return coords;
}

Matrix Subspace::basis_matrix() const {
    Matrix m(ambient_, dim());
    for (int j = 0; j < dim(); ++j) m.set_col(j, basis_[size_t(j)]);
    return m;
}

Subspace kernel_basis(const Matrix& m) {
    Matrix red(m);
    std::vector<int> pivots = rref(red);
    std::vector<bool> is_pivot(size_t(m.cols()), false);
    for (int p : pivots) is_pivot[size_t(p)] = true;
    std::vector<Vec> basis;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[size_t(free)]) continue;
        Vec v(static_cast<size_t>(m.cols()));
        v[size_t(free)] = Rational(1);
        for (int r = 0; r < int(pivots.size()); ++r)
            v[size_t(pivots[size_t(r)])] = -red.at(r, free);
        basis.push_back(std::move(v));
    }
    return Subspace(m.cols(), std::move(basis));
}

std::optional<Vec> solve(const Matrix& m, const Vec& rhs) {
    if (int(rhs.size()) != m.rows()) throw ShapeError("rhs length differs from row count");
    Matrix aug = Matrix::hcat(m, Matrix::from_cols(m.rows(), {rhs}));
    std::vector<int> pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    Vec x(static_cast<size_t>(m.cols()));
    for (int r = 0; r < int(pivots.size()); ++r)
        x[size_t(pivots[size_t(r)])] = aug.at(r, m.cols());
    return x;
}

Vec BilinearMap::eval(const Vec& u, const Vec& v) const {
    if (int(u.size()) != dim_a_ || int(v.size()) != dim_b_)
        throw ShapeError("bilinear map argument shape mismatch");
    Vec out(static_cast<size_t>(dim_out_));
    for (int i = 0; i < dim_a_; ++i) {
        if (u[size_t(i)].is_zero()) continue;
        for (int j = 0; j < dim_b_; ++j) {
            if (v[size_t(j)].is_zero()) continue;
            Rational uv = u[size_t(i)] * v[size_t(j)];
            for (int k = 0; k < dim_out_; ++k)
                if (!at(k, i, j).is_zero()) out[size_t(k)] += at(k, i, j) * uv;
        }
    }
    return out;
}

Vec BilinearMap::eval_basis(int i, int j) const {
    Vec out(static_cast<size_t>(dim_out_));
    for (int k = 0; k < dim_out_; ++k) out[size_t(k)] = at(k, i, j);
    return out;
}

bool BilinearMap::is_zero() const {
    for (const auto& x : tensor_)
        if (!x.is_zero()) return false;
    return true;
}

}  // namespace xalg
