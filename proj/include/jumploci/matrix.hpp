#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "scalar.hpp"

namespace jumploci {

using Vector = std::vector<Scalar>;

inline Vector zero_vector(std::size_t n, Field f) { return Vector(n, Scalar::zero(f)); }

inline Vector unit_vector(std::size_t n, std::size_t i, Field f) {
    Vector v = zero_vector(n, f);
    v.at(i) = Scalar::one(f);
    return v;
}

inline bool is_zero(const Vector& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

inline Vector& axpy(Vector& y, const Scalar& a, const Vector& x) {
    if (x.size() != y.size()) throw InputError("vector length mismatch");
    if (a.is_zero()) return y;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!x[i].is_zero()) y[i] += a * x[i];
    }
    return y;
}

inline Vector sum(Vector a, const Vector& b) {
    if (a.size() != b.size()) throw InputError("vector length mismatch");
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

inline Vector scaled(Vector v, const Scalar& s) {
    for (auto& x : v) x *= s;
    return v;
}

inline std::string to_string(const Vector& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
    os << ')';
    return os.str();
}

/// Dense row-major matrix over a single field.
class Matrix {
public:
    Matrix() = default;

    Matrix(std::size_t rows, std::size_t cols, Field f)
        : rows_(rows), cols_(cols), field_(f), data_(rows * cols, Scalar::zero(f)) {}

    static Matrix identity(std::size_t n, Field f) {
        Matrix m(n, n, f);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(f);
        return m;
    }

    static Matrix from_ints(std::initializer_list<std::initializer_list<long>> rows, Field f = Field::rational()) {
        const std::size_t r = rows.size();
        const std::size_t c = r ? rows.begin()->size() : 0;
        Matrix m(r, c, f);
        std::size_t i = 0;
        for (const auto& row : rows) {
            if (row.size() != c) throw InputError("ragged matrix literal");
            std::size_t j = 0;
            for (long x : row) m(i, j++) = Scalar(f, x);
            ++i;
        }
        return m;
    }

    static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows, Field f) {
        Matrix m(rows, cols.size(), f);
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != rows) throw InputError("column length mismatch");
            for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Field field() const { return field_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Scalar& at(std::size_t i, std::size_t j) {
        if (i >= rows_ || j >= cols_) throw InputError("matrix index out of range");
        return (*this)(i, j);
    }
    const Scalar& at(std::size_t i, std::size_t j) const {
        if (i >= rows_ || j >= cols_) throw InputError("matrix index out of range");
        return (*this)(i, j);
    }

    Vector row(std::size_t i) const { return Vector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_); }

    Vector column(std::size_t j) const {
        Vector v;
        v.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
        return v;
    }

    void set_row(std::size_t i, const Vector& v) {
        if (v.size() != cols_) throw InputError("row length mismatch");
        std::copy(v.begin(), v.end(), data_.begin() + i * cols_);
    }

    void set_column(std::size_t j, const Vector& v) {
        if (v.size() != rows_) throw InputError("column length mismatch");
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
    }

    bool is_zero() const { return jumploci::is_zero(data_); }

    /// Throws InputError when any entry lives in a different field.
    void check_field() const {
        for (const auto& s : data_) {
            if (s.field() != field_) throw InputError("matrix mixes field modes");
        }
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_, field_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Vector apply(const Vector& v) const {
        if (v.size() != cols_) throw InputError("matrix-vector shape mismatch");
        Vector out = zero_vector(rows_, field_);
        for (std::size_t j = 0; j < cols_; ++j) {
            if (v[j].is_zero()) continue;
            for (std::size_t i = 0; i < rows_; ++i) {
                const auto& a = (*this)(i, j);
                if (!a.is_zero()) out[i] += a * v[j];
            }
        }
        return out;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw InputError("matrix product shape mismatch");
        if (a.field_ != b.field_) throw InputError("mixed field arithmetic");
        Matrix c(a.rows_, b.cols_, a.field_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const auto& x = a(i, k);
                if (x.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const auto& y = b(k, j);
                    if (!y.is_zero()) c(i, j) += x * y;
                }
            }
        }
        return c;
    }

    Matrix& operator+=(const Matrix& o) {
        check_same_shape(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
        return *this;
    }

    Matrix& operator-=(const Matrix& o) {
        check_same_shape(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
        return *this;
    }

    Matrix& operator*=(const Scalar& s) {
        for (auto& x : data_) x *= s;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
    friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    Matrix to_field(Field f) const {
        Matrix m(rows_, cols_, f);
        for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i].to_field(f);
        return m;
    }

    std::string to_string() const {
        std::ostringstream os;
        os << '[';
        for (std::size_t i = 0; i < rows_; ++i) os << (i ? ", " : "") << jumploci::to_string(row(i));
        os << ']';
        return os.str();
    }

private:
    void check_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix shape mismatch");
        if (field_ != o.field_) throw InputError("mixed field arithmetic");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    Field field_;
    std::vector<Scalar> data_;
};

inline Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

/// Block matrix [a | b].
inline Matrix hstack(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw InputError("hstack row mismatch");
    Matrix m(a.rows(), a.cols() + b.cols(), a.field());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) m(i, a.cols() + j) = b(i, j);
    }
    return m;
}

namespace detail {

/// In-place reduced row echelon form; returns pivot columns.
inline std::vector<std::size_t> rref(Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != r) {
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        }
        const Scalar inv = m(r, c).inverse();
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            const Scalar f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) {
                if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

/// Fraction-free (Bareiss) rank over Q after clearing row denominators.
inline std::size_t bareiss_rank(const Matrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<mpz_class> a(rows * cols);
    for (std::size_t i = 0; i < rows; ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < cols; ++j) {
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).as_rational().get_den_mpz_t());
        }
        for (std::size_t j = 0; j < cols; ++j) {
            const auto& q = m(i, j).as_rational();
            a[i * cols + j] = q.get_num() * (l / q.get_den());
        }
    }
    mpz_class prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p * cols + c] == 0) ++p;
        if (p == rows) continue;
        if (p != r) {
            for (std::size_t j = 0; j < cols; ++j) std::swap(a[p * cols + j], a[r * cols + j]);
        }
        const mpz_class pivot = a[r * cols + c];
        for (std::size_t i = r + 1; i < rows; ++i) {
            const mpz_class lead = a[i * cols + c];
            for (std::size_t j = c + 1; j < cols; ++j) {
                mpz_class v = pivot * a[i * cols + j] - lead * a[r * cols + j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a[i * cols + j] = std::move(v);
            }
            a[i * cols + c] = 0;
        }
        prev = pivot;
        ++r;
    }
    return r;
}

}  // namespace detail

/// Exact rank. Fraction-free elimination over Q, Gaussian elimination over F_p.
inline std::size_t rank(const Matrix& m) {
    m.check_field();
    if (m.rows() == 0 || m.cols() == 0) return 0;
    if (m.field().is_rational()) return detail::bareiss_rank(m);
    Matrix work = m;
    return detail::rref(work).size();
}

/// Basis of the right null space, one vector per free column of the echelon form.
inline std::vector<Vector> kernel_basis(const Matrix& m) {
    m.check_field();
    Matrix work = m;
    const auto pivots = detail::rref(work);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vector v = zero_vector(m.cols(), m.field());
        v[free] = Scalar::one(m.field());
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -work(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Some exact solution of m x = b, or nullopt when the system is inconsistent.
inline std::optional<Vector> solve(const Matrix& m, const Vector& b) {
    if (b.size() != m.rows()) throw InputError("solve: right-hand side has wrong length");
    m.check_field();
    Matrix aug(m.rows(), m.cols() + 1, m.field());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (b[i].field() != m.field()) throw InputError("mixed field arithmetic");
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    const auto pivots = detail::rref(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    Vector x = zero_vector(m.cols(), m.field());
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, m.cols());
    return x;
}

inline std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw InputError("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    Matrix aug = hstack(m, Matrix::identity(n, m.field()));
    const auto pivots = detail::rref(aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
    Matrix inv(n, n, m.field());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

inline Scalar determinant(const Matrix& m) {
    if (m.rows() != m.cols()) throw InputError("determinant of a non-square matrix");
    Matrix a = m;
    const std::size_t n = a.rows();
    Scalar det = Scalar::one(m.field());
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a(p, c).is_zero()) ++p;
        if (p == n) return Scalar::zero(m.field());
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
            det = -det;
        }
        det *= a(c, c);
        const Scalar inv = a(c, c).inverse();
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a(i, c).is_zero()) continue;
            const Scalar f = a(i, c) * inv;
            for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
        }
    }
    return det;
}

/// Dimension of the intersection of the column spaces of a and b.
inline std::size_t intersection_dimension(const Matrix& a, const Matrix& b) {
    return rank(a) + rank(b) - rank(hstack(a, b));
}

}  // namespace jumploci
