#pragma once

#include <string>
#include <vector>

#include "leonard/scalar.hpp"

namespace leonard {

/// Dense exact matrix over one field. Rows and columns are indexed from 0.
/// Immutable in spirit: operations return new values.
class Matrix {
public:
    Matrix(int rows, int cols, const FieldSpec& f); // zero-filled

    static Matrix identity(int n, const FieldSpec& f);
    static Matrix diagonal(const std::vector<Scalar>& d);
    /// Outer product col * row^T; both vectors in the same field.
    static Matrix outer(const std::vector<Scalar>& col, const std::vector<Scalar>& row);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const FieldSpec& field() const { return field_; }

    const Scalar& at(int i, int j) const;
    void set(int i, int j, Scalar v);

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix scaled(const Scalar& k) const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    bool is_zero() const;
    Matrix transpose() const;

    /// Sum of diagonal entries; requires a square matrix.
    Scalar trace() const;

    /// Exact rank. Over the rationals each row is scaled to integers and a
    /// fraction-free (Bareiss) elimination runs on them; over GF(p) a plain
    /// modular elimination is used.
    int rank() const;

    std::string str() const; // row-per-line debug form

private:
    void check_index(int i, int j) const;

    int rows_;
    int cols_;
    FieldSpec field_;
    std::vector<Scalar> e_; // row-major
};

/// Outcome of the mutually-orthogonal-idempotents test. When ok is false the
/// clause names what failed ("product", "rank" or "sum") and i, j point at the
/// offending member(s) where applicable.
struct IdempotentSystemVerdict {
    bool ok = true;
    std::string clause;
    int i = -1;
    int j = -1;
    std::string detail;
};

/// Checks E_i E_j = delta_ij E_i, rank(E_i) = 1 for all i, and sum E_i = I.
IdempotentSystemVerdict is_idempotent_system(const std::vector<Matrix>& E);

} // namespace leonard
