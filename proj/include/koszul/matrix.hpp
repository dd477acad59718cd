// Dense exact matrices over F_p or Q with deterministic elimination.
//
// Storage is row-major and packed: uint32_t residues for prime fields (so the
// elimination inner loop can run through the SIMD kernels), Rational for Q.
// Pivoting is always "first nonzero in column order" and no column permutations
// are applied, so every downstream basis is reproducible run-to-run.

#ifndef KOSZUL_MATRIX_HPP
#define KOSZUL_MATRIX_HPP

#include <optional>
#include <vector>

#include "koszul/field.hpp"

namespace koszul {

class Matrix {
public:
    Matrix() : field_(Field::prime(32003)), rows_(0), cols_(0) {}
    Matrix(const Field& f, int rows, int cols);

    static Matrix identity(const Field& f, int n);
    static Matrix zero(const Field& f, int rows, int cols) { return Matrix(f, rows, cols); }
    static Matrix from_ints(const Field& f, int rows, int cols, const std::vector<long long>& v);

    const Field& field() const { return field_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Scalar get(int i, int j) const;
    void set(int i, int j, const Scalar& s);
    void set_int(int i, int j, long long v) { set(i, j, field_.from_int(v)); }

    bool is_zero() const;
    bool is_identity() const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix scaled(const Scalar& c) const;
    Matrix negated() const;
    Matrix transpose() const;

    // [this | o] side by side / this on top of o
    Matrix hcat(const Matrix& o) const;
    Matrix vcat(const Matrix& o) const;
    Matrix block(int i0, int j0, int nrows, int ncols) const;

    struct Rref;  // defined after the class; holds reduced/transform/pivots/rank
    Rref rref(bool want_transform = false) const;

    int rank() const;

    // Columns form the reduced-echelon basis of the right kernel.
    Matrix kernel_basis() const;

    // Solve this * X = rhs columnwise; particular solution with free
    // coordinates zero, or nullopt if any column is inconsistent.
    std::optional<Matrix> solve(const Matrix& rhs) const;

    // Right inverse for invertible square matrices; ComputeError if singular.
    Matrix inverse() const;

    std::string to_string() const;

private:
    Field field_;
    int rows_, cols_;
    std::vector<uint32_t> fp_;
    std::vector<Rational> rat_;

    void check_same_field(const Matrix& o) const;

    friend class MatrixOps;
};

struct Matrix::Rref {
    Matrix reduced;
    Matrix transform;  // invertible; transform * input = reduced
    std::vector<int> pivots;
    int rank = 0;
};

inline int Matrix::rank() const { return rref().rank; }

// Deterministic column-span utilities built on rref.
//
// pivot coordinates of the column space of m (row indices), via rref of m^T
std::vector<int> column_space_pivot_rows(const Matrix& m);

// Select, among the columns of candidates, a subset extending span(base) to
// span(base|candidates); returns the chosen column indices in ascending order.
std::vector<int> extend_basis_columns(const Matrix& base, const Matrix& candidates);

}  // namespace koszul

#endif
