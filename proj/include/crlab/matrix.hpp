#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "crlab/field.hpp"

namespace crlab {

/// Dense matrix over a Field with exact arithmetic, row-major storage.
/// Zero-row / zero-column shapes are allowed so block algebra degenerates
/// gracefully; external document formats only ever carry shapes >= 1.
class Matrix {
public:
    Matrix(Field f, int rows, int cols); // zero matrix
    Matrix(Field f, int rows, int cols, std::vector<Elt> entries);

    static Matrix identity(Field f, int n);
    static Matrix unit(Field f, int rows, int cols, int i, int j);
    /// The rank-r normal form: identity block of size r, zeros elsewhere.
    static Matrix j_r(Field f, int rows, int cols, int r);
    static Matrix from_rows(Field f, const std::vector<std::vector<Elt>>& rows);

    const Field& field() const { return f_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Elt at(int i, int j) const { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
    void set(int i, int j, Elt v) { e_[static_cast<std::size_t>(i) * cols_ + j] = v; }

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix scaled(Elt c) const;
    Matrix negated() const;
    Matrix transposed() const;

    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    /// Submatrix rows [r0, r1) x cols [c0, c1).
    Matrix block(int r0, int r1, int c0, int c1) const;
    void set_block(int r0, int c0, const Matrix& b);

    /// Row-major entry list (the wire representation).
    const std::vector<Elt>& entries() const { return e_; }
    std::vector<Elt> flatten() const { return e_; }
    static Matrix from_flat(Field f, int rows, int cols, const std::vector<Elt>& flat);

    std::string to_string() const;

private:
    Field f_;
    int rows_;
    int cols_;
    std::vector<Elt> e_;
};

/// Gaussian elimination with first-nonzero pivoting (the only deterministic
/// choice in exact arithmetic).
struct Echelon {
    std::vector<std::vector<Elt>> rows; // reduced rows, zero rows dropped
    std::vector<int> pivots;            // pivot column per reduced row
};
Echelon row_reduce(const Field& f, std::vector<std::vector<Elt>> rows);

int rank(const Matrix& m);
Elt determinant(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);
bool is_invertible(const Matrix& m);

/// Invertible (P, Q) with P * M * Q equal to the rank normal form J_rk(M).
std::pair<Matrix, Matrix> rank_decomposition(const Matrix& m);

/// Any solution x of A x = b, or nullopt when inconsistent.
std::optional<std::vector<Elt>> solve_linear(const Matrix& a, const std::vector<Elt>& b);
/// Basis of the right kernel of A (each vector has a.cols() coordinates).
std::vector<std::vector<Elt>> kernel_basis(const Matrix& a);

/// index-th vector of F^m in lexicographic order (first coordinate most
/// significant); index ranges over [0, q^m).
std::vector<Elt> vector_at(const Field& f, int m, long long index);

/// Subspace of F^m held as its reduced row-echelon basis, which is canonical:
/// two subspaces are equal iff their representations are identical.
class VectorSubspace {
public:
    VectorSubspace(Field f, int ambient_dim); // the zero subspace

    static VectorSubspace span(Field f, int ambient_dim,
                               const std::vector<std::vector<Elt>>& vectors);

    const Field& field() const { return f_; }
    int ambient_dim() const { return ambient_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<std::vector<Elt>>& basis() const { return basis_; }

    bool contains(const std::vector<Elt>& v) const;
    bool contains(const VectorSubspace& other) const;
    VectorSubspace sum(const VectorSubspace& other) const;

    bool operator==(const VectorSubspace& o) const;
    bool operator!=(const VectorSubspace& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    Field f_;
    int ambient_;
    std::vector<std::vector<Elt>> basis_;
};

/// A hyperplane (dim m-1 subspace) containing `span`; nullopt when the input
/// spans the whole space.  Deterministic choice: the first hyperplane, in the
/// canonical subspace enumeration order, that contains the input.
std::optional<VectorSubspace> hyperplane_envelope(const VectorSubspace& span);

/// Number of d-dimensional subspaces of F_q^m (Gaussian binomial);
/// saturates at the resource cap guard rather than overflowing.
long long gaussian_binomial(std::uint64_t q, int m, int d);

/// Visits every d-dimensional subspace of F^m exactly once, in canonical
/// order: echelon pivot patterns ascending lexicographically, then free
/// entries as a base-q odometer (row-major positions, last position fastest).
/// Returns false if the visitor aborted the walk.
bool for_each_subspace(const Field& f, int m, int d,
                       const std::function<bool(const VectorSubspace&)>& visit);

/// Materialized variant; throws ResourceError when the count exceeds cap.
std::vector<VectorSubspace> enumerate_subspaces(const Field& f, int m, int d, long long cap);

} // namespace crlab
