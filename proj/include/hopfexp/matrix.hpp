#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "hopfexp/poly.hpp"

namespace hopfexp {

using Vec = std::vector<FieldElement>;

Vec vec_zero(const FieldDescriptor& f, std::size_t n);
bool vec_is_zero(const Vec& v);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Vec& a, const FieldElement& c);
FieldElement vec_dot(const Vec& a, const Vec& b);

/// Dense matrix over one of the exact fields, row-major.
class Matrix {
public:
    Matrix(FieldDescriptor f, std::size_t rows, std::size_t cols)
        : desc_(f), rows_(rows), cols_(cols), a_(rows * cols, FieldElement::zero(f)) {}

    static Matrix identity(const FieldDescriptor& f, std::size_t n);
    static Matrix from_columns(const FieldDescriptor& f, std::size_t dim, const std::vector<Vec>& cols);

    const FieldDescriptor& descriptor() const { return desc_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    FieldElement& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const FieldElement& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;  // kernel-dispatched
    Vec operator*(const Vec& v) const;
    Matrix scaled(const FieldElement& c) const;
    bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix transpose() const;
    Matrix pow(const mpz_class& e) const;  // square matrices; negative via inverse
    bool is_identity() const;
    bool is_zero() const;

    Vec row(std::size_t r) const;
    Vec col(std::size_t c) const;
    void set_col(std::size_t c, const Vec& v);

    const std::vector<FieldElement>& flat() const { return a_; }
    std::vector<FieldElement>& flat() { return a_; }

    std::string to_string() const;

private:
    FieldDescriptor desc_;
    std::size_t rows_, cols_;
    std::vector<FieldElement> a_;
};

/// In-place reduced row echelon form with first-nonzero pivoting.
/// Returns the pivot columns in order.
std::vector<std::size_t> rref(Matrix& m);

std::size_t rank(Matrix m);

struct SolveResult {
    std::optional<Vec> solution;
    // on failure: the inconsistent reduced row of [A | b] (all-zero coefficients, nonzero rhs)
    std::optional<Vec> certificate_row;
    bool ok() const { return solution.has_value(); }
};

SolveResult solve_linear(const Matrix& a, const Vec& b);

/// Columns spanning the nullspace; rank + count = cols, each A x = 0 exactly.
std::vector<Vec> kernel_basis(const Matrix& a);

Matrix inverse(const Matrix& a);  // Errc::Singular
bool is_invertible(const Matrix& a);

/// Incremental row-space with optional tracking of generator combinations.
class Echelon {
public:
    Echelon(FieldDescriptor f, std::size_t ambient, bool track = false)
        : desc_(f), ambient_(ambient), track_(track) {}

    /// Insert a vector; returns true when the span grew.
    bool insert(Vec v);
    bool contains(const Vec& v) const;
    /// Residual of v after reduction against the span.
    Vec reduce(Vec v) const;
    /// Coordinates of v over the *inserted generators*, when v lies in the span
    /// (tracking must be enabled; generators indexed in insertion order).
    std::optional<Vec> express(const Vec& v) const;

    std::size_t dim() const { return rows_.size(); }
    std::size_t ambient() const { return ambient_; }
    const std::vector<Vec>& rows() const { return rows_; }
    std::size_t generators() const { return n_inserted_; }

private:
    FieldDescriptor desc_;
    std::size_t ambient_;
    bool track_;
    std::size_t n_inserted_ = 0;
    std::vector<Vec> rows_;                // echelonized, pivot normalized to 1
    std::vector<std::size_t> pivot_;       // pivot column per row
    std::vector<Vec> combo_;               // row = combination of inserted generators
};

/// Monic generator of {p : p(L) v = 0} by Krylov iteration on an operator.
Polynomial relative_min_poly_apply(const std::function<Vec(const Vec&)>& apply, const Vec& v,
                                   const FieldDescriptor& f);

Polynomial relative_min_poly(const Matrix& l, const Vec& v);

/// Evaluate p at a square matrix.
Matrix eval_poly_at(const Polynomial& p, const Matrix& m);

Polynomial charpoly(const Matrix& m);          // Hessenberg method
Polynomial minimal_polynomial(const Matrix& m);

/// Order of an invertible matrix in GL, via its minimal polynomial.
OrderResult matrix_multiplicative_order(const Matrix& m);

/// Row vectors spanning the annihilator of the span of the given vectors.
std::vector<Vec> annihilator(const std::vector<Vec>& vectors, std::size_t ambient,
                             const FieldDescriptor& f);

}  // namespace hopfexp
