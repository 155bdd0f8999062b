#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tkkforge/field.hpp"

namespace tkkforge {

using Index = std::size_t;

// Coordinate vector over a fixed field.
class Vec {
  public:
    Vec(const Field& f, Index n) : f_(f), c_(n, Scalar::zero(f)) {}
    static Vec unit(const Field& f, Index n, Index i);

    const Field& field() const { return f_; }
    Index size() const { return c_.size(); }
    Scalar& operator[](Index i) { return c_[i]; }
    const Scalar& operator[](Index i) const { return c_[i]; }

    bool is_zero() const;
    Vec& operator+=(const Vec& o);
    Vec& operator-=(const Vec& o);
    Vec& operator*=(const Scalar& s);
    Vec operator-() const;
    friend Vec operator+(Vec a, const Vec& b) { return a += b; }
    friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
    friend Vec operator*(const Scalar& s, Vec v) { return v *= s; }
    friend bool operator==(const Vec& a, const Vec& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Vec& a, const Vec& b) { return !(a == b); }

    // v += s * o
    void add_scaled(const Scalar& s, const Vec& o);

    std::string str() const;

  private:
    Field f_;
    std::vector<Scalar> c_;
};

// Dense row-major matrix over a fixed field.
class Matrix {
  public:
    Matrix(const Field& f, Index rows, Index cols)
        : f_(f), rows_(rows), cols_(cols), a_(rows * cols, Scalar::zero(f)) {}
    static Matrix identity(const Field& f, Index n);
    static Matrix from_rows(const Field& f, Index cols, const std::vector<Vec>& rows);
    static Matrix from_cols(const Field& f, Index rows, const std::vector<Vec>& cols);

    const Field& field() const { return f_; }
    Index rows() const { return rows_; }
    Index cols() const { return cols_; }
    Scalar& operator()(Index i, Index j) { return a_[i * cols_ + j]; }
    const Scalar& operator()(Index i, Index j) const { return a_[i * cols_ + j]; }

    Vec row(Index i) const;
    Vec col(Index j) const;
    void set_row(Index i, const Vec& v);
    void set_col(Index j, const Vec& v);

    Matrix transpose() const;
    Matrix operator*(const Matrix& o) const;
    Vec operator*(const Vec& v) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator-() const;
    Matrix scaled(const Scalar& s) const;
    bool is_zero() const;
    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    std::string str() const;

  private:
    Field f_;
    Index rows_, cols_;
    std::vector<Scalar> a_;
};

struct RrefResult {
    Matrix m;
    std::vector<Index> pivot_cols;  // strictly increasing
    Index rank;
};

// Unique reduced row echelon form, leftmost-pivot selection.
RrefResult rref(const Matrix& m);

Index rank(const Matrix& m);

// Null-space basis; free variables in increasing column order, each set to 1.
std::vector<Vec> kernel_basis(const Matrix& m);

// Canonical solution of a x = b (free variables zero), or nullopt.
std::optional<Vec> solve(const Matrix& a, const Vec& b);

// Row span in canonical form: RREF rows with zero rows dropped.
class SpanBasis {
  public:
    SpanBasis(const Field& f, Index ambient_dim, const std::vector<Vec>& generators);

    Index ambient_dim() const { return ambient_; }
    Index dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    const std::vector<Index>& pivot_cols() const { return pivots_; }

    bool contains(const Vec& v) const;
    // Coordinates in the RREF basis, or nullopt if v is outside the span.
    std::optional<Vec> coords(const Vec& v) const;
    // v reduced against the basis (pivot coordinates eliminated).
    Vec reduce(const Vec& v) const;

    friend bool operator==(const SpanBasis& a, const SpanBasis& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

  private:
    Field f_;
    Index ambient_;
    Matrix basis_;
    std::vector<Index> pivots_;
};

bool subspace_equal(const std::vector<Vec>& gens_a, const std::vector<Vec>& gens_b,
                    Index ambient_dim, const Field& f);

// Intersection of two row spans, as a canonical list of basis vectors.
std::vector<Vec> span_intersection(const std::vector<Vec>& gens_a, const std::vector<Vec>& gens_b,
                                   Index ambient_dim, const Field& f);

// Quotient of the ambient coordinate space by the span of the generators.
// Coset coordinates are the non-pivot coordinates after reduction against
// the RREF basis; the canonical coset representative has zeros in the pivot
// coordinates.
class QuotientSpace {
  public:
    QuotientSpace(const Field& f, Index ambient_dim, const std::vector<Vec>& generators);

    Index ambient_dim() const { return sub_.ambient_dim(); }
    Index dim() const { return free_cols_.size(); }
    const SpanBasis& subspace() const { return sub_; }
    const std::vector<Index>& free_cols() const { return free_cols_; }
    const Field& field() const { return f_; }

    Vec project(const Vec& v) const;
    Vec lift(const Vec& coset) const;

  private:
    Field f_;
    SpanBasis sub_;
    std::vector<Index> free_cols_;
};

}  // namespace tkkforge
