#pragma once

// Exact integer and rational linear algebra over arbitrary-precision
// integers. Everything in the library is built on these types.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tfano {

using Integer = mpz_class;
using Rational = mpq_class;

/// Thrown on violated preconditions of the exact linear algebra routines.
class LinearAlgebraError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A point of Z^d. The length is fixed at construction.
class IntVector {
public:
    IntVector() = default;
    explicit IntVector(std::size_t dim) : coords_(dim, Integer(0)) {}
    explicit IntVector(std::vector<Integer> coords) : coords_(std::move(coords)) {}
    IntVector(std::initializer_list<long> values);

    [[nodiscard]] std::size_t size() const { return coords_.size(); }
    [[nodiscard]] bool empty() const { return coords_.empty(); }
    Integer& operator[](std::size_t i) { return coords_[i]; }
    const Integer& operator[](std::size_t i) const { return coords_[i]; }
    auto begin() const { return coords_.begin(); }
    auto end() const { return coords_.end(); }
    auto begin() { return coords_.begin(); }
    auto end() { return coords_.end(); }

    [[nodiscard]] bool is_zero() const;

    friend bool operator==(const IntVector& a, const IntVector& b) { return a.coords_ == b.coords_; }
    /// Lexicographic order; shorter vectors sort first.
    friend std::strong_ordering operator<=>(const IntVector& a, const IntVector& b);

    friend IntVector operator+(const IntVector& a, const IntVector& b);
    friend IntVector operator-(const IntVector& a, const IntVector& b);
    friend IntVector operator-(const IntVector& a);
    friend IntVector operator*(const Integer& s, const IntVector& a);

private:
    std::vector<Integer> coords_;
};

std::ostream& operator<<(std::ostream& os, const IntVector& v);

[[nodiscard]] Integer dot(const IntVector& a, const IntVector& b);
[[nodiscard]] IntVector cross(const IntVector& a, const IntVector& b);
[[nodiscard]] Integer content(const IntVector& v);  // gcd of the coordinates, 0 for the zero vector

[[nodiscard]] bool is_primitive(const IntVector& v);
[[nodiscard]] IntVector primitivize(const IntVector& v);

/// Dense integer matrix stored by rows.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    explicit IntMatrix(std::vector<IntVector> rows);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);
    /// Matrix whose columns are the given vectors.
    static IntMatrix from_columns(const std::vector<IntVector>& columns);

    [[nodiscard]] std::size_t rows() const { return rows_.size(); }
    [[nodiscard]] std::size_t cols() const { return rows_.empty() ? 0 : rows_.front().size(); }
    [[nodiscard]] bool empty() const { return rows_.empty() || cols() == 0; }

    Integer& operator()(std::size_t i, std::size_t j) { return rows_[i][j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return rows_[i][j]; }
    IntVector& row(std::size_t i) { return rows_[i]; }
    const IntVector& row(std::size_t i) const { return rows_[i]; }
    [[nodiscard]] IntVector column(std::size_t j) const;
    [[nodiscard]] const std::vector<IntVector>& row_vectors() const { return rows_; }

    [[nodiscard]] IntMatrix transpose() const;
    void swap_rows(std::size_t a, std::size_t b) { std::swap(rows_[a], rows_[b]); }
    void swap_cols(std::size_t a, std::size_t b);

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) { return a.rows_ == b.rows_; }
    friend std::strong_ordering operator<=>(const IntMatrix& a, const IntMatrix& b);

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend IntVector operator*(const IntMatrix& a, const IntVector& v);

private:
    std::vector<IntVector> rows_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

struct HermiteForm {
    IntMatrix h;  // h == u * m
    IntMatrix u;  // unimodular
};

struct SmithForm {
    IntMatrix d;  // d == u * m * v
    IntMatrix u;
    IntMatrix v;
};

/// Row-style Hermite normal form: row echelon profile, positive pivots,
/// entries above each pivot reduced into [0, pivot).
[[nodiscard]] HermiteForm hnf(const IntMatrix& m);

/// Smith normal form with nonnegative diagonal d1 | d2 | ... .
[[nodiscard]] SmithForm snf(const IntMatrix& m);

[[nodiscard]] Integer det3(const IntMatrix& m);
[[nodiscard]] Integer det(const IntMatrix& m);
[[nodiscard]] std::size_t rank(const IntMatrix& m);

[[nodiscard]] bool is_unimodular(const IntMatrix& m);

/// Inverse of a square matrix with determinant +-1.
[[nodiscard]] IntMatrix unimodular_inverse(const IntMatrix& m);

/// Solves x * a == b for a square nonsingular a, returning nullopt when x
/// is not integral.
[[nodiscard]] std::optional<IntMatrix> solve_left_integral(const IntMatrix& a, const IntMatrix& b);

/// Floor and ceiling of a rational.
[[nodiscard]] Integer floor(const Rational& q);
[[nodiscard]] Integer ceil(const Rational& q);

[[nodiscard]] std::string to_string(const Rational& q);

}  // namespace tfano
