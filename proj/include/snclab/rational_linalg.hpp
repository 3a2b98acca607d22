#pragma once

#include "snclab/numeric.hpp"

#include <optional>
#include <vector>

namespace snclab {

using QVector = std::vector<Rational>;

/// Dense row-major rational matrix.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    void append_row(const QVector& row);

    /// Reduced row echelon form in place; returns the pivot columns.
    std::vector<std::size_t> rref();

    friend bool operator==(const QMatrix&, const QMatrix&) = default;
    friend bool operator<(const QMatrix& a, const QMatrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

Rational dot(const QVector& a, const QVector& b);

/// Affine subspace {x in Q^n : A x = b}, stored as the reduced row echelon
/// form of [A | b] with zero rows removed. Two subspaces are equal exactly
/// when their stored forms are equal, so the form doubles as a map key.
class AffineSubspace {
public:
    /// The whole ambient space Q^n.
    static AffineSubspace whole(std::size_t ambient);

    /// Solution set of the rows (a_i, b_i); empty if inconsistent.
    static AffineSubspace from_equations(std::size_t ambient, const std::vector<std::pair<QVector, Rational>>& rows);

    std::size_t ambient() const { return ambient_; }
    bool empty() const { return empty_; }
    /// -1 when empty.
    int dimension() const;

    bool contains(const QVector& point) const;
    bool contains(const AffineSubspace& other) const;
    AffineSubspace intersect(const AffineSubspace& other) const;

    /// A point of the subspace and a basis of its direction space; the point
    /// is the solution with all free coordinates zero.
    QVector point() const;
    std::vector<QVector> basis() const;

    /// Equation rows [A | b] in canonical form.
    const QMatrix& equations() const { return eq_; }

    friend bool operator==(const AffineSubspace&, const AffineSubspace&) = default;
    friend bool operator<(const AffineSubspace& a, const AffineSubspace& b);

private:
    std::size_t ambient_ = 0;
    bool empty_ = false;
    QMatrix eq_;
    std::vector<std::size_t> pivots_;
};

struct SlackSolution {
    Rational slack;
    QVector point;
};

/// Largest t <= cap such that A u + t <= b (componentwise) for some free u,
/// together with a maximising u. Some t always exists, so the result is
/// well defined; it is solved exactly with a Bland-rule simplex.
///
/// A u <= b is feasible iff slack >= 0; A u < b iff slack > 0.
SlackSolution max_uniform_slack(const QMatrix& a, const QVector& b, const Rational& cap = 1);

} // namespace snclab
