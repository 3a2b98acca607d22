#include "snclab/rational_linalg.hpp"

#include <algorithm>
#include <tuple>

namespace snclab {

void QMatrix::append_row(const QVector& row)
{
    if (rows_ == 0 && cols_ == 0)
        cols_ = row.size();
    if (row.size() != cols_)
        throw Error("row length mismatch");
    data_.insert(data_.end(), row.begin(), row.end());
    ++rows_;
}

std::vector<std::size_t> QMatrix::rref()
{
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t c = 0; c < cols_ && lead < rows_; ++c) {
        std::size_t p = lead;
        while (p < rows_ && (*this)(p, c) == 0)
            ++p;
        if (p == rows_)
            continue;
        if (p != lead)
            for (std::size_t j = 0; j < cols_; ++j)
                std::swap((*this)(p, j), (*this)(lead, j));
        Rational inv = 1 / (*this)(lead, c);
        for (std::size_t j = c; j < cols_; ++j)
            (*this)(lead, j) *= inv;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == lead || (*this)(r, c) == 0)
                continue;
            Rational f = (*this)(r, c);
            for (std::size_t j = c; j < cols_; ++j)
                (*this)(r, j) -= f * (*this)(lead, j);
        }
        pivots.push_back(c);
        ++lead;
    }
    return pivots;
}

bool operator<(const QMatrix& a, const QMatrix& b)
{
    if (std::tie(a.rows_, a.cols_) != std::tie(b.rows_, b.cols_))
        return std::tie(a.rows_, a.cols_) < std::tie(b.rows_, b.cols_);
    return std::lexicographical_compare(a.data_.begin(), a.data_.end(), b.data_.begin(), b.data_.end());
}

Rational dot(const QVector& a, const QVector& b)
{
    if (a.size() != b.size())
        throw Error("dot product length mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

AffineSubspace AffineSubspace::whole(std::size_t ambient)
{
    AffineSubspace s;
    s.ambient_ = ambient;
    s.eq_ = QMatrix(0, ambient + 1);
    return s;
}

AffineSubspace AffineSubspace::from_equations(std::size_t ambient,
                                              const std::vector<std::pair<QVector, Rational>>& rows)
{
    QMatrix m(0, ambient + 1);
    for (const auto& [a, b] : rows) {
        if (a.size() != ambient)
            throw Error("equation length mismatch");
        QVector row = a;
        row.push_back(b);
        m.append_row(row);
    }
    auto pivots = m.rref();

    AffineSubspace s;
    s.ambient_ = ambient;
    if (!pivots.empty() && pivots.back() == ambient) {
        s.empty_ = true;
        s.eq_ = QMatrix(0, ambient + 1);
        return s;
    }
    QMatrix trimmed(0, ambient + 1);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        QVector row(ambient + 1);
        for (std::size_t c = 0; c <= ambient; ++c)
            row[c] = m(r, c);
        trimmed.append_row(row);
    }
    s.eq_ = std::move(trimmed);
    s.pivots_ = std::move(pivots);
    return s;
}

int AffineSubspace::dimension() const
{
    if (empty_)
        return -1;
    return static_cast<int>(ambient_ - pivots_.size());
}

bool AffineSubspace::contains(const QVector& point) const
{
    if (empty_)
        return false;
    for (std::size_t r = 0; r < eq_.rows(); ++r) {
        Rational s = 0;
        for (std::size_t c = 0; c < ambient_; ++c)
            s += eq_(r, c) * point[c];
        if (s != eq_(r, ambient_))
            return false;
    }
    return true;
}

bool AffineSubspace::contains(const AffineSubspace& other) const
{
    if (other.empty_)
        return true;
    if (empty_)
        return false;
    return intersect(other) == other;
}

AffineSubspace AffineSubspace::intersect(const AffineSubspace& other) const
{
    if (ambient_ != other.ambient_)
        throw Error("ambient dimension mismatch");
    if (empty_)
        return *this;
    if (other.empty_)
        return other;
    std::vector<std::pair<QVector, Rational>> rows;
    for (const auto* s : {this, &other})
        for (std::size_t r = 0; r < s->eq_.rows(); ++r) {
            QVector a(ambient_);
            for (std::size_t c = 0; c < ambient_; ++c)
                a[c] = s->eq_(r, c);
            rows.emplace_back(std::move(a), s->eq_(r, ambient_));
        }
    return from_equations(ambient_, rows);
}

QVector AffineSubspace::point() const
{
    if (empty_)
        throw Error("empty subspace has no point");
    QVector x(ambient_, Rational(0));
    for (std::size_t r = 0; r < pivots_.size(); ++r)
        x[pivots_[r]] = eq_(r, ambient_);
    return x;
}

std::vector<QVector> AffineSubspace::basis() const
{
    if (empty_)
        return {};
    std::vector<bool> is_pivot(ambient_, false);
    for (auto p : pivots_)
        is_pivot[p] = true;
    std::vector<QVector> out;
    for (std::size_t free = 0; free < ambient_; ++free) {
        if (is_pivot[free])
            continue;
        QVector v(ambient_, Rational(0));
        v[free] = 1;
        for (std::size_t r = 0; r < pivots_.size(); ++r)
            v[pivots_[r]] = -eq_(r, free);
        out.push_back(std::move(v));
    }
    return out;
}

bool operator<(const AffineSubspace& a, const AffineSubspace& b)
{
    if (std::tie(a.ambient_, a.empty_) != std::tie(b.ambient_, b.empty_))
        return std::tie(a.ambient_, a.empty_) < std::tie(b.ambient_, b.empty_);
    return a.eq_ < b.eq_;
}

SlackSolution max_uniform_slack(const QMatrix& a, const QVector& b, const Rational& cap)
{
    const std::size_t rows = a.rows();
    const std::size_t n = a.cols();
    if (b.size() != rows)
        throw Error("right-hand side length mismatch");
    if (rows == 0)
        return {cap, QVector(n, Rational(0))};

    // Shift t = t0 + tp - tm with t0 below every right-hand side, so the
    // all-slack basis is feasible from the start.
    Rational t0 = cap;
    for (const auto& v : b)
        if (v < t0)
            t0 = v;

    // Columns: u+ (n), u- (n), tp, tm, slacks (rows + 1), rhs.
    const std::size_t m = rows + 1;
    const std::size_t structural = 2 * n + 2;
    const std::size_t width = structural + m + 1;
    const std::size_t rhs = width - 1;
    QMatrix t(m, width);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            t(i, j) = a(i, j);
            t(i, n + j) = -a(i, j);
        }
        t(i, 2 * n) = 1;
        t(i, 2 * n + 1) = -1;
        t(i, structural + i) = 1;
        t(i, rhs) = b[i] - t0;
    }
    t(rows, 2 * n) = 1;
    t(rows, 2 * n + 1) = -1;
    t(rows, structural + rows) = 1;
    t(rows, rhs) = cap - t0;

    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i)
        basis[i] = structural + i;
    // Reduced costs of the maximisation objective tp - tm.
    QVector cost(width, Rational(0));
    cost[2 * n] = 1;
    cost[2 * n + 1] = -1;

    for (;;) {
        std::size_t enter = width;
        for (std::size_t j = 0; j < rhs; ++j)
            if (cost[j] > 0) {
                enter = j;
                break;
            }
        if (enter == width)
            break;
        std::size_t leave = m;
        Rational best;
        for (std::size_t i = 0; i < m; ++i) {
            if (t(i, enter) <= 0)
                continue;
            Rational ratio = t(i, rhs) / t(i, enter);
            if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == m)
            throw Error("internal error: slack program unbounded");
        Rational inv = 1 / t(leave, enter);
        for (std::size_t j = 0; j < width; ++j)
            t(leave, j) *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || t(i, enter) == 0)
                continue;
            Rational f = t(i, enter);
            for (std::size_t j = 0; j < width; ++j)
                if (t(leave, j) != 0)
                    t(i, j) -= f * t(leave, j);
        }
        Rational f = cost[enter];
        for (std::size_t j = 0; j < width; ++j)
            if (t(leave, j) != 0)
                cost[j] -= f * t(leave, j);
        basis[leave] = enter;
    }

    QVector values(structural, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] < structural)
            values[basis[i]] = t(i, rhs);
    SlackSolution out;
    out.slack = t0 + values[2 * n] - values[2 * n + 1];
    out.point.resize(n);
    for (std::size_t j = 0; j < n; ++j)
        out.point[j] = values[j] - values[n + j];
    return out;
}

} // namespace snclab
