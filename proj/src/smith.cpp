#include "snclab/smith.hpp"

#include <optional>
#include <utility>

namespace snclab {

namespace {

class Reducer {
public:
    Reducer(const IntMatrix& m, bool track)
        : a_(m), track_(track)
    {
        if (track_) {
            left_ = IntMatrix::identity(m.rows());
            right_ = IntMatrix::identity(m.cols());
        }
    }

    std::vector<Integer> run()
    {
        const std::size_t n = std::min(a_.rows(), a_.cols());
        std::vector<Integer> diag(n);
        for (std::size_t t = 0; t < n; ++t) {
            auto pivot = smallest_pivot(t);
            if (!pivot)
                break;
            swap_rows(t, pivot->first);
            swap_cols(t, pivot->second);
            while (!settle(t)) {
            }
            if (a_(t, t) < 0)
                negate_row(t);
            diag[t] = a_(t, t);
        }
        return diag;
    }

    IntMatrix& left() { return left_; }
    IntMatrix& right() { return right_; }

private:
    std::optional<std::pair<std::size_t, std::size_t>> smallest_pivot(std::size_t t) const
    {
        std::optional<std::pair<std::size_t, std::size_t>> best;
        Integer best_abs;
        for (std::size_t r = t; r < a_.rows(); ++r)
            for (std::size_t c = t; c < a_.cols(); ++c) {
                const Integer& v = a_(r, c);
                if (v == 0)
                    continue;
                Integer av = abs(v);
                if (!best || av < best_abs) {
                    best = {r, c};
                    best_abs = av;
                }
            }
        return best;
    }

    // One round of clearing row/column t. Returns true once the pivot
    // isolates and divides the remaining block.
    bool settle(std::size_t t)
    {
        bool clean = true;
        for (std::size_t r = t + 1; r < a_.rows(); ++r) {
            if (a_(r, t) == 0)
                continue;
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), a_(r, t).get_mpz_t(), a_(t, t).get_mpz_t());
            add_row(r, t, -q);
            if (a_(r, t) != 0)
                clean = false;
        }
        for (std::size_t c = t + 1; c < a_.cols(); ++c) {
            if (a_(t, c) == 0)
                continue;
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), a_(t, c).get_mpz_t(), a_(t, t).get_mpz_t());
            add_col(c, t, -q);
            if (a_(t, c) != 0)
                clean = false;
        }
        if (!clean) {
            auto pivot = smallest_pivot_in_cross(t);
            swap_rows(t, pivot.first);
            swap_cols(t, pivot.second);
            return false;
        }
        for (std::size_t r = t + 1; r < a_.rows(); ++r)
            for (std::size_t c = t + 1; c < a_.cols(); ++c) {
                if (a_(r, c) % a_(t, t) != 0) {
                    add_row(t, r, 1);
                    return false;
                }
            }
        return true;
    }

    // Smallest nonzero entry in row t and column t (remainders live there).
    std::pair<std::size_t, std::size_t> smallest_pivot_in_cross(std::size_t t) const
    {
        std::pair<std::size_t, std::size_t> best{t, t};
        Integer best_abs = abs(a_(t, t));
        for (std::size_t r = t + 1; r < a_.rows(); ++r)
            if (a_(r, t) != 0 && abs(a_(r, t)) < best_abs) {
                best = {r, t};
                best_abs = abs(a_(r, t));
            }
        for (std::size_t c = t + 1; c < a_.cols(); ++c)
            if (a_(t, c) != 0 && abs(a_(t, c)) < best_abs) {
                best = {t, c};
                best_abs = abs(a_(t, c));
            }
        return best;
    }

    void swap_rows(std::size_t i, std::size_t j)
    {
        if (i == j)
            return;
        for (std::size_t c = 0; c < a_.cols(); ++c)
            std::swap(a_(i, c), a_(j, c));
        if (track_)
            for (std::size_t c = 0; c < left_.cols(); ++c)
                std::swap(left_(i, c), left_(j, c));
    }

    void swap_cols(std::size_t i, std::size_t j)
    {
        if (i == j)
            return;
        for (std::size_t r = 0; r < a_.rows(); ++r)
            std::swap(a_(r, i), a_(r, j));
        if (track_)
            for (std::size_t r = 0; r < right_.rows(); ++r)
                std::swap(right_(r, i), right_(r, j));
    }

    // row[dst] += k * row[src]
    void add_row(std::size_t dst, std::size_t src, const Integer& k)
    {
        for (std::size_t c = 0; c < a_.cols(); ++c)
            if (a_(src, c) != 0)
                a_(dst, c) += k * a_(src, c);
        if (track_)
            for (std::size_t c = 0; c < left_.cols(); ++c)
                if (left_(src, c) != 0)
                    left_(dst, c) += k * left_(src, c);
    }

    // col[dst] += k * col[src]
    void add_col(std::size_t dst, std::size_t src, const Integer& k)
    {
        for (std::size_t r = 0; r < a_.rows(); ++r)
            if (a_(r, src) != 0)
                a_(r, dst) += k * a_(r, src);
        if (track_)
            for (std::size_t r = 0; r < right_.rows(); ++r)
                if (right_(r, src) != 0)
                    right_(r, dst) += k * right_(r, src);
    }

    void negate_row(std::size_t r)
    {
        for (std::size_t c = 0; c < a_.cols(); ++c)
            a_(r, c) = -a_(r, c);
        if (track_)
            for (std::size_t c = 0; c < left_.cols(); ++c)
                left_(r, c) = -left_(r, c);
    }

    IntMatrix a_;
    bool track_;
    IntMatrix left_;
    IntMatrix right_;
};

} // namespace

SmithForm smith_normal_form(const IntMatrix& m)
{
    Reducer reducer(m, true);
    SmithForm out;
    out.diagonal = reducer.run();
    out.left = std::move(reducer.left());
    out.right = std::move(reducer.right());
    return out;
}

std::vector<Integer> smith_diagonal(const IntMatrix& m)
{
    return Reducer(m, false).run();
}

std::size_t integer_rank(const IntMatrix& m)
{
    std::size_t rank = 0;
    for (const auto& d : smith_diagonal(m))
        if (d != 0)
            ++rank;
    return rank;
}

} // namespace snclab
