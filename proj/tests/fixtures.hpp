// Shared complexes and independent oracles for the test suites.
#pragma once

#include "snclab/delta_complex.hpp"
#include "snclab/numeric.hpp"

#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

namespace fixtures {

inline snclab::DeltaComplex point() { return snclab::DeltaComplex::build({{{}}}); }

inline snclab::DeltaComplex circle()
{
    return snclab::DeltaComplex::build({{{}, {}, {}}, {{1, 0}, {2, 1}, {2, 0}}});
}

inline snclab::DeltaComplex full_triangle() { return snclab::DeltaComplex::from_simplices({{0, 1, 2}}); }

inline snclab::DeltaComplex triangle_boundary()
{
    return snclab::DeltaComplex::from_simplices({{0, 1}, {1, 2}, {0, 2}});
}

/// One vertex, edges a b c, two triangles glued into a torus.
inline snclab::DeltaComplex torus()
{
    return snclab::DeltaComplex::build({{{}}, {{0, 0}, {0, 0}, {0, 0}}, {{1, 2, 0}, {0, 2, 1}}});
}

/// Six-vertex triangulation of the real projective plane.
inline snclab::DeltaComplex projective_plane()
{
    return snclab::DeltaComplex::from_simplices({{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 6, 2},
                                                 {2, 3, 5}, {3, 4, 6}, {4, 5, 2}, {5, 6, 3}, {6, 2, 4}});
}

inline snclab::DeltaComplex two_sphere() { return snclab::DeltaComplex::from_simplices({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}); }

// ---- oracles -------------------------------------------------------------

using SmallMatrix = std::vector<std::vector<std::int64_t>>;

/// Fraction-free elimination in 64-bit; entries here are tiny.
inline std::int64_t det64(SmallMatrix m)
{
    const std::size_t n = m.size();
    if (n == 0)
        return 1;
    std::int64_t sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t s = k + 1;
            while (s < n && m[s][k] == 0)
                ++s;
            if (s == n)
                return 0;
            std::swap(m[s], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

inline void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn)
{
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    if (k > n)
        return;
    for (;;) {
        fn(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1)
            --i;
        if (i == 0)
            return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

/// gcd of all k x k minors (the k-th determinantal divisor).
inline std::int64_t determinantal_divisor(const SmallMatrix& m, std::size_t k)
{
    const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    std::int64_t g = 0;
    for_each_subset(rows, k, [&](const std::vector<std::size_t>& ri) {
        for_each_subset(cols, k, [&](const std::vector<std::size_t>& ci) {
            SmallMatrix sub(k, std::vector<std::int64_t>(k));
            for (std::size_t a = 0; a < k; ++a)
                for (std::size_t b = 0; b < k; ++b)
                    sub[a][b] = m[ri[a]][ci[b]];
            g = std::gcd(g, det64(sub));
        });
    });
    return g;
}

/// Invariant factors from determinantal divisors: s_k = D_k / D_{k-1}.
inline std::vector<std::int64_t> invariant_factors_by_minors(const SmallMatrix& m)
{
    const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    std::vector<std::int64_t> out;
    std::int64_t prev = 1;
    for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
        std::int64_t d = determinantal_divisor(m, k);
        if (d == 0) {
            out.resize(std::min(rows, cols), 0);
            return out;
        }
        out.push_back(d / prev);
        prev = d;
    }
    return out;
}

inline SmallMatrix to_small(const snclab::IntMatrix& m)
{
    SmallMatrix out(m.rows(), std::vector<std::int64_t>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            out[r][c] = m(r, c).get_si();
    return out;
}

} // namespace fixtures
