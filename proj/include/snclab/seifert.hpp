#pragma once

#include "snclab/abelian_group.hpp"

#include <map>
#include <optional>
#include <vector>

namespace snclab {

/// Sum of a_i w(x_i). Throws on a length mismatch or a weight < 1.
long weighted_degree(const std::vector<long>& exponents, const std::vector<long>& weights);

/// The common weighted degree of all monomials, if there is one.
std::optional<long> is_weighted_homogeneous(const std::vector<std::vector<long>>& monomials,
                                            const std::vector<long>& weights);

/// Rational Betti numbers h^0 .. h^{2d} of the orbifold base of a Seifert link.
struct BaseCohomology {
    long d = 0;
    std::vector<long> h;

    /// Length 2d+1, h^0 = h^{2d} = 1, no negative entries, h^1 even.
    void validate() const;
};

/// h^0 .. h^{2d+1} of the link:
///   h^i(L)     = h^i(Z) - h^{i-2}(Z)  for i <= d,
///   h^{i+1}(L) = h^i(Z) - h^{i+2}(Z)  for i >= d.
/// A negative value means the base violates the hypotheses and is an error.
std::vector<long> link_betti(const BaseCohomology& base);

/// The base has the rational cohomology of CP^d.
bool is_rational_homology_sphere(const BaseCohomology& base);

/// Torsion-free rank, prime-power multiplicities, and the invariant i(M)
/// (nullopt stands for infinity).
struct H2Decomposition {
    long k = 0;
    std::map<Integer, long> c;
    std::optional<long> i_m = 0;

    /// Keys are prime powers > 1, multiplicities >= 0, k >= 0, and a finite
    /// positive i(M) = n needs c(2^n) > 0.
    void validate() const;
};

struct CircleActionVerdict {
    bool feasible = true;
    /// 1, 2 or 3 for the first violated condition; 0 when feasible.
    int failed_condition = 0;
};

/// (1) at most k+1 nonzero c(p^i) per prime p; (2) i(M) in {0, 1, inf};
/// (3) if i(M) = inf, at most k nonzero c(2^i).
CircleActionVerdict circle_action_feasible(const H2Decomposition& h2);

/// k = rank and c from the torsion split into prime powers; i(M) = 0.
H2Decomposition to_prime_power_decomposition(const AbelianGroup& group);

} // namespace snclab
