#include "snclab/seifert.hpp"

#include <set>

namespace snclab {

long weighted_degree(const std::vector<long>& exponents, const std::vector<long>& weights)
{
    if (exponents.size() != weights.size())
        throw Error("monomial has " + std::to_string(exponents.size()) + " exponents for " +
                    std::to_string(weights.size()) + " weights");
    long total = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (weights[i] < 1)
            throw Error("weights must be positive");
        if (exponents[i] < 0)
            throw Error("exponents must be nonnegative");
        total += exponents[i] * weights[i];
    }
    return total;
}

std::optional<long> is_weighted_homogeneous(const std::vector<std::vector<long>>& monomials,
                                            const std::vector<long>& weights)
{
    if (monomials.empty())
        throw Error("empty polynomial");
    const long first = weighted_degree(monomials.front(), weights);
    for (const auto& m : monomials)
        if (weighted_degree(m, weights) != first)
            return std::nullopt;
    return first;
}

void BaseCohomology::validate() const
{
    if (d < 0)
        throw Error("base dimension must be nonnegative");
    if (h.size() != static_cast<std::size_t>(2 * d + 1))
        throw Error("expected " + std::to_string(2 * d + 1) + " Betti numbers, got " + std::to_string(h.size()));
    if (h.front() != 1 || h.back() != 1)
        throw Error("base must be compact and connected: h^0 = h^2d = 1");
    for (auto v : h)
        if (v < 0)
            throw Error("negative Betti number");
    if (d >= 1 && h[1] % 2 != 0)
        throw Error("h^1 of the base must be even");
}

std::vector<long> link_betti(const BaseCohomology& base)
{
    base.validate();
    const long d = base.d;
    auto hz = [&](long i) { return i < 0 || i > 2 * d ? 0L : base.h[static_cast<std::size_t>(i)]; };
    std::vector<long> out(static_cast<std::size_t>(2 * d + 2));
    for (long i = 0; i <= d; ++i)
        out[static_cast<std::size_t>(i)] = hz(i) - hz(i - 2);
    for (long i = d; i <= 2 * d; ++i)
        out[static_cast<std::size_t>(i + 1)] = hz(i) - hz(i + 2);
    for (std::size_t i = 0; i < out.size(); ++i)
        if (out[i] < 0)
            throw Error("h^" + std::to_string(i) + " of the link would be negative; the base violates the orbifold hypotheses");
    return out;
}

bool is_rational_homology_sphere(const BaseCohomology& base)
{
    base.validate();
    for (std::size_t i = 0; i < base.h.size(); ++i)
        if (base.h[i] != (i % 2 == 0 ? 1 : 0))
            return false;
    return true;
}

namespace {

// The prime of a prime power, or 0 if the key is not one.
Integer prime_of(const Integer& q)
{
    if (q < 2)
        return 0;
    auto f = factorize(q);
    return f.size() == 1 ? f.begin()->first : Integer(0);
}

} // namespace

void H2Decomposition::validate() const
{
    if (k < 0)
        throw Error("k must be nonnegative");
    for (const auto& [q, mult] : c) {
        if (prime_of(q) == 0)
            throw Error(to_string(q) + " is not a prime power");
        if (mult < 0)
            throw Error("negative multiplicity for " + to_string(q));
    }
    if (i_m) {
        if (*i_m < 0)
            throw Error("i(M) must be nonnegative");
        if (*i_m > 0) {
            Integer two_n = 1;
            two_n <<= static_cast<unsigned long>(*i_m);
            auto it = c.find(two_n);
            if (it == c.end() || it->second == 0)
                throw Error("i(M) = " + std::to_string(*i_m) + " needs c(2^" + std::to_string(*i_m) + ") > 0");
        }
    }
}

CircleActionVerdict circle_action_feasible(const H2Decomposition& h2)
{
    h2.validate();
    std::map<Integer, long> nonzero_per_prime;
    for (const auto& [q, mult] : h2.c)
        if (mult > 0)
            ++nonzero_per_prime[prime_of(q)];
    for (const auto& [p, count] : nonzero_per_prime)
        if (count > h2.k + 1)
            return {false, 1};
    if (h2.i_m && *h2.i_m != 0 && *h2.i_m != 1)
        return {false, 2};
    if (!h2.i_m && nonzero_per_prime[Integer(2)] > h2.k)
        return {false, 3};
    return {};
}

H2Decomposition to_prime_power_decomposition(const AbelianGroup& group)
{
    H2Decomposition out;
    out.k = static_cast<long>(group.rank);
    for (const auto& [q, mult] : group.prime_powers())
        out.c[q] = static_cast<long>(mult);
    return out;
}

} // namespace snclab
