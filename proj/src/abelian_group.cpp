#include "snclab/abelian_group.hpp"

#include <algorithm>

namespace snclab {

AbelianGroup AbelianGroup::from_invariant_factors(std::size_t generators, const std::vector<Integer>& diagonal)
{
    AbelianGroup g;
    std::size_t nonzero = 0;
    for (const auto& d : diagonal) {
        if (d == 0)
            continue;
        ++nonzero;
        if (abs(d) > 1)
            g.torsion.push_back(abs(d));
    }
    g.rank = generators - nonzero;
    std::sort(g.torsion.begin(), g.torsion.end());
    return g;
}

AbelianGroup AbelianGroup::from_prime_powers(std::size_t rank, const std::map<Integer, std::size_t>& powers)
{
    // Group the prime powers by prime, largest first; the j-th largest
    // invariant factor is the product of the j-th largest power of each prime.
    std::map<Integer, std::vector<Integer>> by_prime;
    for (const auto& [q, mult] : powers) {
        if (mult == 0)
            continue;
        auto f = factorize(q);
        if (f.size() != 1)
            throw Error("not a prime power: " + q.get_str());
        for (std::size_t k = 0; k < mult; ++k)
            by_prime[f.begin()->first].push_back(q);
    }
    std::size_t count = 0;
    for (auto& [p, list] : by_prime) {
        std::sort(list.rbegin(), list.rend());
        count = std::max(count, list.size());
    }
    std::vector<Integer> factors(count, Integer(1));
    for (const auto& [p, list] : by_prime)
        for (std::size_t j = 0; j < list.size(); ++j)
            factors[j] *= list[j];
    AbelianGroup g;
    g.rank = rank;
    g.torsion.assign(factors.rbegin(), factors.rend());
    return g;
}

std::map<Integer, std::size_t> AbelianGroup::prime_powers() const
{
    std::map<Integer, std::size_t> out;
    for (const auto& d : torsion)
        for (const auto& [p, e] : factorize(d)) {
            Integer q;
            mpz_pow_ui(q.get_mpz_t(), p.get_mpz_t(), e);
            ++out[q];
        }
    return out;
}

std::string AbelianGroup::to_string() const
{
    if (is_trivial())
        return "0";
    std::string s;
    if (rank > 0)
        s = rank == 1 ? "Z" : "Z^" + std::to_string(rank);
    for (const auto& d : torsion) {
        if (!s.empty())
            s += " + ";
        s += "Z/" + d.get_str();
    }
    return s;
}

std::map<Integer, unsigned> factorize(Integer n)
{
    std::map<Integer, unsigned> out;
    n = abs(n);
    if (n < 2)
        return out;
    for (Integer p = 2; p * p <= n; ++p)
        while (n % p == 0) {
            ++out[p];
            n /= p;
        }
    if (n > 1)
        ++out[n];
    return out;
}

} // namespace snclab
