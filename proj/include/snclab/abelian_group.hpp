#pragma once

#include "snclab/numeric.hpp"

#include <map>
#include <string>
#include <vector>

namespace snclab {

/// Finitely generated abelian group Z^rank + Z/d1 + ... + Z/dk with d1 | d2 | ... and each d >= 2.
struct AbelianGroup {
    std::size_t rank = 0;
    std::vector<Integer> torsion;

    /// Builds the group presented by the invariant factors of a relation
    /// matrix with `generators` columns. Units are dropped.
    static AbelianGroup from_invariant_factors(std::size_t generators, const std::vector<Integer>& diagonal);

    /// Inverse of prime_powers(): multiplicities keyed by prime power.
    static AbelianGroup from_prime_powers(std::size_t rank, const std::map<Integer, std::size_t>& powers);

    bool is_trivial() const { return rank == 0 && torsion.empty(); }

    /// Torsion split into cyclic groups of prime-power order, with multiplicity.
    std::map<Integer, std::size_t> prime_powers() const;

    std::string to_string() const;

    friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

/// Factorisation by trial division; fine for the invariant factors seen here.
std::map<Integer, unsigned> factorize(Integer n);

} // namespace snclab
