#pragma once

#include "snclab/abelian_group.hpp"
#include "snclab/delta_complex.hpp"

#include <vector>

namespace snclab {

/// Word in the free group: +g is generator g, -g its inverse (1-based).
using Word = std::vector<int>;

/// Finite group presentation <x_1..x_n | r_1..r_k>.
struct Presentation {
    std::size_t generators = 0;
    std::vector<Word> relators;

    /// Throws unless every letter is a nonzero index within [1, generators].
    void validate() const;

    friend bool operator==(const Presentation&, const Presentation&) = default;
};

/// Cancels adjacent x x^-1 pairs.
Word free_reduce(const Word& w);

/// Commutator [a, b] = a^-1 b^-1 a b.
Word commutator(const Word& a, const Word& b);

/// Higman's group <x_1..x_4 | x_i [x_i, x_{i+1}]>, indices mod 4.
Presentation higman_presentation();

/// Presentation of pi_1 of the 2-skeleton. The spanning tree is grown
/// breadth-first from `basepoint`, scanning incident edges by index; the
/// remaining edges become generators in index order. Relators are the 2-cell
/// boundary loops with tree edges deleted, freely reduced, empties dropped.
Presentation pi1_presentation(const DeltaComplex& complex, std::size_t basepoint = 0);

/// H_1 of the presented group: Smith form of the exponent-sum matrix.
AbelianGroup abelianization(const Presentation& p);

/// Largest abelian quotient is finite.
bool is_q_perfect(const Presentation& p);

enum class SuperperfectVerdict { Confirmed, Inconclusive };

/// Rational Betti numbers (b1, b2) of the presentation 2-complex.
std::pair<std::size_t, std::size_t> presentation_complex_betti(const Presentation& p);

/// One-sided Q-superperfect test: b1 = b2 = 0 on the presentation complex
/// forces H_1(G, Q) = H_2(G, Q) = 0. Anything else is inconclusive.
SuperperfectVerdict is_q_superperfect_sufficient(const Presentation& p);

} // namespace snclab
