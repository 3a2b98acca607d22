#include "snclab/presentation.hpp"

#include "snclab/smith.hpp"

#include <algorithm>
#include <array>
#include <queue>

namespace snclab {

void Presentation::validate() const
{
    for (std::size_t r = 0; r < relators.size(); ++r)
        for (int letter : relators[r])
            if (letter == 0 || static_cast<std::size_t>(std::abs(letter)) > generators)
                throw Error("relator " + std::to_string(r + 1) + " uses generator index " + std::to_string(letter) +
                            " outside [1, " + std::to_string(generators) + "]");
}

Word free_reduce(const Word& w)
{
    Word out;
    for (int letter : w) {
        if (!out.empty() && out.back() == -letter)
            out.pop_back();
        else
            out.push_back(letter);
    }
    return out;
}

Word commutator(const Word& a, const Word& b)
{
    Word out;
    for (auto it = a.rbegin(); it != a.rend(); ++it)
        out.push_back(-*it);
    for (auto it = b.rbegin(); it != b.rend(); ++it)
        out.push_back(-*it);
    out.insert(out.end(), a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    return free_reduce(out);
}

Presentation higman_presentation()
{
    Presentation p;
    p.generators = 4;
    for (int i = 1; i <= 4; ++i) {
        int next = i % 4 + 1;
        Word r{i};
        auto c = commutator({i}, {next});
        r.insert(r.end(), c.begin(), c.end());
        p.relators.push_back(free_reduce(r));
    }
    return p;
}

namespace {

struct SignedEdge {
    std::size_t edge;
    bool forward;
};

// An edge with faces (d0, d1) runs from d1 to d0.
std::size_t tail(const DeltaComplex& k, const SignedEdge& e)
{
    const auto& f = k.faces(1, e.edge);
    return e.forward ? f[1] : f[0];
}

std::size_t head(const DeltaComplex& k, const SignedEdge& e)
{
    const auto& f = k.faces(1, e.edge);
    return e.forward ? f[0] : f[1];
}

bool closes(const DeltaComplex& k, const std::array<SignedEdge, 3>& loop)
{
    for (std::size_t i = 0; i < 3; ++i)
        if (head(k, loop[i]) != tail(k, loop[(i + 1) % 3]))
            return false;
    return true;
}

// Boundary loop of a 2-cell: d2, d0, d1^-1 for a Delta-ordered triangle.
// Unordered attachments fall back to the other cyclic order.
std::array<SignedEdge, 3> boundary_loop(const DeltaComplex& k, std::size_t cell)
{
    const auto& f = k.faces(2, cell);
    std::array<std::array<SignedEdge, 3>, 2> candidates{{
        {{{f[2], true}, {f[0], true}, {f[1], false}}},
        {{{f[2], true}, {f[1], false}, {f[0], true}}},
    }};
    for (const auto& loop : candidates)
        if (closes(k, loop))
            return loop;
    throw Error("2-cell " + std::to_string(cell) + " is not attached along a closed loop");
}

} // namespace

Presentation pi1_presentation(const DeltaComplex& complex, std::size_t basepoint)
{
    if (!complex.is_connected())
        throw Error("complex is disconnected");
    if (basepoint >= complex.count(0))
        throw Error("basepoint " + std::to_string(basepoint) + " is not a vertex");

    const std::size_t nv = complex.count(0);
    const std::size_t ne = complex.count(1);
    std::vector<std::vector<std::size_t>> incident(nv);
    for (std::size_t e = 0; e < ne; ++e) {
        const auto& f = complex.faces(1, e);
        incident[f[0]].push_back(e);
        if (f[1] != f[0])
            incident[f[1]].push_back(e);
    }
    for (auto& list : incident)
        std::sort(list.begin(), list.end());

    std::vector<bool> seen(nv, false);
    std::vector<bool> in_tree(ne, false);
    std::queue<std::size_t> queue;
    queue.push(basepoint);
    seen[basepoint] = true;
    while (!queue.empty()) {
        auto v = queue.front();
        queue.pop();
        for (auto e : incident[v]) {
            const auto& f = complex.faces(1, e);
            std::size_t w = f[0] == v ? f[1] : f[0];
            if (!seen[w]) {
                seen[w] = true;
                in_tree[e] = true;
                queue.push(w);
            }
        }
    }

    std::vector<int> generator_of(ne, 0);
    Presentation p;
    for (std::size_t e = 0; e < ne; ++e)
        if (!in_tree[e])
            generator_of[e] = static_cast<int>(++p.generators);

    for (std::size_t c = 0; c < complex.count(2); ++c) {
        Word w;
        for (const auto& se : boundary_loop(complex, c)) {
            int g = generator_of[se.edge];
            if (g != 0)
                w.push_back(se.forward ? g : -g);
        }
        w = free_reduce(w);
        if (!w.empty())
            p.relators.push_back(std::move(w));
    }
    return p;
}

namespace {

IntMatrix exponent_sums(const Presentation& p)
{
    IntMatrix m(p.relators.size(), p.generators);
    for (std::size_t r = 0; r < p.relators.size(); ++r)
        for (int letter : p.relators[r])
            m(r, static_cast<std::size_t>(std::abs(letter)) - 1) += letter > 0 ? 1 : -1;
    return m;
}

} // namespace

AbelianGroup abelianization(const Presentation& p)
{
    p.validate();
    return AbelianGroup::from_invariant_factors(p.generators, smith_diagonal(exponent_sums(p)));
}

bool is_q_perfect(const Presentation& p) { return abelianization(p).rank == 0; }

std::pair<std::size_t, std::size_t> presentation_complex_betti(const Presentation& p)
{
    p.validate();
    // One vertex, one loop per generator, one 2-cell per relator; the
    // 1-cells are cycles, so only the relator boundary map has rank.
    std::size_t rank = integer_rank(exponent_sums(p));
    return {p.generators - rank, p.relators.size() - rank};
}

SuperperfectVerdict is_q_superperfect_sufficient(const Presentation& p)
{
    auto [b1, b2] = presentation_complex_betti(p);
    return b1 == 0 && b2 == 0 ? SuperperfectVerdict::Confirmed : SuperperfectVerdict::Inconclusive;
}

} // namespace snclab
