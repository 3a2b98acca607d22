#pragma once

#include "snclab/abelian_group.hpp"
#include "snclab/numeric.hpp"

#include <optional>
#include <string>
#include <vector>

namespace snclab {

/// Unordered Delta-complex: cells graded by dimension, each k-cell (k >= 1)
/// attached along an ordered list of k+1 faces of dimension k-1.
///
/// Face i of a cell carries the sign (-1)^i in the boundary map. Instances
/// are validated on construction (face references resolve, d∘d = 0) and are
/// immutable afterwards.
class DeltaComplex {
public:
    using FaceList = std::vector<std::size_t>;

    DeltaComplex() = default;

    /// cells[k][c] is the face list of the c-th k-cell; entries of cells[0]
    /// must be empty. labels, when given, parallels cells.
    static DeltaComplex build(std::vector<std::vector<FaceList>> cells,
                              std::vector<std::vector<std::string>> labels = {});

    /// Simplicial complex generated by the given vertex sets (closed under
    /// taking subsets). Vertex ids are arbitrary integers; they become the
    /// 0-cell labels in increasing order.
    static DeltaComplex from_simplices(const std::vector<std::vector<int>>& simplices);

    /// -1 for the empty complex.
    int dimension() const { return static_cast<int>(cells_.size()) - 1; }
    std::size_t count(int k) const;
    const FaceList& faces(int k, std::size_t cell) const { return cells_.at(k).at(cell); }
    const std::vector<std::vector<FaceList>>& cells() const { return cells_; }

    /// Label of a cell, or "" if none was given.
    const std::string& label(int k, std::size_t cell) const;
    const std::vector<std::vector<std::string>>& labels() const { return labels_; }

    /// Boundary map C_k -> C_{k-1} as a count(k-1) x count(k) matrix.
    IntMatrix boundary(int k) const;

    /// Connectivity of the 1-skeleton; false for the empty complex.
    bool is_connected() const;

    /// Vertices of a cell (iterated 0-faces), sorted, with repetition removed.
    std::vector<std::size_t> vertices_of(int k, std::size_t cell) const;

    long euler_characteristic() const;

    /// Removes the cell and every cell whose closure contains it.
    DeltaComplex remove_open_star(int k, std::size_t cell) const;

    friend bool operator==(const DeltaComplex& a, const DeltaComplex& b) { return a.cells_ == b.cells_; }

private:
    std::vector<std::vector<FaceList>> cells_;
    std::vector<std::vector<std::string>> labels_;
};

/// Graded isomorphism of Delta-complexes that respects face incidences
/// (face lists compared as multisets). Found by backtracking over vertex
/// assignments; returns the vertex map a -> b when one exists.
std::optional<std::vector<std::size_t>> find_isomorphism(const DeltaComplex& a, const DeltaComplex& b);

/// H_k(K; Z). Degrees outside [0, dim K] give the zero group.
AbelianGroup homology(const DeltaComplex& complex, int k);

/// Rational Betti numbers b_0 .. b_dim.
std::vector<std::size_t> betti_numbers(const DeltaComplex& complex);

/// True iff b_i = 0 for all i > 0. Throws for a disconnected or empty complex.
bool is_q_acyclic(const DeltaComplex& complex);

} // namespace snclab
