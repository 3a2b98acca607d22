#pragma once

#include "snclab/delta_complex.hpp"
#include "snclab/rational_linalg.hpp"

#include <optional>
#include <vector>

namespace snclab {

/// Sorted list of site indices.
using SiteIndexSet = std::vector<std::size_t>;

struct SiteSet {
    std::size_t dimension = 0;
    std::vector<QVector> sites;

    /// Throws on an empty set, a coordinate count mismatch or repeated sites.
    void validate() const;
};

/// H_J: points equidistant from every site in J (J nonempty).
AffineSubspace equidistant_subspace(const SiteSet& sites, const SiteIndexSet& j);

/// A relatively open face of the Voronoi complex: the points whose nearest
/// sites are exactly J. Top cells have |J| = 1.
struct VoronoiFace {
    SiteIndexSet sites;
    AffineSubspace span;
    int dimension = 0;
    /// A point in the relative interior.
    QVector witness;
};

class VoronoiComplex {
public:
    static VoronoiComplex build(SiteSet sites);

    const SiteSet& site_set() const { return sites_; }
    std::size_t ambient_dimension() const { return sites_.dimension; }
    std::size_t cell_count() const { return sites_.sites.size(); }

    /// Ordered by (|J|, J).
    const std::vector<VoronoiFace>& faces() const { return faces_; }
    std::optional<std::size_t> find_face(const SiteIndexSet& j) const;

    /// Faces of the closed cell V_i, including the cell itself.
    std::vector<std::size_t> faces_of_cell(std::size_t cell) const;

    /// Row a and bound b of the linearized bisector 2(y_j - y_i).x <= |y_j|^2 - |y_i|^2.
    std::pair<QVector, Rational> bisector(std::size_t i, std::size_t j) const;

    /// Closed-cell membership and the set of cells containing a point.
    bool cell_contains(std::size_t cell, const QVector& point) const;
    SiteIndexSet cells_containing(const QVector& point) const;

private:
    SiteSet sites_;
    std::vector<VoronoiFace> faces_;
};

struct SimplicityReport {
    bool simple = true;
    /// Offending face (index into faces()) with its cell count, when not simple.
    std::optional<std::size_t> witness;
    std::size_t cell_count = 0;
};

/// Every codimension-k face lies in exactly k+1 cells. With `cells` given,
/// only faces of those cells are examined.
SimplicityReport check_simple(const VoronoiComplex& vc, const std::optional<SiteIndexSet>& cells = std::nullopt);

/// One vertex per cell, one (|J|-1)-simplex per face J. With `cells` given,
/// only faces whose sites all lie in the selection are kept. Throws
/// "not simple" with the witness face if the relevant faces are degenerate.
DeltaComplex delaunay_dual(const VoronoiComplex& vc, const std::optional<SiteIndexSet>& cells = std::nullopt);

/// Region as a finite union of closed simplices, each given by its vertices.
using Region = std::vector<std::vector<QVector>>;

/// Cells whose closure meets the region, sorted.
SiteIndexSet select_subcomplex(const VoronoiComplex& vc, const Region& region);

struct ClassifiedSubspace {
    SiteIndexSet sites;
    AffineSubspace span;
    int dimension = 0;
    bool essential = false;
    /// For essential subspaces of dimension <= m-2: index (into the report's
    /// list) of the unique inclusion-minimal parasitic superspace.
    std::optional<std::size_t> minimal_parasitic_parent;
};

struct SubspaceReport {
    std::size_t cell = 0;
    /// All distinct H_J with |J| >= 2 that are nonempty, ordered by
    /// (dimension, J); essential entries are spans of proper faces of the cell.
    std::vector<ClassifiedSubspace> subspaces;
    /// Essential subspaces of dimension <= m-2 whose parasitic superspaces
    /// lack a unique minimal element of dimension one higher.
    std::vector<std::size_t> parent_failures;
    /// Pairs of parasitic subspaces whose intersection is some H_Q that is
    /// not itself parasitic.
    std::vector<std::pair<std::size_t, std::size_t>> closure_failures;

    std::vector<std::size_t> essential() const;
    std::vector<std::size_t> parasitic() const;
};

/// Essential/parasitic split for cell i. Throws if a face of the cell is not simple
/// or two index sets J1 != J2 share a span (genericity violation).
SubspaceReport classify_subspaces(const VoronoiComplex& vc, std::size_t cell);

} // namespace snclab
