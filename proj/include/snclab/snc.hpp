#pragma once

#include "snclab/delta_complex.hpp"
#include "snclab/voronoi.hpp"

#include <optional>
#include <vector>

namespace snclab {

struct LedgerCenter {
    SiteIndexSet sites;
    AffineSubspace span;
    int dimension = 0;
    /// Centers of dimension <= m-2 are blown up; hyperplane entries are
    /// listed for completeness only.
    bool effective = false;
};

/// Parasitic subspaces of one cell in blow-up order (dimension, then J).
struct BlowupLedger {
    std::size_t cell = 0;
    std::vector<LedgerCenter> centers;

    /// Whether an effective center has exactly this span.
    bool blows_up(const AffineSubspace& span) const;
};

/// Throws on a genericity violation, or if two effective centers of equal
/// dimension meet outside every lower-dimensional center.
BlowupLedger blowup_ledger(const VoronoiComplex& vc, std::size_t cell);

struct SncChart {
    std::size_t cell = 0;
    BlowupLedger ledger;
    /// Voronoi faces of the cell.
    std::vector<std::size_t> faces;
};

/// Identification of the charts of cells a < b along their common facet.
struct SncGluing {
    std::size_t a = 0, b = 0;
    std::size_t face = 0;
};

/// One class of glued chart strata: the components meeting there and the
/// largest flat (intersection of facet spans) carrying the class.
struct SncStratum {
    SiteIndexSet components;
    AffineSubspace flat;
    /// (chart index, flat index) pairs in the class; the first is the representative.
    std::vector<std::pair<std::size_t, std::size_t>> members;
    bool rational = true;
};

struct SncModel {
    std::size_t dimension = 0;
    std::vector<SncChart> charts;
    std::vector<SncGluing> gluings;
    /// Intersection closure of the glued facet spans plus the whole space.
    std::vector<AffineSubspace> flats;
    std::vector<SncStratum> strata;
    /// Per chart: the normal-bundle sphere-class condition is asserted.
    std::vector<bool> sphere_class;
    bool ledgers_applied = true;
    /// Delaunay dual of the selection, used to vet the stratum poset.
    DeltaComplex expected_dual;
};

struct SncOptions {
    /// Off reproduces the naive gluing without blow-ups (regression hook).
    bool apply_ledgers = true;
};

/// Charts for the selected cells, glued along shared facets; strata are the
/// classes of chart strata under the closure of the gluings. Throws for an
/// empty or non-simple selection and for ledgers that disagree on a facet.
SncModel build_snc(const VoronoiComplex& vc, const SiteIndexSet& cells, const SncOptions& options = {});

/// One (|K|-1)-cell per stratum with components K; the faces of a stratum
/// are the strata with one component fewer whose flat contains it. Throws if
/// the result is not isomorphic to the Delaunay dual of the selection.
DeltaComplex dual_complex(const SncModel& model);

/// Same construction without the isomorphism check.
DeltaComplex stratum_complex(const SncModel& model);

/// Dual complex after blowing up a stratum (cell k, index c): the open star
/// of that cell is removed. With no center the complex is unchanged.
DeltaComplex blowup_dual_complex(const DeltaComplex& dual, std::optional<std::pair<int, std::size_t>> center);

/// dim H^i(Z, O_Z) read off the rational Betti numbers of the dual complex.
/// Throws unless every stratum is flagged rational.
std::vector<std::size_t> sheaf_cohomology_dims(const SncModel& model);

/// Complex number with rational modulus and argument in full turns.
struct PolarRational {
    Rational modulus;
    Rational turns;
};

struct PillowVerdict {
    bool projective = false;
    /// Minimal r with (c_x c_y c_z)^r = 1, when projective.
    std::optional<Integer> order;
};

PillowVerdict pillow_projectivity(const PolarRational& cx, const PolarRational& cy, const PolarRational& cz);

enum class Pi1Verdict { IsomorphismClaimed, Unknown };

/// Claimed iff every component carries the sphere-class flag.
Pi1Verdict pi1_link_criterion(const SncModel& model);

} // namespace snclab
