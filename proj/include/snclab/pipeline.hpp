#pragma once

#include "snclab/json_io.hpp"

#include <string>
#include <vector>

namespace snclab {

/// Homology of one stage of the pipeline, compared against the input.
struct StageSummary {
    std::string name;
    std::vector<std::size_t> betti;
    AbelianGroup h1;
    bool preserved = false;
};

struct PipelineReport {
    std::vector<std::size_t> input_betti;
    AbelianGroup input_h1;

    SiteIndexSet selection;
    std::size_t strata = 0;
    bool dual_isomorphic = false;

    std::vector<StageSummary> stages;

    std::size_t roots = 0, steps = 0, leaves = 0;
    bool all_resolved = false;
    bool nerve_invariant = false;
    bool certificate_holds = false;
    /// FNV-1a over the (rule, parent mdeg, child mdeg) sequence.
    std::string certificate_digest;

    std::vector<std::size_t> final_betti;
    AbelianGroup final_abelianization;
    bool q_acyclic = false;
    bool q_perfect = false;

    /// Human-readable reasons the run failed a check; empty on success.
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
    Json to_json() const;
};

/// select -> Delaunay dual -> SNC model -> dual complex -> embed -> resolve
/// -> nerve. Throws Error for invalid input and for a non-simple selection;
/// failed stage comparisons are recorded in `failures`.
PipelineReport run_pipeline(const DeltaComplex& input, const SiteSet& sites, const Region& region,
                            const ResolutionPolicy& policy = {}, const SncOptions& options = {});

/// Betti numbers with trailing zeros removed.
std::vector<std::size_t> trimmed_betti(const DeltaComplex& complex);

/// b_0 = 1 and every higher Betti number vanishes.
bool q_acyclic_verdict(const DeltaComplex& complex);

} // namespace snclab
