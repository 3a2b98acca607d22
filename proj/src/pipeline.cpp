#include "snclab/pipeline.hpp"

#include <cstdint>
#include <cstdio>

namespace snclab {

namespace {

std::string fnv1a_hex(const std::string& data)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string certificate_digest(const ResolutionTrace& t)
{
    std::string s;
    for (const auto& step : t.steps) {
        s += rule_name(step.rule);
        for (const auto& c : step.certificate)
            s += " " + to_string(c.parent) + ">" + to_string(c.child);
        s += ";";
    }
    return fnv1a_hex(s);
}

DeltaComplex nerve_complex(const Nerve& nerve)
{
    std::vector<std::vector<int>> simplices;
    for (const auto& face : nerve)
        simplices.emplace_back(face.begin(), face.end());
    return DeltaComplex::from_simplices(simplices);
}

AbelianGroup h1_of(const DeltaComplex& k) { return homology(k, 1); }

} // namespace

std::vector<std::size_t> trimmed_betti(const DeltaComplex& complex)
{
    auto b = betti_numbers(complex);
    while (!b.empty() && b.back() == 0)
        b.pop_back();
    return b;
}

bool q_acyclic_verdict(const DeltaComplex& complex)
{
    return trimmed_betti(complex) == std::vector<std::size_t>{1};
}

PipelineReport run_pipeline(const DeltaComplex& input, const SiteSet& sites, const Region& region,
                            const ResolutionPolicy& policy, const SncOptions& options)
{
    PipelineReport r;
    r.input_betti = betti_numbers(input);
    r.input_h1 = h1_of(input);
    const auto want = trimmed_betti(input);

    auto stage = [&](const std::string& name, const DeltaComplex& k) {
        StageSummary s{name, betti_numbers(k), h1_of(k), false};
        s.preserved = trimmed_betti(k) == want && s.h1 == r.input_h1;
        if (!s.preserved)
            r.failures.push_back(name + ": homology changed (H1 = " + s.h1.to_string() + ", input H1 = " +
                                 r.input_h1.to_string() + ")");
        r.stages.push_back(std::move(s));
    };

    auto vc = VoronoiComplex::build(sites);
    r.selection = select_subcomplex(vc, region);
    if (r.selection.empty())
        throw Error("region selects no Voronoi cells");
    if (auto simple = check_simple(vc, r.selection); !simple.simple) {
        const auto& f = vc.faces()[*simple.witness];
        std::string j;
        for (auto s : f.sites)
            j += (j.empty() ? "" : ",") + std::to_string(s);
        throw Error("not simple: face {" + j + "} of dimension " + std::to_string(f.dimension) + " lies in " +
                    std::to_string(simple.cell_count) + " cells");
    }

    auto delaunay = delaunay_dual(vc, r.selection);
    stage("delaunay", delaunay);

    auto model = build_snc(vc, r.selection, options);
    r.strata = model.strata.size();
    auto dual = stratum_complex(model);
    r.dual_isomorphic = find_isomorphism(dual, delaunay).has_value();
    if (!r.dual_isomorphic)
        r.failures.push_back("snc_dual: dual complex is not isomorphic to the Delaunay dual");
    stage("snc_dual", dual);

    auto roots = embed_snc(model);
    auto trace = resolve(roots, policy);
    r.roots = roots.size();
    r.steps = trace.steps.size();
    r.leaves = trace.leaves().size();
    r.all_resolved = trace.all_leaves_resolved();
    r.nerve_invariant = trace.nerve_invariant();
    r.certificate_holds = trace.certificate_holds();
    r.certificate_digest = certificate_digest(trace);
    if (!r.all_resolved)
        r.failures.push_back("resolution: unresolved leaves remain");
    if (!r.nerve_invariant)
        r.failures.push_back("resolution: nerve changed during resolution");
    if (!r.certificate_holds)
        r.failures.push_back("resolution: termination certificate does not decrease");

    auto final_complex = nerve_complex(trace.steps.empty() ? trace.initial_nerve : trace.steps.back().nerve);
    stage("nerve", final_complex);
    r.final_betti = betti_numbers(final_complex);
    auto presentation = pi1_presentation(final_complex);
    r.final_abelianization = abelianization(presentation);
    r.q_acyclic = q_acyclic_verdict(final_complex);
    r.q_perfect = final_complex.is_connected() && is_q_perfect(presentation);
    return r;
}

Json PipelineReport::to_json() const
{
    Json stage_list = Json::array();
    for (const auto& s : stages)
        stage_list.push_back(Json{{"name", s.name}, {"betti", s.betti}, {"h1", s.h1.to_string()}, {"preserved", s.preserved}});
    Json sel = Json::array();
    for (auto c : selection)
        sel.push_back(c);
    return Json{
        {"caveat", "homotopy equivalence of the Voronoi stage is assumed, not verified; "
                   "only Betti numbers and H1 are compared"},
        {"input", Json{{"betti", input_betti}, {"h1", input_h1.to_string()}}},
        {"selection", Json{{"cells", sel}, {"strata", strata}, {"dual_isomorphic_to_delaunay", dual_isomorphic}}},
        {"stages", stage_list},
        {"resolution", Json{{"roots", roots},
                            {"steps", steps},
                            {"leaves", leaves},
                            {"all_resolved", all_resolved},
                            {"nerve_invariant", nerve_invariant},
                            {"certificate_holds", certificate_holds},
                            {"certificate_digest", certificate_digest}}},
        {"final", Json{{"betti", final_betti}, {"pi1_abelianization", final_abelianization.to_string()}}},
        {"verdicts", Json{{"q_acyclic", q_acyclic},
                          {"rational_singularity_eligible", q_acyclic},
                          {"q_perfect", q_perfect}}},
        {"failures", failures},
        {"ok", ok()}};
}

} // namespace snclab
