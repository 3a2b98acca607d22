#include "snclab/snc.hpp"

#include "snclab/union_find.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace snclab {

namespace {

std::string set_name(const SiteIndexSet& j)
{
    std::string s = "{";
    for (std::size_t k = 0; k < j.size(); ++k)
        s += (k ? "," : "") + std::to_string(j[k]);
    return s + "}";
}

std::vector<AffineSubspace> centers_inside(const BlowupLedger& ledger, const AffineSubspace& facet)
{
    std::vector<AffineSubspace> out;
    for (const auto& c : ledger.centers)
        if (facet.contains(c.span))
            out.push_back(c.span);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

bool BlowupLedger::blows_up(const AffineSubspace& span) const
{
    return std::any_of(centers.begin(), centers.end(), [&](const LedgerCenter& c) { return c.effective && c.span == span; });
}

BlowupLedger blowup_ledger(const VoronoiComplex& vc, std::size_t cell)
{
    const int m = static_cast<int>(vc.ambient_dimension());
    auto report = classify_subspaces(vc, cell);
    BlowupLedger ledger;
    ledger.cell = cell;
    for (auto k : report.parasitic()) {
        const auto& s = report.subspaces[k];
        ledger.centers.push_back({s.sites, s.span, s.dimension, s.dimension <= m - 2});
    }

    // Equal-dimensional centers may only meet inside a center blown up earlier.
    const auto& c = ledger.centers;
    for (std::size_t a = 0; a < c.size(); ++a)
        for (std::size_t b = a + 1; b < c.size(); ++b) {
            if (!c[a].effective || !c[b].effective || c[a].dimension != c[b].dimension)
                continue;
            auto x = c[a].span.intersect(c[b].span);
            if (x.empty())
                continue;
            bool covered = std::any_of(c.begin(), c.end(), [&](const LedgerCenter& z) {
                return z.effective && z.dimension < c[a].dimension && z.span.contains(x);
            });
            if (!covered)
                throw Error("genericity violation: centers H" + set_name(c[a].sites) + " and H" + set_name(c[b].sites) +
                            " of cell " + std::to_string(cell) + " meet outside earlier centers");
        }
    return ledger;
}

SncModel build_snc(const VoronoiComplex& vc, const SiteIndexSet& cells, const SncOptions& options)
{
    SiteIndexSet sel = cells;
    std::sort(sel.begin(), sel.end());
    sel.erase(std::unique(sel.begin(), sel.end()), sel.end());
    if (sel.empty())
        throw Error("empty selection");
    for (auto c : sel)
        if (c >= vc.cell_count())
            throw Error("unknown cell " + std::to_string(c));
    auto simple = check_simple(vc, sel);
    if (!simple.simple)
        throw Error("not simple: face " + set_name(vc.faces()[*simple.witness].sites) + " lies in " +
                    std::to_string(simple.cell_count) + " cells");

    const std::size_t m = vc.ambient_dimension();
    SncModel model;
    model.dimension = m;
    model.ledgers_applied = options.apply_ledgers;
    model.expected_dual = delaunay_dual(vc, sel);

    std::map<std::size_t, std::size_t> chart_of;
    for (auto c : sel) {
        SncChart chart;
        chart.cell = c;
        chart.faces = vc.faces_of_cell(c);
        chart.ledger.cell = c;
        if (options.apply_ledgers)
            chart.ledger = blowup_ledger(vc, c);
        chart_of[c] = model.charts.size();
        model.charts.push_back(std::move(chart));
    }
    model.sphere_class.assign(model.charts.size(), false);

    for (std::size_t x = 0; x < sel.size(); ++x)
        for (std::size_t y = x + 1; y < sel.size(); ++y)
            if (auto f = vc.find_face({sel[x], sel[y]}))
                model.gluings.push_back({sel[x], sel[y], *f});

    // Both sides of a gluing must blow up the same centers on the facet.
    for (const auto& g : model.gluings) {
        const auto& facet = vc.faces()[g.face].span;
        if (centers_inside(model.charts[chart_of[g.a]].ledger, facet) !=
            centers_inside(model.charts[chart_of[g.b]].ledger, facet))
            throw Error("ledger mismatch across facet " + set_name({g.a, g.b}));
    }

    std::set<AffineSubspace> flat_set;
    std::vector<AffineSubspace> frontier;
    for (const auto& g : model.gluings)
        if (flat_set.insert(vc.faces()[g.face].span).second)
            frontier.push_back(vc.faces()[g.face].span);
    std::vector<AffineSubspace> hyperplanes(flat_set.begin(), flat_set.end());
    while (!frontier.empty()) {
        std::vector<AffineSubspace> next;
        for (const auto& f : frontier)
            for (const auto& h : hyperplanes) {
                auto x = f.intersect(h);
                if (!x.empty() && flat_set.insert(x).second)
                    next.push_back(x);
            }
        frontier = std::move(next);
    }
    flat_set.insert(AffineSubspace::whole(m));
    model.flats.assign(flat_set.begin(), flat_set.end());
    std::stable_sort(model.flats.begin(), model.flats.end(),
                     [](const auto& a, const auto& b) { return a.dimension() > b.dimension(); });

    const std::size_t nf = model.flats.size();
    const std::size_t nc = model.charts.size();
    auto facet_of = [&](std::size_t a, std::size_t b) -> const AffineSubspace* {
        auto f = vc.find_face(a < b ? SiteIndexSet{a, b} : SiteIndexSet{b, a});
        return f ? &vc.faces()[*f].span : nullptr;
    };

    // A chart sees flat Y through the intersection of its facets containing
    // Y. That locus is absent from the chart once it has been blown up.
    std::vector<bool> present(nc * nf, false);
    for (std::size_t ci = 0; ci < nc; ++ci) {
        const auto a = model.charts[ci].cell;
        for (std::size_t y = 0; y < nf; ++y) {
            const auto& flat = model.flats[y];
            bool top = flat.dimension() == static_cast<int>(m);
            auto closure = AffineSubspace::whole(m);
            bool touched = false;
            for (const auto& g : model.gluings) {
                if (g.a != a && g.b != a)
                    continue;
                const auto& h = vc.faces()[g.face].span;
                if (h.contains(flat)) {
                    closure = closure.intersect(h);
                    touched = true;
                }
            }
            if (!touched && !top)
                continue;
            if (options.apply_ledgers && model.charts[ci].ledger.blows_up(closure))
                continue;
            present[ci * nf + y] = true;
        }
    }

    UnionFind uf(nc * nf);
    for (const auto& g : model.gluings) {
        const auto* h = facet_of(g.a, g.b);
        const auto ca = chart_of[g.a], cb = chart_of[g.b];
        for (std::size_t y = 0; y < nf; ++y)
            if (h->contains(model.flats[y]) && present[ca * nf + y] && present[cb * nf + y])
                uf.unite(ca * nf + y, cb * nf + y);
    }

    std::map<std::size_t, std::vector<std::pair<std::size_t, std::size_t>>> classes;
    for (std::size_t ci = 0; ci < nc; ++ci)
        for (std::size_t y = 0; y < nf; ++y)
            if (present[ci * nf + y])
                classes[uf.find(ci * nf + y)].emplace_back(ci, y);

    struct Candidate {
        SiteIndexSet k;
        std::size_t flat;
        std::vector<std::pair<std::size_t, std::size_t>> members;
    };
    std::vector<Candidate> candidates;
    for (auto& [root, members] : classes) {
        std::sort(members.begin(), members.end());
        Candidate c;
        c.flat = members.front().second;
        for (const auto& [ci, y] : members)
            c.k.push_back(model.charts[ci].cell);
        std::sort(c.k.begin(), c.k.end());
        c.members = members;
        candidates.push_back(std::move(c));
    }
    for (const auto& c : candidates) {
        bool maximal = std::none_of(candidates.begin(), candidates.end(), [&](const Candidate& d) {
            return &d != &c && d.k == c.k && d.flat != c.flat && model.flats[d.flat].contains(model.flats[c.flat]);
        });
        if (maximal)
            model.strata.push_back({c.k, model.flats[c.flat], c.members, true});
    }
    std::sort(model.strata.begin(), model.strata.end(), [](const SncStratum& x, const SncStratum& y) {
        if (x.components.size() != y.components.size())
            return x.components.size() < y.components.size();
        if (x.components != y.components)
            return x.components < y.components;
        return x.members < y.members;
    });
    return model;
}

DeltaComplex stratum_complex(const SncModel& model)
{
    std::vector<std::vector<std::size_t>> by_dim;
    for (std::size_t s = 0; s < model.strata.size(); ++s) {
        auto d = model.strata[s].components.size() - 1;
        if (by_dim.size() <= d)
            by_dim.resize(d + 1);
        by_dim[d].push_back(s);
    }
    std::vector<std::vector<DeltaComplex::FaceList>> cells(by_dim.size());
    std::vector<std::vector<std::string>> labels(by_dim.size());
    for (std::size_t d = 0; d < by_dim.size(); ++d)
        for (auto s : by_dim[d]) {
            const auto& st = model.strata[s];
            std::string label;
            for (std::size_t i = 0; i < st.components.size(); ++i)
                label += (i ? "," : "") + std::to_string(st.components[i]);
            labels[d].push_back(label);
            DeltaComplex::FaceList faces;
            if (d > 0)
                for (std::size_t i = 0; i < st.components.size(); ++i) {
                    auto k = st.components;
                    k.erase(k.begin() + static_cast<long>(i));
                    std::vector<std::size_t> found;
                    for (std::size_t f = 0; f < by_dim[d - 1].size(); ++f) {
                        const auto& cand = model.strata[by_dim[d - 1][f]];
                        if (cand.components == k && cand.flat.contains(st.flat))
                            found.push_back(f);
                    }
                    if (found.size() != 1)
                        throw Error("not SNC: stratum " + set_name(st.components) + " has " +
                                    std::to_string(found.size()) + " faces without component " +
                                    std::to_string(st.components[i]));
                    faces.push_back(found[0]);
                }
            cells[d].push_back(std::move(faces));
        }
    return DeltaComplex::build(std::move(cells), std::move(labels));
}

DeltaComplex dual_complex(const SncModel& model)
{
    auto d = stratum_complex(model);
    if (!find_isomorphism(d, model.expected_dual))
        throw Error("dual complex is not isomorphic to the Delaunay dual of the selection");
    return d;
}

DeltaComplex blowup_dual_complex(const DeltaComplex& dual, std::optional<std::pair<int, std::size_t>> center)
{
    if (!center)
        return dual;
    return dual.remove_open_star(center->first, center->second);
}

std::vector<std::size_t> sheaf_cohomology_dims(const SncModel& model)
{
    for (const auto& s : model.strata)
        if (!s.rational)
            throw Error("stratum " + set_name(s.components) + " is not flagged rational");
    return betti_numbers(dual_complex(model));
}

PillowVerdict pillow_projectivity(const PolarRational& cx, const PolarRational& cy, const PolarRational& cz)
{
    for (const auto* c : {&cx, &cy, &cz})
        if (c->modulus <= 0)
            throw Error("pillow constant has nonpositive modulus " + to_string(c->modulus));
    if (cx.modulus * cy.modulus * cz.modulus != 1)
        return {};
    Rational turns = cx.turns + cy.turns + cz.turns;
    Integer rem;
    mpz_fdiv_r(rem.get_mpz_t(), turns.get_num_mpz_t(), turns.get_den_mpz_t());
    Rational frac(rem, turns.get_den());
    frac.canonicalize();
    return {true, frac.get_den()};
}

Pi1Verdict pi1_link_criterion(const SncModel& model)
{
    if (model.charts.empty())
        throw Error("no components");
    bool all = std::all_of(model.sphere_class.begin(), model.sphere_class.end(), [](bool b) { return b; });
    return all && model.sphere_class.size() == model.charts.size() ? Pi1Verdict::IsomorphismClaimed : Pi1Verdict::Unknown;
}

} // namespace snclab
