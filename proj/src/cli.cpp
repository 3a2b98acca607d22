#include "snclab/cli.hpp"

#include "snclab/pipeline.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <functional>

namespace snclab {

namespace {

struct Outcome {
    Json body;
    int code = 0;
};

struct Context {
    std::string format = "json";
    std::optional<std::size_t> max_steps;
    bool no_ledger = false;
    bool summary = false;

    std::vector<std::string> files;
    std::vector<std::size_t> cells;
    std::string region;
    std::size_t cell = 0;
    std::size_t basepoint = 0;

    std::function<Outcome()> action;
};

Json groups_json(const DeltaComplex& k)
{
    Json g = Json::array();
    for (int d = 0; d <= k.dimension(); ++d)
        g.push_back(homology(k, d).to_string());
    return g;
}

Presentation presentation_or_complex(const Json& j, std::size_t basepoint)
{
    if (j.is_object() && j.contains("cells"))
        return pi1_presentation(complex_from_json(j), basepoint);
    return presentation_from_json(j);
}

struct Geometry {
    VoronoiComplex vc;
    SiteIndexSet cells;
};

Geometry load_geometry(const Context& ctx)
{
    auto vc = VoronoiComplex::build(sites_from_json(read_json_file(ctx.files.at(0))));
    SiteIndexSet cells;
    if (!ctx.region.empty()) {
        cells = select_subcomplex(vc, region_from_json(read_json_file(ctx.region), vc.ambient_dimension()));
    } else if (!ctx.cells.empty()) {
        cells = ctx.cells;
        std::sort(cells.begin(), cells.end());
        cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
        if (cells.back() >= vc.cell_count())
            throw Error("cell " + std::to_string(cells.back()) + " out of range");
    } else {
        for (std::size_t i = 0; i < vc.cell_count(); ++i)
            cells.push_back(i);
    }
    if (cells.empty())
        throw Error("empty selection");
    return {std::move(vc), std::move(cells)};
}

ResolutionPolicy policy_of(const Context& ctx)
{
    auto p = ResolutionPolicy::from_environment();
    p.max_steps = ctx.max_steps;
    return p;
}

// ---- handlers -------------------------------------------------------------

Outcome homology_cmd(const Context& ctx)
{
    auto k = complex_from_json(read_json_file(ctx.files.at(0)));
    return {Json{{"betti", betti_numbers(k)}, {"groups", groups_json(k)}, {"euler", k.euler_characteristic()}}, 0};
}

Outcome pi1_cmd(const Context& ctx)
{
    auto k = complex_from_json(read_json_file(ctx.files.at(0)));
    if (ctx.basepoint >= k.count(0))
        throw Error("basepoint out of range");
    auto p = pi1_presentation(k, ctx.basepoint);
    return {Json{{"presentation", to_json(p)}, {"abelianization", abelianization(p).to_string()}}, 0};
}

Outcome q_acyclic_cmd(const Context& ctx)
{
    auto k = complex_from_json(read_json_file(ctx.files.at(0)));
    auto b = betti_numbers(k);
    bool yes = q_acyclic_verdict(k);
    std::string report = "Q-acyclic";
    if (!yes) {
        if (b.empty() || b[0] != 1)
            report = "b0 = " + std::to_string(b.empty() ? 0 : b[0]);
        else
            for (std::size_t i = 1; i < b.size(); ++i)
                if (b[i] != 0) {
                    report = "b" + std::to_string(i) + " = " + std::to_string(b[i]);
                    break;
                }
    }
    return {Json{{"betti", b}, {"q_acyclic", yes}, {"report", report}}, yes ? 0 : 1};
}

Outcome q_perfect_cmd(const Context& ctx)
{
    auto p = presentation_or_complex(read_json_file(ctx.files.at(0)), ctx.basepoint);
    auto h1 = abelianization(p);
    bool yes = is_q_perfect(p);
    return {Json{{"h1", to_json(h1)}, {"q_perfect", yes}, {"report", "H1 = " + h1.to_string()}}, yes ? 0 : 1};
}

Outcome q_superperfect_cmd(const Context& ctx)
{
    auto p = presentation_or_complex(read_json_file(ctx.files.at(0)), ctx.basepoint);
    auto [b1, b2] = presentation_complex_betti(p);
    bool yes = is_q_superperfect_sufficient(p) == SuperperfectVerdict::Confirmed;
    return {Json{{"b1", b1}, {"b2", b2}, {"verdict", yes ? "confirmed" : "inconclusive"}}, yes ? 0 : 1};
}

Outcome voronoi_build_cmd(const Context& ctx)
{
    auto vc = VoronoiComplex::build(sites_from_json(read_json_file(ctx.files.at(0))));
    return {to_json(vc), 0};
}

Outcome voronoi_simple_cmd(const Context& ctx)
{
    auto g = load_geometry(ctx);
    auto r = check_simple(g.vc, g.cells);
    Json j{{"simple", r.simple}, {"cells", g.cells}};
    if (!r.simple) {
        const auto& f = g.vc.faces()[*r.witness];
        j["witness"] = Json{{"sites", f.sites}, {"dim", f.dimension}, {"cell_count", r.cell_count}};
    }
    return {j, r.simple ? 0 : 1};
}

Outcome voronoi_delaunay_cmd(const Context& ctx)
{
    auto g = load_geometry(ctx);
    return {to_json(delaunay_dual(g.vc, g.cells)), 0};
}

Outcome voronoi_classify_cmd(const Context& ctx)
{
    auto vc = VoronoiComplex::build(sites_from_json(read_json_file(ctx.files.at(0))));
    if (ctx.cell >= vc.cell_count())
        throw Error("cell " + std::to_string(ctx.cell) + " out of range");
    auto r = classify_subspaces(vc, ctx.cell);
    bool ok = r.parent_failures.empty() && r.closure_failures.empty();
    return {to_json(r), ok ? 0 : 1};
}

Outcome voronoi_select_cmd(const Context& ctx)
{
    auto vc = VoronoiComplex::build(sites_from_json(read_json_file(ctx.files.at(0))));
    auto cells = select_subcomplex(vc, region_from_json(read_json_file(ctx.files.at(1)), vc.ambient_dimension()));
    return {Json{{"cells", cells}}, 0};
}

Outcome snc_build_cmd(const Context& ctx)
{
    auto g = load_geometry(ctx);
    return {to_json(build_snc(g.vc, g.cells, {!ctx.no_ledger})), 0};
}

Outcome snc_dual_cmd(const Context& ctx)
{
    auto g = load_geometry(ctx);
    auto model = build_snc(g.vc, g.cells, {!ctx.no_ledger});
    auto dual = stratum_complex(model);
    bool iso = find_isomorphism(dual, model.expected_dual).has_value();
    Json j = to_json(dual);
    j["isomorphic_to_delaunay"] = iso;
    return {j, iso ? 0 : 1};
}

Outcome snc_pillow_cmd(const Context& ctx)
{
    auto c = pillow_from_json(read_json_file(ctx.files.at(0)));
    auto v = pillow_projectivity(c[0], c[1], c[2]);
    Json j{{"projective", v.projective}};
    j["order"] = v.order ? Json(to_string(*v.order)) : Json(nullptr);
    return {j, v.projective ? 0 : 1};
}

Outcome resolve_run_cmd(const Context& ctx)
{
    auto roots = local_models_from_json(read_json_file(ctx.files.at(0)));
    ResolutionTrace trace;
    try {
        trace = resolve(roots, policy_of(ctx));
    } catch (const Error& e) {
        // Only the step limit is a failed check; everything else is bad input.
        if (std::string(e.what()).find("step limit") == std::string::npos)
            throw;
        return {Json{{"error", e.what()}}, 1};
    }
    bool ok = trace.all_leaves_resolved() && trace.certificate_holds() && trace.nerve_invariant();
    return {to_json(trace, ctx.summary), ok ? 0 : 1};
}

Outcome resolve_embed_cmd(const Context& ctx)
{
    auto g = load_geometry(ctx);
    auto model = build_snc(g.vc, g.cells, {!ctx.no_ledger});
    Json roots = Json::array();
    for (const auto& r : embed_snc(model))
        roots.push_back(to_json(r));
    return {Json{{"roots", roots}}, 0};
}

Outcome seifert_betti_cmd(const Context& ctx)
{
    auto base = base_from_json(read_json_file(ctx.files.at(0)));
    return {Json{{"betti", link_betti(base)}}, 0};
}

Outcome seifert_qhs_cmd(const Context& ctx)
{
    auto base = base_from_json(read_json_file(ctx.files.at(0)));
    bool yes = is_rational_homology_sphere(base);
    return {Json{{"betti", link_betti(base)}, {"rational_homology_sphere", yes}}, yes ? 0 : 1};
}

Outcome seifert_circle_cmd(const Context& ctx)
{
    auto h = decomposition_from_json(read_json_file(ctx.files.at(0)));
    auto v = circle_action_feasible(h);
    return {Json{{"decomposition", to_json(h)}, {"feasible", v.feasible}, {"failed_condition", v.failed_condition}},
            v.feasible ? 0 : 1};
}

Outcome pipeline_cmd(const Context& ctx)
{
    auto input = complex_from_json(read_json_file(ctx.files.at(0)));
    auto sites = sites_from_json(read_json_file(ctx.files.at(1)));
    auto region = region_from_json(read_json_file(ctx.files.at(2)), sites.dimension);
    auto report = run_pipeline(input, sites, region, policy_of(ctx), {!ctx.no_ledger});
    return {report.to_json(), report.ok() ? 0 : 1};
}

// ---- wiring ---------------------------------------------------------------

CLI::App* leaf(CLI::App& parent, const std::string& name, const std::string& help, Context& ctx,
               std::vector<std::string> files, Outcome (*handler)(const Context&))
{
    auto* app = parent.add_subcommand(name, help);
    std::string names;
    for (const auto& f : files)
        names += (names.empty() ? "" : " ") + f + ".json";
    app->add_option("files", ctx.files, names)->required()->expected(static_cast<int>(files.size()));
    app->callback([&ctx, handler] { ctx.action = [&ctx, handler] { return handler(ctx); }; });
    return app;
}

void add_selection(CLI::App* app, Context& ctx)
{
    auto* cells = app->add_option("--cells", ctx.cells, "comma-separated cell indices")->delimiter(',');
    app->add_option("--region", ctx.region, "region JSON file")->excludes(cells);
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    Context ctx;
    CLI::App app{"Combinatorial tools for dual complexes, Voronoi models and symbolic resolutions", "snclab"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", ctx.format, "output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--max-steps", ctx.max_steps, "abort resolution after this many steps");
    app.add_flag("--no-ledger", ctx.no_ledger, "build SNC charts without blow-up ledgers");
    app.add_flag("--summary", ctx.summary, "omit the full resolution trace");

    leaf(app, "homology", "integral homology of a complex", ctx, {"complex"}, homology_cmd);
    leaf(app, "pi1", "fundamental group presentation", ctx, {"complex"}, pi1_cmd)
        ->add_option("--basepoint", ctx.basepoint, "basepoint vertex");

    auto* check = app.add_subcommand("check", "predicates on complexes and presentations");
    check->require_subcommand(1);
    leaf(*check, "q-acyclic", "rational acyclicity of a complex", ctx, {"complex"}, q_acyclic_cmd);
    leaf(*check, "q-perfect", "finite abelianization", ctx, {"input"}, q_perfect_cmd);
    leaf(*check, "q-superperfect", "sufficient Q-superperfect test", ctx, {"input"}, q_superperfect_cmd);

    auto* voronoi = app.add_subcommand("voronoi", "Voronoi complexes of rational sites");
    voronoi->require_subcommand(1);
    leaf(*voronoi, "build", "enumerate faces", ctx, {"sites"}, voronoi_build_cmd);
    add_selection(leaf(*voronoi, "simple", "check simplicity", ctx, {"sites"}, voronoi_simple_cmd), ctx);
    add_selection(leaf(*voronoi, "delaunay", "Delaunay dual of a selection", ctx, {"sites"}, voronoi_delaunay_cmd),
                  ctx);
    leaf(*voronoi, "classify", "essential and parasitic subspaces of a cell", ctx, {"sites"}, voronoi_classify_cmd)
        ->add_option("--cell", ctx.cell, "cell index")
        ->required();
    leaf(*voronoi, "select", "cells meeting a region", ctx, {"sites", "region"}, voronoi_select_cmd);

    auto* snc = app.add_subcommand("snc", "simple normal crossing models");
    snc->require_subcommand(1);
    add_selection(leaf(*snc, "build", "charts, gluings and strata", ctx, {"sites"}, snc_build_cmd), ctx);
    add_selection(leaf(*snc, "dual", "dual complex of the model", ctx, {"sites"}, snc_dual_cmd), ctx);
    leaf(*snc, "pillow", "projectivity of a pillow degeneration", ctx, {"constants"}, snc_pillow_cmd);

    auto* res = app.add_subcommand("resolve", "symbolic resolution of local models");
    res->require_subcommand(1);
    leaf(*res, "run", "resolve local models", ctx, {"models"}, resolve_run_cmd);
    add_selection(leaf(*res, "embed", "local models of an SNC model", ctx, {"sites"}, resolve_embed_cmd), ctx);

    auto* seif = app.add_subcommand("seifert", "Seifert links and circle actions");
    seif->require_subcommand(1);
    leaf(*seif, "betti", "Betti numbers of the link", ctx, {"base"}, seifert_betti_cmd);
    leaf(*seif, "qhs", "rational homology sphere test", ctx, {"base"}, seifert_qhs_cmd);
    leaf(*seif, "circle-action", "circle action feasibility", ctx, {"decomposition"}, seifert_circle_cmd);

    leaf(app, "pipeline", "complex -> Voronoi -> SNC -> resolution report", ctx, {"complex", "sites", "region"},
         pipeline_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    Outcome outcome;
    try {
        if (!ctx.action)
            throw Error("no command given");
        outcome = ctx.action();
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    out << (ctx.format == "text" ? render_text(outcome.body) : render_json(outcome.body));
    return outcome.code;
}

} // namespace snclab
