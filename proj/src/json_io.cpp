#include "snclab/json_io.hpp"

#include <fstream>
#include <sstream>

namespace snclab {

namespace {

const Json& require(const Json& j, const char* key, const char* what)
{
    if (!j.is_object())
        throw Error(std::string(what) + ": expected a JSON object");
    auto it = j.find(key);
    if (it == j.end())
        throw Error(std::string(what) + ": missing key \"" + key + "\"");
    return *it;
}

long as_long(const Json& j, const char* what)
{
    if (!j.is_number_integer())
        throw Error(std::string(what) + ": expected an integer");
    return j.get<long>();
}

std::size_t as_index(const Json& j, const char* what)
{
    long v = as_long(j, what);
    if (v < 0)
        throw Error(std::string(what) + ": expected a nonnegative integer");
    return static_cast<std::size_t>(v);
}

const Json& as_array(const Json& j, const char* what)
{
    if (!j.is_array())
        throw Error(std::string(what) + ": expected an array");
    return j;
}

QVector point_from_json(const Json& j, std::size_t dimension, const char* what)
{
    as_array(j, what);
    if (j.size() != dimension)
        throw Error(std::string(what) + ": expected " + std::to_string(dimension) + " coordinates, got " +
                    std::to_string(j.size()));
    QVector p;
    for (const auto& c : j)
        p.push_back(rational_from_json(c));
    return p;
}

Json index_list(const std::vector<std::size_t>& v)
{
    Json out = Json::array();
    for (auto x : v)
        out.push_back(x);
    return out;
}

Json span_json(const AffineSubspace& s)
{
    Json eq = Json::array();
    const auto& m = s.equations();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c)
            row.push_back(to_string(m(r, c)));
        eq.push_back(row);
    }
    return Json{{"dim", s.dimension()}, {"equations", eq}};
}

Json node_model(const LocalModel& m)
{
    Json j = to_json(m);
    j["mdeg"] = to_json(mdeg(m));
    j["resolved"] = is_resolved(m);
    return j;
}

} // namespace

Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw Error("malformed JSON in " + path + ": " + e.what());
    }
}

DeltaComplex complex_from_json(const Json& j)
{
    const char* what = "complex";
    long dim = as_long(require(j, "dim", what), what);
    const Json& cells = as_array(require(j, "cells", what), what);
    if (dim < -1)
        throw Error("complex: dim must be >= -1");
    if (cells.size() != static_cast<std::size_t>(dim + 1))
        throw Error("complex: expected " + std::to_string(dim + 1) + " cell groups, got " +
                    std::to_string(cells.size()));

    std::vector<std::vector<DeltaComplex::FaceList>> out;
    for (std::size_t k = 0; k < cells.size(); ++k) {
        const Json& group = cells[k];
        if (k == 0) {
            std::size_t n = group.is_array() ? group.size() : as_index(group, "complex: 0-cells");
            out.emplace_back(n);
            continue;
        }
        as_array(group, "complex: cell group");
        std::vector<DeltaComplex::FaceList> level;
        for (const auto& cell : group) {
            as_array(cell, "complex: face list");
            DeltaComplex::FaceList faces;
            for (const auto& f : cell)
                faces.push_back(as_index(f, "complex: face index"));
            level.push_back(std::move(faces));
        }
        out.push_back(std::move(level));
    }

    std::vector<std::vector<std::string>> labels;
    if (auto it = j.find("labels"); it != j.end() && !it->is_null()) {
        as_array(*it, "complex: labels");
        for (const auto& group : *it) {
            as_array(group, "complex: label group");
            std::vector<std::string> level;
            for (const auto& l : group) {
                if (l.is_string())
                    level.push_back(l.get<std::string>());
                else if (l.is_number_integer())
                    level.push_back(std::to_string(l.get<long>()));
                else
                    throw Error("complex: labels must be strings or integers");
            }
            labels.push_back(std::move(level));
        }
    }
    return DeltaComplex::build(std::move(out), std::move(labels));
}

Presentation presentation_from_json(const Json& j)
{
    const char* what = "presentation";
    Presentation p;
    p.generators = as_index(require(j, "generators", what), what);
    for (const auto& r : as_array(require(j, "relators", what), what)) {
        Word w;
        for (const auto& letter : as_array(r, "presentation: relator")) {
            long v = as_long(letter, "presentation: letter");
            if (v == 0 || v > static_cast<long>(p.generators) || -v > static_cast<long>(p.generators))
                throw Error("presentation: letter " + std::to_string(v) + " out of range");
            w.push_back(static_cast<int>(v));
        }
        p.relators.push_back(std::move(w));
    }
    p.validate();
    return p;
}

Rational rational_from_json(const Json& j)
{
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    if (j.is_number_integer())
        return Rational(Integer(std::to_string(j.get<long>()), 10));
    throw Error("coordinate: expected a rational string or an integer");
}

SiteSet sites_from_json(const Json& j)
{
    const char* what = "sites";
    SiteSet s;
    s.dimension = as_index(require(j, "dim", what), what);
    for (const auto& p : as_array(require(j, "sites", what), what))
        s.sites.push_back(point_from_json(p, s.dimension, "sites: site"));
    s.validate();
    return s;
}

Region region_from_json(const Json& j, std::size_t dimension)
{
    const char* what = "region";
    Region r;
    for (const auto& simplex : as_array(require(j, "simplices", what), what)) {
        as_array(simplex, "region: simplex");
        if (simplex.empty())
            throw Error("region: empty simplex");
        std::vector<QVector> verts;
        for (const auto& v : simplex)
            verts.push_back(point_from_json(v, dimension, "region: vertex"));
        r.push_back(std::move(verts));
    }
    return r;
}

LocalModel local_model_from_json(const Json& j)
{
    const char* what = "local model";
    LocalModel m;
    for (const auto& i : as_array(require(j, "I", what), what))
        m.x.push_back(as_long(i, "local model: I"));
    m.m = as_long(require(j, "m", what), what);
    if (auto it = j.find("F"); it != j.end()) {
        for (const auto& pair : as_array(*it, "local model: F")) {
            if (!pair.is_array() || pair.size() != 2)
                throw Error("local model: F entries are [label, exponent] pairs");
            Label label = as_long(pair[0], "local model: F label");
            if (m.z.count(label))
                throw Error("local model: label " + std::to_string(label) + " repeated in F");
            m.z[label] = as_long(pair[1], "local model: F exponent");
        }
    }
    m.validate();
    return m;
}

std::vector<LocalModel> local_models_from_json(const Json& j)
{
    const Json* list = &j;
    if (j.is_object()) {
        if (!j.contains("roots"))
            return {local_model_from_json(j)};
        list = &j.at("roots");
    }
    std::vector<LocalModel> out;
    for (const auto& m : as_array(*list, "local models"))
        out.push_back(local_model_from_json(m));
    if (out.empty())
        throw Error("local models: no roots given");
    return out;
}

BaseCohomology base_from_json(const Json& j)
{
    const char* what = "base";
    BaseCohomology b;
    b.d = as_long(require(j, "d", what), what);
    for (const auto& h : as_array(require(j, "h", what), what))
        b.h.push_back(as_long(h, "base: h"));
    b.validate();
    return b;
}

H2Decomposition decomposition_from_json(const Json& j)
{
    const char* what = "decomposition";
    H2Decomposition h;
    h.k = as_long(require(j, "k", what), what);
    if (auto it = j.find("c"); it != j.end()) {
        if (!it->is_object())
            throw Error("decomposition: c must be an object keyed by prime powers");
        for (const auto& [key, value] : it->items()) {
            Integer q;
            if (key.empty() || key.find_first_not_of("0123456789") != std::string::npos)
                throw Error("decomposition: bad key \"" + key + "\"");
            q = Integer(key, 10);
            h.c[q] = as_long(value, "decomposition: multiplicity");
        }
    }
    if (auto it = j.find("iM"); it != j.end()) {
        if (it->is_string() && it->get<std::string>() == "inf")
            h.i_m = std::nullopt;
        else
            h.i_m = as_long(*it, "decomposition: iM");
    }
    h.validate();
    return h;
}

std::array<PolarRational, 3> pillow_from_json(const Json& j)
{
    const Json& c = as_array(require(j, "c", "pillow"), "pillow");
    if (c.size() != 3)
        throw Error("pillow: expected three constants");
    std::array<PolarRational, 3> out;
    for (std::size_t i = 0; i < 3; ++i) {
        if (!c[i].is_array() || c[i].size() != 2)
            throw Error("pillow: constants are [modulus, turns] pairs");
        out[i] = {rational_from_json(c[i][0]), rational_from_json(c[i][1])};
    }
    return out;
}

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const QVector& v)
{
    Json out = Json::array();
    for (const auto& x : v)
        out.push_back(to_string(x));
    return out;
}

Json to_json(const AbelianGroup& g)
{
    Json torsion = Json::array();
    for (const auto& t : g.torsion)
        torsion.push_back(to_string(t));
    return Json{{"rank", g.rank}, {"torsion", torsion}, {"group", g.to_string()}};
}

Json to_json(const DeltaComplex& k)
{
    Json cells = Json::array();
    for (int d = 0; d <= k.dimension(); ++d) {
        if (d == 0) {
            cells.push_back(Json::array());
            for (std::size_t c = 0; c < k.count(0); ++c)
                cells.back().push_back(Json::array());
            continue;
        }
        Json level = Json::array();
        for (const auto& f : k.cells()[d])
            level.push_back(index_list(f));
        cells.push_back(level);
    }
    Json j{{"dim", k.dimension()}, {"cells", cells}};
    if (!k.labels().empty())
        j["labels"] = k.labels();
    return j;
}

Json to_json(const Presentation& p)
{
    Json rel = Json::array();
    for (const auto& w : p.relators)
        rel.push_back(w);
    return Json{{"generators", p.generators}, {"relators", rel}};
}

Json to_json(const VoronoiComplex& vc)
{
    Json faces = Json::array();
    for (const auto& f : vc.faces())
        faces.push_back(Json{{"sites", index_list(f.sites)}, {"dim", f.dimension}, {"witness", to_json(f.witness)}});
    return Json{{"dim", vc.ambient_dimension()}, {"cells", vc.cell_count()}, {"faces", faces}};
}

Json to_json(const SubspaceReport& r)
{
    auto entry = [&](std::size_t i) {
        const auto& s = r.subspaces[i];
        Json e{{"sites", index_list(s.sites)}, {"dim", s.dimension}};
        if (s.minimal_parasitic_parent)
            e["parent"] = index_list(r.subspaces[*s.minimal_parasitic_parent].sites);
        return e;
    };
    Json ess = Json::array(), par = Json::array();
    for (auto i : r.essential())
        ess.push_back(entry(i));
    for (auto i : r.parasitic())
        par.push_back(entry(i));
    Json pf = Json::array(), cf = Json::array();
    for (auto i : r.parent_failures)
        pf.push_back(index_list(r.subspaces[i].sites));
    for (auto [a, b] : r.closure_failures)
        cf.push_back(Json::array({index_list(r.subspaces[a].sites), index_list(r.subspaces[b].sites)}));
    return Json{{"cell", r.cell},
                {"essential", ess},
                {"parasitic", par},
                {"parent_failures", pf},
                {"closure_failures", cf}};
}

Json to_json(const SncModel& m)
{
    Json charts = Json::array();
    for (const auto& c : m.charts) {
        Json ledger = Json::array();
        for (const auto& lc : c.ledger.centers)
            ledger.push_back(Json{{"sites", index_list(lc.sites)}, {"dim", lc.dimension}, {"effective", lc.effective}});
        charts.push_back(Json{{"cell", c.cell}, {"faces", c.faces.size()}, {"ledger", ledger}});
    }
    Json gluings = Json::array();
    for (const auto& g : m.gluings)
        gluings.push_back(Json{{"a", g.a}, {"b", g.b}});
    Json strata = Json::array();
    for (const auto& s : m.strata)
        strata.push_back(Json{{"components", index_list(s.components)},
                              {"flat", span_json(s.flat)},
                              {"members", s.members.size()},
                              {"rational", s.rational}});
    Json sphere = Json::array();
    for (bool b : m.sphere_class)
        sphere.push_back(b);
    return Json{{"dim", m.dimension},
                {"charts", charts},
                {"gluings", gluings},
                {"strata", strata},
                {"flags", Json{{"ledgers_applied", m.ledgers_applied}, {"sphere_class", sphere}}}};
}

Json to_json(const LocalModel& m)
{
    Json f = Json::array();
    for (auto [label, exp] : m.z)
        f.push_back(Json::array({label, exp}));
    return Json{{"I", m.x}, {"m", m.m}, {"F", f}};
}

Json to_json(const Mdeg& d) { return Json::array({d.dx, d.dy, d.dz}); }

Json to_json(const ResolutionTrace& t, bool summary_only)
{
    const auto leaves = t.leaves();
    Json j{{"roots", t.roots.size()},
           {"steps", t.steps.size()},
           {"leaves", leaves.size()},
           {"all_resolved", t.all_leaves_resolved()},
           {"certificate_holds", t.certificate_holds()},
           {"nerve_invariant", t.nerve_invariant()},
           {"nerve", t.initial_nerve}};
    Json rules = Json::object();
    for (const auto& s : t.steps)
        rules[rule_name(s.rule)] = rules.value(rule_name(s.rule), 0) + 1;
    j["rules"] = rules;
    if (summary_only)
        return j;

    Json nodes = Json::array();
    for (std::size_t i = 0; i < t.nodes.size(); ++i) {
        const auto& n = t.nodes[i];
        Json e = node_model(n.model);
        e["id"] = i;
        e["produced_by"] = n.produced_by ? Json(*n.produced_by) : Json(nullptr);
        e["expanded_by"] = n.expanded_by ? Json(*n.expanded_by) : Json(nullptr);
        nodes.push_back(e);
    }
    Json steps = Json::array();
    for (const auto& s : t.steps) {
        Json cert = Json::array();
        for (const auto& c : s.certificate)
            cert.push_back(Json{{"parent", to_json(c.parent)}, {"child", to_json(c.child)}, {"decreasing", c.decreasing}});
        steps.push_back(Json{{"rule", rule_name(s.rule)},
                             {"node", s.node},
                             {"center", s.center.describe()},
                             {"children", index_list(s.children)},
                             {"certificate", cert}});
    }
    j["trace"] = Json{{"nodes", nodes}, {"steps", steps}};
    j["leaf_ids"] = index_list(leaves);
    return j;
}

Json to_json(const H2Decomposition& h)
{
    Json c = Json::object();
    for (const auto& [q, n] : h.c)
        c[to_string(q)] = n;
    return Json{{"k", h.k}, {"c", c}, {"iM", h.i_m ? Json(*h.i_m) : Json("inf")}};
}

std::string render_json(const Json& j) { return j.dump(2) + "\n"; }

namespace {

void text_lines(const Json& j, const std::string& path, std::ostringstream& out)
{
    if (j.is_object() && !j.empty()) {
        for (const auto& [key, value] : j.items())
            text_lines(value, path.empty() ? key : path + "." + key, out);
        return;
    }
    out << path << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
}

} // namespace

std::string render_text(const Json& j)
{
    std::ostringstream out;
    text_lines(j, "", out);
    return out.str();
}

} // namespace snclab
