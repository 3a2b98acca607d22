#include "snclab/voronoi.hpp"

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

Rational norm2(const QVector& v) { return dot(v, v); }

// Rewrites rows a.x <= b in the coordinates x = p + B u of a subspace.
std::pair<QMatrix, QVector> restrict_to(const AffineSubspace& sub, const std::vector<std::pair<QVector, Rational>>& rows)
{
    const auto p = sub.point();
    const auto basis = sub.basis();
    QMatrix a(0, basis.size());
    QVector b;
    for (const auto& [row, bound] : rows) {
        QVector r(basis.size());
        for (std::size_t c = 0; c < basis.size(); ++c)
            r[c] = dot(row, basis[c]);
        if (basis.empty())
            a = QMatrix(a.rows() + 1, 0);
        else
            a.append_row(r);
        b.push_back(bound - dot(row, p));
    }
    return {std::move(a), std::move(b)};
}

QVector lift(const AffineSubspace& sub, const QVector& u)
{
    QVector x = sub.point();
    const auto basis = sub.basis();
    for (std::size_t c = 0; c < basis.size(); ++c)
        for (std::size_t i = 0; i < x.size(); ++i)
            x[i] += u[c] * basis[c][i];
    return x;
}

} // namespace

void SiteSet::validate() const
{
    if (sites.empty())
        throw Error("site set is empty");
    for (std::size_t i = 0; i < sites.size(); ++i)
        if (sites[i].size() != dimension)
            throw Error("site " + std::to_string(i) + " has " + std::to_string(sites[i].size()) +
                        " coordinates, expected " + std::to_string(dimension));
    for (std::size_t i = 0; i < sites.size(); ++i)
        for (std::size_t j = i + 1; j < sites.size(); ++j)
            if (sites[i] == sites[j])
                throw Error("duplicate sites " + std::to_string(i) + " and " + std::to_string(j));
}

AffineSubspace equidistant_subspace(const SiteSet& s, const SiteIndexSet& j)
{
    if (j.empty())
        throw Error("equidistant subspace of an empty index set");
    std::vector<std::pair<QVector, Rational>> rows;
    const auto& y0 = s.sites.at(j[0]);
    for (std::size_t k = 1; k < j.size(); ++k) {
        const auto& y = s.sites.at(j[k]);
        QVector a(s.dimension);
        for (std::size_t c = 0; c < s.dimension; ++c)
            a[c] = 2 * (y[c] - y0[c]);
        rows.emplace_back(std::move(a), norm2(y) - norm2(y0));
    }
    return AffineSubspace::from_equations(s.dimension, rows);
}

std::pair<QVector, Rational> VoronoiComplex::bisector(std::size_t i, std::size_t j) const
{
    const auto& yi = sites_.sites.at(i);
    const auto& yj = sites_.sites.at(j);
    QVector a(sites_.dimension);
    for (std::size_t c = 0; c < a.size(); ++c)
        a[c] = 2 * (yj[c] - yi[c]);
    return {std::move(a), norm2(yj) - norm2(yi)};
}

VoronoiComplex VoronoiComplex::build(SiteSet sites)
{
    for (auto& y : sites.sites)
        for (auto& c : y)
            c.canonicalize();
    sites.validate();
    VoronoiComplex vc;
    vc.sites_ = std::move(sites);
    const std::size_t n = vc.sites_.sites.size();

    // Depth-first over index sets in increasing order. The closed face of a
    // superset sits inside the closed face of J, so an infeasible closed
    // face prunes the whole branch.
    std::vector<SiteIndexSet> stack;
    for (std::size_t i = n; i-- > 0;)
        stack.push_back({i});
    while (!stack.empty()) {
        auto j = std::move(stack.back());
        stack.pop_back();
        auto span = equidistant_subspace(vc.sites_, j);
        if (span.empty())
            continue;
        std::vector<std::pair<QVector, Rational>> rows;
        for (std::size_t k = 0; k < n; ++k)
            if (!std::binary_search(j.begin(), j.end(), k))
                rows.push_back(vc.bisector(j[0], k));
        auto [a, b] = restrict_to(span, rows);
        auto sol = max_uniform_slack(a, b);
        if (sol.slack < 0)
            continue;
        if (sol.slack > 0)
            vc.faces_.push_back({j, span, span.dimension(), lift(span, sol.point)});
        for (std::size_t k = n; k-- > j.back() + 1;) {
            auto next = j;
            next.push_back(k);
            stack.push_back(std::move(next));
        }
    }
    std::sort(vc.faces_.begin(), vc.faces_.end(), [](const VoronoiFace& x, const VoronoiFace& y) {
        if (x.sites.size() != y.sites.size())
            return x.sites.size() < y.sites.size();
        return x.sites < y.sites;
    });
    return vc;
}

std::optional<std::size_t> VoronoiComplex::find_face(const SiteIndexSet& j) const
{
    auto it = std::lower_bound(faces_.begin(), faces_.end(), j, [](const VoronoiFace& f, const SiteIndexSet& key) {
        if (f.sites.size() != key.size())
            return f.sites.size() < key.size();
        return f.sites < key;
    });
    if (it != faces_.end() && it->sites == j)
        return static_cast<std::size_t>(it - faces_.begin());
    return std::nullopt;
}

std::vector<std::size_t> VoronoiComplex::faces_of_cell(std::size_t cell) const
{
    std::vector<std::size_t> out;
    for (std::size_t f = 0; f < faces_.size(); ++f)
        if (std::binary_search(faces_[f].sites.begin(), faces_[f].sites.end(), cell))
            out.push_back(f);
    return out;
}

bool VoronoiComplex::cell_contains(std::size_t cell, const QVector& point) const
{
    for (std::size_t k = 0; k < cell_count(); ++k) {
        if (k == cell)
            continue;
        auto [a, b] = bisector(cell, k);
        if (dot(a, point) > b)
            return false;
    }
    return true;
}

SiteIndexSet VoronoiComplex::cells_containing(const QVector& point) const
{
    SiteIndexSet out;
    for (std::size_t i = 0; i < cell_count(); ++i)
        if (cell_contains(i, point))
            out.push_back(i);
    return out;
}

SimplicityReport check_simple(const VoronoiComplex& vc, const std::optional<SiteIndexSet>& cells)
{
    const auto m = static_cast<int>(vc.ambient_dimension());
    for (std::size_t f = 0; f < vc.faces().size(); ++f) {
        const auto& face = vc.faces()[f];
        if (cells && std::none_of(face.sites.begin(), face.sites.end(), [&](std::size_t s) {
                return std::binary_search(cells->begin(), cells->end(), s);
            }))
            continue;
        if (static_cast<int>(face.sites.size()) != m - face.dimension + 1)
            return {false, f, face.sites.size()};
    }
    return {};
}

DeltaComplex delaunay_dual(const VoronoiComplex& vc, const std::optional<SiteIndexSet>& cells)
{
    std::optional<SiteIndexSet> sel;
    if (cells) {
        sel = *cells;
        std::sort(sel->begin(), sel->end());
        for (auto c : *sel)
            if (c >= vc.cell_count())
                throw Error("unknown cell " + std::to_string(c));
    }
    auto report = check_simple(vc, sel);
    if (!report.simple) {
        const auto& face = vc.faces()[*report.witness];
        throw Error("not simple: face " + set_name(face.sites) + " of dimension " + std::to_string(face.dimension) +
                    " lies in " + std::to_string(report.cell_count) + " cells");
    }
    std::vector<std::vector<int>> simplices;
    for (const auto& face : vc.faces()) {
        if (sel && !std::includes(sel->begin(), sel->end(), face.sites.begin(), face.sites.end()))
            continue;
        simplices.emplace_back(face.sites.begin(), face.sites.end());
    }
    return DeltaComplex::from_simplices(simplices);
}

SiteIndexSet select_subcomplex(const VoronoiComplex& vc, const Region& region)
{
    const std::size_t m = vc.ambient_dimension();
    std::set<std::size_t> chosen;
    for (std::size_t s = 0; s < region.size(); ++s) {
        const auto& verts = region[s];
        if (verts.empty())
            throw Error("region simplex " + std::to_string(s) + " has no vertices");
        for (const auto& v : verts)
            if (v.size() != m)
                throw Error("region simplex " + std::to_string(s) + " has a vertex of wrong dimension");
        // x = v_last + sum_k lambda_k (v_k - v_last), lambda >= 0, sum lambda <= 1.
        const std::size_t d = verts.size() - 1;
        const auto& base = verts.back();
        for (std::size_t cell = 0; cell < vc.cell_count(); ++cell) {
            if (chosen.count(cell))
                continue;
            QMatrix a(0, d);
            QVector b;
            auto push = [&](QVector row, Rational bound) {
                if (d == 0)
                    a = QMatrix(a.rows() + 1, 0);
                else
                    a.append_row(row);
                b.push_back(std::move(bound));
            };
            for (std::size_t k = 0; k < vc.cell_count(); ++k) {
                if (k == cell)
                    continue;
                auto [row, bound] = vc.bisector(cell, k);
                QVector r(d);
                for (std::size_t l = 0; l < d; ++l) {
                    QVector dir(m);
                    for (std::size_t c = 0; c < m; ++c)
                        dir[c] = verts[l][c] - base[c];
                    r[l] = dot(row, dir);
                }
                push(std::move(r), bound - dot(row, base));
            }
            for (std::size_t l = 0; l < d; ++l) {
                QVector r(d, Rational(0));
                r[l] = -1;
                push(std::move(r), 0);
            }
            if (d > 0)
                push(QVector(d, Rational(1)), 1);
            if (max_uniform_slack(a, b).slack >= 0)
                chosen.insert(cell);
        }
    }
    return {chosen.begin(), chosen.end()};
}

std::vector<std::size_t> SubspaceReport::essential() const
{
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < subspaces.size(); ++k)
        if (subspaces[k].essential)
            out.push_back(k);
    return out;
}

std::vector<std::size_t> SubspaceReport::parasitic() const
{
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < subspaces.size(); ++k)
        if (!subspaces[k].essential)
            out.push_back(k);
    return out;
}

SubspaceReport classify_subspaces(const VoronoiComplex& vc, std::size_t cell)
{
    if (cell >= vc.cell_count())
        throw Error("unknown cell " + std::to_string(cell));
    auto simple = check_simple(vc, SiteIndexSet{cell});
    if (!simple.simple)
        throw Error("not simple: face " + set_name(vc.faces()[*simple.witness].sites) + " lies in " +
                    std::to_string(simple.cell_count) + " cells");

    const auto& s = vc.site_set();
    const std::size_t n = vc.cell_count();
    const int m = static_cast<int>(vc.ambient_dimension());

    std::map<AffineSubspace, SiteIndexSet> by_span;
    std::vector<SiteIndexSet> stack;
    for (std::size_t i = n; i-- > 0;)
        stack.push_back({i});
    while (!stack.empty()) {
        auto j = std::move(stack.back());
        stack.pop_back();
        auto span = equidistant_subspace(s, j);
        if (span.empty())
            continue;
        if (j.size() >= 2) {
            auto [it, fresh] = by_span.emplace(span, j);
            if (!fresh)
                throw Error("genericity violation: H" + set_name(it->second) + " = H" + set_name(j));
        }
        for (std::size_t k = n; k-- > j.back() + 1;) {
            auto next = j;
            next.push_back(k);
            stack.push_back(std::move(next));
        }
    }

    SubspaceReport report;
    report.cell = cell;
    for (auto& [span, j] : by_span) {
        ClassifiedSubspace c;
        c.sites = j;
        c.dimension = span.dimension();
        c.span = span;
        c.essential = std::binary_search(j.begin(), j.end(), cell) && vc.find_face(j).has_value();
        report.subspaces.push_back(std::move(c));
    }
    std::sort(report.subspaces.begin(), report.subspaces.end(), [](const auto& x, const auto& y) {
        if (x.dimension != y.dimension)
            return x.dimension < y.dimension;
        return x.sites < y.sites;
    });

    const auto parasitic = report.parasitic();
    for (std::size_t e = 0; e < report.subspaces.size(); ++e) {
        auto& sub = report.subspaces[e];
        if (!sub.essential || sub.dimension > m - 2)
            continue;
        std::vector<std::size_t> supers;
        for (auto p : parasitic)
            if (report.subspaces[p].span.contains(sub.span))
                supers.push_back(p);
        std::vector<std::size_t> minimal;
        for (auto p : supers) {
            bool is_min = std::none_of(supers.begin(), supers.end(), [&](std::size_t q) {
                return q != p && report.subspaces[p].span.contains(report.subspaces[q].span);
            });
            if (is_min)
                minimal.push_back(p);
        }
        if (minimal.size() == 1 && report.subspaces[minimal[0]].dimension == sub.dimension + 1)
            sub.minimal_parasitic_parent = minimal[0];
        else
            report.parent_failures.push_back(e);
    }

    std::map<AffineSubspace, std::size_t> index_of;
    for (std::size_t k = 0; k < report.subspaces.size(); ++k)
        index_of.emplace(report.subspaces[k].span, k);
    for (std::size_t a = 0; a < parasitic.size(); ++a)
        for (std::size_t b = a + 1; b < parasitic.size(); ++b) {
            auto x = report.subspaces[parasitic[a]].span.intersect(report.subspaces[parasitic[b]].span);
            if (x.empty())
                continue;
            auto it = index_of.find(x);
            if (it != index_of.end() && report.subspaces[it->second].essential)
                report.closure_failures.emplace_back(parasitic[a], parasitic[b]);
        }
    return report;
}

} // namespace snclab
