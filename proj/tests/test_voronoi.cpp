#include "doctest.h"
#include "geometry_fixtures.hpp"

#include "snclab/voronoi.hpp"

#include <random>

using namespace snclab;
using namespace geometry_fixtures;

TEST_CASE("voronoi_complex: two sites on a line")
{
    auto vc = VoronoiComplex::build(sites(1, {{"0"}, {"1"}}));
    REQUIRE(vc.faces().size() == 3);
    auto f = vc.find_face({0, 1});
    REQUIRE(f);
    CHECK(vc.faces()[*f].dimension == 0);
    CHECK(vc.faces()[*f].witness == QVector{Rational(1, 2)});
    CHECK(check_simple(vc).simple);
}

TEST_CASE("voronoi_complex: triangle sites meet at the circumcenter")
{
    auto s = sites(2, {{"0", "0"}, {"1", "0"}, {"0", "1"}});
    auto vc = VoronoiComplex::build(s);
    auto v = vc.find_face({0, 1, 2});
    REQUIRE(v);
    CHECK(vc.faces()[*v].dimension == 0);
    CHECK(vc.faces()[*v].witness == circumcenter(s.sites[0], s.sites[1], s.sites[2]));
    CHECK(vc.faces()[*v].witness == QVector{Rational(1, 2), Rational(1, 2)});
    CHECK(vc.faces().size() == 7);
    CHECK(check_simple(vc).simple);
}

TEST_CASE("voronoi_complex: single site and duplicates")
{
    auto vc = VoronoiComplex::build(sites(3, {{"1", "2", "3"}}));
    CHECK(vc.faces().size() == 1);
    CHECK(vc.faces()[0].dimension == 3);
    CHECK_THROWS_AS(VoronoiComplex::build(sites(1, {{"1/2"}, {"2/4"}})), Error);
    CHECK_THROWS_AS(VoronoiComplex::build(SiteSet{2, {}}), Error);
}

TEST_CASE("is_simple: square corners are degenerate")
{
    auto vc = VoronoiComplex::build(unit_square());
    auto report = check_simple(vc);
    CHECK_FALSE(report.simple);
    REQUIRE(report.witness);
    CHECK(vc.faces()[*report.witness].sites == SiteIndexSet{0, 1, 2, 3});
    CHECK(report.cell_count == 4);
    CHECK_THROWS_WITH_AS(delaunay_dual(vc), doctest::Contains("not simple"), Error);
}

TEST_CASE("delaunay_dual")
{
    auto edge = delaunay_dual(VoronoiComplex::build(sites(1, {{"0"}, {"1"}})));
    CHECK(edge.count(0) == 2);
    CHECK(edge.count(1) == 1);

    auto tri = delaunay_dual(VoronoiComplex::build(sites(2, {{"0", "0"}, {"1", "0"}, {"0", "1"}})));
    CHECK(tri.count(0) == 3);
    CHECK(tri.count(1) == 3);
    CHECK(tri.count(2) == 1);

    auto row = VoronoiComplex::build(row_of_three());
    auto path = delaunay_dual(row, SiteIndexSet{0, 1, 2});
    CHECK(path.count(0) == 3);
    CHECK(path.count(1) == 2);
    CHECK(path.dimension() == 1);
}

TEST_CASE("select_subcomplex")
{
    auto s = sites(2, {{"0", "0"}, {"4", "0"}, {"0", "4"}, {"4", "4"}, {"9", "1"}});
    auto vc = VoronoiComplex::build(s);
    CHECK(select_subcomplex(vc, {{s.sites[0]}}) == SiteIndexSet{0});
    CHECK(select_subcomplex(vc, {{s.sites[0], s.sites[1]}}) == SiteIndexSet{0, 1});
    // A small triangle around (3.9, 3.9) sits inside the cell of site 3.
    CHECK(select_subcomplex(vc, {{point2("39/10", "39/10"), point2("4", "39/10"), point2("39/10", "4")}}) ==
          SiteIndexSet{3});
    CHECK(select_subcomplex(vc, {}).empty());
}

TEST_CASE("classify_subspaces: triangle")
{
    auto vc = VoronoiComplex::build(sites(2, {{"0", "0"}, {"1", "0"}, {"0", "1"}}));
    auto r = classify_subspaces(vc, 0);
    std::vector<SiteIndexSet> ess, par;
    for (auto k : r.essential())
        ess.push_back(r.subspaces[k].sites);
    for (auto k : r.parasitic())
        par.push_back(r.subspaces[k].sites);
    CHECK(ess == std::vector<SiteIndexSet>{{0, 1, 2}, {0, 1}, {0, 2}});
    CHECK(par == std::vector<SiteIndexSet>{{1, 2}});
    const auto& vertex = r.subspaces[0];
    REQUIRE(vertex.minimal_parasitic_parent);
    CHECK(r.subspaces[*vertex.minimal_parasitic_parent].sites == SiteIndexSet{1, 2});
    CHECK(r.parent_failures.empty());
    CHECK(r.closure_failures.empty());
}

TEST_CASE("classify_subspaces: line configurations")
{
    auto two = VoronoiComplex::build(sites(1, {{"0"}, {"1"}}));
    CHECK(classify_subspaces(two, 0).parasitic().empty());
    CHECK(classify_subspaces(two, 1).parasitic().empty());

    auto four = VoronoiComplex::build(sites(1, {{"0"}, {"1"}, {"3"}, {"7"}}));
    auto r = classify_subspaces(four, 1);
    std::vector<SiteIndexSet> par;
    for (auto k : r.parasitic())
        par.push_back(r.subspaces[k].sites);
    CHECK(par == std::vector<SiteIndexSet>{{0, 2}, {0, 3}, {1, 3}, {2, 3}});

    // 0,1,2,3: midpoints of {0,3} and {1,2} coincide.
    auto symmetric = VoronoiComplex::build(sites(1, {{"0"}, {"1"}, {"2"}, {"3"}}));
    CHECK_THROWS_WITH_AS(classify_subspaces(symmetric, 0), doctest::Contains("genericity"), Error);
    CHECK_THROWS_AS(classify_subspaces(VoronoiComplex::build(unit_square()), 0), Error);
}

TEST_CASE("face spans agree with independently computed equidistant sets")
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        auto s = random_sites(rng, 1 + trial % 3, 2 + trial % 5);
        auto vc = VoronoiComplex::build(s);
        for (const auto& f : vc.faces()) {
            CHECK(oracle_nearest(s, f.witness) == f.sites);
            CHECK(f.span == equidistant_subspace(s, f.sites));
        }
    }
}

TEST_CASE("partition: probe points lie in their nearest-site cells")
{
    std::mt19937 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t m = 1 + trial % 3;
        auto s = random_sites(rng, m, 2 + trial % 7);
        auto vc = VoronoiComplex::build(s);
        for (int probe = 0; probe < 10; ++probe) {
            QVector x(m);
            for (auto& c : x)
                c = make_rational(static_cast<long>(rng() % 41) - 20, 1 + static_cast<long>(rng() % 3));
            auto in = vc.cells_containing(x);
            CHECK(in == oracle_nearest(s, x));
            CHECK(!in.empty());
        }
        // Every face witness sits on the equality locus of its sites.
        for (const auto& f : vc.faces())
            CHECK(vc.cells_containing(f.witness) == f.sites);
    }
}

TEST_CASE("simple complexes: dual simplex dimension equals face codimension")
{
    std::mt19937 rng(3);
    int simple_seen = 0;
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t m = 1 + trial % 3;
        auto vc = VoronoiComplex::build(random_sites(rng, m, 2 + trial % 6));
        if (!check_simple(vc).simple)
            continue;
        ++simple_seen;
        auto d = delaunay_dual(vc);
        std::size_t faces_by_dim[8] = {};
        for (const auto& f : vc.faces())
            ++faces_by_dim[static_cast<int>(m) - f.dimension];
        for (std::size_t k = 0; k <= m; ++k)
            CHECK(d.count(static_cast<int>(k)) == faces_by_dim[k]);
    }
    CHECK(simple_seen > 20);
}

TEST_CASE("perturbing degenerate configurations restores simplicity")
{
    std::mt19937 rng(17);
    int simple = 0;
    for (int trial = 0; trial < 20; ++trial) {
        auto s = unit_square();
        for (auto& y : s.sites)
            for (auto& c : y)
                c += make_rational(static_cast<long>(rng() % 201) - 100, 1000);
        if (check_simple(VoronoiComplex::build(s)).simple)
            ++simple;
    }
    CHECK(simple >= 19);
}
