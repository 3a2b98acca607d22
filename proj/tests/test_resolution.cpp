#include "doctest.h"
#include "geometry_fixtures.hpp"

#include "snclab/resolution.hpp"

#include <functional>
#include <set>

using namespace snclab;

namespace {

LocalModel model(std::vector<Label> x, long m, std::map<Label, long> z = {})
{
    LocalModel l;
    l.x = std::move(x);
    l.m = m;
    l.z = std::move(z);
    return l;
}

std::vector<Mdeg> mdegs(const std::vector<LocalModel>& v)
{
    std::vector<Mdeg> out;
    for (const auto& l : v)
        out.push_back(mdeg(l));
    return out;
}

// Partitions of n into positive parts, non-increasing.
void partitions(long n, long max_part, std::vector<long>& cur, std::vector<std::vector<long>>& out)
{
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (long p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions(n - p, p, cur, out);
        cur.pop_back();
    }
}

} // namespace

TEST_CASE("mdeg and is_resolved")
{
    CHECK(mdeg(model({1, 2}, 1)) == Mdeg{2, 1, 0});
    CHECK(mdeg(model({1}, 5, {{7, 3}})) == Mdeg{1, 5, 3});
    CHECK(mdeg(model({}, 0)) == Mdeg{0, 0, 0});
    CHECK(is_resolved(model({1}, 3, {{7, 5}})));
    CHECK(is_resolved(model({1, 2, 3, 4}, 0)));
    CHECK_FALSE(is_resolved(model({1, 2}, 1)));
}

TEST_CASE("LocalModel::validate")
{
    CHECK_THROWS_AS(model({2, 1}, 0).validate(), Error);
    CHECK_THROWS_AS(model({1}, -1).validate(), Error);
    CHECK_THROWS_AS(model({1}, 0, {{3, 0}}).validate(), Error);
    CHECK_THROWS_AS(model({1, 3}, 0, {{3, 1}}).validate(), Error);
    CHECK_NOTHROW(model({1, 2}, 2, {{5, 1}}).validate());
}

TEST_CASE("step_determinantal")
{
    auto charts = step_determinantal(model({1, 2}, 2), 1, 2, 9);
    REQUIRE(charts.size() == 6);
    CHECK(charts[0].same_germ(model({2}, 2, {{9, 2}})));
    CHECK(charts[1].same_germ(model({1}, 2, {{9, 2}})));
    for (std::size_t k = 2; k < 6; ++k)
        CHECK(charts[k].same_germ(model({1, 2}, 1, {{9, 2}})));

    auto big = step_determinantal(model({1, 2, 3}, 3, {{4, 1}}), 2, 3, 5);
    CHECK(big.size() == 11);
    for (const auto& c : big)
        CHECK(mdeg(c) < Mdeg{3, 3, 1});
    CHECK_THROWS_AS(step_determinantal(model({1, 2}, 1), 1, 2, 9), Error);
    CHECK_THROWS_AS(step_determinantal(model({1, 2}, 2), 1, 3, 9), Error);
    CHECK_THROWS_AS(step_determinantal(model({1, 2}, 2), 1, 1, 9), Error);
    CHECK_THROWS_AS(step_determinantal(model({1, 2}, 2), 1, 2, 2), Error);
}

TEST_CASE("step_monomial")
{
    auto one = step_monomial(model({1, 2}, 0, {{7, 2}}), {MonomialVariant::ExponentAtLeastTwo, 1, 2, 7, 0}, 8);
    REQUIRE(one.size() == 3);
    CHECK(one[0].same_germ(model({2}, 0, {{7, 2}})));
    CHECK(one[1].same_germ(model({1}, 0, {{7, 2}})));
    CHECK(one[2].same_germ(model({1, 2}, 0)));
    CHECK(mdegs(one) == std::vector<Mdeg>{{1, 0, 2}, {1, 0, 2}, {2, 0, 0}});
    for (const auto& c : one)
        CHECK(is_resolved(c));

    auto three = step_monomial(model({1, 2}, 0, {{7, 3}}), {MonomialVariant::ExponentAtLeastTwo, 1, 2, 7, 0}, 8);
    CHECK(three[0].same_germ(model({2}, 0, {{7, 3}, {8, 1}})));
    CHECK(three[2].same_germ(model({1, 2}, 0, {{8, 1}})));

    auto pair = step_monomial(model({1, 2}, 0, {{5, 1}, {6, 1}}), {MonomialVariant::Pair, 1, 2, 5, 6});
    CHECK(mdegs(pair) == std::vector<Mdeg>{{1, 0, 2}, {1, 0, 2}, {2, 0, 1}, {2, 0, 1}});

    auto yz = step_monomial(model({1, 2, 3}, 1, {{5, 1}}), {MonomialVariant::YZPair, 1, 2, 5, 0});
    CHECK(mdegs(yz) == std::vector<Mdeg>{{2, 1, 1}, {2, 1, 1}, {3, 0, 1}, {3, 1, 0}});

    CHECK_THROWS_AS(step_monomial(model({1, 2}, 0, {{7, 1}}), {MonomialVariant::ExponentAtLeastTwo, 1, 2, 7, 0}, 8),
                    Error);
    CHECK_THROWS_AS(step_monomial(model({1, 2}, 0, {{7, 2}}), {MonomialVariant::ExponentAtLeastTwo, 1, 2, 6, 0}, 8),
                    Error);
    CHECK_THROWS_AS(step_monomial(model({1, 2}, 0, {{5, 2}, {6, 1}}), {MonomialVariant::Pair, 1, 2, 5, 6}), Error);
    CHECK_THROWS_AS(step_monomial(model({1, 2}, 0, {{5, 1}}), {MonomialVariant::YZPair, 1, 2, 5, 0}), Error);
}

TEST_CASE("step_mult2 and normalize")
{
    auto node = step_mult2(model({1, 2}, 1), 1);
    CHECK(mdegs(node) == std::vector<Mdeg>{{1, 1, 0}, {2, 0, 0}});
    CHECK(is_resolved(node[0]));
    CHECK(is_resolved(node[1]));
    auto three = step_mult2(model({1, 2, 3}, 1), 1);
    CHECK(mdegs(three) == std::vector<Mdeg>{{2, 1, 0}, {3, 0, 0}});
    CHECK_FALSE(is_resolved(three[0]));
    CHECK_THROWS_AS(step_mult2(model({1, 2}, 1, {{4, 1}}), 1), Error);

    CHECK(normalize(model({1, 2}, 0, {{9, 1}})).same_germ(model({1, 2}, 1)));
    CHECK(normalize(model({1, 2}, 1)).same_germ(model({1, 2}, 1)));
    CHECK(normalize(model({1, 2}, 0, {{9, 2}})).same_germ(model({1, 2}, 0, {{9, 2}})));
}

TEST_CASE("resolve: the ordinary node takes one step")
{
    auto t = resolve({model({1, 2}, 1)});
    CHECK(t.steps.size() == 1);
    CHECK(t.steps[0].rule == Rule::Binres);
    CHECK(t.leaves().size() == 2);
    CHECK(t.all_leaves_resolved());
}

TEST_CASE("resolve: determinantal cascade")
{
    auto t = resolve({model({1, 2}, 2)});
    // detres: 2 resolved charts + 4 of mdeg (2,1,2); each of those takes
    // monres-1 (2 resolved + one (2,1,0)) and then binres (2 resolved).
    CHECK(t.steps.size() == 9);
    CHECK(t.leaves().size() == 18);
    CHECK(t.all_leaves_resolved());
    CHECK(t.certificate_holds());
    CHECK(t.nerve_invariant());
    CHECK(t.initial_nerve == Nerve{{1, 2}});
    std::vector<std::string> rules;
    for (const auto& s : t.steps)
        rules.emplace_back(rule_name(s.rule));
    CHECK(rules.front() == "detres");
    CHECK(rules[1] == "monres-1");
    CHECK(rules.back() == "binres");
    for (std::size_t n = 0; n < t.nodes.size(); ++n)
        CHECK(verify_genealogy(t, n));
}

TEST_CASE("resolve: trivial and normalizing roots")
{
    auto t = resolve({model({1}, 7, {{3, 4}})});
    CHECK(t.steps.empty());
    CHECK(t.leaves().size() == 1);

    auto n = resolve({model({1, 2}, 0, {{9, 1}})});
    REQUIRE(n.steps.size() == 2);
    CHECK(n.steps[0].rule == Rule::Normalize);
    CHECK(n.steps[0].certificate.empty());
    CHECK(n.steps[1].rule == Rule::Binres);
    // binres answers to the pre-normalization mdeg (2,0,1).
    CHECK(n.steps[1].certificate[0].parent == Mdeg{2, 0, 1});
    CHECK(n.all_leaves_resolved());
}

TEST_CASE("resolve: step limit and invalid roots")
{
    ResolutionPolicy p;
    p.max_steps = 3;
    CHECK_THROWS_WITH_AS(resolve({model({1, 2}, 2)}, p), doctest::Contains("step limit"), Error);
    CHECK_THROWS_AS(resolve({model({2, 1}, 0)}), Error);
}

TEST_CASE("fresh divisors are distinct across steps")
{
    auto t = resolve({model({1, 2, 3}, 3, {{4, 2}}), model({1, 5}, 2)});
    std::set<Label> seen;
    for (const auto& s : t.steps)
        if (s.center.fresh) {
            CHECK(*s.center.fresh > 5);
            CHECK(seen.insert(*s.center.fresh).second);
        }
    CHECK(!seen.empty());
}

TEST_CASE("seeded policies resolve the same roots")
{
    std::vector<LocalModel> roots{model({1, 2, 3}, 2, {{4, 3}}), model({1, 2, 3, 4}, 1, {{5, 1}, {6, 2}})};
    auto base = resolve(roots);
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        ResolutionPolicy p;
        p.seed = seed;
        auto t = resolve(roots, p);
        CHECK(t.all_leaves_resolved());
        CHECK(t.nerve_invariant());
        CHECK(t.initial_nerve == base.initial_nerve);
        auto again = resolve(roots, p);
        CHECK(again.steps.size() == t.steps.size());
    }
}

// The acceptance binary covers deg_y = 3 as well; here deg_y <= 2 keeps the suite fast.
TEST_CASE("exhaustive box: rule coverage, descent, termination, invariance")
{
    std::size_t models = 0;
    for (long dx = 0; dx <= 4; ++dx)
        for (long dy = 0; dy <= 2; ++dy)
            for (long dz = 0; dz <= 4; ++dz) {
                std::vector<std::vector<long>> parts;
                std::vector<long> cur;
                partitions(dz, dz, cur, parts);
                for (const auto& part : parts) {
                    LocalModel l;
                    for (long i = 1; i <= dx; ++i)
                        l.x.push_back(i);
                    l.m = dy;
                    Label j = dx + 1;
                    for (auto a : part)
                        l.z[j++] = a;
                    ++models;
                    auto rule = select_rule(l);
                    CHECK(rule.has_value() == !is_resolved(l));
                    if (!rule)
                        continue;
                    auto t = resolve({l});
                    CHECK(t.all_leaves_resolved());
                    CHECK(t.certificate_holds());
                    CHECK(t.nerve_invariant());
                    bool local_ok = true;
                    for (const auto& s : t.steps) {
                        const auto& parent = t.nodes[s.node].model;
                        bool keeps_parent_set = false;
                        for (auto c : s.children) {
                            const auto& cx = t.nodes[c].model.x;
                            local_ok &= std::includes(parent.x.begin(), parent.x.end(), cx.begin(), cx.end());
                            keeps_parent_set |= cx == parent.x;
                        }
                        local_ok &= keeps_parent_set;
                    }
                    CHECK(local_ok);
                }
            }
    CHECK(models == 5 * 3 * 12);
}

TEST_CASE("embed_snc")
{
    using namespace geometry_fixtures;
    auto curves = build_snc(VoronoiComplex::build(sites(1, {{"0"}, {"1"}})), {0, 1});
    auto roots = embed_snc(curves);
    // n = 2: components allow m in {0, 1}; the point stratum allows m = 0 only.
    std::vector<std::pair<std::vector<Label>, long>> got;
    for (const auto& r : roots)
        got.emplace_back(r.x, r.m);
    CHECK(got == std::vector<std::pair<std::vector<Label>, long>>{{{0}, 0}, {{0}, 1}, {{1}, 0}, {{1}, 1}, {{0, 1}, 0}});
    auto t = resolve(roots);
    CHECK(t.steps.empty());

    auto surfaces = build_snc(VoronoiComplex::build(sites(2, {{"0", "0"}, {"1", "0"}, {"0", "1"}})), {0, 1, 2});
    bool node_seen = false;
    for (const auto& r : embed_snc(surfaces)) {
        if (r.x.size() == 2)
            CHECK(r.m <= 1);
        if (r.x.size() == 3)
            CHECK(r.m == 0);
        node_seen |= r.x.size() == 2 && r.m == 1;
    }
    CHECK(node_seen);
}

TEST_CASE("validate_determinantal_profile")
{
    CHECK(validate_determinantal_profile(4, {{1, 1}, {2, 4}}));
    CHECK_FALSE(validate_determinantal_profile(4, {{2, 3}}));
    CHECK_FALSE(validate_determinantal_profile(3, {{2, 4}}));
    CHECK(validate_determinantal_profile(4, {}));
}
