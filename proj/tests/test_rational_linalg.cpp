#include "doctest.h"

#include "snclab/rational_linalg.hpp"

using namespace snclab;

namespace {

Rational q(const char* s) { return parse_rational(s); }

} // namespace

TEST_CASE("parse_rational")
{
    CHECK(q("1/2") == Rational(1, 2));
    CHECK(q("-6/4") == Rational(-3, 2));
    CHECK(q("0.25") == Rational(1, 4));
    CHECK(q("-1.5") == Rational(-3, 2));
    CHECK(q(" 7 ") == Rational(7));
    CHECK_THROWS_AS(q("1/0"), Error);
    CHECK_THROWS_AS(q("abc"), Error);
    CHECK_THROWS_AS(q(""), Error);
}

TEST_CASE("affine subspaces: canonical form, intersection, containment")
{
    // x + y = 1 and 2x + 2y = 2 are the same line.
    auto l1 = AffineSubspace::from_equations(2, {{{1, 1}, 1}});
    auto l2 = AffineSubspace::from_equations(2, {{{2, 2}, 2}});
    CHECK(l1 == l2);
    CHECK(l1.dimension() == 1);

    auto l3 = AffineSubspace::from_equations(2, {{{1, -1}, 0}});
    auto p = l1.intersect(l3);
    CHECK(p.dimension() == 0);
    CHECK(p.point() == QVector{Rational(1, 2), Rational(1, 2)});
    CHECK(l1.contains(p));
    CHECK_FALSE(p.contains(l1));

    auto parallel = AffineSubspace::from_equations(2, {{{1, 1}, 3}});
    CHECK(l1.intersect(parallel).empty());
    CHECK(l1.intersect(parallel).dimension() == -1);

    auto whole = AffineSubspace::whole(2);
    CHECK(whole.dimension() == 2);
    CHECK(whole.contains(l1));
    CHECK(whole.intersect(l1) == l1);
}

TEST_CASE("affine subspaces: point and basis span the solution set")
{
    auto plane = AffineSubspace::from_equations(3, {{{1, 2, 3}, 6}});
    auto x0 = plane.point();
    CHECK(plane.contains(x0));
    auto basis = plane.basis();
    REQUIRE(basis.size() == 2);
    for (const auto& v : basis) {
        QVector x = x0;
        for (std::size_t i = 0; i < 3; ++i)
            x[i] += Rational(5, 7) * v[i];
        CHECK(plane.contains(x));
    }
}

TEST_CASE("max_uniform_slack")
{
    // Unit square |x|,|y| <= 1: largest uniform slack is 1 (at the origin).
    QMatrix a(0, 2);
    a.append_row({1, 0});
    a.append_row({-1, 0});
    a.append_row({0, 1});
    a.append_row({0, -1});
    auto s = max_uniform_slack(a, {1, 1, 1, 1}, 5);
    CHECK(s.slack == 1);

    // x <= 0 and -x <= 0: feasible but not strictly.
    QMatrix b(0, 1);
    b.append_row({1});
    b.append_row({-1});
    CHECK(max_uniform_slack(b, {0, 0}).slack == 0);

    // x <= -1 and -x <= -1 (x >= 1): infeasible.
    CHECK(max_uniform_slack(b, {-1, -1}).slack == -1);

    // No rows: the cap.
    CHECK(max_uniform_slack(QMatrix(0, 3), {}, 1).slack == 1);

    // Returned point witnesses the slack.
    QMatrix c(0, 2);
    c.append_row({1, 1});
    c.append_row({-1, 0});
    c.append_row({0, -1});
    auto w = max_uniform_slack(c, {1, 0, 0}, 10);
    CHECK(w.slack == Rational(1, 3));
    for (std::size_t i = 0; i < 3; ++i) {
        QVector row{c(i, 0), c(i, 1)};
        CHECK(dot(row, w.point) + w.slack <= QVector{1, 0, 0}[i]);
    }
}
