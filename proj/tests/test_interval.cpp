#include <doctest.h>

#include "hf/interval.hpp"

using hf::Interval;
using hf::Rational;

TEST_CASE("interval construction and predicates") {
    Interval i(Rational(1, 3), Rational(1, 2));
    CHECK(i.width() == Rational(1, 6));
    CHECK(i.mid() == Rational(5, 12));
    CHECK(i.contains(Rational(2, 5)));
    CHECK(!i.contains(Rational(2)));
    CHECK_THROWS_AS(Interval(Rational(1), Rational(0)), hf::DomainError);
    CHECK(Interval::point(Rational(3)).is_point());
}

TEST_CASE("interval arithmetic") {
    Interval a(Rational(-1), Rational(2)), b(Rational(3), Rational(4));
    CHECK((a + b).lo() == Rational(2));
    CHECK((a + b).hi() == Rational(6));
    CHECK((a - b).lo() == Rational(-5));
    CHECK((a - b).hi() == Rational(-1));
    Interval p = a * b;
    CHECK(p.lo() == Rational(-4));
    CHECK(p.hi() == Rational(8));
    Interval q = a / b;
    CHECK(q.lo() == Rational(-1, 3));
    CHECK(q.hi() == Rational(2, 3));
    CHECK_THROWS_AS(b / a, hf::DomainError);  // divisor straddles zero
    CHECK((a * Rational(-2)).lo() == Rational(-4));
    CHECK((a * Rational(-2)).hi() == Rational(2));
}

TEST_CASE("interval powers") {
    Interval a(Rational(-2), Rational(3));
    CHECK(a.pow_int(2).lo() == Rational(0));
    CHECK(a.pow_int(2).hi() == Rational(9));
    CHECK(a.pow_int(3).lo() == Rational(-8));
    CHECK(a.pow_int(3).hi() == Rational(27));
    Interval b(Rational(1, 2), Rational(2));
    CHECK(b.pow_int(-1).lo() == Rational(1, 2));
    CHECK(b.pow_int(-1).hi() == Rational(2));
    CHECK(a.pow_int(0).is_point());
}

TEST_CASE("intersection, hull, rounding") {
    Interval a(Rational(0), Rational(2)), b(Rational(1), Rational(3));
    CHECK(a.intersects(b));
    CHECK(a.intersect(b).lo() == Rational(1));
    CHECK(a.hull(b).hi() == Rational(3));
    CHECK_THROWS_AS(a.intersect(Interval(Rational(5), Rational(6))), hf::DomainError);

    Interval c(Rational(1, 3), Rational(2, 3));
    Interval r = c.outward_round(8);
    CHECK(r.contains(c));
    CHECK(r.lo().den() <= hf::Integer(256));
    CHECK(r.width() <= c.width() + Rational(1, 128));

    CHECK(Interval::hull_with_zero(Rational(-1, 4)).lo() == Rational(-1, 4));
    CHECK(Interval::hull_with_zero(Rational(-1, 4)).hi() == Rational(0));
}
