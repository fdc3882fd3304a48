#include <doctest.h>

#include "ratioopt/topology_tables.hpp"

using namespace ratioopt;

TEST_CASE("complexity") {
  CHECK(complexity(2, 0) == 2);
  CHECK(complexity(0, 7) == 3);
  CHECK(complexity(3, 1) == 6);
  CHECK_THROWS(SurfaceParams(1, 1));
  CHECK_THROWS(SurfaceParams(-1, 8));
  CHECK(SurfaceParams(2, 3).omega() == 5);
}

TEST_CASE("filling pair table spot values") {
  CHECK(min_filling_intersection(3, 0).value == 5);
  CHECK(min_filling_intersection(2, 0).value == 4);
  CHECK(min_filling_intersection(0, 7).value == 6);
  CHECK(min_filling_intersection(0, 8).value == 6);
  CHECK(min_filling_intersection(4, 3).value == 9);
  CHECK(min_filling_intersection(2, 4).value == 8);
  CHECK(min_filling_intersection(0, 6).value == 4);
  CHECK(min_filling_intersection(1, 3).value == 3);
  CHECK(min_filling_intersection(2, 2).value == 4);
  CHECK(min_filling_intersection(2, 6).value == 10);
  for (std::int64_t p : {3, 5, 7, 9}) {
    const auto v = min_filling_intersection(2, p);
    CHECK(v.kind == IntersectionKind::upper_bound);
    CHECK(v.value == 2 * 2 + p - 1);
  }
  CHECK(min_filling_intersection(3, 0).kind == IntersectionKind::exact);
  CHECK_THROWS(min_filling_intersection(0, 5));
}

TEST_CASE("table rows") {
  const auto rows = filling_table(3, 4);
  for (const auto& r : rows) {
    CHECK(r.omega == complexity(r.g, r.p));
    CHECK(r.i_min.value == min_filling_intersection(r.g, r.p).value);
  }
  CHECK(rows.front().g == 1);
  CHECK(filling_table(2, 6).front().g == 0);
}

TEST_CASE("separating pairs") {
  CHECK(separating_pair_bound(2, 0).value == 4);
  CHECK(separating_pair_bound(3, 0).value == 8);
  CHECK(separating_pair_bound(4, 0).value == 8);
  CHECK(separating_pair_bound(5, 0).value == 12);
  CHECK(separating_pair_bound(6, 0).value == 12);
  CHECK(separating_pair_bound(4, 0).kind == IntersectionKind::upper_bound);
  CHECK(separating_pair_bound(4, 0, {1, 2, 10}).value == 11);
}

TEST_CASE("twist intersection inequality") {
  const std::int64_t s[] = {3, -3};
  const std::int64_t c[] = {5, 5};
  const auto b = twist_intersection_bounds(s, c, c, 0, TwistVariant::standard);
  CHECK(b.upper == 150);
  CHECK(b.lower == 50);
  const std::int64_t s2[] = {5};
  const std::int64_t c2[] = {2};
  const auto lit = twist_intersection_bounds(s2, c2, c2, 1, TwistVariant::paper_literal);
  const auto std_ = twist_intersection_bounds(s2, c2, c2, 1, TwistVariant::standard);
  CHECK(lit.lower == 11);
  CHECK(std_.lower == 11);
  CHECK(lit.upper == 21);
  const std::int64_t bad[] = {1, 2};
  CHECK_THROWS_AS(twist_intersection_bounds(s2, bad, c2, 0), std::invalid_argument);
  CHECK_THROWS_AS(twist_intersection_bounds({}, {}, {}, 0), std::invalid_argument);
}

TEST_CASE("point push bound") {
  for (std::int64_t n = 1; n <= 200; ++n) {
    CHECK(pointpush_intersection_bound(n).value == 6 * n * n);
  }
}
