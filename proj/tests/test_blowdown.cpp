#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hsmult/blowdown.hpp"
#include "hsmult/errors.hpp"

using namespace hsmult;

namespace {

LineBundleDatum bundle(int k0, Int degree,
                       std::vector<BasePointDatum> pts = {}) {
  LineBundleDatum L;
  L.k0 = k0;
  L.degree = std::move(degree);
  L.base_points = std::move(pts);
  L.validate();
  return L;
}

BasePointDatum point(int kj, std::vector<int> d_seq) {
  BasePointDatum bp;
  bp.kj = kj;
  bp.d_seq = std::move(d_seq);
  return bp;
}

}  // namespace

TEST_CASE("base point data validation") {
  CHECK_NOTHROW(point(2, {1, 0}).validate(1));
  CHECK_NOTHROW(point(4, {1, 2, 3, 0}).validate(1));
  // must end generated and start obstructed
  CHECK_THROWS_AS(point(2, {0, 0}).validate(1), input_error);
  CHECK_THROWS_AS(point(2, {1, 1}).validate(1), input_error);
  // interior orders stay positive until kj
  CHECK_THROWS_AS(point(3, {1, 0, 0}).validate(1), input_error);
  // kj must exceed k0 and match the sequence length
  CHECK_THROWS_AS(point(1, {0}).validate(1), input_error);
  CHECK_THROWS_AS(point(3, {1, 0}).validate(1), input_error);
}

TEST_CASE("bundle validation") {
  CHECK_THROWS_AS(bundle(0, 1), input_error);
  CHECK_THROWS_AS(bundle(1, 0), input_error);
  CHECK_THROWS_AS(bundle(1, -2), input_error);
  CHECK_NOTHROW(bundle(2, 5));
}

TEST_CASE("local contributions through the newton polygon") {
  CHECK(lambda_multiplicity(point(2, {1, 0}), 1) == 1);
  // orders (2,1,0) place generators (2,0),(1,1),(0,2): the full square
  CHECK(lambda_multiplicity(point(3, {2, 1, 0}), 1) == 4);
  // rising orders are dominated by the first generator
  CHECK(lambda_multiplicity(point(4, {1, 2, 3, 0}), 1) == 3);
  CHECK(lambda_multiplicity(point(3, {2, 0}), 2) == 2);
  CHECK(lambda_multiplicity(point(2, {3, 0}), 1) == 3);
}

TEST_CASE("multiplicity without base points is quadratic in k0") {
  CHECK(rs_blowdown_multiplicity(bundle(1, 4)) == 4);   // canonical, genus 3
  CHECK(rs_blowdown_multiplicity(bundle(1, 2)) == 2);   // the sphere
  CHECK(rs_blowdown_multiplicity(bundle(2, 3)) == 12);
  CHECK(rs_blowdown_multiplicity(bundle(3, 1)) == 9);
}

TEST_CASE("base points add their local terms") {
  auto L = bundle(1, 1, {point(2, {1, 0})});
  CHECK(rs_blowdown_multiplicity(L) == 2);
  auto L2 = bundle(1, 1, {point(4, {1, 2, 3, 0})});
  CHECK(rs_blowdown_multiplicity(L2) == 4);
  auto L3 = bundle(2, 1, {point(3, {1, 0}), point(4, {2, 1, 0})});
  CHECK(rs_blowdown_multiplicity(L3) ==
        4 + lambda_multiplicity(point(3, {1, 0}), 2) +
            lambda_multiplicity(point(4, {2, 1, 0}), 2));
}

TEST_CASE("semigroups reject non-gaps") {
  CHECK_NOTHROW(Semigroup({}));
  CHECK_NOTHROW(Semigroup({1}));
  CHECK_NOTHROW(Semigroup({1, 3}));
  CHECK_NOTHROW(Semigroup({1, 2, 5}));
  // 2 = 1 + 1 with 1 a nongap
  CHECK_THROWS_AS(Semigroup({2}), input_error);
  CHECK_THROWS_AS(Semigroup({1, 4}), input_error);  // 4 = 2 + 2
  CHECK_THROWS_AS(Semigroup({0}), input_error);
  CHECK_THROWS_AS(Semigroup({-1}), input_error);
}

TEST_CASE("first nongap") {
  CHECK(first_nongap(Semigroup({})) == 1);
  CHECK(first_nongap(Semigroup({1})) == 2);
  CHECK(first_nongap(Semigroup({1, 3})) == 2);
  CHECK(first_nongap(Semigroup({1, 2, 3, 4})) == 5);
}

TEST_CASE("vanishing orders from the gap structure") {
  // hyperelliptic-style gaps 1..g give the full staircase
  auto bp = dseq_from_semigroup(Semigroup({1, 2, 3}));
  REQUIRE(bp.has_value());
  CHECK(bp->kj == 4);
  CHECK(bp->d_seq == std::vector<int>{1, 2, 3, 0});

  auto bp2 = dseq_from_semigroup(Semigroup({1, 3}));
  REQUIRE(bp2.has_value());
  CHECK(bp2->kj == 2);
  CHECK(bp2->d_seq == std::vector<int>{1, 0});

  // no gaps: the point never obstructs
  CHECK_FALSE(dseq_from_semigroup(Semigroup({})).has_value());
}

TEST_CASE("point bundle pipeline reproduces the first nongap") {
  for (const auto& gaps : std::vector<std::set<int>>{
           {}, {1}, {1, 3}, {1, 2, 3}, {1, 2, 5}, {1, 2, 4, 7}}) {
    Semigroup S(gaps);
    CHECK(rs_blowdown_multiplicity(point_bundle_datum(S)) == first_nongap(S));
  }
}

TEST_CASE("bounds input validation") {
  BoundsInput b;
  b.k0 = 2;
  b.k1 = 1;
  b.vol = 1;
  CHECK_THROWS_AS(b.validate(), input_error);
  b.k1 = 2;
  b.vol = 0;
  CHECK_THROWS_AS(b.validate(), input_error);
  b.vol = 1;
  b.p = 2;
  b.n = 1;
  CHECK_THROWS_AS(b.validate(), input_error);
}

TEST_CASE("two-sided bounds pinch for base-point-free data") {
  for (int g = 2; g <= 6; ++g) {
    BoundsInput b;
    b.k0 = b.k1 = b.p = b.n = 1;
    b.vol = 2 * g - 2;
    b.vol_B = 0;
    auto [lo, hi] = mult_bounds(b);
    CHECK(lo == hi);
    CHECK(lo == 2 * g - 2);
  }
  BoundsInput b;
  b.k0 = b.k1 = 2;
  b.p = b.n = 1;
  b.vol = 1;
  b.vol_B = 0;
  auto [lo, hi] = mult_bounds(b);
  CHECK(lo == 4);
  CHECK(hi == 4);
}

TEST_CASE("volume control") {
  BoundsInput b;
  b.k0 = 1;
  b.k1 = 4;
  b.p = b.n = 1;
  b.vol = 1;
  b.vol_B = 3;
  auto rep = vol_control_check(b);
  CHECK(rep.bound == 3);
  CHECK(rep.slack == 0);
  CHECK(rep.pass);

  b.k0 = 2;
  b.k1 = 3;
  b.n = 2;
  b.vol_B = 5;
  auto rep2 = vol_control_check(b);
  CHECK(rep2.bound == 2);
  CHECK(rep2.slack == -3);
  CHECK_FALSE(rep2.pass);
}
