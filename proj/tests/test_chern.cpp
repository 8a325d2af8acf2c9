#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hsmult/chern.hpp"
#include "hsmult/errors.hpp"
#include "hsmult/parse.hpp"

using namespace hsmult;

namespace {

Polynomial sym(const GradedClass& c, const std::string& s) {
  return parse_polynomial(s, c.symbols);
}

}  // namespace

TEST_CASE("generic chern classes") {
  auto c = GradedClass::generic_chern(2, 3);
  CHECK(c.symbols.names() == std::vector<std::string>{"c1", "c2"});
  CHECK(c.weights == std::vector<int>{1, 2});
  REQUIRE(c.components.size() == 4);
  CHECK(c.components[0] == sym(c, "1"));
  CHECK(c.components[1] == sym(c, "c1"));
  CHECK(c.components[2] == sym(c, "c2"));
  CHECK(c.components[3].is_zero());  // beyond the rank
}

TEST_CASE("components must be homogeneous") {
  auto c = GradedClass::generic_chern(2, 2);
  auto bad = c.components;
  bad[2] = sym(c, "c1");  // degree 1 in the degree 2 slot
  CHECK_THROWS_AS(GradedClass(c.symbols, c.weights, 2, bad), input_error);
}

TEST_CASE("graded product convolves degree pieces") {
  auto c = GradedClass::generic_chern(2, 2);
  auto p = graded_product(c, c);
  CHECK(p.components[0] == sym(c, "1"));
  CHECK(p.components[1] == sym(c, "2*c1"));
  CHECK(p.components[2] == sym(c, "c1^2 + 2*c2"));
}

TEST_CASE("segre inversion of a rank two bundle") {
  auto c = GradedClass::generic_chern(2, 2);
  auto s = segre_from_chern(c);
  CHECK(s.components[0] == sym(c, "1"));
  CHECK(s.components[1] == sym(c, "-c1"));
  CHECK(s.components[2] == sym(c, "c1^2 - c2"));
  // degree three term of the same inversion
  auto s3 = segre_from_chern(GradedClass::generic_chern(2, 3));
  CHECK(s3.components[3] == sym(s3, "-c1^3 + 2*c1*c2"));
}

TEST_CASE("line bundle segre classes alternate") {
  auto c = GradedClass::generic_chern(1, 4);
  auto s = segre_from_chern(c);
  CHECK(s.components[2] == sym(c, "c1^2"));
  CHECK(s.components[3] == sym(c, "-c1^3"));
  CHECK(s.components[4] == sym(c, "c1^4"));
}

TEST_CASE("inversion requires a unit constant term") {
  auto c = GradedClass::generic_chern(1, 1);
  auto bad = c.components;
  bad[0] = Polynomial::zero(c.symbols);
  CHECK_THROWS_AS(segre_from_chern(GradedClass(c.symbols, c.weights, 1, bad)),
                  input_error);
}

TEST_CASE("dual flips odd degrees") {
  auto c = GradedClass::generic_chern(2, 2);
  auto d = dual_class(c);
  CHECK(d.components[1] == sym(c, "-c1"));
  CHECK(d.components[2] == sym(c, "c2"));
  CHECK(dual_class(d).components[1] == c.components[1]);
}

TEST_CASE("monomial keys are canonical") {
  auto c = GradedClass::generic_chern(2, 4);
  CHECK(monomial_key(Monomial({2, 0}), c.symbols) == "c1^2");
  CHECK(monomial_key(Monomial({1, 1}), c.symbols) == "c1*c2");
  CHECK(monomial_key(Monomial({0, 1}), c.symbols) == "c2");
  CHECK(monomial_key(Monomial({0, 0}), c.symbols) == "1");
}

TEST_CASE("top segre integral on a curve") {
  // degree d line bundle on a curve: the integral is just deg c1
  for (int d = 2; d <= 10; d += 2) {
    auto c = GradedClass::generic_chern(1, 1);
    IntersectionTable table(c.symbols, c.weights, 1, {{"c1", d}});
    CHECK(top_segre_integral(c, table) == d);
  }
}

TEST_CASE("top segre integral on a surface") {
  auto c = GradedClass::generic_chern(2, 2);
  // s_2(E*) = c1^2 - c2
  IntersectionTable table(c.symbols, c.weights, 2, {{"c1^2", 5}, {"c2", 3}});
  CHECK(top_segre_integral(c, table) == 2);
}

TEST_CASE("missing table keys and fractional integrals are rejected") {
  auto c = GradedClass::generic_chern(2, 2);
  IntersectionTable partial(c.symbols, c.weights, 2, {{"c1^2", 5}});
  CHECK_THROWS_WITH_AS(top_segre_integral(c, partial),
                       doctest::Contains("missing table key"), input_error);

  auto half = c.components;
  half[1] = sym(c, "1/2*c1");
  half[2] = Polynomial::zero(c.symbols);
  GradedClass frac(c.symbols, c.weights, 2, half);
  IntersectionTable table(c.symbols, c.weights, 2, {{"c1^2", 1}, {"c2", 1}});
  CHECK_THROWS_WITH_AS(top_segre_integral(frac, table),
                       doctest::Contains("not an integer"), input_error);
}
