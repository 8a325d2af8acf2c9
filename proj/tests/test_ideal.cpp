#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hsmult/errors.hpp"
#include "hsmult/ideal.hpp"
#include "hsmult/parse.hpp"

using namespace hsmult;

namespace {

Ambient xy() { return Ambient({"x", "y"}); }

IdealPresentation idl(const std::vector<std::string>& gens,
                      Ambient a = Ambient({"x", "y"})) {
  std::vector<Polynomial> ps;
  for (const auto& g : gens) ps.push_back(parse_polynomial(g, a));
  return IdealPresentation(a, std::move(ps));
}

}  // namespace

TEST_CASE("presentation drops zero generators") {
  auto I = idl({"0", "x", "0"});
  CHECK(I.generators.size() == 1);
  CHECK_THROWS_AS(idl({"0"}), input_error);
  CHECK(idl({"x", "y^2"}).is_monomial());
  CHECK_FALSE(idl({"x + y"}).is_monomial());
}

TEST_CASE("s-polynomial cancels leading terms") {
  auto ord = TermOrder::degrevlex(2);
  auto f = parse_polynomial("x^2 + y", xy());
  auto g = parse_polynomial("x*y + 1", xy());
  auto s = s_polynomial(f, g, ord);
  // y*f - x*g up to normalization
  CHECK(s == parse_polynomial("y^2 - x", xy()));
}

TEST_CASE("reduced basis of the cusp plus axis") {
  auto G = groebner_basis(idl({"y^2 - x^3", "x"}), TermOrder::degrevlex(2));
  REQUIRE(G.basis.size() == 2);
  CHECK(G.basis[0] == parse_polynomial("x", xy()));
  CHECK(G.basis[1] == parse_polynomial("y^2", xy()));
  CHECK(normal_form(parse_polynomial("x^5 + x*y", xy()), G).is_zero());
  CHECK(normal_form(parse_polynomial("y", xy()), G) ==
        parse_polynomial("y", xy()));
}

TEST_CASE("basis elements are monic with reduced tails") {
  auto G = groebner_basis(idl({"2*x^2 + y", "3*y^2"}), TermOrder::degrevlex(2));
  for (const auto& f : G.basis) {
    auto lt = f.leading(G.order);
    CHECK(lt.coeff == 1);
    // no tail monomial lies in the leading-term ideal
    for (const auto& [m, c] : f.terms()) {
      if (m == lt.mono) continue;
      for (const auto& l : G.leading) CHECK_FALSE(l.divides(m));
    }
  }
}

TEST_CASE("membership through normal forms") {
  auto G = groebner_basis(idl({"y^2 - x^3"}), TermOrder::degrevlex(2));
  auto f = parse_polynomial("x^3*y - y^3", xy());  // y*(x^3 - y^2)
  CHECK(normal_form(f, G).is_zero());
  CHECK_FALSE(normal_form(parse_polynomial("x^3", xy()), G).is_zero());
}

TEST_CASE("colength of simple origin-primary ideals") {
  CHECK(colength(idl({"x", "y"})) == 1);
  CHECK(colength(idl({"x^2", "x*y", "y^2"})) == 3);
  CHECK(colength(idl({"x^2", "y^3"})) == 6);
  CHECK(colength(idl({"x^3", "x^2*y", "x*y^3", "y^4"})) == 8);
  CHECK(colength(idl({"x - y", "y^2"})) == 2);
}

TEST_CASE("colength with a quotient ideal") {
  auto J = idl({"y^2 - x^3"});
  // powers of the maximal ideal on the cusp make a 2t-1 ladder
  for (int t = 2; t <= 8; ++t) {
    auto Mt = ideal_power_product({idl({"x", "y"})}, {t});
    CHECK(colength(Mt, J) == 2 * t - 1);
  }
  CHECK(colength(idl({"x", "y"}), J) == 1);
}

TEST_CASE("infinite colength is rejected") {
  CHECK_THROWS_AS(colength(idl({"x"})), input_error);
  CHECK_THROWS_AS(colength(idl({"x*y"})), input_error);
  CHECK_THROWS_WITH_AS(colength(idl({"x - y"})),
                       doctest::Contains("infinite colength"), input_error);
}

TEST_CASE("power products") {
  auto M = idl({"x", "y"});
  for (int t = 1; t <= 6; ++t) {
    auto Mt = ideal_power_product({M}, {t});
    CHECK(colength(Mt) == t * (t + 1) / 2);
  }
  // zero exponents give the unit ideal
  auto unit = ideal_power_product({M}, {0});
  CHECK(colength(unit) == 0);
  auto MV = ideal_power_product({M, idl({"x^2", "y^3"})}, {1, 1});
  CHECK(colength(MV) == 8);
}

TEST_CASE("origin support certificate") {
  CHECK(is_origin_supported(idl({"x^2", "y^3"})));
  CHECK(is_origin_supported(idl({"y^2 - x^3", "x"})));
  std::string why;
  CHECK_FALSE(is_origin_supported(idl({"x"}), std::nullopt, {}, &why));
  CHECK(why.find("y") != std::string::npos);
  // x is primary on the cusp curve even though it is not in the plane
  CHECK(is_origin_supported(idl({"x"}), idl({"y^2 - x^3"})));
}

TEST_CASE("pair reduction budget") {
  Budget tight;
  tight.max_pair_reductions = 0;
  CHECK_THROWS_AS(
      groebner_basis(idl({"y^2 - x^3", "x*y"}), TermOrder::degrevlex(2), tight),
      budget_error);
}

TEST_CASE("ambient mismatch is rejected") {
  auto I = idl({"x", "y"});
  auto z = idl({"z"}, Ambient({"z"}));
  CHECK_THROWS_AS(ideal_power_product({I, z}, {1, 1}), input_error);
}
