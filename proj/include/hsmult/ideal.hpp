#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hsmult/budget.hpp"
#include "hsmult/polynomial.hpp"

namespace hsmult {

// Finite generating set of an ideal in Q[x_1..x_k], read locally at the
// origin. Zero generators are dropped at construction; at least one nonzero
// generator must remain.
struct IdealPresentation {
  Ambient ambient;
  std::vector<Polynomial> generators;

  IdealPresentation(Ambient a, std::vector<Polynomial> gens);

  // True when every generator is a single term.
  bool is_monomial() const;
};

// Reduced Groebner basis: monic elements, no leading term divides another,
// every tail fully reduced, sorted by ascending leading term.
struct GroebnerBasis {
  Ambient ambient;
  TermOrder order;
  std::vector<Polynomial> basis;
  std::vector<Monomial> leading;
};

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                        const TermOrder& order);

// Buchberger with Gebauer-Moller pair elimination and a degree-ordered pair
// queue. Raises budget_error after budget.max_pair_reductions S-pair
// reductions.
GroebnerBasis groebner_basis(const IdealPresentation& I, const TermOrder& order,
                             const Budget& budget = {});

// Remainder of full multivariate division by the basis; unique for a
// reduced basis. normal_form(f, G) == 0 iff f lies in the ideal.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G);

// dim_Q of Q[x]/(I + J) counted through the staircase of the leading-term
// ideal. Raises input_error when the colength is infinite (some variable
// has no pure power among the leading terms).
Int colength(const IdealPresentation& I,
             const std::optional<IdealPresentation>& J = std::nullopt,
             const Budget& budget = {});

// Certifies that the affine zero set of I (+ J) lies in the origin: for
// every variable v some power v^N with N <= budget.origin_power_bound has
// normal form 0. Bound exhaustion returns false and, when `diagnostic` is
// non-null, an explanation.
bool is_origin_supported(const IdealPresentation& I,
                         const std::optional<IdealPresentation>& J = std::nullopt,
                         const Budget& budget = {},
                         std::string* diagnostic = nullptr);

// Generators of U_1^{e_1} * ... * U_m^{e_m}: all products of e_i-fold
// generator choices, deduplicated. All-zero exponents give the unit ideal.
IdealPresentation ideal_power_product(const std::vector<IdealPresentation>& U,
                                      const std::vector<int>& exponents,
                                      const Budget& budget = {});

}  // namespace hsmult
