#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hsmult/budget.hpp"
#include "hsmult/ideal.hpp"
#include "hsmult/multiplicity.hpp"

namespace hsmult {

// Truncated power series in one parameter t with exact coefficients;
// coeffs[i] is the t^i coefficient. Arithmetic truncates at `truncation`.
struct SeriesPoly {
  std::vector<Rat> coeffs;

  bool is_zero() const;
  // Least exponent with nonzero coefficient; input_error on the zero series.
  int order() const;
  static SeriesPoly add(const SeriesPoly& a, const SeriesPoly& b, int truncation);
  static SeriesPoly mul(const SeriesPoly& a, const SeriesPoly& b, int truncation);
  static SeriesPoly scale(const SeriesPoly& a, const Rat& c);
};

// One parameterized branch: component i is the series for ambient
// variable i. Every component vanishes at t = 0; at least one is nonzero.
struct BranchSeries {
  std::vector<SeriesPoly> components;
  int truncation = 0;
};

// A reduced curve germ as a finite union of parameterized branches.
struct CurveGerm {
  Ambient ambient;
  std::vector<BranchSeries> branches;

  CurveGerm(Ambient a, std::vector<BranchSeries> b);
};

// Tuple of polynomial weights (g_1..g_m) in the ambient variables.
struct WeightTuple {
  Ambient ambient;
  std::vector<Polynomial> components;

  WeightTuple(Ambient a, std::vector<Polynomial> c);
};

// Substitutes the branch into g and truncates.
SeriesPoly compose_on_branch(const Polynomial& g, const BranchSeries& b);

// min over the components of the vanishing order of g_j on the branch,
// taken over components that do not vanish to truncation order. Raises
// budget_error("truncation insufficient...") when all components do.
int pullback_order(const WeightTuple& g, const BranchSeries& b);

// Lelong number of the curve germ against the weight tuple: the sum of the
// branchwise pullback orders.
Int curve_lelong_number(const CurveGerm& Y, const WeightTuple& g);

struct CurveCheckReport {
  Int lelong;
  Int hs;
  bool equal = false;
  std::vector<int> branch_orders;
  MultiplicityReport hs_report;
};

// Cross-check for one-dimensional germs: the Lelong number of Y against the
// generators of U must equal the Hilbert-Samuel multiplicity of U on the
// local ring cut out by J. Every generator of J must vanish on every branch
// up to the truncation order.
CurveCheckReport verify_curve_multiplicity(const CurveGerm& Y,
                                           const IdealPresentation& J,
                                           const IdealPresentation& U,
                                           const Budget& budget = {});

}  // namespace hsmult
