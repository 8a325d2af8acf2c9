#include "hsmult/curve.hpp"

#include <algorithm>

#include "hsmult/errors.hpp"

namespace hsmult {

bool SeriesPoly::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(),
                     [](const Rat& c) { return c == 0; });
}

int SeriesPoly::order() const {
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) return static_cast<int>(i);
  throw input_error("vanishing order of the zero series");
}

SeriesPoly SeriesPoly::add(const SeriesPoly& a, const SeriesPoly& b,
                           int truncation) {
  SeriesPoly r;
  r.coeffs.assign(truncation, 0);
  for (std::size_t i = 0; i < a.coeffs.size() && i < r.coeffs.size(); ++i)
    r.coeffs[i] += a.coeffs[i];
  for (std::size_t i = 0; i < b.coeffs.size() && i < r.coeffs.size(); ++i)
    r.coeffs[i] += b.coeffs[i];
  return r;
}

SeriesPoly SeriesPoly::mul(const SeriesPoly& a, const SeriesPoly& b,
                           int truncation) {
  SeriesPoly r;
  r.coeffs.assign(truncation, 0);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
      if (i + j >= static_cast<std::size_t>(truncation)) break;
      if (b.coeffs[j] == 0) continue;
      r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    }
  }
  return r;
}

SeriesPoly SeriesPoly::scale(const SeriesPoly& a, const Rat& c) {
  SeriesPoly r = a;
  for (auto& x : r.coeffs) x *= c;
  return r;
}

CurveGerm::CurveGerm(Ambient a, std::vector<BranchSeries> b)
    : ambient(std::move(a)), branches(std::move(b)) {
  if (branches.empty()) throw input_error("germ needs at least one branch");
  for (const auto& br : branches) {
    if (br.truncation < 2) throw input_error("truncation order must be >= 2");
    if (static_cast<int>(br.components.size()) != ambient.size())
      throw input_error("branch component count must match the ambient");
    bool some_nonzero = false;
    for (const auto& s : br.components) {
      if (!s.coeffs.empty() && s.coeffs[0] != 0)
        throw input_error("branch components must vanish at t = 0");
      if (!s.is_zero()) some_nonzero = true;
    }
    if (!some_nonzero)
      throw input_error("branch must have a nonzero component");
  }
}

WeightTuple::WeightTuple(Ambient a, std::vector<Polynomial> c)
    : ambient(std::move(a)), components(std::move(c)) {
  if (components.empty())
    throw input_error("weight tuple needs at least one component");
  for (const auto& g : components)
    if (!(g.ambient() == ambient))
      throw input_error("weight component ambient mismatch");
}

SeriesPoly compose_on_branch(const Polynomial& g, const BranchSeries& b) {
  const int trunc = b.truncation;
  SeriesPoly acc;
  acc.coeffs.assign(trunc, 0);
  // Memoized powers of each component series.
  std::vector<std::vector<SeriesPoly>> powers(b.components.size());
  SeriesPoly one;
  one.coeffs.assign(trunc, 0);
  if (trunc > 0) one.coeffs[0] = 1;
  for (auto& tower : powers) tower.push_back(one);
  auto power = [&](int v, std::uint32_t e) -> const SeriesPoly& {
    auto& tower = powers[v];
    while (tower.size() <= e)
      tower.push_back(SeriesPoly::mul(tower.back(), b.components[v], trunc));
    return tower[e];
  };
  for (const auto& [m, c] : g.terms()) {
    SeriesPoly term = one;
    for (int v = 0; v < m.nvars(); ++v)
      if (m.exp(v)) term = SeriesPoly::mul(term, power(v, m.exp(v)), trunc);
    acc = SeriesPoly::add(acc, SeriesPoly::scale(term, c), trunc);
  }
  return acc;
}

int pullback_order(const WeightTuple& g, const BranchSeries& b) {
  int best = -1;
  for (const auto& comp : g.components) {
    SeriesPoly s = compose_on_branch(comp, b);
    if (s.is_zero()) continue;  // vanishes to truncation order; cannot win
    int ord = s.order();
    if (best < 0 || ord < best) best = ord;
  }
  if (best < 0)
    throw budget_error(
        "truncation insufficient: every weight component vanishes on the "
        "branch to the truncation order");
  return best;
}

Int curve_lelong_number(const CurveGerm& Y, const WeightTuple& g) {
  if (!(g.ambient == Y.ambient))
    throw input_error("weight tuple ambient mismatch");
  Int total = 0;
  for (const auto& b : Y.branches) total += pullback_order(g, b);
  return total;
}

CurveCheckReport verify_curve_multiplicity(const CurveGerm& Y,
                                           const IdealPresentation& J,
                                           const IdealPresentation& U,
                                           const Budget& budget) {
  if (!(J.ambient == Y.ambient) || !(U.ambient == Y.ambient))
    throw input_error("ambient mismatch");
  for (const auto& g : J.generators)
    for (const auto& b : Y.branches)
      if (!compose_on_branch(g, b).is_zero())
        throw input_error(
            "quotient generator does not vanish on the germ: " + g.to_string());
  CurveCheckReport report;
  WeightTuple weights(U.ambient, U.generators);
  for (const auto& b : Y.branches)
    report.branch_orders.push_back(pullback_order(weights, b));
  report.lelong = 0;
  for (int o : report.branch_orders) report.lelong += o;
  report.hs_report = hs_multiplicity(U, J, 1, Backend::automatic, budget);
  report.hs = report.hs_report.value;
  report.equal = report.lelong == report.hs;
  return report;
}

}  // namespace hsmult
