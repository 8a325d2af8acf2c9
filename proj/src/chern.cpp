#include "hsmult/chern.hpp"

#include <sstream>

#include "hsmult/errors.hpp"

namespace hsmult {

GradedClass::GradedClass(Ambient syms, std::vector<int> w, int trunc,
                         std::vector<Polynomial> comps)
    : symbols(std::move(syms)), weights(std::move(w)), truncation(trunc),
      components(std::move(comps)) {
  if (truncation < 0) throw input_error("negative truncation");
  if (static_cast<int>(weights.size()) != symbols.size())
    throw input_error("one weight per symbol required");
  for (int wi : weights)
    if (wi < 1) throw input_error("symbol weights must be positive");
  if (static_cast<int>(components.size()) != truncation + 1)
    throw input_error("need one component per degree 0..truncation");
  for (int k = 0; k <= truncation; ++k) {
    if (!(components[k].ambient() == symbols))
      throw input_error("component symbols mismatch");
    if (!components[k].is_homogeneous_weighted(weights, k))
      throw input_error("component " + std::to_string(k) +
                        " is not homogeneous of its degree");
  }
}

GradedClass GradedClass::generic_chern(int rank, int truncation) {
  if (rank < 1) throw input_error("rank must be positive");
  std::vector<std::string> names;
  std::vector<int> weights;
  for (int i = 1; i <= rank; ++i) {
    names.push_back("c" + std::to_string(i));
    weights.push_back(i);
  }
  Ambient symbols(names);
  std::vector<Polynomial> comps;
  for (int k = 0; k <= truncation; ++k) {
    if (k == 0)
      comps.push_back(Polynomial::constant(symbols, 1));
    else if (k <= rank)
      comps.push_back(Polynomial::variable(symbols, k - 1));
    else
      comps.push_back(Polynomial::zero(symbols));
  }
  return GradedClass(symbols, weights, truncation, std::move(comps));
}

GradedClass graded_product(const GradedClass& a, const GradedClass& b) {
  if (!(a.symbols == b.symbols) || a.weights != b.weights)
    throw input_error("graded classes over different symbols");
  int trunc = std::min(a.truncation, b.truncation);
  std::vector<Polynomial> comps;
  for (int k = 0; k <= trunc; ++k) {
    Polynomial acc(a.symbols);
    for (int i = 0; i <= k; ++i) acc += a.components[i] * b.components[k - i];
    comps.push_back(std::move(acc));
  }
  return GradedClass(a.symbols, a.weights, trunc, std::move(comps));
}

GradedClass segre_from_chern(const GradedClass& c) {
  if (!(c.components[0] == Polynomial::constant(c.symbols, 1)))
    throw input_error("nonunit constant term");
  std::vector<Polynomial> s;
  s.push_back(Polynomial::constant(c.symbols, 1));
  for (int k = 1; k <= c.truncation; ++k) {
    Polynomial acc(c.symbols);
    for (int i = 1; i <= k; ++i) acc += c.components[i] * s[k - i];
    s.push_back(-acc);
  }
  GradedClass out(c.symbols, c.weights, c.truncation, std::move(s));
  GradedClass prod = graded_product(c, out);
  check_internal(prod.components[0] == Polynomial::constant(c.symbols, 1),
                 "inverse check failed in degree 0");
  for (int k = 1; k <= c.truncation; ++k)
    check_internal(prod.components[k].is_zero(),
                   "inverse check failed in degree " + std::to_string(k));
  return out;
}

GradedClass dual_class(const GradedClass& c) {
  std::vector<Polynomial> comps;
  for (const auto& comp : c.components) {
    Polynomial out(c.symbols);
    for (const auto& [m, coeff] : comp.terms()) {
      long wd = 0;
      for (int i = 0; i < m.nvars(); ++i)
        wd += long(m.exp(i)) * c.weights[i];
      out.add_term(m, wd % 2 == 0 ? coeff : Rat(-coeff));
    }
    comps.push_back(std::move(out));
  }
  return GradedClass(c.symbols, c.weights, c.truncation, std::move(comps));
}

std::string monomial_key(const Monomial& m, const Ambient& symbols) {
  if (m.is_one()) return "1";
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i < m.nvars(); ++i) {
    if (!m.exp(i)) continue;
    if (!first) out << "*";
    out << symbols.name(i);
    if (m.exp(i) > 1) out << "^" << m.exp(i);
    first = false;
  }
  return out.str();
}

IntersectionTable::IntersectionTable(Ambient syms, std::vector<int> w, int deg,
                                     std::map<std::string, Int> vals)
    : symbols(std::move(syms)), weights(std::move(w)), degree(deg),
      values(std::move(vals)) {
  if (degree < 0) throw input_error("negative table degree");
  if (static_cast<int>(weights.size()) != symbols.size())
    throw input_error("one weight per symbol required");
}

Int top_segre_integral(const GradedClass& chern_of_E,
                       const IntersectionTable& table) {
  if (!(chern_of_E.symbols == table.symbols) ||
      chern_of_E.weights != table.weights)
    throw input_error("table symbols mismatch");
  if (table.degree != chern_of_E.truncation)
    throw input_error("table degree must match the truncation");
  GradedClass s = segre_from_chern(dual_class(chern_of_E));
  const Polynomial& top = s.components[s.truncation];
  Rat total = 0;
  for (const auto& [m, coeff] : top.terms()) {
    auto it = table.values.find(monomial_key(m, table.symbols));
    if (it == table.values.end())
      throw input_error("missing table key: " + monomial_key(m, table.symbols));
    total += coeff * Rat(it->second);
  }
  if (total.get_den() != 1)
    throw input_error("integral is not an integer: " + to_string(total));
  return total.get_num();
}

}  // namespace hsmult
