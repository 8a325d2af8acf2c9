#include "hsmult/multiplicity.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>

#include "hsmult/errors.hpp"
#include "hsmult/monomial_ideal.hpp"

namespace hsmult {

namespace {

MonomialIdeal to_monomial_ideal(const IdealPresentation& I) {
  std::vector<std::vector<std::uint32_t>> gens;
  for (const auto& g : I.generators) {
    check_internal(g.is_monomial(), "non-monomial generator on fast path");
    gens.push_back(g.terms().begin()->first.exponents());
  }
  return MonomialIdeal(I.ambient.size(), std::move(gens));
}

// Memoizing evaluator of t -> colength(U_1^{t_1}...U_k^{t_k} (+ J)) over
// the resolved backend.
class GridEvaluator {
 public:
  GridEvaluator(std::vector<IdealPresentation> U,
                std::optional<IdealPresentation> J, Backend backend,
                Budget budget)
      : ideals_(std::move(U)), quotient_(std::move(J)), backend_(backend),
        budget_(budget) {
    if (backend_ == Backend::monomial) {
      for (const auto& I : ideals_) monomial_.push_back(to_monomial_ideal(I));
      const int dim = ideals_[0].ambient.size();
      powers_.assign(monomial_.size(),
                     {MonomialIdeal(dim, {std::vector<std::uint32_t>(dim, 0)})});
      if (quotient_) quotient_monomial_ = to_monomial_ideal(*quotient_);
    }
  }

  Int at(const std::vector<int>& t) {
    auto it = cache_.find(t);
    if (it != cache_.end()) return it->second;
    Int v = backend_ == Backend::monomial ? monomial_at(t) : general_at(t);
    cache_.emplace(t, v);
    return v;
  }

  std::vector<std::pair<std::vector<int>, Int>> samples() const {
    return {cache_.begin(), cache_.end()};
  }

 private:
  Int monomial_at(const std::vector<int>& t) {
    const int dim = ideals_[0].ambient.size();
    MonomialIdeal acc(dim, {std::vector<std::uint32_t>(dim, 0)});
    for (std::size_t i = 0; i < monomial_.size(); ++i)
      acc = acc.product(power_of(i, t[i]));
    std::vector<std::vector<std::uint32_t>> gens = acc.generators;
    if (quotient_monomial_)
      gens.insert(gens.end(), quotient_monomial_->generators.begin(),
                  quotient_monomial_->generators.end());
    return staircase_colength(MonomialIdeal(dim, std::move(gens)));
  }

  const MonomialIdeal& power_of(std::size_t i, int t) {
    auto& tower = powers_[i];
    while (static_cast<int>(tower.size()) <= t)
      tower.push_back(tower.back().product(monomial_[i]));
    return tower[t];
  }

  Int general_at(const std::vector<int>& t) {
    IdealPresentation prod = ideal_power_product(ideals_, t, budget_);
    return colength(prod, quotient_, budget_);
  }

  std::vector<IdealPresentation> ideals_;
  std::optional<IdealPresentation> quotient_;
  Backend backend_;
  Budget budget_;
  std::vector<MonomialIdeal> monomial_;
  std::vector<std::vector<MonomialIdeal>> powers_;
  std::optional<MonomialIdeal> quotient_monomial_;
  std::map<std::vector<int>, Int> cache_;
};

Backend resolve_backend(Backend requested,
                        const std::vector<IdealPresentation>& U,
                        const std::optional<IdealPresentation>& J) {
  bool monomial_ok =
      std::all_of(U.begin(), U.end(),
                  [](const IdealPresentation& I) { return I.is_monomial(); }) &&
      (!J || J->is_monomial());
  switch (requested) {
    case Backend::automatic:
      return monomial_ok ? Backend::monomial : Backend::general;
    case Backend::monomial:
      if (!monomial_ok)
        throw input_error("monomial backend requires monomial generators");
      return Backend::monomial;
    case Backend::general:
      return Backend::general;
  }
  throw internal_error("unreachable backend");
}

void guard_origin_supported(const IdealPresentation& U,
                            const std::optional<IdealPresentation>& J,
                            Backend backend, const Budget& budget) {
  if (backend == Backend::monomial) {
    std::vector<std::vector<std::uint32_t>> gens =
        to_monomial_ideal(U).generators;
    if (J) {
      auto jg = to_monomial_ideal(*J).generators;
      gens.insert(gens.end(), jg.begin(), jg.end());
    }
    if (!MonomialIdeal(U.ambient.size(), std::move(gens)).is_origin_primary())
      throw input_error(
          "ideal is not supported at the origin alone (missing pure power)");
    return;
  }
  std::string why;
  if (!is_origin_supported(U, J, budget, &why))
    throw input_error("ideal is not supported at the origin alone: " + why);
}

// Mixed forward difference of order d at base, over a colength source.
template <typename F>
Int mixed_difference(F&& value_at, const std::vector<int>& d,
                     const std::vector<int>& base) {
  const int k = static_cast<int>(d.size());
  std::vector<int> j(k, 0);
  Int total = 0;
  while (true) {
    long drop = 0;
    Int weight = 1;
    for (int i = 0; i < k; ++i) {
      drop += d[i] - j[i];
      weight *= binomial(d[i], j[i]);
    }
    std::vector<int> t(k);
    for (int i = 0; i < k; ++i) t[i] = base[i] + j[i];
    Int term = weight * value_at(t);
    total += (drop % 2 == 0) ? term : -term;
    int v = 0;
    while (v < k) {
      if (++j[v] <= d[v]) break;
      j[v] = 0;
      ++v;
    }
    if (v == k) break;
  }
  return total;
}

IdealPresentation maximal_ideal(const Ambient& ambient) {
  std::vector<Polynomial> gens;
  for (int i = 0; i < ambient.size(); ++i)
    gens.push_back(Polynomial::variable(ambient, i));
  return IdealPresentation(ambient, std::move(gens));
}

}  // namespace

Int replay_difference(const MultiplicityReport& report) {
  std::map<std::vector<int>, Int> lookup(report.samples.begin(),
                                         report.samples.end());
  return mixed_difference(
      [&](const std::vector<int>& t) {
        auto it = lookup.find(t);
        check_internal(it != lookup.end(), "sample missing from certificate");
        return it->second;
      },
      report.orders, report.base);
}

int infer_dimension(const Ambient& ambient,
                    const std::optional<IdealPresentation>& J,
                    const Budget& budget) {
  Backend backend = resolve_backend(Backend::automatic, {maximal_ideal(ambient)}, J);
  GridEvaluator grid({maximal_ideal(ambient)}, J, backend, budget);
  const int max_t =
      backend == Backend::monomial ? budget.max_t_monomial : budget.max_t_general;
  std::vector<Int> c;
  for (int t = 1; t <= max_t; ++t) {
    c.push_back(grid.at({t}));
    const int T = static_cast<int>(c.size());
    for (int n = 0; n <= ambient.size(); ++n) {
      if (T < n + 3) break;
      // Difference rows over the tail of the sample window.
      auto delta = [&](int order, int idx) {
        Int v = 0;
        for (int j = 0; j <= order; ++j) {
          Int term = binomial(order, j) * c[idx + j];
          v += ((order - j) % 2 == 0) ? term : -term;
        }
        return v;
      };
      int last = T - n - 2;  // final index admitting an (n+1)-th difference
      if (last < 1) continue;
      if (delta(n + 1, last) == 0 && delta(n + 1, last - 1) == 0 &&
          delta(n, last) != 0)
        return n;
    }
  }
  throw budget_error("dimension inference did not stabilize within budget");
}

namespace {

MultiplicityReport run_mixed(const std::vector<IdealPresentation>& U,
                             const std::vector<int>& d,
                             const std::optional<IdealPresentation>& J,
                             Backend requested, const Budget& budget,
                             int start_base) {
  ensure_difference_identity_verified();
  if (U.empty()) throw input_error("no ideals given");
  const Ambient& ambient = U[0].ambient;
  for (const auto& I : U)
    if (!(I.ambient == ambient)) throw input_error("ideal ambient mismatch");
  if (J && !(J->ambient == ambient))
    throw input_error("quotient ambient mismatch");
  if (d.size() != U.size())
    throw input_error("one difference order per ideal required");
  int n = 0;
  for (int di : d) {
    if (di < 0) throw input_error("negative difference order");
    n += di;
  }
  if (n == 0) throw input_error("difference orders sum to zero");

  Backend backend = resolve_backend(requested, U, J);
  for (const auto& I : U) guard_origin_supported(I, J, backend, budget);

  const int k = static_cast<int>(d.size());
  const int max_t =
      backend == Backend::monomial ? budget.max_t_monomial : budget.max_t_general;
  GridEvaluator grid(U, J, backend, budget);
  auto value_at = [&](const std::vector<int>& t) { return grid.at(t); };

  std::vector<int> tau(k, start_base);
  while (true) {
    int reach = 0;
    for (int i = 0; i < k; ++i) reach = std::max(reach, tau[i] + d[i] + 1);
    if (reach > max_t)
      throw budget_error("difference stabilization not reached within the "
                         "sample budget");
    Int here = mixed_difference(value_at, d, tau);
    std::vector<int> next(k);
    for (int i = 0; i < k; ++i) next[i] = tau[i] + 1;
    Int there = mixed_difference(value_at, d, next);
    if (here == there) {
      if (here < 1)
        throw input_error(
            "stabilized difference is not positive; the difference orders do "
            "not match the quotient dimension");
      MultiplicityReport report;
      report.value = here;
      report.dimension = n;
      report.orders = d;
      report.base = tau;
      report.samples = grid.samples();
      report.backend_used = backend;
      return report;
    }
    tau = next;
  }
}

}  // namespace

MultiplicityReport hs_multiplicity(const IdealPresentation& U,
                                   const std::optional<IdealPresentation>& J,
                                   std::optional<int> dimension,
                                   Backend backend, const Budget& budget) {
  int n = dimension ? *dimension : infer_dimension(U.ambient, J, budget);
  if (n < 0) throw input_error("negative dimension");
  return run_mixed({U}, {n}, J, backend, budget, /*start_base=*/1);
}

MultiplicityReport mixed_multiplicity(const std::vector<IdealPresentation>& U,
                                      const std::vector<int>& d,
                                      const std::optional<IdealPresentation>& J,
                                      Backend backend, const Budget& budget) {
  if (U.empty()) throw input_error("no ideals given");
  int n = 0;
  for (int di : d) n += di;
  int expected = infer_dimension(U[0].ambient, J, budget);
  if (n != expected)
    throw input_error("difference orders sum to " + std::to_string(n) +
                      " but the quotient has dimension " +
                      std::to_string(expected));
  return run_mixed(U, d, J, backend, budget, /*start_base=*/2);
}

namespace {

void compositions(int total, int parts, std::vector<int>& cur,
                  std::vector<std::vector<int>>& out) {
  if (parts == 1) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int i = total; i >= 0; --i) {
    cur.push_back(i);
    compositions(total - i, parts - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

PolarizationReport polarization_check(const std::vector<IdealPresentation>& U,
                                      const std::vector<int>& p,
                                      Backend backend, const Budget& budget) {
  if (U.empty()) throw input_error("no ideals given");
  const Ambient& ambient = U[0].ambient;
  const int n = ambient.size();
  if (static_cast<int>(U.size()) != n)
    throw input_error("polarization needs exactly one ideal per dimension");
  if (p.size() != U.size())
    throw input_error("one power per ideal required");
  for (int pi : p)
    if (pi < 1) throw input_error("powers must be positive");

  IdealPresentation prod = ideal_power_product(U, p, budget);
  PolarizationReport report;
  report.lhs_report = hs_multiplicity(prod, std::nullopt, n, backend, budget);
  report.lhs = report.lhs_report.value;

  std::vector<std::vector<int>> ds;
  std::vector<int> cur;
  compositions(n, n, cur, ds);
  Int rhs = 0;
  for (const auto& d : ds) {
    PolarizationTerm term;
    term.d = d;
    term.multinomial = factorial(n);
    for (int di : d) term.multinomial /= factorial(di);
    term.mixed_value = mixed_multiplicity(U, d, std::nullopt, backend, budget).value;
    term.power_factor = 1;
    for (std::size_t i = 0; i < d.size(); ++i)
      for (int j = 0; j < d[i]; ++j) term.power_factor *= p[i];
    rhs += term.multinomial * term.mixed_value * term.power_factor;
    report.terms.push_back(std::move(term));
  }
  report.rhs = rhs;
  report.equal = report.lhs == report.rhs;
  return report;
}

ReesSharpReport rees_sharp_check(const IdealPresentation& U,
                                 const IdealPresentation& V, int n,
                                 const std::optional<IdealPresentation>& J,
                                 Backend backend, const Budget& budget) {
  if (n < 2) throw input_error("chain needs n >= 2");
  ReesSharpReport report;
  for (int i = 0; i <= n; ++i)
    report.chain.push_back(
        mixed_multiplicity({U, V}, {i, n - i}, J, backend, budget).value);
  report.pass = true;
  for (int i = 1; i <= n - 1; ++i) {
    Int lhs = report.chain[i] * report.chain[i];
    Int rhs = report.chain[i - 1] * report.chain[i + 1];
    report.inequalities.emplace_back(lhs, rhs);
    if (lhs > rhs) report.pass = false;
  }
  return report;
}

bool difference_identity_holds(const std::vector<int>& d, std::uint64_t seed) {
  const int k = static_cast<int>(d.size());
  int n = 0;
  for (int di : d) n += di;
  std::vector<std::string> names;
  for (int i = 0; i < k; ++i) names.push_back("t" + std::to_string(i + 1));
  Ambient ambient(names);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> small(1, 9);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 4);

  // Top coefficients in the normalization (n!/prod a_i!) * e_a with natural
  // e_a; random rational noise below degree n.
  std::vector<std::vector<int>> tops;
  std::vector<int> cur;
  compositions(n, k, cur, tops);
  Polynomial P(ambient);
  Int expected;
  for (const auto& a : tops) {
    Int coeff = factorial(n);
    for (int ai : a) coeff /= factorial(ai);
    Int e_a = small(rng);
    std::vector<std::uint32_t> exps(a.begin(), a.end());
    P.add_term(Monomial(std::move(exps)), Rat(coeff * e_a));
    if (std::equal(a.begin(), a.end(), d.begin())) expected = factorial(n) * e_a;
  }
  for (int deg = 0; deg < n; ++deg) {
    std::vector<std::vector<int>> lows;
    cur.clear();
    compositions(deg, k, cur, lows);
    for (const auto& a : lows) {
      std::vector<std::uint32_t> exps(a.begin(), a.end());
      P.add_term(Monomial(std::move(exps)), make_rat(num(rng), den(rng)));
    }
  }

  // Apply the mixed difference operator symbolically.
  auto shifted = [&](const std::vector<int>& j) {
    Polynomial q = P;
    for (int i = 0; i < k; ++i)
      for (int s = 0; s < j[i]; ++s) q = q.shift_var(i);
    return q;
  };
  Polynomial D(ambient);
  std::vector<int> j(k, 0);
  while (true) {
    long drop = 0;
    Int weight = 1;
    for (int i = 0; i < k; ++i) {
      drop += d[i] - j[i];
      weight *= binomial(d[i], j[i]);
    }
    Rat w(weight);
    if (drop % 2 != 0) w = -w;
    D += shifted(j) * w;
    int v = 0;
    while (v < k) {
      if (++j[v] <= d[v]) break;
      j[v] = 0;
      ++v;
    }
    if (v == k) break;
  }
  return D == Polynomial::constant(ambient, Rat(expected));
}

void ensure_difference_identity_verified() {
  static std::once_flag flag;
  std::call_once(flag, [] {
    const std::vector<std::vector<int>> cases = {{1, 1}, {2, 1}, {1, 1, 1}, {2, 0, 1}};
    std::uint64_t seed = 0x5eedULL;
    for (const auto& d : cases)
      check_internal(difference_identity_holds(d, seed++),
                     "finite-difference extraction self-test failed");
  });
}

}  // namespace hsmult
