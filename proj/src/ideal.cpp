#include "hsmult/ideal.hpp"

#include <algorithm>
#include <set>

#include "hsmult/errors.hpp"

namespace hsmult {

namespace {

Polynomial make_monic(const Polynomial& p, const TermOrder& order) {
  Rat lc = p.leading(order).coeff;
  return p * make_rat(lc.get_den(), lc.get_num());
}

// Full division remainder against an explicit reducer list.
Polynomial reduce_full(const Polynomial& f, const std::vector<Polynomial>& gs,
                       const std::vector<Monomial>& lts,
                       const TermOrder& order) {
  Polynomial r(f.ambient());
  Polynomial p = f;
  while (!p.is_zero()) {
    Term t = p.leading(order);
    bool reduced = false;
    for (std::size_t i = 0; i < gs.size(); ++i) {
      if (lts[i].divides(t.mono)) {
        p -= Polynomial::term(p.ambient(), t.mono / lts[i], t.coeff) * gs[i];
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      r.add_term(t.mono, t.coeff);
      p -= Polynomial::term(p.ambient(), t.mono, t.coeff);
    }
  }
  return r;
}

struct Pair {
  int i, j;
  Monomial lcm;
  long deg;
};

struct PairQueueCmp {
  // Degree-ordered queue; ties broken by the lcm and then the indices so
  // the run is deterministic.
  bool operator()(const Pair& a, const Pair& b) const {
    if (a.deg != b.deg) return a.deg < b.deg;
    if (!(a.lcm == b.lcm)) return degrevlex_greater(b.lcm, a.lcm);
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

}  // namespace

IdealPresentation::IdealPresentation(Ambient a, std::vector<Polynomial> gens)
    : ambient(std::move(a)) {
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    if (!(g.ambient() == ambient))
      throw input_error("generator ambient mismatch");
    generators.push_back(std::move(g));
  }
  if (generators.empty())
    throw input_error("ideal needs at least one nonzero generator");
}

bool IdealPresentation::is_monomial() const {
  return std::all_of(generators.begin(), generators.end(),
                     [](const Polynomial& g) { return g.is_monomial(); });
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                        const TermOrder& order) {
  require_same_ambient(f, g);
  Term tf = f.leading(order), tg = g.leading(order);
  Monomial l = Monomial::lcm(tf.mono, tg.mono);
  const Ambient& a = f.ambient();
  Polynomial sf = Polynomial::term(a, l / tf.mono,
                                   make_rat(tf.coeff.get_den(), tf.coeff.get_num()));
  Polynomial sg = Polynomial::term(a, l / tg.mono,
                                   make_rat(tg.coeff.get_den(), tg.coeff.get_num()));
  return sf * f - sg * g;
}

GroebnerBasis groebner_basis(const IdealPresentation& I, const TermOrder& order,
                             const Budget& budget) {
  std::vector<Polynomial> basis;
  std::vector<Monomial> lts;
  std::vector<char> alive;
  std::set<Pair, PairQueueCmp> pairs;

  // Gebauer-Moller update: filters the candidate pairs of a new element and
  // chain-prunes the existing queue.
  auto update = [&](const Polynomial& h) {
    const int t = static_cast<int>(basis.size());
    const Monomial lt_h = h.leading(order).mono;

    struct Cand {
      int i;
      Monomial lcm;
      bool coprime;
    };
    std::vector<Cand> c;
    for (int i = 0; i < t; ++i) {
      if (!alive[i]) continue;
      c.push_back({i, Monomial::lcm(lts[i], lt_h), lts[i].coprime(lt_h)});
    }
    std::vector<Cand> d;
    for (std::size_t k = 0; k < c.size(); ++k) {
      bool dominated = false;
      if (!c[k].coprime) {
        for (std::size_t m = k + 1; m < c.size() && !dominated; ++m)
          if (c[m].lcm.divides(c[k].lcm)) dominated = true;
        for (std::size_t m = 0; m < d.size() && !dominated; ++m)
          if (d[m].lcm.divides(c[k].lcm)) dominated = true;
      }
      if (!dominated) d.push_back(c[k]);
    }

    for (auto it = pairs.begin(); it != pairs.end();) {
      const Pair& p = *it;
      bool drop = lt_h.divides(p.lcm) &&
                  !(Monomial::lcm(lts[p.i], lt_h) == p.lcm) &&
                  !(Monomial::lcm(lts[p.j], lt_h) == p.lcm);
      it = drop ? pairs.erase(it) : std::next(it);
    }
    for (const auto& e : d) {
      if (e.coprime) continue;  // Buchberger's first criterion
      pairs.insert({e.i, t, e.lcm, e.lcm.total_degree()});
    }
    for (int i = 0; i < t; ++i)
      if (alive[i] && lt_h.divides(lts[i])) alive[i] = 0;
    basis.push_back(h);
    lts.push_back(lt_h);
    alive.push_back(1);
  };

  for (const auto& g : I.generators) {
    Polynomial r = reduce_full(g, basis, lts, order);
    if (!r.is_zero()) update(make_monic(r, order));
  }

  long reductions = 0;
  while (!pairs.empty()) {
    Pair p = *pairs.begin();
    pairs.erase(pairs.begin());
    if (++reductions > budget.max_pair_reductions)
      throw budget_error("pair-reduction budget exhausted");
    Polynomial s = s_polynomial(basis[p.i], basis[p.j], order);
    Polynomial r = reduce_full(s, basis, lts, order);
    if (!r.is_zero()) update(make_monic(r, order));
  }

  // The alive set is already minimal: a new element's leading term is never
  // divisible by a stored one (it survived full reduction), and older
  // elements whose leading term the newcomer divides were marked dead.
  std::vector<int> kept;
  for (int i = 0; i < static_cast<int>(basis.size()); ++i) {
    if (!alive[i]) continue;
    for (int j : kept)
      check_internal(!lts[j].divides(lts[i]) && !lts[i].divides(lts[j]),
                     "non-minimal basis after Buchberger loop");
    kept.push_back(i);
  }

  GroebnerBasis G;
  G.ambient = I.ambient;
  G.order = order;
  for (int i : kept) {
    G.basis.push_back(basis[i]);
    G.leading.push_back(lts[i]);
  }
  // Tail-reduce each element against the others until stable.
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < G.basis.size(); ++i) {
      std::vector<Polynomial> others;
      std::vector<Monomial> olts;
      for (std::size_t j = 0; j < G.basis.size(); ++j) {
        if (i == j) continue;
        others.push_back(G.basis[j]);
        olts.push_back(G.leading[j]);
      }
      Polynomial r = reduce_full(G.basis[i], others, olts, order);
      check_internal(!r.is_zero(), "minimal basis element reduced to zero");
      r = make_monic(r, order);
      if (!(r == G.basis[i])) {
        G.basis[i] = r;
        G.leading[i] = r.leading(order).mono;
        changed = true;
      }
    }
  }
  std::vector<int> idx(G.basis.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    return order.less(G.leading[a], G.leading[b]);
  });
  GroebnerBasis out;
  out.ambient = G.ambient;
  out.order = order;
  for (int i : idx) {
    out.basis.push_back(G.basis[i]);
    out.leading.push_back(G.leading[i]);
  }
  return out;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G) {
  return reduce_full(f, G.basis, G.leading, G.order);
}

namespace {

IdealPresentation merge(const IdealPresentation& I,
                        const std::optional<IdealPresentation>& J) {
  if (!J) return I;
  if (!(J->ambient == I.ambient))
    throw input_error("quotient ambient mismatch");
  auto gens = I.generators;
  gens.insert(gens.end(), J->generators.begin(), J->generators.end());
  return IdealPresentation(I.ambient, std::move(gens));
}

// Pure-power bounds of the staircase; nullopt when some variable has none.
std::optional<std::vector<std::uint32_t>> staircase_box(
    const GroebnerBasis& G) {
  const int n = G.ambient.size();
  std::vector<std::uint32_t> box(n);
  for (int v = 0; v < n; ++v) {
    bool found = false;
    std::uint32_t best = 0;
    for (const auto& m : G.leading) {
      bool pure = true;
      for (int i = 0; i < n; ++i)
        if (i != v && m.exp(i)) pure = false;
      if (!pure) continue;
      if (!found || m.exp(v) < best) best = m.exp(v);
      found = true;
    }
    if (!found) return std::nullopt;
    box[v] = best;
  }
  return box;
}

}  // namespace

Int colength(const IdealPresentation& I,
             const std::optional<IdealPresentation>& J, const Budget& budget) {
  IdealPresentation K = merge(I, J);
  GroebnerBasis G =
      groebner_basis(K, TermOrder::degrevlex(K.ambient.size()), budget);
  auto box = staircase_box(G);
  if (!box)
    throw input_error(
        "infinite colength: leading-term ideal lacks a pure power of some "
        "variable");
  const int n = K.ambient.size();
  unsigned long long cells = 1;
  for (auto b : *box) {
    cells *= b;
    if (cells > 100000000ULL)
      throw budget_error("staircase box too large to enumerate");
    if (cells == 0) break;
  }
  // Count monomials under the staircase by walking the bounding box.
  Int count = 0;
  std::vector<std::uint32_t> e(n, 0);
  if (cells == 0) return 0;
  while (true) {
    Monomial m{std::vector<std::uint32_t>(e)};
    bool standard = true;
    for (const auto& lt : G.leading)
      if (lt.divides(m)) {
        standard = false;
        break;
      }
    if (standard) ++count;
    int v = 0;
    while (v < n) {
      if (++e[v] < (*box)[v]) break;
      e[v] = 0;
      ++v;
    }
    if (v == n) break;
  }
  return count;
}

bool is_origin_supported(const IdealPresentation& I,
                         const std::optional<IdealPresentation>& J,
                         const Budget& budget, std::string* diagnostic) {
  IdealPresentation K = merge(I, J);
  GroebnerBasis G =
      groebner_basis(K, TermOrder::degrevlex(K.ambient.size()), budget);
  const int n = K.ambient.size();
  for (int v = 0; v < n; ++v) {
    Polynomial x = Polynomial::variable(K.ambient, v);
    Polynomial cur = normal_form(x, G);
    bool vanished = cur.is_zero();
    for (int N = 2; !vanished && N <= budget.origin_power_bound; ++N) {
      cur = normal_form(cur * x, G);
      vanished = cur.is_zero();
    }
    if (!vanished) {
      if (diagnostic)
        *diagnostic = "no power of " + K.ambient.name(v) + " up to " +
                      std::to_string(budget.origin_power_bound) +
                      " lies in the ideal";
      return false;
    }
  }
  return true;
}

IdealPresentation ideal_power_product(const std::vector<IdealPresentation>& U,
                                      const std::vector<int>& exponents,
                                      const Budget& budget) {
  if (U.empty()) throw input_error("no ideals given");
  if (U.size() != exponents.size())
    throw input_error("one exponent per ideal required");
  const Ambient& a = U[0].ambient;
  for (const auto& I : U)
    if (!(I.ambient == a)) throw input_error("ideal ambient mismatch");
  for (int e : exponents)
    if (e < 0) throw input_error("negative exponent");

  auto poly_less = [](const Polynomial& p, const Polynomial& q) {
    return compare(p, q) < 0;
  };
  std::set<Polynomial, decltype(poly_less)> cur(poly_less);
  cur.insert(Polynomial::constant(a, 1));
  long generated = 0;
  for (std::size_t k = 0; k < U.size(); ++k) {
    for (int rep = 0; rep < exponents[k]; ++rep) {
      std::set<Polynomial, decltype(poly_less)> next(poly_less);
      for (const auto& p : cur)
        for (const auto& g : U[k].generators) {
          if (++generated > budget.max_product_generators)
            throw budget_error("product-generator budget exhausted");
          next.insert(p * g);
        }
      cur = std::move(next);
    }
  }
  return IdealPresentation(
      a, std::vector<Polynomial>(cur.begin(), cur.end()));
}

}  // namespace hsmult
