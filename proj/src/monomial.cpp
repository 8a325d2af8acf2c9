#include "hsmult/monomial.hpp"

#include <numeric>

#include "hsmult/errors.hpp"

namespace hsmult {

bool degrevlex_greater(const Monomial& a, const Monomial& b) {
  long da = a.total_degree(), db = b.total_degree();
  if (da != db) return da > db;
  // Equal degree: the monomial with the smaller exponent at the last
  // position where they differ is the larger one.
  for (int i = a.nvars() - 1; i >= 0; --i) {
    if (a.exp(i) != b.exp(i)) return a.exp(i) < b.exp(i);
  }
  return false;
}

TermOrder TermOrder::degrevlex(int nvars) {
  TermOrder o;
  o.kind = Kind::degrevlex;
  o.perm.resize(nvars);
  std::iota(o.perm.begin(), o.perm.end(), 0);
  return o;
}

TermOrder TermOrder::lex(int nvars) {
  TermOrder o = degrevlex(nvars);
  o.kind = Kind::lex;
  return o;
}

bool TermOrder::less(const Monomial& a, const Monomial& b) const {
  check_internal(a.nvars() == b.nvars() &&
                     a.nvars() == static_cast<int>(perm.size()),
                 "term order arity mismatch");
  const int n = a.nvars();
  if (kind == Kind::lex) {
    for (int i = 0; i < n; ++i) {
      auto ea = a.exp(perm[i]), eb = b.exp(perm[i]);
      if (ea != eb) return ea < eb;
    }
    return false;
  }
  long da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db;
  for (int i = n - 1; i >= 0; --i) {
    auto ea = a.exp(perm[i]), eb = b.exp(perm[i]);
    if (ea != eb) return ea > eb;
  }
  return false;
}

}  // namespace hsmult
