#include "hsmult/polynomial.hpp"

#include <cctype>
#include <set>
#include <sstream>

#include "hsmult/errors.hpp"

namespace hsmult {

namespace {

constexpr int kMaxVariables = 16;

bool is_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

}  // namespace

Ambient::Ambient(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw input_error("ambient needs at least one variable");
  if (static_cast<int>(names_.size()) > kMaxVariables)
    throw input_error("ambient exceeds the 16-variable cap");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (!is_identifier(n)) throw input_error("bad variable name: " + n);
    if (!seen.insert(n).second)
      throw input_error("duplicate variable name: " + n);
  }
}

std::optional<int> Ambient::index_of(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

Polynomial Polynomial::constant(const Ambient& a, const Rat& c) {
  Polynomial p(a);
  p.add_term(Monomial::one(a.size()), c);
  return p;
}

Polynomial Polynomial::variable(const Ambient& a, int i) {
  Polynomial p(a);
  p.add_term(Monomial::var(a.size(), i), 1);
  return p;
}

Polynomial Polynomial::term(const Ambient& a, const Monomial& m, const Rat& c) {
  Polynomial p(a);
  p.add_term(m, c);
  return p;
}

long Polynomial::total_degree() const {
  long d = -1;
  for (const auto& [m, c] : terms_)
    if (m.total_degree() > d) d = m.total_degree();
  return d;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

void Polynomial::add_term(const Monomial& m, const Rat& c) {
  if (c == 0) return;
  check_internal(m.nvars() == ambient_.size(), "term arity mismatch");
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rat Polynomial::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(ambient_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& q) {
  require_same_ambient(*this, q);
  for (const auto& [m, c] : q.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& q) {
  require_same_ambient(*this, q);
  for (const auto& [m, c] : q.terms_) add_term(m, -c);
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& q) const {
  Polynomial r = *this;
  r += q;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& q) const {
  Polynomial r = *this;
  r -= q;
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& q) const {
  require_same_ambient(*this, q);
  Polynomial r(ambient_);
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : q.terms_) r.add_term(m1 * m2, c1 * c2);
  return r;
}

Polynomial Polynomial::operator*(const Rat& c) const {
  Polynomial r(ambient_);
  if (c == 0) return r;
  for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
  return r;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial r = Polynomial::constant(ambient_, 1);
  for (unsigned i = 0; i < k; ++i) r = r * *this;
  return r;
}

Term Polynomial::leading(const TermOrder& order) const {
  if (terms_.empty()) throw internal_error("leading term of zero polynomial");
  auto best = terms_.begin();
  if (order.kind == TermOrder::Kind::degrevlex) {
    // Canonical storage order: the first entry is the degrevlex maximum
    // for the identity permutation.
    bool identity = true;
    for (int i = 0; i < static_cast<int>(order.perm.size()); ++i)
      if (order.perm[i] != i) identity = false;
    if (identity) return {best->first, best->second};
  }
  for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
    if (order.less(best->first, it->first)) best = it;
  return {best->first, best->second};
}

Polynomial Polynomial::shift_var(int i) const {
  Polynomial r(ambient_);
  for (const auto& [m, c] : terms_) {
    const auto e = m.exp(i);
    // (x_i + 1)^e expanded by the binomial theorem.
    for (std::uint32_t j = 0; j <= e; ++j) {
      auto exps = m.exponents();
      exps[i] = j;
      r.add_term(Monomial(std::move(exps)), c * Rat(binomial(e, j)));
    }
  }
  return r;
}

bool Polynomial::is_homogeneous_weighted(const std::vector<int>& weights,
                                         long d) const {
  check_internal(static_cast<int>(weights.size()) == ambient_.size(),
                 "weight arity mismatch");
  for (const auto& [m, c] : terms_) {
    long wd = 0;
    for (int i = 0; i < m.nvars(); ++i) wd += long(m.exp(i)) * weights[i];
    if (wd != d) return false;
  }
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool neg = c < 0;
    Rat a = neg ? Rat(-c) : c;
    if (first) {
      if (neg) out << "-";
      first = false;
    } else {
      out << (neg ? " - " : " + ");
    }
    if (m.is_one()) {
      out << hsmult::to_string(a);
      continue;
    }
    bool printed = false;
    if (a != 1) {
      out << hsmult::to_string(a);
      printed = true;
    }
    for (int i = 0; i < m.nvars(); ++i) {
      if (!m.exp(i)) continue;
      if (printed) out << "*";
      out << ambient_.name(i);
      if (m.exp(i) > 1) out << "^" << m.exp(i);
      printed = true;
    }
  }
  return out.str();
}

int compare(const Polynomial& p, const Polynomial& q) {
  auto it = p.terms().begin(), jt = q.terms().begin();
  for (; it != p.terms().end() && jt != q.terms().end(); ++it, ++jt) {
    if (!(it->first == jt->first))
      return degrevlex_greater(it->first, jt->first) ? 1 : -1;
    int c = cmp(it->second, jt->second);
    if (c) return c;
  }
  if (it != p.terms().end()) return 1;
  if (jt != q.terms().end()) return -1;
  return 0;
}

void require_same_ambient(const Polynomial& p, const Polynomial& q) {
  if (!(p.ambient() == q.ambient()))
    throw input_error("ambient mismatch between polynomials");
}

}  // namespace hsmult
