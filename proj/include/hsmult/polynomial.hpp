#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hsmult/monomial.hpp"
#include "hsmult/rational.hpp"

namespace hsmult {

// Ordered list of variable names. At most 16 variables; names must be
// distinct identifiers ([A-Za-z][A-Za-z0-9_]*).
class Ambient {
 public:
  Ambient() = default;
  explicit Ambient(std::vector<std::string> names);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<int> index_of(const std::string& name) const;

  bool operator==(const Ambient&) const = default;

 private:
  std::vector<std::string> names_;
};

struct Term {
  Monomial mono;
  Rat coeff;
};

// Multivariate polynomial over Q with exact coefficients. Terms are stored
// in descending degrevlex order; zero coefficients are never kept.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rat, MonoDegRevLexDesc>;

  Polynomial() = default;
  explicit Polynomial(Ambient a) : ambient_(std::move(a)) {}

  static Polynomial zero(const Ambient& a) { return Polynomial(a); }
  static Polynomial constant(const Ambient& a, const Rat& c);
  static Polynomial variable(const Ambient& a, int i);
  static Polynomial term(const Ambient& a, const Monomial& m, const Rat& c);

  const Ambient& ambient() const { return ambient_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int num_terms() const { return static_cast<int>(terms_.size()); }
  // -1 for the zero polynomial.
  long total_degree() const;
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& q) const;
  Polynomial operator-(const Polynomial& q) const;
  Polynomial operator*(const Polynomial& q) const;
  Polynomial operator*(const Rat& c) const;
  Polynomial& operator+=(const Polynomial& q);
  Polynomial& operator-=(const Polynomial& q);
  Polynomial pow(unsigned k) const;

  void add_term(const Monomial& m, const Rat& c);
  Rat coeff(const Monomial& m) const;

  // Largest term under the given order; error on the zero polynomial.
  Term leading(const TermOrder& order) const;

  // Substitutes variable i by (variable i + 1). Exact; used by the
  // finite-difference self-test.
  Polynomial shift_var(int i) const;

  // Weighted-homogeneity test: every term has weighted degree d under the
  // given per-variable weights.
  bool is_homogeneous_weighted(const std::vector<int>& weights, long d) const;

  // Canonical form: descending degrevlex, explicit '*' and '^', "a" or
  // "a/b" coefficients, unit coefficients elided. Zero prints as "0".
  std::string to_string() const;

  bool operator==(const Polynomial& q) const {
    return ambient_ == q.ambient_ && terms_ == q.terms_;
  }

 private:
  Ambient ambient_;
  TermMap terms_;
};

// Total order for deduplication in sorted containers.
int compare(const Polynomial& p, const Polynomial& q);

void require_same_ambient(const Polynomial& p, const Polynomial& q);

}  // namespace hsmult
