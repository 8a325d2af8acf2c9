#pragma once

#include <cstdint>
#include <vector>

namespace hsmult {

// Exponent vector of a power product. The ambient variable count is fixed at
// construction; all arithmetic requires matching sizes.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<std::uint32_t> exps) : e_(std::move(exps)) {}
  static Monomial one(int nvars) {
    return Monomial(std::vector<std::uint32_t>(nvars, 0));
  }
  static Monomial var(int nvars, int i, std::uint32_t e = 1) {
    std::vector<std::uint32_t> v(nvars, 0);
    v[i] = e;
    return Monomial(std::move(v));
  }

  int nvars() const { return static_cast<int>(e_.size()); }
  std::uint32_t exp(int i) const { return e_[i]; }
  const std::vector<std::uint32_t>& exponents() const { return e_; }

  long total_degree() const {
    long d = 0;
    for (auto x : e_) d += x;
    return d;
  }
  bool is_one() const {
    for (auto x : e_)
      if (x) return false;
    return true;
  }
  bool divides(const Monomial& m) const {
    for (int i = 0; i < nvars(); ++i)
      if (e_[i] > m.e_[i]) return false;
    return true;
  }
  bool coprime(const Monomial& m) const {
    for (int i = 0; i < nvars(); ++i)
      if (e_[i] && m.e_[i]) return false;
    return true;
  }

  Monomial operator*(const Monomial& m) const {
    auto v = e_;
    for (int i = 0; i < nvars(); ++i) v[i] += m.e_[i];
    return Monomial(std::move(v));
  }
  // Requires m.divides(*this).
  Monomial operator/(const Monomial& m) const {
    auto v = e_;
    for (int i = 0; i < nvars(); ++i) v[i] -= m.e_[i];
    return Monomial(std::move(v));
  }
  static Monomial lcm(const Monomial& a, const Monomial& b) {
    auto v = a.e_;
    for (int i = 0; i < a.nvars(); ++i)
      if (b.e_[i] > v[i]) v[i] = b.e_[i];
    return Monomial(std::move(v));
  }

  bool operator==(const Monomial&) const = default;

 private:
  std::vector<std::uint32_t> e_;
};

// True when a precedes b in descending degree-reverse-lexicographic order
// (identity variable order). Used as the canonical term-storage order.
bool degrevlex_greater(const Monomial& a, const Monomial& b);

struct MonoDegRevLexDesc {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return degrevlex_greater(a, b);
  }
};

// Monomial comparison scheme for basis computations: the kind picks the
// classical order, the permutation lists variable indices in comparison
// priority (identity by default).
struct TermOrder {
  enum class Kind { degrevlex, lex };
  Kind kind = Kind::degrevlex;
  std::vector<int> perm;

  static TermOrder degrevlex(int nvars);
  static TermOrder lex(int nvars);

  // Strict comparison: a < b in this order.
  bool less(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const {
    return less(b, a);
  }
};

}  // namespace hsmult
