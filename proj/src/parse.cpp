#include "hsmult/parse.hpp"

#include <cctype>

#include "hsmult/errors.hpp"

namespace hsmult {

namespace {

class Parser {
 public:
  Parser(const std::string& src, const Ambient& ambient)
      : src_(src), ambient_(ambient) {}

  Polynomial run() {
    Polynomial p(ambient_);
    skip_space();
    if (at_end()) throw parse_error("empty polynomial", pos_);
    int sign = read_optional_sign();
    p += parse_term() * Rat(sign);
    for (skip_space(); !at_end(); skip_space()) {
      char c = src_[pos_];
      if (c != '+' && c != '-')
        throw parse_error("expected '+' or '-'", pos_);
      ++pos_;
      p += parse_term() * Rat(c == '-' ? -1 : 1);
    }
    return p;
  }

 private:
  bool at_end() const { return pos_ >= src_.size(); }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
  }
  char peek() {
    skip_space();
    return at_end() ? '\0' : src_[pos_];
  }

  int read_optional_sign() {
    char c = peek();
    if (c == '+' || c == '-') {
      ++pos_;
      return c == '-' ? -1 : 1;
    }
    return 1;
  }

  Polynomial parse_term() {
    char c = peek();
    Rat coeff = 1;
    Monomial mono = Monomial::one(ambient_.size());
    bool have_any = false;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      coeff = parse_coeff();
      have_any = true;
      while (peek() == '*') {
        ++pos_;
        apply_factor(mono);
      }
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      apply_factor(mono);
      have_any = true;
      while (peek() == '*') {
        ++pos_;
        apply_factor(mono);
      }
    }
    if (!have_any) throw parse_error("expected a term", pos_);
    return Polynomial::term(ambient_, mono, coeff);
  }

  Rat parse_coeff() {
    Int num = parse_nat();
    if (peek() == '/') {
      ++pos_;
      std::size_t at = pos_;
      skip_space();
      if (at_end() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
        throw parse_error("expected denominator", at);
      Int den = parse_nat();
      if (den == 0) throw parse_error("zero denominator", at);
      return make_rat(num, den);
    }
    return Rat(num);
  }

  Int parse_nat() {
    skip_space();
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
    if (pos_ == start) throw parse_error("expected a number", start);
    return Int(src_.substr(start, pos_ - start));
  }

  void apply_factor(Monomial& mono) {
    skip_space();
    std::size_t start = pos_;
    if (at_end() || !std::isalpha(static_cast<unsigned char>(src_[pos_])))
      throw parse_error("expected a variable", pos_);
    while (!at_end() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
            src_[pos_] == '_'))
      ++pos_;
    std::string name = src_.substr(start, pos_ - start);
    auto idx = ambient_.index_of(name);
    if (!idx) throw input_error("unknown variable: " + name);
    std::uint32_t e = 1;
    if (peek() == '^') {
      ++pos_;
      skip_space();
      if (at_end() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
        throw parse_error("expected an exponent", pos_);
      Int n = parse_nat();
      if (n > 1000000) throw input_error("exponent too large");
      e = static_cast<std::uint32_t>(n.get_ui());
    }
    mono = mono * Monomial::var(ambient_.size(), *idx, e);
  }

  const std::string& src_;
  const Ambient& ambient_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& src, const Ambient& ambient) {
  return Parser(src, ambient).run();
}

}  // namespace hsmult
