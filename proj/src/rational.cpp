#include "hsmult/rational.hpp"

#include "hsmult/errors.hpp"

namespace hsmult {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw input_error("zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rat& q) { return q.get_str(); }

std::string to_string(const Int& z) { return z.get_str(); }

Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    return make_rat(num, den);
  } catch (const std::invalid_argument&) {
    throw input_error("malformed rational: " + s);
  }
}

Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Int factorial(int n) {
  check_internal(n >= 0, "factorial of negative argument");
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

}  // namespace hsmult
