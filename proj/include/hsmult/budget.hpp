#pragma once

namespace hsmult {

// Resource limits shared across the engines. Every limit is overridable per
// call; exhaustion raises budget_error, never a silently wrong value.
struct Budget {
  // Groebner: maximum number of S-pair reductions in one basis computation.
  long max_pair_reductions = 200000;
  // ideal_power_product: maximum number of generator products formed.
  long max_product_generators = 1000000;
  // is_origin_supported: largest power of a variable whose normal form is
  // examined before giving up.
  int origin_power_bound = 128;
  // Largest sample coordinate for the finite-difference engines.
  int max_t_general = 12;
  int max_t_monomial = 60;
};

}  // namespace hsmult
