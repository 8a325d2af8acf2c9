#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hsmult/budget.hpp"
#include "hsmult/ideal.hpp"

namespace hsmult {

// Which colength evaluator backs the finite-difference engine. `automatic`
// picks the staircase path when every input ideal (and the quotient, if
// any) is monomial, and the Groebner path otherwise.
enum class Backend { automatic, general, monomial };

struct MultiplicityReport {
  Int value;
  int dimension = 0;            // n, the sum of the difference orders
  std::vector<int> orders;      // d_1..d_k (a single entry n for plain hs)
  std::vector<int> base;        // accepted base point tau
  // Every colength sample the run evaluated, sorted by sample point.
  std::vector<std::pair<std::vector<int>, Int>> samples;
  Backend backend_used = Backend::general;
};

// Recomputes the mixed difference at report.base from report.samples.
// Certificate replay: must reproduce report.value.
Int replay_difference(const MultiplicityReport& report);

// Smallest n such that the (n+1)-th finite differences of
// t -> colength(M^t (+ J)) vanish over the sample window.
int infer_dimension(const Ambient& ambient,
                    const std::optional<IdealPresentation>& J = std::nullopt,
                    const Budget& budget = {});

// Hilbert-Samuel multiplicity: the stabilized n-th forward difference of
// t -> colength(U^t (+ J)). Accepts when two consecutive n-th differences
// agree and the (n+1)-th difference vanishes there.
MultiplicityReport hs_multiplicity(
    const IdealPresentation& U,
    const std::optional<IdealPresentation>& J = std::nullopt,
    std::optional<int> dimension = std::nullopt,
    Backend backend = Backend::automatic, const Budget& budget = {});

// Mixed multiplicity e(U_1^{[d_1]}; ...; U_k^{[d_k]}): the mixed forward
// difference of (t_1..t_k) -> colength(U_1^{t_1}...U_k^{t_k} (+ J)) at a
// base point tau, accepted when the value repeats at tau + (1,..,1).
MultiplicityReport mixed_multiplicity(
    const std::vector<IdealPresentation>& U, const std::vector<int>& d,
    const std::optional<IdealPresentation>& J = std::nullopt,
    Backend backend = Backend::automatic, const Budget& budget = {});

struct PolarizationTerm {
  std::vector<int> d;
  Int multinomial;   // n! / (d_1! ... d_k!)
  Int mixed_value;   // e(U^{[d]})
  Int power_factor;  // p_1^{d_1} ... p_k^{d_k}
};

struct PolarizationReport {
  Int lhs;  // e(U_1^{p_1} ... U_n^{p_n})
  Int rhs;  // sum of the expansion terms
  bool equal = false;
  std::vector<PolarizationTerm> terms;
  MultiplicityReport lhs_report;
};

// Checks e(U_1^{p_1}...U_n^{p_n}) against its multinomial expansion in the
// mixed multiplicities. U must contain exactly n ideals, n the ambient
// dimension; every p_i >= 1.
PolarizationReport polarization_check(const std::vector<IdealPresentation>& U,
                                      const std::vector<int>& p,
                                      Backend backend = Backend::automatic,
                                      const Budget& budget = {});

struct ReesSharpReport {
  std::vector<Int> chain;  // e_i = e(U^{[i]}; V^{[n-i]}), i = 0..n
  // Per inner index i = 1..n-1: (e_i^2, e_{i-1} * e_{i+1}).
  std::vector<std::pair<Int, Int>> inequalities;
  bool pass = false;
};

// Log-convexity of the mixed-multiplicity chain of (U, V).
ReesSharpReport rees_sharp_check(
    const IdealPresentation& U, const IdealPresentation& V, int n,
    const std::optional<IdealPresentation>& J = std::nullopt,
    Backend backend = Backend::automatic, const Budget& budget = {});

// Symbolic check of the finite-difference extraction on a randomly drawn
// degree-n polynomial: a polynomial with t^d-coefficient (n!/prod d_i!)*e_d
// plus random lower-order terms must yield the constant n!*e_d under the
// mixed difference operator. Runs automatically (2- and 3-variable cases)
// before the engine reports its first value.
bool difference_identity_holds(const std::vector<int>& d, std::uint64_t seed);
void ensure_difference_identity_verified();

}  // namespace hsmult
