#pragma once

#include <optional>
#include <set>
#include <vector>

#include "hsmult/monomial_ideal.hpp"
#include "hsmult/rational.hpp"

namespace hsmult {

// Vanishing data of one base point of a positive line bundle L on a curve:
// d_seq[k - k0] is the minimal vanishing order at the point across the
// sections of L^k, for k = k0 .. kj. The point obstructs generation until
// kj, so the sequence starts >= 1 and ends with exactly one 0.
struct BasePointDatum {
  int kj = 0;
  std::vector<int> d_seq;

  void validate(int k0) const;
};

struct LineBundleDatum {
  int k0 = 0;   // least power with a nonzero section
  Int degree;   // positive
  std::vector<BasePointDatum> base_points;

  void validate() const;
};

// Local contribution of one base point: the multiplicity of the monomial
// ideal generated by (d_{j,k}, k - k0) for k = k0..kj, computed through the
// Newton polygon. Always >= 1.
Int lambda_multiplicity(const BasePointDatum& bp, int k0);

// Multiplicity of the blow-down of the disc bundle: k0^2 * deg(L) plus the
// base-point contributions.
Int rs_blowdown_multiplicity(const LineBundleDatum& L);

// Numerical semigroup of pole orders at a point of a compact curve, given
// by its finite gap set. Validation checks the complement of the gaps is
// closed under addition.
struct Semigroup {
  std::set<int> gaps;

  explicit Semigroup(std::set<int> gaps);
  bool is_gap(int s) const { return gaps.count(s) > 0; }
};

// Least positive nongap.
int first_nongap(const Semigroup& S);

// Vanishing-order data of the degree-one point bundle L_P derived from the
// pole-order semigroup: d_k = k - max{s in S : s <= k} for k = 1..kappa.
// Returns nullopt when kappa = 1 (P is not a base point of L_P).
std::optional<BasePointDatum> dseq_from_semigroup(const Semigroup& S);

// Assembles the full L_P datum (k0 = 1, degree 1) for the semigroup.
LineBundleDatum point_bundle_datum(const Semigroup& S);

// Shared input of the volume bounds: 1 <= k0 <= k1, 1 <= p <= n,
// vol > 0, vol_B >= 0.
struct BoundsInput {
  int k0 = 1, k1 = 1, p = 1, n = 1;
  Rat vol, vol_B;

  void validate() const;
};

struct VolControlReport {
  Rat bound;  // (k0^p k1 - k0^{p+1}) * vol
  Rat slack;  // bound - vol_B
  bool pass = false;
};

// Checks the base-locus volume against its upper bound.
VolControlReport vol_control_check(const BoundsInput& b);

// Two-sided bounds for the blow-down multiplicity:
//   lower = k0^{n+1} vol + (n+1-p) k0^{n-p} vol_B
//   upper = k0^{p+1} k1^{n-p} vol + k1^{n-p} vol_B
std::pair<Rat, Rat> mult_bounds(const BoundsInput& b);

}  // namespace hsmult
