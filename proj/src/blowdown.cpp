#include "hsmult/blowdown.hpp"

#include "hsmult/errors.hpp"

namespace hsmult {

void BasePointDatum::validate(int k0) const {
  if (kj <= k0)
    throw input_error("generation order kj must exceed k0 at a base point");
  if (static_cast<int>(d_seq.size()) != kj - k0 + 1)
    throw input_error("d_seq must have kj - k0 + 1 entries");
  if (d_seq.front() < 1)
    throw input_error("a base point needs d >= 1 at k0");
  if (d_seq.back() != 0)
    throw input_error("d must drop to 0 at kj");
  for (std::size_t i = 0; i + 1 < d_seq.size(); ++i)
    if (d_seq[i] < 1)
      throw input_error("d may vanish only at kj (kj is minimal)");
}

void LineBundleDatum::validate() const {
  if (k0 < 1) throw input_error("k0 must be >= 1");
  if (degree < 1) throw input_error("degree must be positive");
  for (const auto& bp : base_points) bp.validate(k0);
}

Int lambda_multiplicity(const BasePointDatum& bp, int k0) {
  bp.validate(k0);
  std::vector<std::vector<std::uint32_t>> pts;
  for (int k = k0; k <= bp.kj; ++k)
    pts.push_back({static_cast<std::uint32_t>(bp.d_seq[k - k0]),
                   static_cast<std::uint32_t>(k - k0)});
  Int lambda = newton_multiplicity_2d(MonomialIdeal(2, std::move(pts)));
  check_internal(lambda >= 1, "base-point contribution below 1");
  return lambda;
}

Int rs_blowdown_multiplicity(const LineBundleDatum& L) {
  L.validate();
  Int total = Int(L.k0) * L.k0 * L.degree;
  for (const auto& bp : L.base_points) total += lambda_multiplicity(bp, L.k0);
  return total;
}

Semigroup::Semigroup(std::set<int> g) : gaps(std::move(g)) {
  for (int s : gaps)
    if (s < 1) throw input_error("gaps must be positive");
  // Closure of the nongaps under addition: no gap may split into two
  // positive nongaps.
  for (int s : gaps)
    for (int a = 1; a + a <= s; ++a)
      if (!is_gap(a) && !is_gap(s - a))
        throw input_error("gap " + std::to_string(s) +
                          " is the sum of the nongaps " + std::to_string(a) +
                          " and " + std::to_string(s - a));
}

int first_nongap(const Semigroup& S) {
  int k = 1;
  while (S.is_gap(k)) ++k;
  return k;
}

std::optional<BasePointDatum> dseq_from_semigroup(const Semigroup& S) {
  int kappa = first_nongap(S);
  if (kappa == 1) return std::nullopt;
  BasePointDatum bp;
  bp.kj = kappa;
  for (int k = 1; k <= kappa; ++k) {
    int s = k;
    while (s > 0 && S.is_gap(s)) --s;
    bp.d_seq.push_back(k - s);
  }
  bp.validate(1);
  return bp;
}

LineBundleDatum point_bundle_datum(const Semigroup& S) {
  LineBundleDatum L;
  L.k0 = 1;
  L.degree = 1;
  if (auto bp = dseq_from_semigroup(S)) L.base_points.push_back(*bp);
  L.validate();
  return L;
}

void BoundsInput::validate() const {
  if (k0 < 1 || k1 < k0) throw input_error("need 1 <= k0 <= k1");
  if (p < 1 || p > n) throw input_error("need 1 <= p <= n");
  if (vol <= 0) throw input_error("vol must be positive");
  if (vol_B < 0) throw input_error("vol_B must be nonnegative");
}

namespace {

Rat int_pow(long base, int e) {
  Rat r = 1;
  for (int i = 0; i < e; ++i) r *= Rat(base);
  return r;
}

}  // namespace

VolControlReport vol_control_check(const BoundsInput& b) {
  b.validate();
  VolControlReport r;
  r.bound = (int_pow(b.k0, b.p) * Rat(b.k1) - int_pow(b.k0, b.p + 1)) * b.vol;
  r.slack = r.bound - b.vol_B;
  r.pass = b.vol_B <= r.bound;
  return r;
}

std::pair<Rat, Rat> mult_bounds(const BoundsInput& b) {
  b.validate();
  Rat lower = int_pow(b.k0, b.n + 1) * b.vol +
              Rat(b.n + 1 - b.p) * int_pow(b.k0, b.n - b.p) * b.vol_B;
  Rat upper = int_pow(b.k0, b.p + 1) * int_pow(b.k1, b.n - b.p) * b.vol +
              int_pow(b.k1, b.n - b.p) * b.vol_B;
  return {lower, upper};
}

}  // namespace hsmult
