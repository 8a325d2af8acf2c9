#include "hsmult/monomial_ideal.hpp"

#include <algorithm>
#include <limits>

#include "hsmult/errors.hpp"

namespace hsmult {

namespace {

bool divides(const std::vector<std::uint32_t>& a,
             const std::vector<std::uint32_t>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

std::vector<std::vector<std::uint32_t>> minimalize(
    std::vector<std::vector<std::uint32_t>> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<std::vector<std::uint32_t>> out;
  for (const auto& g : gens) {
    bool dominated = false;
    for (const auto& h : gens)
      if (&g != &h && divides(h, g) && !(h == g)) {
        dominated = true;
        break;
      }
    if (!dominated) out.push_back(g);
  }
  return out;
}

}  // namespace

MonomialIdeal::MonomialIdeal(int dim,
                             std::vector<std::vector<std::uint32_t>> gens)
    : dimension(dim) {
  if (dim < 1 || dim > 16) throw input_error("dimension out of range");
  if (gens.empty()) throw input_error("monomial ideal needs a generator");
  for (const auto& g : gens)
    if (static_cast<int>(g.size()) != dim)
      throw input_error("generator arity mismatch");
  generators = minimalize(std::move(gens));
}

bool MonomialIdeal::is_origin_primary() const {
  for (int v = 0; v < dimension; ++v) {
    bool found = false;
    for (const auto& g : generators) {
      bool pure = true;
      for (int i = 0; i < dimension; ++i)
        if (i != v && g[i]) pure = false;
      if (pure) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

std::uint32_t MonomialIdeal::pure_power(int v) const {
  std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
  bool found = false;
  for (const auto& g : generators) {
    bool pure = true;
    for (int i = 0; i < dimension; ++i)
      if (i != v && g[i]) pure = false;
    if (pure && g[v] < best) {
      best = g[v];
      found = true;
    }
  }
  if (!found) throw input_error("no pure power on axis " + std::to_string(v));
  return best;
}

MonomialIdeal MonomialIdeal::product(const MonomialIdeal& other) const {
  if (other.dimension != dimension) throw input_error("dimension mismatch");
  std::vector<std::vector<std::uint32_t>> gens;
  for (const auto& a : generators)
    for (const auto& b : other.generators) {
      auto c = a;
      for (int i = 0; i < dimension; ++i) c[i] += b[i];
      gens.push_back(std::move(c));
    }
  return MonomialIdeal(dimension, std::move(gens));
}

MonomialIdeal MonomialIdeal::power(int t) const {
  if (t < 0) throw input_error("negative power");
  MonomialIdeal r(dimension, {std::vector<std::uint32_t>(dimension, 0)});
  for (int i = 0; i < t; ++i) r = r.product(*this);
  return r;
}

namespace {

// Counts monomials under the staircase, slicing off the last axis.
Int count_standard(const std::vector<std::vector<std::uint32_t>>& gens,
                   int dim) {
  if (dim == 1) {
    std::uint32_t p = std::numeric_limits<std::uint32_t>::max();
    for (const auto& g : gens) p = std::min(p, g[0]);
    return Int(static_cast<unsigned long>(p));
  }
  if (dim == 2) {
    // Row sweep: row b admits exponents a < min over applicable generators.
    std::uint32_t py = std::numeric_limits<std::uint32_t>::max();
    for (const auto& g : gens)
      if (g[0] == 0) py = std::min(py, g[1]);
    Int total = 0;
    for (std::uint32_t b = 0; b < py; ++b) {
      std::uint32_t minx = std::numeric_limits<std::uint32_t>::max();
      for (const auto& g : gens)
        if (g[1] <= b) minx = std::min(minx, g[0]);
      check_internal(minx != std::numeric_limits<std::uint32_t>::max(),
                     "row without x bound in origin-primary staircase");
      total += static_cast<unsigned long>(minx);
    }
    return total;
  }
  std::uint32_t plast = std::numeric_limits<std::uint32_t>::max();
  for (const auto& g : gens) {
    bool pure = true;
    for (int i = 0; i + 1 < dim; ++i)
      if (g[i]) pure = false;
    if (pure) plast = std::min(plast, g[dim - 1]);
  }
  Int total = 0;
  for (std::uint32_t e = 0; e < plast; ++e) {
    std::vector<std::vector<std::uint32_t>> slice;
    for (const auto& g : gens)
      if (g[dim - 1] <= e)
        slice.emplace_back(g.begin(), g.end() - 1);
    total += count_standard(minimalize(std::move(slice)), dim - 1);
  }
  return total;
}

}  // namespace

Int staircase_colength(const MonomialIdeal& I) {
  if (!I.is_origin_primary())
    throw input_error("staircase colength needs an origin-primary ideal");
  return count_standard(I.generators, I.dimension);
}

std::vector<std::array<std::uint32_t, 2>> newton_hull_2d(
    const MonomialIdeal& I) {
  if (I.dimension != 2)
    throw input_error("Newton polygon path only covers dimension 2");
  if (!I.is_origin_primary())
    throw input_error("Newton polygon needs an origin-primary ideal");
  // Minimal generators have strictly increasing x and strictly decreasing y.
  auto pts = I.generators;
  std::sort(pts.begin(), pts.end());
  // Monotone chain keeping counterclockwise turns: the boundary of the
  // Newton polyhedron from (0, b) down to (a, 0).
  std::vector<std::array<std::uint32_t, 2>> hull;
  for (const auto& p : pts) {
    std::array<std::uint32_t, 2> q{p[0], p[1]};
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull[hull.size() - 1];
      using ll = long long;
      ll cross = (ll(b[0]) - a[0]) * (ll(q[1]) - a[1]) -
                 (ll(b[1]) - a[1]) * (ll(q[0]) - a[0]);
      // cross > 0: b lies strictly below the chord a-q and is a vertex.
      // Collinear points are dropped so the vertex list is minimal.
      if (cross > 0) break;
      hull.pop_back();
    }
    hull.push_back(q);
  }
  return hull;
}

Int newton_multiplicity_2d(const MonomialIdeal& I) {
  auto hull = newton_hull_2d(I);
  if (hull.size() == 1 && hull[0][0] == 0 && hull[0][1] == 0)
    return 0;  // unit ideal: empty staircase
  // Shoelace over (0,0) followed by the hull from (a, 0) up to (0, b);
  // doubled area of that polygon is already an integer.
  std::vector<std::array<std::uint32_t, 2>> poly;
  poly.push_back({0, 0});
  for (auto it = hull.rbegin(); it != hull.rend(); ++it) poly.push_back(*it);
  Int twice_area = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const auto& p = poly[i];
    const auto& q = poly[(i + 1) % poly.size()];
    twice_area += Int(long(p[0])) * long(q[1]) - Int(long(q[0])) * long(p[1]);
  }
  check_internal(twice_area > 0, "degenerate Newton polygon");
  return twice_area;
}

}  // namespace hsmult
