#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "hsmult/rational.hpp"

namespace hsmult {

// Monomial ideal given by exponent vectors, kept minimal (no generator
// divides another). Supports the fast colength and Newton-polygon paths.
struct MonomialIdeal {
  int dimension = 0;
  std::vector<std::vector<std::uint32_t>> generators;

  MonomialIdeal(int dim, std::vector<std::vector<std::uint32_t>> gens);

  // True when every coordinate axis carries a pure-power generator, i.e.
  // the ideal is supported at the origin alone.
  bool is_origin_primary() const;
  // Exponent of the minimal pure power on axis v; requires one to exist.
  std::uint32_t pure_power(int v) const;

  MonomialIdeal product(const MonomialIdeal& other) const;
  MonomialIdeal power(int t) const;
};

// Number of monomials outside the ideal, i.e. dim of the quotient as a
// vector space. Requires an origin-primary ideal.
Int staircase_colength(const MonomialIdeal& I);

// Vertices of the lower-left convex hull of the generator points of a
// 2-dimensional origin-primary ideal, from the y-axis intercept (0, b) to
// the x-axis intercept (a, 0).
std::vector<std::array<std::uint32_t, 2>> newton_hull_2d(
    const MonomialIdeal& I);

// Twice the area between the axes and the lower hull, which equals the
// multiplicity of the ideal. Exact shoelace on the hull vertices.
Int newton_multiplicity_2d(const MonomialIdeal& I);

}  // namespace hsmult
