#pragma once

#include <map>
#include <string>
#include <vector>

#include "hsmult/polynomial.hpp"

namespace hsmult {

// Truncated graded class on a compact manifold, expanded in formal symbols
// with assigned degrees (c_1..c_r of a bundle, or degree-1 Chern roots).
// components[k] is the degree-k piece, homogeneous under the weights.
struct GradedClass {
  Ambient symbols;
  std::vector<int> weights;
  int truncation = 0;
  std::vector<Polynomial> components;

  GradedClass(Ambient symbols, std::vector<int> weights, int truncation,
              std::vector<Polynomial> components);

  // Total Chern class of a generic rank-r bundle: symbols c1..cr with
  // weights 1..r, component k equal to the symbol ck (0 beyond the rank).
  static GradedClass generic_chern(int rank, int truncation);
};

// Truncated product of graded classes over the same symbols.
GradedClass graded_product(const GradedClass& a, const GradedClass& b);

// Inverse of the total class: s_0 = 1, s_k = -sum_{i=1..k} c_i s_{k-i}.
// The product check c * s = 1 (to the truncation) runs before returning.
// Raises input_error("nonunit constant term") unless components[0] == 1.
GradedClass segre_from_chern(const GradedClass& c);

// Dual bundle: each degree-d piece picks up the sign (-1)^d.
GradedClass dual_class(const GradedClass& c);

// Canonical monomial key: factors in symbol order joined by '*' with '^'
// for exponents > 1; "1" for the empty monomial.
std::string monomial_key(const Monomial& m, const Ambient& symbols);

// Evaluation table for degree-n monomials in the symbols: the intersection
// numbers of the underlying manifold.
struct IntersectionTable {
  Ambient symbols;
  std::vector<int> weights;
  int degree = 0;
  std::map<std::string, Int> values;

  IntersectionTable(Ambient symbols, std::vector<int> weights, int degree,
                    std::map<std::string, Int> values);
};

// Integral of the top Segre class of the dual bundle: dualize, invert, and
// evaluate the degree-n piece against the table. The result must be an
// integer; a degree-n monomial absent from the table is an error.
Int top_segre_integral(const GradedClass& chern_of_E,
                       const IntersectionTable& table);

}  // namespace hsmult
