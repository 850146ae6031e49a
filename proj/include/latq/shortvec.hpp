#pragma once

#include <latq/lattice.hpp>
#include <latq/rational.hpp>

#include <vector>

namespace latq {

struct ShortVector {
  Row coords;  // ambient coords when the lattice has vectors, basis coefficients otherwise
  std::vector<long> coeffs;
  Rat norm;
};

struct ShortVectorSet {
  Rat bound;
  std::vector<ShortVector> vectors;  // every nonzero v with (v,v) <= bound, once; closed under negation
};

// Exact Fincke-Pohst on a positive definite rational Gram: all nonzero integer
// coefficient vectors x with x G x^T <= bound, in lexicographic order.
std::vector<std::pair<std::vector<long>, Rat>> enumerate_short(const Mat& gram, const Rat& bound);

ShortVectorSet vectors_up_to(const Lattice& l, const Rat& bound);

Rat minimum(const Lattice& l);

long kissing_number(const Lattice& l);

}  // namespace latq
