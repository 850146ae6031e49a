#pragma once

#include <latq/rational.hpp>

#include <string>
#include <vector>

namespace latq {

struct Place {
  bool is_infinity = false;
  Int p = 0;

  static Place infinity() { return Place{true, 0}; }
  static Place prime(const Int& q) { return Place{false, q}; }

  bool operator==(const Place& o) const {
    return is_infinity == o.is_infinity && (is_infinity || p == o.p);
  }
  std::string str() const { return is_infinity ? "infinity" : p.get_str(); }
};

// Canonical representative of Q_p^* / (Q_p^*)^2, and of the sign at infinity.
struct SquareClass {
  Place place;
  int val_parity = 0;  // parity of nu_p; 0 at infinity
  // odd p: 0 = trivial unit class, 1 = nonresidue class
  // p = 2: odd part mod 8 (1, 3, 5, 7)
  // infinity: +1 or -1
  int unit = 1;

  bool operator==(const SquareClass& o) const {
    return place == o.place && val_parity == o.val_parity && unit == o.unit;
  }
  bool is_trivial() const { return val_parity == 0 && unit == (place.is_infinity ? 1 : (place.p == 2 ? 1 : 0)); }
};

struct LocalInvariant {
  Place place;
  int dim = 0;
  SquareClass det_class;
  int hasse = 1;

  bool operator==(const LocalInvariant& o) const {
    return place == o.place && dim == o.dim && det_class == o.det_class && hasse == o.hasse;
  }
};

// Exponent of p in a nonzero rational.
long valuation(const Rat& a, const Int& p);

// Legendre symbol of a p-unit rational, odd p.
int legendre_unit(const Rat& u, const Int& p);

// Odd part of a 2-unit rational, mod 8 (in {1,3,5,7}).
int unit_mod8(const Rat& u);

// Smallest positive quadratic nonresidue mod p (the fixed choice of delta_p).
Int smallest_nonresidue(const Int& p);

SquareClass square_class(const Rat& a, const Place& place);

int hilbert_symbol(const Rat& a, const Rat& b, const Place& place);

// Product of Hilbert symbols over a congruence diagonalization of G.
int hasse_symbol(const Mat& g, const Place& place);

LocalInvariant local_invariant(const Mat& g, const Place& place);

bool spaces_locally_equal(const Mat& g1, const Mat& g2, const Place& place);
bool spaces_globally_equal(const Mat& g1, const Mat& g2);

// Legality of a local invariant triple: rules out (dim, hasse) = (1, -1) and
// (dim, det_class, hasse) = (2, class(-1), -1).
bool qp_space_exists(const LocalInvariant& inv);

// Prime factorization by trial division; fine at the magnitudes used here.
std::vector<std::pair<Int, int>> factorize(Int n);

// infinity plus every prime dividing n (n != 0).
std::vector<Place> relevant_places(const Int& n);

}  // namespace latq
