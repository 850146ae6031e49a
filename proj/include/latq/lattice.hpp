#pragma once

#include <latq/rational.hpp>

#include <optional>
#include <vector>

namespace latq {

// A positive definite lattice, either with explicit rational generators
// (rows, standard inner product on the ambient space) or Gram-only.
class Lattice {
 public:
  // Rows must be linearly independent.
  static Lattice from_generators(const Mat& gens);
  // Rows may be dependent; the row span is HNF-reduced to a basis.
  static Lattice from_spanning_rows(const Mat& rows);
  // Accepts a positive definite integral Gram. Identity realizes as Z^n,
  // anything else stays Gram-only.
  static Lattice from_gram(const Mat& gram);
  // Internal/unchecked variant for rational Grams (duals etc.).
  static Lattice from_gram_unchecked(const Mat& gram);

  bool has_vectors() const { return has_vectors_; }
  int rank() const { return static_cast<int>(gram_.rows()); }
  int ambient_dim() const { return has_vectors_ ? static_cast<int>(gens_.cols()) : 0; }
  const Mat& generators() const;
  const Mat& gram() const { return gram_; }
  Rat det() const;

  bool is_integral() const { return latq::is_integral(gram_); }

  // Unique basis: HNF of the denominator-cleared generator matrix, rescaled.
  Mat canonical_basis() const;
  bool operator==(const Lattice& o) const;

  // Rational coordinates of v in this basis, if v lies in the rational span.
  std::optional<Row> coefficients_of(const Row& v) const;
  bool contains(const Row& v) const;
  bool contains_lattice(const Lattice& m) const;

 private:
  Lattice() = default;
  Mat gens_;   // r x m when has_vectors_
  Mat gram_;   // r x r
  bool has_vectors_ = false;
};

Lattice dual(const Lattice& l);

// {u in L : (u, v) = 0 for all v in M}; requires M a sublattice of L.
Lattice orthogonal_complement(const Lattice& l, const Lattice& m);

// (M tensor Q) intersected with L, the smallest primitive sublattice of L containing M.
Lattice primitive_closure(const Lattice& l, const Lattice& m);

bool is_primitive(const Lattice& l, const Lattice& m);

// |M/N| for N a finite-index sublattice of M.
Int index(const Lattice& m, const Lattice& n);

enum class Parity { even, odd };
Parity parity(const Lattice& l);

Lattice direct_sum(const Lattice& a, const Lattice& b);

struct CosetProfile {
  struct Entry {
    Row representative;  // ambient coords when available, basis coefficients otherwise
    Rat minimal_norm;
    Int multiplicity;    // number of nonzero cosets attaining this minimal norm
  };
  Int coset_count = 1;
  std::vector<Entry> entries;  // sorted by minimal_norm
};

// Minimal-norm data of the nonzero cosets of M in M*. Rank is capped (desk scale).
CosetProfile coset_profile(const Lattice& m, int max_rank = 4);

}  // namespace latq
