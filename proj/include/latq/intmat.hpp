#pragma once

#include <latq/rational.hpp>

#include <utility>
#include <vector>

namespace latq {

// Dense arbitrary-precision integer matrix. Row-major, hand-rolled on purpose:
// the HNF/SNF loops below want exact integer pivots, not a numeric kernel.
struct ZMat {
  int rows = 0, cols = 0;
  std::vector<Int> a;

  ZMat() = default;
  ZMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  Int& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Int& operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  bool operator==(const ZMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

// Clears denominators: returns (A, d) with A = d * m integral, d = lcm of denominators.
std::pair<ZMat, Int> clear_denominators(const Mat& m);
Mat to_rational(const ZMat& z, const Int& denom = 1);

// Exact determinant of a square integer matrix, Bareiss fraction-free elimination.
Int det_bareiss(ZMat m);

// Unique row-style Hermite normal form of the lattice spanned by the rows.
// Zero rows are dropped; the result has full row rank.
ZMat hnf(ZMat m);

// Basis of { x in Z^rows : x * A = 0 }, as rows. The basis spans the full
// integer kernel (it is saturated) because it comes from a unimodular transform.
ZMat kernel(const ZMat& A);

// Smith normal form, left transform only: returns diagonal d and unimodular L
// with L * A * R = diag(d) for some unimodular R. A must be square.
void smith(ZMat A, ZMat& L, std::vector<Int>& d);

}  // namespace latq
