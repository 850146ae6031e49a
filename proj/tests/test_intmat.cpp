#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <latq/intmat.hpp>
#include <latq/ratmat.hpp>

#include "test_helpers.hpp"

using namespace latq;
using namespace latq::testing;

namespace {

ZMat rand_zmat(int r, int c, long mag = 5) {
  ZMat m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = rand_int(-mag, mag);
  return m;
}

ZMat mul(const ZMat& a, const ZMat& b) {
  ZMat out(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < b.cols; ++j)
      for (int k = 0; k < a.cols; ++k) out(i, j) += a(i, k) * b(k, j);
  return out;
}

// random unimodular integer matrix from elementary operations
ZMat rand_uni(int n) {
  ZMat u(n, n);
  for (int i = 0; i < n; ++i) u(i, i) = 1;
  for (int k = 0; k < 15; ++k) {
    int i = static_cast<int>(rand_int(0, n - 1));
    int j = static_cast<int>(rand_int(0, n - 1));
    if (i == j) continue;
    Int f = rand_int(-2, 2);
    for (int c = 0; c < n; ++c) u(i, c) += f * u(j, c);
  }
  return u;
}

}  // namespace

TEST_CASE("Bareiss determinant matches the rational path") {
  for (int trial = 0; trial < 40; ++trial) {
    int n = static_cast<int>(rand_int(1, 5));
    ZMat m = rand_zmat(n, n);
    CHECK(Rat(det_bareiss(m)) == determinant(to_rational(m)));
  }
}

TEST_CASE("HNF is invariant under unimodular row transforms") {
  for (int trial = 0; trial < 25; ++trial) {
    int r = static_cast<int>(rand_int(1, 4));
    int c = static_cast<int>(rand_int(r, 5));
    ZMat m = rand_zmat(r, c);
    CHECK(hnf(m) == hnf(mul(rand_uni(r), m)));
  }
}

TEST_CASE("HNF shape: positive pivots, echelon, reduced above") {
  for (int trial = 0; trial < 25; ++trial) {
    ZMat h = hnf(rand_zmat(3, 5));
    int prev = -1;
    for (int i = 0; i < h.rows; ++i) {
      int lead = -1;
      for (int j = 0; j < h.cols && lead < 0; ++j)
        if (h(i, j) != 0) lead = j;
      REQUIRE(lead > prev);
      CHECK(h(i, lead) > 0);
      for (int k = 0; k < i; ++k) {
        CHECK(h(k, lead) >= 0);
        CHECK(h(k, lead) < h(i, lead));
      }
      prev = lead;
    }
  }
}

TEST_CASE("kernel rows annihilate and are saturated") {
  for (int trial = 0; trial < 25; ++trial) {
    int r = static_cast<int>(rand_int(2, 5));
    int c = static_cast<int>(rand_int(1, 4));
    ZMat m = rand_zmat(r, c);
    ZMat k = kernel(m);
    ZMat prod = mul(k, m);
    for (const Int& v : prod.a) CHECK(v == 0);
    int rank_m = hnf(m).rows;
    CHECK(k.rows + rank_m == r);
    // each kernel basis vector divided by its content stays in the kernel span
    if (k.rows > 0) {
      ZMat h = hnf(k);
      for (int i = 0; i < h.rows; ++i) {
        Int g = 0;
        for (int j = 0; j < h.cols; ++j) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), h(i, j).get_mpz_t());
        ZMat scaled(1, h.cols);
        for (int j = 0; j < h.cols; ++j) scaled(0, j) = h(i, j) / g;
        ZMat test(k.rows + 1, k.cols);
        for (int a = 0; a < k.rows; ++a)
          for (int j = 0; j < k.cols; ++j) test(a, j) = k(a, j);
        for (int j = 0; j < k.cols; ++j) test(k.rows, j) = scaled(0, j);
        CHECK(hnf(test).rows == k.rows);  // content-reduced vector adds nothing
      }
    }
  }
}

TEST_CASE("Smith normal form: divisibility chain and determinant") {
  for (int trial = 0; trial < 25; ++trial) {
    int n = static_cast<int>(rand_int(1, 4));
    ZMat m = rand_zmat(n, n);
    Int dm = det_bareiss(m);
    if (dm == 0) continue;
    ZMat l;
    std::vector<Int> d;
    smith(m, l, d);
    REQUIRE(static_cast<int>(d.size()) == n);
    Int prod = 1;
    for (size_t i = 0; i + 1 < d.size(); ++i) CHECK(d[i + 1] % d[i] == 0);
    for (const Int& v : d) prod *= v;
    CHECK(abs(prod) == abs(dm));
    CHECK(abs(det_bareiss(l)) == 1);  // left transform unimodular
  }
}

TEST_CASE("clear_denominators round-trips") {
  for (int trial = 0; trial < 20; ++trial) {
    Mat m = rand_symmetric(3);
    auto [z, den] = clear_denominators(m);
    CHECK(to_rational(z, den) == m);
  }
}
