#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <latq/lattice.hpp>
#include <latq/ratmat.hpp>

#include "test_helpers.hpp"

using namespace latq;
using namespace latq::testing;

namespace {

Lattice zn(int n) { return Lattice::from_gram(Mat::Identity(n, n)); }

Lattice gram1x1(long k) {
  Mat g(1, 1);
  g << Rat(k);
  return Lattice::from_gram(g);
}

}  // namespace

TEST_CASE("from_gram") {
  Lattice z1 = gram1x1(1);
  CHECK(z1.has_vectors());
  CHECK(z1.gram() == Mat::Identity(1, 1));
  Lattice two = gram1x1(2);
  CHECK_FALSE(two.has_vectors());
  CHECK(two.gram()(0, 0) == 2);
  Mat a2(2, 2);
  a2 << 2, -1, -1, 2;
  CHECK(Lattice::from_gram(a2).gram() == a2);
  Mat bad(2, 2);
  bad << 1, 2, 2, 1;
  CHECK_THROWS(Lattice::from_gram(bad));
  Mat frac(1, 1);
  frac << Rat(1, 2);
  CHECK_THROWS(Lattice::from_gram(frac));
}

TEST_CASE("dual") {
  CHECK(dual(zn(3)) == zn(3));
  CHECK(dual(gram1x1(2)).gram()(0, 0) == Rat(1, 2));
  for (int trial = 0; trial < 15; ++trial) {
    int n = static_cast<int>(rand_int(1, 4));
    Lattice l = Lattice::from_gram(rand_pd_gram(n));
    CHECK(dual(l).det() * l.det() == 1);
    CHECK(dual(dual(l)).gram() == l.gram());
  }
  // dual(dual) on a vector lattice, canonical bases equal
  Mat gens(2, 3);
  gens << 1, 2, 0, 0, 1, 3;
  Lattice l = Lattice::from_generators(gens);
  CHECK(dual(dual(l)) == l);
}

TEST_CASE("orthogonal complement in Z^2") {
  Mat e1(1, 2);
  e1 << 1, 0;
  Mat z2 = Mat::Identity(2, 2);
  Lattice comp = orthogonal_complement(Lattice::from_generators(z2),
                                       Lattice::from_generators(e1));
  REQUIRE(comp.rank() == 1);
  CHECK(comp.gram()(0, 0) == 1);
  CHECK(comp.generators()(0, 0) == 0);
}

TEST_CASE("primitive closure and index") {
  Mat twoz(1, 1);
  twoz << 2;
  Lattice z = zn(1);
  Lattice sub = Lattice::from_generators(twoz);
  Lattice closure = primitive_closure(z, sub);
  CHECK(closure == z);
  CHECK_FALSE(is_primitive(z, sub));
  CHECK(is_primitive(z, z));
  CHECK(index(z, sub) == 2);
  // det(M) = det(P) [P:M]^2 for M = 2Z in Z
  CHECK(sub.det() == closure.det() * 4);
  CHECK_THROWS(index(sub, z));  // not nested
}

TEST_CASE("parity") {
  CHECK(parity(zn(4)) == Parity::odd);
  Mat a2(2, 2);
  a2 << 2, -1, -1, 2;
  CHECK(parity(Lattice::from_gram(a2)) == Parity::even);
}

TEST_CASE("direct sum") {
  CHECK(direct_sum(zn(1), zn(1)) == zn(2));
  Lattice s = direct_sum(gram1x1(2), gram1x1(6));
  Mat expect(2, 2);
  expect << 2, 0, 0, 6;
  CHECK(s.gram() == expect);
  for (int trial = 0; trial < 10; ++trial) {
    Lattice a = Lattice::from_gram(rand_pd_gram(2));
    Lattice b = Lattice::from_gram(rand_pd_gram(3));
    Lattice d = direct_sum(a, b);
    CHECK(d.det() == a.det() * b.det());
    bool odd = parity(a) == Parity::odd || parity(b) == Parity::odd;
    CHECK((parity(d) == Parity::odd) == odd);
  }
}

TEST_CASE("coset profile") {
  Mat m15(3, 3);
  m15 << 3, 2, 0, 2, 3, 0, 0, 0, 3;
  auto profile = coset_profile(Lattice::from_gram(m15));
  CHECK(profile.coset_count == 15);
  REQUIRE(profile.entries.size() == 5);
  std::vector<std::pair<Rat, Int>> expect = {
      {Rat(1, 3), 2}, {Rat(2, 5), 2}, {Rat(3, 5), 2}, {Rat(11, 15), 4}, {Rat(14, 15), 4}};
  Int total = 0;
  for (size_t i = 0; i < expect.size(); ++i) {
    CHECK(profile.entries[i].minimal_norm == expect[i].first);
    CHECK(profile.entries[i].multiplicity == expect[i].second);
    total += profile.entries[i].multiplicity;
  }
  CHECK(total == profile.coset_count - 1);

  auto two = coset_profile(gram1x1(2));
  REQUIRE(two.entries.size() == 1);
  CHECK(two.entries[0].minimal_norm == Rat(1, 2));
  CHECK(two.entries[0].multiplicity == 1);

  CHECK(coset_profile(zn(2)).entries.empty());  // unimodular: M* = M
  CHECK_THROWS(coset_profile(Lattice::from_gram(rand_pd_gram(5))));  // rank cap
}

TEST_CASE("containment and coefficients") {
  Mat gens(2, 3);
  gens << 2, 0, 1, 0, 3, 1;
  Lattice l = Lattice::from_generators(gens);
  Row v = 2 * gens.row(0) - gens.row(1);
  CHECK(l.contains(v));
  Row outside(3);
  outside << 1, 0, 0;
  CHECK_FALSE(l.contains(outside));
  auto coeff = l.coefficients_of(v);
  REQUIRE(coeff.has_value());
  CHECK((*coeff)(0) == 2);
  CHECK((*coeff)(1) == -1);
}

TEST_CASE("canonical basis equality under regenerating transforms") {
  for (int trial = 0; trial < 10; ++trial) {
    Mat gens(3, 4);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 4; ++j) gens(i, j) = rand_rat(4, 3);
    try {
      Lattice l = Lattice::from_generators(gens);
      Mat u = rand_unimodular(3);
      CHECK(Lattice::from_generators(u * gens) == l);
    } catch (const std::invalid_argument&) {
      // dependent rows; skip
    }
  }
}
