#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "test_helpers.hpp"

#include <latq/a15.hpp>
#include <latq/ratmat.hpp>
#include <latq/shortvec.hpp>

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <vector>

using namespace latq;
using namespace latq::testing;

namespace {

std::vector<int> rand_4subset() {
  std::vector<int> all(16);
  std::iota(all.begin(), all.end(), 1);
  std::shuffle(all.begin(), all.end(), rng());
  std::vector<int> I(all.begin(), all.begin() + 4);
  std::sort(I.begin(), I.end());
  return I;
}

long intersection_size(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return long(out.size());
}

std::array<long, 8> cell_counts(const std::vector<int>& I, const std::vector<int>& J,
                                const std::vector<int>& K) {
  std::array<long, 8> c{};
  for (int x = 1; x <= 16; ++x) {
    int a = std::binary_search(I.begin(), I.end(), x);
    int b = std::binary_search(J.begin(), J.end(), x);
    int d = std::binary_search(K.begin(), K.end(), x);
    ++c[4 * a + 2 * b + d];
  }
  return c;
}

std::vector<int> apply_perm(const std::vector<int>& sigma, const std::vector<int>& I) {
  std::vector<int> out;
  for (int x : I) out.push_back(sigma[x - 1]);
  std::sort(out.begin(), out.end());
  return out;
}

// does some sign choice (e1 t_I, e2 t_J, e3 t_K) realize the target Gram?
bool signs_realize(const TripleOrbit& o, const Mat& target) {
  Mat rows(3, 16);
  for (int s = 0; s < 3; ++s) rows.row(s) = t_vec(o.representative[s]);
  Mat g = rows * rows.transpose();
  for (int e2 : {1, -1})
    for (int e3 : {1, -1}) {
      // e1 fixed to +1: global sign is in the group
      Rat s12 = Rat(e2) * g(0, 1), s13 = Rat(e3) * g(0, 2), s23 = Rat(e2 * e3) * g(1, 2);
      if (s12 == target(0, 1) && s13 == target(0, 2) && s23 == target(1, 2)) return true;
    }
  return false;
}

}  // namespace

TEST_CASE("t_vec geometry") {
  Row t = t_vec({1, 2, 3, 4});
  REQUIRE(t.size() == 16);
  CHECK(t[0] == Rat(-3, 4));
  CHECK(t[5] == Rat(1, 4));
  for (int trial = 0; trial < 50; ++trial) {
    auto I = rand_4subset(), J = rand_4subset();
    Row ti = t_vec(I), tj = t_vec(J);
    CHECK(Rat((ti * ti.transpose())(0, 0)) == Rat(3));
    CHECK(Rat((ti * tj.transpose())(0, 0)) == Rat(-1 + intersection_size(I, J)));
  }
}

TEST_CASE("root lattices") {
  Mat a1 = build_An(1).gram();
  REQUIRE(a1.rows() == 1);
  CHECK(a1(0, 0) == Rat(2));
  Mat a2 = build_An(2).gram();
  CHECK(a2(0, 1) == Rat(-1));
  CHECK(determinant(a2) == Rat(3));
  CHECK(build_An(15).det() == Rat(16));
}

TEST_CASE("A15+ structure") {
  Lattice l = build_A15_plus();
  CHECK(l.rank() == 15);
  CHECK(l.det() == Rat(1));
  CHECK(parity(l) == Parity::odd);
  CHECK(minimum(l) == Rat(2));
  CHECK(l.contains(t_vec({13, 14, 15, 16})));
  CHECK(l.contains(t_vec(rand_4subset())));
  Lattice a15 = build_An(15);
  CHECK(index(l, a15) == 4);
}

TEST_CASE("norm-3 triple classification") {
  Mat target12(3, 3), target11(3, 3), diag3(3, 3);
  target12 << 3, 2, 0, 2, 3, 0, 0, 0, 3;
  target11 << 3, 2, 2, 2, 3, 2, 2, 2, 3;
  diag3 << 3, 0, 0, 0, 3, 0, 0, 0, 3;

  for (const Mat* target : {&target12, &target11, &diag3}) {
    auto orbits = classify_norm3_triples(*target);
    REQUIRE(orbits.size() == 2);
    CHECK(orbits[0].pattern != orbits[1].pattern);
    std::set<int> tags;
    for (const auto& o : orbits) {
      tags.insert(o.triple_intersection);
      // representative consistency
      CHECK(cell_counts(o.representative[0], o.representative[1], o.representative[2]) ==
            o.pattern);
      CHECK(o.pattern[7] == o.triple_intersection);
      CHECK(signs_realize(o, *target));
      // orbit invariant is stable under random relabelings of {1..16}
      for (int t = 0; t < 20; ++t) {
        std::vector<int> sigma(16);
        std::iota(sigma.begin(), sigma.end(), 1);
        std::shuffle(sigma.begin(), sigma.end(), rng());
        auto ci = cell_counts(apply_perm(sigma, o.representative[0]),
                              apply_perm(sigma, o.representative[1]),
                              apply_perm(sigma, o.representative[2]));
        CHECK(ci == o.pattern);
      }
    }
    if (target == &target12) CHECK(tags == std::set<int>{0, 1});
    if (target == &target11) CHECK(tags == std::set<int>{2, 3});
    if (target == &diag3) CHECK(tags == std::set<int>{0, 1});
  }
}

TEST_CASE("constructive permutation between equal-pattern triples") {
  // two triples with identical cell counts are related by relabeling: build
  // sigma cell-by-cell and check it carries one onto the other
  auto orbits = classify_norm3_triples([] {
    Mat t(3, 3);
    t << 3, 2, 0, 2, 3, 0, 0, 0, 3;
    return t;
  }());
  for (const auto& o : orbits) {
    // random relabeled copy
    std::vector<int> sigma(16);
    std::iota(sigma.begin(), sigma.end(), 1);
    std::shuffle(sigma.begin(), sigma.end(), rng());
    std::array<std::vector<int>, 3> other = {apply_perm(sigma, o.representative[0]),
                                             apply_perm(sigma, o.representative[1]),
                                             apply_perm(sigma, o.representative[2])};
    // build tau cell-by-cell
    std::array<std::vector<int>, 8> cells_a, cells_b;
    for (int x = 1; x <= 16; ++x) {
      auto idx = [&](const std::array<std::vector<int>, 3>& tr) {
        int a = std::binary_search(tr[0].begin(), tr[0].end(), x);
        int b = std::binary_search(tr[1].begin(), tr[1].end(), x);
        int c = std::binary_search(tr[2].begin(), tr[2].end(), x);
        return 4 * a + 2 * b + c;
      };
      cells_a[idx(o.representative)].push_back(x);
      cells_b[idx(other)].push_back(x);
    }
    std::vector<int> tau(16);
    for (int c = 0; c < 8; ++c) {
      REQUIRE(cells_a[c].size() == cells_b[c].size());
      for (size_t k = 0; k < cells_a[c].size(); ++k) tau[cells_a[c][k] - 1] = cells_b[c][k];
    }
    for (int s = 0; s < 3; ++s) CHECK(apply_perm(tau, o.representative[s]) == other[s]);
  }
}

TEST_CASE("named lattices") {
  auto named = named_lattices();
  REQUIRE(named.size() == 4);
  CHECK(named.at("N").det() == Rat(15));
  CHECK(named.at("N'").det() == Rat(15));
  CHECK(named.at("N''").det() == Rat(7));
  CHECK(named.at("N'''").det() == Rat(7));
  for (const auto& [name, L] : named) {
    CHECK(L.rank() == 12);
    CHECK(minimum(L) == Rat(2));
    CHECK(minimum(dual(L)) > Rat(1));
  }
  CHECK(kissing_number(named.at("N")) == 64);
  CHECK(kissing_number(named.at("N'")) == 80);
}

TEST_CASE("projection to the complement") {
  Lattice big = build_A15_plus();
  auto named = named_lattices();
  const Lattice& N = named.at("N");
  Mat nb = N.canonical_basis();
  Mat mgens(3, 16);
  mgens.row(0) = t_vec({1, 2, 3, 4});
  mgens.row(1) = t_vec({1, 2, 3, 5});
  mgens.row(2) = t_vec({1, 6, 7, 8});
  // rho fixes N and kills M
  for (long i = 0; i < 3; ++i) {
    Row z = project_to_complement(big, N, Row(mgens.row(i)));
    CHECK(Rat((z * z.transpose())(0, 0)) == Rat(0));
  }
  for (int t = 0; t < 5; ++t) {
    Row v = Row(nb.row(rand_int(nb.rows())));
    Row p = project_to_complement(big, N, v);
    CHECK(p == v);
  }
  // Prop 10.1 sample values
  Row e1me16 = Row::Zero(16);
  e1me16[0] = 1;
  e1me16[15] = -1;
  Row r1 = project_to_complement(big, N, e1me16);
  CHECK(Rat((r1 * r1.transpose())(0, 0)) == Rat(19, 15));
  Row e9me16 = Row::Zero(16);
  e9me16[8] = 1;
  e9me16[15] = -1;
  Row r9 = project_to_complement(big, N, e9me16);
  CHECK(r9 == e9me16);  // e9 - e16 already lies in N
}

TEST_CASE("minimality") {
  auto named = named_lattices();
  CHECK(check_minimality(named.at("N")));
  CHECK(check_minimality(named.at("N'")));
  CHECK(!check_minimality(Lattice::from_gram(Mat::Identity(12, 12))));
}

TEST_CASE("pair_types") {
  std::vector<std::vector<int>> partition = {{1, 2, 3}, {4, 5}, {6}, {7, 8}};
  Row u = Row::Zero(8), v = Row::Zero(8);
  u[0] = 1;
  u[3] = -1;  // supported in blocks 1 and 2
  v[5] = 1;
  v[6] = 2;  // blocks 3 and 4
  auto pt = pair_types(partition, u, v);
  CHECK(pt.type_u == std::set<int>{1, 2});
  CHECK(pt.type_v == std::set<int>{3, 4});
  CHECK(pt.type_uv.empty());  // no common support
  auto same = pair_types(partition, u, u);
  CHECK(same.type_uv == std::set<int>{1, 2});
  Row w = Row::Zero(8);
  w[0] = 1;  // shares coordinate 1 with u
  CHECK(pair_types(partition, u, w).type_uv == std::set<int>{1});
}
