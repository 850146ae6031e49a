#pragma once

#include <latq/lattice.hpp>

#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace latq {

// t_I = (1/4)e - sum_{i in I} e_i for a 4-subset I of {1..16} (1-based)
Row t_vec(const std::vector<int>& I);

Lattice build_An(int n);
Lattice build_A15_plus();

struct TripleOrbit {
  std::array<std::vector<int>, 3> representative;  // (I, J, K), 1-based, sorted
  int triple_intersection;                         // |I ∩ J ∩ K|
  std::array<long, 8> pattern;  // cell counts n_abc, index = 4a+2b+c (membership in I,J,K)
};

// sublattices of A15+ generated by three norm-3 vectors with the given Gram,
// up to <S16, -1>; one representative per orbit
std::vector<TripleOrbit> classify_norm3_triples(const Mat& target);

// keys "N", "N'", "N''", "N'''"
std::map<std::string, Lattice> named_lattices();

Row project_to_complement(const Lattice& L_big, const Lattice& N, const Row& v);

bool check_minimality(const Lattice& N);

struct PairTypes {
  std::set<int> type_u, type_v, type_uv;  // block indices, 1-based
};
PairTypes pair_types(const std::vector<std::vector<int>>& partition, const Row& u, const Row& v);

}  // namespace latq
