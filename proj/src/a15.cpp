#include <latq/a15.hpp>
#include <latq/intmat.hpp>
#include <latq/ratmat.hpp>
#include <latq/shortvec.hpp>

#include <algorithm>
#include <stdexcept>

namespace latq {

Row t_vec(const std::vector<int>& I) {
  if (I.size() != 4) throw std::invalid_argument("t_vec: need a 4-subset");
  Row v = Row::Constant(16, Rat(1, 4));
  for (int i : I) {
    if (i < 1 || i > 16 || v(i - 1) != Rat(1, 4))
      throw std::invalid_argument("t_vec: bad index set");
    v(i - 1) = Rat(-3, 4);
  }
  return v;
}

Lattice build_An(int n) {
  if (n < 1 || n > 16) throw std::invalid_argument("build_An: need 1 <= n <= 16");
  Mat gens = Mat::Zero(n, n + 1);
  for (int i = 0; i < n; ++i) {
    gens(i, i) = 1;
    gens(i, i + 1) = -1;
  }
  return Lattice::from_generators(gens);
}

Lattice build_A15_plus() {
  Mat rows = Mat::Zero(16, 16);
  for (int i = 0; i < 15; ++i) {
    rows(i, i) = 1;
    rows(i, i + 1) = -1;
  }
  rows.row(15) = t_vec({13, 14, 15, 16});
  return Lattice::from_spanning_rows(rows);
}

namespace {

// cell index of point p: 4[p in I] + 2[p in J] + [p in K]
std::array<long, 8> cell_counts(const std::array<unsigned, 3>& masks) {
  std::array<long, 8> c{};
  for (int p = 0; p < 16; ++p) {
    int idx = 0;
    for (int s = 0; s < 3; ++s)
      if (masks[s] >> p & 1u) idx |= 4 >> s;
    ++c[idx];
  }
  return c;
}

std::vector<int> mask_to_set(unsigned m) {
  std::vector<int> out;
  for (int p = 0; p < 16; ++p)
    if (m >> p & 1u) out.push_back(p + 1);
  return out;
}

// canonical orbit representative: relabel points cell by cell, largest cell
// index first, so equal patterns yield identical triples
std::array<unsigned, 3> canonical_triple(const std::array<long, 8>& pattern) {
  std::array<unsigned, 3> masks{};
  int next = 0;
  for (int idx = 7; idx >= 0; --idx)
    for (long k = 0; k < pattern[idx]; ++k, ++next)
      for (int s = 0; s < 3; ++s)
        if (idx & (4 >> s)) masks[s] |= 1u << next;
  return masks;
}

}  // namespace

std::vector<TripleOrbit> classify_norm3_triples(const Mat& target) {
  if (target.rows() != 3 || target.cols() != 3 || !is_symmetric(target))
    throw std::invalid_argument("classify: target must be symmetric 3x3");
  for (int i = 0; i < 3; ++i)
    if (target(i, i) != 3) throw std::invalid_argument("classify: diagonal must be 3");
  if (!is_positive_definite(target)) throw std::invalid_argument("classify: target must be PD");
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j && !is_integer(target(i, j)))
        throw std::invalid_argument("classify: off-diagonal entries must be integers");

  // sign normalization: generators eps_i * t_{I_i}, eps_1 = +1 (global -1 is in Aut);
  // each legal sign choice pins the three intersection sizes
  std::set<std::array<int, 3>> size_triples;
  long g12 = target(0, 1).get_num().get_si();
  long g13 = target(0, 2).get_num().get_si();
  long g23 = target(1, 2).get_num().get_si();
  for (int e2 : {1, -1})
    for (int e3 : {1, -1}) {
      long s12 = e2 * g12 + 1, s13 = e3 * g13 + 1, s23 = e2 * e3 * g23 + 1;
      if (s12 < 0 || s12 > 4 || s13 < 0 || s13 > 4 || s23 < 0 || s23 > 4) continue;
      size_triples.insert({static_cast<int>(s12), static_cast<int>(s13), static_cast<int>(s23)});
    }
  if (size_triples.empty()) throw std::invalid_argument("classify: target not realizable");

  std::vector<unsigned> subsets;  // all 4-subset bitmasks of {0..15}
  for (unsigned m = 0; m < (1u << 16); ++m)
    if (__builtin_popcount(m) == 4) subsets.push_back(m);

  // I fixed to {1,2,3,4}: S16 is transitive on 4-subsets
  unsigned i_mask = 0xF;
  std::map<std::array<long, 8>, TripleOrbit> orbits;
  for (const auto& [s12, s13, s23] : size_triples) {
    for (unsigned j_mask : subsets) {
      if (__builtin_popcount(i_mask & j_mask) != s12) continue;
      for (unsigned k_mask : subsets) {
        if (__builtin_popcount(i_mask & k_mask) != s13) continue;
        if (__builtin_popcount(j_mask & k_mask) != s23) continue;
        auto pattern = cell_counts({i_mask, j_mask, k_mask});
        if (orbits.count(pattern)) continue;
        TripleOrbit orb;
        auto canon = canonical_triple(pattern);
        for (int s = 0; s < 3; ++s) orb.representative[s] = mask_to_set(canon[s]);
        orb.triple_intersection = __builtin_popcount(i_mask & j_mask & k_mask);
        orb.pattern = pattern;
        orbits.emplace(pattern, std::move(orb));
      }
    }
  }
  std::vector<TripleOrbit> out;
  for (auto& [pat, orb] : orbits) out.push_back(std::move(orb));
  return out;
}

std::map<std::string, Lattice> named_lattices() {
  Lattice big = build_A15_plus();
  Row a = t_vec({1, 2, 3, 4});
  Row b = t_vec({1, 2, 3, 5});
  Row c = t_vec({1, 6, 7, 8});
  Row cp = t_vec({4, 5, 6, 7});
  Row cpp = t_vec({1, 2, 4, 5});
  Row cppp = t_vec({1, 2, 3, 6});
  auto complement = [&](const Row& third) {
    Mat gens(3, 16);
    gens.row(0) = a;
    gens.row(1) = b;
    gens.row(2) = third;
    return orthogonal_complement(big, Lattice::from_generators(gens));
  };
  std::map<std::string, Lattice> out;
  out.emplace("N", complement(c));
  out.emplace("N'", complement(cp));
  out.emplace("N''", complement(cpp));
  out.emplace("N'''", complement(cppp));
  return out;
}

Row project_to_complement(const Lattice& L_big, const Lattice& N, const Row& v) {
  if (!L_big.contains(v)) throw std::invalid_argument("project: v outside the lattice");
  const Mat& b = N.generators();
  return ((v * b.transpose()) * inverse(b * b.transpose())) * b;
}

namespace {

int rational_rank(const std::vector<Row>& rows) {
  if (rows.empty()) return 0;
  Mat m(static_cast<int>(rows.size()), rows[0].cols());
  for (size_t i = 0; i < rows.size(); ++i) m.row(static_cast<int>(i)) = rows[i];
  auto [z, d] = clear_denominators(m);
  return hnf(z).rows;
}

}  // namespace

bool check_minimality(const Lattice& N) {
  if (!N.has_vectors()) throw std::invalid_argument("check_minimality: need coordinates");
  Mat dual_gram = inverse(N.gram());
  if (!enumerate_short(dual_gram, Rat(1)).empty()) return false;  // dual minimum <= 1

  // connected components of the norm-<=3 vectors under non-orthogonality
  auto sv = vectors_up_to(N, Rat(3));
  std::vector<Row> reps;
  for (const auto& v : sv.vectors)
    for (int c = 0; c < v.coords.cols(); ++c) {
      if (v.coords(c) > 0) reps.push_back(v.coords);
      if (v.coords(c) != 0) break;
    }
  int m = static_cast<int>(reps.size());
  std::vector<int> comp(m, -1);
  int ncomp = 0;
  for (int i = 0; i < m; ++i) {
    if (comp[i] >= 0) continue;
    std::vector<int> stack{i};
    comp[i] = ncomp;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y = 0; y < m; ++y)
        if (comp[y] < 0 && (reps[x] * reps[y].transpose())(0, 0) != 0) {
          comp[y] = ncomp;
          stack.push_back(y);
        }
    }
    ++ncomp;
  }
  for (int c = 0; c < ncomp; ++c) {
    std::vector<Row> members;
    for (int i = 0; i < m; ++i)
      if (comp[i] == c) members.push_back(reps[i]);
    if (rational_rank(members) >= N.rank() - 5) return true;
  }
  return false;
}

PairTypes pair_types(const std::vector<std::vector<int>>& partition, const Row& u, const Row& v) {
  PairTypes t;
  for (size_t b = 0; b < partition.size(); ++b) {
    bool hit_u = false, hit_v = false, hit_uv = false;
    for (int c : partition[b]) {
      bool cu = u(c - 1) != 0, cv = v(c - 1) != 0;
      hit_u |= cu;
      hit_v |= cv;
      hit_uv |= cu && cv;
    }
    int idx = static_cast<int>(b) + 1;
    if (hit_u) t.type_u.insert(idx);
    if (hit_v) t.type_v.insert(idx);
    if (hit_uv) t.type_uv.insert(idx);
  }
  return t;
}

}  // namespace latq
