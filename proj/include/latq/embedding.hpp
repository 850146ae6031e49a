#pragma once

#include <latq/local.hpp>
#include <latq/rational.hpp>

#include <optional>
#include <set>

namespace latq {

// Feasibility of embedding into a unimodular lattice of the requested rank.
// rule records which corank case (1..4) decided it; on failure, the case that
// was tested together with the first failing place.
struct EmbeddingVerdict {
  bool feasible = false;
  int rule = 0;
  std::optional<Place> failing_place;
};

EmbeddingVerdict embed_unimodular_feasible(const Mat& g, int m);

// One-sided: feasible means an odd unimodular overlattice of rank m exists;
// infeasible only means the sufficient condition does not apply.
EmbeddingVerdict embed_odd_unimodular_feasible(const Mat& g, int m);

// Determinant-only sufficient condition for embedding into corank 2.
bool det_sufficient_condition(int n, const Int& det);

// Determinants in 1..27 for which the corank-2 determinant condition fails,
// i.e. the candidates for non-2-integrable rank-12 lattices.
std::set<long> rank12_exception_determinants();

// Representative diagonal Gram of the maximal Z_p-lattice with the given rank,
// determinant class and Hasse symbol (for p = 2: norm ideal Z_2 table).
Mat maximal_rep_gram(const Int& p, int n, const SquareClass& det_class, int hasse);

}  // namespace latq
