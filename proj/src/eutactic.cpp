#include <latq/eutactic.hpp>
#include <latq/ratmat.hpp>

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace latq {

namespace {

Rat dot(const Row& a, const Row& b) { return (a * b.transpose())(0, 0); }

}  // namespace

bool certificate_valid(const Mat& gram, const EutacticCertificate& cert) {
  if (cert.coeffs.size() != cert.multiplicities.size()) return false;
  int r = static_cast<int>(gram.rows());
  Mat acc = Mat::Zero(r, r);
  for (size_t k = 0; k < cert.coeffs.size(); ++k) {
    if (cert.coeffs[k].cols() != r || cert.multiplicities[k] < 1) return false;
    acc += Rat(cert.multiplicities[k]) * (cert.coeffs[k].transpose() * cert.coeffs[k]);
  }
  return acc == Rat(cert.scale) * gram;
}

bool is_eutactic_star(const std::vector<Row>& vectors,
                      const std::vector<Row>& subspace_basis, const Rat& s) {
  if (subspace_basis.empty()) throw std::invalid_argument("is_eutactic_star: empty basis");
  int n = static_cast<int>(subspace_basis[0].cols());
  int r = static_cast<int>(subspace_basis.size());
  Mat b(r, n);
  for (int i = 0; i < r; ++i) b.row(i) = subspace_basis[i];
  Mat gb = b * b.transpose();
  Mat proj = b.transpose() * inverse(gb) * b;  // onto the span
  for (const Row& v : vectors) {
    if (v.cols() != n) throw std::invalid_argument("is_eutactic_star: dimension mismatch");
    if (v * proj != v) throw std::invalid_argument("is_eutactic_star: vector outside span");
  }
  Mat acc = Mat::Zero(r, r);
  for (const Row& v : vectors) {
    Col bv = b * v.transpose();
    acc += bv * bv.transpose();
  }
  return acc == s * gb;
}

bool pair_psd_filter(const Row& su, const Row& sv, const Rat& delta) {
  Rat lhs = (Rat(2) - dot(su, su)) * (Rat(2) - dot(sv, sv));
  return lhs >= delta * delta / 4;
}

namespace {

struct IlpSystem {
  std::vector<std::vector<long>> a;  // a[e][k]
  std::vector<long> b;               // rhs
};

// depth-first search with per-variable dynamic bounds and suffix-sum pruning;
// machine integers suffice: every quantity is bounded by max(b) <= s * max diag
struct IlpSearch {
  const IlpSystem& sys;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  bool exhausted = false;
  std::vector<long> ub;                       // static bounds, in search order
  std::vector<std::vector<long>> suffix_max;  // suffix_max[pos][e]
  std::vector<long> res;
  std::vector<long> value;
  std::vector<std::vector<char>> conflict;    // pairs that cannot both be positive
  std::vector<size_t> positive;

  IlpSearch(const IlpSystem& s, const std::vector<long>& bounds,
            std::vector<std::vector<char>> conf, std::uint64_t bud)
      : sys(s), budget(bud), ub(bounds), res(s.b), value(bounds.size(), 0),
        conflict(std::move(conf)) {
    size_t nv = ub.size(), ne = sys.b.size();
    suffix_max.assign(nv + 1, std::vector<long>(ne, 0));
    for (size_t pos = nv; pos-- > 0;) {
      for (size_t e = 0; e < ne; ++e) {
        long cap = std::min(sys.a[e][pos] * ub[pos], sys.b[e]);
        suffix_max[pos][e] = std::min(suffix_max[pos + 1][e] + cap, sys.b[e]);
      }
    }
  }

  bool dfs(size_t pos) {
    if (pos == ub.size()) {
      for (long r : res)
        if (r != 0) return false;
      return true;
    }
    long hi = ub[pos];
    for (size_t p : positive)
      if (conflict[p][pos]) {
        hi = 0;
        break;
      }
    for (size_t e = 0; e < sys.b.size(); ++e) {
      long c = sys.a[e][pos];
      if (c > 0) {
        long cap = res[e] / c;
        if (cap < hi) hi = cap;
      }
    }
    for (long v = hi; v >= 0; --v) {
      if (++nodes > budget) {
        exhausted = true;
        return false;
      }
      bool ok = true;
      for (size_t e = 0; e < sys.b.size(); ++e) {
        res[e] -= sys.a[e][pos] * v;
        if (res[e] > suffix_max[pos + 1][e]) ok = false;
      }
      value[pos] = v;
      if (v > 0) positive.push_back(pos);
      if (ok && dfs(pos + 1)) return true;
      if (v > 0) positive.pop_back();
      for (size_t e = 0; e < sys.b.size(); ++e) res[e] += sys.a[e][pos] * v;
      if (exhausted) return false;
    }
    return false;
  }
};

}  // namespace

SIntResult decide_s_integrable(const Lattice& L, const Int& s, std::uint64_t node_budget) {
  if (s < 1) throw std::invalid_argument("decide_s_integrable: s must be positive");
  if (L.rank() > 16) throw std::invalid_argument("decide_s_integrable: rank > 16");
  SIntResult result;
  const Mat& g = L.gram();
  int n = L.rank();
  if (!is_integral(Rat(s) * g)) {  // s*Gram integral is necessary
    result.outcome = SIntOutcome::not_integrable;
    return result;
  }

  Mat dual_gram = inverse(g);
  auto short_dual = enumerate_short(dual_gram, Rat(s));
  // antipodal representatives: first nonzero coefficient positive
  std::vector<std::vector<long>> reps;
  std::vector<Rat> rep_norm;
  for (auto& [y, norm] : short_dual) {
    for (long c : y) {
      if (c > 0) {
        reps.push_back(y);
        rep_norm.push_back(norm);
      }
      if (c != 0) break;
    }
  }

  // equations indexed by basis pairs i <= j, test vector w_i + w_j
  IlpSystem sys;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      std::vector<long> row(reps.size());
      for (size_t k = 0; k < reps.size(); ++k) {
        long c = reps[k][i] + reps[k][j];
        row[k] = c * c;
      }
      sys.a.push_back(std::move(row));
      Rat rhs = Rat(s) * (g(i, i) + 2 * g(i, j) + g(j, j));
      if (!mpz_fits_slong_p(rhs.get_num().get_mpz_t()))
        throw std::invalid_argument("decide_s_integrable: entries out of range");
      sys.b.push_back(rhs.get_num().get_si());
    }

  // static bounds; every dual vector hits some diagonal equation, so all finite
  std::vector<long> ub(reps.size());
  for (size_t k = 0; k < reps.size(); ++k) {
    bool bounded = false;
    long best = 0;
    for (size_t e = 0; e < sys.b.size(); ++e)
      if (sys.a[e][k] > 0) {
        long cap = sys.b[e] / sys.a[e][k];
        if (!bounded || cap < best) best = cap;
        bounded = true;
      }
    ub[k] = bounded ? best : 0;
    // w = u_k in the star inequality: x_k |u_k|^2 <= s
    Int cap = floor_int(Rat(s) / rep_norm[k]);
    if (cap < ub[k]) ub[k] = cap.get_si();
  }

  // two classes can both appear only if sI - G stays PSD on their pair
  std::vector<std::vector<char>> conflict(reps.size(),
                                          std::vector<char>(reps.size(), 0));
  {
    std::vector<Col> gd_y(reps.size());
    for (size_t k = 0; k < reps.size(); ++k) {
      Col y(n);
      for (int i = 0; i < n; ++i) y(i) = Rat(reps[k][i]);
      gd_y[k] = dual_gram * y;
    }
    for (size_t i = 0; i < reps.size(); ++i)
      for (size_t j = i + 1; j < reps.size(); ++j) {
        Rat off = 0;
        for (int t = 0; t < n; ++t) off += Rat(reps[i][t]) * gd_y[j](t);
        if ((Rat(s) - rep_norm[i]) * (Rat(s) - rep_norm[j]) < off * off)
          conflict[i][j] = conflict[j][i] = 1;
      }
  }

  // branch order: largest maximum coefficient first, ties by original index
  std::vector<size_t> order(reps.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<long> max_coeff(reps.size(), 0);
  for (size_t k = 0; k < reps.size(); ++k)
    for (size_t e = 0; e < sys.b.size(); ++e)
      if (sys.a[e][k] > max_coeff[k]) max_coeff[k] = sys.a[e][k];
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t x, size_t y) { return max_coeff[x] > max_coeff[y]; });

  IlpSystem ordered;
  ordered.b = sys.b;
  ordered.a.resize(sys.b.size());
  std::vector<long> oub(reps.size());
  for (size_t e = 0; e < sys.b.size(); ++e) {
    ordered.a[e].resize(reps.size());
    for (size_t k = 0; k < reps.size(); ++k) ordered.a[e][k] = sys.a[e][order[k]];
  }
  for (size_t k = 0; k < reps.size(); ++k) oub[k] = ub[order[k]];
  std::vector<std::vector<char>> oconf(reps.size(), std::vector<char>(reps.size(), 0));
  for (size_t i = 0; i < reps.size(); ++i)
    for (size_t j = 0; j < reps.size(); ++j) oconf[i][j] = conflict[order[i]][order[j]];

  IlpSearch search(ordered, oub, std::move(oconf), node_budget);
  bool found = search.dfs(0);
  result.nodes = search.nodes;
  if (search.exhausted) {
    result.outcome = SIntOutcome::budget_exhausted;
    return result;
  }
  if (!found) {
    result.outcome = SIntOutcome::not_integrable;
    return result;
  }

  EutacticCertificate cert;
  cert.scale = s;
  Mat dual_gens;
  if (L.has_vectors()) dual_gens = dual(L).generators();
  for (size_t k = 0; k < reps.size(); ++k) {
    if (search.value[k] == 0) continue;
    const auto& y = reps[order[k]];
    Row coeff(n);
    for (int i = 0; i < n; ++i) coeff(i) = Rat(y[i]);
    cert.coeffs.push_back(coeff);
    cert.multiplicities.push_back(search.value[k]);
    if (L.has_vectors()) cert.vectors.push_back(coeff * dual_gens);
  }
  if (!certificate_valid(g, cert))
    throw std::logic_error("decide_s_integrable: internal certificate check failed");
  result.outcome = SIntOutcome::integrable;
  result.certificate = std::move(cert);
  return result;
}

RefutationCertificate refute_2_integrability(const Lattice& L_big, const Lattice& M,
                                             const std::vector<int>& X) {
  if (!L_big.has_vectors()) throw std::invalid_argument("refute: need explicit coordinates");
  if (X.size() < 3) throw std::invalid_argument("refute: |X| >= 3 required");
  RefutationCertificate cert;
  cert.support = X;
  int n = L_big.ambient_dim();
  std::vector<bool> in_x(n, false);
  for (int c : X) {
    if (c < 1 || c > n) throw std::invalid_argument("refute: coordinate out of range");
    in_x[c - 1] = true;
  }

  Lattice N = orthogonal_complement(L_big, M);
  Mat b = N.generators();
  Mat gram_inv = inverse(N.gram());
  Mat proj = b.transpose() * gram_inv * b;

  // (1) minimum of N* exceeds 1
  if (!enumerate_short(gram_inv, Rat(1)).empty()) {
    cert.mode = "lemma-8.4-precondition-failed";
    cert.failed_precondition = 1;
    return cert;
  }

  auto roots_set = vectors_up_to(L_big, Rat(2));
  std::vector<Row> roots;
  for (const auto& v : roots_set.vectors)
    if (v.norm == 2) roots.push_back(v.coords);

  // (2) norm-<=2 dual vectors are projections of roots
  std::set<std::vector<Rat>> projected;
  for (const Row& r : roots) projected.insert(row_to_vector(r * proj));
  Mat dual_gens = gram_inv * b;
  for (auto& [y, norm] : enumerate_short(gram_inv, Rat(2))) {
    Row w = Row::Zero(n);
    for (int i = 0; i < N.rank(); ++i) w += Rat(y[i]) * dual_gens.row(i);
    if (!projected.count(row_to_vector(w))) {
      cert.mode = "lemma-8.4-precondition-failed";
      cert.failed_precondition = 2;
      return cert;
    }
  }

  // (3) roots supported inside X lie in N
  for (const Row& r : roots) {
    bool inside = true;
    for (int c = 0; c < n && inside; ++c)
      if (r(c) != 0 && !in_x[c]) inside = false;
    if (inside && !N.contains(r)) {
      cert.mode = "lemma-8.4-precondition-failed";
      cert.failed_precondition = 3;
      return cert;
    }
  }

  // all qualifying pairs must violate PSD; antipodal reps suffice (sign-invariant)
  std::vector<Row> reps;
  for (const Row& r : roots)
    for (int c = 0; c < n; ++c) {
      if (r(c) > 0) reps.push_back(r);
      if (r(c) != 0) break;
    }
  std::vector<Row> proj_reps(reps.size());
  std::vector<Rat> norms(reps.size());
  for (size_t i = 0; i < reps.size(); ++i) {
    proj_reps[i] = reps[i] * proj;
    norms[i] = dot(proj_reps[i], reps[i]);  // (pu, pu) = (pu, u)
  }
  for (size_t i = 0; i < reps.size(); ++i)
    for (size_t j = i + 1; j < reps.size(); ++j) {
      bool shared = false;
      for (int c = 0; c < n && !shared; ++c)
        if (in_x[c] && reps[i](c) != 0 && reps[j](c) != 0) shared = true;
      if (!shared) continue;
      if ((Rat(2) - norms[i]) * (Rat(2) - norms[j]) < Rat(1, 4)) continue;
      Rat off = dot(proj_reps[i], reps[j]);
      Mat g2(2, 2);
      g2 << Rat(2) - norms[i], -off, -off, Rat(2) - norms[j];
      ++cert.pairs_checked;
      if (is_positive_semidefinite(g2)) {  // 2I - G stayed PSD: no refutation
        cert.witness_pair = std::make_pair(reps[i], reps[j]);
        return cert;
      }
    }
  cert.refuted = true;
  cert.mode = "all-pairs-violate";
  return cert;
}

}  // namespace latq
