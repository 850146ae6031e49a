#include <latq/intmat.hpp>
#include <latq/lattice.hpp>
#include <latq/ratmat.hpp>
#include <latq/shortvec.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>

namespace latq {

Lattice Lattice::from_generators(const Mat& gens) {
  Lattice l;
  l.gens_ = gens;
  l.gram_ = gens * gens.transpose();
  l.has_vectors_ = true;
  if (!is_positive_definite(l.gram_))
    throw std::invalid_argument("Lattice: generator rows are linearly dependent");
  return l;
}

Lattice Lattice::from_spanning_rows(const Mat& rows) {
  auto [z, d] = clear_denominators(rows);
  ZMat h = hnf(std::move(z));
  return from_generators(to_rational(h, d));
}

Lattice Lattice::from_gram(const Mat& gram) {
  if (!is_symmetric(gram)) throw std::invalid_argument("from_gram: not symmetric");
  if (!latq::is_integral(gram)) throw std::invalid_argument("from_gram: not integral");
  if (!is_positive_definite(gram)) throw std::invalid_argument("from_gram: not positive definite");
  if (gram == Mat(Mat::Identity(gram.rows(), gram.cols())))
    return from_generators(Mat::Identity(gram.rows(), gram.cols()));
  return from_gram_unchecked(gram);
}

Lattice Lattice::from_gram_unchecked(const Mat& gram) {
  if (!is_positive_definite(gram)) throw std::invalid_argument("from_gram: not positive definite");
  Lattice l;
  l.gram_ = gram;
  l.has_vectors_ = false;
  return l;
}

const Mat& Lattice::generators() const {
  if (!has_vectors_) throw std::logic_error("Lattice: Gram-only, no generator vectors");
  return gens_;
}

Rat Lattice::det() const { return determinant(gram_); }

Mat Lattice::canonical_basis() const {
  auto [z, d] = clear_denominators(generators());
  return to_rational(hnf(std::move(z)), d);
}

bool Lattice::operator==(const Lattice& o) const {
  if (has_vectors_ != o.has_vectors_) return false;
  if (!has_vectors_) return gram_ == o.gram_;
  if (ambient_dim() != o.ambient_dim() || rank() != o.rank()) return false;
  return canonical_basis() == o.canonical_basis();
}

std::optional<Row> Lattice::coefficients_of(const Row& v) const {
  Row c = v * generators().transpose() * inverse(gram_);
  if (Row(c * generators()) != v) return std::nullopt;
  return c;
}

bool Lattice::contains(const Row& v) const {
  auto c = coefficients_of(v);
  if (!c) return false;
  for (Eigen::Index j = 0; j < c->cols(); ++j)
    if (!is_integer((*c)(j))) return false;
  return true;
}

bool Lattice::contains_lattice(const Lattice& m) const {
  for (Eigen::Index i = 0; i < m.generators().rows(); ++i)
    if (!contains(m.generators().row(i))) return false;
  return true;
}

Lattice dual(const Lattice& l) {
  Mat ginv = inverse(l.gram());
  if (l.has_vectors()) return Lattice::from_generators(ginv * l.generators());
  return Lattice::from_gram_unchecked(ginv);
}

Lattice orthogonal_complement(const Lattice& l, const Lattice& m) {
  if (!l.contains_lattice(m))
    throw std::invalid_argument("orthogonal_complement: M is not a sublattice of L");
  Mat a = l.generators() * m.generators().transpose();
  auto [z, d] = clear_denominators(a);
  ZMat k = kernel(z);
  Mat coeffs = to_rational(k);
  return Lattice::from_generators(coeffs * l.generators());
}

Lattice primitive_closure(const Lattice& l, const Lattice& m) {
  if (!l.contains_lattice(m))
    throw std::invalid_argument("primitive_closure: M is not a sublattice of L");
  int r = l.rank();
  Mat coeffs(m.rank(), r);
  for (int i = 0; i < m.rank(); ++i) coeffs.row(i) = *l.coefficients_of(m.generators().row(i));
  auto [c, cd] = clear_denominators(coeffs);
  // vectors orthogonal (as linear functionals) to the row space of coeffs
  ZMat ct(c.cols, c.rows);
  for (int i = 0; i < c.rows; ++i)
    for (int j = 0; j < c.cols; ++j) ct(j, i) = c(i, j);
  ZMat ann = kernel(ct);  // rows span {y : coeffs * y^T = 0}
  ZMat annt(ann.cols, ann.rows);
  for (int i = 0; i < ann.rows; ++i)
    for (int j = 0; j < ann.cols; ++j) annt(j, i) = ann(i, j);
  ZMat sat = kernel(annt);  // saturation of the row space of coeffs
  return Lattice::from_generators(to_rational(sat) * l.generators());
}

bool is_primitive(const Lattice& l, const Lattice& m) { return primitive_closure(l, m) == m; }

Int index(const Lattice& m, const Lattice& n) {
  if (m.rank() != n.rank()) throw std::invalid_argument("index: ranks differ");
  Mat coeffs(n.rank(), m.rank());
  for (int i = 0; i < n.rank(); ++i) {
    auto c = m.coefficients_of(n.generators().row(i));
    if (!c) throw std::invalid_argument("index: N not contained in the span of M");
    coeffs.row(i) = *c;
  }
  if (!latq::is_integral(coeffs)) throw std::invalid_argument("index: N is not a sublattice of M");
  Rat d = determinant(coeffs);
  return abs(d.get_num());
}

Parity parity(const Lattice& l) {
  if (!l.is_integral()) throw std::invalid_argument("parity: lattice is not integral");
  for (int i = 0; i < l.rank(); ++i)
    if (l.gram()(i, i).get_num() % 2 != 0) return Parity::odd;
  return Parity::even;
}

Lattice direct_sum(const Lattice& a, const Lattice& b) {
  if (a.has_vectors() && b.has_vectors()) {
    int m = a.ambient_dim() + b.ambient_dim();
    Mat gens = Mat::Zero(a.rank() + b.rank(), m);
    gens.topLeftCorner(a.rank(), a.ambient_dim()) = a.generators();
    gens.bottomRightCorner(b.rank(), b.ambient_dim()) = b.generators();
    return Lattice::from_generators(gens);
  }
  Mat g = Mat::Zero(a.rank() + b.rank(), a.rank() + b.rank());
  g.topLeftCorner(a.rank(), a.rank()) = a.gram();
  g.bottomRightCorner(b.rank(), b.rank()) = b.gram();
  return Lattice::from_gram_unchecked(g);
}

CosetProfile coset_profile(const Lattice& m, int max_rank) {
  if (!m.is_integral()) throw std::invalid_argument("coset_profile: lattice is not integral");
  if (m.rank() > max_rank) throw std::invalid_argument("coset_profile: rank beyond configured bound");

  auto [g, one] = clear_denominators(m.gram());
  ZMat left;
  std::vector<Int> diag;
  smith(g, left, diag);

  Int total = abs(det_bareiss(g));
  CosetProfile prof;
  prof.coset_count = total;
  if (total == 1) return prof;

  int r = m.rank();
  Mat dual_gram = inverse(m.gram());
  // coset key of a dual-basis coefficient row y: (L y^T) mod diag
  auto key_of = [&](const std::vector<long>& y) {
    std::vector<Int> key(r);
    for (int i = 0; i < r; ++i) {
      Int acc = 0;
      for (int j = 0; j < r; ++j) acc += left(i, j) * Int(y[j]);
      if (diag[i] != 0) {
        mpz_fdiv_r(key[i].get_mpz_t(), acc.get_mpz_t(), diag[i].get_mpz_t());
      } else {
        key[i] = acc;
      }
    }
    return key;
  };

  std::map<std::vector<Int>, std::pair<Rat, std::vector<long>>> best;  // coset -> (min norm, coeffs)
  Rat bound = 1;
  while (static_cast<Int>(best.size()) < total - 1) {
    bound *= 2;
    best.clear();
    for (auto& [y, norm] : enumerate_short(dual_gram, bound)) {
      auto key = key_of(y);
      bool zero_coset = std::all_of(key.begin(), key.end(), [](const Int& k) { return k == 0; });
      if (zero_coset) continue;
      auto it = best.find(key);
      if (it == best.end() || norm < it->second.first) best[key] = {norm, y};
    }
  }

  std::map<Rat, std::pair<std::vector<long>, Int>> grouped;  // min norm -> (rep coeffs, count)
  for (auto& [key, val] : best) {
    auto it = grouped.find(val.first);
    if (it == grouped.end())
      grouped[val.first] = {val.second, 1};
    else
      it->second.second += 1;
  }
  Mat dual_basis = m.has_vectors() ? Mat(inverse(m.gram()) * m.generators())
                                   : Mat(Mat::Identity(r, r));
  for (auto& [norm, val] : grouped) {
    CosetProfile::Entry e;
    Row c(r);
    for (int i = 0; i < r; ++i) c(i) = Rat(val.first[i]);
    e.representative = m.has_vectors() ? Row(c * dual_basis) : c;
    e.minimal_norm = norm;
    e.multiplicity = val.second;
    prof.entries.push_back(std::move(e));
  }
  return prof;
}

}  // namespace latq
