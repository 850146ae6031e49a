#include <latq/intmat.hpp>
#include <latq/ratmat.hpp>

#include <algorithm>
#include <stdexcept>

namespace latq {

Rat determinant(const Mat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
  auto [z, d] = clear_denominators(m);
  Int num = det_bareiss(std::move(z));
  Int dn;
  mpz_pow_ui(dn.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(m.rows()));
  Rat r(num, dn);
  r.canonicalize();
  return r;
}

std::vector<Rat> leading_minors(const Mat& m) {
  std::vector<Rat> out;
  for (Eigen::Index k = 1; k <= m.rows(); ++k) out.push_back(determinant(m.topLeftCorner(k, k)));
  return out;
}

bool is_positive_semidefinite(const Mat& m) {
  if (!is_symmetric(m)) throw std::invalid_argument("psd: matrix not symmetric");
  Mat a = m;
  int n = static_cast<int>(a.rows());
  std::vector<int> live;
  for (int i = 0; i < n; ++i) live.push_back(i);
  while (!live.empty()) {
    int k = live.front();
    Rat piv = a(k, k);
    if (piv < 0) return false;
    if (piv == 0) {
      for (int j : live)
        if (a(k, j) != 0) return false;
      live.erase(live.begin());
      continue;
    }
    live.erase(live.begin());
    for (int i : live)
      for (int j : live) a(i, j) -= a(i, k) * a(k, j) / piv;
  }
  return true;
}

bool is_positive_definite(const Mat& m) {
  if (!is_symmetric(m)) throw std::invalid_argument("pd: matrix not symmetric");
  for (const Rat& d : leading_minors(m))
    if (d <= 0) return false;
  return true;
}

Mat inverse(const Mat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
  int n = static_cast<int>(m.rows());
  Mat a = m;
  Mat inv = Mat::Identity(n, n);
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i)
      if (a(i, c) != 0) { piv = i; break; }
    if (piv < 0) throw std::invalid_argument("inverse: singular matrix");
    a.row(c).swap(a.row(piv));
    inv.row(c).swap(inv.row(piv));
    Rat p = a(c, c);
    a.row(c) /= p;
    inv.row(c) /= p;
    for (int i = 0; i < n; ++i) {
      if (i == c || a(i, c) == 0) continue;
      Rat f = a(i, c);
      a.row(i) -= f * a.row(c);
      inv.row(i) -= f * inv.row(c);
    }
  }
  return inv;
}

std::vector<Rat> sym_diagonalize(const Mat& m) {
  if (!is_symmetric(m)) throw std::invalid_argument("diagonalize: matrix not symmetric");
  Mat a = m;
  int n = static_cast<int>(a.rows());
  std::vector<Rat> diag;
  std::vector<int> live;
  for (int i = 0; i < n; ++i) live.push_back(i);
  while (!live.empty()) {
    int k = -1;
    for (int i : live)
      if (a(i, i) != 0) { k = i; break; }
    if (k < 0) {
      // all diagonal zero: create a nonzero pivot from an off-diagonal entry
      int i0 = -1, j0 = -1;
      for (size_t p = 0; p < live.size() && i0 < 0; ++p)
        for (size_t q = p + 1; q < live.size(); ++q)
          if (a(live[p], live[q]) != 0) { i0 = live[p]; j0 = live[q]; break; }
      if (i0 < 0) throw std::invalid_argument("diagonalize: degenerate form");
      for (int j : live) a(i0, j) += a(j0, j);
      for (int i : live) a(i, i0) += a(i, j0);
      k = i0;
    }
    Rat piv = a(k, k);
    diag.push_back(piv);
    live.erase(std::find(live.begin(), live.end(), k));
    for (int i : live)
      for (int j : live) a(i, j) -= a(i, k) * a(k, j) / piv;
    for (int i : live) { a(i, k) = 0; a(k, i) = 0; }
  }
  return diag;
}

}  // namespace latq
