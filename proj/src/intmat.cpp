#include <latq/intmat.hpp>

#include <algorithm>
#include <stdexcept>

namespace latq {

std::pair<ZMat, Int> clear_denominators(const Mat& m) {
  Int d = denominator_lcm(m);
  ZMat z(static_cast<int>(m.rows()), static_cast<int>(m.cols()));
  for (int i = 0; i < z.rows; ++i)
    for (int j = 0; j < z.cols; ++j) {
      Rat s = m(i, j) * Rat(d);
      if (!is_integer(s)) throw std::logic_error("clear_denominators: lcm failed");
      z(i, j) = s.get_num();
    }
  return {z, d};
}

Mat to_rational(const ZMat& z, const Int& denom) {
  Mat m(z.rows, z.cols);
  for (int i = 0; i < z.rows; ++i)
    for (int j = 0; j < z.cols; ++j) {
      Rat r(z(i, j), denom);
      r.canonicalize();
      m(i, j) = r;
    }
  return m;
}

Int det_bareiss(ZMat m) {
  if (m.rows != m.cols) throw std::invalid_argument("det: matrix not square");
  int n = m.rows;
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m(k, k) == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (m(i, k) != 0) { piv = i; break; }
      if (piv < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(m(k, j), m(piv, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m(k, k);
  }
  return sign > 0 ? m(n - 1, n - 1) : Int(-m(n - 1, n - 1));
}

namespace {

// Reduces column c of rows [t, rows) to a single nonzero entry at row t via
// unimodular row operations; ops mirrored onto U when given. Returns false if
// the column is zero below t.
bool pivot_column(ZMat& m, ZMat* U, int t, int c) {
  auto rowop = [&](int dst, int src, const Int& q) {
    for (int j = 0; j < m.cols; ++j) m(dst, j) -= q * m(src, j);
    if (U)
      for (int j = 0; j < U->cols; ++j) (*U)(dst, j) -= q * (*U)(src, j);
  };
  auto rowswap = [&](int i1, int i2) {
    if (i1 == i2) return;
    for (int j = 0; j < m.cols; ++j) std::swap(m(i1, j), m(i2, j));
    if (U)
      for (int j = 0; j < U->cols; ++j) std::swap((*U)(i1, j), (*U)(i2, j));
  };
  for (;;) {
    int best = -1;
    for (int i = t; i < m.rows; ++i)
      if (m(i, c) != 0 && (best < 0 || cmp(abs(m(i, c)), abs(m(best, c))) < 0)) best = i;
    if (best < 0) return false;
    rowswap(t, best);
    bool clean = true;
    for (int i = t + 1; i < m.rows; ++i) {
      if (m(i, c) == 0) continue;
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), m(i, c).get_mpz_t(), m(t, c).get_mpz_t());
      rowop(i, t, q);
      if (m(i, c) != 0) clean = false;
    }
    if (clean) break;
  }
  if (m(t, c) < 0) {
    for (int j = 0; j < m.cols; ++j) m(t, j) = -m(t, j);
    if (U)
      for (int j = 0; j < U->cols; ++j) (*U)(t, j) = -(*U)(t, j);
  }
  return true;
}

void hnf_in_place(ZMat& m, ZMat* U) {
  int t = 0;
  for (int c = 0; c < m.cols && t < m.rows; ++c) {
    if (!pivot_column(m, U, t, c)) continue;
    for (int i = 0; i < t; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), m(i, c).get_mpz_t(), m(t, c).get_mpz_t());
      if (q == 0) continue;
      for (int j = 0; j < m.cols; ++j) m(i, j) -= q * m(t, j);
      if (U)
        for (int j = 0; j < U->cols; ++j) (*U)(i, j) -= q * (*U)(t, j);
    }
    ++t;
  }
}

}  // namespace

ZMat hnf(ZMat m) {
  hnf_in_place(m, nullptr);
  int rank = 0;
  for (int i = 0; i < m.rows; ++i) {
    bool nz = false;
    for (int j = 0; j < m.cols; ++j)
      if (m(i, j) != 0) { nz = true; break; }
    if (nz) ++rank;
  }
  ZMat h(rank, m.cols);
  int t = 0;
  for (int i = 0; i < m.rows; ++i) {
    bool nz = false;
    for (int j = 0; j < m.cols; ++j)
      if (m(i, j) != 0) { nz = true; break; }
    if (!nz) continue;
    for (int j = 0; j < m.cols; ++j) h(t, j) = m(i, j);
    ++t;
  }
  return h;
}

ZMat kernel(const ZMat& A) {
  ZMat m = A;
  ZMat U(A.rows, A.rows);
  for (int i = 0; i < A.rows; ++i) U(i, i) = 1;
  hnf_in_place(m, &U);
  std::vector<int> zero_rows;
  for (int i = 0; i < m.rows; ++i) {
    bool nz = false;
    for (int j = 0; j < m.cols; ++j)
      if (m(i, j) != 0) { nz = true; break; }
    if (!nz) zero_rows.push_back(i);
  }
  ZMat K(static_cast<int>(zero_rows.size()), A.rows);
  for (size_t r = 0; r < zero_rows.size(); ++r)
    for (int j = 0; j < A.rows; ++j) K(static_cast<int>(r), j) = U(zero_rows[r], j);
  return hnf(std::move(K));
}

void smith(ZMat A, ZMat& L, std::vector<Int>& d) {
  if (A.rows != A.cols) throw std::invalid_argument("smith: matrix not square");
  int n = A.rows;
  L = ZMat(n, n);
  for (int i = 0; i < n; ++i) L(i, i) = 1;

  auto rowop = [&](int dst, int src, const Int& q) {
    for (int j = 0; j < n; ++j) A(dst, j) -= q * A(src, j);
    for (int j = 0; j < n; ++j) L(dst, j) -= q * L(src, j);
  };
  auto colop = [&](int dst, int src, const Int& q) {
    for (int i = 0; i < n; ++i) A(i, dst) -= q * A(i, src);
  };
  auto rowswap = [&](int i1, int i2) {
    if (i1 == i2) return;
    for (int j = 0; j < n; ++j) std::swap(A(i1, j), A(i2, j));
    for (int j = 0; j < n; ++j) std::swap(L(i1, j), L(i2, j));
  };
  auto colswap = [&](int j1, int j2) {
    if (j1 == j2) return;
    for (int i = 0; i < n; ++i) std::swap(A(i, j1), A(i, j2));
  };

  for (int t = 0; t < n; ++t) {
    // move a minimal nonzero entry of the trailing block to (t, t)
    for (;;) {
      int bi = -1, bj = -1;
      for (int i = t; i < n; ++i)
        for (int j = t; j < n; ++j)
          if (A(i, j) != 0 && (bi < 0 || cmp(abs(A(i, j)), abs(A(bi, bj))) < 0)) { bi = i; bj = j; }
      if (bi < 0) break;  // trailing block is zero
      rowswap(t, bi);
      colswap(t, bj);
      bool dirty = false;
      for (int i = t + 1; i < n; ++i)
        if (A(i, t) != 0) {
          Int q;
          mpz_fdiv_q(q.get_mpz_t(), A(i, t).get_mpz_t(), A(t, t).get_mpz_t());
          rowop(i, t, q);
          if (A(i, t) != 0) dirty = true;
        }
      for (int j = t + 1; j < n; ++j)
        if (A(t, j) != 0) {
          Int q;
          mpz_fdiv_q(q.get_mpz_t(), A(t, j).get_mpz_t(), A(t, t).get_mpz_t());
          colop(j, t, q);
          if (A(t, j) != 0) dirty = true;
        }
      if (dirty) continue;
      // divisibility fixup: fold any non-multiple into column t and retry
      bool fixed = true;
      for (int i = t + 1; i < n && fixed; ++i)
        for (int j = t + 1; j < n && fixed; ++j)
          if (A(i, j) % A(t, t) != 0) {
            rowop(t, i, Int(-1));
            fixed = false;
          }
      if (fixed) break;
    }
    if (A(t, t) < 0) {
      for (int j = 0; j < n; ++j) A(t, j) = -A(t, j);
      for (int j = 0; j < n; ++j) L(t, j) = -L(t, j);
    }
  }
  d.assign(n, Int(0));
  for (int i = 0; i < n; ++i) d[i] = A(i, i);
}

}  // namespace latq
