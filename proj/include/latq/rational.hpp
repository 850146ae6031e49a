#pragma once

#include <gmpxx.h>
#include <Eigen/Dense>

#include <stdexcept>
#include <string>
#include <vector>

namespace latq {

using Int = mpz_class;
using Rat = mpq_class;

using Mat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using Row = Eigen::Matrix<Rat, 1, Eigen::Dynamic>;
using Col = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;

inline bool is_integer(const Rat& a) { return a.get_den() == 1; }

inline Int floor_int(const Rat& a) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
  return q;
}

inline Int ceil_int(const Rat& a) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
  return q;
}

inline Rat rat_from_string(const std::string& s) {
  Rat r;
  if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
    throw std::invalid_argument("not a rational: \"" + s + "\"");
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: \"" + s + "\"");
  r.canonicalize();
  return r;
}

inline std::string rat_to_string(const Rat& a) { return a.get_str(); }

inline bool is_integral(const Mat& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!is_integer(m(i, j))) return false;
  return true;
}

inline bool is_symmetric(const Mat& m) {
  if (m.rows() != m.cols()) return false;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = i + 1; j < m.cols(); ++j)
      if (m(i, j) != m(j, i)) return false;
  return true;
}

// Least common multiple of all entry denominators; 1 for an empty matrix.
inline Int denominator_lcm(const Mat& m) {
  Int l = 1;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
  return l;
}

inline std::vector<Rat> row_to_vector(const Row& r) {
  std::vector<Rat> v(r.cols());
  for (Eigen::Index j = 0; j < r.cols(); ++j) v[j] = r(j);
  return v;
}

}  // namespace latq
