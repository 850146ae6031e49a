#include <latq/ratmat.hpp>
#include <latq/shortvec.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace latq {

namespace {

// Largest integer t with (t + c)^2 * q <= rem or t + c <= 0, i.e. t <= -c + sqrt(rem/q).
long floor_bound(const Rat& c, const Rat& q, const Rat& rem) {
  double approx = -c.get_d() + std::sqrt(std::max(0.0, Rat(rem / q).get_d()));
  long t = static_cast<long>(std::floor(approx));
  auto ok = [&](long x) {
    Rat s = Rat(x) + c;
    return s <= 0 || s * s * q <= rem;
  };
  while (ok(t + 1)) ++t;
  while (!ok(t)) --t;
  return t;
}

// Smallest integer t with t >= -c - sqrt(rem/q).
long ceil_bound(const Rat& c, const Rat& q, const Rat& rem) {
  double approx = -c.get_d() - std::sqrt(std::max(0.0, Rat(rem / q).get_d()));
  long t = static_cast<long>(std::ceil(approx));
  auto ok = [&](long x) {
    Rat s = Rat(x) + c;
    return s >= 0 || s * s * q <= rem;
  };
  while (ok(t - 1)) --t;
  while (!ok(t)) ++t;
  return t;
}

}  // namespace

std::vector<std::pair<std::vector<long>, Rat>> enumerate_short(const Mat& gram, const Rat& bound) {
  if (bound <= 0) throw std::invalid_argument("enumerate_short: bound must be positive");
  int n = static_cast<int>(gram.rows());
  // completion of squares: x G x^T = sum_i d[i] * (x[i] + sum_{j>i} u(i,j) x[j])^2
  Mat a = gram;
  Mat u = Mat::Zero(n, n);
  std::vector<Rat> d(n);
  for (int i = 0; i < n; ++i) {
    d[i] = a(i, i);
    if (d[i] <= 0) throw std::invalid_argument("enumerate_short: Gram not positive definite");
    for (int j = i + 1; j < n; ++j) u(i, j) = a(i, j) / d[i];
    for (int j = i + 1; j < n; ++j)
      for (int k = j; k < n; ++k) {
        a(j, k) -= a(i, j) * a(i, k) / d[i];
        a(k, j) = a(j, k);
      }
  }

  std::vector<std::pair<std::vector<long>, Rat>> out;
  std::vector<long> x(n, 0);
  std::vector<Rat> center(n);
  // depth-first from the last coordinate down
  std::function<void(int, const Rat&)> rec = [&](int i, const Rat& rem) {
    if (i < 0) {
      bool zero = std::all_of(x.begin(), x.end(), [](long v) { return v == 0; });
      if (!zero) out.emplace_back(x, bound - rem);
      return;
    }
    Rat c = 0;
    for (int j = i + 1; j < n; ++j)
      if (x[j] != 0) c += u(i, j) * Rat(x[j]);
    long lo = ceil_bound(c, d[i], rem);
    long hi = floor_bound(c, d[i], rem);
    for (long t = lo; t <= hi; ++t) {
      x[i] = t;
      Rat s = Rat(t) + c;
      rec(i - 1, rem - d[i] * s * s);
    }
    x[i] = 0;
  };
  rec(n - 1, bound);
  std::sort(out.begin(), out.end(),
            [](const auto& p, const auto& q) { return p.first < q.first; });
  return out;
}

ShortVectorSet vectors_up_to(const Lattice& l, const Rat& bound) {
  auto coeffs = enumerate_short(l.gram(), bound);
  ShortVectorSet set;
  set.bound = bound;
  int n = l.rank();
  for (auto& [x, norm] : coeffs) {
    ShortVector v;
    v.coeffs = x;
    v.norm = norm;
    Row c(n);
    for (int i = 0; i < n; ++i) c(i) = Rat(x[i]);
    v.coords = l.has_vectors() ? Row(c * l.generators()) : c;
    set.vectors.push_back(std::move(v));
  }
  return set;
}

Rat minimum(const Lattice& l) {
  Rat bound = l.gram()(0, 0);
  for (int i = 1; i < l.rank(); ++i) bound = std::min(bound, Rat(l.gram()(i, i)));
  auto vecs = enumerate_short(l.gram(), bound);
  Rat best = bound;
  for (auto& [x, norm] : vecs) best = std::min(best, norm);
  return best;
}

long kissing_number(const Lattice& l) {
  Rat m = minimum(l);
  auto vecs = enumerate_short(l.gram(), m);
  long k = 0;
  for (auto& [x, norm] : vecs)
    if (norm == m) ++k;
  return k;
}

}  // namespace latq
