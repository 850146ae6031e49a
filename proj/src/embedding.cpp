#include <latq/embedding.hpp>
#include <latq/ratmat.hpp>

#include <stdexcept>
#include <vector>

namespace latq {

namespace {

std::vector<Place> finite_places_of(const Mat& g) {
  Rat d = determinant(g);
  Int n = 2 * d.get_num() * d.get_den();
  std::vector<Place> out;
  for (const Place& pl : relevant_places(n))
    if (!pl.is_infinity) out.push_back(pl);
  return out;
}

}  // namespace

EmbeddingVerdict embed_unimodular_feasible(const Mat& g, int m) {
  if (!is_positive_definite(g) || !is_integral(g))
    throw std::invalid_argument("embed: G must be a positive definite integral Gram");
  int n = static_cast<int>(g.rows());
  if (m < n) throw std::invalid_argument("embed: m < rank(G)");

  EmbeddingVerdict v;
  if (m >= n + 3) {
    v.feasible = true;
    v.rule = 4;
    return v;
  }
  Rat d = determinant(g);
  auto places = finite_places_of(g);

  if (m == n) {
    v.rule = 1;
    // det(V_p) = 1 at every p forces det to be a rational square
    if (mpz_perfect_square_p(d.get_num_mpz_t()) == 0) {
      v.feasible = false;
      return v;
    }
    for (const Place& pl : places) {
      if (hasse_symbol(g, pl) != 1 || !square_class(d, pl).is_trivial()) {
        v.failing_place = pl;
        return v;
      }
    }
    v.feasible = true;
    return v;
  }
  if (m == n + 1) {
    v.rule = 2;
    for (const Place& pl : places) {
      if (hasse_symbol(g, pl) * hilbert_symbol(d, d, pl) != 1) {
        v.failing_place = pl;
        return v;
      }
    }
    v.feasible = true;
    return v;
  }
  v.rule = 3;
  for (const Place& pl : places) {
    if (square_class(d, pl) == square_class(Rat(-1), pl)) {
      int required = (pl.p == 2) ? -1 : 1;
      if (hasse_symbol(g, pl) != required) {
        v.failing_place = pl;
        return v;
      }
    }
  }
  v.feasible = true;
  return v;
}

EmbeddingVerdict embed_odd_unimodular_feasible(const Mat& g, int m) {
  EmbeddingVerdict base = embed_unimodular_feasible(g, m);
  if (!base.feasible) return base;
  int n = static_cast<int>(g.rows());
  bool odd = false;
  for (int i = 0; i < n; ++i)
    if (g(i, i).get_num() % 2 != 0) odd = true;
  if (odd || m >= n + 3) return base;
  if (m == n + 2) {
    Place two = Place::prime(2);
    SquareClass three = square_class(Rat(3), two);
    if (!(square_class(determinant(g), two) == three && hasse_symbol(g, two) == 1)) return base;
  }
  base.feasible = false;  // sufficient condition not implied
  base.failing_place = Place::prime(2);
  return base;
}

bool det_sufficient_condition(int /*n*/, const Int& det) {
  if (det <= 0) throw std::invalid_argument("det_sufficient_condition: det must be positive");
  auto factors = factorize(det);
  Int d = 1;
  long nu2 = 0;
  std::vector<Int> even_odd_primes;  // the p_i with positive even exponent
  for (auto& [p, e] : factors) {
    if (p == 2) {
      nu2 = e;
      for (int k = 0; k < e; ++k) d *= 2;
    } else if (e % 2 == 0) {
      even_odd_primes.push_back(p);
    } else {
      Int pk;
      mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e));
      d *= pk;
    }
  }
  // condition (1) holds by construction: every odd prime left in d has odd exponent
  for (const Int& p : even_odd_primes) {
    Int md = -d;
    if (mpz_legendre(md.get_mpz_t(), p.get_mpz_t()) != -1) return false;
  }
  if (nu2 % 2 == 0) {
    Int odd_part = d;
    for (long k = 0; k < nu2; ++k) odd_part /= 2;
    if (mpz_fdiv_ui(odd_part.get_mpz_t(), 8) == 7) return false;
  }
  return true;
}

std::set<long> rank12_exception_determinants() {
  std::set<long> out;
  for (long det = 1; det <= 27; ++det)
    if (!det_sufficient_condition(12, Int(det))) out.insert(det);
  return out;
}

namespace {

Mat diag_gram(int n, const std::vector<Rat>& tail) {
  Mat g = Mat::Identity(n, n);
  int k = n - static_cast<int>(tail.size());
  for (size_t i = 0; i < tail.size(); ++i) g(k + static_cast<int>(i), k + static_cast<int>(i)) = tail[i];
  return g;
}

}  // namespace

Mat maximal_rep_gram(const Int& p, int n, const SquareClass& det_class, int hasse) {
  if (n < 1) throw std::invalid_argument("maximal_rep_gram: n < 1");
  LocalInvariant want;
  want.place = Place::prime(p);
  want.dim = n;
  want.det_class = det_class;
  want.hasse = hasse;
  if (!qp_space_exists(want))
    throw std::invalid_argument("maximal_rep_gram: illegal (dim, det, hasse) triple");

  std::vector<std::vector<Rat>> rows;
  if (p == 2) {
    rows = {{},          {Rat(-1)},          {Rat(3)},          {Rat(-3)},
            {Rat(-1), Rat(-1)},              {Rat(-1), Rat(-1), Rat(-1)},
            {Rat(3), Rat(3), Rat(3)},        {Rat(-1), Rat(3)},
            {Rat(2)},   {Rat(-2)},           {Rat(6)},          {Rat(-6)},
            {Rat(-3), Rat(-6)},              {Rat(-3), Rat(6)},
            {Rat(-3), Rat(-2)},              {Rat(-3), Rat(2)}};
  } else {
    Rat dp(smallest_nonresidue(p));
    Rat pp(p);
    bool p1mod4 = mpz_fdiv_ui(p.get_mpz_t(), 4) == 1;
    rows = {{},        {dp},       {pp},       {pp * dp},
            {dp, pp},  {dp, pp * dp}};
    rows.push_back(p1mod4 ? std::vector<Rat>{pp, pp * dp} : std::vector<Rat>{pp, pp});
    rows.push_back(p1mod4 ? std::vector<Rat>{dp, pp, pp * dp} : std::vector<Rat>{dp, pp, pp});
  }
  for (const auto& tail : rows) {
    if (static_cast<int>(tail.size()) > n) continue;
    Mat g = diag_gram(n, tail);
    LocalInvariant got = local_invariant(g, want.place);
    if (got.det_class == det_class && got.hasse == hasse) return g;
  }
  throw std::invalid_argument("maximal_rep_gram: no table entry for the requested triple");
}

}  // namespace latq
