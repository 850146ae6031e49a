#include <latq/local.hpp>
#include <latq/ratmat.hpp>

#include <stdexcept>

namespace latq {

long valuation(const Rat& a, const Int& p) {
  if (a == 0) throw std::invalid_argument("valuation: a = 0");
  long v = 0;
  Int n = a.get_num(), d = a.get_den(), r;
  for (;;) {
    Int q;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
    if (r != 0) break;
    n = q;
    ++v;
  }
  for (;;) {
    Int q;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), d.get_mpz_t(), p.get_mpz_t());
    if (r != 0) break;
    d = q;
    --v;
  }
  return v;
}

namespace {

// p-unit part a / p^nu(a)
Rat unit_part(const Rat& a, const Int& p) {
  long v = valuation(a, p);
  Int pk;
  mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(v >= 0 ? v : -v));
  Rat u = v >= 0 ? Rat(a / Rat(pk)) : Rat(a * Rat(pk));
  u.canonicalize();
  return u;
}

}  // namespace

int legendre_unit(const Rat& u, const Int& p) {
  int ln = mpz_legendre(u.get_num_mpz_t(), p.get_mpz_t());
  int ld = mpz_legendre(u.get_den_mpz_t(), p.get_mpz_t());
  if (ln == 0 || ld == 0) throw std::invalid_argument("legendre_unit: not a p-unit");
  return ln * ld;
}

int unit_mod8(const Rat& u) {
  Int n, d;
  mpz_fdiv_r_ui(n.get_mpz_t(), u.get_num_mpz_t(), 8);
  mpz_fdiv_r_ui(d.get_mpz_t(), u.get_den_mpz_t(), 8);
  long nn = n.get_si(), dd = d.get_si();
  if (nn % 2 == 0 || dd % 2 == 0) throw std::invalid_argument("unit_mod8: not a 2-unit");
  // inverses mod 8: every odd residue is its own inverse
  return static_cast<int>((nn * dd) % 8);
}

Int smallest_nonresidue(const Int& p) {
  for (Int d = 2;; ++d)
    if (mpz_legendre(d.get_mpz_t(), p.get_mpz_t()) == -1) return d;
}

SquareClass square_class(const Rat& a, const Place& place) {
  if (a == 0) throw std::invalid_argument("square_class: a = 0");
  SquareClass c;
  c.place = place;
  if (place.is_infinity) {
    c.val_parity = 0;
    c.unit = a > 0 ? 1 : -1;
    return c;
  }
  long v = valuation(a, place.p);
  c.val_parity = static_cast<int>(((v % 2) + 2) % 2);
  Rat u = unit_part(a, place.p);
  if (place.p == 2)
    c.unit = unit_mod8(u);
  else
    c.unit = legendre_unit(u, place.p) == 1 ? 0 : 1;
  return c;
}

int hilbert_symbol(const Rat& a, const Rat& b, const Place& place) {
  if (a == 0 || b == 0) throw std::invalid_argument("hilbert_symbol: zero argument");
  if (place.is_infinity) return (a < 0 && b < 0) ? -1 : 1;
  const Int& p = place.p;
  long alpha = valuation(a, p), beta = valuation(b, p);
  Rat u = unit_part(a, p), v = unit_part(b, p);
  if (p == 2) {
    auto eps = [](const Rat& x) { int m = unit_mod8(x); return (m == 3 || m == 7) ? 1 : 0; };
    auto omega = [](const Rat& x) { int m = unit_mod8(x); return (m == 3 || m == 5) ? 1 : 0; };
    long e = static_cast<long>(eps(u)) * eps(v) + alpha * omega(v) + beta * omega(u);
    return (e % 2 == 0) ? 1 : -1;
  }
  long e = (mpz_fdiv_ui(p.get_mpz_t(), 4) == 3) ? alpha * beta : 0;
  int s = (e % 2 == 0) ? 1 : -1;
  if (beta % 2 != 0) s *= legendre_unit(u, p);
  if (alpha % 2 != 0) s *= legendre_unit(v, p);
  return s;
}

int hasse_symbol(const Mat& g, const Place& place) {
  auto d = sym_diagonalize(g);
  int s = 1;
  for (size_t i = 0; i < d.size(); ++i)
    for (size_t j = i + 1; j < d.size(); ++j) s *= hilbert_symbol(d[i], d[j], place);
  return s;
}

LocalInvariant local_invariant(const Mat& g, const Place& place) {
  LocalInvariant inv;
  inv.place = place;
  inv.dim = static_cast<int>(g.rows());
  inv.det_class = square_class(determinant(g), place);
  inv.hasse = hasse_symbol(g, place);
  return inv;
}

bool spaces_locally_equal(const Mat& g1, const Mat& g2, const Place& place) {
  return local_invariant(g1, place) == local_invariant(g2, place);
}

bool spaces_globally_equal(const Mat& g1, const Mat& g2) {
  if (g1.rows() != g2.rows()) return false;
  if (!spaces_locally_equal(g1, g2, Place::infinity())) return false;
  Rat prod = determinant(g1) * determinant(g2);
  Int n = 2 * prod.get_num() * prod.get_den();
  for (const Place& pl : relevant_places(n))
    if (!pl.is_infinity && !spaces_locally_equal(g1, g2, pl)) return false;
  return true;
}

bool qp_space_exists(const LocalInvariant& inv) {
  if (inv.dim == 1 && inv.hasse == -1) return false;
  if (inv.dim == 2 && inv.hasse == -1 &&
      inv.det_class == square_class(Rat(-1), inv.place))
    return false;
  return true;
}

std::vector<std::pair<Int, int>> factorize(Int n) {
  if (n < 0) n = -n;
  if (n == 0) throw std::invalid_argument("factorize: n = 0");
  std::vector<std::pair<Int, int>> out;
  for (Int p = 2; p * p <= n; p == 2 ? p = 3 : p += 2) {
    int e = 0;
    while (n % p == 0) { n /= p; ++e; }
    if (e > 0) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<Place> relevant_places(const Int& n) {
  std::vector<Place> out{Place::infinity()};
  for (auto& [p, e] : factorize(n)) out.push_back(Place::prime(p));
  return out;
}

}  // namespace latq
