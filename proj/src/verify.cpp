#include <latq/a15.hpp>
#include <latq/eutactic.hpp>
#include <latq/ratmat.hpp>
#include <latq/shortvec.hpp>
#include <latq/verify.hpp>

#include <algorithm>
#include <sstream>

namespace latq {

bool Report::all_pass() const {
  return std::all_of(results.begin(), results.end(),
                     [](const ClaimResult& c) { return c.pass; });
}

json report_json(const Report& r) {
  json doc;
  doc["command"] = r.command;
  json results = json::array();
  for (const auto& c : r.results) {
    json item;
    item["claim"] = c.claim;
    item["expected"] = c.expected;
    item["computed"] = c.computed;
    item["status"] = c.pass ? "PASS" : "FAIL";
    results.push_back(std::move(item));
  }
  doc["results"] = std::move(results);
  doc["exit_status"] = r.all_pass() ? "ok" : "fail";
  return doc;
}

std::string report_text(const Report& r) {
  std::ostringstream out;
  for (const auto& c : r.results)
    out << (c.pass ? "PASS" : "FAIL") << "  " << c.claim << ": expected " << c.expected
        << ", computed " << c.computed << "\n";
  out << (r.all_pass() ? "all claims verified" : "VERIFICATION FAILED") << "\n";
  return out.str();
}

namespace {

void claim(Report& rep, const std::string& name, const std::string& expected,
           const std::string& computed) {
  rep.results.push_back({name, expected, computed, expected == computed});
}

template <typename T>
std::string str(const T& v) {
  std::ostringstream out;
  out << v;
  return out.str();
}

std::string str(bool b) { return b ? "true" : "false"; }

std::string row_str(const Row& v) {
  std::ostringstream out;
  out << "(";
  for (int i = 0; i < v.cols(); ++i) out << (i ? "," : "") << rat_to_string(v(i));
  out << ")";
  return out.str();
}

Row unit_diff(int i, int j) {  // e_i - e_j, 1-based
  Row v = Row::Zero(16);
  v(i - 1) = 1;
  v(j - 1) = -1;
  return v;
}

Row scaled_row(const Int& den, std::vector<long> entries) {
  Row v(static_cast<int>(entries.size()));
  for (size_t i = 0; i < entries.size(); ++i) {
    Rat e(entries[i], den);
    e.canonicalize();
    v(static_cast<int>(i)) = e;
  }
  return v;
}

std::string orbit_tags(const std::vector<TripleOrbit>& orbits) {
  std::vector<int> tags;
  for (const auto& o : orbits) tags.push_back(o.triple_intersection);
  std::sort(tags.begin(), tags.end());
  std::ostringstream out;
  out << orbits.size() << " orbits, |I∩J∩K| in {";
  for (size_t i = 0; i < tags.size(); ++i) out << (i ? "," : "") << tags[i];
  out << "}";
  return out.str();
}

// the generated sublattice of a triple orbit representative
Lattice orbit_lattice(const TripleOrbit& o) {
  Mat gens(3, 16);
  for (int s = 0; s < 3; ++s) gens.row(s) = t_vec(o.representative[s]);
  return Lattice::from_generators(gens);
}

std::array<long, 8> triple_pattern(const std::vector<int>& I, const std::vector<int>& J,
                                   const std::vector<int>& K) {
  std::array<long, 8> c{};
  for (int p = 1; p <= 16; ++p) {
    int idx = 0;
    if (std::count(I.begin(), I.end(), p)) idx |= 4;
    if (std::count(J.begin(), J.end(), p)) idx |= 2;
    if (std::count(K.begin(), K.end(), p)) idx |= 1;
    ++c[idx];
  }
  return c;
}

}  // namespace

Report verify_paper() {
  Report rep;
  rep.command = "verify-paper";

  // §1/§8: structure of A15+
  Lattice big = build_A15_plus();
  claim(rep, "A15+ rank", "15", str(big.rank()));
  claim(rep, "A15+ determinant", "1", rat_to_string(big.det()));
  claim(rep, "A15+ parity", "odd", parity(big) == Parity::odd ? "odd" : "even");
  claim(rep, "A15+ minimum", "2", rat_to_string(minimum(big)));
  auto sv3 = vectors_up_to(big, Rat(3));
  long roots = 0, norm3 = 0, norm3_t = 0;
  for (const auto& v : sv3.vectors) {
    if (v.norm == 2) ++roots;
    if (v.norm == 3) {
      ++norm3;
      long quarters = 0;  // ±t_I has four -3/4 (or 3/4) entries, rest ±1/4
      for (int c = 0; c < 16; ++c)
        if (v.coords(c) == Rat(-3, 4) || v.coords(c) == Rat(3, 4)) ++quarters;
      if (quarters == 4) ++norm3_t;
    }
  }
  claim(rep, "A15+ norm-2 count", "240", str(roots));
  claim(rep, "A15+ norm-3 count", "3640", str(norm3));
  claim(rep, "A15+ norm-3 vectors of shape ±t_I", "3640", str(norm3_t));
  claim(rep, "[A15+ : A15]", "4", str(index(big, build_An(15))));

  // Lemma 8.1 / Remark: classification of norm-3 triples
  Mat target12(3, 3), target11(3, 3);
  target12 << 3, 2, 0, 2, 3, 0, 0, 0, 3;
  target11 << 3, 2, 2, 2, 3, 2, 2, 2, 3;
  auto orbits12 = classify_norm3_triples(target12);
  auto orbits11 = classify_norm3_triples(target11);
  claim(rep, "Gram (1.2) orbits", "2 orbits, |I∩J∩K| in {0,1}", orbit_tags(orbits12));
  claim(rep, "Gram (1.1) orbits", "2 orbits, |I∩J∩K| in {2,3}", orbit_tags(orbits11));
  std::vector<int> ia{1, 2, 3, 4}, ib{1, 2, 3, 5};
  auto has_pattern = [](const std::vector<TripleOrbit>& orbits, const std::array<long, 8>& p) {
    return std::any_of(orbits.begin(), orbits.end(),
                       [&](const TripleOrbit& o) { return o.pattern == p; });
  };
  bool regen12 = has_pattern(orbits12, triple_pattern(ia, ib, {1, 6, 7, 8})) &&
                 has_pattern(orbits12, triple_pattern(ia, ib, {4, 5, 6, 7}));
  bool regen11 = has_pattern(orbits11, triple_pattern(ia, ib, {1, 2, 4, 5})) &&
                 has_pattern(orbits11, triple_pattern(ia, ib, {1, 2, 3, 6}));
  claim(rep, "(a,b,c) and (a,b,c') realize the (1.2) orbits", "true", str(regen12));
  claim(rep, "(a,b,c'') and (a,b,c''') realize the (1.1) orbits", "true", str(regen11));

  // Thm 1.2/1.3: the four complements
  auto named = named_lattices();
  for (const auto& [name, expected_det] :
       std::vector<std::pair<std::string, std::string>>{
           {"N", "15"}, {"N'", "15"}, {"N''", "7"}, {"N'''", "7"}}) {
    const Lattice& L = named.at(name);
    claim(rep, "rank(" + name + ")", "12", str(L.rank()));
    claim(rep, "det(" + name + ")", expected_det, rat_to_string(L.det()));
  }

  // Lemma 8.2: coset data of M = <a,b,c> and dual minima
  Mat mgens(3, 16);
  mgens.row(0) = t_vec({1, 2, 3, 4});
  mgens.row(1) = t_vec({1, 2, 3, 5});
  mgens.row(2) = t_vec({1, 6, 7, 8});
  auto profile = coset_profile(Lattice::from_generators(mgens));
  std::ostringstream coset_str;
  for (const auto& e : profile.entries)
    coset_str << rat_to_string(e.minimal_norm) << "x" << e.multiplicity << " ";
  claim(rep, "M*/M coset minimal norms x multiplicities",
        "1/3x2 2/5x2 3/5x2 11/15x4 14/15x4 ", coset_str.str());
  for (const auto& [name, L] : named) {
    Rat dual_min = minimum(dual(L));
    claim(rep, "minimum(dual(" + name + ")) >= 16/15", "true", str(dual_min >= Rat(16, 15)));
  }

  // Prop 10.1 / 10.2: printed projections and their norms
  const Lattice& N = named.at("N");
  const Lattice& Np = named.at("N'");
  struct ProjClaim {
    const Lattice* lat;
    std::string name;
    int i;
    Row expected;
    Rat norm;
  };
  std::vector<ProjClaim> projections = {
      {&N, "N", 1,
       scaled_row(60, {27, -13, -13, -1, -1, -9, -9, -9, 11, 11, 11, 11, 11, 11, 11, -49}),
       Rat(19, 15)},
      {&N, "N", 2, scaled_row(10, {-3, 7, -3, -1, -1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, -9}),
       Rat(8, 5)},
      {&N, "N", 4, scaled_row(20, {-3, -3, -3, 9, 9, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, -19}),
       Rat(7, 5)},
      {&N, "N", 5, scaled_row(20, {-3, -3, -3, 9, 9, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, -19}),
       Rat(7, 5)},
      {&N, "N", 6, scaled_row(12, {-3, 1, 1, 1, 1, 9, -3, -3, 1, 1, 1, 1, 1, 1, 1, -11}),
       Rat(5, 3)},
      {&N, "N", 9, unit_diff(9, 16), Rat(2)},
      {&Np, "N'", 1, scaled_row(10, {7, -3, -3, -1, -1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, -9}),
       Rat(8, 5)},
      {&Np, "N'", 4,
       scaled_row(15, {-1, -1, -1, 3, 3, -3, -3, 2, 2, 2, 2, 2, 2, 2, 2, -13}), Rat(16, 15)},
      {&Np, "N'", 5,
       scaled_row(15, {-1, -1, -1, 3, 3, -3, -3, 2, 2, 2, 2, 2, 2, 2, 2, -13}), Rat(16, 15)},
      {&Np, "N'", 6, scaled_row(12, {1, 1, 1, -3, -3, 9, -3, 1, 1, 1, 1, 1, 1, 1, 1, -11}),
       Rat(5, 3)},
      {&Np, "N'", 8, unit_diff(8, 16), Rat(2)},
  };
  for (const auto& pc : projections) {
    Row got = project_to_complement(big, *pc.lat, unit_diff(pc.i, 16));
    std::string tag = "rho(e" + str(pc.i) + "-e16) for " + pc.name;
    claim(rep, tag, row_str(pc.expected), row_str(got));
    claim(rep, tag + " norm", rat_to_string(pc.norm),
          rat_to_string((got * got.transpose())(0, 0)));
  }

  // Props 10.1/10.2 and Remark: refutations with the paper's X sets
  auto x_range = [](int lo) {
    std::vector<int> x;
    for (int c = lo; c <= 16; ++c) x.push_back(c);
    return x;
  };
  Row third_c = t_vec({1, 6, 7, 8}), third_cp = t_vec({4, 5, 6, 7});
  Row third_cpp = t_vec({1, 2, 4, 5}), third_cppp = t_vec({1, 2, 3, 6});
  struct RefClaim {
    std::string name;
    Row third;
    int x_lo;
  };
  for (const auto& rc : std::vector<RefClaim>{{"N", third_c, 9},
                                              {"N'", third_cp, 8},
                                              {"N''", third_cpp, 6},
                                              {"N'''", third_cppp, 7}}) {
    Mat gens(3, 16);
    gens.row(0) = t_vec({1, 2, 3, 4});
    gens.row(1) = t_vec({1, 2, 3, 5});
    gens.row(2) = rc.third;
    auto cert = refute_2_integrability(big, Lattice::from_generators(gens), x_range(rc.x_lo));
    claim(rep, "refute 2-integrability of " + rc.name + " (X = {" + str(rc.x_lo) + "..16})",
          "all-pairs-violate", cert.refuted ? cert.mode : "failed:" + cert.mode);
  }

  // Prop 10.3: kissing numbers and minimality
  claim(rep, "kissing(N)", "64", str(kissing_number(N)));
  claim(rep, "kissing(N')", "80", str(kissing_number(Np)));
  claim(rep, "check_minimality(N)", "true", str(check_minimality(N)));
  claim(rep, "check_minimality(N')", "true", str(check_minimality(Np)));
  claim(rep, "check_minimality(Z12)", "false",
        str(check_minimality(Lattice::from_gram(Mat::Identity(12, 12)))));

  return rep;
}

}  // namespace latq
