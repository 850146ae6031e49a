#include <latq/a15.hpp>
#include <latq/embedding.hpp>
#include <latq/eutactic.hpp>
#include <latq/jsonio.hpp>
#include <latq/local.hpp>
#include <latq/shortvec.hpp>
#include <latq/verify.hpp>

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

namespace {

using latq::json;

json square_class_json(const latq::SquareClass& c) {
  json j;
  j["place"] = c.place.str();
  j["val_parity"] = c.val_parity;
  j["unit"] = c.unit;
  return j;
}

json invariant_json(const latq::LocalInvariant& inv) {
  json j;
  j["place"] = inv.place.str();
  j["dim"] = inv.dim;
  j["det_class"] = square_class_json(inv.det_class);
  j["hasse"] = inv.hasse;
  return j;
}

int cmd_invariants(const std::string& file) {
  latq::Lattice L = latq::lattice_from_file(file);
  latq::Rat det = L.det();
  json out;
  out["command"] = "invariants";
  out["det"] = latq::rat_json(det);
  json places = json::array();
  latq::Int n = 2 * det.get_num() * det.get_den();
  for (const auto& pl : latq::relevant_places(n))
    places.push_back(invariant_json(latq::local_invariant(L.gram(), pl)));
  out["invariants"] = std::move(places);
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_embed(const std::string& file, int m, bool odd) {
  latq::Lattice L = latq::lattice_from_file(file);
  auto v = odd ? latq::embed_odd_unimodular_feasible(L.gram(), m)
               : latq::embed_unimodular_feasible(L.gram(), m);
  json out;
  out["command"] = "embed";
  out["rank"] = m;
  out["odd"] = odd;
  out["feasible"] = v.feasible;
  out["rule"] = v.rule;
  if (v.failing_place) out["failing_place"] = v.failing_place->str();
  std::cout << out.dump(2) << "\n";
  return v.feasible ? 0 : 1;
}

int cmd_shortvec(const std::string& file, const std::string& bound) {
  latq::Lattice L = latq::lattice_from_file(file);
  latq::Rat b = latq::rat_from_string(bound);
  auto sv = latq::vectors_up_to(L, b);
  json out;
  out["command"] = "shortvec";
  out["bound"] = latq::rat_json(b);
  out["count"] = sv.vectors.size();
  json vecs = json::array();
  for (const auto& v : sv.vectors) {
    json item;
    item["coeffs"] = v.coeffs;
    item["coords"] = latq::mat_json(v.coords);
    item["norm"] = latq::rat_json(v.norm);
    vecs.push_back(std::move(item));
  }
  out["vectors"] = std::move(vecs);
  std::cout << out.dump(2) << "\n";
  return 0;
}

json certificate_json(const latq::EutacticCertificate& c) {
  json j;
  j["scale"] = c.scale.get_str();
  json entries = json::array();
  for (size_t k = 0; k < c.coeffs.size(); ++k) {
    json e;
    e["coeffs"] = latq::mat_json(c.coeffs[k]);
    if (!c.vectors.empty()) e["vector"] = latq::mat_json(c.vectors[k]);
    e["multiplicity"] = c.multiplicities[k].get_str();
    entries.push_back(std::move(e));
  }
  j["entries"] = std::move(entries);
  return j;
}

int cmd_sint(const std::string& file, long scale, const std::string& method,
             const std::vector<int>& support, std::uint64_t budget) {
  latq::Lattice L = latq::lattice_from_file(file);
  json out;
  out["command"] = "s-int";
  out["scale"] = scale;
  out["method"] = method;
  if (method == "ilp") {
    auto res = latq::decide_s_integrable(L, latq::Int(scale), budget);
    out["nodes"] = res.nodes;
    switch (res.outcome) {
      case latq::SIntOutcome::integrable:
        out["outcome"] = "integrable";
        out["certificate"] = certificate_json(*res.certificate);
        std::cout << out.dump(2) << "\n";
        return 0;
      case latq::SIntOutcome::not_integrable:
        out["outcome"] = "not-integrable";
        std::cout << out.dump(2) << "\n";
        return 1;
      case latq::SIntOutcome::budget_exhausted:
        out["outcome"] = "budget-exhausted";
        std::cout << out.dump(2) << "\n";
        return 3;
    }
    return 2;
  }
  // refute: FILE holds generators of M inside R^16; N = complement of M in A15+
  if (scale != 2) throw std::invalid_argument("refute method applies to scale 2 only");
  if (support.empty()) throw std::invalid_argument("refute method requires --support");
  auto cert = latq::refute_2_integrability(latq::build_A15_plus(), L, support);
  out["support"] = cert.support;
  out["pairs_checked"] = cert.pairs_checked;
  if (cert.refuted) {
    out["outcome"] = "not-integrable";
    out["mode"] = cert.mode;
    std::cout << out.dump(2) << "\n";
    return 1;
  }
  out["outcome"] = "unknown";
  out["mode"] = cert.mode.empty() ? "pair-passed-psd" : cert.mode;
  if (cert.failed_precondition) out["failed_precondition"] = cert.failed_precondition;
  if (cert.witness_pair) {
    out["witness_u"] = latq::mat_json(cert.witness_pair->first);
    out["witness_v"] = latq::mat_json(cert.witness_pair->second);
  }
  std::cout << out.dump(2) << "\n";
  return 3;
}

int cmd_classify(const std::string& file) {
  latq::Lattice L = latq::lattice_from_file(file);
  auto orbits = latq::classify_norm3_triples(L.gram());
  json out;
  out["command"] = "classify";
  out["orbit_count"] = orbits.size();
  json list = json::array();
  for (const auto& o : orbits) {
    json item;
    item["I"] = o.representative[0];
    item["J"] = o.representative[1];
    item["K"] = o.representative[2];
    item["triple_intersection"] = o.triple_intersection;
    item["pattern"] = o.pattern;
    list.push_back(std::move(item));
  }
  out["orbits"] = std::move(list);
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_verify_paper(bool as_json) {
  latq::Report rep = latq::verify_paper();
  if (as_json)
    std::cout << latq::report_json(rep).dump(2) << "\n";
  else
    std::cout << latq::report_text(rep);
  return rep.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact lattice computations: local invariants, unimodular embedding, "
               "s-integrability"};
  app.require_subcommand(1);

  std::string file, bound = "2", method = "ilp";
  int rank = 0;
  long scale = 2;
  std::uint64_t budget = 100000000ull;
  bool odd = false, as_json = false;
  std::vector<int> support;

  auto* inv = app.add_subcommand("invariants", "local invariants at infinity and p | 2 det");
  inv->add_option("file", file)->required();

  auto* emb = app.add_subcommand("embed", "feasibility of embedding into a unimodular lattice");
  emb->add_option("--rank", rank, "rank of the target unimodular lattice")->required();
  emb->add_flag("--odd", odd, "require an odd unimodular target");
  emb->add_option("file", file)->required();

  auto* sv = app.add_subcommand("shortvec", "all nonzero vectors of norm up to the bound");
  sv->add_option("--bound", bound)->required();
  sv->add_option("file", file)->required();

  auto* si = app.add_subcommand("s-int", "decide or refute s-integrability");
  si->add_option("--scale", scale)->required();
  si->add_option("--method", method)->check(CLI::IsMember({"ilp", "refute"}));
  si->add_option("--support", support, "support set X (1-based), refute method");
  si->add_option("--budget", budget, "node budget for the integer search");
  si->add_option("file", file)->required();

  auto* cl = app.add_subcommand("classify", "norm-3 triples in A15+ with the given Gram");
  cl->add_option("file", file)->required();

  auto* vp = app.add_subcommand("verify-paper", "run the full verification pipeline");
  vp->add_flag("--json", as_json, "emit the report as JSON");

  CLI11_PARSE(app, argc, argv);

  try {
    if (inv->parsed()) return cmd_invariants(file);
    if (emb->parsed()) return cmd_embed(file, rank, odd);
    if (sv->parsed()) return cmd_shortvec(file, bound);
    if (si->parsed()) return cmd_sint(file, scale, method, support, budget);
    if (cl->parsed()) return cmd_classify(file);
    if (vp->parsed()) return cmd_verify_paper(as_json);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
