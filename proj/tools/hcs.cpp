// Command-line surface for the Hom-coalgebra verification engine.
//
// Exit codes: 0 all checks pass, 1 a check or campaign was refuted,
// 2 input error, 3 no hypothesis witnesses found.

#include <chrono>
#include <filesystem>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hcs/campaign.hpp"
#include "hcs/constructions.hpp"
#include "hcs/io.hpp"
#include "hcs/oracle.hpp"
#include "hcs/search.hpp"

namespace {

using namespace hcs;

constexpr int kExitPass = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitInputError = 2;
constexpr int kExitNoWitnesses = 3;

FieldSpec parse_field_flag(const std::string& text) {
  if (text == "Q") return FieldSpec::rationals();
  if (text.size() > 1 && (text[0] == 'F' || text[0] == 'f'))
    return FieldSpec::prime(static_cast<std::uint32_t>(std::stoul(text.substr(1))));
  throw Error(Errc::SyntaxError, "field must be Q or F<p>, got '" + text + "'");
}

std::vector<std::string> split_list(const std::string& csv) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : csv) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

// --param values: integers or small matrix specs (id | zero | diag:a,b,...)
struct Params {
  std::map<std::string, std::string> kv;

  bool has(const std::string& k) const { return kv.count(k) > 0; }
  long long integer(const std::string& k, long long dflt) const {
    auto it = kv.find(k);
    return it == kv.end() ? dflt : std::stoll(it->second);
  }
  TensorMap matrix(const std::string& k, const FieldSpec& f, const SpaceId& s) const {
    auto it = kv.find(k);
    if (it == kv.end()) throw Error(Errc::SyntaxError, "missing --param " + k + "=...");
    const std::string& v = it->second;
    if (v == "id") return TensorMap::identity(f, s);
    if (v == "zero") return TensorMap::zero(f, s, {s});
    if (v.rfind("diag:", 0) == 0) {
      auto entries = split_list(v.substr(5));
      if (static_cast<int>(entries.size()) != s.dim)
        throw Error(Errc::DimMismatch, "diag needs " + std::to_string(s.dim) + " entries");
      TensorMap t(f, s, {s});
      for (int i = 0; i < s.dim; ++i) {
        int js[1] = {i};
        t.set(i, js, Scalar::parse(f, entries[i]));
      }
      return t;
    }
    throw Error(Errc::SyntaxError, "matrix param must be id, zero or diag:a,b,...");
  }
};

StructurePackage load_structure(const std::string& path) {
  ParsedFile v = parse_structure_file(read_text_file(path));
  if (auto* s = std::get_if<StructurePackage>(&v)) return *s;
  throw Error(Errc::KindMismatch, path + " does not hold a structure package");
}

ComodulePackage load_comodule(const std::string& path) {
  ParsedFile v = parse_structure_file(read_text_file(path));
  if (auto* s = std::get_if<ComodulePackage>(&v)) return *s;
  throw Error(Errc::KindMismatch, path + " does not hold a comodule package");
}

int run_check(const std::string& file, const std::string& axioms_csv) {
  ParsedFile v = parse_structure_file(read_text_file(file));
  std::vector<std::string> subset = split_list(axioms_csv);
  const std::vector<std::string>* subset_ptr = subset.empty() ? nullptr : &subset;
  CheckReport rep;
  if (auto* s = std::get_if<StructurePackage>(&v))
    rep = check_structure(*s, subset_ptr);
  else if (auto* cm = std::get_if<ComodulePackage>(&v))
    rep = check_comodule(*cm, subset_ptr);
  else
    throw Error(Errc::KindMismatch, "algebra constants have no axioms to check; use dualize");
  std::cout << emit_report(rep);
  return rep.passed ? kExitPass : kExitRefuted;
}

int run_oracle(const std::string& file, const std::string& axiom) {
  ParsedFile v = parse_structure_file(read_text_file(file));
  bool oracle_pass = false;
  bool checker = false;
  if (auto* s = std::get_if<StructurePackage>(&v)) {
    oracle_pass = sweedler_oracle_check(*s, axiom).passed;
    checker = axiom == "dplc3b" || axiom == "dplc4b" ? oracle_pass
                                                     : axiom_residual(*s, axiom).is_zero();
  } else if (auto* cm = std::get_if<ComodulePackage>(&v)) {
    oracle_pass = sweedler_oracle_check(*cm, axiom).passed;
    checker = comodule_axiom_residual(*cm, axiom).is_zero();
  } else {
    throw Error(Errc::KindMismatch, "algebra constants have no axioms to check");
  }
  std::cout << "hcs-report oracle\n";
  std::cout << "axiom = " << axiom << "\n";
  std::cout << "oracle = " << (oracle_pass ? "pass" : "FAIL") << "\n";
  std::cout << "checker = " << (checker ? "pass" : "FAIL") << "\n";
  std::cout << "agreement = " << (oracle_pass == checker ? "yes" : "NO") << "\n";
  return oracle_pass ? kExitPass : kExitRefuted;
}

int run_construct(const std::string& rule, const std::string& file, const std::string& aux,
                  const Params& params, const std::string& out_path) {
  ParsedFile parsed = parse_structure_file(read_text_file(file));
  std::string out_text;

  auto write_structure = [&](const StructurePackage& s) { out_text = emit_structure_file(s); };
  auto write_comodule = [&](const ComodulePackage& cm) { out_text = emit_structure_file(cm); };

  if (rule == "dualize") {
    if (auto* a = std::get_if<AlgebraConstants>(&parsed))
      write_structure(dualize_algebra(*a));
    else if (auto* s = std::get_if<StructurePackage>(&parsed))
      out_text = emit_structure_file(dualize_package(*s));
    else
      throw Error(Errc::KindMismatch, "dualize expects algebra constants or a tridendriform package");
  } else if (std::holds_alternative<ComodulePackage>(parsed)) {
    ComodulePackage cm = std::get<ComodulePackage>(parsed);
    ComoduleRuleParams ps;
    ps.n = params.integer("n", 0);
    ps.k = params.integer("k", 0);
    ComodulePackage other = cm;
    if (!aux.empty()) {
      other = load_comodule(aux);
      ps.other = &other;
    }
    if (params.has("beta")) ps.beta = params.matrix("beta", cm.base.field, cm.base.space);
    if (params.has("beta_m")) ps.beta_m = params.matrix("beta_m", cm.base.field, cm.mspace);
    std::map<std::string, ComoduleRule> rules = {
        {"com_direct_sum", ComoduleRule::DirectSum}, {"com_regular", ComoduleRule::RegularK},
        {"com_tensor", ComoduleRule::TensorK},       {"com_twist_n0", ComoduleRule::TwistN0},
        {"com_twist_0k", ComoduleRule::Twist0K},     {"com_twist_nk", ComoduleRule::TwistNK},
        {"com_twist_beta", ComoduleRule::TwistBeta}};
    auto it = rules.find(rule);
    if (it == rules.end()) throw Error(Errc::UnknownKind, "unknown comodule rule " + rule);
    write_comodule(comodule_derive(cm, it->second, ps));
  } else {
    StructurePackage s = std::get<StructurePackage>(parsed);
    if (rule == "yau_twist") {
      TensorMap beta = aux.empty() ? params.matrix("beta", s.field, s.space)
                                   : load_structure(aux).alpha;
      write_structure(yau_twist(s, beta));
    } else if (rule == "power") {
      write_structure(power_twist(s, params.integer("n", 1)));
    } else if (rule == "untwist") {
      write_structure(inverse_twist(s));
    } else if (rule == "commutator") {
      write_structure(commutator_cobracket(s));
    } else if (rule == "sum") {
      write_structure(tridend_sum(s));
    } else if (rule == "rb_tridend") {
      write_structure(rb_coassoc_derive(s, RbTarget::Tridend));
    } else if (rule == "rb_dendriform") {
      write_structure(rb_coassoc_derive(s, RbTarget::Dendriform));
    } else if (rule == "rb_prelie0") {
      write_structure(rb_coassoc_derive(s, RbTarget::Prelie0));
    } else if (rule == "rb_prelie_m1") {
      write_structure(rb_coassoc_derive(s, RbTarget::PrelieM1));
    } else if (rule == "rb_dendriform_b") {
      write_structure(rb_coassoc_derive(s, RbTarget::DendriformB));
    } else if (rule == "dend_prelie") {
      write_structure(dendriform_to_prelie(s));
    } else if (rule == "plc_tilde") {
      write_structure(posthomlie_derive(s, PostTarget::Tilde));
    } else if (rule == "plc_admissible") {
      write_structure(posthomlie_derive(s, PostTarget::Admissible));
    } else if (rule == "plc_sub") {
      write_structure(posthomlie_derive(s, PostTarget::SubHomLie));
    } else if (rule == "plc_le1") {
      Le1Report lr = le1_report(s);
      std::ostringstream os;
      os << "hcs-report le1\n";
      os << "L=R1 " << (lr.statement_matches ? "yes" : "no") << "\n";
      os << "L=R2 " << (lr.proof_matches ? "yes" : "no") << "\n";
      out_text = os.str();
    } else if (rule == "rbl_post") {
      write_structure(rb_homlie_to_posthomlie(s));
    } else if (rule == "plc_tensor") {
      if (aux.empty())
        throw Error(Errc::SyntaxError, "plc_tensor needs --aux with the coassociative factor");
      write_structure(tensor_posthomlie(s, load_structure(aux)));
    } else if (rule == "tridend_post") {
      write_structure(tridend_to_posthomlie(s));
    } else if (rule == "postpoisson") {
      write_structure(postpoisson_to_homopoisson(s));
    } else if (rule == "opposite") {
      write_structure(opposite_tridend(s));
    } else if (rule == "com_regular") {
      write_comodule(regular_k_comodule(s, params.integer("k", 0)));
    } else {
      throw Error(Errc::UnknownKind, "unknown construction rule " + rule);
    }
  }

  if (out_path == "-")
    std::cout << out_text;
  else
    write_text_file(out_path, out_text);
  return kExitPass;
}

int run_search(const std::string& kind, int dim, const std::string& field, const std::string& mode,
               std::uint64_t budget, std::uint64_t seed, const std::string& out_dir,
               std::uint64_t max_witnesses) {
  SearchConfig sc;
  if (auto k = kind_from_name(kind))
    sc.kind = k;
  else if (auto ck = comodule_kind_from_name(kind))
    sc.comodule_kind = ck;
  else
    throw Error(Errc::UnknownKind, "unknown kind " + kind);
  sc.dim = dim;
  sc.field = parse_field_flag(field);
  if (mode == "exhaustive")
    sc.mode = SearchMode::Exhaustive;
  else if (mode == "random")
    sc.mode = SearchMode::Random;
  else
    throw Error(Errc::SyntaxError, "mode must be exhaustive or random");
  sc.budget = budget;
  sc.seed = seed;
  sc.max_witnesses = max_witnesses;

  SearchResult res = enumerate_instances(sc);
  std::filesystem::create_directories(out_dir);
  for (const auto& w : res.witnesses) {
    std::string body = w.is_comodule() ? emit_structure_file(w.comodule())
                                       : emit_structure_file(w.package());
    write_text_file(out_dir + "/" + witness_filename(w), body);
  }
  std::cout << "hcs-report search\n";
  std::cout << "kind = " << kind << "\n";
  std::cout << "candidates = " << res.candidates_tried << "\n";
  std::cout << "witnesses = " << res.witnesses.size() << "\n";
  std::cout << "budget_exceeded = " << (res.budget_exceeded ? "yes" : "no") << "\n";
  return kExitPass;
}

int run_verify(const std::string& id, int trials, int dim, const std::string& field_flag,
               std::uint64_t seed, std::uint64_t budget, const std::string& out_dir) {
  CampaignConfig cfg;
  cfg.trials = trials;
  cfg.max_dim = dim;
  if (!field_flag.empty()) cfg.field = parse_field_flag(field_flag);
  cfg.seed = seed;
  cfg.budget = budget;
  cfg.out_dir = out_dir;

  std::vector<std::string> ids;
  if (id == "all") {
    for (const auto& t : theorem_registry()) ids.push_back(t.id);
  } else {
    ids.push_back(id);
  }

  std::vector<CampaignReport> reports;
  bool refuted = false;
  auto t0 = std::chrono::steady_clock::now();
  for (const auto& tid : ids) {
    CampaignReport rep = verify_theorem(tid, cfg);
    std::cout << emit_campaign_report(rep);
    if (!rep.ok()) refuted = true;
    reports.push_back(std::move(rep));
  }
  auto t1 = std::chrono::steady_clock::now();
  std::filesystem::create_directories(out_dir);
  write_text_file(out_dir + "/discrepancies.txt", emit_discrepancies(reports));
  std::cerr << "elapsed_ms "
            << std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count() << "\n";
  return refuted ? kExitRefuted : kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification and construction engine for Hom-coalgebraic structures"};
  app.require_subcommand(1);

  std::string check_file, check_axioms;
  auto* check = app.add_subcommand("check", "evaluate every axiom of a package file");
  check->add_option("file", check_file)->required();
  check->add_option("--axioms", check_axioms, "comma-separated axiom subset");

  std::string oracle_file, oracle_axiom;
  auto* oracle = app.add_subcommand("oracle", "evaluate one axiom through the Sweedler expansion");
  oracle->add_option("file", oracle_file)->required();
  oracle->add_option("--axiom", oracle_axiom)->required();

  std::string cons_rule, cons_file, cons_aux, cons_out = "-";
  std::vector<std::string> cons_params;
  auto* cons = app.add_subcommand("construct", "apply a construction rule to a package file");
  cons->add_option("rule", cons_rule)->required();
  cons->add_option("file", cons_file)->required();
  cons->add_option("--aux", cons_aux, "second input file for binary rules");
  cons->add_option("--param", cons_params, "rule parameters k=v");
  cons->add_option("-o,--out", cons_out, "output file, '-' for stdout");

  std::string dual_file, dual_out = "-";
  auto* dual = app.add_subcommand("dualize", "transpose algebra constants to a coalgebra and back");
  dual->add_option("file", dual_file)->required();
  dual->add_option("-o,--out", dual_out)->required();

  std::string search_kind, search_field = "F5", search_mode = "random", search_out = ".";
  int search_dim = 2;
  std::uint64_t search_budget = 20000, search_seed = 0, search_max = 0;
  auto* search = app.add_subcommand("search", "find witnesses over a small field");
  search->add_option("kind", search_kind)->required();
  search->add_option("--dim", search_dim);
  search->add_option("--field", search_field);
  search->add_option("--mode", search_mode);
  search->add_option("--budget", search_budget);
  search->add_option("--seed", search_seed);
  search->add_option("--out", search_out);
  search->add_option("--max", search_max, "stop after this many witnesses");

  std::string vt_id, vt_field, vt_out = ".";
  int vt_trials = 25, vt_dim = 2;
  std::uint64_t vt_seed = 1, vt_budget = 60000;
  auto* vt = app.add_subcommand("verify-theorem", "run a hypothesis-to-conclusion campaign");
  vt->add_option("id", vt_id)->required();
  vt->add_option("--trials", vt_trials);
  vt->add_option("--dim", vt_dim);
  vt->add_option("--field", vt_field);
  vt->add_option("--seed", vt_seed);
  vt->add_option("--budget", vt_budget);
  vt->add_option("--out", vt_out);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*check) return run_check(check_file, check_axioms);
    if (*oracle) return run_oracle(oracle_file, oracle_axiom);
    if (*cons) {
      Params ps;
      for (const auto& kv : cons_params) {
        auto eq = kv.find('=');
        if (eq == std::string::npos)
          throw hcs::Error(hcs::Errc::SyntaxError, "--param needs k=v, got '" + kv + "'");
        ps.kv[kv.substr(0, eq)] = kv.substr(eq + 1);
      }
      return run_construct(cons_rule, cons_file, cons_aux, ps, cons_out);
    }
    if (*dual) return run_construct("dualize", dual_file, "", Params{}, dual_out);
    if (*search)
      return run_search(search_kind, search_dim, search_field, search_mode, search_budget,
                        search_seed, search_out, search_max);
    if (*vt) return run_verify(vt_id, vt_trials, vt_dim, vt_field, vt_seed, vt_budget, vt_out);
  } catch (const hcs::Error& e) {
    std::cerr << "error [" << hcs::errc_name(e.code()) << "]: " << e.what() << "\n";
    if (e.code() == hcs::Errc::NoWitnesses) return kExitNoWitnesses;
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
