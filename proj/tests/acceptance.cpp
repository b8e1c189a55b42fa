// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failed criteria. The CLI binary under test is argv[1].

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hcs/campaign.hpp"
#include "hcs/constructions.hpp"
#include "hcs/io.hpp"
#include "hcs/oracle.hpp"
#include "hcs/search.hpp"

#ifndef HCS_FIXTURE_DIR
#define HCS_FIXTURE_DIR "tests/fixtures"
#endif

using namespace hcs;
namespace fs = std::filesystem;

namespace {

struct Criterion {
  int number;
  std::string name;
  bool passed = true;
  std::vector<std::string> details;
  double seconds = 0;
};

struct Shell {
  std::string stdout_text;
  int exit_code = -1;
};

Shell run_command(const std::string& cmd) {
  Shell out;
  std::string full = cmd + " 2>/dev/null";
  FILE* p = popen(full.c_str(), "r");
  if (!p) return out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.stdout_text.append(buf.data(), n);
  int status = pclose(p);
  out.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

std::vector<StructurePackage> stored_structure_corpus(int max_dim) {
  CampaignConfig cfg;
  cfg.seed = 1;
  cfg.max_dim = max_dim;
  cfg.budget = 30000;
  std::vector<StructurePackage> corpus;
  for (auto k : all_structure_kinds()) {
    auto pool = structure_pool(k, cfg, 12);
    corpus.insert(corpus.end(), pool.begin(), pool.end());
  }
  return corpus;
}

}  // namespace

int main(int argc, char** argv) {
  std::string hcs_bin = argc > 1 ? argv[1] : "";
  fs::path scratch = fs::temp_directory_path() / "hcs-acceptance";
  fs::remove_all(scratch);
  fs::create_directories(scratch);

  std::vector<Criterion> criteria;
  auto timed = [&](int number, const std::string& name, auto&& body) {
    Criterion c{number, name};
    auto t0 = std::chrono::steady_clock::now();
    try {
      body(c);
    } catch (const std::exception& e) {
      c.passed = false;
      c.details.push_back(std::string("exception: ") + e.what());
    }
    auto t1 = std::chrono::steady_clock::now();
    c.seconds = std::chrono::duration<double>(t1 - t0).count();
    criteria.push_back(std::move(c));
  };

  // 1. Oracle equivalence: 200 random raw packages per kind, dim 3, F7, seed 1.
  timed(1, "oracle equivalence (200 raw packages per kind, dim 3, F7, seed 1)", [&](Criterion& c) {
    auto f7 = FieldSpec::prime(7);
    std::mt19937_64 rng(1);
    long long disagreements = 0;
    for (auto k : all_structure_kinds()) {
      for (int trial = 0; trial < 200; ++trial) {
        StructurePackage s = random_raw_package(k, 3, f7, rng);
        for (const auto& ax : axioms_of(k)) {
          bool checker = axiom_residual(s, ax.id).is_zero();
          bool oracle = sweedler_oracle_check(s, ax.id).passed;
          if (checker != oracle) {
            ++disagreements;
            c.details.push_back(std::string(kind_name(k)) + "/" + ax.id + " trial " +
                                std::to_string(trial));
          }
        }
      }
    }
    if (disagreements != 0) c.passed = false;
  });

  // 2. Trivial suite.
  timed(2, "trivial suite (zero packages, alpha elision, dim-1 cobracket enumeration)",
        [&](Criterion& c) {
          for (auto k : all_structure_kinds())
            for (int dim : {1, 2, 3})
              for (const auto& f : {FieldSpec::prime(3), FieldSpec::prime(5), FieldSpec::rationals()})
                if (!check_structure(make_zero_package(k, f, dim)).full_pass) {
                  c.passed = false;
                  c.details.push_back(std::string("zero package fails for ") + kind_name(k));
                }

          std::mt19937_64 rng(2);
          auto f5 = FieldSpec::prime(5);
          for (auto k : all_structure_kinds()) {
            for (int trial = 0; trial < 20; ++trial) {
              StructurePackage raw = random_raw_package(k, 1 + static_cast<int>(rng() % 3), f5, rng);
              raw.alpha = TensorMap::identity(f5, raw.space);
              CheckReport a = check_structure(raw);
              CheckReport b = check_structure(raw, nullptr, true);
              for (std::size_t i = 0; i < a.entries.size(); ++i)
                if (a.entries[i].passed != b.entries[i].passed) {
                  c.passed = false;
                  c.details.push_back(std::string("alpha elision verdict differs for ") +
                                      kind_name(k) + "/" + a.entries[i].axiom_id);
                }
            }
          }

          for (std::uint32_t p : {3u, 5u}) {
            SearchConfig sc;
            sc.kind = StructureKind::HomLie;
            sc.dim = 1;
            sc.field = FieldSpec::prime(p);
            sc.mode = SearchMode::Exhaustive;
            sc.budget = 0;
            for (const auto& w : enumerate_instances(sc).witnesses)
              if (!w.package().comap("gamma").is_zero()) {
                c.passed = false;
                c.details.push_back("dim-1 cobracket enumeration found a nonzero gamma");
              }
          }
        });

  // 3. Theorem campaigns: every non-report-only id at >= 25 witnesses.
  timed(3, "theorem campaigns (>= 25 witnesses each, F5 + Q fixtures, dim <= 2)", [&](Criterion& c) {
    CampaignConfig cfg;
    cfg.trials = 25;
    cfg.max_dim = 2;
    cfg.seed = 1;
    cfg.out_dir = (scratch / "campaigns").string();
    for (const auto& info : theorem_registry()) {
      if (info.report_only) continue;
      CampaignReport rep = verify_theorem(info.id, cfg);
      if (rep.trials < 25) {
        c.passed = false;
        c.details.push_back(info.id + ": only " + std::to_string(rep.trials) + " witnesses");
      }
      if (rep.fails != 0) {
        c.passed = false;
        std::string line = info.id + ": " + std::to_string(rep.fails) + "/" +
                           std::to_string(rep.trials) + " conclusions refuted";
        if (!rep.counterexample_files.empty())
          line += ", minimized witness " + rep.counterexample_files.front();
        c.details.push_back(line);
      }
    }
  });

  // 4. Report-only ledger runs to completion and is parseable.
  timed(4, "report-only ledger (internal discrepancies surfaced, no truth asserted)",
        [&](Criterion& c) {
          CampaignConfig cfg;
          cfg.trials = 25;
          cfg.max_dim = 2;
          cfg.seed = 1;
          cfg.out_dir = (scratch / "ledger").string();
          std::vector<CampaignReport> reports;
          for (const auto& info : theorem_registry()) {
            if (!info.report_only) continue;
            reports.push_back(verify_theorem(info.id, cfg));
            if (reports.back().trials == 0) {
              c.passed = false;
              c.details.push_back(info.id + " ran no witnesses");
            }
          }
          bool has_le1 = false;
          for (const auto& rep : reports)
            if (rep.theorem == "L-le1") {
              has_le1 = true;
              bool tally = false;
              for (const auto& l : rep.ledger)
                if (l.find("tally") != std::string::npos) tally = true;
              if (!tally) {
                c.passed = false;
                c.details.push_back("L-le1 ledger lacks the verdict tally");
              }
            }
          if (!has_le1) {
            c.passed = false;
            c.details.push_back("L-le1 campaign missing");
          }
          std::string text = emit_discrepancies(reports);
          fs::create_directories(scratch / "ledger");
          write_text_file((scratch / "ledger" / "discrepancies.txt").string(), text);
          // parse the ledger back: header then campaign/entry lines
          std::istringstream is(text);
          std::string line;
          std::getline(is, line);
          if (line != "hcs-discrepancies") {
            c.passed = false;
            c.details.push_back("ledger header malformed");
          }
          int campaigns = 0;
          while (std::getline(is, line)) {
            if (line.rfind("campaign ", 0) == 0)
              ++campaigns;
            else if (line.rfind("  ", 0) != 0) {
              c.passed = false;
              c.details.push_back("unparseable ledger line: " + line);
            }
          }
          if (campaigns < 5) {
            c.passed = false;
            c.details.push_back("expected at least five report-only campaigns in the ledger");
          }
        });

  // 5. Structural involutions over the stored witness corpus.
  timed(5, "structural involutions (exhaustive over stored witnesses, dim <= 3)", [&](Criterion& c) {
    auto corpus = stored_structure_corpus(3);
    if (corpus.size() < 40) {
      c.passed = false;
      c.details.push_back("witness corpus unexpectedly small");
    }
    auto fail = [&](const std::string& what) {
      c.passed = false;
      if (c.details.size() < 8) c.details.push_back(what);
    };
    for (const auto& w : corpus) {
      for (const auto& [name, m] : w.comaps) {
        if (permute(LegPermutation::tau(), permute(LegPermutation::tau(), m)) != m)
          fail("tau involution violated");
        TensorMap probe = compose_pair(w.alpha, m, m);
        TensorMap x = probe;
        for (int i = 0; i < 3; ++i) x = permute(LegPermutation::xi(), x);
        if (x != probe) fail("xi^3 violated");
      }
      if (w.kind == StructureKind::HomTridendriform) {
        if (opposite_tridend(opposite_tridend(w)) != w) fail("opposite involution violated");
        if (dualize_algebra(dualize_package(w)) != w) fail("dualize involution violated");
      }
      switch (w.kind) {
        case StructureKind::HomCoassoc:
        case StructureKind::HomLie:
        case StructureKind::HomTridendriform:
        case StructureKind::PostHomLie: {
          if (yau_twist(w, TensorMap::identity(w.field, w.space)) != w)
            fail("identity twist is not the identity");
          break;
        }
        default:
          break;
      }
    }
    // twist_n0 additivity over comodule witnesses
    CampaignConfig cfg;
    cfg.seed = 1;
    for (auto ck : {ComoduleKind::TridendComodule, ComoduleKind::PostHomLieComodule}) {
      for (const auto& cm : comodule_pool(ck, cfg, 8)) {
        ComoduleRuleParams pa, pb, pab;
        pa.n = 1;
        pb.n = 2;
        pab.n = 3;
        ComodulePackage lhs =
            comodule_derive(comodule_derive(cm, ComoduleRule::TwistN0, pa), ComoduleRule::TwistN0, pb);
        if (!(lhs == comodule_derive(cm, ComoduleRule::TwistN0, pab))) fail("twist_n0 not additive");
      }
    }
  });

  // 6. Regular comodules over every stored coalgebra witness.
  timed(6, "regular comodules (every stored witness is a comodule over itself)", [&](Criterion& c) {
    CampaignConfig cfg;
    cfg.seed = 1;
    cfg.max_dim = 3;
    cfg.budget = 30000;
    int checked = 0;
    for (auto k : {StructureKind::HomTridendriform, StructureKind::PostHomLie}) {
      for (const auto& w : structure_pool(k, cfg, 12)) {
        ++checked;
        if (!check_comodule(regular_comodule(w)).full_pass) {
          c.passed = false;
          c.details.push_back(std::string("self-comodule fails over a ") + kind_name(k) + " witness");
        }
      }
    }
    if (checked < 10) {
      c.passed = false;
      c.details.push_back("too few stored coalgebra witnesses");
    }
  });

  // 7. CLI contract: fixpoint corpus, byte-identical reports, exit codes.
  timed(7, "CLI contract (parse/emit fixpoint, reproducible reports, exit codes 0/1/2/3)",
        [&](Criterion& c) {
          if (hcs_bin.empty()) {
            c.passed = false;
            c.details.push_back("hcs binary path not supplied");
            return;
          }
          fs::path fixture_dir(HCS_FIXTURE_DIR);
          int corpus = 0;
          for (const auto& entry : fs::directory_iterator(fixture_dir)) {
            if (entry.path().extension() != ".hcs") continue;
            std::string name = entry.path().filename().string();
            if (name.rfind("err-", 0) == 0) continue;
            std::string text = read_text_file(entry.path().string());
            if (emit_parsed(parse_structure_file(text)) != text) {
              c.passed = false;
              c.details.push_back("fixpoint violated for " + name);
            }
            ++corpus;
          }
          if (corpus < 12) {
            c.passed = false;
            c.details.push_back("fixture corpus too small");
          }

          fs::path vt_out = scratch / "cli";
          std::string vt_cmd = hcs_bin + " verify-theorem T-am1 --seed 7 --out " +
                               (vt_out / "a").string();
          Shell r1 = run_command(vt_cmd);
          Shell r2 = run_command(vt_cmd);
          if (r1.stdout_text != r2.stdout_text || r1.stdout_text.empty()) {
            c.passed = false;
            c.details.push_back("verify-theorem reports are not byte-identical across runs");
          }
          std::string s_cmd = hcs_bin + " search HomLie --dim 2 --field F3 --mode exhaustive --out ";
          Shell s1 = run_command(s_cmd + (vt_out / "s1").string());
          Shell s2 = run_command(s_cmd + (vt_out / "s2").string());
          if (s1.stdout_text != s2.stdout_text) {
            c.passed = false;
            c.details.push_back("search reports differ across identical runs");
          }
          for (const auto& entry : fs::directory_iterator(vt_out / "s1")) {
            std::string other = (vt_out / "s2" / entry.path().filename()).string();
            if (!fs::exists(other) ||
                read_text_file(entry.path().string()) != read_text_file(other)) {
              c.passed = false;
              c.details.push_back("witness files differ across identical runs");
              break;
            }
          }

          struct Scenario {
            std::string cmd;
            int expect;
            const char* label;
          };
          std::vector<Scenario> scenarios = {
              {hcs_bin + " check " + (fixture_dir / "q-posthomlie-d2.hcs").string(), 0,
               "valid package checks clean"},
              {hcs_bin + " check " + (fixture_dir / "fail-skew.hcs").string(), 1,
               "refuted package exits 1"},
              {hcs_bin + " check " + (fixture_dir / "err-syntax.hcs").string(), 2,
               "syntax error exits 2"},
              {hcs_bin + " verify-theorem T-plc-admissible --field F2 --dim 1 --out " +
                   (vt_out / "nw").string(),
               3, "characteristic-2 admissibility campaign exits 3 (no witnesses)"},
          };
          for (const auto& s : scenarios) {
            Shell r = run_command(s.cmd);
            if (r.exit_code != s.expect) {
              c.passed = false;
              c.details.push_back(std::string(s.label) + ": expected exit " +
                                  std::to_string(s.expect) + ", got " +
                                  std::to_string(r.exit_code));
            }
          }
        });

  int failed = 0;
  std::ostringstream summary;
  for (const auto& c : criteria) {
    if (!c.passed) ++failed;
    std::ostringstream line;
    line << (c.passed ? "[PASS]" : "[FAIL]") << " criterion " << c.number << ": " << c.name << " ["
         << static_cast<int>(c.seconds * 1000) / 1000.0 << "s]";
    std::cout << line.str() << "\n";
    for (const auto& d : c.details) std::cout << "       - " << d << "\n";
  }
  std::cout << (failed == 0 ? "acceptance: all criteria pass"
                            : "acceptance: " + std::to_string(failed) + " criterion(s) failed")
            << "\n";
  return failed;
}
