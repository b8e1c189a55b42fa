#include "hcs/campaign.hpp"

#include <algorithm>
#include <filesystem>
#include <set>
#include <sstream>

namespace hcs {

namespace {

using TM = TensorMap;

TM comap2(const FieldSpec& f, const SpaceId& c,
          const std::vector<std::tuple<int, int, int, long long>>& entries) {
  TM t(f, c, {c, c});
  for (const auto& [i, a, b, v] : entries) {
    int js[2] = {a, b};
    t.set(i, js, t.at2(i, a, b) + Scalar(f, v));
  }
  return t;
}

TM diag(const FieldSpec& f, const SpaceId& c, const std::vector<long long>& d) {
  TM t(f, c, {c});
  for (int i = 0; i < c.dim; ++i) {
    int js[1] = {i};
    t.set(i, js, Scalar(f, d[i]));
  }
  return t;
}

StructurePackage pack(StructureKind k, const FieldSpec& f, const SpaceId& c, TM alpha,
                      std::vector<std::pair<std::string, TM>> comaps,
                      std::optional<RotaBaxter> rb = std::nullopt) {
  StructurePackage s{k, c, f, std::move(alpha), {}, std::move(rb)};
  for (auto& [n, m] : comaps) s.comaps.emplace(n, std::move(m));
  return s;
}

}  // namespace

std::vector<StructurePackage> builtin_structure_witnesses(StructureKind k, const FieldSpec& f) {
  std::vector<StructurePackage> out;
  SpaceId c1{"C", 1}, c2{"C", 2};
  TM id1 = TM::identity(f, c1), id2 = TM::identity(f, c2);
  TM zero2 = TM::zero(f, c2, {c2, c2});
  TM grouplike1 = comap2(f, c1, {{0, 0, 0, 1}});
  // canonical dim-2 cobracket gamma(e1) = e1^e2 - e2^e1
  TM lie2 = comap2(f, c2, {{0, 0, 1, 1}, {0, 1, 0, -1}});

  switch (k) {
    case StructureKind::HomCoassoc: {
      out.push_back(pack(k, f, c1, id1, {{"delta", grouplike1}}));
      out.push_back(pack(k, f, c2, id2,
                         {{"delta", comap2(f, c2, {{0, 0, 0, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}})}}));
      out.push_back(pack(k, f, c2, id2, {{"delta", comap2(f, c2, {{0, 0, 0, 1}, {1, 1, 1, 1}})}}));
      out.push_back(pack(k, f, c2, diag(f, c2, {1, 0}), {{"delta", comap2(f, c2, {{0, 0, 0, 1}})}}));
      out.push_back(pack(k, f, c2, diag(f, c2, {1, 2}), {{"delta", comap2(f, c2, {{0, 0, 0, 1}})}}));
      break;
    }
    case StructureKind::HomLie: {
      out.push_back(pack(k, f, c2, id2, {{"gamma", lie2}}));
      out.push_back(pack(k, f, c2, diag(f, c2, {2, 1}),
                         {{"gamma", comap2(f, c2, {{0, 0, 1, 2}, {0, 1, 0, -2}})}}));
      out.push_back(pack(k, f, c1, id1, {{"gamma", TM::zero(f, c1, {c1, c1})}}));
      break;
    }
    case StructureKind::HomCoassocRB: {
      for (long long w : {0ll, 1ll, -1ll})
        for (long long s : {0ll, 1ll}) {
          out.push_back(pack(k, f, c2, id2, {{"delta", comap2(f, c2, {{0, 0, 0, 1}})}},
                             RotaBaxter{diag(f, c2, {-w, s}), Scalar(f, w)}));
          out.push_back(pack(k, f, c2, id2, {{"delta", comap2(f, c2, {{0, 0, 0, 1}})}},
                             RotaBaxter{TM::zero(f, c2, {c2}), Scalar(f, w)}));
        }
      break;
    }
    case StructureKind::HomLieRB: {
      for (long long w : {0ll, 1ll, -1ll})
        for (long long s : {0ll, 1ll})
          out.push_back(
              pack(k, f, c2, id2, {{"gamma", lie2}}, RotaBaxter{diag(f, c2, {-w, s}), Scalar(f, w)}));
      break;
    }
    case StructureKind::HomPreLie: {
      out.push_back(pack(k, f, c1, id1, {{"delta", grouplike1}}));
      out.push_back(pack(k, f, c2, id2, {{"delta", zero2}}));
      break;
    }
    case StructureKind::HomDendriform: {
      for (long long b : {1ll, 2ll})
        out.push_back(pack(k, f, c2, diag(f, c2, {1, b}),
                           {{"delta_m1", comap2(f, c2, {{0, 0, 0, 1}})},
                            {"delta_1", comap2(f, c2, {{1, 0, 1, b}})}}));
      out.push_back(pack(k, f, c1, id1, {{"delta_m1", grouplike1}, {"delta_1", TM::zero(f, c1, {c1, c1})}}));
      break;
    }
    case StructureKind::HomTridendriform: {
      for (long long b : {1ll, 2ll, 3ll})
        out.push_back(pack(k, f, c2, diag(f, c2, {1, b}),
                           {{"delta_m1", comap2(f, c2, {{0, 0, 0, 1}})},
                            {"delta_0", zero2},
                            {"delta_1", comap2(f, c2, {{1, 0, 1, b}})}}));
      out.push_back(pack(k, f, c2, diag(f, c2, {2, 3}),
                         {{"delta_m1", zero2}, {"delta_0", zero2}, {"delta_1", zero2}}));
      out.push_back(pack(k, f, c1, diag(f, c1, {2}),
                         {{"delta_m1", TM::zero(f, c1, {c1, c1})},
                          {"delta_0", TM::zero(f, c1, {c1, c1})},
                          {"delta_1", TM::zero(f, c1, {c1, c1})}}));
      out.push_back(pack(k, f, c1, id1,
                         {{"delta_m1", TM::zero(f, c1, {c1, c1})},
                          {"delta_0", grouplike1},
                          {"delta_1", TM::zero(f, c1, {c1, c1})}}));
      out.push_back(pack(k, f, c2, id2,
                         {{"delta_m1", zero2},
                          {"delta_0", comap2(f, c2, {{0, 0, 0, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}})},
                          {"delta_1", zero2}}));
      break;
    }
    case StructureKind::CoCommHomTridendriform: {
      out.push_back(pack(k, f, c1, id1,
                         {{"delta_star", grouplike1}, {"delta_ast", comap2(f, c1, {{0, 0, 0, -1}})}}));
      out.push_back(pack(k, f, c1, id1,
                         {{"delta_star", TM::zero(f, c1, {c1, c1})}, {"delta_ast", grouplike1}}));
      break;
    }
    case StructureKind::PostHomLie: {
      for (long long cc : {1ll, 2ll})
        out.push_back(pack(k, f, c2, id2,
                           {{"gamma", lie2}, {"delta", comap2(f, c2, {{0, 1, 1, cc}})}}));
      out.push_back(pack(k, f, c2, id2, {{"gamma", lie2}, {"delta", zero2}}));
      out.push_back(pack(k, f, c1, id1,
                         {{"gamma", TM::zero(f, c1, {c1, c1})}, {"delta", grouplike1}}));
      break;
    }
    case StructureKind::HomPoisson: {
      out.push_back(pack(k, f, c2, id2, {{"gamma", lie2}, {"delta_ast", zero2}}));
      out.push_back(pack(k, f, c1, id1,
                         {{"gamma", TM::zero(f, c1, {c1, c1})}, {"delta_ast", grouplike1}}));
      break;
    }
    case StructureKind::PostHomPoisson: {
      TM z1 = TM::zero(f, c1, {c1, c1});
      out.push_back(pack(k, f, c1, id1,
                         {{"gamma", z1},
                          {"delta", z1},
                          {"delta_star", grouplike1},
                          {"delta_ast", comap2(f, c1, {{0, 0, 0, -1}})}}));
      out.push_back(pack(k, f, c1, id1,
                         {{"gamma", z1}, {"delta", grouplike1}, {"delta_star", z1}, {"delta_ast", z1}}));
      out.push_back(pack(k, f, c2, id2,
                         {{"gamma", lie2},
                          {"delta", comap2(f, c2, {{0, 1, 1, 1}})},
                          {"delta_star", zero2},
                          {"delta_ast", zero2}}));
      break;
    }
  }
  // the all-zero package solves every homogeneous identity
  out.push_back(make_zero_package(k, f, 2));

  std::vector<StructurePackage> ok;
  for (auto& s : out)
    if (passes_full_check(s)) ok.push_back(std::move(s));
  return ok;
}

namespace {

std::vector<FieldSpec> pool_fields(const CampaignConfig& cfg) {
  if (cfg.field) return {*cfg.field};
  return {FieldSpec::prime(5), FieldSpec::rationals()};
}

FieldSpec search_field(const CampaignConfig& cfg) {
  if (cfg.field && cfg.field->kind() == FieldKind::PrimeField) return *cfg.field;
  return FieldSpec::prime(5);
}

}  // namespace

std::vector<StructurePackage> structure_pool(StructureKind k, const CampaignConfig& cfg,
                                             std::size_t want) {
  std::vector<StructurePackage> pool;
  std::set<std::string> seen;
  auto push = [&](const StructurePackage& s) {
    if (s.space.dim > cfg.max_dim) return;
    if (!seen.insert(emit_structure_file(s)).second) return;
    pool.push_back(s);
  };

  for (const auto& f : pool_fields(cfg))
    for (const auto& s : builtin_structure_witnesses(k, f)) push(s);

  FieldSpec sf = search_field(cfg);
  for (int d = 1; d <= cfg.max_dim && pool.size() < want; ++d) {
    SearchConfig sc;
    sc.kind = k;
    sc.dim = d;
    sc.field = sf;
    sc.mode = SearchMode::Random;
    sc.budget = cfg.budget / static_cast<std::uint64_t>(cfg.max_dim ? cfg.max_dim : 1);
    sc.seed = cfg.seed + static_cast<std::uint64_t>(d);
    sc.max_witnesses = want;
    for (const auto& w : enumerate_instances(sc).witnesses) push(w.package());
  }
  return pool;
}

std::vector<ComodulePackage> comodule_pool(ComoduleKind k, const CampaignConfig& cfg,
                                           std::size_t want) {
  std::vector<ComodulePackage> pool;
  std::set<std::string> seen;
  auto push = [&](const ComodulePackage& cmp) {
    if (cmp.mspace.dim > cfg.max_dim || cmp.base.space.dim > cfg.max_dim) return;
    if (!seen.insert(emit_structure_file(cmp)).second) return;
    pool.push_back(cmp);
  };

  CampaignConfig bc = cfg;
  auto bases = structure_pool(comodule_base_kind(k), bc, 8);
  for (const auto& base : bases) {
    // the regular comodule and the zero comodule always exist
    push(regular_comodule(base));
    ComodulePackage z = regular_comodule(base);
    for (auto& [n, m] : z.maps) m = TM::zero(base.field, z.mspace, {base.space, z.mspace});
    z.alpha_m = TM::identity(base.field, z.mspace);
    push(z);
  }
  std::uint64_t base_index = 0;
  for (const auto& base : bases) {
    ++base_index;
    if (pool.size() >= want) break;
    if (base.field.kind() != FieldKind::PrimeField) continue;
    SearchConfig sc;
    sc.comodule_kind = k;
    sc.dim = std::min(cfg.max_dim, 2);
    sc.field = base.field;
    sc.mode = SearchMode::Random;
    sc.budget = cfg.budget / (2 * bases.size() + 1);
    sc.seed = cfg.seed + 100 + base_index;
    sc.fixed_base = &base;
    sc.max_witnesses = 4;
    for (const auto& w : enumerate_instances(sc).witnesses) push(w.comodule());
  }
  return pool;
}

const std::vector<TheoremInfo>& theorem_registry() {
  static const std::vector<TheoremInfo> reg = {
      {"T-ha1", "coassociative coalgebra twisted by an endomorphism is comultiplicative Hom-coassociative", false},
      {"T-amb", "Lie coalgebra twisted by an endomorphism is a Hom-Lie coalgebra", false},
      {"T-am1", "commutator cobracket of a Hom-coassociative coalgebra is Hom-Lie", false},
      {"T-ib", "commutator cobracket checked through the Sweedler expansion path", false},
      {"T-op", "a package passes the tridendriform check iff its tau-opposite does", false},
      {"T-dual", "dual of a finite-dimensional tridendriform algebra is a tridendriform coalgebra", false},
      {"T-tridend-twist", "endomorphism twist of a Hom-tridendriform coalgebra", false},
      {"T-tridend-power", "alpha^n twist of a multiplicative Hom-tridendriform coalgebra", false},
      {"T-tridend-untwist", "alpha^-1 twist reaches a coalgebra with identity twist map", false},
      {"T-tridend-sum", "the sum of the three comaps is Hom-coassociative", false},
      {"T-rb-tridend", "Rota-Baxter Hom-coassociative coalgebra induces a tridendriform coalgebra", false},
      {"T-rb-dendriform", "weight-absorbed dendriform coalgebra from a Rota-Baxter coalgebra", false},
      {"T-dend-prelie", "Hom-dendriform coalgebra induces a Hom-preLie coalgebra", false},
      {"T-rb0-prelie", "weight-0 Rota-Baxter coalgebra induces a Hom-preLie coalgebra", false},
      {"T-rbm1-prelie", "weight=-1 Rota-Baxter coalgebra induces a Hom-preLie coalgebra", false},
      {"T-b-dendriform", "shifted operator dendriform construction, weight tried at 1 and -1", false},
      {"T-com3-n0", "(alpha^n x Id) twist of a tridendriform comodule", false},
      {"T-com3-0k", "alpha_M^(2^k-1) twist of a tridendriform comodule, exponents as printed", false},
      {"T-com3-nk", "combined (n,k) comodule twist from the garbled remark", true},
      {"T-plc-twist", "endomorphism twist of a post-Hom-Lie coalgebra", false},
      {"T-plc-tilde", "(delta+gamma, -gamma) is again post-Hom-Lie", false},
      {"T-plc-admissible", "commutator of delta + gamma/2 satisfies the Hom-co-Jacobi identity", false},
      {"L-le1", "half-twist associator lemma: statement vs proof-end right-hand side", true},
      {"T-rbl-post", "Rota-Baxter Hom-Lie coalgebra induces a post-Hom-Lie coalgebra", false},
      {"T-plc-tensor", "tensor with a cocommutative Hom-coassociative factor", false},
      {"T-tridend-post", "tridendriform to post-Hom-Lie under the epsilon-as-xi reading", true},
      {"T-postpoisson", "post-Hom-Poisson to cocommutative Hom-Poisson under the epsilon-as-xi reading", true},
      {"T-com-sum", "direct sum of two post-Hom-Lie comodules", false},
      {"T-com-regular", "(alpha^k x I) regular comodule over a multiplicative post-Hom-Lie coalgebra", false},
      {"T-com-tensor", "tensor product of two post-Hom-Lie comodules", false},
      {"T-com-n0", "(alpha^n x Id) twist of a post-Hom-Lie comodule", false},
      {"T-com-0k", "alpha_M^(2^k) twist of a post-Hom-Lie comodule, exponents as printed", true},
      {"T-com-beta", "(beta, beta_M) twist of a post-Hom-Lie comodule", false},
  };
  return reg;
}

std::optional<TheoremInfo> theorem_info(const std::string& id) {
  for (const auto& t : theorem_registry())
    if (t.id == id) return t;
  return std::nullopt;
}

namespace {

struct Runner {
  const CampaignConfig& cfg;
  CampaignReport rep;
  int counterexamples = 0;

  explicit Runner(const std::string& id, const CampaignConfig& c) : cfg(c) {
    rep.theorem = id;
    rep.seed = c.seed;
    rep.report_only = theorem_info(id)->report_only;
  }

  bool enough() const { return rep.trials >= cfg.trials; }

  void pass() {
    ++rep.trials;
    ++rep.passes;
  }

  template <typename P, typename FailPred>
  void fail(const P& hyp, const FailPred& still_fails, const std::string& label) {
    ++rep.trials;
    ++rep.fails;
    rep.notes.push_back("refuted: " + label);
    if (!cfg.write_counterexamples || rep.report_only) return;
    std::filesystem::create_directories(cfg.out_dir);
    P minimized = hyp;
    if constexpr (std::is_same_v<P, StructurePackage>)
      minimized = minimize_package(hyp, still_fails);
    else
      minimized = minimize_comodule(hyp, still_fails);
    std::string path = cfg.out_dir + "/counterexample-" + rep.theorem + "-" +
                       std::to_string(counterexamples++) + ".hcs";
    write_text_file(path, emit_structure_file(minimized));
    rep.counterexample_files.push_back(path);
  }

  template <typename P, typename Conclusion>
  void run_trial(const P& hyp, const Conclusion& conclusion_ok, const std::string& label) {
    bool ok = false;
    try {
      ok = conclusion_ok(hyp);
    } catch (const Error& e) {
      // a construction precondition failed for this witness; not a trial
      rep.notes.push_back("skipped " + label + ": " + e.what());
      return;
    }
    if (ok) {
      pass();
    } else {
      auto still_fails = [&](const P& p) {
        if (!passes_full_check(p)) return false;
        try {
          return !conclusion_ok(p);
        } catch (const Error&) {
          return false;
        }
      };
      fail(hyp, still_fails, label);
    }
  }
};

bool conclusion_full(const StructurePackage& s) {
  return passes_full_check(s);
}

bool comodule_axioms_full(const ComodulePackage& cm) {
  for (const auto& ax : comodule_axioms_of(cm.kind))
    if (!comodule_axiom_residual(cm, ax.id).is_zero()) return false;
  return true;
}

std::vector<StructurePackage> classical_pool(StructureKind k, const CampaignConfig& cfg,
                                             std::size_t want) {
  std::vector<StructurePackage> out;
  for (const auto& s : structure_pool(k, cfg, want * 3)) {
    if (s.alpha == TM::identity(s.field, s.space)) out.push_back(s);
  }
  // dedicated search with alpha pinned to the identity
  FieldSpec sf = search_field(cfg);
  std::set<std::string> seen;
  for (const auto& s : out) seen.insert(emit_structure_file(s));
  for (int d = 1; d <= cfg.max_dim && out.size() < want; ++d) {
    SearchConfig sc;
    sc.kind = k;
    sc.dim = d;
    sc.field = sf;
    sc.mode = SearchMode::Random;
    sc.budget = cfg.budget / 2;
    sc.seed = cfg.seed + 40 + static_cast<std::uint64_t>(d);
    SpaceId c{"C", d};
    sc.fixed.emplace("alpha", TM::identity(sf, c));
    sc.max_witnesses = want;
    for (const auto& w : enumerate_instances(sc).witnesses)
      if (seen.insert(emit_structure_file(w.package())).second) out.push_back(w.package());
  }
  return out;
}

std::vector<StructurePackage> rb_pool_with_weight(StructureKind k, const CampaignConfig& cfg,
                                                  long long w, std::size_t want) {
  std::vector<StructurePackage> out;
  std::set<std::string> seen;
  for (const auto& s : structure_pool(k, cfg, want * 2)) {
    if (s.rb && s.rb->weight == Scalar(s.field, w) && seen.insert(emit_structure_file(s)).second)
      out.push_back(s);
  }
  FieldSpec sf = search_field(cfg);
  for (int d = 1; d <= cfg.max_dim && out.size() < want; ++d) {
    SearchConfig sc;
    sc.kind = k;
    sc.dim = d;
    sc.field = sf;
    sc.mode = SearchMode::Random;
    sc.budget = cfg.budget / 2;
    sc.seed = cfg.seed + 70 + static_cast<std::uint64_t>(d);
    sc.fixed_weight = Scalar(sf, w);
    sc.max_witnesses = want;
    for (const auto& x : enumerate_instances(sc).witnesses)
      if (seen.insert(emit_structure_file(x.package())).second) out.push_back(x.package());
  }
  return out;
}

// group comodules by their base so binary rules pair compatible inputs
std::vector<std::vector<ComodulePackage>> comodules_by_base(const std::vector<ComodulePackage>& pool) {
  std::map<std::string, std::vector<ComodulePackage>> groups;
  for (const auto& cm : pool) groups[emit_structure_file(cm.base)].push_back(cm);
  std::vector<std::vector<ComodulePackage>> out;
  for (auto& [key, g] : groups) out.push_back(std::move(g));
  return out;
}

}  // namespace

CampaignReport verify_theorem(const std::string& id, const CampaignConfig& cfg) {
  auto info = theorem_info(id);
  if (!info) throw Error(Errc::UnknownKind, "unknown theorem id " + id);
  Runner r(id, cfg);
  std::size_t want = static_cast<std::size_t>(cfg.trials);

  auto need_pool = [&](std::size_t n) {
    if (n == 0) throw Error(Errc::NoWitnesses, "no hypothesis witnesses for " + id);
  };

  if (id == "T-ha1" || id == "T-amb") {
    StructureKind k = id == "T-ha1" ? StructureKind::HomCoassoc : StructureKind::HomLie;
    auto pool = classical_pool(k, cfg, want);
    need_pool(pool.size());
    for (const auto& w : pool) {
      if (r.enough()) break;
      auto betas = structure_endomorphisms(w, 5, cfg.seed);
      for (std::size_t bi = 0; bi < betas.size() && !r.enough(); ++bi) {
        const TM beta = betas[bi];
        r.run_trial(
            w, [&](const StructurePackage& p) { return conclusion_full(yau_twist(p, beta)); },
            id + " beta#" + std::to_string(bi));
      }
    }
  } else if (id == "T-am1" || id == "T-ib") {
    auto pool = structure_pool(StructureKind::HomCoassoc, cfg, want);
    need_pool(pool.size());
    for (std::size_t i = 0; i < pool.size() && !r.enough(); ++i) {
      r.run_trial(
          pool[i],
          [&](const StructurePackage& p) {
            StructurePackage lie = commutator_cobracket(p);
            if (id == "T-am1") return conclusion_full(lie);
            for (const auto& ax : axioms_of(lie.kind))
              if (!sweedler_oracle_check(lie, ax.id).passed) return false;
            return true;
          },
          id + " witness#" + std::to_string(i));
    }
  } else if (id == "T-op") {
    std::mt19937_64 rng(cfg.seed);
    FieldSpec f = search_field(cfg);
    int raw_trials = std::max(cfg.trials, 50);
    for (int t = 0; t < raw_trials; ++t) {
      StructurePackage s = random_raw_package(StructureKind::HomTridendriform, 2, f, rng);
      StructurePackage op = opposite_tridend(s);
      StructurePackage opop = opposite_tridend(op);
      bool same_verdict = passes_full_check(s) == passes_full_check(op) && opop == s;
      if (same_verdict)
        r.pass();
      else
        r.fail(s, [](const StructurePackage&) { return false; }, "opposite verdict mismatch");
    }
    for (const auto& w : structure_pool(StructureKind::HomTridendriform, cfg, 8)) {
      if (!passes_full_check(opposite_tridend(w)))
        r.fail(w, [](const StructurePackage&) { return false; }, "opposite of witness fails");
      else
        r.pass();
    }
  } else if (id == "T-dual") {
    auto pool = structure_pool(StructureKind::HomTridendriform, cfg, want);
    need_pool(pool.size());
    for (std::size_t i = 0; i < pool.size() && !r.enough(); ++i) {
      r.run_trial(
          pool[i],
          [&](const StructurePackage& p) {
            AlgebraConstants a = dualize_package(p);
            StructurePackage back = dualize_algebra(a);
            return back == p && conclusion_full(back);
          },
          "double transpose witness#" + std::to_string(i));
    }
    // handcrafted algebra fixtures
    for (const auto& f : pool_fields(cfg)) {
      SpaceId c2{"C", 2};
      AlgebraConstants assoc{f, c2, TM::identity(f, c2), ProductTensor(f, c2), ProductTensor(f, c2),
                             ProductTensor(f, c2)};
      assoc.m_dot.set(0, 0, 0, Scalar::one(f));
      SpaceId c1{"C", 1};
      AlgebraConstants left{f, c1, TM::identity(f, c1), ProductTensor(f, c1), ProductTensor(f, c1),
                            ProductTensor(f, c1)};
      left.m_left.set(0, 0, 0, Scalar::one(f));
      for (const auto& a : {assoc, left}) {
        StructurePackage dual = dualize_algebra(a);
        if (conclusion_full(dual) && dualize_package(dual) == a)
          r.pass();
        else
          r.fail(dual, [](const StructurePackage&) { return false; }, "algebra fixture dual fails");
      }
    }
  } else if (id == "T-tridend-twist" || id == "T-plc-twist") {
    StructureKind k = id == "T-tridend-twist" ? StructureKind::HomTridendriform : StructureKind::PostHomLie;
    auto pool = structure_pool(k, cfg, want);
    need_pool(pool.size());
    for (const auto& w : pool) {
      if (r.enough()) break;
      auto betas = structure_endomorphisms(w, 5, cfg.seed);
      for (std::size_t bi = 0; bi < betas.size() && !r.enough(); ++bi) {
        const TM beta = betas[bi];
        r.run_trial(
            w, [&](const StructurePackage& p) { return conclusion_full(yau_twist(p, beta)); },
            id + " beta#" + std::to_string(bi));
      }
    }
  } else if (id == "T-tridend-power") {
    auto pool = structure_pool(StructureKind::HomTridendriform, cfg, want);
    need_pool(pool.size());
    for (const auto& w : pool) {
      if (r.enough()) break;
      for (long long n : {0ll, 1ll, 2ll}) {
        if (r.enough()) break;
        r.run_trial(
            w, [&](const StructurePackage& p) { return conclusion_full(power_twist(p, n)); },
            "n=" + std::to_string(n));
      }
    }
  } else if (id == "T-tridend-untwist") {
    std::vector<StructurePackage> pool;
    for (const auto& w : structure_pool(StructureKind::HomTridendriform, cfg, want * 6)) {
      if (!mat_is_invertible(w.alpha)) continue;
      pool.push_back(w);
      StructurePackage op = opposite_tridend(w);  // distinct witness over the same alpha
      if (!(op == w) && passes_full_check(op)) pool.push_back(op);
    }
    need_pool(pool.size());
    for (const auto& w : pool) {
      if (r.enough()) break;
      r.run_trial(
          w,
          [&](const StructurePackage& p) {
            StructurePackage out = inverse_twist(p);
            return out.alpha == TM::identity(p.field, p.space) && conclusion_full(out);
          },
          "inverse twist");
    }
  } else if (id == "T-tridend-sum") {
    auto pool = structure_pool(StructureKind::HomTridendriform, cfg, want);
    need_pool(pool.size());
    for (std::size_t i = 0; i < pool.size() && !r.enough(); ++i)
      r.run_trial(
          pool[i], [&](const StructurePackage& p) { return conclusion_full(tridend_sum(p)); },
          "sum witness#" + std::to_string(i));
  } else if (id == "T-rb-tridend" || id == "T-rb-dendriform") {
    RbTarget target = id == "T-rb-tridend" ? RbTarget::Tridend : RbTarget::Dendriform;
    auto pool = structure_pool(StructureKind::HomCoassocRB, cfg, want);
    need_pool(pool.size());
    for (std::size_t i = 0; i < pool.size() && !r.enough(); ++i)
      r.run_trial(
          pool[i],
          [&](const StructurePackage& p) { return conclusion_full(rb_coassoc_derive(p, target)); },
          "rb witness#" + std::to_string(i));
  } else if (id == "T-dend-prelie") {
    auto pool = structure_pool(StructureKind::HomDendriform, cfg, want);
    need_pool(pool.size());
    for (std::size_t i = 0; i < pool.size() && !r.enough(); ++i)
      r.run_trial(
          pool[i],
          [&](const StructurePackage& p) { return conclusion_full(dendriform_to_prelie(p)); },
          "dendriform witness#" + std::to_string(i));
  } else if (id == "T-rb0-prelie" || id == "T-rbm1-prelie") {
    long long w = id == "T-rb0-prelie" ? 0 : -1;
    RbTarget target = id == "T-rb0-prelie" ? RbTarget::Prelie0 : RbTarget::PrelieM1;
    auto pool = rb_pool_with_weight(StructureKind::HomCoassocRB, cfg, w, want);
    need_pool(pool.size());
    for (std::size_t i = 0; i < pool.size() && !r.enough(); ++i)
      r.run_trial(
          pool[i],
          [&](const StructurePackage& p) { return conclusion_full(rb_coassoc_derive(p, target)); },
          "weight " + std::to_string(w) + " witness#" + std::to_string(i));
  } else if (id == "T-b-dendriform") {
    for (long long w : {1ll, -1ll}) {
      int before_pass = r.rep.passes, before_fail = r.rep.fails;
      auto pool = rb_pool_with_weight(StructureKind::HomCoassocRB, cfg, w, want / 2 + 1);
      need_pool(pool.size());
      for (std::size_t i = 0; i < pool.size(); ++i) {
        if (r.rep.trials >= cfg.trials && w == -1) break;
        r.run_trial(
            pool[i],
            [&](const StructurePackage& p) {
              return conclusion_full(rb_coassoc_derive(p, RbTarget::DendriformB));
            },
            "weight " + std::to_string(w) + " witness#" + std::to_string(i));
      }
      r.rep.ledger.push_back("T-b-dendriform weight=" + std::to_string(w) + " passes=" +
                             std::to_string(r.rep.passes - before_pass) + " fails=" +
                             std::to_string(r.rep.fails - before_fail));
    }
  } else if (id == "T-com3-n0" || id == "T-com-n0") {
    ComoduleKind k = id == "T-com3-n0" ? ComoduleKind::TridendComodule : ComoduleKind::PostHomLieComodule;
    auto pool = comodule_pool(k, cfg, want);
    need_pool(pool.size());
    for (const auto& cm : pool) {
      if (r.enough()) break;
      for (long long n : {0ll, 1ll, 2ll}) {
        if (r.enough()) break;
        ComoduleRuleParams ps;
        ps.n = n;
        r.run_trial(
            cm,
            [&](const ComodulePackage& p) {
              return comodule_axioms_full(comodule_derive(p, ComoduleRule::TwistN0, ps));
            },
            "n=" + std::to_string(n));
      }
    }
  } else if (id == "T-com3-0k" || id == "T-com-0k") {
    ComoduleKind k = id == "T-com3-0k" ? ComoduleKind::TridendComodule : ComoduleKind::PostHomLieComodule;
    auto pool = comodule_pool(k, cfg, want);
    need_pool(pool.size());
    for (const auto& cm : pool) {
      if (r.enough()) break;
      for (long long kk : {0ll, 1ll, 2ll}) {
        if (r.enough()) break;
        ComoduleRuleParams ps;
        ps.k = kk;
        r.run_trial(
            cm,
            [&](const ComodulePackage& p) {
              return comodule_axioms_full(comodule_derive(p, ComoduleRule::Twist0K, ps));
            },
            "k=" + std::to_string(kk));
      }
    }
    r.rep.ledger.push_back(id + " exponents-as-printed passes=" + std::to_string(r.rep.passes) +
                           " fails=" + std::to_string(r.rep.fails));
  } else if (id == "T-com3-nk") {
    auto pool = comodule_pool(ComoduleKind::TridendComodule, cfg, want);
    need_pool(pool.size());
    for (const auto& cm : pool) {
      if (r.enough()) break;
      for (auto [n, kk] : {std::pair<long long, long long>{1, 1}, {2, 1}, {1, 2}}) {
        if (r.enough()) break;
        ComoduleRuleParams ps;
        ps.n = n;
        ps.k = kk;
        r.run_trial(
            cm,
            [&](const ComodulePackage& p) {
              return comodule_axioms_full(comodule_derive(p, ComoduleRule::TwistNK, ps));
            },
            "n=" + std::to_string(n) + " k=" + std::to_string(kk));
      }
    }
    r.rep.ledger.push_back("T-com3-nk combined-remark passes=" + std::to_string(r.rep.passes) +
                           " fails=" + std::to_string(r.rep.fails));
  } else if (id == "T-plc-tilde") {
    auto pool = structure_pool(StructureKind::PostHomLie, cfg, want);
    need_pool(pool.size());
    for (std::size_t i = 0; i < pool.size() && !r.enough(); ++i)
      r.run_trial(
          pool[i],
          [&](const StructurePackage& p) {
            return conclusion_full(posthomlie_derive(p, PostTarget::Tilde));
          },
          "tilde witness#" + std::to_string(i));
  } else if (id == "T-plc-admissible") {
    auto pool = structure_pool(StructureKind::PostHomLie, cfg, want);
    need_pool(pool.size());
    int runnable = 0;
    for (std::size_t i = 0; i < pool.size() && !r.enough(); ++i) {
      if (pool[i].field.characteristic() == 2) continue;
      ++runnable;
      r.run_trial(
          pool[i],
          [&](const StructurePackage& p) {
            return conclusion_full(posthomlie_derive(p, PostTarget::Admissible));
          },
          "admissible witness#" + std::to_string(i));
    }
    need_pool(static_cast<std::size_t>(runnable));
  } else if (id == "L-le1") {
    auto pool = structure_pool(StructureKind::PostHomLie, cfg, want);
    need_pool(pool.size());
    int both = 0, r1_only = 0, r2_only = 0, neither = 0;
    for (std::size_t i = 0; i < pool.size() && !r.enough(); ++i) {
      if (pool[i].field.characteristic() == 2) continue;
      Le1Report lr = le1_report(pool[i]);
      if (lr.statement_matches && lr.proof_matches)
        ++both;
      else if (lr.statement_matches)
        ++r1_only;
      else if (lr.proof_matches)
        ++r2_only;
      else
        ++neither;
      r.rep.ledger.push_back("L-le1 witness=" + std::to_string(i) + " dim=" +
                             std::to_string(pool[i].space.dim) + " field=" + pool[i].field.str() +
                             " L=R1 " + (lr.statement_matches ? "yes" : "no") + " L=R2 " +
                             (lr.proof_matches ? "yes" : "no"));
      if (lr.statement_matches || lr.proof_matches)
        r.pass();
      else
        r.fail(pool[i], [](const StructurePackage&) { return false; }, "neither right-hand side matches");
    }
    r.rep.ledger.push_back("L-le1 tally both=" + std::to_string(both) + " r1_only=" +
                           std::to_string(r1_only) + " r2_only=" + std::to_string(r2_only) +
                           " neither=" + std::to_string(neither));
  } else if (id == "T-rbl-post") {
    auto pool = structure_pool(StructureKind::HomLieRB, cfg, want);
    need_pool(pool.size());
    for (std::size_t i = 0; i < pool.size() && !r.enough(); ++i)
      r.run_trial(
          pool[i],
          [&](const StructurePackage& p) { return conclusion_full(rb_homlie_to_posthomlie(p)); },
          "rb-lie witness#" + std::to_string(i));
  } else if (id == "T-plc-tensor") {
    auto ppool = structure_pool(StructureKind::PostHomLie, cfg, want);
    std::vector<StructurePackage> qpool;
    for (const auto& q : structure_pool(StructureKind::HomCoassoc, cfg, want)) {
      const TM& d = q.comap("delta");
      if (sub(d, permute(LegPermutation::tau(), d)).is_zero()) qpool.push_back(q);
    }
    need_pool(ppool.size() * qpool.size());
    for (const auto& p : ppool) {
      if (r.enough()) break;
      for (const auto& q : qpool) {
        if (r.enough()) break;
        if (p.field != q.field || p.space.dim * q.space.dim > 4) continue;
        r.run_trial(
            p, [&](const StructurePackage& pp) { return conclusion_full(tensor_posthomlie(pp, q)); },
            "tensor with dim-" + std::to_string(q.space.dim) + " factor");
      }
    }
  } else if (id == "T-tridend-post") {
    auto pool = structure_pool(StructureKind::HomTridendriform, cfg, want);
    need_pool(pool.size());
    for (std::size_t i = 0; i < pool.size() && !r.enough(); ++i)
      r.run_trial(
          pool[i],
          [&](const StructurePackage& p) { return conclusion_full(tridend_to_posthomlie(p)); },
          "witness#" + std::to_string(i));
    r.rep.ledger.push_back("T-tridend-post epsilon-as-xi passes=" + std::to_string(r.rep.passes) +
                           " fails=" + std::to_string(r.rep.fails));
  } else if (id == "T-postpoisson") {
    auto pool = structure_pool(StructureKind::PostHomPoisson, cfg, want);
    need_pool(pool.size());
    for (std::size_t i = 0; i < pool.size() && !r.enough(); ++i)
      r.run_trial(
          pool[i],
          [&](const StructurePackage& p) { return conclusion_full(postpoisson_to_homopoisson(p)); },
          "witness#" + std::to_string(i));
    r.rep.ledger.push_back("T-postpoisson epsilon-as-xi passes=" + std::to_string(r.rep.passes) +
                           " fails=" + std::to_string(r.rep.fails));
  } else if (id == "T-com-sum" || id == "T-com-tensor") {
    auto pool = comodule_pool(ComoduleKind::PostHomLieComodule, cfg, want);
    auto groups = comodules_by_base(pool);
    std::size_t pairs = 0;
    for (const auto& g : groups) pairs += g.size() * g.size();
    need_pool(pairs);
    ComoduleRule rule = id == "T-com-sum" ? ComoduleRule::DirectSum : ComoduleRule::TensorK;
    for (const auto& g : groups) {
      if (r.enough()) break;
      for (std::size_t i = 0; i < g.size() && !r.enough(); ++i)
        for (std::size_t j = 0; j < g.size() && !r.enough(); ++j) {
          if (id == "T-com-tensor" && g[i].mspace.dim * g[j].mspace.dim > 4) continue;
          for (long long kk : {0ll, 1ll}) {
            if (r.enough()) break;
            ComoduleRuleParams ps;
            ps.other = &g[j];
            ps.k = kk;
            r.run_trial(
                g[i],
                [&](const ComodulePackage& p) {
                  return comodule_axioms_full(comodule_derive(p, rule, ps));
                },
                "pair (" + std::to_string(i) + "," + std::to_string(j) + ") k=" + std::to_string(kk));
            if (id == "T-com-sum") break;  // direct sum takes no exponent
          }
        }
    }
  } else if (id == "T-com-regular") {
    auto pool = structure_pool(StructureKind::PostHomLie, cfg, want);
    need_pool(pool.size());
    for (const auto& w : pool) {
      if (r.enough()) break;
      if (!package_multiplicative(w)) continue;
      for (long long kk : {0ll, 1ll, 2ll}) {
        if (r.enough()) break;
        r.run_trial(
            w,
            [&](const StructurePackage& p) { return comodule_axioms_full(regular_k_comodule(p, kk)); },
            "k=" + std::to_string(kk));
      }
    }
  } else if (id == "T-com-beta") {
    auto pool = comodule_pool(ComoduleKind::PostHomLieComodule, cfg, want);
    need_pool(pool.size());
    for (const auto& cm : pool) {
      if (r.enough()) break;
      auto pairs = comodule_twist_pairs(cm, 4, cfg.seed);
      for (std::size_t pi = 0; pi < pairs.size() && !r.enough(); ++pi) {
        ComoduleRuleParams ps;
        ps.beta = pairs[pi].first;
        ps.beta_m = pairs[pi].second;
        r.run_trial(
            cm,
            [&](const ComodulePackage& p) {
              return comodule_axioms_full(comodule_derive(p, ComoduleRule::TwistBeta, ps));
            },
            "pair#" + std::to_string(pi));
      }
    }
  } else {
    throw Error(Errc::UnknownKind, "no runner for theorem id " + id);
  }

  if (r.rep.trials == 0) throw Error(Errc::NoWitnesses, "no runnable witnesses for " + id);
  return r.rep;
}

std::string emit_campaign_report(const CampaignReport& rep) {
  std::ostringstream os;
  os << "hcs-report campaign\n";
  os << "theorem = " << rep.theorem << "\n";
  os << "report_only = " << (rep.report_only ? "yes" : "no") << "\n";
  os << "seed = " << rep.seed << "\n";
  os << "trials = " << rep.trials << "\n";
  os << "passes = " << rep.passes << "\n";
  os << "fails = " << rep.fails << "\n";
  for (const auto& n : rep.notes) os << "note = " << n << "\n";
  for (const auto& c : rep.counterexample_files) os << "counterexample = " << c << "\n";
  for (const auto& l : rep.ledger) os << "ledger = " << l << "\n";
  os << "status = " << (rep.report_only ? "report-only" : (rep.fails == 0 ? "pass" : "FAIL")) << "\n";
  return os.str();
}

std::string emit_discrepancies(const std::vector<CampaignReport>& reports) {
  std::ostringstream os;
  os << "hcs-discrepancies\n";
  for (const auto& rep : reports) {
    if (rep.ledger.empty() && !rep.report_only) continue;
    os << "campaign " << rep.theorem << " trials=" << rep.trials << " passes=" << rep.passes
       << " fails=" << rep.fails << "\n";
    for (const auto& l : rep.ledger) os << "  " << l << "\n";
  }
  return os.str();
}

std::string witness_filename(const WitnessRecord& w) {
  std::string kind, field;
  int dim = 0;
  if (w.is_comodule()) {
    kind = comodule_kind_name(w.comodule().kind);
    field = w.comodule().base.field.str();
    dim = w.comodule().mspace.dim;
  } else {
    kind = kind_name(w.package().kind);
    field = w.package().field.str();
    dim = w.package().space.dim;
  }
  return kind + "-d" + std::to_string(dim) + "-" + field + "-" + std::to_string(w.seed) + "-" +
         std::to_string(w.candidate_index) + ".hcs";
}

}  // namespace hcs
