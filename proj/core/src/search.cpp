#include "hcs/search.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace hcs {

namespace {

enum class SlotShape { Full, Skew, Cocomm, Matrix, Weight };

struct Slot {
  std::string name;  // "alpha", "rb", "rb.weight" or a comap name
  SlotShape shape;
  std::uint64_t params;
};

bool skew_by_construction(StructureKind k, const std::string& name) {
  if (name != "gamma") return false;
  switch (k) {
    case StructureKind::HomLie:
    case StructureKind::HomLieRB:
    case StructureKind::PostHomLie:
    case StructureKind::HomPoisson:
    case StructureKind::PostHomPoisson:
      return true;
    default:
      return false;
  }
}

bool cocomm_by_construction(StructureKind k, const std::string& name) {
  if (name != "delta_ast") return false;
  switch (k) {
    case StructureKind::CoCommHomTridendriform:
    case StructureKind::HomPoisson:
    case StructureKind::PostHomPoisson:
      return true;
    default:
      return false;
  }
}

std::uint64_t slot_params(SlotShape shape, int d, const FieldSpec& f) {
  std::uint64_t dd = static_cast<std::uint64_t>(d);
  switch (shape) {
    case SlotShape::Full: return dd * dd * dd;
    case SlotShape::Skew:
      // odd characteristic: strict upper triangle; char 2: symmetric incl diagonal
      return f.characteristic() == 2 ? dd * dd * (dd + 1) / 2 : dd * dd * (dd - 1) / 2;
    case SlotShape::Cocomm: return dd * dd * (dd + 1) / 2;
    case SlotShape::Matrix: return dd * dd;
    case SlotShape::Weight: return 1;
  }
  return 0;
}

std::vector<Slot> structure_slots(const SearchConfig& cfg) {
  StructureKind k = *cfg.kind;
  std::vector<Slot> slots;
  auto maybe = [&](const std::string& name, SlotShape shape) {
    if (cfg.fixed.count(name)) return;
    slots.push_back(Slot{name, shape, slot_params(shape, cfg.dim, cfg.field)});
  };
  maybe("alpha", SlotShape::Matrix);
  for (const auto& n : comap_names(k)) {
    SlotShape sh = SlotShape::Full;
    if (skew_by_construction(k, n)) sh = SlotShape::Skew;
    if (cocomm_by_construction(k, n)) sh = SlotShape::Cocomm;
    maybe(n, sh);
  }
  if (kind_has_rb(k)) {
    maybe("rb", SlotShape::Matrix);
    if (!cfg.fixed_weight) slots.push_back(Slot{"rb.weight", SlotShape::Weight, 1});
  }
  return slots;
}

std::vector<Slot> comodule_slots(const SearchConfig& cfg) {
  ComoduleKind ck = *cfg.comodule_kind;
  std::vector<Slot> slots;
  if (!cfg.fixed_base) {
    SearchConfig base_cfg = cfg;
    base_cfg.kind = comodule_base_kind(ck);
    base_cfg.comodule_kind.reset();
    base_cfg.dim = cfg.dim;  // base and module share the dim parameter unless a base is fixed
    for (auto s : structure_slots(base_cfg)) {
      s.name = "base." + s.name;
      slots.push_back(s);
    }
  }
  int dm = cfg.dim;
  int dl = cfg.fixed_base ? cfg.fixed_base->space.dim : cfg.dim;
  if (!cfg.fixed.count("alpha_m"))
    slots.push_back(Slot{"alpha_m", SlotShape::Matrix, static_cast<std::uint64_t>(dm) * dm});
  for (const auto& n : comodule_map_names(ck))
    if (!cfg.fixed.count(n))
      slots.push_back(Slot{n, SlotShape::Full, static_cast<std::uint64_t>(dm) * dl * dm});
  return slots;
}

// Materialize one map from its parameter vector.
TensorMap slot_to_comap(SlotShape shape, const FieldSpec& f, const SpaceId& dom, const SpaceId& l,
                        const SpaceId& m, const std::vector<Scalar>& v) {
  // comap signatures: structure comaps dom=(C)->(C,C); comodule maps (M)->(L,M)
  TensorMap t(f, dom, {l, m});
  std::size_t p = 0;
  int d = dom.dim;
  if (shape == SlotShape::Full) {
    for (int i = 0; i < d; ++i)
      for (int a = 0; a < l.dim; ++a)
        for (int b = 0; b < m.dim; ++b) {
          int js[2] = {a, b};
          t.set(i, js, v[p++]);
        }
  } else if (shape == SlotShape::Skew && f.characteristic() != 2) {
    for (int i = 0; i < d; ++i)
      for (int a = 0; a < l.dim; ++a)
        for (int b = a + 1; b < m.dim; ++b) {
          int ab[2] = {a, b}, ba[2] = {b, a};
          t.set(i, ab, v[p]);
          t.set(i, ba, -v[p]);
          ++p;
        }
  } else {  // Cocomm, or Skew in characteristic 2
    for (int i = 0; i < d; ++i)
      for (int a = 0; a < l.dim; ++a)
        for (int b = a; b < m.dim; ++b) {
          int ab[2] = {a, b}, ba[2] = {b, a};
          t.set(i, ab, v[p]);
          t.set(i, ba, v[p]);
          ++p;
        }
  }
  return t;
}

TensorMap slot_to_matrix(const FieldSpec& f, const SpaceId& s, const std::vector<Scalar>& v) {
  TensorMap t(f, s, {s});
  std::size_t p = 0;
  for (int i = 0; i < s.dim; ++i)
    for (int j = 0; j < s.dim; ++j) {
      int js[1] = {j};
      t.set(i, js, v[p++]);
    }
  return t;
}

struct Candidate {
  std::map<std::string, std::vector<Scalar>> values;
};

StructurePackage build_structure(const SearchConfig& cfg, const Candidate& c, const std::string& prefix = "") {
  StructureKind k = *cfg.kind;
  SpaceId space{"C", cfg.dim};
  const FieldSpec& f = cfg.field;
  auto fixed_or = [&](const std::string& name, SlotShape shape) -> TensorMap {
    auto fx = cfg.fixed.find(name);
    if (fx != cfg.fixed.end()) return fx->second;
    const auto& v = c.values.at(prefix + name);
    if (shape == SlotShape::Matrix) return slot_to_matrix(f, space, v);
    return slot_to_comap(shape, f, space, space, space, v);
  };
  StructurePackage s{k, space, f, fixed_or("alpha", SlotShape::Matrix), {}, std::nullopt};
  for (const auto& n : comap_names(k)) {
    SlotShape sh = SlotShape::Full;
    if (skew_by_construction(k, n)) sh = SlotShape::Skew;
    if (cocomm_by_construction(k, n)) sh = SlotShape::Cocomm;
    s.comaps.emplace(n, fixed_or(n, sh));
  }
  if (kind_has_rb(k)) {
    Scalar w = cfg.fixed_weight ? *cfg.fixed_weight : c.values.at(prefix + "rb.weight")[0];
    s.rb = RotaBaxter{fixed_or("rb", SlotShape::Matrix), w};
  }
  return s;
}

ComodulePackage build_comodule(const SearchConfig& cfg, const Candidate& c) {
  ComoduleKind ck = *cfg.comodule_kind;
  StructurePackage base = cfg.fixed_base ? *cfg.fixed_base : [&] {
    SearchConfig bc = cfg;
    bc.kind = comodule_base_kind(ck);
    return build_structure(bc, c, "base.");
  }();
  SpaceId m{"M", cfg.dim};
  const FieldSpec& f = cfg.field;
  auto fixed_or_map = [&](const std::string& name) -> TensorMap {
    auto fx = cfg.fixed.find(name);
    if (fx != cfg.fixed.end()) return fx->second;
    return slot_to_comap(SlotShape::Full, f, m, base.space, m, c.values.at(name));
  };
  TensorMap am = cfg.fixed.count("alpha_m") ? cfg.fixed.at("alpha_m")
                                            : slot_to_matrix(f, m, c.values.at("alpha_m"));
  ComodulePackage cm{ck, base, m, am, {}};
  for (const auto& n : comodule_map_names(ck)) cm.maps.emplace(n, fixed_or_map(n));
  return cm;
}

bool full_pass_structure(const StructurePackage& s) {
  for (const auto& ax : axioms_of(s.kind))
    if (!axiom_residual(s, ax.id).is_zero()) return false;
  return true;
}

bool full_pass_comodule(const ComodulePackage& cm) {
  if (!full_pass_structure(cm.base)) return false;
  for (const auto& ax : comodule_axioms_of(cm.kind))
    if (!comodule_axiom_residual(cm, ax.id).is_zero()) return false;
  return true;
}

std::string fingerprint(const StructurePackage& s) {
  std::ostringstream os;
  os << kind_name(s.kind) << '|' << s.space.dim << '|' << s.field.str() << '|';
  for (const auto& v : s.alpha.coeffs()) os << v.str() << ',';
  for (const auto& [n, m] : s.comaps) {
    os << n << ':';
    for (const auto& v : m.coeffs()) os << v.str() << ',';
  }
  if (s.rb) {
    os << "rb:" << s.rb->weight.str() << ':';
    for (const auto& v : s.rb->op.coeffs()) os << v.str() << ',';
  }
  return os.str();
}

std::string fingerprint(const ComodulePackage& cm) {
  std::ostringstream os;
  os << comodule_kind_name(cm.kind) << '|' << fingerprint(cm.base) << '|' << cm.mspace.dim << '|';
  for (const auto& v : cm.alpha_m.coeffs()) os << v.str() << ',';
  for (const auto& [n, m] : cm.maps) {
    os << n << ':';
    for (const auto& v : m.coeffs()) os << v.str() << ',';
  }
  return os.str();
}

Scalar random_scalar(const FieldSpec& f, std::mt19937_64& rng, bool nonzero) {
  if (f.kind() == FieldKind::PrimeField) {
    std::uint64_t p = f.p();
    std::uint64_t v = nonzero ? 1 + rng() % (p - 1) : rng() % p;
    return Scalar(f, static_cast<long long>(v));
  }
  long long v = static_cast<long long>(rng() % 7) - 3;  // small integers in [-3, 3]
  if (nonzero && v == 0) v = 1 + static_cast<long long>(rng() % 3);
  return Scalar(f, v);
}

std::vector<Scalar> draw_comap_params(std::uint64_t n, const FieldSpec& f, std::mt19937_64& rng) {
  std::vector<Scalar> v(n, Scalar::zero(f));
  if (n == 0) return v;
  static const int weights[5] = {10, 35, 35, 15, 5};
  int roll = static_cast<int>(rng() % 100), k = 0, accw = 0;
  for (int i = 0; i < 5; ++i) {
    accw += weights[i];
    if (roll < accw) {
      k = i;
      break;
    }
  }
  for (int i = 0; i < k; ++i) v[rng() % n] = random_scalar(f, rng, true);
  return v;
}

std::vector<Scalar> draw_matrix_params(std::uint64_t n, int d, const FieldSpec& f, std::mt19937_64& rng) {
  std::vector<Scalar> v(n, Scalar::zero(f));
  switch (rng() % 8) {
    case 0:
    case 1:  // identity
      for (int i = 0; i < d; ++i) v[i * d + i] = Scalar::one(f);
      break;
    case 2:  // zero
      break;
    case 3:
    case 4:  // diagonal
      for (int i = 0; i < d; ++i) v[i * d + i] = random_scalar(f, rng, false);
      break;
    case 5:
    case 6: {  // identity plus one off-diagonal entry
      for (int i = 0; i < d; ++i) v[i * d + i] = Scalar::one(f);
      if (d > 1) {
        int i = static_cast<int>(rng() % d), j = static_cast<int>(rng() % d);
        if (i != j) v[i * d + j] = random_scalar(f, rng, true);
      }
      break;
    }
    default:  // dense
      for (auto& x : v) x = random_scalar(f, rng, false);
  }
  return v;
}

}  // namespace

bool passes_full_check(const StructurePackage& s) { return full_pass_structure(s); }
bool passes_full_check(const ComodulePackage& cm) { return full_pass_comodule(cm); }

std::uint64_t free_parameter_count(const SearchConfig& cfg) {
  std::uint64_t n = 0;
  auto slots = cfg.comodule_kind ? comodule_slots(cfg) : structure_slots(cfg);
  for (const auto& s : slots) n += s.params;
  return n;
}

SearchResult enumerate_instances(const SearchConfig& cfg) {
  if (cfg.kind.has_value() == cfg.comodule_kind.has_value())
    throw Error(Errc::GuardViolation, "search needs exactly one of a structure or comodule kind");
  if (cfg.dim < 1 || cfg.dim > 4) throw Error(Errc::GuardViolation, "search dimension must be 1..4");
  if (cfg.fixed_base) cfg.fixed_base->validate();

  auto slots = cfg.comodule_kind ? comodule_slots(cfg) : structure_slots(cfg);
  std::uint64_t params = 0;
  for (const auto& s : slots) params += s.params;

  SearchResult out;
  std::set<std::string> seen;

  auto try_candidate = [&](const Candidate& c, std::uint64_t index) -> bool {
    // returns true when max_witnesses is reached
    if (cfg.comodule_kind) {
      ComodulePackage cm = build_comodule(cfg, c);
      if (!full_pass_comodule(cm)) return false;
      std::string fp = fingerprint(cm);
      if (!seen.insert(fp).second) return false;
      WitnessRecord w{cm, cfg.seed, index, check_comodule(cm), false};
      out.witnesses.push_back(std::move(w));
    } else {
      StructurePackage s = build_structure(cfg, c);
      if (!full_pass_structure(s)) return false;
      std::string fp = fingerprint(s);
      if (!seen.insert(fp).second) return false;
      WitnessRecord w{s, cfg.seed, index, check_structure(s), false};
      out.witnesses.push_back(std::move(w));
    }
    return cfg.max_witnesses && out.witnesses.size() >= cfg.max_witnesses;
  };

  if (cfg.mode == SearchMode::Exhaustive) {
    if (cfg.field.kind() != FieldKind::PrimeField)
      throw Error(Errc::GuardViolation, "exhaustive search is finite-field only");
    std::uint64_t dd = static_cast<std::uint64_t>(cfg.dim);
    std::uint64_t limit = 3 * dd * dd * dd + dd * dd;
    if (params > limit)
      throw Error(Errc::GuardViolation, "too many free coefficients for exhaustive search");
    double bits = static_cast<double>(params) * std::log2(static_cast<double>(cfg.field.p()));
    if (bits > 36.0)
      throw Error(Errc::GuardViolation, "candidate space exceeds 2^36");

    std::vector<std::uint64_t> digits(params, 0);
    std::uint64_t index = 0;
    bool done = false;
    while (!done) {
      if (cfg.budget && index >= cfg.budget) {
        out.budget_exceeded = true;
        break;
      }
      Candidate c;
      std::size_t pos = 0;
      for (const auto& s : slots) {
        std::vector<Scalar> v;
        v.reserve(s.params);
        for (std::uint64_t i = 0; i < s.params; ++i)
          v.push_back(Scalar(cfg.field, static_cast<long long>(digits[pos++])));
        c.values.emplace(s.name, std::move(v));
      }
      ++out.candidates_tried;
      if (try_candidate(c, index)) break;
      ++index;
      // odometer
      std::size_t t = 0;
      while (t < params) {
        if (++digits[t] < cfg.field.p()) break;
        digits[t++] = 0;
      }
      if (t == params) done = true;
      if (params == 0) done = true;
    }
  } else {
    std::mt19937_64 rng(cfg.seed);
    for (std::uint64_t index = 0; index < cfg.budget; ++index) {
      Candidate c;
      for (const auto& s : slots) {
        std::vector<Scalar> v;
        if (index == 0) {
          // the all-zero candidate first: a witness for every homogeneous kind
          v.assign(s.params, Scalar::zero(cfg.field));
          if (s.shape == SlotShape::Matrix && (s.name == "alpha" || s.name == "base.alpha" ||
                                               s.name == "alpha_m" || s.name == "rb"))
            for (int i = 0; i < cfg.dim; ++i) v[i * cfg.dim + i] = Scalar::one(cfg.field);
        } else if (s.shape == SlotShape::Matrix) {
          int d = static_cast<int>(std::llround(std::sqrt(static_cast<double>(s.params))));
          v = draw_matrix_params(s.params, d, cfg.field, rng);
        } else if (s.shape == SlotShape::Weight) {
          v = {random_scalar(cfg.field, rng, false)};
        } else {
          v = draw_comap_params(s.params, cfg.field, rng);
        }
        c.values.emplace(s.name, std::move(v));
      }
      ++out.candidates_tried;
      if (try_candidate(c, index)) break;
    }
  }
  return out;
}

namespace {

// Coefficient-zeroing passes over maps that alias pkg, until a fixpoint.
template <typename P, typename Pred>
void minimize_in_place(P& pkg, const std::vector<TensorMap*>& maps, const Pred& keep) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (TensorMap* m : maps) {
      for (std::size_t i = 0; i < m->coeffs().size(); ++i) {
        if (m->coeffs()[i].is_zero()) continue;
        Scalar saved = m->coeffs()[i];
        m->coeffs()[i] = Scalar::zero(saved.field());
        if (keep(pkg)) {
          changed = true;
        } else {
          m->coeffs()[i] = saved;
        }
      }
    }
  }
}

std::vector<TensorMap*> package_maps(StructurePackage& s) {
  std::vector<TensorMap*> ms{&s.alpha};
  for (auto& [n, m] : s.comaps) ms.push_back(&m);
  if (s.rb) ms.push_back(&s.rb->op);
  return ms;
}

bool basis_index_unused(const TensorMap& m, int b) {
  int d = m.dom().dim;
  std::vector<int> js(m.arity(), 0);
  for (int i = 0; i < d; ++i) {
    std::fill(js.begin(), js.end(), 0);
    while (true) {
      bool touches = i == b;
      for (int t = 0; t < m.arity(); ++t)
        if (js[t] == b) touches = true;
      if (touches && !m.at(i, js).is_zero()) return false;
      int t = m.arity() - 1;
      while (t >= 0 && ++js[t] == m.cod()[t].dim) js[t--] = 0;
      if (t < 0) break;
    }
  }
  return true;
}

TensorMap drop_basis_index(const TensorMap& m, int b, const SpaceId& ndom,
                           const std::vector<SpaceId>& ncod) {
  TensorMap out(m.field(), ndom, ncod);
  auto shift = [b](int i) { return i < b ? i : i + 1; };
  std::vector<int> js(out.arity(), 0), src(out.arity(), 0);
  for (int i = 0; i < ndom.dim; ++i) {
    std::fill(js.begin(), js.end(), 0);
    while (true) {
      for (int t = 0; t < out.arity(); ++t) src[t] = shift(js[t]);
      out.set(i, js, m.at(shift(i), src));
      int t = out.arity() - 1;
      while (t >= 0 && ++js[t] == ncod[t].dim) js[t--] = 0;
      if (t < 0) break;
    }
  }
  return out;
}

}  // namespace

StructurePackage minimize_package(const StructurePackage& s,
                                  const std::function<bool(const StructurePackage&)>& keep) {
  if (!keep(s)) return s;
  StructurePackage cur = s;
  minimize_in_place(cur, package_maps(cur), keep);
  // try dropping basis vectors whose rows and columns all vanished
  bool shrunk = true;
  while (shrunk && cur.space.dim > 1) {
    shrunk = false;
    for (int b = cur.space.dim - 1; b >= 0; --b) {
      bool unused = basis_index_unused(cur.alpha, b);
      for (const auto& [n, m] : cur.comaps) unused = unused && basis_index_unused(m, b);
      if (cur.rb) unused = unused && basis_index_unused(cur.rb->op, b);
      if (!unused) continue;
      StructurePackage smaller = cur;
      smaller.space.dim = cur.space.dim - 1;
      SpaceId nd = smaller.space;
      smaller.alpha = drop_basis_index(cur.alpha, b, nd, {nd});
      for (auto& [n, m] : smaller.comaps) m = drop_basis_index(cur.comaps.at(n), b, nd, {nd, nd});
      if (smaller.rb) smaller.rb->op = drop_basis_index(cur.rb->op, b, nd, {nd});
      if (keep(smaller)) {
        cur = smaller;
        shrunk = true;
        break;
      }
    }
  }
  return cur;
}

ComodulePackage minimize_comodule(const ComodulePackage& cm,
                                  const std::function<bool(const ComodulePackage&)>& keep) {
  if (!keep(cm)) return cm;
  ComodulePackage cur = cm;
  std::vector<TensorMap*> maps{&cur.alpha_m, &cur.base.alpha};
  for (auto& [n, m] : cur.maps) maps.push_back(&m);
  for (auto& [n, m] : cur.base.comaps) maps.push_back(&m);
  if (cur.base.rb) maps.push_back(&cur.base.rb->op);
  minimize_in_place(cur, maps, keep);
  return cur;
}

WitnessRecord minimize_witness(const WitnessRecord& w,
                               const std::function<bool(const WitnessRecord&)>& keep) {
  WitnessRecord out = w;
  auto wrap = [&](auto&& value) {
    WitnessRecord probe = w;
    probe.value = value;
    return keep(probe);
  };
  if (w.is_comodule()) {
    out.value = minimize_comodule(w.comodule(), [&](const ComodulePackage& p) { return wrap(p); });
    out.verdicts = check_comodule(out.comodule());
  } else {
    out.value = minimize_package(w.package(), [&](const StructurePackage& p) { return wrap(p); });
    out.verdicts = check_structure(out.package());
  }
  out.minimized = true;
  return out;
}

StructurePackage random_raw_package(StructureKind k, int dim, const FieldSpec& f, std::mt19937_64& rng) {
  SpaceId c{"C", dim};
  auto rand_map = [&](int arity) {
    std::vector<SpaceId> cod(arity, c);
    TensorMap t(f, c, cod);
    for (auto& v : t.coeffs()) v = random_scalar(f, rng, false);
    return t;
  };
  StructurePackage s{k, c, f, rand_map(1), {}, std::nullopt};
  for (const auto& n : comap_names(k)) s.comaps.emplace(n, rand_map(2));
  if (kind_has_rb(k)) s.rb = RotaBaxter{rand_map(1), random_scalar(f, rng, false)};
  return s;
}

ComodulePackage random_raw_comodule(ComoduleKind k, int base_dim, int dim, const FieldSpec& f,
                                    std::mt19937_64& rng) {
  StructurePackage base = random_raw_package(comodule_base_kind(k), base_dim, f, rng);
  SpaceId m{"M", dim};
  auto rand_mmap = [&]() {
    TensorMap t(f, m, {base.space, m});
    for (auto& v : t.coeffs()) v = random_scalar(f, rng, false);
    return t;
  };
  TensorMap am(f, m, {m});
  for (auto& v : am.coeffs()) v = random_scalar(f, rng, false);
  ComodulePackage cm{k, base, m, am, {}};
  for (const auto& n : comodule_map_names(k)) cm.maps.emplace(n, rand_mmap());
  return cm;
}

namespace {

bool is_structure_endomorphism(const StructurePackage& s, const TensorMap& beta) {
  if (!sub(mat_mul(beta, s.alpha), mat_mul(s.alpha, beta)).is_zero()) return false;
  for (const auto& [n, m] : s.comaps)
    if (!sub(precompose(m, beta), compose_pair(beta, beta, m)).is_zero()) return false;
  return true;
}

std::vector<TensorMap> matrix_candidates(const FieldSpec& f, const SpaceId& sp, std::uint64_t seed) {
  std::vector<TensorMap> out;
  int d = sp.dim;
  std::uint64_t n = static_cast<std::uint64_t>(d) * d;
  if (f.kind() == FieldKind::PrimeField &&
      static_cast<double>(n) * std::log2(static_cast<double>(f.p())) <= 20.0) {
    std::vector<std::uint64_t> digits(n, 0);
    while (true) {
      TensorMap m(f, sp, {sp});
      std::size_t p = 0;
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
          int js[1] = {j};
          m.set(i, js, Scalar(f, static_cast<long long>(digits[p++])));
        }
      out.push_back(std::move(m));
      std::size_t t = 0;
      while (t < n) {
        if (++digits[t] < f.p()) break;
        digits[t++] = 0;
      }
      if (t == n) break;
    }
  } else {
    out.push_back(TensorMap::identity(f, sp));
    out.push_back(TensorMap::zero(f, sp, {sp}));
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < 512; ++trial) {
      TensorMap m(f, sp, {sp});
      for (auto& v : m.coeffs()) v = random_scalar(f, rng, false);
      out.push_back(std::move(m));
    }
  }
  return out;
}

}  // namespace

std::vector<TensorMap> structure_endomorphisms(const StructurePackage& s, std::size_t max_count,
                                               std::uint64_t seed) {
  std::vector<TensorMap> out;
  TensorMap id = TensorMap::identity(s.field, s.space);
  out.push_back(id);
  for (const auto& cand : matrix_candidates(s.field, s.space, seed)) {
    if (out.size() >= max_count) break;
    if (cand == id) continue;
    if (is_structure_endomorphism(s, cand)) out.push_back(cand);
  }
  return out;
}

std::vector<std::pair<TensorMap, TensorMap>> comodule_twist_pairs(const ComodulePackage& cm,
                                                                  std::size_t max_count,
                                                                  std::uint64_t seed) {
  std::vector<std::pair<TensorMap, TensorMap>> out;
  auto betas = structure_endomorphisms(cm.base, 64, seed);
  auto bm_cands = matrix_candidates(cm.base.field, cm.mspace, seed + 1);
  for (const auto& beta : betas) {
    for (const auto& bm : bm_cands) {
      if (out.size() >= max_count) return out;
      if (!sub(mat_mul(cm.alpha_m, bm), mat_mul(bm, cm.alpha_m)).is_zero()) continue;
      bool ok = true;
      for (const auto& n : comodule_map_names(cm.kind))
        if (!sub(precompose(cm.map(n), bm), compose_pair(beta, bm, cm.map(n))).is_zero()) {
          ok = false;
          break;
        }
      if (ok) out.emplace_back(beta, bm);
    }
  }
  return out;
}

}  // namespace hcs
