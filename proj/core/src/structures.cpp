#include "hcs/structures.hpp"

#include <algorithm>

namespace hcs {

namespace {

struct KindRow {
  StructureKind kind;
  const char* name;
  std::vector<std::string> comaps;
  bool rb;
};

const std::vector<KindRow>& kind_table() {
  static const std::vector<KindRow> rows = {
      {StructureKind::HomCoassoc, "HomCoassoc", {"delta"}, false},
      {StructureKind::HomCoassocRB, "HomCoassocRB", {"delta"}, true},
      {StructureKind::HomLie, "HomLie", {"gamma"}, false},
      {StructureKind::HomLieRB, "HomLieRB", {"gamma"}, true},
      {StructureKind::HomPreLie, "HomPreLie", {"delta"}, false},
      {StructureKind::HomDendriform, "HomDendriform", {"delta_m1", "delta_1"}, false},
      {StructureKind::HomTridendriform, "HomTridendriform", {"delta_m1", "delta_0", "delta_1"}, false},
      {StructureKind::CoCommHomTridendriform, "CoCommHomTridendriform", {"delta_star", "delta_ast"}, false},
      {StructureKind::PostHomLie, "PostHomLie", {"gamma", "delta"}, false},
      {StructureKind::HomPoisson, "HomPoisson", {"gamma", "delta_ast"}, false},
      {StructureKind::PostHomPoisson, "PostHomPoisson", {"gamma", "delta", "delta_star", "delta_ast"}, false},
  };
  return rows;
}

const KindRow& row(StructureKind k) {
  for (const auto& r : kind_table())
    if (r.kind == k) return r;
  throw Error(Errc::UnknownKind, "unknown structure kind");
}

}  // namespace

const char* kind_name(StructureKind k) { return row(k).name; }

std::optional<StructureKind> kind_from_name(const std::string& name) {
  for (const auto& r : kind_table())
    if (name == r.name) return r.kind;
  return std::nullopt;
}

std::vector<StructureKind> all_structure_kinds() {
  std::vector<StructureKind> ks;
  for (const auto& r : kind_table()) ks.push_back(r.kind);
  return ks;
}

std::vector<std::string> comap_names(StructureKind k) { return row(k).comaps; }
bool kind_has_rb(StructureKind k) { return row(k).rb; }

const TensorMap& StructurePackage::comap(const std::string& name) const {
  auto it = comaps.find(name);
  if (it == comaps.end())
    throw Error(Errc::KindMismatch, std::string(kind_name(kind)) + " package lacks comap " + name);
  return it->second;
}

void StructurePackage::validate() const {
  const auto names = comap_names(kind);
  if (comaps.size() != names.size())
    throw Error(Errc::KindMismatch, std::string(kind_name(kind)) + " requires exactly " +
                                        std::to_string(names.size()) + " comaps");
  for (const auto& n : names) {
    const TensorMap& m = comap(n);
    if (m.field() != field || m.dom() != space || m.arity() != 2 || m.cod()[0] != space || m.cod()[1] != space)
      throw Error(Errc::KindMismatch, "comap " + n + " has wrong signature");
  }
  if (alpha.field() != field || alpha.arity() != 1 || alpha.dom() != space || alpha.cod()[0] != space)
    throw Error(Errc::KindMismatch, "alpha has wrong signature");
  if (rb.has_value() != kind_has_rb(kind))
    throw Error(Errc::KindMismatch, "Rota-Baxter data present iff the kind carries an operator");
  if (rb) {
    if (rb->op.field() != field || rb->op.arity() != 1 || rb->op.dom() != space || rb->op.cod()[0] != space)
      throw Error(Errc::KindMismatch, "Rota-Baxter operator has wrong signature");
    if (rb->weight.field() != field) throw Error(Errc::KindMismatch, "Rota-Baxter weight from wrong field");
  }
  if (space.dim < 1) throw Error(Errc::DimMismatch, "empty space");
}

StructurePackage make_zero_package(StructureKind k, const FieldSpec& f, int dim) {
  SpaceId c{"C", dim};
  StructurePackage s{k, c, f, TensorMap::identity(f, c), {}, std::nullopt};
  for (const auto& n : comap_names(k)) s.comaps.emplace(n, TensorMap::zero(f, c, {c, c}));
  if (kind_has_rb(k)) s.rb = RotaBaxter{TensorMap::identity(f, c), Scalar::zero(f)};
  return s;
}

// --- Axiom registry ----------------------------------------------------------

std::vector<AxiomInfo> axioms_of(StructureKind k) {
  auto multip = [](const std::string& name, bool single, bool required = false) {
    return AxiomInfo{single ? "multip" : "multip:" + name, true, required};
  };
  switch (k) {
    case StructureKind::HomCoassoc:
      return {{"coasso", false, true}, multip("delta", true)};
    case StructureKind::HomCoassocRB:
      return {{"coasso", false, true}, {"rb-comm", false, true}, {"rb-id", false, true}, multip("delta", true)};
    case StructureKind::HomLie:
      return {{"skew", false, true}, {"cojacobi", false, true}, multip("gamma", true)};
    case StructureKind::HomLieRB:
      return {{"skew", false, true},
              {"cojacobi", false, true},
              {"rb-comm", false, true},
              {"rb-id", false, true},
              multip("gamma", true)};
    case StructureKind::HomPreLie:
      return {{"prelie", false, true}, multip("delta", true)};
    case StructureKind::HomDendriform:
      return {{"c1", false, true}, {"c2", false, true}, {"c3", false, true},
              multip("delta_m1", false), multip("delta_1", false)};
    case StructureKind::HomTridendriform:
      return {{"c1", false, true}, {"c2", false, true}, {"c3", false, true}, {"c4", false, true},
              {"c5", false, true}, {"c6", false, true}, {"c7", false, true},
              multip("delta_m1", false), multip("delta_0", false), multip("delta_1", false)};
    case StructureKind::CoCommHomTridendriform:
      return {{"coasso", false, true}, {"cocomm", false, true}, {"d3", false, true}, {"d4", false, true},
              multip("delta_star", false), multip("delta_ast", false)};
    case StructureKind::PostHomLie:
      return {{"dplc1", false, true}, {"dplc2", false, true}, {"dplc3", false, true}, {"dplc4", false, true},
              multip("gamma", false, true), multip("delta", false)};
    case StructureKind::HomPoisson:
      return {{"skew", false, true}, {"cojacobi", false, true}, {"coasso", false, true},
              {"cocomm", false, true}, {"p1", false, true},
              multip("gamma", false, true), multip("delta_ast", false)};
    case StructureKind::PostHomPoisson:
      return {{"dplc1", false, true}, {"dplc2", false, true}, {"dplc3", false, true}, {"dplc4", false, true},
              {"coasso", false, true}, {"cocomm", false, true}, {"d3", false, true}, {"d4", false, true},
              {"p1", false, true}, {"p2", false, true}, {"p3", false, true}, {"p4", false, true},
              {"p5", false, true},
              multip("gamma", false, true), multip("delta", false),
              multip("delta_star", false), multip("delta_ast", false)};
  }
  throw Error(Errc::UnknownKind, "unknown structure kind");
}

namespace {

using TM = TensorMap;

struct Ctx {
  const StructurePackage& s;
  bool elide;

  TM A() const { return elide ? TM::identity(s.field, s.space) : s.alpha; }
  TM tau(const TM& t) const { return permute(LegPermutation::tau(), t); }
  TM tau_l(const TM& t) const { return permute(LegPermutation::tau_l(), t); }
  TM tau_r(const TM& t) const { return permute(LegPermutation::tau_r(), t); }
  TM xi(const TM& t) const { return permute(LegPermutation::xi(), t); }
  TM xi2(const TM& t) const { return permute(LegPermutation::xi2(), t); }
  Scalar one() const { return Scalar::one(s.field); }
};

TM coasso_residual(const Ctx& c, const TM& d) {
  return sub(compose_pair(c.A(), d, d), compose_pair(d, c.A(), d));
}

TM multip_residual(const Ctx& c, const TM& m) {
  return sub(precompose(m, c.A()), compose_pair(c.A(), c.A(), m));
}

TM skew_residual(const Ctx& c, const TM& g) { return add(g, c.tau(g)); }

TM cojacobi_residual(const Ctx& c, const TM& g) {
  TM x = compose_pair(c.A(), g, g);
  return add(add(x, c.xi(x)), c.xi2(x));
}

TM rb_comm_residual(const Ctx& c, const TM& r) { return sub(mat_mul(r, c.A()), mat_mul(c.A(), r)); }

TM rb_id_residual(const Ctx& c, const TM& d, const TM& r, const Scalar& w) {
  TM id = TM::identity(c.s.field, c.s.space);
  std::pair<Scalar, TM> ts[3] = {{c.one(), compose_pair(r, id, d)},
                                 {c.one(), compose_pair(id, r, d)},
                                 {w, d}};
  return sub(compose_pair(r, r, d), precompose(lincomb(ts), r));
}

TM prelie_residual(const Ctx& c, const TM& d) {
  TM cd = sub(compose_pair(d, c.A(), d), compose_pair(c.A(), d, d));
  return sub(cd, c.tau_l(cd));
}

TM dplc3_residual(const Ctx& c, const TM& g, const TM& d) {
  return sub(sub(compose_pair(c.A(), g, d), compose_pair(d, c.A(), g)),
             c.tau_l(compose_pair(c.A(), d, g)));
}

TM dplc4_residual(const Ctx& c, const TM& g, const TM& d) {
  TM t1 = compose_pair(d, c.A(), d);
  TM t2 = compose_pair(c.A(), d, d);
  return add(add(sub(sub(t1, t2), c.tau_l(t1)), c.tau_l(t2)), compose_pair(g, c.A(), d));
}

TM p1_residual(const Ctx& c, const TM& g, const TM& ast) {
  return sub(sub(compose_pair(c.A(), ast, g), compose_pair(g, c.A(), ast)),
             c.tau_l(compose_pair(c.A(), g, ast)));
}

}  // namespace

TensorMap axiom_residual(const StructurePackage& s, const std::string& id, bool elide_alpha) {
  Ctx c{s, elide_alpha};
  StructureKind k = s.kind;

  if (id.rfind("multip", 0) == 0) {
    std::string name = id == "multip" ? comap_names(k).at(0) : id.substr(std::string("multip:").size());
    return multip_residual(c, s.comap(name));
  }

  // Dendriform packages instantiate the tridendriform axioms with delta_0 = 0.
  auto trid = [&](const char* n) -> TM {
    if (k == StructureKind::HomDendriform && std::string(n) == "delta_0")
      return TM::zero(s.field, s.space, {s.space, s.space});
    return s.comap(n);
  };

  if (id == "coasso") {
    const TM& d = (k == StructureKind::CoCommHomTridendriform || k == StructureKind::HomPoisson ||
                   k == StructureKind::PostHomPoisson)
                      ? s.comap("delta_ast")
                      : s.comap("delta");
    return coasso_residual(c, d);
  }
  if (id == "cocomm") {
    const TM& d = s.comap("delta_ast");
    return sub(d, c.tau(d));
  }
  if (id == "skew") return skew_residual(c, s.comap("gamma"));
  if (id == "cojacobi") return cojacobi_residual(c, s.comap("gamma"));
  if (id == "rb-comm") {
    if (!s.rb) throw Error(Errc::KindMismatch, "no Rota-Baxter operator");
    return rb_comm_residual(c, s.rb->op);
  }
  if (id == "rb-id") {
    if (!s.rb) throw Error(Errc::KindMismatch, "no Rota-Baxter operator");
    const TM& d = k == StructureKind::HomLieRB ? s.comap("gamma") : s.comap("delta");
    return rb_id_residual(c, d, s.rb->op, s.rb->weight);
  }
  if (id == "prelie") return prelie_residual(c, s.comap("delta"));

  if (id == "c1")
    return sub(compose_pair(trid("delta_m1"), c.A(), trid("delta_m1")),
               compose_pair(c.A(), add(add(trid("delta_m1"), trid("delta_1")), trid("delta_0")),
                            trid("delta_m1")));
  if (id == "c2")
    return sub(compose_pair(trid("delta_1"), c.A(), trid("delta_m1")),
               compose_pair(c.A(), trid("delta_m1"), trid("delta_1")));
  if (id == "c3")
    return sub(compose_pair(c.A(), trid("delta_1"), trid("delta_1")),
               compose_pair(add(add(trid("delta_m1"), trid("delta_1")), trid("delta_0")), c.A(),
                            trid("delta_1")));
  if (id == "c4")
    return sub(compose_pair(trid("delta_m1"), c.A(), trid("delta_0")),
               compose_pair(c.A(), trid("delta_1"), trid("delta_0")));
  if (id == "c5")
    return sub(compose_pair(trid("delta_1"), c.A(), trid("delta_0")),
               compose_pair(c.A(), trid("delta_0"), trid("delta_1")));
  if (id == "c6")
    return sub(compose_pair(trid("delta_0"), c.A(), trid("delta_m1")),
               compose_pair(c.A(), trid("delta_m1"), trid("delta_0")));
  if (id == "c7")
    return sub(compose_pair(trid("delta_0"), c.A(), trid("delta_0")),
               compose_pair(c.A(), trid("delta_0"), trid("delta_0")));

  if (id == "d3") {
    const TM& star = s.comap("delta_star");
    const TM& ast = s.comap("delta_ast");
    return sub(compose_pair(add(add(star, c.tau(star)), ast), c.A(), star),
               compose_pair(c.A(), star, star));
  }
  if (id == "d4") {
    const TM& star = s.comap("delta_star");
    const TM& ast = s.comap("delta_ast");
    return sub(compose_pair(star, c.A(), ast), compose_pair(c.A(), ast, star));
  }

  if (id == "dplc1") return skew_residual(c, s.comap("gamma"));
  if (id == "dplc2") return cojacobi_residual(c, s.comap("gamma"));
  if (id == "dplc3") return dplc3_residual(c, s.comap("gamma"), s.comap("delta"));
  if (id == "dplc4") return dplc4_residual(c, s.comap("gamma"), s.comap("delta"));

  if (id == "p1") return p1_residual(c, s.comap("gamma"), s.comap("delta_ast"));
  if (id == "p2") {
    const TM &g = s.comap("gamma"), &d = s.comap("delta");
    const TM &star = s.comap("delta_star"), &ast = s.comap("delta_ast");
    return add(sub(c.tau_r(compose_pair(c.A(), star, g)), c.xi2(compose_pair(c.A(), g, star))),
               c.xi(compose_pair(c.A(), d, ast)));
  }
  if (id == "p3") {
    const TM &d = s.comap("delta"), &ast = s.comap("delta_ast");
    return sub(sub(compose_pair(c.A(), ast, d), compose_pair(d, c.A(), ast)),
               c.tau_l(compose_pair(c.A(), d, ast)));
  }
  if (id == "p4") {
    const TM& d = s.comap("delta");
    const TM &star = s.comap("delta_star"), &ast = s.comap("delta_ast");
    TM sd = compose_pair(star, c.A(), d);
    TM lhs = add(add(c.xi(sd), c.xi2(c.tau_r(sd))), c.xi(compose_pair(ast, c.A(), d)));
    TM rhs = add(compose_pair(d, c.A(), ast), c.tau_l(compose_pair(c.A(), d, ast)));
    return sub(lhs, rhs);
  }
  if (id == "p5") {
    const TM &g = s.comap("gamma"), &d = s.comap("delta");
    const TM& star = s.comap("delta_star");
    TM lhs = c.tau_r(compose_pair(c.A(), star, d));
    TM rhs = add(sub(add(c.xi2(compose_pair(c.A(), d, star)), c.tau_r(compose_pair(d, c.A(), star))),
                     c.xi2(compose_pair(d, c.A(), star))),
                 c.tau_r(compose_pair(g, c.A(), star)));
    return sub(lhs, rhs);
  }

  throw Error(Errc::UnknownAxiom, "unknown axiom id " + id + " for kind " + kind_name(k));
}

void CheckReport::finalize() {
  structural_pass = multiplicative = passed = full_pass = true;
  for (const auto& e : entries) {
    if (!e.passed) {
      full_pass = false;
      if (e.multiplicativity)
        multiplicative = false;
      else
        structural_pass = false;
      if (e.required) passed = false;
    }
  }
}

const CheckEntry* CheckReport::entry(const std::string& id) const {
  for (const auto& e : entries)
    if (e.axiom_id == id) return &e;
  return nullptr;
}

CheckReport check_structure(const StructurePackage& s, const std::vector<std::string>* subset,
                            bool elide_alpha) {
  s.validate();
  CheckReport rep;
  rep.kind_label = kind_name(s.kind);
  for (const auto& ax : axioms_of(s.kind)) {
    if (subset && std::find(subset->begin(), subset->end(), ax.id) == subset->end()) continue;
    TensorMap r = axiom_residual(s, ax.id, elide_alpha);
    auto row = r.first_nonzero_row();
    rep.entries.push_back(CheckEntry{ax.id, !row.has_value(), r,
                                     row ? std::optional<int>(*row + 1) : std::nullopt,
                                     ax.multiplicativity, ax.required});
  }
  if (subset && rep.entries.size() != subset->size())
    throw Error(Errc::UnknownAxiom, "axiom subset contains ids unknown to this kind");
  rep.finalize();
  return rep;
}

bool package_multiplicative(const StructurePackage& s) {
  for (const auto& [name, m] : s.comaps)
    if (!sub(precompose(m, s.alpha), compose_pair(s.alpha, s.alpha, m)).is_zero()) return false;
  return true;
}

StructurePackage opposite_tridend(const StructurePackage& s) {
  if (s.kind != StructureKind::HomTridendriform)
    throw Error(Errc::KindMismatch, "opposite is defined on Hom-tridendriform packages");
  StructurePackage out = s;
  auto t = [](const TensorMap& m) { return permute(LegPermutation::tau(), m); };
  out.comaps.at("delta_m1") = t(s.comap("delta_1"));
  out.comaps.at("delta_1") = t(s.comap("delta_m1"));
  out.comaps.at("delta_0") = t(s.comap("delta_0"));
  return out;
}

ProductTensor::ProductTensor(const FieldSpec& f, const SpaceId& s) : field(f), space(s) {
  if (s.dim < 1) throw Error(Errc::ShapeError, "empty space");
  c.assign(static_cast<std::size_t>(s.dim) * s.dim * s.dim, Scalar::zero(f));
}

const Scalar& ProductTensor::at(int i, int j, int k) const {
  return c[(static_cast<std::size_t>(i) * space.dim + j) * space.dim + k];
}

void ProductTensor::set(int i, int j, int k, const Scalar& v) {
  c[(static_cast<std::size_t>(i) * space.dim + j) * space.dim + k] = v;
}

bool AlgebraConstants::operator==(const AlgebraConstants& o) const {
  return field == o.field && space == o.space && alpha == o.alpha && m_left.c == o.m_left.c &&
         m_dot.c == o.m_dot.c && m_right.c == o.m_right.c;
}

namespace {

TensorMap transpose_alpha(const TensorMap& a) {
  TensorMap out(a.field(), a.dom(), a.cod());
  int n = a.dom().dim;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int js[1] = {j};
      out.set(i, js, a.at1(j, i));
    }
  return out;
}

TensorMap comap_of_product(const ProductTensor& m) {
  TensorMap out(m.field, m.space, {m.space, m.space});
  int n = m.space.dim;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        int js[2] = {i, j};
        out.set(k, js, m.at(i, j, k));
      }
  return out;
}

ProductTensor product_of_comap(const TensorMap& d) {
  ProductTensor out(d.field(), d.dom());
  int n = d.dom().dim;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) out.set(i, j, k, d.at2(k, i, j));
  return out;
}

}  // namespace

StructurePackage dualize_algebra(const AlgebraConstants& a) {
  if (a.alpha.dom() != a.space || a.alpha.arity() != 1 || a.alpha.cod()[0] != a.space ||
      a.m_left.space != a.space || a.m_dot.space != a.space || a.m_right.space != a.space)
    throw Error(Errc::ShapeError, "algebra constants have inconsistent shapes");
  StructurePackage s{StructureKind::HomTridendriform, a.space, a.field, transpose_alpha(a.alpha), {}, std::nullopt};
  s.comaps.emplace("delta_m1", comap_of_product(a.m_left));
  s.comaps.emplace("delta_0", comap_of_product(a.m_dot));
  s.comaps.emplace("delta_1", comap_of_product(a.m_right));
  return s;
}

AlgebraConstants dualize_package(const StructurePackage& s) {
  if (s.kind != StructureKind::HomTridendriform)
    throw Error(Errc::KindMismatch, "dual constants are read off Hom-tridendriform packages");
  AlgebraConstants a{s.field,
                     s.space,
                     transpose_alpha(s.alpha),
                     product_of_comap(s.comap("delta_m1")),
                     product_of_comap(s.comap("delta_0")),
                     product_of_comap(s.comap("delta_1"))};
  return a;
}

}  // namespace hcs
