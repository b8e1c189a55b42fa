#include "hcs/constructions.hpp"

namespace hcs {

namespace {

using TM = TensorMap;

TM tau(const TM& t) { return permute(LegPermutation::tau(), t); }

void require_kind(const StructurePackage& s, StructureKind k, const char* what) {
  if (s.kind != k)
    throw Error(Errc::KindMismatch, std::string(what) + " expects a " + kind_name(k) + " package");
}

void require_char_not_2(const StructurePackage& s, const char* what) {
  if (s.field.characteristic() == 2)
    throw Error(Errc::CharacteristicConflict, std::string(what) + " needs 1/2, unavailable in characteristic 2");
}

Scalar half(const FieldSpec& f) { return Scalar::one(f) / Scalar(f, 2); }

}  // namespace

StructurePackage yau_twist(const StructurePackage& s, const TensorMap& beta) {
  s.validate();
  switch (s.kind) {
    case StructureKind::HomCoassoc:
    case StructureKind::HomLie:
    case StructureKind::HomTridendriform:
    case StructureKind::PostHomLie:
      break;
    default:
      throw Error(Errc::UnsupportedKind, std::string("yau_twist does not support ") + kind_name(s.kind));
  }
  if (beta.field() != s.field || beta.arity() != 1 || beta.dom() != s.space || beta.cod()[0] != s.space)
    throw Error(Errc::NotEndomorphism, "beta has the wrong signature");
  if (!sub(mat_mul(beta, s.alpha), mat_mul(s.alpha, beta)).is_zero())
    throw Error(Errc::NotEndomorphism, "beta o alpha != alpha o beta");
  for (const auto& [name, m] : s.comaps)
    if (!sub(precompose(m, beta), compose_pair(beta, beta, m)).is_zero())
      throw Error(Errc::NotEndomorphism, name + " o beta != (beta (x) beta) o " + name);

  StructurePackage out = s;
  for (auto& [name, m] : out.comaps) m = precompose(m, beta);
  out.alpha = mat_mul(beta, s.alpha);
  return out;
}

StructurePackage power_twist(const StructurePackage& s, long long n) {
  s.validate();
  if (n < 0) throw Error(Errc::ExponentOverflow, "power_twist exponent must be non-negative");
  if (!package_multiplicative(s))
    throw Error(Errc::NotMultiplicative, "power_twist needs a multiplicative package");
  if (n == 0) return s;
  return yau_twist(s, mat_pow(s.alpha, static_cast<std::uint64_t>(n)));
}

StructurePackage inverse_twist(const StructurePackage& s) {
  s.validate();
  if (!package_multiplicative(s))
    throw Error(Errc::NotMultiplicative, "inverse_twist needs a multiplicative package");
  return yau_twist(s, mat_inverse(s.alpha));
}

StructurePackage commutator_cobracket(const StructurePackage& s) {
  require_kind(s, StructureKind::HomCoassoc, "commutator_cobracket");
  const TM& d = s.comap("delta");
  StructurePackage out{StructureKind::HomLie, s.space, s.field, s.alpha, {}, std::nullopt};
  out.comaps.emplace("gamma", sub(d, tau(d)));
  return out;
}

StructurePackage tridend_sum(const StructurePackage& s) {
  require_kind(s, StructureKind::HomTridendriform, "tridend_sum");
  StructurePackage out{StructureKind::HomCoassoc, s.space, s.field, s.alpha, {}, std::nullopt};
  out.comaps.emplace("delta", add(add(s.comap("delta_m1"), s.comap("delta_0")), s.comap("delta_1")));
  return out;
}

StructurePackage rb_coassoc_derive(const StructurePackage& s, RbTarget target) {
  require_kind(s, StructureKind::HomCoassocRB, "rb_coassoc_derive");
  const TM& d = s.comap("delta");
  const TM& r = s.rb->op;
  const Scalar& w = s.rb->weight;
  TM id = TM::identity(s.field, s.space);
  TM dm1 = compose_pair(id, r, d);  // (I (x) R) o Delta
  TM d1 = compose_pair(r, id, d);   // (R (x) I) o Delta

  switch (target) {
    case RbTarget::Tridend: {
      StructurePackage out{StructureKind::HomTridendriform, s.space, s.field, s.alpha, {}, std::nullopt};
      out.comaps.emplace("delta_m1", dm1);
      out.comaps.emplace("delta_0", scale(w, d));
      out.comaps.emplace("delta_1", d1);
      return out;
    }
    case RbTarget::Dendriform: {
      StructurePackage out{StructureKind::HomDendriform, s.space, s.field, s.alpha, {}, std::nullopt};
      out.comaps.emplace("delta_m1", add(dm1, scale(w, d)));
      out.comaps.emplace("delta_1", d1);
      return out;
    }
    case RbTarget::Prelie0: {
      if (!w.is_zero()) throw Error(Errc::WeightMismatch, "pre-Lie construction needs weight 0");
      StructurePackage out{StructureKind::HomPreLie, s.space, s.field, s.alpha, {}, std::nullopt};
      out.comaps.emplace("delta", sub(d1, tau(dm1)));
      return out;
    }
    case RbTarget::PrelieM1: {
      if (w != -Scalar::one(s.field)) throw Error(Errc::WeightMismatch, "pre-Lie construction needs weight -1");
      StructurePackage out{StructureKind::HomPreLie, s.space, s.field, s.alpha, {}, std::nullopt};
      out.comaps.emplace("delta", sub(sub(d1, tau(dm1)), d));
      return out;
    }
    case RbTarget::DendriformB: {
      StructurePackage out{StructureKind::HomDendriform, s.space, s.field, s.alpha, {}, std::nullopt};
      out.comaps.emplace("delta_m1", sub(dm1, d));
      out.comaps.emplace("delta_1", add(d1, d));
      return out;
    }
  }
  throw Error(Errc::UnknownKind, "unknown Rota-Baxter target");
}

StructurePackage dendriform_to_prelie(const StructurePackage& s) {
  require_kind(s, StructureKind::HomDendriform, "dendriform_to_prelie");
  StructurePackage out{StructureKind::HomPreLie, s.space, s.field, s.alpha, {}, std::nullopt};
  out.comaps.emplace("delta", sub(s.comap("delta_1"), tau(s.comap("delta_m1"))));
  return out;
}

StructurePackage posthomlie_derive(const StructurePackage& s, PostTarget target) {
  require_kind(s, StructureKind::PostHomLie, "posthomlie_derive");
  const TM& g = s.comap("gamma");
  const TM& d = s.comap("delta");
  switch (target) {
    case PostTarget::Tilde: {
      StructurePackage out = s;
      out.comaps.at("delta") = add(d, g);
      out.comaps.at("gamma") = negate(g);
      return out;
    }
    case PostTarget::Admissible: {
      require_char_not_2(s, "admissible candidate");
      TM dt = add(d, scale(half(s.field), g));
      StructurePackage out{StructureKind::HomLie, s.space, s.field, s.alpha, {}, std::nullopt};
      out.comaps.emplace("gamma", sub(dt, tau(dt)));
      return out;
    }
    case PostTarget::SubHomLie: {
      StructurePackage out{StructureKind::HomLie, s.space, s.field, s.alpha, {}, std::nullopt};
      out.comaps.emplace("gamma", g);
      return out;
    }
  }
  throw Error(Errc::UnknownKind, "unknown post-Hom-Lie target");
}

Le1Report le1_report(const StructurePackage& s) {
  require_kind(s, StructureKind::PostHomLie, "le1_report");
  require_char_not_2(s, "le1_report");
  const TM& g = s.comap("gamma");
  const TM& d = s.comap("delta");
  const TM& a = s.alpha;
  Scalar h = half(s.field);

  TM dt = add(d, scale(h, g));
  TM as = sub(compose_pair(dt, a, dt), compose_pair(a, dt, dt));
  TM lhs = sub(as, permute(LegPermutation::tau_l(), as));
  TM r1 = scale(-h, permute(LegPermutation::tau_l(), compose_pair(g, a, g)));
  TM r2 = scale(-(h * h), compose_pair(a, g, g));
  return Le1Report{lhs, r1, r2, lhs == r1, lhs == r2};
}

StructurePackage rb_homlie_to_posthomlie(const StructurePackage& s) {
  require_kind(s, StructureKind::HomLieRB, "rb_homlie_to_posthomlie");
  const TM& g = s.comap("gamma");
  TM id = TM::identity(s.field, s.space);
  StructurePackage out{StructureKind::PostHomLie, s.space, s.field, s.alpha, {}, std::nullopt};
  out.comaps.emplace("gamma", scale(s.rb->weight, g));
  out.comaps.emplace("delta", compose_pair(s.rb->op, id, g));
  return out;
}

StructurePackage tensor_posthomlie(const StructurePackage& p, const StructurePackage& q) {
  require_kind(p, StructureKind::PostHomLie, "tensor_posthomlie");
  require_kind(q, StructureKind::HomCoassoc, "tensor_posthomlie (second factor)");
  p.validate();
  q.validate();
  if (p.field != q.field) throw Error(Errc::FieldMismatch, "tensor factors over different fields");
  const TM& dq = q.comap("delta");
  if (!sub(dq, tau(dq)).is_zero())
    throw Error(Errc::NotCocommutative, "second factor must be cocommutative");

  int dp = p.space.dim, dqn = q.space.dim;
  SpaceId c{"C", dqn * dp};  // basis e'_a (x) e_x, a-major
  StructurePackage out{StructureKind::PostHomLie, c, p.field, TM::zero(p.field, c, {c}), {}, std::nullopt};

  auto idx = [&](int a, int x) { return a * dp + x; };
  for (int a = 0; a < dqn; ++a)
    for (int x = 0; x < dp; ++x)
      for (int b = 0; b < dqn; ++b)
        for (int y = 0; y < dp; ++y) {
          int js[1] = {idx(b, y)};
          out.alpha.set(idx(a, x), js, q.alpha.at1(a, b) * p.alpha.at1(x, y));
        }

  auto mix = [&](const TM& dpmap) {
    TM t(p.field, c, {c, c});
    for (int a = 0; a < dqn; ++a)
      for (int x = 0; x < dp; ++x)
        for (int a1 = 0; a1 < dqn; ++a1)
          for (int a2 = 0; a2 < dqn; ++a2) {
            const Scalar& ca = dq.at2(a, a1, a2);
            if (ca.is_zero()) continue;
            for (int x1 = 0; x1 < dp; ++x1)
              for (int x2 = 0; x2 < dp; ++x2) {
                const Scalar& cx = dpmap.at2(x, x1, x2);
                if (cx.is_zero()) continue;
                int js[2] = {idx(a1, x1), idx(a2, x2)};
                t.set(idx(a, x), js, t.at2(idx(a, x), js[0], js[1]) + ca * cx);
              }
          }
    return t;
  };
  out.comaps.emplace("delta", mix(p.comap("delta")));
  out.comaps.emplace("gamma", mix(p.comap("gamma")));
  return out;
}

StructurePackage tridend_to_posthomlie(const StructurePackage& s) {
  require_kind(s, StructureKind::HomTridendriform, "tridend_to_posthomlie");
  const TM& d0 = s.comap("delta_0");
  StructurePackage out{StructureKind::PostHomLie, s.space, s.field, s.alpha, {}, std::nullopt};
  out.comaps.emplace("gamma", sub(d0, tau(d0)));
  out.comaps.emplace("delta", sub(s.comap("delta_1"), tau(s.comap("delta_m1"))));
  return out;
}

StructurePackage postpoisson_to_homopoisson(const StructurePackage& s) {
  require_kind(s, StructureKind::PostHomPoisson, "postpoisson_to_homopoisson");
  const TM& d = s.comap("delta");
  const TM& star = s.comap("delta_star");
  StructurePackage out{StructureKind::HomPoisson, s.space, s.field, s.alpha, {}, std::nullopt};
  out.comaps.emplace("gamma", add(sub(d, tau(d)), s.comap("gamma")));
  out.comaps.emplace("delta_ast", add(add(star, tau(star)), s.comap("delta_ast")));
  return out;
}

}  // namespace hcs
