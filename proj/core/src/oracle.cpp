#include "hcs/oracle.hpp"

#include <array>
#include <map>
#include <vector>

namespace hcs {

namespace {

// One Sweedler summand: a coefficient and up to three basis indices.
struct Term {
  Scalar c;
  std::array<int, 3> leg;
  int n;
};

using Cloud = std::vector<Term>;

Cloud unit(const FieldSpec& f, int x) { return {Term{Scalar::one(f), {x, -1, -1}, 1}}; }

// f(e_j) = sum_i f[j][i] e_i applied to one leg of every summand.
Cloud apply1(const TensorMap& f, const Cloud& in, int leg) {
  Cloud out;
  int n = f.cod()[0].dim;
  for (const Term& t : in) {
    int j = t.leg[leg];
    for (int i = 0; i < n; ++i) {
      const Scalar& fj = f.at1(j, i);
      if (fj.is_zero()) continue;
      Term u = t;
      u.c = t.c * fj;
      u.leg[leg] = i;
      out.push_back(u);
    }
  }
  return out;
}

// Replace one leg by the two legs of a comap expansion.
Cloud split(const TensorMap& m, const Cloud& in, int leg) {
  Cloud out;
  int n1 = m.cod()[0].dim, n2 = m.cod()[1].dim;
  for (const Term& t : in) {
    int j = t.leg[leg];
    for (int a = 0; a < n1; ++a)
      for (int b = 0; b < n2; ++b) {
        const Scalar& c = m.at2(j, a, b);
        if (c.is_zero()) continue;
        Term u;
        u.c = t.c * c;
        u.n = t.n + 1;
        int pos = 0;
        for (int s = 0; s < t.n; ++s) {
          if (s == leg) {
            u.leg[pos++] = a;
            u.leg[pos++] = b;
          } else {
            u.leg[pos++] = t.leg[s];
          }
        }
        out.push_back(u);
      }
  }
  return out;
}

Cloud expand2(const TensorMap& m, const FieldSpec& f, int x) { return split(m, unit(f, x), 0); }

Cloud swap_legs(Cloud in, int a, int b) {
  for (Term& t : in) std::swap(t.leg[a], t.leg[b]);
  return in;
}

// xi: e_p (x) e_q (x) e_r  ->  e_q (x) e_r (x) e_p
Cloud cyc_xi(Cloud in) {
  for (Term& t : in) t.leg = {t.leg[1], t.leg[2], t.leg[0]};
  return in;
}

Cloud cyc_xi2(Cloud in) {
  for (Term& t : in) t.leg = {t.leg[2], t.leg[0], t.leg[1]};
  return in;
}

struct Acc {
  std::map<std::array<int, 4>, Scalar> m;

  void add(int x, const Cloud& cloud, bool plus) {
    for (const Term& t : cloud) {
      std::array<int, 4> key{x, t.leg[0], t.n > 1 ? t.leg[1] : -1, t.n > 2 ? t.leg[2] : -1};
      auto it = m.find(key);
      Scalar v = plus ? t.c : -t.c;
      if (it == m.end())
        m.emplace(key, v);
      else
        it->second = it->second + v;
    }
  }
};

TensorMap to_residual(const Acc& acc, const FieldSpec& f, const SpaceId& dom,
                      std::vector<SpaceId> cod) {
  TensorMap r(f, dom, std::move(cod));
  for (const auto& [key, v] : acc.m) {
    if (v.is_zero()) continue;
    int js[3] = {key[1], key[2], key[3]};
    r.set(key[0], std::span<const int>(js, r.arity()), v);
  }
  return r;
}

// (A (x) alpha') o B per basis vector: split leg 0 with A, apply alpha' to leg 2.
Cloud lt(const TensorMap& a, const TensorMap& al, const TensorMap& b, const FieldSpec& f, int x) {
  return apply1(al, split(a, expand2(b, f, x), 0), 2);
}

// (alpha' (x) A) o B: split leg 1 with A, apply alpha' to leg 0.
Cloud rt(const TensorMap& a, const TensorMap& al, const TensorMap& b, const FieldSpec& f, int x) {
  return apply1(al, split(a, expand2(b, f, x), 1), 0);
}

}  // namespace

OracleVerdict sweedler_oracle_check(const StructurePackage& s, const std::string& id) {
  s.validate();
  const FieldSpec& f = s.field;
  const SpaceId& C = s.space;
  const TensorMap& al = s.alpha;
  int dim = C.dim;

  auto cm = [&](const char* n) -> const TensorMap& { return s.comap(n); };
  TensorMap d0zero = TensorMap::zero(f, C, {C, C});
  auto trid = [&](const char* n) -> const TensorMap& {
    if (s.kind == StructureKind::HomDendriform && std::string(n) == "delta_0") return d0zero;
    return s.comap(n);
  };

  Acc acc;
  int arity = 3;

  if (id.rfind("multip", 0) == 0) {
    std::string name = id == "multip" ? comap_names(s.kind).at(0) : id.substr(std::string("multip:").size());
    const TensorMap& m = s.comap(name);
    arity = 2;
    for (int x = 0; x < dim; ++x) {
      acc.add(x, split(m, apply1(al, unit(f, x), 0), 0), true);
      acc.add(x, apply1(al, apply1(al, expand2(m, f, x), 0), 1), false);
    }
  } else if (id == "coasso") {
    const TensorMap& d = (s.kind == StructureKind::CoCommHomTridendriform ||
                          s.kind == StructureKind::HomPoisson || s.kind == StructureKind::PostHomPoisson)
                             ? cm("delta_ast")
                             : cm("delta");
    for (int x = 0; x < dim; ++x) {
      acc.add(x, rt(d, al, d, f, x), true);
      acc.add(x, lt(d, al, d, f, x), false);
    }
  } else if (id == "cocomm") {
    const TensorMap& d = cm("delta_ast");
    arity = 2;
    for (int x = 0; x < dim; ++x) {
      Cloud c = expand2(d, f, x);
      acc.add(x, c, true);
      acc.add(x, swap_legs(c, 0, 1), false);
    }
  } else if (id == "skew" || id == "dplc1") {
    const TensorMap& g = cm("gamma");
    arity = 2;
    for (int x = 0; x < dim; ++x) {
      Cloud c = expand2(g, f, x);
      acc.add(x, c, true);
      acc.add(x, swap_legs(c, 0, 1), true);
    }
  } else if (id == "cojacobi" || id == "dplc2") {
    const TensorMap& g = cm("gamma");
    for (int x = 0; x < dim; ++x) {
      Cloud c = rt(g, al, g, f, x);  // alpha(x_1) (x) gamma(x_2)
      acc.add(x, c, true);
      acc.add(x, cyc_xi(c), true);
      acc.add(x, cyc_xi2(c), true);
    }
  } else if (id == "rb-comm") {
    if (!s.rb) throw Error(Errc::KindMismatch, "no Rota-Baxter operator");
    arity = 1;
    for (int x = 0; x < dim; ++x) {
      acc.add(x, apply1(s.rb->op, apply1(al, unit(f, x), 0), 0), true);
      acc.add(x, apply1(al, apply1(s.rb->op, unit(f, x), 0), 0), false);
    }
  } else if (id == "rb-id") {
    if (!s.rb) throw Error(Errc::KindMismatch, "no Rota-Baxter operator");
    const TensorMap& d = s.kind == StructureKind::HomLieRB ? cm("gamma") : cm("delta");
    const TensorMap& r = s.rb->op;
    arity = 2;
    for (int x = 0; x < dim; ++x) {
      acc.add(x, apply1(r, apply1(r, expand2(d, f, x), 0), 1), true);
      Cloud rx = split(d, apply1(r, unit(f, x), 0), 0);
      acc.add(x, apply1(r, rx, 0), false);
      acc.add(x, apply1(r, rx, 1), false);
      Cloud wrx = rx;
      for (Term& t : wrx) t.c = t.c * s.rb->weight;
      acc.add(x, wrx, false);
    }
  } else if (id == "prelie") {
    const TensorMap& d = cm("delta");
    for (int x = 0; x < dim; ++x) {
      Cloud c1 = lt(d, al, d, f, x);
      Cloud c2 = rt(d, al, d, f, x);
      acc.add(x, c1, true);
      acc.add(x, c2, false);
      acc.add(x, swap_legs(c1, 0, 1), false);
      acc.add(x, swap_legs(c2, 0, 1), true);
    }
  } else if (id == "c1") {
    for (int x = 0; x < dim; ++x) {
      acc.add(x, lt(trid("delta_m1"), al, trid("delta_m1"), f, x), true);
      acc.add(x, rt(trid("delta_m1"), al, trid("delta_m1"), f, x), false);
      acc.add(x, rt(trid("delta_1"), al, trid("delta_m1"), f, x), false);
      acc.add(x, rt(trid("delta_0"), al, trid("delta_m1"), f, x), false);
    }
  } else if (id == "c2") {
    for (int x = 0; x < dim; ++x) {
      acc.add(x, lt(trid("delta_1"), al, trid("delta_m1"), f, x), true);
      acc.add(x, rt(trid("delta_m1"), al, trid("delta_1"), f, x), false);
    }
  } else if (id == "c3") {
    for (int x = 0; x < dim; ++x) {
      acc.add(x, rt(trid("delta_1"), al, trid("delta_1"), f, x), true);
      acc.add(x, lt(trid("delta_m1"), al, trid("delta_1"), f, x), false);
      acc.add(x, lt(trid("delta_1"), al, trid("delta_1"), f, x), false);
      acc.add(x, lt(trid("delta_0"), al, trid("delta_1"), f, x), false);
    }
  } else if (id == "c4") {
    for (int x = 0; x < dim; ++x) {
      acc.add(x, lt(trid("delta_m1"), al, trid("delta_0"), f, x), true);
      acc.add(x, rt(trid("delta_1"), al, trid("delta_0"), f, x), false);
    }
  } else if (id == "c5") {
    for (int x = 0; x < dim; ++x) {
      acc.add(x, lt(trid("delta_1"), al, trid("delta_0"), f, x), true);
      acc.add(x, rt(trid("delta_0"), al, trid("delta_1"), f, x), false);
    }
  } else if (id == "c6") {
    for (int x = 0; x < dim; ++x) {
      acc.add(x, lt(trid("delta_0"), al, trid("delta_m1"), f, x), true);
      acc.add(x, rt(trid("delta_m1"), al, trid("delta_0"), f, x), false);
    }
  } else if (id == "c7") {
    for (int x = 0; x < dim; ++x) {
      acc.add(x, lt(trid("delta_0"), al, trid("delta_0"), f, x), true);
      acc.add(x, rt(trid("delta_0"), al, trid("delta_0"), f, x), false);
    }
  } else if (id == "d3") {
    const TensorMap& star = cm("delta_star");
    const TensorMap& ast = cm("delta_ast");
    for (int x = 0; x < dim; ++x) {
      Cloud c = lt(star, al, star, f, x);
      acc.add(x, c, true);
      acc.add(x, swap_legs(c, 0, 1), true);
      acc.add(x, lt(ast, al, star, f, x), true);
      acc.add(x, rt(star, al, star, f, x), false);
    }
  } else if (id == "d4") {
    const TensorMap& star = cm("delta_star");
    const TensorMap& ast = cm("delta_ast");
    for (int x = 0; x < dim; ++x) {
      acc.add(x, lt(star, al, ast, f, x), true);
      acc.add(x, rt(ast, al, star, f, x), false);
    }
  } else if (id == "dplc3" || id == "dplc3b") {
    const TensorMap& g = cm("gamma");
    const TensorMap& d = cm("delta");
    for (int x = 0; x < dim; ++x) {
      Cloud t1 = rt(g, al, d, f, x);        // alpha(x_(1)) (x) x_(2)1 (x) x_(2)2
      Cloud t2 = lt(d, al, g, f, x);        // x_1(1) (x) x_1(2) (x) alpha(x_2)
      Cloud t3 = swap_legs(rt(d, al, g, f, x), 0, 1);  // x_2(1) (x) alpha(x_1) (x) x_2(2)
      if (id == "dplc3") {
        acc.add(x, t1, true);
        acc.add(x, t2, false);
        acc.add(x, t3, false);
      } else {
        acc.add(x, swap_legs(t1, 0, 1), true);
        acc.add(x, swap_legs(t2, 0, 1), false);
        acc.add(x, rt(d, al, g, f, x), false);
      }
    }
  } else if (id == "dplc4" || id == "dplc4b") {
    const TensorMap& g = cm("gamma");
    const TensorMap& d = cm("delta");
    for (int x = 0; x < dim; ++x) {
      Cloud t1 = lt(d, al, d, f, x);
      Cloud t2 = rt(d, al, d, f, x);
      Cloud t5 = lt(g, al, d, f, x);
      if (id == "dplc4") {
        acc.add(x, t1, true);
        acc.add(x, t2, false);
        acc.add(x, swap_legs(t1, 0, 1), false);
        acc.add(x, swap_legs(t2, 0, 1), true);
        acc.add(x, t5, true);
      } else {
        acc.add(x, swap_legs(t1, 0, 1), true);
        acc.add(x, swap_legs(t2, 0, 1), false);
        acc.add(x, t1, false);
        acc.add(x, t2, true);
        acc.add(x, swap_legs(t5, 0, 1), true);
      }
    }
  } else if (id == "p1") {
    const TensorMap& g = cm("gamma");
    const TensorMap& ast = cm("delta_ast");
    for (int x = 0; x < dim; ++x) {
      acc.add(x, rt(ast, al, g, f, x), true);
      acc.add(x, lt(g, al, ast, f, x), false);
      acc.add(x, swap_legs(rt(g, al, ast, f, x), 0, 1), false);
    }
  } else if (id == "p2") {
    const TensorMap& g = cm("gamma");
    const TensorMap& d = cm("delta");
    const TensorMap& star = cm("delta_star");
    const TensorMap& ast = cm("delta_ast");
    for (int x = 0; x < dim; ++x) {
      acc.add(x, swap_legs(rt(star, al, g, f, x), 1, 2), true);
      acc.add(x, cyc_xi2(rt(g, al, star, f, x)), false);
      acc.add(x, cyc_xi(rt(d, al, ast, f, x)), true);
    }
  } else if (id == "p3") {
    const TensorMap& d = cm("delta");
    const TensorMap& ast = cm("delta_ast");
    for (int x = 0; x < dim; ++x) {
      acc.add(x, rt(ast, al, d, f, x), true);
      acc.add(x, lt(d, al, ast, f, x), false);
      acc.add(x, swap_legs(rt(d, al, ast, f, x), 0, 1), false);
    }
  } else if (id == "p4") {
    const TensorMap& d = cm("delta");
    const TensorMap& star = cm("delta_star");
    const TensorMap& ast = cm("delta_ast");
    for (int x = 0; x < dim; ++x) {
      Cloud sd = lt(star, al, d, f, x);
      acc.add(x, cyc_xi(sd), true);
      acc.add(x, cyc_xi2(swap_legs(sd, 1, 2)), true);
      acc.add(x, cyc_xi(lt(ast, al, d, f, x)), true);
      acc.add(x, lt(d, al, ast, f, x), false);
      acc.add(x, swap_legs(rt(d, al, ast, f, x), 0, 1), false);
    }
  } else if (id == "p5") {
    const TensorMap& g = cm("gamma");
    const TensorMap& d = cm("delta");
    const TensorMap& star = cm("delta_star");
    for (int x = 0; x < dim; ++x) {
      acc.add(x, swap_legs(rt(star, al, d, f, x), 1, 2), true);
      acc.add(x, cyc_xi2(rt(d, al, star, f, x)), false);
      acc.add(x, swap_legs(lt(d, al, star, f, x), 1, 2), false);
      acc.add(x, cyc_xi2(lt(d, al, star, f, x)), true);
      acc.add(x, swap_legs(lt(g, al, star, f, x), 1, 2), false);
    }
  } else {
    throw Error(Errc::UnknownAxiom, "oracle does not know axiom " + id);
  }

  std::vector<SpaceId> cod(arity, C);
  TensorMap r = to_residual(acc, f, C, cod);
  return OracleVerdict{r.is_zero(), r};
}

OracleVerdict sweedler_oracle_check(const ComodulePackage& p, const std::string& id) {
  p.validate();
  const FieldSpec& f = p.base.field;
  const SpaceId& L = p.base.space;
  const SpaceId& M = p.mspace;
  const TensorMap& al = p.base.alpha;
  const TensorMap& am = p.alpha_m;
  int dim = M.dim;

  Acc acc;
  int arity = 3;

  // (D (x) alpha_M) o m  and  (alpha (x) m2) o m1 for maps M -> L (x) M.
  auto ltc = [&](const TensorMap& d, const TensorMap& m, int x) {
    return apply1(am, split(d, expand2(m, f, x), 0), 2);
  };
  auto rtc = [&](const TensorMap& m2, const TensorMap& m1, int x) {
    return apply1(al, split(m2, expand2(m1, f, x), 1), 0);
  };

  if (id.rfind("equivar:", 0) == 0 || id.rfind("ma1:", 0) == 0) {
    const TensorMap& m = p.map(id.substr(id.find(':') + 1));
    arity = 2;
    for (int x = 0; x < dim; ++x) {
      acc.add(x, split(m, apply1(am, unit(f, x), 0), 0), true);
      acc.add(x, apply1(am, apply1(al, expand2(m, f, x), 0), 1), false);
    }
  } else if (p.kind == ComoduleKind::TridendComodule) {
    const TensorMap& dm1 = p.map("dm1");
    const TensorMap& d0 = p.map("d0");
    const TensorMap& d1 = p.map("d1");
    const TensorMap& Dm1 = p.base.comap("delta_m1");
    const TensorMap& D0 = p.base.comap("delta_0");
    const TensorMap& D1 = p.base.comap("delta_1");
    for (int x = 0; x < dim; ++x) {
      if (id == "cc1") {
        acc.add(x, ltc(Dm1, dm1, x), true);
        acc.add(x, rtc(dm1, dm1, x), false);
        acc.add(x, rtc(d0, dm1, x), false);
        acc.add(x, rtc(d1, dm1, x), false);
      } else if (id == "cc2") {
        acc.add(x, ltc(D1, dm1, x), true);
        acc.add(x, rtc(dm1, d1, x), false);
      } else if (id == "cc3") {
        acc.add(x, rtc(d1, d1, x), true);
        acc.add(x, ltc(Dm1, d1, x), false);
        acc.add(x, ltc(D1, d1, x), false);
        acc.add(x, ltc(D0, d1, x), false);
      } else if (id == "cc4") {
        acc.add(x, ltc(Dm1, d0, x), true);
        acc.add(x, rtc(d1, d0, x), false);
      } else if (id == "cc5") {
        acc.add(x, ltc(D1, d0, x), true);
        acc.add(x, rtc(d0, d1, x), false);
      } else if (id == "cc6") {
        acc.add(x, ltc(D0, dm1, x), true);
        acc.add(x, rtc(dm1, d0, x), false);
      } else if (id == "cc7") {
        acc.add(x, ltc(D0, d0, x), true);
        acc.add(x, rtc(d0, d0, x), false);
      } else {
        throw Error(Errc::UnknownAxiom, "oracle does not know comodule axiom " + id);
      }
    }
  } else {
    const TensorMap& dia = p.map("diamond");
    const TensorMap& bul = p.map("bullet");
    const TensorMap& g = p.base.comap("gamma");
    const TensorMap& d = p.base.comap("delta");
    for (int x = 0; x < dim; ++x) {
      if (id == "ma2") {
        Cloud c = rtc(dia, dia, x);
        acc.add(x, ltc(g, dia, x), true);
        acc.add(x, c, false);
        acc.add(x, swap_legs(c, 0, 1), true);
      } else if (id == "ma3") {
        acc.add(x, ltc(d, dia, x), true);
        acc.add(x, rtc(dia, bul, x), false);
        acc.add(x, swap_legs(rtc(bul, dia, x), 0, 1), true);
      } else if (id == "ma4") {
        Cloud c = rtc(bul, bul, x);
        Cloud y = ltc(d, bul, x);
        acc.add(x, ltc(g, bul, x), true);
        acc.add(x, c, false);
        acc.add(x, swap_legs(c, 0, 1), true);
        acc.add(x, swap_legs(y, 0, 1), false);
        acc.add(x, y, true);
      } else {
        throw Error(Errc::UnknownAxiom, "oracle does not know comodule axiom " + id);
      }
    }
  }

  std::vector<SpaceId> cod;
  if (arity == 2)
    cod = {L, M};
  else
    cod = {L, L, M};
  TensorMap r = to_residual(acc, f, M, cod);
  return OracleVerdict{r.is_zero(), r};
}

}  // namespace hcs
