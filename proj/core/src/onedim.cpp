#include "bitri/onedim.hpp"

#include "bitri/enumerate.hpp"

namespace bitri {

Report validate_adjunction(const Adjunction& adj) {
  Report r("adjunction");
  r.absorb(validate_functor(adj.left), "left");
  r.absorb(validate_functor(adj.right), "right");
  if (!r.ok()) return r;
  const auto& F = adj.left;
  const auto& G = adj.right;
  if (!same_category(F.dom, G.cod) || !same_category(F.cod, G.dom)) {
    r.fail("directions", "left and right adjoint are not opposed");
    return r;
  }
  if (!(adj.unit.src == identity_functor(F.dom)) || !(adj.unit.dst == compose(G, F))) {
    r.fail("unit-typing", "unit must run Id ⇒ right∘left");
  }
  if (!(adj.counit.src == compose(F, G)) || !(adj.counit.dst == identity_functor(F.cod))) {
    r.fail("counit-typing", "counit must run left∘right ⇒ Id");
  }
  if (!r.ok()) return r;
  r.absorb(validate_nattransf(adj.unit), "unit");
  r.absorb(validate_nattransf(adj.counit), "counit");
  if (!r.ok()) return r;
  const auto& B = *F.dom;
  const auto& C = *F.cod;
  for (int b = 0; b < B.objects(); ++b) {
    if (C.comp(adj.counit.comp[F.obj[b]], F.mor[adj.unit.comp[b]]) != C.id(F.obj[b])) {
      r.fail("triangle-left", "ε_F ∘ F(η) ≠ id at object", {b});
    }
  }
  for (int c = 0; c < C.objects(); ++c) {
    if (B.comp(G.mor[adj.counit.comp[c]], adj.unit.comp[G.obj[c]]) != B.id(G.obj[c])) {
      r.fail("triangle-right", "G(ε) ∘ η_G ≠ id at object", {c});
    }
  }
  return r;
}

bool is_equalizer(const FiniteCategory& c, int f, int g, int x, int e) {
  if (c.dst(e) != c.src(f) || c.src(e) != x) return false;
  if (c.comp(f, e) != c.comp(g, e)) return false;
  for (int w = 0; w < c.objects(); ++w) {
    for (int k : c.hom(w, c.src(f))) {
      if (c.comp(f, k) != c.comp(g, k)) continue;
      int count = 0;
      for (int u : c.hom(w, x)) {
        if (c.comp(e, u) == k) ++count;
      }
      if (count != 1) return false;
    }
  }
  return true;
}

bool beck_precomonadic(const Adjunction& adj) {
  const auto& L = adj.left;
  const auto& U = adj.right;
  const auto& B = *L.dom;
  for (int y = 0; y < B.objects(); ++y) {
    const int uly = U.obj[L.obj[y]];
    const int top = adj.unit.comp[uly];                  // η_{ULY}
    const int bottom = U.mor[L.mor[adj.unit.comp[y]]];  // UL(η_Y)
    if (!is_equalizer(B, top, bottom, y, adj.unit.comp[y])) return false;
  }
  return true;
}

Report validate_triangle(const Triangle& t) {
  Report r("triangle");
  r.absorb(validate_functor(t.j), "J");
  r.absorb(validate_adjunction(t.er), "E⊣R");
  r.absorb(validate_adjunction(t.lu), "L⊣U");
  if (!r.ok()) return r;
  if (!same_category(t.j.cod, t.lu.left.dom) || !same_category(t.j.dom, t.er.left.dom)) {
    r.fail("shape", "J, E and L do not form a triangle");
    return r;
  }
  if (!(compose(t.lu.left, t.j) == t.er.left)) r.fail("commutes", "L∘J ≠ E on the nose");
  return r;
}

namespace {

// Unique u: w → x with e∘u = k, lowest index on ties.
int factor_through(const FiniteCategory& c, int e, int w, int k) {
  for (int u : c.hom(w, c.src(e))) {
    if (c.comp(e, u) == k) return u;
  }
  return -1;
}

}  // namespace

DubucResult dubuc_right_adjoint(const Triangle& t, const Limits& lim) {
  (void)lim;
  auto report = validate_triangle(t);
  if (report.mentions("commutes")) throw PreconditionError("triangle does not commute");
  if (!report.ok()) throw PreconditionError(report.summary());
  if (!beck_precomonadic(t.lu)) throw PreconditionError("L is not precomonadic");
  const auto& J = t.j;
  const auto& E = t.er.left;
  const auto& R = t.er.right;
  const auto& rho = t.er.unit;
  const auto& mu = t.er.counit;
  const auto& L = t.lu.left;
  const auto& U = t.lu.right;
  const auto& eta = t.lu.unit;
  const auto& A = *J.dom;
  const auto& B = *J.cod;
  const auto& C = *L.cod;

  DubucResult res;
  const int nb = B.objects();
  res.equalizer_objects.assign(nb, -1);
  std::vector<int> e(nb, -1);
  for (int y = 0; y < nb; ++y) {
    const int ly = L.obj[y];
    const int rly = R.obj[ly];
    const int q = R.mor[L.mor[eta.comp[y]]];                      // RL(η_Y)
    const int jrly = J.obj[rly];
    const int inner = B.comp(U.mor[mu.comp[ly]], eta.comp[jrly]);  // U(μ_LY)∘η_{JRLY}
    const int r = A.comp(R.mor[L.mor[inner]], rho.comp[rly]);
    auto eq = equalizer(A, q, r);
    if (!eq) {
      if (res.missing_object < 0) res.missing_object = y;
      continue;
    }
    res.equalizer_objects[y] = eq->object;
    e[y] = eq->morphism;
  }
  if (res.missing_object >= 0) return res;

  Functor G{J.cod, J.dom, res.equalizer_objects, std::vector<int>(B.morphisms())};
  for (int m = 0; m < B.morphisms(); ++m) {
    const int y = B.src(m), y2 = B.dst(m);
    const int k = A.comp(R.mor[L.mor[m]], e[y]);
    G.mor[m] = factor_through(A, e[y2], G.obj[y], k);
    if (G.mor[m] < 0) throw PreconditionError("equalizing cone does not factor");
  }
  NatTransf counit{compose(J, G), identity_functor(J.cod), std::vector<int>(nb)};
  for (int y = 0; y < nb; ++y) {
    const int gy = G.obj[y];
    const int lmap = C.comp(mu.comp[L.obj[y]], E.mor[e[y]]);       // μ_LY∘E(e_Y)
    const int target = B.comp(U.mor[lmap], eta.comp[J.obj[gy]]);  // JGY → ULY
    counit.comp[y] = factor_through(B, eta.comp[y], J.obj[gy], target);
    if (counit.comp[y] < 0) throw PreconditionError("counit does not factor through the unit of L⊣U");
  }
  NatTransf unit{identity_functor(J.dom), compose(G, J), std::vector<int>(A.objects())};
  for (int a = 0; a < A.objects(); ++a) {
    const int ja = J.obj[a];
    unit.comp[a] = factor_through(A, e[ja], a, rho.comp[a]);
    if (unit.comp[a] < 0) throw PreconditionError("unit of E⊣R does not factor through the equalizer");
  }
  res.adjunction = Adjunction{J, std::move(G), std::move(unit), std::move(counit)};
  return res;
}

std::optional<Adjunction> right_adjoint_bruteforce(const Functor& j, const Limits& lim) {
  for (const auto& g : enumerate_functors(j.cod, j.dom, lim)) {
    const auto jg = compose(j, g);
    const auto gj = compose(g, j);
    const auto counits = enumerate_nats(jg, identity_functor(j.cod), false, lim);
    if (counits.empty()) continue;
    for (const auto& unit : enumerate_nats(identity_functor(j.dom), gj, false, lim)) {
      for (const auto& counit : counits) {
        Adjunction adj{j, g, unit, counit};
        if (validate_adjunction(adj).ok()) return adj;
      }
    }
  }
  return std::nullopt;
}

std::optional<NatTransf> natural_isomorphism(const Functor& f, const Functor& g, const Limits& lim) {
  auto found = enumerate_nats(f, g, true, lim);
  if (found.empty()) return std::nullopt;
  return found.front();
}

}  // namespace bitri
