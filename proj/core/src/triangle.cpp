#include "bitri/triangle.hpp"

#include <algorithm>

namespace bitri {

const char* tag_name(BiadjTag tag) { return tag == BiadjTag::StrictEM ? "strict-EM" : "pseudo-EM"; }

namespace {

NatTransf retarget(NatTransf a, const Functor& dst) {
  a.dst = dst;
  return a;
}

// A strict morphism between coalgebras: the identity cell T(f)∘rho_x = rho_z∘f.
PseudoMorphism strict_pm(const PseudoCoalgebra& x, const PseudoCoalgebra& z, const Functor& f) {
  const Functor src = compose(x.t->on_functor(f), x.rho);
  return PseudoMorphism{x, z, f, retarget(identity_nat(src), compose(z.rho, f))};
}

bool is_strict_morphism(const StrictCoalgebra& a, const StrictCoalgebra& b, const Functor& f) {
  return compose(a.t->on_functor(f), a.rho) == compose(b.rho, f);
}

bool is_t_transformation(const StrictCoalgebra& a, const StrictCoalgebra& b, const NatTransf& m) {
  const NatTransf lhs = whisker(a.t->on_nat(m), a.rho);
  const NatTransf rhs = whisker(b.rho, m);
  return lhs.comp == rhs.comp;
}

// Underlying cells shared by A_z and V_z.
struct ACells {
  Functor d0, d1, s0, p0, p1, p2;
  NatTransf sigma01, sigma02, sigma12, n0, n1;
};

ACells a_cells(const PseudoCoalgebra& z) {
  const TwoComonad& t = *z.t;
  const CatPtr Z = z.z;
  const CatPtr tz = t.on_cat(Z);
  ACells c;
  c.d1 = t.on_functor(z.rho);
  c.d0 = t.comult(Z);
  c.s0 = t.on_functor(t.counit(Z));
  c.p0 = t.comult(tz);
  c.p1 = t.on_functor(c.d0);
  c.p2 = t.on_functor(c.d1);
  c.sigma01 = *invert(t.lambda(Z));
  c.sigma02 = retarget(identity_nat(compose(c.p2, c.d0)), compose(c.p0, c.d1));
  c.sigma12 = t.on_nat(*invert(z.omega));
  c.n0 = *invert(t.delta(Z));
  c.n1 = t.on_nat(z.sigma);
  return c;
}

}  // namespace

Report validate_biadjunction(const Biadjunction& b, const std::vector<PseudoCoalgebra>& objects,
                             const std::vector<CatPtr>& base_objects) {
  Report r(std::string("biadjunction ") + tag_name(b.tag));
  const TwoComonad& t = *b.t;
  for (std::size_t i = 0; i < objects.size(); ++i) {
    const auto& y = objects[i];
    const Functor back = compose(t.counit(y.z), y.rho);
    if (b.tag == BiadjTag::StrictEM) {
      if (!is_strict(y) || !(back == identity_functor(y.z))) {
        r.fail("triangle", "ε∘E(η) ≠ id at object " + std::to_string(i), {static_cast<int>(i)});
      }
    } else if (!(y.sigma.dst == back) || !is_invertible(y.sigma)) {
      r.fail("triangle", "ε∘L(η) is not invertibly related to id at object " + std::to_string(i),
             {static_cast<int>(i)});
    }
  }
  for (std::size_t i = 0; i < base_objects.size(); ++i) {
    const CatPtr& z = base_objects[i];
    const Functor round = compose(t.on_functor(t.counit(z)), t.comult(z));
    if (!(t.delta(z).dst == round) || !is_invertible(t.delta(z))) {
      r.fail("triangle", "U(ε)∘η_U is not invertibly related to id at base object " + std::to_string(i),
             {static_cast<int>(i)});
    }
  }
  return r;
}

CoalgDiagram build_A(const PseudoCoalgebra& z) {
  const ComonadPtr& t = z.t;
  const CatPtr tz = t->on_cat(z.z);
  const CatPtr t2z = t->on_cat(tz);
  CoalgDiagram a{cofree_strict(t, z.z), cofree_strict(t, tz), cofree_strict(t, t2z), {}};
  ACells c = a_cells(z);
  a.base = DescentDiagram{tz,         t2z,        t->on_cat(t2z), c.d0,       c.d1,       c.s0,   c.p0,
                          c.p1,       c.p2,       c.sigma01,      c.sigma02,  c.sigma12,  c.n0,   c.n1};
  return a;
}

Report validate_coalg_diagram(const CoalgDiagram& a) {
  Report r("coalgebra diagram");
  r.absorb(validate_descent_diagram(a.base, Depth::Shallow), "underlying");
  if (!r.ok()) return r;
  const auto& b = a.base;
  auto morphism = [&r](const char* name, const StrictCoalgebra& x, const StrictCoalgebra& y, const Functor& f) {
    if (!is_strict_morphism(x, y, f)) r.fail("strict-morphism", std::string(name) + " is not a strict morphism");
  };
  morphism("d0", a.a1, a.a2, b.d0);
  morphism("d1", a.a1, a.a2, b.d1);
  morphism("s0", a.a2, a.a1, b.s0);
  morphism("p0", a.a2, a.a3, b.p0);
  morphism("p1", a.a2, a.a3, b.p1);
  morphism("p2", a.a2, a.a3, b.p2);
  auto cell = [&r](const char* name, const StrictCoalgebra& x, const StrictCoalgebra& y, const NatTransf& m) {
    if (!is_t_transformation(x, y, m)) r.fail("T-transformation", std::string(name) + " is not a T-transformation");
  };
  cell("sigma01", a.a1, a.a3, b.sigma01);
  cell("sigma02", a.a1, a.a3, b.sigma02);
  cell("sigma12", a.a1, a.a3, b.sigma12);
  cell("n0", a.a1, a.a1, b.n0);
  cell("n1", a.a1, a.a1, b.n1);
  return r;
}

namespace {

// Inverts a functor that is bijective on objects and morphisms.
std::optional<Functor> inverse_of_bijection(const Functor& c) {
  if (!is_isomorphism_functor(c)) return std::nullopt;
  Functor inv{c.cod, c.dom, std::vector<int>(c.cod->objects()), std::vector<int>(c.cod->morphisms())};
  for (std::size_t x = 0; x < c.obj.size(); ++x) inv.obj[c.obj[x]] = static_cast<int>(x);
  for (std::size_t m = 0; m < c.mor.size(); ++m) inv.mor[c.mor[m]] = static_cast<int>(m);
  return inv;
}

}  // namespace

CoherenceG coherence_G(const PseudoCoalgebra& z, const Limits& lim) {
  const TwoComonad& t = *z.t;
  const CoalgDiagram a = build_A(z);
  CoherenceG out;
  out.desc = strict_descent_object(a.base, lim);
  out.cone = out.desc.cone;

  const DescentCone mapped = map_cone(t, out.desc.cone);
  const DescentObject td = strict_descent_object(mapped.base, lim);
  std::optional<Functor> back;
  try {
    const Functor c = comparison(mapped, td);
    out.by_t.strict = is_isomorphism_functor(c);
    out.by_t.equivalence = out.by_t.strict || is_equivalence(c, false).holds;
    if (out.by_t.strict) back = inverse_of_bijection(c);
  } catch (const PreconditionError& e) {
    out.by_t.note = e.what();
  }
  out.by_t2 = preserves_descent(*compose_transports(z.t, z.t), a.base, lim);
  if (!out.by_t.strict || !out.by_t2.strict) {
    out.diagnostic = std::string("descent object not preserved by ") + (out.by_t.strict ? "T²" : "T");
    return out;
  }

  // The structure map is the unique one making the projection a strict
  // morphism into the cofree coalgebra: (f, ρ) ↦ (ϖ f, ϖ ρ) read through the
  // inverse comparison.
  const Functor w = t.comult(z.z);
  const Functor w_t = t.comult(t.on_cat(z.z));
  const auto& D = *out.desc.desc;
  Functor rho{out.desc.desc, back->cod, std::vector<int>(D.objects()), std::vector<int>(D.morphisms())};
  for (int i = 0; i < D.objects(); ++i) {
    const auto& x = out.desc.data[i];
    const int j = td.index_of(w.obj[x.f], w_t.mor[x.rho]);
    if (j < 0) {
      out.diagnostic = "structure map leaves the descent object";
      return out;
    }
    rho.obj[i] = back->obj[j];
  }
  for (int m = 0; m < D.morphisms(); ++m) {
    const int j = td.morphism(td.index_of(w.obj[out.desc.data[D.src(m)].f], w_t.mor[out.desc.data[D.src(m)].rho]),
                              td.index_of(w.obj[out.desc.data[D.dst(m)].f], w_t.mor[out.desc.data[D.dst(m)].rho]),
                              w.mor[out.desc.underlying[m]]);
    if (j < 0) {
      out.diagnostic = "structure map leaves the descent object";
      return out;
    }
    rho.mor[m] = back->mor[j];
  }
  StrictCoalgebra g{z.t, out.desc.desc, std::move(rho)};
  const Report r = validate_strict_coalgebra(g);
  if (!r.ok()) {
    out.diagnostic = "created structure is not a strict coalgebra: " + r.summary();
    return out;
  }
  out.g = std::move(g);
  return out;
}

PseudoMorphism counit(const PseudoCoalgebra& z, const CoherenceG& g) {
  if (!g.g) throw PreconditionError("counit needs Gz");
  const TwoComonad& t = *z.t;
  const Functor e = t.counit(z.z);
  const Functor e_t = t.counit(t.on_cat(z.z));
  const Functor f = compose(e, g.cone.d);
  const NatTransf back = *invert(whisker(e_t, g.cone.theta));
  const PseudoCoalgebra jg = inclusion_J(*g.g);
  NatTransf cell{compose(t.on_functor(f), jg.rho), compose(z.rho, f), back.comp};
  return PseudoMorphism{jg, z, f, std::move(cell)};
}

bool counit_is_equivalence(const PseudoCoalgebra& z, const CoherenceG& g, const Limits& lim) {
  if (!g.g) return false;
  const PseudoMorphism c = counit(z, g);
  if (!validate_pseudomorphism(c).ok()) return false;
  return is_internal_equivalence(c, false, lim).holds;
}

PseudoMorphism hom_equivalence_object(const PseudoCoalgebra& z, const CoherenceG& g, const PseudoMorphism& h) {
  return compose(counit(z, g), h);
}

Functor hom_equivalence(const PseudoCoalgebra& z, const CoherenceG& g, const CoalgHom& strict_hom,
                        const CoalgHom& pseudo_hom) {
  const PseudoMorphism c = counit(z, g);
  const auto& S = *strict_hom.cat;
  Functor phi{strict_hom.cat, pseudo_hom.cat, std::vector<int>(S.objects()), std::vector<int>(S.morphisms())};
  for (int i = 0; i < S.objects(); ++i) {
    const PseudoMorphism img = compose(c, strict_hom.morphism(i));
    phi.obj[i] = pseudo_hom.index_of(img.f, img.rho_f);
    if (phi.obj[i] < 0) throw PreconditionError("hom-equivalence leaves the pseudo hom");
  }
  for (int m = 0; m < S.morphisms(); ++m) {
    phi.mor[m] = pseudo_hom.find(phi.obj[S.src(m)], phi.obj[S.dst(m)], whisker(c.f, strict_hom.transformation(m)));
  }
  return phi;
}

bool underlying_comparison_is_equivalence(const PseudoCoalgebra&, const CoherenceG& g, const Limits&) {
  try {
    return is_equivalence(comparison(g.cone, g.desc), false).holds;
  } catch (const PreconditionError&) {
    return false;
  }
}

std::optional<CoherenceG> truncated(const PseudoCoalgebra& z, const CoherenceG& g) {
  if (!g.g) return std::nullopt;
  const TwoComonad& t = *z.t;
  const CatPtr c = g.g->z;
  const int n = c->objects();
  if (n < 2) return std::nullopt;
  std::vector<int> keep;
  for (int x = 0; x < n; ++x) {
    if (c->first_iso(x, n - 1) < 0) keep.push_back(x);
  }
  if (keep.empty()) return std::nullopt;
  const Subcategory sub = full_subcategory(c, keep);
  const Functor t_inc = t.on_functor(sub.inclusion);
  const CatPtr tsub = t_inc.dom;
  std::vector<int> obj_back(t_inc.cod->objects(), -1), mor_back(t_inc.cod->morphisms(), -1);
  for (std::size_t x = 0; x < t_inc.obj.size(); ++x) obj_back[t_inc.obj[x]] = static_cast<int>(x);
  for (std::size_t m = 0; m < t_inc.mor.size(); ++m) mor_back[t_inc.mor[m]] = static_cast<int>(m);
  const Functor along = compose(g.g->rho, sub.inclusion);
  Functor rho{sub.cat, tsub, std::vector<int>(sub.cat->objects()), std::vector<int>(sub.cat->morphisms())};
  for (std::size_t x = 0; x < rho.obj.size(); ++x) {
    rho.obj[x] = obj_back[along.obj[x]];
    if (rho.obj[x] < 0) return std::nullopt;
  }
  for (std::size_t m = 0; m < rho.mor.size(); ++m) {
    rho.mor[m] = mor_back[along.mor[m]];
    if (rho.mor[m] < 0) return std::nullopt;
  }
  CoherenceG out = g;
  out.g = StrictCoalgebra{z.t, sub.cat, std::move(rho)};
  if (!validate_strict_coalgebra(*out.g).ok()) return std::nullopt;
  out.cone = DescentCone{g.cone.base, sub.cat, compose(g.cone.d, sub.inclusion), whisker(g.cone.theta, sub.inclusion)};
  out.diagnostic = "isomorphism class of object " + std::to_string(n - 1) + " removed";
  return out;
}

PseudoMorphism unit(const StrictCoalgebra& a, const CoherenceG& gja) {
  if (!gja.g) throw PreconditionError("unit needs G(J a)");
  const TwoComonad& t = *a.t;
  const Functor t_rho = t.on_functor(a.rho);
  const CatPtr t2 = t_rho.cod;
  const auto& A = *a.z;
  Functor u{a.z, gja.g->z, std::vector<int>(A.objects()), std::vector<int>(A.morphisms())};
  for (int x = 0; x < A.objects(); ++x) {
    const int f = a.rho.obj[x];
    u.obj[x] = gja.desc.index_of(f, t2->id(t_rho.obj[f]));
    if (u.obj[x] < 0) throw PreconditionError("rho_a(x) with the identity is not a descent datum");
  }
  for (int m = 0; m < A.morphisms(); ++m) {
    u.mor[m] = gja.desc.morphism(u.obj[A.src(m)], u.obj[A.dst(m)], a.rho.mor[m]);
  }
  return strict_pm(inclusion_J(a), inclusion_J(*gja.g), u);
}

bool unit_is_equivalence(const StrictCoalgebra& a, const CoherenceG& gja, const Limits& lim) {
  if (!gja.g) return false;
  const PseudoMorphism u = unit(a, gja);
  if (!(u.rho_f.src == u.rho_f.dst)) return false;  // not a strict morphism
  return is_internal_equivalence(u, true, lim).holds;
}

DescentCone CoalgCone::underlying() const {
  return DescentCone{DescentDiagram{a1.z, a2.z, a3.z, d0.f, d1.f, s0.f, p0.f, p1.f, p2.f, sigma01, sigma02,
                                    sigma12, n0, n1},
                     apex.z, d.f, theta};
}

CoalgCone build_V(const PseudoCoalgebra& y, const Biadjunction& b) {
  if (b.tag == BiadjTag::StrictEM && !is_strict(y)) throw PreconditionError("strict-EM cone needs a strict coalgebra");
  const ComonadPtr& t = b.t;
  const CatPtr tz = t->on_cat(y.z);
  const CatPtr t2z = t->on_cat(tz);
  CoalgCone k;
  k.tag = b.tag;
  k.apex = y;
  k.a1 = inclusion_J(cofree_strict(t, y.z));
  k.a2 = inclusion_J(cofree_strict(t, tz));
  k.a3 = inclusion_J(cofree_strict(t, t2z));
  const ACells c = a_cells(y);
  k.d0 = strict_pm(k.a1, k.a2, c.d0);
  k.d1 = strict_pm(k.a1, k.a2, c.d1);
  k.s0 = strict_pm(k.a2, k.a1, c.s0);
  k.p0 = strict_pm(k.a2, k.a3, c.p0);
  k.p1 = strict_pm(k.a2, k.a3, c.p1);
  k.p2 = strict_pm(k.a2, k.a3, c.p2);
  if (b.tag == BiadjTag::StrictEM) {
    k.d = strict_pm(y, k.a1, y.rho);
    k.theta = retarget(identity_nat(compose(c.d1, y.rho)), compose(c.d0, y.rho));
  } else {
    k.d = unit_eta(y);
    k.d.dst = k.a1;
    k.theta = *invert(y.omega);
  }
  k.sigma01 = c.sigma01;
  k.sigma02 = c.sigma02;
  k.sigma12 = c.sigma12;
  k.n0 = c.n0;
  k.n1 = c.n1;
  return k;
}

Report validate_coalg_cone(const CoalgCone& k) {
  Report r(std::string("coalgebra cone ") + tag_name(k.tag));
  r.absorb(validate_descent_cone(k.underlying(), Depth::Shallow), "underlying");
  if (!r.ok()) return r;
  const std::pair<const char*, const PseudoMorphism*> ms[] = {{"d", &k.d},   {"d0", &k.d0}, {"d1", &k.d1},
                                                               {"s0", &k.s0}, {"p0", &k.p0}, {"p1", &k.p1},
                                                               {"p2", &k.p2}};
  for (const auto& [name, m] : ms) {
    r.absorb(validate_pseudomorphism(*m), name);
    if (k.tag == BiadjTag::StrictEM && !is_strict(*m)) r.fail("strictness", std::string(name) + " is not strict");
  }
  if (!r.ok()) return r;
  auto cell = [&r](const char* name, const PseudoMorphism& s, const PseudoMorphism& d, const NatTransf& m) {
    r.absorb(validate_ttransformation(TTransformation{s, d, m}), name);
  };
  cell("theta", compose(k.d1, k.d), compose(k.d0, k.d), k.theta);
  cell("sigma01", compose(k.p1, k.d0), compose(k.p0, k.d0), k.sigma01);
  cell("sigma02", compose(k.p2, k.d0), compose(k.p0, k.d1), k.sigma02);
  cell("sigma12", compose(k.p2, k.d1), compose(k.p1, k.d1), k.sigma12);
  cell("n0", compose(k.s0, k.d0), identity_morphism(k.a1), k.n0);
  cell("n1", identity_morphism(k.a1), compose(k.s0, k.d1), k.n1);
  return r;
}

namespace {

Functor postcompose(const PseudoMorphism& g, const CoalgHom& src, const CoalgHom& dst) {
  const auto& S = *src.cat;
  Functor p{src.cat, dst.cat, std::vector<int>(S.objects()), std::vector<int>(S.morphisms())};
  for (int i = 0; i < S.objects(); ++i) {
    const PseudoMorphism img = compose(g, src.morphism(i));
    p.obj[i] = dst.index_of(img.f, img.rho_f);
    if (p.obj[i] < 0) throw PreconditionError("postcomposition leaves the hom-category");
  }
  for (int m = 0; m < S.morphisms(); ++m) {
    p.mor[m] = dst.find(p.obj[S.src(m)], p.obj[S.dst(m)], whisker(g.f, src.transformation(m)));
  }
  return p;
}

NatTransf postcompose_cell(const NatTransf& alpha, const Functor& s, const Functor& d, const CoalgHom& src,
                           const CoalgHom& dst) {
  NatTransf r{s, d, std::vector<int>(src.cat->objects())};
  for (int i = 0; i < src.cat->objects(); ++i) {
    r.comp[i] = dst.find(s.obj[i], d.obj[i], whisker(alpha, src.f[i]));
    if (r.comp[i] < 0) throw PreconditionError("whiskered cell is not a T-transformation");
  }
  return r;
}

}  // namespace

DescentCone hom_cone(const PseudoCoalgebra& x, const CoalgCone& k, const Limits& lim) {
  const HomOptions opt{k.tag == BiadjTag::StrictEM, false};
  const CoalgHom h0 = hom_category_direct(x, k.apex, opt, lim);
  const CoalgHom h1 = hom_category_direct(x, k.a1, opt, lim);
  const CoalgHom h2 = hom_category_direct(x, k.a2, opt, lim);
  const CoalgHom h3 = hom_category_direct(x, k.a3, opt, lim);
  DescentCone c;
  auto& a = c.base;
  a.a1 = h1.cat;
  a.a2 = h2.cat;
  a.a3 = h3.cat;
  a.d0 = postcompose(k.d0, h1, h2);
  a.d1 = postcompose(k.d1, h1, h2);
  a.s0 = postcompose(k.s0, h2, h1);
  a.p0 = postcompose(k.p0, h2, h3);
  a.p1 = postcompose(k.p1, h2, h3);
  a.p2 = postcompose(k.p2, h2, h3);
  a.sigma01 = postcompose_cell(k.sigma01, compose(a.p1, a.d0), compose(a.p0, a.d0), h1, h3);
  a.sigma02 = postcompose_cell(k.sigma02, compose(a.p2, a.d0), compose(a.p0, a.d1), h1, h3);
  a.sigma12 = postcompose_cell(k.sigma12, compose(a.p2, a.d1), compose(a.p1, a.d1), h1, h3);
  a.n0 = postcompose_cell(k.n0, compose(a.s0, a.d0), identity_functor(h1.cat), h1, h1);
  a.n1 = postcompose_cell(k.n1, identity_functor(h1.cat), compose(a.s0, a.d1), h1, h1);
  c.a0 = h0.cat;
  c.d = postcompose(k.d, h0, h1);
  c.theta = postcompose_cell(k.theta, compose(a.d1, c.d), compose(a.d0, c.d), h0, h2);
  return c;
}

ConeProbe coalg_effective_descent(const CoalgCone& k, const std::vector<PseudoCoalgebra>& probes, const Limits& lim) {
  ConeProbe out;
  for (std::size_t i = 0; i < probes.size(); ++i) {
    bool effective = false, strict = false;
    try {
      const DescentCone c = hom_cone(probes[i], k, lim);
      const DescentObject desc = strict_descent_object(c.base, lim);
      const Functor cmp = comparison(c, desc);
      strict = is_isomorphism_functor(cmp);
      effective = strict || is_equivalence(cmp, false).holds;
    } catch (const PreconditionError& e) {
      out.note = e.what();
    }
    out.strict = out.strict && strict;
    if (!effective && out.effective) {
      out.effective = false;
      out.failing_probe = static_cast<int>(i);
    }
  }
  return out;
}

DCone build_D(const PseudoCoalgebra& x, const PseudoCoalgebra& y, const Biadjunction& b, const Limits& lim) {
  const bool strict = b.tag == BiadjTag::StrictEM;
  DCone out{{}, t_diagram(x, y, lim), hom_category_direct(x, y, HomOptions{strict, false}, lim), {}};
  const auto& H = *out.apex_hom.cat;
  const auto& a = out.base.diagram;
  Functor d{out.apex_hom.cat, a.a1, std::vector<int>(H.objects()), std::vector<int>(H.morphisms())};
  std::vector<int> theta(H.objects());
  for (int i = 0; i < H.objects(); ++i) {
    d.obj[i] = out.base.a1->index_of(out.apex_hom.f[i]);
    theta[i] = out.base.a2->index_of(*invert(out.apex_hom.cell[i]));
  }
  for (int m = 0; m < H.morphisms(); ++m) {
    d.mor[m] = out.base.a1->find_nat(d.obj[H.src(m)], d.obj[H.dst(m)], out.apex_hom.tuples.tuple(m));
  }
  NatTransf th{compose(a.d1, d), compose(a.d0, d), std::move(theta)};
  out.cone = DescentCone{a, out.apex_hom.cat, std::move(d), std::move(th)};
  if (strict) {
    out.k = comparison_K(out.apex_hom, hom_category_direct(x, y, HomOptions{}, lim));
  } else {
    out.k = identity_functor(out.apex_hom.cat);
  }
  return out;
}

ProbeReport lemma_absolute_LV(const PseudoCoalgebra& y, const Biadjunction& b, const std::vector<std::string>& probes,
                              const Limits& lim) {
  return absolute_probe(build_V(y, b).underlying(), probes_by_names(probes), lim);
}

Report pseudocomonadicity_probe(const Biadjunction& b, const std::vector<PseudoCoalgebra>& corpus,
                                const std::vector<std::string>& probes, const Limits& lim) {
  Report r(std::string("pseudocomonadicity ") + tag_name(b.tag));
  std::vector<PseudoCoalgebra> objects;
  for (const auto& y : corpus) {
    if (b.tag == BiadjTag::PseudoEM || is_strict(y)) objects.push_back(y);
  }
  for (std::size_t i = 0; i < objects.size(); ++i) {
    const auto& y = objects[i];
    const int w = static_cast<int>(i);
    const CoalgCone v = build_V(y, b);
    const bool downstairs = absolute_probe(v.underlying(), probes_by_names(probes), lim).all_effective();
    if (downstairs) {
      std::vector<PseudoCoalgebra> probe_objects = objects;
      const ConeProbe up = coalg_effective_descent(v, probe_objects, lim);
      if (!up.effective) r.fail("reflection", "image is absolute effective but the cone is not", {w});
    }
    // Creation: the diagram A_y upstairs has an image extending to the
    // absolute cone below; the lifted cone must exist and map onto it.
    const CoalgDiagram a = build_A(y);
    const DescentCone lifted = v.underlying();
    if (!validate_coalg_cone(v).ok()) {
      r.fail("creation", "lifted cone is not a cone of coalgebras", {w});
    } else if (!(lifted.base.d0 == a.base.d0) || !(lifted.base.d1 == a.base.d1) || !(lifted.base.s0 == a.base.s0) ||
               !(lifted.base.p0 == a.base.p0) || !(lifted.base.p1 == a.base.p1) || !(lifted.base.p2 == a.base.p2) ||
               !(lifted.base.sigma12 == a.base.sigma12) || !(lifted.base.n1 == a.base.n1)) {
      r.fail("creation", "lifted cone does not lie over the given diagram", {w});
    }
  }
  return r;
}

}  // namespace bitri
