#include "bitri/coalg.hpp"

#include <algorithm>
#include <unordered_map>

#include "bitri/parallel.hpp"

namespace bitri {

namespace {

bool all_identities(const NatTransf& a) {
  const auto& D = *a.src.cod;
  for (std::size_t x = 0; x < a.comp.size(); ++x) {
    if (!D.is_identity(a.comp[x])) return false;
  }
  return true;
}

void check_cell(Report& r, const char* name, const NatTransf& a, const Functor& src, const Functor& dst) {
  if (!(a.src == src) || !(a.dst == dst)) {
    r.fail("typing", std::string(name) + " does not have the required source and target");
    return;
  }
  const Report nat = validate_nattransf(a);
  if (!nat.ok()) {
    r.absorb(nat, name);
    return;
  }
  if (!is_invertible(a)) r.fail("invertibility", std::string(name) + " is not invertible");
}

// Precomputed structure of the codomain side of a hom x → z, so that each
// candidate pseudomorphism costs one application of T to its cell.
class MorphismCheck {
 public:
  MorphismCheck(const PseudoCoalgebra& x, const PseudoCoalgebra& z)
      : x_(x), z_(z), t_(*z.t),
        tz_(t_.on_cat(z.z)), t2z_(t_.on_cat(tz_)),
        w_z_(t_.comult(z.z)), e_z_(t_.counit(z.z)), t_rho_z_(t_.on_functor(z.rho)) {}

  // Both pseudomorphism equations at every object of X.
  bool morphism_ok(const Functor& f, const Functor& t2f, const NatTransf& cell, std::string* why) const {
    const NatTransf tcell = t_.on_nat(cell);
    const auto& Z = *z_.z;
    const auto& T2 = *t2z_;
    for (int a = 0; a < x_.z->objects(); ++a) {
      const int c = cell.comp[a];
      const int lhs = T2.comp(z_.omega.comp[f.obj[a]], w_z_.mor[c]);
      const int rhs = T2.comp(t_rho_z_.mor[c], T2.comp(tcell.comp[x_.rho.obj[a]], t2f.mor[x_.omega.comp[a]]));
      if (lhs != rhs) {
        if (why) *why = "omega-compatibility";
        return false;
      }
      if (Z.comp(e_z_.mor[c], f.mor[x_.sigma.comp[a]]) != z_.sigma.comp[f.obj[a]]) {
        if (why) *why = "counit-compatibility";
        return false;
      }
    }
    return true;
  }

  bool transformation_ok(const NatTransf& cell_f, const NatTransf& cell_h, const NatTransf& m) const {
    const NatTransf tm = t_.on_nat(m);
    const auto& TZ = *tz_;
    for (int a = 0; a < x_.z->objects(); ++a) {
      if (TZ.comp(cell_h.comp[a], tm.comp[x_.rho.obj[a]]) != TZ.comp(z_.rho.mor[m.comp[a]], cell_f.comp[a])) {
        return false;
      }
    }
    return true;
  }

 private:
  const PseudoCoalgebra& x_;
  const PseudoCoalgebra& z_;
  const TwoComonad& t_;
  CatPtr tz_, t2z_;
  Functor w_z_, e_z_, t_rho_z_;
};

std::string hom_key(const Functor& f, const NatTransf& cell) {
  std::string k = functor_key(f);
  for (int v : cell.comp) k.append(reinterpret_cast<const char*>(&v), sizeof v);
  return k;
}

}  // namespace

Report validate_pseudocoalgebra(const PseudoCoalgebra& z) {
  Report r("pseudocoalgebra");
  if (!z.t || !z.z) {
    r.fail("typing", "missing comonad or carrier");
    return r;
  }
  const TwoComonad& t = *z.t;
  const CatPtr tz = t.on_cat(z.z);
  if (!same_category(z.rho.dom, z.z) || !same_category(z.rho.cod, tz)) {
    r.fail("typing", "rho does not run Z → TZ");
    return r;
  }
  r.absorb(validate_functor(z.rho), "rho");
  if (!r.ok()) return r;
  const Functor e = t.counit(z.z);
  const Functor w = t.comult(z.z);
  const Functor t_rho = t.on_functor(z.rho);
  check_cell(r, "sigma", z.sigma, identity_functor(z.z), compose(e, z.rho));
  check_cell(r, "omega", z.omega, compose(w, z.rho), compose(t_rho, z.rho));
  if (!r.ok()) return r;

  const CatPtr t2z = t.on_cat(tz);
  const CatPtr t3z = t.on_cat(t2z);
  const auto& T3 = *t3z;
  const auto& T1 = *tz;
  const NatTransf t_omega = t.on_nat(z.omega);
  const NatTransf t_sigma = t.on_nat(z.sigma);
  const NatTransf lam = t.lambda(z.z);
  const NatTransf del = t.delta(z.z);
  const Functor t_w = t.on_functor(w);
  const Functor tt_rho = t.on_functor(t_rho);
  const Functor w_t = t.comult(tz);
  const Functor t_e = t.on_functor(e);
  for (int a = 0; a < z.z->objects(); ++a) {
    const int y = z.rho.obj[a];
    const int om = z.omega.comp[a];
    const int lhs = T3.comp(t_omega.comp[y], T3.comp(t_w.mor[om], lam.comp[y]));
    const int rhs = T3.comp(tt_rho.mor[om], w_t.mor[om]);
    if (lhs != rhs) r.fail("associativity", "omega does not paste with Lambda at object " + std::to_string(a), {a});
    if (T1.comp(t_e.mor[om], del.comp[y]) != t_sigma.comp[y]) {
      r.fail("identity", "omega and sigma do not paste with delta at object " + std::to_string(a), {a});
    }
  }
  return r;
}

Report validate_strict_coalgebra(const StrictCoalgebra& a) {
  Report r("strict coalgebra");
  const TwoComonad& t = *a.t;
  const CatPtr tz = t.on_cat(a.z);
  if (!same_category(a.rho.dom, a.z) || !same_category(a.rho.cod, tz)) {
    r.fail("typing", "rho does not run Z → TZ");
    return r;
  }
  r.absorb(validate_functor(a.rho), "rho");
  if (!r.ok()) return r;
  if (!(compose(t.counit(a.z), a.rho) == identity_functor(a.z))) r.fail("counit", "ε∘rho ≠ Id");
  if (!(compose(t.comult(a.z), a.rho) == compose(t.on_functor(a.rho), a.rho))) {
    r.fail("coassociativity", "ϖ∘rho ≠ T(rho)∘rho");
  }
  return r;
}

Report validate_pseudomorphism(const PseudoMorphism& f) {
  Report r("pseudomorphism");
  const TwoComonad& t = *f.dst.t;
  if (!same_category(f.f.dom, f.src.z) || !same_category(f.f.cod, f.dst.z)) {
    r.fail("typing", "underlying functor has the wrong endpoints");
    return r;
  }
  r.absorb(validate_functor(f.f), "f");
  if (!r.ok()) return r;
  const Functor tf = t.on_functor(f.f);
  check_cell(r, "rho_f", f.rho_f, compose(tf, f.src.rho), compose(f.dst.rho, f.f));
  if (!r.ok()) return r;
  std::string why;
  if (!MorphismCheck(f.src, f.dst).morphism_ok(f.f, t.on_functor(tf), f.rho_f, &why)) {
    r.fail(why, "pseudomorphism equation fails");
  }
  return r;
}

Report validate_ttransformation(const TTransformation& m) {
  Report r("T-transformation");
  if (!(m.m.src == m.src.f) || !(m.m.dst == m.dst.f)) {
    r.fail("typing", "2-cell does not run between the underlying functors");
    return r;
  }
  r.absorb(validate_nattransf(m.m), "m");
  if (!r.ok()) return r;
  if (!MorphismCheck(m.src.src, m.src.dst).transformation_ok(m.src.rho_f, m.dst.rho_f, m.m)) {
    r.fail("compatibility", "rho_h∘(T(m)∗rho_x) ≠ (rho_z∗m)∘rho_f");
  }
  return r;
}

bool is_strict(const PseudoCoalgebra& z) { return all_identities(z.sigma) && all_identities(z.omega); }
bool is_strict(const PseudoMorphism& f) { return all_identities(f.rho_f); }

PseudoCoalgebra cofree(const ComonadPtr& t, const CatPtr& z) {
  const Functor w = t->comult(z);
  return PseudoCoalgebra{t, t->on_cat(z), w, *invert(t->s(z)), t->lambda(z)};
}

StrictCoalgebra cofree_strict(const ComonadPtr& t, const CatPtr& z) {
  return StrictCoalgebra{t, t->on_cat(z), t->comult(z)};
}

PseudoCoalgebra inclusion_J(const StrictCoalgebra& a) {
  const TwoComonad& t = *a.t;
  return PseudoCoalgebra{a.t, a.z, a.rho, identity_nat(identity_functor(a.z)),
                         identity_nat(compose(t.comult(a.z), a.rho))};
}

std::optional<StrictCoalgebra> as_strict(const PseudoCoalgebra& z) {
  if (!is_strict(z)) return std::nullopt;
  return StrictCoalgebra{z.t, z.z, z.rho};
}

CatPtr forgetful_L(const PseudoCoalgebra& z) { return z.z; }

PseudoMorphism unit_eta(const PseudoCoalgebra& z) {
  return PseudoMorphism{z, cofree(z.t, z.z), z.rho, *invert(z.omega)};
}

PseudoMorphism identity_morphism(const PseudoCoalgebra& x) {
  return PseudoMorphism{x, x, identity_functor(x.z), identity_nat(x.rho)};
}

PseudoMorphism compose(const PseudoMorphism& g, const PseudoMorphism& f) {
  const TwoComonad& t = *g.dst.t;
  NatTransf cell = vcompose(whisker(g.rho_f, f.f), whisker(t.on_functor(g.f), f.rho_f));
  return PseudoMorphism{f.src, g.dst, compose(g.f, f.f), std::move(cell)};
}

PseudoMorphism CoalgHom::morphism(int i) const { return PseudoMorphism{x, z, f[i], cell[i]}; }

NatTransf CoalgHom::transformation(int m) const {
  auto t = tuples.tuple(m);
  return NatTransf{f[cat->src(m)], f[cat->dst(m)], std::vector<int>(t.begin(), t.end())};
}

int CoalgHom::index_of(const Functor& g, const NatTransf& c) const {
  auto it = index.find(hom_key(g, c));
  return it == index.end() ? -1 : it->second;
}

int CoalgHom::find(int src, int dst, const NatTransf& m) const { return tuples.find(src, dst, m.comp); }

CoalgHom hom_category_direct(const PseudoCoalgebra& x, const PseudoCoalgebra& z, HomOptions opt, const Limits& lim) {
  const TwoComonad& t = *z.t;
  CoalgHom hom{x, z, opt.strict, {}, {}, nullptr, TupleCategory(std::vector<CatPtr>(x.z->objects(), z.z)), {}};
  const std::vector<Functor> fs = enumerate_functors(x.z, z.z, lim);
  const MorphismCheck check(x, z);

  std::vector<std::vector<NatTransf>> cells(fs.size());
  parallel_for(fs.size(), [&](std::size_t i) {
    const Functor& f = fs[i];
    const Functor tf = t.on_functor(f);
    const Functor src = compose(tf, x.rho);
    const Functor dst = compose(z.rho, f);
    const Functor t2f = t.on_functor(tf);
    if (opt.strict) {
      if (!(src.obj == dst.obj && src.mor == dst.mor)) return;
      NatTransf id = identity_nat(src);
      id.dst = dst;
      if (check.morphism_ok(f, t2f, id, nullptr)) cells[i].push_back(std::move(id));
      return;
    }
    for (auto& c : enumerate_nats(src, dst, true, lim)) {
      if (check.morphism_ok(f, t2f, c, nullptr)) cells[i].push_back(std::move(c));
    }
  });
  for (std::size_t i = 0; i < fs.size(); ++i) {
    for (auto& c : cells[i]) {
      hom.index.emplace(hom_key(fs[i], c), static_cast<int>(hom.f.size()));
      hom.f.push_back(fs[i]);
      hom.cell.push_back(std::move(c));
    }
  }
  charge(hom.f.size(), lim, "coalgebra morphisms");

  const int n = static_cast<int>(hom.f.size());
  for (int i = 0; i < n; ++i) {
    std::vector<int> ids(x.z->objects());
    for (int a = 0; a < x.z->objects(); ++a) ids[a] = z.z->id(hom.f[i].obj[a]);
    hom.tuples.add_object(ids);
  }
  if (!opt.objects_only) {
    std::vector<std::vector<std::pair<int, std::vector<int>>>> rows(n);
    parallel_for(static_cast<std::size_t>(n), [&](std::size_t i) {
      for (int j = 0; j < n; ++j) {
        for (auto& m : enumerate_nats(hom.f[i], hom.f[j], false, lim)) {
          if (check.transformation_ok(hom.cell[i], hom.cell[j], m)) rows[i].emplace_back(j, std::move(m.comp));
        }
      }
    });
    std::size_t count = 0;
    for (int i = 0; i < n; ++i) {
      count += rows[i].size();
      charge(count, lim, "T-transformations");
      for (const auto& [j, comps] : rows[i]) hom.tuples.add_morphism(i, j, comps);
    }
  }
  hom.cat = hom.tuples.build();
  return hom;
}

CoalgHom hom_category_strict(const StrictCoalgebra& a, const StrictCoalgebra& b, const Limits& lim) {
  return hom_category_direct(inclusion_J(a), inclusion_J(b), HomOptions{true, false}, lim);
}

namespace {

using FC = std::shared_ptr<const FunctorCategory>;

template <class ObjFn, class MorFn>
Functor induced(const FC& src, const FC& dst, ObjFn on_obj, MorFn on_mor) {
  const auto& S = *src->cat();
  Functor r{src->cat(), dst->cat(), std::vector<int>(src->size()), std::vector<int>(S.morphisms())};
  for (int i = 0; i < src->size(); ++i) {
    r.obj[i] = dst->index_of(on_obj(src->functor(i)));
    if (r.obj[i] < 0) throw PreconditionError("induced functor leaves the functor category");
  }
  for (int m = 0; m < S.morphisms(); ++m) {
    const NatTransf img = on_mor(src->nat(m));
    r.mor[m] = dst->find_nat(r.obj[S.src(m)], r.obj[S.dst(m)], img.comp);
  }
  return r;
}

Functor postcompose(const FC& src, const FC& dst, const Functor& h) {
  return induced(src, dst, [&h](const Functor& g) { return compose(h, g); },
                 [&h](const NatTransf& a) { return whisker(h, a); });
}

// Cell whose component at functor i of src has the given components.
template <class CompFn>
NatTransf pointwise_cell(const Functor& s, const Functor& d, const FC& src, const FC& dst, CompFn comps) {
  NatTransf r{s, d, std::vector<int>(src->size())};
  for (int i = 0; i < src->size(); ++i) {
    r.comp[i] = dst->find_nat(s.obj[i], d.obj[i], comps(src->functor(i)));
    if (r.comp[i] < 0) throw PreconditionError("cell component is not a natural transformation");
  }
  return r;
}

}  // namespace

TDiagram t_diagram(const PseudoCoalgebra& x, const PseudoCoalgebra& z, const Limits& lim) {
  const TwoComonad& t = *z.t;
  const CatPtr X = x.z;
  const CatPtr Z = z.z;
  const CatPtr tz = t.on_cat(Z);
  const CatPtr t2z = t.on_cat(tz);
  TDiagram out;
  out.a1 = FunctorCategory::get(X, Z, lim);
  out.a2 = FunctorCategory::get(X, tz, lim);
  out.a3 = FunctorCategory::get(X, t2z, lim);
  auto& a = out.diagram;
  a.a1 = out.a1->cat();
  a.a2 = out.a2->cat();
  a.a3 = out.a3->cat();

  const Functor w_z = t.comult(Z);
  const Functor e_z = t.counit(Z);
  const Functor t_rho_z = t.on_functor(z.rho);
  a.d1 = postcompose(out.a1, out.a2, z.rho);
  a.d0 = induced(out.a1, out.a2, [&](const Functor& f) { return compose(t.on_functor(f), x.rho); },
                 [&](const NatTransf& m) { return whisker(t.on_nat(m), x.rho); });
  a.s0 = postcompose(out.a2, out.a1, e_z);
  a.p0 = induced(out.a2, out.a3, [&](const Functor& g) { return compose(t.on_functor(g), x.rho); },
                 [&](const NatTransf& m) { return whisker(t.on_nat(m), x.rho); });
  a.p1 = postcompose(out.a2, out.a3, w_z);
  a.p2 = postcompose(out.a2, out.a3, t_rho_z);

  const int nx = X->objects();
  a.sigma01 = pointwise_cell(compose(a.p1, a.d0), compose(a.p0, a.d0), out.a1, out.a3, [&](const Functor& f) {
    const Functor t2f = t.on_functor(t.on_functor(f));
    std::vector<int> c(nx);
    for (int i = 0; i < nx; ++i) c[i] = t2f.mor[x.omega.comp[i]];
    return c;
  });
  a.sigma02 = identity_nat(compose(a.p2, a.d0));
  a.sigma02.dst = compose(a.p0, a.d1);
  a.sigma12 = pointwise_cell(compose(a.p2, a.d1), compose(a.p1, a.d1), out.a1, out.a3, [&](const Functor& f) {
    std::vector<int> c(nx);
    for (int i = 0; i < nx; ++i) c[i] = t2z->inverse(z.omega.comp[f.obj[i]]);
    return c;
  });
  a.n0 = pointwise_cell(compose(a.s0, a.d0), identity_functor(a.a1), out.a1, out.a1, [&](const Functor& f) {
    std::vector<int> c(nx);
    for (int i = 0; i < nx; ++i) c[i] = f.mor[X->inverse(x.sigma.comp[i])];
    return c;
  });
  a.n1 = pointwise_cell(identity_functor(a.a1), compose(a.s0, a.d1), out.a1, out.a1, [&](const Functor& f) {
    std::vector<int> c(nx);
    for (int i = 0; i < nx; ++i) c[i] = z.sigma.comp[f.obj[i]];
    return c;
  });
  return out;
}

DescentObject hom_via_descent(const PseudoCoalgebra& x, const PseudoCoalgebra& z, const Limits& lim) {
  return strict_descent_object(t_diagram(x, z, lim).diagram, lim);
}

Functor assignment(const CoalgHom& direct, const TDiagram& t, const DescentObject& desc) {
  const auto& H = *direct.cat;
  Functor r{direct.cat, desc.desc, std::vector<int>(H.objects()), std::vector<int>(H.morphisms())};
  std::vector<int> f_index(H.objects());
  for (int i = 0; i < H.objects(); ++i) {
    f_index[i] = t.a1->index_of(direct.f[i]);
    const int rho = t.a2->index_of(*invert(direct.cell[i]));
    r.obj[i] = f_index[i] < 0 || rho < 0 ? -1 : desc.index_of(f_index[i], rho);
    if (r.obj[i] < 0) throw PreconditionError("pseudomorphism " + std::to_string(i) + " has no descent datum");
  }
  for (int m = 0; m < H.morphisms(); ++m) {
    const int a = t.a1->find_nat(f_index[H.src(m)], f_index[H.dst(m)], direct.tuples.tuple(m));
    r.mor[m] = a < 0 ? -1 : desc.morphism(r.obj[H.src(m)], r.obj[H.dst(m)], a);
    if (r.mor[m] < 0) throw PreconditionError("T-transformation " + std::to_string(m) + " has no descent morphism");
  }
  return r;
}

Functor comparison_K(const CoalgHom& strict_hom, const CoalgHom& pseudo_hom) {
  const auto& S = *strict_hom.cat;
  Functor k{strict_hom.cat, pseudo_hom.cat, std::vector<int>(S.objects()), std::vector<int>(S.morphisms())};
  for (int i = 0; i < S.objects(); ++i) {
    k.obj[i] = pseudo_hom.index_of(strict_hom.f[i], strict_hom.cell[i]);
    if (k.obj[i] < 0) throw PreconditionError("strict morphism missing from the pseudo hom");
  }
  for (int m = 0; m < S.morphisms(); ++m) {
    k.mor[m] = pseudo_hom.find(k.obj[S.src(m)], k.obj[S.dst(m)], strict_hom.transformation(m));
  }
  return k;
}

PseudoCoalgebra comparison_K(const StrictCoalgebra& y) { return inclusion_J(y); }

namespace {

// An invertible T-transformation a ⇒ b exists (a, b parallel pseudomorphisms).
bool iso_2cell(const PseudoMorphism& a, const PseudoMorphism& b, const Limits& lim) {
  const MorphismCheck check(a.src, a.dst);
  for (const auto& m : enumerate_nats(a.f, b.f, true, lim)) {
    if (check.transformation_ok(a.rho_f, b.rho_f, m)) return true;
  }
  return false;
}

}  // namespace

InternalEquivalence is_internal_equivalence(const PseudoMorphism& f, bool strict, const Limits& lim) {
  InternalEquivalence out;
  if (strict && (!is_strict(f) || !is_strict(f.src) || !is_strict(f.dst))) return out;
  if (!is_equivalence(f.f, false).holds) return out;
  const CoalgHom back = hom_category_direct(f.dst, f.src, HomOptions{strict, true}, lim);
  const PseudoMorphism id_x = identity_morphism(f.src);
  const PseudoMorphism id_z = identity_morphism(f.dst);
  for (std::size_t i = 0; i < back.f.size(); ++i) {
    const PseudoMorphism g = back.morphism(static_cast<int>(i));
    if (iso_2cell(compose(g, f), id_x, lim) && iso_2cell(compose(f, g), id_z, lim)) {
      out.holds = true;
      out.inverse = g;
      return out;
    }
  }
  return out;
}

std::vector<PseudoCoalgebra> enumerate_pseudocoalgebras(const ComonadPtr& t, const CatPtr& z, const Limits& lim) {
  const CatPtr tz = t->on_cat(z);
  const Functor e = t->counit(z);
  const Functor w = t->comult(z);
  const std::vector<Functor> rhos = enumerate_functors(z, tz, lim);
  std::vector<std::vector<PseudoCoalgebra>> found(rhos.size());
  parallel_for(rhos.size(), [&](std::size_t i) {
    const Functor& rho = rhos[i];
    const Functor t_rho = t->on_functor(rho);
    const auto sigmas = enumerate_nats(identity_functor(z), compose(e, rho), true, lim);
    if (sigmas.empty()) return;
    const auto omegas = enumerate_nats(compose(w, rho), compose(t_rho, rho), true, lim);
    for (const auto& s : sigmas) {
      for (const auto& o : omegas) {
        PseudoCoalgebra c{t, z, rho, s, o};
        if (validate_pseudocoalgebra(c).ok()) found[i].push_back(std::move(c));
      }
    }
  });
  std::vector<PseudoCoalgebra> out;
  for (auto& v : found) {
    for (auto& c : v) out.push_back(std::move(c));
  }
  charge(out.size(), lim, "pseudocoalgebras");
  return out;
}

}  // namespace bitri
