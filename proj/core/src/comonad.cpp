#include "bitri/comonad.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "bitri/enumerate.hpp"
#include "bitri/standard.hpp"

namespace bitri {

NatTransf TwoComonad::lambda(const CatPtr& c) const {
  return identity_nat(compose(comult(on_cat(c)), comult(c)));
}

NatTransf TwoComonad::delta(const CatPtr& c) const { return identity_nat(identity_functor(on_cat(c))); }

NatTransf TwoComonad::s(const CatPtr& c) const { return identity_nat(compose(counit(on_cat(c)), comult(c))); }

namespace {

class IdentityComonad : public TwoComonad {
 public:
  std::string name() const override { return "identity"; }
  CatPtr on_cat(const CatPtr& c) const override { return c; }
  Functor on_functor(const Functor& f) const override { return f; }
  NatTransf on_nat(const NatTransf& a) const override { return a; }
  Functor counit(const CatPtr& c) const override { return identity_functor(c); }
  Functor comult(const CatPtr& c) const override { return identity_functor(c); }
};

class ProductComonad : public TwoComonad {
 public:
  ProductComonad(CatPtr d, std::string name) : d_(std::move(d)), carrier_(product_transport(d_)), name_(std::move(name)) {}
  std::string name() const override { return name_; }
  CatPtr on_cat(const CatPtr& c) const override { return carrier_->on_cat(c); }
  Functor on_functor(const Functor& f) const override { return carrier_->on_functor(f); }
  NatTransf on_nat(const NatTransf& a) const override { return carrier_->on_nat(a); }

  CatPtr factor() const override { return d_; }
  Functor counit(const CatPtr& c) const override { return product_projection(c, d_, 0); }

  Functor comult(const CatPtr& c) const override {
    const int nd = d_->objects(), md = d_->morphisms();
    auto tc = on_cat(c);
    Functor w{tc, on_cat(tc), std::vector<int>(tc->objects()), std::vector<int>(tc->morphisms())};
    for (int x = 0; x < tc->objects(); ++x) w.obj[x] = x * nd + x % nd;
    for (int m = 0; m < tc->morphisms(); ++m) w.mor[m] = m * md + m % md;
    return w;
  }

 private:
  CatPtr d_;
  TransportPtr carrier_;
  std::string name_;
};

struct PairCarrier {
  TupleCategory tuples;
  std::vector<int> index;  // x·n + y → object, -1 across components
};

class ComponentPairComonad : public TwoComonad {
 public:
  std::string name() const override { return "component-pair"; }

  CatPtr on_cat(const CatPtr& c) const override { return carrier(c)->tuples.cat(); }

  Functor on_functor(const Functor& f) const override {
    auto src = carrier(f.dom);
    auto dst = carrier(f.cod);
    const auto& S = *src->tuples.cat();
    const int n = f.dom->objects(), nd = f.cod->objects();
    Functor r{src->tuples.cat(), dst->tuples.cat(), std::vector<int>(S.objects()),
              std::vector<int>(S.morphisms())};
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        const int i = src->index[x * n + y];
        if (i >= 0) r.obj[i] = dst->index[f.obj[x] * nd + f.obj[y]];
      }
    }
    for (int m = 0; m < S.morphisms(); ++m) {
      auto t = src->tuples.tuple(m);
      const int img[2] = {f.mor[t[0]], f.mor[t[1]]};
      r.mor[m] = dst->tuples.find(r.obj[S.src(m)], r.obj[S.dst(m)], img);
    }
    return r;
  }

  NatTransf on_nat(const NatTransf& a) const override {
    auto src = carrier(a.src.dom);
    auto dst = carrier(a.src.cod);
    NatTransf r{on_functor(a.src), on_functor(a.dst), std::vector<int>(src->tuples.cat()->objects())};
    const int n = a.src.dom->objects();
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        const int i = src->index[x * n + y];
        if (i < 0) continue;
        const int img[2] = {a.comp[x], a.comp[y]};
        r.comp[i] = dst->tuples.find(r.src.obj[i], r.dst.obj[i], img);
      }
    }
    return r;
  }

  Functor counit(const CatPtr& c) const override {
    auto pc = carrier(c);
    const auto& S = *pc->tuples.cat();
    Functor e{pc->tuples.cat(), c, std::vector<int>(S.objects()), std::vector<int>(S.morphisms())};
    for (int m = 0; m < S.morphisms(); ++m) e.mor[m] = pc->tuples.tuple(m)[0];
    for (int x = 0; x < S.objects(); ++x) e.obj[x] = c->src(pc->tuples.tuple(S.id(x))[0]);
    return e;
  }

  Functor comult(const CatPtr& c) const override {
    auto pc = carrier(c);
    auto tc = pc->tuples.cat();
    auto ptc = carrier(tc);
    const auto& S = *tc;
    const int n = S.objects();
    Functor w{tc, ptc->tuples.cat(), std::vector<int>(n), std::vector<int>(S.morphisms())};
    // (x, y) ↦ ((x, y), (y, y))
    std::vector<int> diag(n);
    for (int i = 0; i < n; ++i) {
      const int y = c->src(pc->tuples.tuple(S.id(i))[1]);
      diag[i] = pc->index[y * c->objects() + y];
    }
    for (int i = 0; i < n; ++i) w.obj[i] = ptc->index[i * n + diag[i]];
    for (int m = 0; m < S.morphisms(); ++m) {
      const int g = pc->tuples.tuple(m)[1];
      const int gg[2] = {g, g};
      const int mg = pc->tuples.find(diag[S.src(m)], diag[S.dst(m)], gg);
      const int img[2] = {m, mg};
      w.mor[m] = ptc->tuples.find(w.obj[S.src(m)], w.obj[S.dst(m)], img);
    }
    return w;
  }

 private:
  std::shared_ptr<const PairCarrier> carrier(const CatPtr& c) const {
    {
      std::lock_guard lock(mu_);
      auto it = cache_.find(c->uid());
      if (it != cache_.end()) return it->second;
    }
    const int n = c->objects();
    std::vector<int> comp(n);
    std::iota(comp.begin(), comp.end(), 0);
    auto root = [&comp](int x) {
      while (comp[x] != x) x = comp[x] = comp[comp[x]];
      return x;
    };
    for (int f = 0; f < c->morphisms(); ++f) comp[root(c->src(f))] = root(c->dst(f));

    std::size_t pairs = 0;
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) pairs += root(x) == root(y);
    }
    charge(pairs, default_limits(), "objects of a component-pair carrier");
    auto pc = std::make_shared<PairCarrier>();
    pc->tuples = TupleCategory({c, c});
    pc->index.assign(static_cast<std::size_t>(n) * n, -1);
    std::vector<std::pair<int, int>> objs;
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        if (root(x) != root(y)) continue;
        pc->index[x * n + y] = pc->tuples.add_object({c->id(x), c->id(y)});
        objs.emplace_back(x, y);
      }
    }
    for (std::size_t i = 0; i < objs.size(); ++i) {
      for (std::size_t j = 0; j < objs.size(); ++j) {
        for (int f : c->hom(objs[i].first, objs[j].first)) {
          for (int g : c->hom(objs[i].second, objs[j].second)) {
            pc->tuples.add_morphism(static_cast<int>(i), static_cast<int>(j), {f, g});
          }
        }
      }
    }
    pc->tuples.build("pair:" + std::to_string(c->uid()));
    std::lock_guard lock(mu_);
    auto [it, inserted] = cache_.emplace(c->uid(), pc);
    return it->second;
  }

  mutable std::mutex mu_;
  mutable std::map<std::uint64_t, std::shared_ptr<const PairCarrier>> cache_;
};

}  // namespace

ComonadPtr builtin_identity() {
  static const ComonadPtr t = std::make_shared<IdentityComonad>();
  return t;
}

ComonadPtr builtin_product(const CatPtr& d) {
  static std::mutex mu;
  static std::map<std::uint64_t, ComonadPtr> made;
  std::lock_guard lock(mu);
  auto it = made.find(d->uid());
  if (it != made.end()) return it->second;
  std::string name = "product";
  if (d == cats::terminal()) name = "product:1";
  else if (d == cats::arrow()) name = "product:2";
  else if (d == cats::iso()) name = "product:I";
  return made.emplace(d->uid(), std::make_shared<ProductComonad>(d, name)).first->second;
}

ComonadPtr builtin_component_pair() {
  static const ComonadPtr t = std::make_shared<ComponentPairComonad>();
  return t;
}

ComonadPtr comonad_by_name(const std::string& name) {
  if (name == "identity") return builtin_identity();
  if (name == "product:1") return builtin_product(cats::terminal());
  if (name == "product:2") return builtin_product(cats::arrow());
  if (name == "product:I") return builtin_product(cats::iso());
  if (name == "component-pair") return builtin_component_pair();
  throw PreconditionError("unknown comonad '" + name + "'");
}

namespace {

void expect_equal(Report& r, const char* rule, const std::string& where, const Functor& a, const Functor& b) {
  if (!(a == b)) r.fail(rule, where);
}

void expect_equal(Report& r, const char* rule, const std::string& where, const NatTransf& a, const NatTransf& b) {
  if (!(a == b)) r.fail(rule, where);
}

void check_modification(Report& r, const char* name, const std::string& where, const NatTransf& a,
                        const Functor& src, const Functor& dst) {
  if (!(a.src == src) || !(a.dst == dst)) {
    r.fail("typing", std::string(name) + " is not well typed at " + where +
                         " (with identity coherence cells this is a strict comonad law)");
    return;
  }
  Report nat = validate_nattransf(a);
  if (!nat.ok()) {
    r.absorb(nat, name);
    return;
  }
  if (!is_invertible(a)) r.fail("invertibility", std::string(name) + " is not invertible at " + where);
}

void audit_category(Report& r, const TwoComonad& t, const CatPtr& c, const std::string& where) {
  const CatPtr tc = t.on_cat(c);
  const CatPtr t2c = t.on_cat(tc);
  expect_equal(r, "functoriality", "T(Id) ≠ Id at " + where, t.on_functor(identity_functor(c)),
               identity_functor(tc));
  const Functor eps = t.counit(c);
  const Functor w = t.comult(c);
  r.absorb(validate_functor(eps), "counit at " + where);
  r.absorb(validate_functor(w), "comultiplication at " + where);
  if (!r.ok()) return;

  const Functor eps_t = t.counit(tc);
  const Functor w_t = t.comult(tc);
  const Functor t_eps = t.on_functor(eps);
  const Functor t_w = t.on_functor(w);

  const NatTransf lam = t.lambda(c);
  const NatTransf del = t.delta(c);
  const NatTransf ess = t.s(c);
  check_modification(r, "Lambda", where, lam, compose(w_t, w), compose(t_w, w));
  check_modification(r, "delta", where, del, identity_functor(tc), compose(t_eps, w));
  check_modification(r, "s", where, ess, compose(eps_t, w), identity_functor(tc));
  if (!r.ok()) return;

  const CatPtr t3c = t.on_cat(t2c);
  const NatTransf lam_t = t.lambda(tc);
  const NatTransf del_t = t.delta(tc);
  const NatTransf t_lam = t.on_nat(lam);
  const NatTransf t_s = t.on_nat(ess);
  const Functor w_tt = t.comult(t2c);
  const Functor t_w_t = t.on_functor(w_t);
  const Functor tt_w = t.on_functor(t_w);
  const Functor t_eps_t = t.on_functor(eps_t);
  const auto& T2 = *t2c;
  const CatPtr t4c = t.on_cat(t3c);
  const auto& T4 = *t4c;
  for (int x = 0; x < tc->objects(); ++x) {
    const int y = w.obj[x];
    const int lx = lam.comp[x];
    const int lhs = T4.comp(t_lam.comp[y], T4.comp(t_w_t.mor[lx], lam_t.comp[y]));
    const int rhs = T4.comp(tt_w.mor[lx], w_tt.mor[lx]);
    if (lhs != rhs) {
      r.fail("associativity", "pseudocomonad associativity fails at " + where + ", object " + std::to_string(x), {x});
      break;
    }
    const int ilhs = t_eps_t.mor[lx];
    const int irhs = T2.comp(T2.inverse(t_s.comp[y]), T2.inverse(del_t.comp[y]));
    if (ilhs != irhs) {
      r.fail("identity", "pseudocomonad identity fails at " + where + ", object " + std::to_string(x), {x});
      break;
    }
  }
}

}  // namespace

Report audit_comonad(const TwoComonad& t, const AuditInputs& tests) {
  Report r("comonad " + t.name());
  for (std::size_t i = 0; i < tests.categories.size(); ++i) {
    audit_category(r, t, tests.categories[i], "category " + std::to_string(i));
  }
  for (std::size_t i = 0; i < tests.functors.size(); ++i) {
    const Functor& f = tests.functors[i];
    const std::string where = "functor " + std::to_string(i);
    const Functor tf = t.on_functor(f);
    r.absorb(validate_functor(tf), "T of " + where);
    expect_equal(r, "counit naturality", where, compose(t.counit(f.cod), tf), compose(f, t.counit(f.dom)));
    expect_equal(r, "comultiplication naturality", where, compose(t.comult(f.cod), tf),
                 compose(t.on_functor(tf), t.comult(f.dom)));
    for (std::size_t j = 0; j < tests.functors.size(); ++j) {
      const Functor& g = tests.functors[j];
      if (!same_category(f.cod, g.dom)) continue;
      expect_equal(r, "functoriality", "T(g∘f) ≠ Tg∘Tf for functors " + std::to_string(i) + ", " + std::to_string(j),
                   t.on_functor(compose(g, f)), compose(t.on_functor(g), tf));
    }
  }
  for (std::size_t i = 0; i < tests.nats.size(); ++i) {
    const NatTransf& a = tests.nats[i];
    const std::string where = "transformation " + std::to_string(i);
    const NatTransf ta = t.on_nat(a);
    r.absorb(validate_nattransf(ta), "T of " + where);
    expect_equal(r, "functoriality", "T(id) ≠ id at " + where, t.on_nat(identity_nat(a.src)),
                 identity_nat(t.on_functor(a.src)));
    expect_equal(r, "counit 2-naturality", where, whisker(t.counit(a.src.cod), ta), whisker(a, t.counit(a.src.dom)));
    expect_equal(r, "comultiplication 2-naturality", where, whisker(t.comult(a.src.cod), ta),
                 whisker(t.on_nat(ta), t.comult(a.src.dom)));
    for (std::size_t j = 0; j < tests.nats.size(); ++j) {
      const NatTransf& b = tests.nats[j];
      if (!(a.dst == b.src)) continue;
      expect_equal(r, "vertical composition", "T(β∘α) ≠ Tβ∘Tα for " + std::to_string(i) + ", " + std::to_string(j),
                   t.on_nat(vcompose(b, a)), vcompose(t.on_nat(b), ta));
    }
  }
  return r;
}

Preservation preserves_descent(const Transport& t, const DescentDiagram& a, const Limits& lim) {
  Preservation p;
  try {
    const DescentObject d = strict_descent_object(a, lim);
    const DescentCone mapped = map_cone(t, d.cone);
    const DescentObject td = strict_descent_object(mapped.base, lim);
    const Functor c = comparison(mapped, td);
    p.strict = is_isomorphism_functor(c);
    p.equivalence = p.strict || is_equivalence(c, false).holds;
    if (!p.strict) {
      p.note = "Desc of the image has " + std::to_string(td.desc->objects()) + " objects, the image of Desc has " +
               std::to_string(mapped.a0->objects());
    }
  } catch (const PreconditionError& e) {
    p.note = e.what();
  }
  return p;
}

PseudofunctorData strict_pseudofunctor(const CatPtr& index, std::vector<CatPtr> values, std::vector<Functor> arrows) {
  PseudofunctorData p{index, std::move(values), std::move(arrows), {}, {}};
  const auto& S = *index;
  p.comp.resize(S.morphisms());
  for (int f = 0; f < S.morphisms(); ++f) {
    for (int g : S.out(S.dst(f))) p.comp[f].push_back(identity_nat(compose(p.arrows[g], p.arrows[f])));
  }
  for (int x = 0; x < S.objects(); ++x) p.unit.push_back(identity_nat(identity_functor(p.values[x])));
  return p;
}

Report validate_pseudofunctor(const PseudofunctorData& p) {
  Report r("pseudofunctor");
  const auto& S = *p.index;
  if (static_cast<int>(p.values.size()) != S.objects() || static_cast<int>(p.arrows.size()) != S.morphisms() ||
      static_cast<int>(p.comp.size()) != S.morphisms() || static_cast<int>(p.unit.size()) != S.objects()) {
    r.fail("shape", "cell data does not match the index category");
    return r;
  }
  for (int f = 0; f < S.morphisms(); ++f) {
    const Functor& F = p.arrows[f];
    if (!same_category(F.dom, p.values[S.src(f)]) || !same_category(F.cod, p.values[S.dst(f)])) {
      r.fail("typing", "arrow " + std::to_string(f) + " has the wrong endpoints", {f});
    } else {
      r.absorb(validate_functor(F), "arrow " + std::to_string(f));
    }
    if (p.comp[f].size() != S.out(S.dst(f)).size()) r.fail("shape", "compositor row " + std::to_string(f));
  }
  if (!r.ok()) return r;
  auto pos = [&S](int f, int g) {
    auto out = S.out(S.dst(f));
    return static_cast<std::size_t>(std::find(out.begin(), out.end(), g) - out.begin());
  };
  auto cell = [&](int f, int g) -> const NatTransf& { return p.comp[f][pos(f, g)]; };

  for (int x = 0; x < S.objects(); ++x) {
    const NatTransf& u = p.unit[x];
    if (!(u.src == identity_functor(p.values[x])) || !(u.dst == p.arrows[S.id(x)]) || !is_invertible(u)) {
      r.fail("typing", "unit cell at object " + std::to_string(x), {x});
    }
  }
  for (int f = 0; f < S.morphisms(); ++f) {
    for (int g : S.out(S.dst(f))) {
      const NatTransf& t = cell(f, g);
      if (!(t.src == compose(p.arrows[g], p.arrows[f])) || !(t.dst == p.arrows[S.comp(g, f)]) ||
          !validate_nattransf(t).ok() || !is_invertible(t)) {
        r.fail("typing", "compositor at (" + std::to_string(f) + ", " + std::to_string(g) + ")", {f, g});
      }
    }
  }
  if (!r.ok()) return r;

  for (int f = 0; f < S.morphisms(); ++f) {
    for (int g : S.out(S.dst(f))) {
      const int gf = S.comp(g, f);
      for (int h : S.out(S.dst(g))) {
        const int hg = S.comp(h, g);
        const NatTransf lhs = vcompose(cell(gf, h), whisker(p.arrows[h], cell(f, g)));
        const NatTransf rhs = vcompose(cell(f, hg), whisker(cell(g, h), p.arrows[f]));
        if (!(lhs == rhs)) r.fail("associativity", "compositors do not paste", {f, g, h});
      }
    }
    const int x = S.src(f), y = S.dst(f);
    const NatTransf left = vcompose(cell(S.id(x), f), whisker(p.arrows[f], p.unit[x]));
    const NatTransf right = vcompose(cell(f, S.id(y)), whisker(p.unit[y], p.arrows[f]));
    if (!(left == identity_nat(p.arrows[f])) || !(right == identity_nat(p.arrows[f]))) {
      r.fail("identity", "unit cells do not cancel against compositors", {f});
    }
  }
  return r;
}

}  // namespace bitri
