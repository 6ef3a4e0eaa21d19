#include "bitri/kan.hpp"

#include <algorithm>
#include <atomic>

#include "bitri/parallel.hpp"
#include "bitri/standard.hpp"

namespace bitri {

Report validate_cat_diagram(const CatValuedDiagram& d) {
  Report r("Cat-valued diagram");
  if (!d.index) {
    r.fail("typing", "missing index category");
    return r;
  }
  const auto& s = *d.index;
  if (static_cast<int>(d.value.size()) != s.objects() || static_cast<int>(d.action.size()) != s.morphisms()) {
    r.fail("typing", "one value per object and one functor per morphism expected");
    return r;
  }
  for (int g = 0; g < s.morphisms(); ++g) {
    const Functor& f = d.action[g];
    if (!same_category(f.dom, d.value[s.src(g)]) || !same_category(f.cod, d.value[s.dst(g)])) {
      r.fail("typing", "D(g) has the wrong endpoints", {g});
      continue;
    }
    r.absorb(validate_functor(f), "D(" + std::to_string(g) + ")");
  }
  if (!r.ok()) return r;
  for (int a = 0; a < s.objects(); ++a) {
    if (!(d.action[s.id(a)] == identity_functor(d.value[a]))) r.fail("identity", "D(id) is not the identity", {a});
  }
  for (int g = 0; g < s.morphisms(); ++g) {
    for (int h : s.out(s.dst(g))) {
      if (!(d.action[s.comp(h, g)] == compose(d.action[h], d.action[g]))) {
        r.fail("composition", "D(hg) ≠ D(h)D(g)", {h, g});
      }
    }
  }
  return r;
}

namespace {

std::vector<int> non_identities(const FiniteCategory& s) {
  std::vector<int> out;
  for (int g = 0; g < s.morphisms(); ++g) {
    if (!s.is_identity(g)) out.push_back(g);
  }
  return out;
}

NatTransf identity_cell(const CatValuedDiagram& w, const CatValuedDiagram& d, const PseudoNat& a, int g) {
  const auto& s = *w.index;
  NatTransf c = identity_nat(compose(d.action[g], a.component[s.src(g)]));
  c.dst = compose(a.component[s.dst(g)], w.action[g]);
  return c;
}

// alpha_{hg} against (alpha_h∗W g)∘(D h∗alpha_g), comparing components.
bool composition_holds(const CatValuedDiagram& w, const CatValuedDiagram& d, const PseudoNat& a, int g, int h) {
  const auto& s = *w.index;
  const NatTransf rhs = vcompose(whisker(a.cell[h], w.action[g]), whisker(d.action[h], a.cell[g]));
  return a.cell[s.comp(h, g)].comp == rhs.comp;
}

std::vector<int> pseudonat_key(const std::vector<std::shared_ptr<const FunctorCategory>>& slots,
                               const std::vector<int>& nonid, const PseudoNat& a) {
  std::vector<int> key;
  for (std::size_t i = 0; i < slots.size(); ++i) key.push_back(slots[i]->index_of(a.component[i]));
  for (int g : nonid) key.insert(key.end(), a.cell[g].comp.begin(), a.cell[g].comp.end());
  return key;
}

}  // namespace

Report validate_pseudonat(const CatValuedDiagram& w, const CatValuedDiagram& d, const PseudoNat& a) {
  Report r("pseudonatural transformation");
  const auto& s = *w.index;
  if (!same_category(w.index, d.index) || static_cast<int>(a.component.size()) != s.objects() ||
      static_cast<int>(a.cell.size()) != s.morphisms()) {
    r.fail("typing", "components or cells do not match the index");
    return r;
  }
  for (int x = 0; x < s.objects(); ++x) {
    if (!same_category(a.component[x].dom, w.value[x]) || !same_category(a.component[x].cod, d.value[x])) {
      r.fail("typing", "component does not run W(a) → D(a)", {x});
    }
  }
  for (int g = 0; g < s.morphisms(); ++g) {
    const NatTransf& c = a.cell[g];
    if (!(c.src == compose(d.action[g], a.component[s.src(g)])) ||
        !(c.dst == compose(a.component[s.dst(g)], w.action[g]))) {
      r.fail("typing", "cell does not run D(g)alpha_a ⇒ alpha_b W(g)", {g});
    } else if (!validate_nattransf(c).ok() || !is_invertible(c)) {
      r.fail("invertibility", "cell is not an invertible natural transformation", {g});
    }
  }
  if (!r.ok()) return r;
  for (int x = 0; x < s.objects(); ++x) {
    if (!(a.cell[s.id(x)].comp == identity_cell(w, d, a, s.id(x)).comp)) {
      r.fail("identity", "cell at an identity is not the identity", {x});
    }
  }
  for (int g = 0; g < s.morphisms(); ++g) {
    for (int h : s.out(s.dst(g))) {
      if (!composition_holds(w, d, a, g, h)) r.fail("associativity", "composition axiom fails", {h, g});
    }
  }
  return r;
}

bool is_modification(const CatValuedDiagram& w, const CatValuedDiagram& d, const PseudoNat& alpha,
                     const PseudoNat& beta, const std::vector<NatTransf>& gamma) {
  const auto& s = *w.index;
  for (int g = 0; g < s.morphisms(); ++g) {
    if (s.is_identity(g)) continue;
    const NatTransf lhs = vcompose(beta.cell[g], whisker(d.action[g], gamma[s.src(g)]));
    const NatTransf rhs = vcompose(whisker(gamma[s.dst(g)], w.action[g]), alpha.cell[g]);
    if (lhs.comp != rhs.comp) return false;
  }
  return true;
}

std::vector<NatTransf> PsNatCategory::modification(int m) const {
  const auto t = tuples.tuple(m);
  std::vector<NatTransf> out;
  out.reserve(t.size());
  for (std::size_t a = 0; a < t.size(); ++a) out.push_back(slots[a]->nat(t[a]));
  return out;
}

int PsNatCategory::index_of(const PseudoNat& a) const {
  const auto nonid = non_identities(*w.index);
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (slots[i]->index_of(a.component[i]) < 0) return -1;
  }
  auto it = lookup.find(pseudonat_key(slots, nonid, a));
  return it == lookup.end() ? -1 : it->second;
}

int PsNatCategory::find(int src, int dst, const std::vector<NatTransf>& gamma) const {
  std::vector<int> t(gamma.size());
  for (std::size_t a = 0; a < gamma.size(); ++a) {
    t[a] = slots[a]->index_of(gamma[a]);
    if (t[a] < 0) return -1;
  }
  return tuples.find(src, dst, t);
}

PsNatCategory psnat_category(const CatValuedDiagram& w, const CatValuedDiagram& d, const Limits& lim) {
  if (!same_category(w.index, d.index)) throw PreconditionError("weight and diagram have different indexes");
  const auto& s = *w.index;
  const int n = s.objects();
  PsNatCategory p;
  p.w = w;
  p.d = d;
  std::size_t choices = 1;
  for (int a = 0; a < n; ++a) {
    p.slots.push_back(FunctorCategory::get(w.value[a], d.value[a], lim));
    choices *= static_cast<std::size_t>(p.slots.back()->size());
    charge(choices, lim, "component choices of pseudonatural transformations");
  }

  // Pairs (g, h) of composable non-identity morphisms, filed under whichever
  // of g, h, hg comes last in the order cells are chosen.
  const std::vector<int> nonid = non_identities(s);
  std::vector<int> pos(s.morphisms(), -1);
  for (std::size_t k = 0; k < nonid.size(); ++k) pos[nonid[k]] = static_cast<int>(k);
  std::vector<std::vector<std::pair<int, int>>> checks(nonid.size());
  for (int g : nonid) {
    for (int h : s.out(s.dst(g))) {
      if (s.is_identity(h)) continue;
      const int last = std::max({pos[g], pos[h], pos[s.comp(h, g)]});
      checks[last].push_back({g, h});
    }
  }

  std::vector<std::vector<PseudoNat>> found(choices);
  std::atomic<std::size_t> total{0};
  parallel_for(choices, [&](std::size_t c) {
    PseudoNat a;
    a.component.resize(n);
    a.cell.resize(s.morphisms());
    std::size_t rest = c;
    for (int x = n - 1; x >= 0; --x) {
      const std::size_t k = static_cast<std::size_t>(p.slots[x]->size());
      a.component[x] = p.slots[x]->functor(static_cast<int>(rest % k));
      rest /= k;
    }
    for (int x = 0; x < n; ++x) a.cell[s.id(x)] = identity_cell(w, d, a, s.id(x));
    std::vector<std::vector<NatTransf>> cand(nonid.size());
    for (std::size_t k = 0; k < nonid.size(); ++k) {
      const int g = nonid[k];
      cand[k] = enumerate_nats(compose(d.action[g], a.component[s.src(g)]),
                               compose(a.component[s.dst(g)], w.action[g]), true, lim);
      if (cand[k].empty()) return;
    }
    auto rec = [&](auto&& self, std::size_t k) -> void {
      if (k == nonid.size()) {
        found[c].push_back(a);
        charge(++total, lim, "pseudonatural transformations");
        return;
      }
      for (const auto& cell : cand[k]) {
        a.cell[nonid[k]] = cell;
        bool ok = true;
        for (auto [g, h] : checks[k]) {
          if (!composition_holds(w, d, a, g, h)) {
            ok = false;
            break;
          }
        }
        if (ok) self(self, k + 1);
      }
    };
    rec(rec, 0);
  });

  for (auto& part : found) {
    for (auto& a : part) p.objects.push_back(std::move(a));
  }
  std::vector<CatPtr> slot_cats;
  for (const auto& sl : p.slots) slot_cats.push_back(sl->cat());
  p.tuples = TupleCategory(slot_cats);
  std::vector<std::vector<int>> comp_index(p.objects.size(), std::vector<int>(n));
  for (std::size_t i = 0; i < p.objects.size(); ++i) {
    std::vector<int> ids(n);
    for (int a = 0; a < n; ++a) {
      comp_index[i][a] = p.slots[a]->index_of(p.objects[i].component[a]);
      ids[a] = slot_cats[a]->id(comp_index[i][a]);
    }
    p.tuples.add_object(ids);
    p.lookup.emplace(pseudonat_key(p.slots, nonid, p.objects[i]), static_cast<int>(i));
  }

  // Modifications between each ordered pair of objects.
  const std::size_t m = p.objects.size();
  std::vector<std::vector<std::pair<int, std::vector<int>>>> mods(m);
  parallel_for(m, [&](std::size_t i) {
    for (std::size_t j = 0; j < m; ++j) {
      std::vector<std::span<const int>> homs(n);
      bool empty = false;
      for (int a = 0; a < n; ++a) {
        homs[a] = slot_cats[a]->hom(comp_index[i][a], comp_index[j][a]);
        empty = empty || homs[a].empty();
      }
      if (empty) continue;
      std::vector<std::size_t> digit(n, 0);
      while (true) {
        std::vector<int> t(n);
        std::vector<NatTransf> gamma(n);
        for (int a = 0; a < n; ++a) {
          t[a] = homs[a][digit[a]];
          gamma[a] = p.slots[a]->nat(t[a]);
        }
        if (is_modification(w, d, p.objects[i], p.objects[j], gamma)) mods[i].push_back({static_cast<int>(j), t});
        int a = n - 1;
        while (a >= 0 && ++digit[a] == homs[a].size()) digit[a--] = 0;
        if (a < 0) break;
      }
    }
  });
  std::size_t count = 0;
  for (std::size_t i = 0; i < m; ++i) {
    for (const auto& [j, t] : mods[i]) {
      p.tuples.add_morphism(static_cast<int>(i), j, t);
      charge(++count, lim, "modifications");
    }
  }
  p.cat = p.tuples.build();
  return p;
}

Functor evaluate(const PsNatCategory& p, int a, int e) {
  const auto& c = *p.cat;
  Functor f{p.cat, p.d.value[a], std::vector<int>(c.objects()), std::vector<int>(c.morphisms())};
  for (int i = 0; i < c.objects(); ++i) f.obj[i] = p.objects[i].component[a].obj[e];
  for (int m = 0; m < c.morphisms(); ++m) f.mor[m] = p.slots[a]->nat(p.tuples.tuple(m)[a]).comp[e];
  return f;
}

Functor restrict_along(const PsNatCategory& from, const PsNatCategory& to, const std::vector<Functor>& r) {
  const auto& s = *from.w.index;
  const auto& c = *from.cat;
  Functor f{from.cat, to.cat, std::vector<int>(c.objects()), std::vector<int>(c.morphisms())};
  for (int i = 0; i < c.objects(); ++i) {
    const PseudoNat& a = from.objects[i];
    PseudoNat b;
    for (int x = 0; x < s.objects(); ++x) b.component.push_back(compose(a.component[x], r[x]));
    for (int g = 0; g < s.morphisms(); ++g) b.cell.push_back(whisker(a.cell[g], r[s.src(g)]));
    f.obj[i] = to.index_of(b);
    if (f.obj[i] < 0) throw PreconditionError("restriction leaves the target category");
  }
  for (int m = 0; m < c.morphisms(); ++m) {
    auto gamma = from.modification(m);
    for (int x = 0; x < s.objects(); ++x) gamma[x] = whisker(gamma[x], r[x]);
    f.mor[m] = to.find(f.obj[c.src(m)], f.obj[c.dst(m)], gamma);
    if (f.mor[m] < 0) throw PreconditionError("restriction leaves the target category");
  }
  return f;
}

namespace {

int position(std::span<const int> hom, int f) {
  auto it = std::lower_bound(hom.begin(), hom.end(), f);
  return (it == hom.end() || *it != f) ? -1 : static_cast<int>(it - hom.begin());
}

Functor discrete_map(const CatPtr& dom, const CatPtr& cod, const std::vector<int>& map) {
  return Functor{dom, cod, map, map};
}

}  // namespace

CatValuedDiagram representable_weight(const CatPtr& s, int x) {
  CatValuedDiagram w{s, {}, {}};
  for (int y = 0; y < s->objects(); ++y) w.value.push_back(cats::discrete(static_cast<int>(s->hom(x, y).size())));
  for (int f = 0; f < s->morphisms(); ++f) {
    const auto from = s->hom(x, s->src(f));
    const auto to = s->hom(x, s->dst(f));
    std::vector<int> map;
    for (int u : from) map.push_back(position(to, s->comp(f, u)));
    w.action.push_back(discrete_map(w.value[s->src(f)], w.value[s->dst(f)], map));
  }
  return w;
}

CatValuedDiagram constant_weight(const CatPtr& s, const CatPtr& value) {
  CatValuedDiagram w{s, std::vector<CatPtr>(s->objects(), value), {}};
  for (int f = 0; f < s->morphisms(); ++f) w.action.push_back(identity_functor(value));
  return w;
}

CatValuedDiagram precompose(const CatValuedDiagram& w, const Functor& h) {
  if (!same_category(h.cod, w.index)) throw PreconditionError("functor does not land in the weight's index");
  CatValuedDiagram out{h.dom, {}, {}};
  for (int a : h.obj) out.value.push_back(w.value[a]);
  for (int g : h.mor) out.action.push_back(w.action[g]);
  return out;
}

PsNatCategory ps_ran(const Functor& h, const CatValuedDiagram& d, int x, const Limits& lim) {
  if (!same_category(h.dom, d.index)) throw PreconditionError("diagram is not indexed by the domain of h");
  return psnat_category(precompose(representable_weight(h.cod, x), h), d, lim);
}

PsRanDiagram ps_ran_diagram(const Functor& h, const CatValuedDiagram& d, const Limits& lim) {
  const auto& t = *h.cod;
  const auto& s = *h.dom;
  PsRanDiagram out;
  out.diagram.index = h.cod;
  for (int x = 0; x < t.objects(); ++x) {
    out.values.push_back(ps_ran(h, d, x, lim));
    out.diagram.value.push_back(out.values.back().cat);
  }
  for (int u = 0; u < t.morphisms(); ++u) {
    const int x = t.src(u), y = t.dst(u);
    const auto& from = out.values[x];
    const auto& to = out.values[y];
    // r_a: S'(y, h a) → S'(x, h a), v ↦ v∘u
    std::vector<Functor> r;
    for (int a = 0; a < s.objects(); ++a) {
      const auto src = t.hom(y, h.obj[a]);
      const auto dst = t.hom(x, h.obj[a]);
      std::vector<int> map;
      for (int v : src) map.push_back(position(dst, t.comp(v, u)));
      r.push_back(discrete_map(to.w.value[a], from.w.value[a], map));
    }
    out.diagram.action.push_back(restrict_along(from, to, r));
  }
  return out;
}

namespace {

// psnat(W, PsRan) → psnat(W∘h, D): beta ↦ alpha with alpha_a(w) the value
// of beta_{ha}(w) at component a and the identity of ha.
Functor kan_comparison(const Functor& h, const PsRanDiagram& ran, const PsNatCategory& up, const PsNatCategory& down) {
  const auto& s = *h.dom;
  const auto& t = *h.cod;
  const auto& dd = down.d;
  auto ident = [&](int y) { return position(t.hom(y, y), t.id(y)); };
  const auto& c = *up.cat;
  Functor f{up.cat, down.cat, std::vector<int>(c.objects()), std::vector<int>(c.morphisms())};
  for (int i = 0; i < c.objects(); ++i) {
    const PseudoNat& beta = up.objects[i];
    PseudoNat alpha;
    for (int a = 0; a < s.objects(); ++a) {
      const int ha = h.obj[a];
      const auto& r = ran.values[ha];
      const int e = ident(ha);
      const Functor& b = beta.component[ha];
      Functor comp{b.dom, dd.value[a], std::vector<int>(b.obj.size()), std::vector<int>(b.mor.size())};
      for (std::size_t w = 0; w < b.obj.size(); ++w) comp.obj[w] = r.objects[b.obj[w]].component[a].obj[e];
      for (std::size_t m = 0; m < b.mor.size(); ++m) {
        comp.mor[m] = r.slots[a]->nat(r.tuples.tuple(b.mor[m])[a]).comp[e];
      }
      alpha.component.push_back(std::move(comp));
    }
    for (int g = 0; g < s.morphisms(); ++g) {
      const int a = s.src(g), bb = s.dst(g);
      const int ha = h.obj[a], hb = h.obj[bb];
      const auto& ra = ran.values[ha];
      const auto& rb = ran.values[hb];
      const int ea = ident(ha), eb = ident(hb);
      const auto& target = *dd.value[bb];
      NatTransf cell{compose(dd.action[g], alpha.component[a]), compose(alpha.component[bb], up.w.action[h.mor[g]]),
                     std::vector<int>(alpha.component[a].obj.size())};
      for (std::size_t w = 0; w < cell.comp.size(); ++w) {
        const PseudoNat& n = ra.objects[beta.component[ha].obj[w]];
        const int first = n.cell[g].comp[ea];
        const int second = rb.slots[bb]->nat(rb.tuples.tuple(beta.cell[h.mor[g]].comp[w])[bb]).comp[eb];
        cell.comp[w] = target.comp(second, first);
      }
      alpha.cell.push_back(std::move(cell));
    }
    f.obj[i] = down.index_of(alpha);
    if (f.obj[i] < 0) throw PreconditionError("comparison produced no pseudonatural transformation");
  }
  for (int m = 0; m < c.morphisms(); ++m) {
    const auto gamma = up.modification(m);
    std::vector<NatTransf> out;
    for (int a = 0; a < s.objects(); ++a) {
      const int ha = h.obj[a];
      const auto& r = ran.values[ha];
      const int e = ident(ha);
      NatTransf g{down.objects[f.obj[c.src(m)]].component[a], down.objects[f.obj[c.dst(m)]].component[a],
                  std::vector<int>(gamma[ha].comp.size())};
      for (std::size_t w = 0; w < g.comp.size(); ++w) {
        g.comp[w] = r.slots[a]->nat(r.tuples.tuple(gamma[ha].comp[w])[a]).comp[e];
      }
      out.push_back(std::move(g));
    }
    f.mor[m] = down.find(f.obj[c.src(m)], f.obj[c.dst(m)], out);
    if (f.mor[m] < 0) throw PreconditionError("comparison produced no modification");
  }
  return f;
}

}  // namespace

KanProbe ps_ran_universal_probe(const Functor& h, const CatValuedDiagram& d,
                                const std::vector<CatValuedDiagram>& weights, const Limits& lim) {
  KanProbe out;
  const PsRanDiagram ran = ps_ran_diagram(h, d, lim);
  for (std::size_t i = 0; i < weights.size() && out.holds; ++i) {
    try {
      const PsNatCategory up = psnat_category(weights[i], ran.diagram, lim);
      const PsNatCategory down = psnat_category(precompose(weights[i], h), d, lim);
      if (!is_equivalence(kan_comparison(h, ran, up, down), false).holds) {
        out.holds = false;
        out.note = "comparison is not an equivalence";
      }
    } catch (const PreconditionError& e) {
      out.holds = false;
      out.note = e.what();
    }
    if (!out.holds) out.failing_weight = static_cast<int>(i);
  }
  return out;
}

std::vector<CatValuedDiagram> sample_weights(const CatPtr& s) {
  std::vector<CatValuedDiagram> out;
  for (int x = 0; x < s->objects(); ++x) out.push_back(representable_weight(s, x));
  out.push_back(constant_weight(s, cats::terminal()));
  return out;
}

}  // namespace bitri
