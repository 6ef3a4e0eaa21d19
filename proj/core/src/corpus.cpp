#include "bitri/corpus.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <map>
#include <random>

#include "bitri/comonad.hpp"
#include "bitri/enumerate.hpp"
#include "bitri/io.hpp"
#include "bitri/standard.hpp"

namespace bitri {

namespace {

CatPtr vee() {
  return cats::poset(3, [](int a, int b) { return a == b || a == 0; });
}

CatPtr wedge() {
  return cats::poset(3, [](int a, int b) { return a == b || b == 2; });
}

CatPtr arrow_plus_point() {
  return cats::poset(3, [](int a, int b) { return a == b || (a == 0 && b == 1); });
}

// Uniform pick from a non-empty vector.
template <class T>
const T& pick(std::mt19937& rng, const std::vector<T>& v) {
  std::uniform_int_distribution<std::size_t> dist(0, v.size() - 1);
  return v[dist(rng)];
}

class FunctorCache {
 public:
  const std::vector<Functor>& get(const CatPtr& a, const CatPtr& b) {
    auto key = std::make_pair(a->uid(), b->uid());
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, enumerate_functors(a, b)).first;
    return it->second;
  }

 private:
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::vector<Functor>> cache_;
};

std::optional<DescentDiagram> draw_diagram(std::mt19937& rng, FunctorCache& fc,
                                           const std::vector<std::pair<std::string, CatPtr>>& cats,
                                           std::string& name) {
  const auto& [n1, a1] = pick(rng, cats);
  const auto& [n2, a2] = pick(rng, cats);
  const auto& [n3, a3] = pick(rng, cats);
  const auto& f12 = fc.get(a1, a2);
  const auto& f21 = fc.get(a2, a1);
  const auto& f23 = fc.get(a2, a3);
  if (f12.empty() || f21.empty() || f23.empty()) return std::nullopt;

  DescentDiagram a;
  a.a1 = a1;
  a.a2 = a2;
  a.a3 = a3;
  a.d0 = pick(rng, f12);
  a.d1 = pick(rng, f12);
  a.s0 = pick(rng, f21);
  a.p0 = pick(rng, f23);
  a.p1 = pick(rng, f23);
  a.p2 = pick(rng, f23);

  auto cell = [&](const Functor& s, const Functor& t, NatTransf& out) {
    auto all = enumerate_nats(s, t, true);
    if (all.empty()) return false;
    out = pick(rng, all);
    return true;
  };
  if (!cell(compose(a.p1, a.d0), compose(a.p0, a.d0), a.sigma01)) return std::nullopt;
  if (!cell(compose(a.p2, a.d0), compose(a.p0, a.d1), a.sigma02)) return std::nullopt;
  if (!cell(compose(a.p2, a.d1), compose(a.p1, a.d1), a.sigma12)) return std::nullopt;
  if (!cell(compose(a.s0, a.d0), identity_functor(a1), a.n0)) return std::nullopt;
  if (!cell(identity_functor(a1), compose(a.s0, a.d1), a.n1)) return std::nullopt;
  name = n1 + "-" + n2 + "-" + n3;
  return a;
}

// Eilenberg-Moore category of the comonad L'U' induced by an adjunction,
// with its forgetful/cofree adjunction.
Adjunction coalgebra_adjunction(const Adjunction& a) {
  const auto& c = *a.left.cod;
  Functor t = compose(a.left, a.right);
  std::vector<int> delta(c.objects());
  for (int x = 0; x < c.objects(); ++x) delta[x] = a.left.mor[a.unit.comp[a.right.obj[x]]];

  std::vector<std::pair<int, int>> objs;  // (x, coaction)
  for (int x = 0; x < c.objects(); ++x)
    for (int al : c.hom(x, t.obj[x]))
      if (c.comp(a.counit.comp[x], al) == c.id(x) && c.comp(t.mor[al], al) == c.comp(delta[x], al))
        objs.emplace_back(x, al);

  CategoryData d;
  d.objects = static_cast<int>(objs.size());
  d.identity.assign(objs.size(), -1);
  std::vector<int> under;
  for (int i = 0; i < d.objects; ++i)
    for (int j = 0; j < d.objects; ++j)
      for (int f : c.hom(objs[i].first, objs[j].first))
        if (c.comp(objs[j].second, f) == c.comp(t.mor[f], objs[i].second)) {
          if (i == j && c.is_identity(f)) d.identity[i] = static_cast<int>(under.size());
          d.morphisms.push_back({i, j});
          under.push_back(f);
        }
  auto find_mor = [&](int i, int j, int f) {
    for (int k = 0; k < static_cast<int>(under.size()); ++k)
      if (under[k] == f && d.morphisms[k].src == i && d.morphisms[k].dst == j) return k;
    return -1;
  };
  for (int f = 0; f < static_cast<int>(under.size()); ++f)
    for (int g = 0; g < static_cast<int>(under.size()); ++g)
      if (d.morphisms[f].dst == d.morphisms[g].src)
        d.compose.push_back({f, g, find_mor(d.morphisms[f].src, d.morphisms[g].dst, c.comp(under[g], under[f]))});
  CatPtr b = FiniteCategory::from_data(d);

  Functor forget{b, a.left.cod, {}, under};
  for (auto& o : objs) forget.obj.push_back(o.first);
  Functor cofree{a.left.cod, b, {}, {}};
  for (int x = 0; x < c.objects(); ++x) {
    auto it = std::find(objs.begin(), objs.end(), std::make_pair(t.obj[x], delta[x]));
    cofree.obj.push_back(static_cast<int>(it - objs.begin()));
  }
  for (int m = 0; m < c.morphisms(); ++m)
    cofree.mor.push_back(find_mor(cofree.obj[c.src(m)], cofree.obj[c.dst(m)], t.mor[m]));
  NatTransf unit{identity_functor(b), compose(cofree, forget), {}};
  for (int i = 0; i < d.objects; ++i) unit.comp.push_back(find_mor(i, cofree.obj[objs[i].first], objs[i].second));
  NatTransf counit{compose(forget, cofree), identity_functor(a.left.cod), a.counit.comp};
  return Adjunction{forget, cofree, unit, counit};
}

Adjunction identity_adjunction(const CatPtr& c) {
  auto id = identity_functor(c);
  return Adjunction{id, id, identity_nat(id), identity_nat(id)};
}

CatValuedDiagram arrow_diagram(const CatPtr& a, const CatPtr& b, const Functor& f) {
  auto s = cats::arrow();
  CatValuedDiagram d{s, {a, b}, {}};
  for (int g = 0; g < s->morphisms(); ++g)
    d.action.push_back(s->is_identity(g) ? identity_functor(d.value[s->src(g)]) : f);
  return d;
}

std::string file_safe(std::string s) {
  std::replace(s.begin(), s.end(), ':', '-');
  std::replace(s.begin(), s.end(), '#', '-');
  return s;
}

}  // namespace

std::vector<std::pair<std::string, CatPtr>> small_categories() {
  return {
      {"empty", cats::empty()},
      {"1", cats::terminal()},
      {"2", cats::arrow()},
      {"I", cats::iso()},
      {"d2", cats::discrete(2)},
      {"parallel", cats::parallel_pair()},
      {"chain3", cats::chain(3)},
      {"Z2", cats::cyclic_group(2)},
      {"Z3", cats::cyclic_group(3)},
      {"vee", vee()},
      {"wedge", wedge()},
  };
}

std::vector<NamedDiagram> corpus_descent_diagrams(int generated) {
  std::vector<NamedDiagram> out;
  std::mt19937 rng(corpus_seed);
  FunctorCache fc;
  // The empty category is left out of the draws: it has no functors into
  // anything but itself and would only be drawn to be rejected.
  auto pool = small_categories();
  pool.erase(pool.begin());
  int attempts = 0;
  while (static_cast<int>(out.size()) < generated && attempts < 100000) {
    ++attempts;
    std::string name;
    auto a = draw_diagram(rng, fc, pool, name);
    if (!a) continue;
    char buf[16];
    std::snprintf(buf, sizeof buf, "gen%02d-", static_cast<int>(out.size()));
    out.push_back({buf + name, std::move(*a)});
  }
  for (auto& [n, c] : small_categories()) out.push_back({"const-" + n, constant_identity_diagram(c)});
  return out;
}

std::vector<std::pair<std::string, CatPtr>> corpus_carriers() {
  return {{"empty", cats::empty()}, {"1", cats::terminal()}, {"2", cats::arrow()}, {"I", cats::iso()}};
}

std::vector<std::string> corpus_comonads() { return {"identity", "product:1", "product:2", "product:I"}; }

std::vector<NamedCoalgebra> corpus_pseudocoalgebras(const ComonadPtr& t) {
  std::vector<NamedCoalgebra> out;
  for (auto& [n, c] : corpus_carriers()) {
    auto all = enumerate_pseudocoalgebras(t, c);
    for (std::size_t i = 0; i < all.size(); ++i)
      out.push_back({n + "#" + std::to_string(i) + (is_strict(all[i]) ? "s" : ""), std::move(all[i])});
  }
  return out;
}

std::vector<NamedCoalgebra> corpus_pseudocoalgebras(const std::string& comonad) {
  return corpus_pseudocoalgebras(comonad_by_name(comonad));
}

std::vector<NamedTriangle> corpus_triangles() {
  std::vector<NamedTriangle> out;
  const std::vector<std::pair<std::string, CatPtr>> pool = {
      {"1", cats::terminal()},         {"2", cats::arrow()},   {"I", cats::iso()},
      {"d2", cats::discrete(2)},       {"parallel", cats::parallel_pair()},
      {"chain3", cats::chain(3)},      {"Z2", cats::cyclic_group(2)},
      {"vee", vee()},                  {"2+1", arrow_plus_point()},
  };

  // Adjunctions L ⊣ U between pool categories with L precomonadic, in pool
  // order; each is used once with J = Id and once through its coalgebras.
  std::vector<std::pair<std::string, Adjunction>> adjunctions;
  for (auto& [bn, b] : pool)
    for (auto& [cn, c] : pool) {
      if (b->objects() > c->objects() + 1) continue;
      for (auto& l : enumerate_functors(b, c)) {
        auto lu = right_adjoint_bruteforce(l);
        if (!lu || !beck_precomonadic(*lu)) continue;
        adjunctions.push_back({bn + ">" + cn + "#" + std::to_string(adjunctions.size()), *lu});
      }
    }

  // J = E, L = Id.
  for (std::size_t i = 0; i < adjunctions.size(); i += 7) {
    const auto& [n, er] = adjunctions[i];
    out.push_back({"degenerate-" + n, Triangle{er.left, er, identity_adjunction(er.left.cod)}});
  }
  // J = Id, E = L.
  for (std::size_t i = 3; i < adjunctions.size(); i += 7) {
    const auto& [n, lu] = adjunctions[i];
    out.push_back({"identity-" + n, Triangle{identity_functor(lu.left.dom), lu, lu}});
  }
  // Coalgebras of the induced comonad: L forgetful, J the inclusion of the
  // cofree coalgebras, or the whole category.
  for (std::size_t i = 5; i < adjunctions.size(); i += 7) {
    const auto& [n, base] = adjunctions[i];
    Adjunction lu = coalgebra_adjunction(base);
    std::vector<int> keep(lu.right.obj.begin(), lu.right.obj.end());
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    auto sub = full_subcategory(lu.left.dom, keep);
    auto er = right_adjoint_bruteforce(compose(lu.left, sub.inclusion));
    if (er) out.push_back({"cofree-" + n, Triangle{sub.inclusion, *er, lu}});
    out.push_back({"coalgebras-" + n, Triangle{identity_functor(lu.left.dom), lu, lu}});
  }
  // J arbitrary into the domain of a precomonadic L, whenever E = L∘J has a
  // right adjoint.
  int general = 0;
  for (std::size_t i = 1; i < adjunctions.size() && general < 12; i += 5) {
    const auto& [n, lu] = adjunctions[i];
    for (auto& [an, a] : pool) {
      auto js = enumerate_functors(a, lu.left.dom);
      for (std::size_t k = 0; k < js.size(); k += 3) {
        auto er = right_adjoint_bruteforce(compose(lu.left, js[k]));
        if (!er) continue;
        out.push_back({"general-" + an + ">" + n + "#" + std::to_string(k), Triangle{js[k], *er, lu}});
        ++general;
        break;
      }
      if (general >= 12) break;
    }
  }
  return out;
}

std::vector<KanCase> corpus_kan_cases() {
  std::vector<std::pair<std::string, CatValuedDiagram>> ds = {
      {"2>1", arrow_diagram(cats::arrow(), cats::terminal(), constant_functor(cats::arrow(), cats::terminal(), 0))},
      {"I>2", arrow_diagram(cats::iso(), cats::arrow(), constant_functor(cats::iso(), cats::arrow(), 1))},
      {"2=2", arrow_diagram(cats::arrow(), cats::arrow(), identity_functor(cats::arrow()))},
      {"I=I", arrow_diagram(cats::iso(), cats::iso(), identity_functor(cats::iso()))},
      {"2,I", CatValuedDiagram{cats::discrete(2),
                               {cats::arrow(), cats::iso()},
                               {identity_functor(cats::arrow()), identity_functor(cats::iso())}}},
      {"1,2,I", CatValuedDiagram{cats::discrete(3),
                                 {cats::terminal(), cats::arrow(), cats::iso()},
                                 {identity_functor(cats::terminal()), identity_functor(cats::arrow()),
                                  identity_functor(cats::iso())}}},
  };
  std::vector<KanCase> out;
  auto one = cats::terminal();
  for (auto& [n, d] : ds) {
    out.push_back({n + "@id", identity_functor(d.index), d});
    Functor bang{d.index, one, std::vector<int>(d.index->objects(), 0), std::vector<int>(d.index->morphisms(), 0)};
    out.push_back({n + "@bang", bang, d});
  }
  return out;
}

int write_corpus(const std::string& dir) {
  namespace fs = std::filesystem;
  Manifest m;
  m.probes = default_probe_names();
  auto put = [&](const std::string& name, const std::string& rel, const std::string& text) {
    write_file((fs::path(dir) / rel).string(), text);
    m.documents[name] = rel;
  };
  for (auto& [n, a] : corpus_descent_diagrams())
    put("descent/" + n, "descent/" + file_safe(n) + ".json", emit_descent_diagram(a));
  for (auto& t : corpus_comonads())
    for (auto& [n, z] : corpus_pseudocoalgebras(t))
      put("coalg/" + t + "/" + n, "coalg/" + file_safe(t) + "/" + file_safe(n) + ".json", emit_pseudocoalgebra(z));
  for (auto& [n, t] : corpus_triangles())
    put("triangle/" + n, "triangle/" + file_safe(n) + ".json", emit_triangle(t));
  for (auto& k : corpus_kan_cases()) {
    put("kan/" + k.name, "kan/" + file_safe(k.name) + ".json", emit_cat_diagram(k.diagram));
    put("kan/" + k.name + "/along", "kan/" + file_safe(k.name) + ".along.json", emit_functor(k.along));
  }
  write_file((fs::path(dir) / "manifest.json").string(), emit_manifest(m));
  return static_cast<int>(m.documents.size());
}

}  // namespace bitri
