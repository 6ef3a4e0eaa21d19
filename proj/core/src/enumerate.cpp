#include "bitri/enumerate.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <map>
#include <mutex>

#include "bitri/parallel.hpp"

namespace bitri {

namespace {

class FunctorSearch {
 public:
  FunctorSearch(const CatPtr& c, const CatPtr& d, const Limits& lim) : c_(c), d_(d), C(*c), D(*d), lim_(lim) {}

  std::vector<Functor> run() {
    obj_.assign(C.objects(), -1);
    mor_.assign(C.morphisms(), -1);
    for (int x = 0; x < C.objects(); ++x) mor_[C.id(x)] = -2;  // filled once objects are fixed
    checks_.assign(C.morphisms(), {});
    for (int f = 0; f < C.morphisms(); ++f) {
      if (C.is_identity(f)) continue;
      for (int g : C.out(C.dst(f))) {
        if (C.is_identity(g)) continue;
        const int h = C.comp(g, f);
        const int rank = std::max({f, g, C.is_identity(h) ? -1 : h});
        checks_[rank].push_back({f, g, h});
      }
    }
    for (int f = 0; f < C.morphisms(); ++f) {
      if (!C.is_identity(f)) order_.push_back(f);
    }
    objects(0);
    return std::move(found_);
  }

 private:
  void objects(int x) {
    if (x == C.objects()) {
      for (int y = 0; y < C.objects(); ++y) mor_[C.id(y)] = D.id(obj_[y]);
      morphisms(0);
      return;
    }
    for (int y = 0; y < D.objects(); ++y) {
      bool ok = true;
      for (int z = 0; z <= x && ok; ++z) {
        const int w = z == x ? y : obj_[z];
        if (!C.hom(x, z).empty() && D.hom(y, w).empty()) ok = false;
        if (!C.hom(z, x).empty() && D.hom(w, y).empty()) ok = false;
      }
      if (!ok) continue;
      obj_[x] = y;
      objects(x + 1);
    }
    obj_[x] = -1;
  }

  void morphisms(std::size_t k) {
    if (k == order_.size()) {
      found_.push_back(Functor{c_, d_, obj_, mor_});
      charge(found_.size(), lim_, "functors");
      return;
    }
    const int f = order_[k];
    for (int g : D.hom(obj_[C.src(f)], obj_[C.dst(f)])) {
      mor_[f] = g;
      bool ok = true;
      for (const auto& t : checks_[f]) {
        if (D.comp(mor_[t[1]], mor_[t[0]]) != mor_[t[2]]) {
          ok = false;
          break;
        }
      }
      if (ok) morphisms(k + 1);
    }
    mor_[f] = -1;
  }

  CatPtr c_, d_;
  const FiniteCategory& C;
  const FiniteCategory& D;
  Limits lim_;
  std::vector<int> obj_, mor_, order_;
  std::vector<std::vector<std::array<int, 3>>> checks_;
  std::vector<Functor> found_;
};

}  // namespace

std::vector<Functor> enumerate_functors(const CatPtr& c, const CatPtr& d, const Limits& lim) {
  return FunctorSearch(c, d, lim).run();
}

std::vector<NatTransf> enumerate_nats(const Functor& F, const Functor& G, bool invertible_only,
                                      const Limits& lim) {
  if (!same_category(F.dom, G.dom) || !same_category(F.cod, G.cod)) {
    throw PreconditionError("enumerate_nats: functors are not parallel");
  }
  const auto& C = *F.dom;
  const auto& D = *F.cod;
  const int n = C.objects();
  // Naturality squares become checkable once both endpoints are chosen.
  std::vector<std::vector<int>> squares(n);
  for (int f = 0; f < C.morphisms(); ++f) {
    if (C.is_identity(f)) continue;
    squares[std::max(C.src(f), C.dst(f))].push_back(f);
  }
  std::vector<NatTransf> found;
  std::vector<int> comp(n, -1);
  auto rec = [&](auto&& self, int x) -> void {
    if (x == n) {
      found.push_back(NatTransf{F, G, comp});
      charge(found.size(), lim, "natural transformations");
      return;
    }
    for (int c : D.hom(F.obj[x], G.obj[x])) {
      if (invertible_only && !D.is_iso(c)) continue;
      comp[x] = c;
      bool ok = true;
      for (int f : squares[x]) {
        const int a = C.src(f), b = C.dst(f);
        if (D.comp(G.mor[f], comp[a]) != D.comp(comp[b], F.mor[f])) {
          ok = false;
          break;
        }
      }
      if (ok) self(self, x + 1);
    }
    comp[x] = -1;
  };
  rec(rec, 0);
  return found;
}

struct TupleStore {
  std::vector<CatPtr> slots;
  std::size_t arity = 0;
  int objects = 0;
  std::vector<Arrow> arrows;
  std::vector<int> identity;
  std::vector<int> data;
  std::unordered_multimap<std::uint64_t, int> index;

  std::uint64_t hash(int src, int dst, std::span<const int> t) const {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t v) {
      h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    };
    mix(static_cast<std::uint64_t>(src));
    mix(static_cast<std::uint64_t>(dst));
    for (int v : t) mix(static_cast<std::uint64_t>(v));
    return h;
  }

  int find(int src, int dst, std::span<const int> t) const {
    auto [lo, hi] = index.equal_range(hash(src, dst, t));
    for (auto it = lo; it != hi; ++it) {
      const int m = it->second;
      if (arrows[m].src != src || arrows[m].dst != dst) continue;
      if (std::equal(t.begin(), t.end(), data.begin() + static_cast<std::ptrdiff_t>(m * arity))) return m;
    }
    return -1;
  }
};

namespace {

class TupleComposer : public Composer {
 public:
  explicit TupleComposer(std::shared_ptr<const TupleStore> s) : s_(std::move(s)) {}
  int compose(int g, int f) const override {
    const auto& s = *s_;
    // Slots may themselves be tuple categories, so no shared scratch buffer.
    std::array<int, 32> small;
    std::vector<int> large;
    int* buf = small.data();
    if (s.arity > small.size()) {
      large.resize(s.arity);
      buf = large.data();
    }
    const int* tg = s.data.data() + static_cast<std::size_t>(g) * s.arity;
    const int* tf = s.data.data() + static_cast<std::size_t>(f) * s.arity;
    for (std::size_t i = 0; i < s.arity; ++i) buf[i] = s.slots[i]->comp(tg[i], tf[i]);
    const int m = s.find(s.arrows[f].src, s.arrows[g].dst, std::span<const int>(buf, s.arity));
    if (m < 0) throw PreconditionError("tuple category is not closed under composition");
    return m;
  }

 private:
  std::shared_ptr<const TupleStore> s_;
};

std::atomic<std::uint64_t> g_unique_key{1};

}  // namespace

TupleCategory::TupleCategory(std::vector<CatPtr> slots) : store_(std::make_shared<TupleStore>()) {
  store_->arity = slots.size();
  store_->slots = std::move(slots);
}

int TupleCategory::add_object(const std::vector<int>& identity_tuple) {
  if (cat_) throw PreconditionError("tuple category already built");
  const int x = store_->objects++;
  store_->identity.push_back(-1);
  const int m = add_morphism(x, x, identity_tuple);
  store_->identity[x] = m;
  return x;
}

int TupleCategory::add_morphism(int src, int dst, const std::vector<int>& tuple) {
  if (cat_) throw PreconditionError("tuple category already built");
  auto& s = *store_;
  if (tuple.size() != s.arity) throw PreconditionError("tuple of the wrong arity");
  const int existing = s.find(src, dst, tuple);
  if (existing >= 0) return existing;
  const int m = static_cast<int>(s.arrows.size());
  s.arrows.push_back({src, dst});
  s.data.insert(s.data.end(), tuple.begin(), tuple.end());
  s.index.emplace(s.hash(src, dst, tuple), m);
  return m;
}

CatPtr TupleCategory::build(const std::string& key) {
  if (cat_) return cat_;
  const std::string k = key.empty() ? "tuple#" + std::to_string(g_unique_key.fetch_add(1)) : key;
  cat_ = FiniteCategory::from_composer(store_->objects, store_->arrows, store_->identity,
                                       std::make_shared<TupleComposer>(store_), k);
  return cat_;
}

int TupleCategory::find(int src, int dst, std::span<const int> tuple) const {
  return store_->find(src, dst, tuple);
}

std::span<const int> TupleCategory::tuple(int m) const {
  return {store_->data.data() + static_cast<std::size_t>(m) * store_->arity, store_->arity};
}

int TupleCategory::arity() const { return static_cast<int>(store_->arity); }

const std::vector<CatPtr>& TupleCategory::slots() const { return store_->slots; }

std::string functor_key(const Functor& f) {
  std::string k;
  k.reserve((f.obj.size() + f.mor.size() + 1) * sizeof(int));
  auto put = [&k](int v) { k.append(reinterpret_cast<const char*>(&v), sizeof v); };
  put(static_cast<int>(f.obj.size()));
  for (int v : f.obj) put(v);
  for (int v : f.mor) put(v);
  return k;
}

FunctorCategory::FunctorCategory(CatPtr x, CatPtr c)
    : x_(std::move(x)), c_(std::move(c)), tuples_(std::vector<CatPtr>(x_->objects(), c_)) {}

std::shared_ptr<const FunctorCategory> FunctorCategory::get(const CatPtr& x, const CatPtr& c,
                                                           const Limits& lim) {
  static std::mutex mu;
  static std::map<std::pair<std::uint64_t, std::uint64_t>, std::shared_ptr<const FunctorCategory>> cache;
  const auto key = std::make_pair(x->uid(), c->uid());
  {
    std::lock_guard lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) {
      charge(it->second->functors_.size(), lim, "functors");
      return it->second;
    }
  }
  auto fc = std::shared_ptr<FunctorCategory>(new FunctorCategory(x, c));
  fc->functors_ = enumerate_functors(x, c, lim);
  const int n = fc->size();
  for (int i = 0; i < n; ++i) {
    fc->functor_index_.emplace(functor_key(fc->functors_[i]), i);
    std::vector<int> ids(x->objects());
    for (int a = 0; a < x->objects(); ++a) ids[a] = c->id(fc->functors_[i].obj[a]);
    fc->tuples_.add_object(ids);
  }
  std::vector<std::vector<std::pair<int, std::vector<int>>>> rows(n);
  parallel_for(static_cast<std::size_t>(n), [&](std::size_t i) {
    for (int j = 0; j < n; ++j) {
      for (auto& a : enumerate_nats(fc->functors_[i], fc->functors_[j], false, lim)) {
        rows[i].emplace_back(j, std::move(a.comp));
      }
    }
  });
  for (int i = 0; i < n; ++i) {
    for (const auto& [j, comps] : rows[i]) fc->tuples_.add_morphism(i, j, comps);
    rows[i].clear();
    rows[i].shrink_to_fit();
  }
  fc->tuples_.build("fun:" + std::to_string(x->uid()) + ":" + std::to_string(c->uid()));
  std::lock_guard lock(mu);
  auto [it, inserted] = cache.emplace(key, fc);
  return it->second;
}

NatTransf FunctorCategory::nat(int m) const {
  const auto& cat = *tuples_.cat();
  auto t = tuples_.tuple(m);
  return NatTransf{functors_[cat.src(m)], functors_[cat.dst(m)], std::vector<int>(t.begin(), t.end())};
}

int FunctorCategory::index_of(const Functor& f) const {
  auto it = functor_index_.find(functor_key(f));
  return it == functor_index_.end() ? -1 : it->second;
}

int FunctorCategory::index_of(const NatTransf& a) const {
  const int s = index_of(a.src), d = index_of(a.dst);
  if (s < 0 || d < 0) return -1;
  return tuples_.find(s, d, a.comp);
}

}  // namespace bitri
