#include "bitri/fincat.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace bitri {

namespace {

std::atomic<std::uint64_t> g_next_uid{1};

struct Registry {
  std::mutex mu;
  std::unordered_map<std::string, std::vector<std::weak_ptr<const FiniteCategory>>> entries;
};

Registry& registry() {
  static Registry r;
  return r;
}

std::uint64_t fnv(std::uint64_t h, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) {
    h ^= (v >> (8 * i)) & 0xffu;
    h *= 1099511628211ull;
  }
  return h;
}

std::string describe_pair(int f, int g) {
  return "(" + std::to_string(f) + "," + std::to_string(g) + ")";
}

constexpr std::size_t kMaxFindings = 256;

}  // namespace

void FiniteCategory::index() {
  const int m = morphisms();
  out_off_.assign(n_ + 1, 0);
  for (const auto& a : arrows_) ++out_off_[a.src + 1];
  for (int x = 0; x < n_; ++x) out_off_[x + 1] += out_off_[x];
  // Outgoing arrows sorted by (target, index), so that hom(a, b) is a subrange.
  std::vector<std::size_t> ofill(out_off_.begin(), out_off_.end() - 1);
  out_data_.assign(m, 0);
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [this](int f, int g) { return arrows_[f].dst < arrows_[g].dst; });
  for (int f : order) out_data_[ofill[arrows_[f].src]++] = f;
  out_pos_.assign(m, 0);
  for (int x = 0; x < n_; ++x) {
    for (std::size_t at = out_off_[x]; at < out_off_[x + 1]; ++at) {
      out_pos_[out_data_[at]] = static_cast<int>(at - out_off_[x]);
    }
  }
}

void FiniteCategory::compute_inverses() {
  inverse_.assign(morphisms(), -1);
  for (int f = 0; f < morphisms(); ++f) {
    const int a = src(f), b = dst(f);
    for (int g : hom(b, a)) {
      if (comp(g, f) == id(a) && comp(f, g) == id(b)) {
        inverse_[f] = g;
        break;
      }
    }
  }
}

int FiniteCategory::first_iso(int a, int b) const {
  for (int f : hom(a, b)) {
    if (inverse_[f] >= 0) return f;
  }
  return -1;
}

CategoryData FiniteCategory::data() const {
  CategoryData d;
  d.objects = n_;
  d.morphisms = arrows_;
  d.identity = identity_;
  for (int f = 0; f < morphisms(); ++f) {
    for (int g : out(dst(f))) d.compose.push_back({f, g, comp(g, f)});
  }
  return d;
}

bool FiniteCategory::same_table(const FiniteCategory& o) const {
  if (n_ != o.n_ || arrows_.size() != o.arrows_.size() || identity_ != o.identity_) return false;
  for (std::size_t i = 0; i < arrows_.size(); ++i) {
    if (arrows_[i].src != o.arrows_[i].src || arrows_[i].dst != o.arrows_[i].dst) return false;
  }
  if (dense() && o.dense()) return after_ == o.after_;
  for (int f = 0; f < morphisms(); ++f) {
    for (int g : out(dst(f))) {
      if (comp(g, f) != o.comp(g, f)) return false;
    }
  }
  return true;
}

CatPtr FiniteCategory::intern(std::shared_ptr<FiniteCategory> c, const std::string& key) {
  auto& reg = registry();
  std::lock_guard lock(reg.mu);
  auto& bucket = reg.entries[key];
  for (auto it = bucket.begin(); it != bucket.end();) {
    if (auto live = it->lock()) {
      if (!c->dense() || live->same_table(*c)) return live;
      ++it;
    } else {
      it = bucket.erase(it);
    }
  }
  c->uid_ = g_next_uid.fetch_add(1);
  bucket.push_back(c);
  return c;
}

CatPtr FiniteCategory::from_data(const CategoryData& data) {
  auto c = std::shared_ptr<FiniteCategory>(new FiniteCategory());
  if (data.objects < 0) throw PreconditionError("negative object count");
  c->n_ = data.objects;
  const int m = static_cast<int>(data.morphisms.size());
  for (int f = 0; f < m; ++f) {
    const auto& a = data.morphisms[f];
    if (a.src < 0 || a.src >= c->n_ || a.dst < 0 || a.dst >= c->n_) {
      throw PreconditionError("morphism " + std::to_string(f) + " has an endpoint out of range");
    }
  }
  if (static_cast<int>(data.identity.size()) != c->n_) {
    throw PreconditionError("identity list must name one morphism per object");
  }
  for (int x = 0; x < c->n_; ++x) {
    if (data.identity[x] < 0 || data.identity[x] >= m) {
      throw PreconditionError("identity of object " + std::to_string(x) + " out of range");
    }
  }
  c->arrows_ = data.morphisms;
  c->identity_ = data.identity;
  c->index();
  c->after_off_.assign(m + 1, 0);
  for (int f = 0; f < m; ++f) {
    const int d = c->arrows_[f].dst;
    c->after_off_[f + 1] = c->after_off_[f] + (c->out_off_[d + 1] - c->out_off_[d]);
  }
  c->after_.assign(c->after_off_[m], -1);
  for (const auto& t : data.compose) {
    const int f = t[0], g = t[1], h = t[2];
    if (f < 0 || f >= m || g < 0 || g >= m || h < 0 || h >= m) {
      throw PreconditionError("composite entry " + describe_pair(f, g) + " has an index out of range");
    }
    if (c->arrows_[f].dst != c->arrows_[g].src) {
      throw PreconditionError("composite entry " + describe_pair(f, g) + " is not composable");
    }
    int& slot = c->after_[c->after_off_[f] + c->out_pos_[g]];
    if (slot != -1) throw PreconditionError("composite " + describe_pair(f, g) + " listed twice");
    slot = h;
  }
  for (int f = 0; f < m; ++f) {
    for (int g : c->out(c->arrows_[f].dst)) {
      if (c->after_[c->after_off_[f] + c->out_pos_[g]] == -1) {
        throw PreconditionError("missing composite for pair " + describe_pair(f, g));
      }
    }
  }
  c->compute_inverses();
  std::uint64_t h = 1469598103934665603ull;
  h = fnv(h, static_cast<std::uint64_t>(c->n_));
  for (const auto& a : c->arrows_) h = fnv(fnv(h, a.src), a.dst);
  for (int i : c->identity_) h = fnv(h, i);
  for (int v : c->after_) h = fnv(h, static_cast<std::uint64_t>(v));
  std::ostringstream key;
  key << "dense:" << std::hex << h;
  return intern(std::move(c), key.str());
}

CatPtr FiniteCategory::from_composer(int n, std::vector<Arrow> arrows, std::vector<int> identity,
                                     std::shared_ptr<const Composer> composer, const std::string& key) {
  {
    auto& reg = registry();
    std::lock_guard lock(reg.mu);
    auto it = reg.entries.find(key);
    if (it != reg.entries.end()) {
      for (auto& w : it->second) {
        if (auto live = w.lock()) return live;
      }
    }
  }
  auto c = std::shared_ptr<FiniteCategory>(new FiniteCategory());
  c->n_ = n;
  c->arrows_ = std::move(arrows);
  c->identity_ = std::move(identity);
  c->composer_ = std::move(composer);
  c->index();
  c->compute_inverses();
  return intern(std::move(c), key);
}

bool same_category(const CatPtr& a, const CatPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->objects() != b->objects() || a->morphisms() != b->morphisms()) return false;
  for (int x = 0; x < a->objects(); ++x) {
    if (a->id(x) != b->id(x)) return false;
  }
  for (int f = 0; f < a->morphisms(); ++f) {
    if (a->src(f) != b->src(f) || a->dst(f) != b->dst(f)) return false;
  }
  for (int f = 0; f < a->morphisms(); ++f) {
    for (int g : a->out(a->dst(f))) {
      if (a->comp(g, f) != b->comp(g, f)) return false;
    }
  }
  return true;
}

bool operator==(const Functor& a, const Functor& b) {
  return a.obj == b.obj && a.mor == b.mor && same_category(a.dom, b.dom) && same_category(a.cod, b.cod);
}

bool operator==(const NatTransf& a, const NatTransf& b) {
  return a.comp == b.comp && a.src == b.src && a.dst == b.dst;
}

Report validate_category(const CategoryData& d) {
  Report r("category");
  const int n = d.objects;
  const int m = static_cast<int>(d.morphisms.size());
  bool shape_ok = n >= 0;
  for (int f = 0; f < m; ++f) {
    const auto& a = d.morphisms[f];
    if (a.src < 0 || a.src >= n || a.dst < 0 || a.dst >= n) {
      r.fail("morphism-range", "endpoint out of range", {f});
      shape_ok = false;
    }
  }
  if (static_cast<int>(d.identity.size()) != n) {
    r.fail("identity-count", "expected one identity per object");
    return r;
  }
  for (int x = 0; x < n; ++x) {
    const int i = d.identity[x];
    if (i < 0 || i >= m) {
      r.fail("identity-range", "identity index out of range", {x});
      shape_ok = false;
    } else if (d.morphisms[i].src != x || d.morphisms[i].dst != x) {
      r.fail("identity-typing", "identity is not an endomorphism of its object", {x, i});
    }
  }
  if (!shape_ok) return r;
  std::unordered_map<std::uint64_t, int> table;
  auto key = [m](int f, int g) { return static_cast<std::uint64_t>(f) * m + g; };
  for (const auto& t : d.compose) {
    const int f = t[0], g = t[1], h = t[2];
    if (f < 0 || f >= m || g < 0 || g >= m || h < 0 || h >= m) {
      r.fail("compose-range", "entry index out of range", {f, g, h});
      continue;
    }
    if (d.morphisms[f].dst != d.morphisms[g].src) {
      r.fail("compose-noncomposable", "entry for a pair that is not composable", {f, g});
      continue;
    }
    if (!table.emplace(key(f, g), h).second) {
      r.fail("compose-duplicate", "pair listed twice", {f, g});
      continue;
    }
    if (d.morphisms[h].src != d.morphisms[f].src || d.morphisms[h].dst != d.morphisms[g].dst) {
      r.fail("compose-typing", "g∘f does not run from src(f) to dst(g)", {f, g, h});
    }
  }
  std::vector<std::vector<int>> out(n);
  for (int f = 0; f < m; ++f) out[d.morphisms[f].src].push_back(f);
  bool total = true;
  for (int f = 0; f < m; ++f) {
    for (int g : out[d.morphisms[f].dst]) {
      if (!table.count(key(f, g))) {
        r.fail("compose-missing", "no entry for composable pair", {f, g});
        total = false;
      }
    }
  }
  if (!total || !r.ok()) return r;
  auto comp = [&](int g, int f) { return table.at(key(f, g)); };
  for (int f = 0; f < m; ++f) {
    if (comp(f, d.identity[d.morphisms[f].src]) != f) r.fail("identity-right", "f∘id ≠ f", {f});
    if (comp(d.identity[d.morphisms[f].dst], f) != f) r.fail("identity-left", "id∘f ≠ f", {f});
  }
  for (int f = 0; f < m && r.findings().size() < kMaxFindings; ++f) {
    for (int g : out[d.morphisms[f].dst]) {
      const int gf = comp(g, f);
      for (int h : out[d.morphisms[g].dst]) {
        if (comp(h, gf) != comp(comp(h, g), f)) {
          r.fail("associativity", "h∘(g∘f) ≠ (h∘g)∘f for triple (f,g,h)", {f, g, h});
        }
      }
    }
  }
  return r;
}

Report validate_category(const FiniteCategory& c) {
  Report r("category");
  for (int x = 0; x < c.objects(); ++x) {
    const int i = c.id(x);
    if (c.src(i) != x || c.dst(i) != x) r.fail("identity-typing", "identity is not an endomorphism", {x, i});
  }
  for (int f = 0; f < c.morphisms(); ++f) {
    for (int g : c.out(c.dst(f))) {
      const int h = c.comp(g, f);
      if (h < 0 || h >= c.morphisms() || c.src(h) != c.src(f) || c.dst(h) != c.dst(g)) {
        r.fail("compose-typing", "g∘f has the wrong endpoints", {f, g, h});
      }
    }
  }
  if (!r.ok()) return r;
  for (int f = 0; f < c.morphisms(); ++f) {
    if (c.comp(f, c.id(c.src(f))) != f) r.fail("identity-right", "f∘id ≠ f", {f});
    if (c.comp(c.id(c.dst(f)), f) != f) r.fail("identity-left", "id∘f ≠ f", {f});
  }
  for (int f = 0; f < c.morphisms() && r.findings().size() < kMaxFindings; ++f) {
    for (int g : c.out(c.dst(f))) {
      const int gf = c.comp(g, f);
      for (int h : c.out(c.dst(g))) {
        if (c.comp(h, gf) != c.comp(c.comp(h, g), f)) {
          r.fail("associativity", "h∘(g∘f) ≠ (h∘g)∘f for triple (f,g,h)", {f, g, h});
        }
      }
    }
  }
  return r;
}

Report validate_functor(const Functor& F) {
  Report r("functor");
  if (!F.dom || !F.cod) {
    r.fail("categories", "missing domain or codomain");
    return r;
  }
  const auto& C = *F.dom;
  const auto& D = *F.cod;
  if (static_cast<int>(F.obj.size()) != C.objects() || static_cast<int>(F.mor.size()) != C.morphisms()) {
    r.fail("map-size", "object or morphism map has the wrong length");
    return r;
  }
  for (int x = 0; x < C.objects(); ++x) {
    if (F.obj[x] < 0 || F.obj[x] >= D.objects()) r.fail("object-range", "image out of range", {x});
  }
  for (int f = 0; f < C.morphisms(); ++f) {
    if (F.mor[f] < 0 || F.mor[f] >= D.morphisms()) r.fail("morphism-range", "image out of range", {f});
  }
  if (!r.ok()) return r;
  for (int f = 0; f < C.morphisms(); ++f) {
    if (D.src(F.mor[f]) != F.obj[C.src(f)] || D.dst(F.mor[f]) != F.obj[C.dst(f)]) {
      r.fail("src-dst", "image of f does not run between the images of its endpoints", {f});
    }
  }
  for (int x = 0; x < C.objects(); ++x) {
    if (F.mor[C.id(x)] != D.id(F.obj[x])) r.fail("identity", "identity not preserved", {x});
  }
  if (!r.ok()) return r;
  for (int f = 0; f < C.morphisms() && r.findings().size() < kMaxFindings; ++f) {
    for (int g : C.out(C.dst(f))) {
      if (F.mor[C.comp(g, f)] != D.comp(F.mor[g], F.mor[f])) {
        r.fail("composition", "F(g∘f) ≠ F(g)∘F(f)", {f, g});
      }
    }
  }
  return r;
}

Report validate_nattransf(const NatTransf& a) {
  Report r("natural transformation");
  if (!same_category(a.src.dom, a.dst.dom) || !same_category(a.src.cod, a.dst.cod)) {
    r.fail("parallel", "source and target functors are not parallel");
    return r;
  }
  const auto& C = *a.src.dom;
  const auto& D = *a.src.cod;
  if (static_cast<int>(a.comp.size()) != C.objects()) {
    r.fail("component-count", "one component per object expected");
    return r;
  }
  for (int x = 0; x < C.objects(); ++x) {
    const int c = a.comp[x];
    if (c < 0 || c >= D.morphisms()) {
      r.fail("component-range", "component out of range", {x});
    } else if (D.src(c) != a.src.obj[x] || D.dst(c) != a.dst.obj[x]) {
      r.fail("component-typing", "component does not run F(x) → G(x)", {x});
    }
  }
  if (!r.ok()) return r;
  for (int f = 0; f < C.morphisms(); ++f) {
    const int x = C.src(f), y = C.dst(f);
    if (D.comp(a.dst.mor[f], a.comp[x]) != D.comp(a.comp[y], a.src.mor[f])) {
      r.fail("naturality", "G(f)∘α_x ≠ α_y∘F(f)", {f});
    }
  }
  return r;
}

Functor identity_functor(const CatPtr& c) {
  Functor f{c, c, {}, {}};
  f.obj.resize(c->objects());
  f.mor.resize(c->morphisms());
  std::iota(f.obj.begin(), f.obj.end(), 0);
  std::iota(f.mor.begin(), f.mor.end(), 0);
  return f;
}

Functor compose(const Functor& g, const Functor& f) {
  if (!same_category(f.cod, g.dom)) throw PreconditionError("compose: codomain/domain mismatch");
  Functor h{f.dom, g.cod, std::vector<int>(f.obj.size()), std::vector<int>(f.mor.size())};
  for (std::size_t x = 0; x < f.obj.size(); ++x) h.obj[x] = g.obj[f.obj[x]];
  for (std::size_t m = 0; m < f.mor.size(); ++m) h.mor[m] = g.mor[f.mor[m]];
  return h;
}

Functor constant_functor(const CatPtr& dom, const CatPtr& cod, int object) {
  return Functor{dom, cod, std::vector<int>(dom->objects(), object),
                 std::vector<int>(dom->morphisms(), cod->id(object))};
}

NatTransf identity_nat(const Functor& f) {
  NatTransf a{f, f, std::vector<int>(f.obj.size())};
  for (std::size_t x = 0; x < f.obj.size(); ++x) a.comp[x] = f.cod->id(f.obj[x]);
  return a;
}

NatTransf vcompose(const NatTransf& beta, const NatTransf& alpha) {
  if (!(alpha.dst == beta.src)) throw PreconditionError("vcompose: 2-cells are not composable");
  NatTransf r{alpha.src, beta.dst, std::vector<int>(alpha.comp.size())};
  const auto& D = *alpha.src.cod;
  for (std::size_t x = 0; x < alpha.comp.size(); ++x) r.comp[x] = D.comp(beta.comp[x], alpha.comp[x]);
  return r;
}

NatTransf whisker(const Functor& h, const NatTransf& a) {
  NatTransf r{compose(h, a.src), compose(h, a.dst), std::vector<int>(a.comp.size())};
  for (std::size_t x = 0; x < a.comp.size(); ++x) r.comp[x] = h.mor[a.comp[x]];
  return r;
}

NatTransf whisker(const NatTransf& a, const Functor& k) {
  NatTransf r{compose(a.src, k), compose(a.dst, k), std::vector<int>(k.obj.size())};
  for (std::size_t x = 0; x < k.obj.size(); ++x) r.comp[x] = a.comp[k.obj[x]];
  return r;
}

bool is_invertible(const NatTransf& a) {
  const auto& D = *a.src.cod;
  return std::all_of(a.comp.begin(), a.comp.end(), [&](int c) { return D.is_iso(c); });
}

std::optional<NatTransf> invert(const NatTransf& a) {
  NatTransf r{a.dst, a.src, std::vector<int>(a.comp.size())};
  const auto& D = *a.src.cod;
  for (std::size_t x = 0; x < a.comp.size(); ++x) {
    r.comp[x] = D.inverse(a.comp[x]);
    if (r.comp[x] < 0) return std::nullopt;
  }
  return r;
}

EquivalenceResult is_equivalence(const Functor& F, bool want_witness) {
  EquivalenceResult res;
  const auto& C = *F.dom;
  const auto& D = *F.cod;
  const int n = C.objects();
  std::unordered_map<std::uint64_t, int> pre;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      auto src_hom = C.hom(a, b);
      auto dst_hom = D.hom(F.obj[a], F.obj[b]);
      if (src_hom.size() > dst_hom.size()) {
        res.reason = "not faithful at (" + std::to_string(a) + "," + std::to_string(b) + ")";
        return res;
      }
      if (src_hom.size() < dst_hom.size()) {
        res.reason = "not full at (" + std::to_string(a) + "," + std::to_string(b) + ")";
        return res;
      }
      const std::uint64_t base = (static_cast<std::uint64_t>(a) * n + b) << 32;
      for (int m : src_hom) {
        if (!pre.emplace(base | static_cast<std::uint32_t>(F.mor[m]), m).second) {
          res.reason = "not faithful at (" + std::to_string(a) + "," + std::to_string(b) + ")";
          return res;
        }
      }
    }
  }
  std::vector<int> chosen(D.objects(), -1), iso(D.objects(), -1);
  for (int d = 0; d < D.objects(); ++d) {
    for (int c = 0; c < n && chosen[d] < 0; ++c) {
      const int u = D.first_iso(F.obj[c], d);
      if (u >= 0) {
        chosen[d] = c;
        iso[d] = u;
      }
    }
    if (chosen[d] < 0) {
      res.reason = "not essentially surjective at object " + std::to_string(d);
      return res;
    }
  }
  res.holds = true;
  if (!want_witness) return res;
  auto preimage = [&](int a, int b, int m) {
    return pre.at(((static_cast<std::uint64_t>(a) * n + b) << 32) | static_cast<std::uint32_t>(m));
  };
  auto dom_ptr = F.dom;
  auto cod_ptr = F.cod;
  Functor G{cod_ptr, dom_ptr, chosen, std::vector<int>(D.morphisms())};
  for (int g = 0; g < D.morphisms(); ++g) {
    const int d = D.src(g), e = D.dst(g);
    const int target = D.comp(D.inverse(iso[e]), D.comp(g, iso[d]));
    G.mor[g] = preimage(chosen[d], chosen[e], target);
  }
  NatTransf counit{compose(F, G), identity_functor(cod_ptr), iso};
  NatTransf unit{identity_functor(dom_ptr), compose(G, F), std::vector<int>(n)};
  for (int c = 0; c < n; ++c) {
    unit.comp[c] = preimage(c, chosen[F.obj[c]], D.inverse(iso[F.obj[c]]));
  }
  res.witness = EquivalenceWitness{std::move(G), std::move(unit), std::move(counit)};
  return res;
}

bool is_isomorphism_functor(const Functor& F) {
  const auto& C = *F.dom;
  const auto& D = *F.cod;
  if (C.objects() != D.objects() || C.morphisms() != D.morphisms()) return false;
  std::vector<char> seen_o(D.objects(), 0), seen_m(D.morphisms(), 0);
  for (int x : F.obj) {
    if (seen_o[x]++) return false;
  }
  for (int m : F.mor) {
    if (seen_m[m]++) return false;
  }
  return validate_functor(F).ok();
}

std::optional<EqualizerCone> equalizer(const FiniteCategory& c, int f, int g) {
  if (c.src(f) != c.src(g) || c.dst(f) != c.dst(g)) throw PreconditionError("equalizer: pair is not parallel");
  const int x0 = c.src(f);
  std::vector<EqualizerCone> cones;
  for (int x = 0; x < c.objects(); ++x) {
    for (int e : c.hom(x, x0)) {
      if (c.comp(f, e) == c.comp(g, e)) cones.push_back({x, e});
    }
  }
  for (const auto& cand : cones) {
    bool universal = true;
    for (const auto& other : cones) {
      int count = 0;
      for (int k : c.hom(other.object, cand.object)) {
        if (c.comp(cand.morphism, k) == other.morphism) ++count;
      }
      if (count != 1) {
        universal = false;
        break;
      }
    }
    if (universal) return cand;
  }
  return std::nullopt;
}

namespace {

class ProductComposer : public Composer {
 public:
  ProductComposer(CatPtr c, CatPtr d) : c_(std::move(c)), d_(std::move(d)), md_(d_->morphisms()) {}
  int compose(int g, int f) const override {
    return c_->comp(g / md_, f / md_) * md_ + d_->comp(g % md_, f % md_);
  }

 private:
  CatPtr c_, d_;
  int md_;
};

}  // namespace

CatPtr product_category(const CatPtr& c, const CatPtr& d, const Limits& lim) {
  const std::size_t nobj = static_cast<std::size_t>(c->objects()) * d->objects();
  charge(nobj, lim, "objects of a product category");
  const int nd = d->objects(), md = d->morphisms();
  std::vector<Arrow> arrows;
  arrows.reserve(static_cast<std::size_t>(c->morphisms()) * md);
  for (int f = 0; f < c->morphisms(); ++f) {
    for (int g = 0; g < md; ++g) {
      arrows.push_back({c->src(f) * nd + d->src(g), c->dst(f) * nd + d->dst(g)});
    }
  }
  std::vector<int> ids(nobj);
  for (int x = 0; x < c->objects(); ++x) {
    for (int y = 0; y < nd; ++y) ids[x * nd + y] = c->id(x) * md + d->id(y);
  }
  const std::string key = "prod:" + std::to_string(c->uid()) + ":" + std::to_string(d->uid());
  return FiniteCategory::from_composer(static_cast<int>(nobj), std::move(arrows), std::move(ids),
                                       std::make_shared<ProductComposer>(c, d), key);
}

Functor product_projection(const CatPtr& c, const CatPtr& d, int which) {
  auto p = product_category(c, d);
  const int nd = d->objects(), md = d->morphisms();
  Functor f{p, which == 0 ? c : d, std::vector<int>(p->objects()), std::vector<int>(p->morphisms())};
  for (int x = 0; x < p->objects(); ++x) f.obj[x] = which == 0 ? x / nd : x % nd;
  for (int m = 0; m < p->morphisms(); ++m) f.mor[m] = which == 0 ? m / md : m % md;
  return f;
}

CatPtr opposite(const CatPtr& c) {
  CategoryData d;
  d.objects = c->objects();
  d.identity.resize(c->objects());
  for (int x = 0; x < c->objects(); ++x) d.identity[x] = c->id(x);
  for (int f = 0; f < c->morphisms(); ++f) d.morphisms.push_back({c->dst(f), c->src(f)});
  // In the opposite category g∘f is computed as f∘g in c.
  for (int f = 0; f < c->morphisms(); ++f) {
    const int a = c->src(f);
    for (int y = 0; y < c->objects(); ++y) {
      for (int g : c->hom(y, a)) d.compose.push_back({f, g, c->comp(f, g)});
    }
  }
  return FiniteCategory::from_data(d);
}

Subcategory full_subcategory(const CatPtr& c, const std::vector<int>& objects) {
  CategoryData d;
  d.objects = static_cast<int>(objects.size());
  std::unordered_map<int, int> renum;
  std::vector<int> old_of;
  for (int i = 0; i < d.objects; ++i) {
    for (int j = 0; j < d.objects; ++j) {
      for (int m : c->hom(objects[i], objects[j])) {
        renum[m] = static_cast<int>(d.morphisms.size());
        old_of.push_back(m);
        d.morphisms.push_back({i, j});
      }
    }
  }
  for (int i = 0; i < d.objects; ++i) d.identity.push_back(renum.at(c->id(objects[i])));
  for (int f = 0; f < static_cast<int>(old_of.size()); ++f) {
    const int j = d.morphisms[f].dst;
    for (int k = 0; k < d.objects; ++k) {
      for (int g : c->hom(objects[j], objects[k])) {
        d.compose.push_back({f, renum.at(g), renum.at(c->comp(g, old_of[f]))});
      }
    }
  }
  auto sub = FiniteCategory::from_data(d);
  Functor inc{sub, c, objects, old_of};
  return {sub, std::move(inc)};
}

namespace {

class IsoSearch {
 public:
  IsoSearch(const CatPtr& c, const CatPtr& d, const Limits& lim) : c_(*c), d_(*d), lim_(lim) {}

  std::optional<std::pair<std::vector<int>, std::vector<int>>> run() {
    const int n = c_.objects();
    obj_.assign(n, -1);
    used_obj_.assign(d_.objects(), 0);
    mor_.assign(c_.morphisms(), -1);
    used_mor_.assign(d_.morphisms(), 0);
    // Checks to run once the last of {f, g, g∘f} has been assigned.
    checks_.assign(c_.morphisms(), {});
    for (int f = 0; f < c_.morphisms(); ++f) {
      for (int g : c_.out(c_.dst(f))) {
        const int h = c_.comp(g, f);
        checks_[std::max({f, g, h})].push_back({f, g, h});
      }
    }
    if (objects(0)) return std::make_pair(obj_, mor_);
    return std::nullopt;
  }

 private:
  void tick() { charge(++nodes_, lim_, "isomorphism search nodes"); }

  bool objects(int x) {
    if (x == c_.objects()) return morphisms(0);
    for (int y = 0; y < d_.objects(); ++y) {
      if (used_obj_[y]) continue;
      bool ok = true;
      obj_[x] = y;
      for (int z = 0; z <= x && ok; ++z) {
        ok = c_.hom(x, z).size() == d_.hom(y, obj_[z]).size() &&
             c_.hom(z, x).size() == d_.hom(obj_[z], y).size();
      }
      if (!ok) continue;
      tick();
      used_obj_[y] = 1;
      if (objects(x + 1)) return true;
      used_obj_[y] = 0;
    }
    obj_[x] = -1;
    return false;
  }

  bool morphisms(int f) {
    if (f == c_.morphisms()) return true;
    const int a = obj_[c_.src(f)], b = obj_[c_.dst(f)];
    for (int g : d_.hom(a, b)) {
      if (used_mor_[g]) continue;
      if (c_.is_identity(f) != d_.is_identity(g)) continue;
      mor_[f] = g;
      bool ok = true;
      for (const auto& t : checks_[f]) {
        if (d_.comp(mor_[t[1]], mor_[t[0]]) != mor_[t[2]]) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      tick();
      used_mor_[g] = 1;
      if (morphisms(f + 1)) return true;
      used_mor_[g] = 0;
    }
    mor_[f] = -1;
    return false;
  }

  const FiniteCategory& c_;
  const FiniteCategory& d_;
  Limits lim_;
  std::size_t nodes_ = 0;
  std::vector<int> obj_, used_obj_, mor_, used_mor_;
  std::vector<std::vector<std::array<int, 3>>> checks_;
};

}  // namespace

std::optional<Functor> find_isomorphism(const CatPtr& c, const CatPtr& d, const Limits& lim) {
  if (c->objects() != d->objects() || c->morphisms() != d->morphisms()) return std::nullopt;
  IsoSearch search(c, d, lim);
  auto found = search.run();
  if (!found) return std::nullopt;
  return Functor{c, d, std::move(found->first), std::move(found->second)};
}

}  // namespace bitri
