#include "oracles.hpp"

#include <map>
#include <tuple>

#include "bitri/enumerate.hpp"
#include "bitri/standard.hpp"

namespace bitri::oracle {

namespace {

DescentCone cone_from(const DescentDiagram& a, const CatPtr& apex, const Functor& d, const NatTransf& theta) {
  return DescentCone{a, apex, d, theta};
}

}  // namespace

CatPtr descent_by_cones(const DescentDiagram& a) {
  const CatPtr one = cats::terminal();
  const CatPtr two = cats::arrow();  // id0, id1, arrow 2

  // Objects: (f, rho) read off the cones from 1.
  std::map<std::pair<int, int>, int> object_of;
  CategoryData data;
  for (const Functor& d : enumerate_functors(one, a.a1)) {
    for (const NatTransf& theta : enumerate_nats(compose(a.d1, d), compose(a.d0, d), true)) {
      if (!validate_descent_cone(cone_from(a, one, d, theta), Depth::Shallow).ok()) continue;
      object_of.emplace(std::make_pair(d.obj[0], theta.comp[0]), data.objects++);
    }
  }

  // Morphisms: cones from 2, keyed by (source datum, target datum, m).
  std::map<std::tuple<int, int, int>, int> morphism_of;
  std::vector<int> under;
  auto add = [&](int s, int t, int m) {
    auto [it, fresh] = morphism_of.emplace(std::make_tuple(s, t, m), static_cast<int>(under.size()));
    if (fresh) {
      data.morphisms.push_back({s, t});
      under.push_back(m);
    }
    return it->second;
  };
  for (const Functor& d : enumerate_functors(two, a.a1)) {
    for (const NatTransf& theta : enumerate_nats(compose(a.d1, d), compose(a.d0, d), true)) {
      if (!validate_descent_cone(cone_from(a, two, d, theta), Depth::Shallow).ok()) continue;
      auto s = object_of.find({d.obj[0], theta.comp[0]});
      auto t = object_of.find({d.obj[1], theta.comp[1]});
      if (s == object_of.end() || t == object_of.end()) throw PreconditionError("cone from 2 with an endpoint that is no cone from 1");
      add(s->second, t->second, d.mor[2]);
    }
  }
  // Identities come from the cones from 2 whose arrow goes to an identity.
  data.identity.assign(data.objects, -1);
  for (auto& [key, ob] : object_of) {
    auto it = morphism_of.find({ob, ob, a.a1->id(key.first)});
    if (it == morphism_of.end()) throw PreconditionError("missing identity cone");
    data.identity[ob] = it->second;
  }
  const auto& A1 = *a.a1;
  for (std::size_t f = 0; f < under.size(); ++f)
    for (std::size_t g = 0; g < under.size(); ++g) {
      if (data.morphisms[f].dst != data.morphisms[g].src) continue;
      auto it = morphism_of.find({data.morphisms[f].src, data.morphisms[g].dst, A1.comp(under[g], under[f])});
      if (it == morphism_of.end()) throw PreconditionError("cones from 2 are not closed under composition");
      data.compose.push_back({static_cast<int>(f), static_cast<int>(g), it->second});
    }
  return FiniteCategory::from_data(data);
}

TriangleScan scan_triangles(const std::vector<CatPtr>& pool) {
  TriangleScan s;
  for (const CatPtr& b : pool)
    for (const CatPtr& c : pool)
      for (const Functor& l : enumerate_functors(b, c)) {
        auto lu = right_adjoint_bruteforce(l);
        if (!lu || !beck_precomonadic(*lu)) continue;
        ++s.precomonadic;
        for (int u : lu->unit.comp)
          if (!b->is_iso(u)) {
            ++s.precomonadic_not_ff;
            break;
          }
        for (const CatPtr& a : pool)
          for (const Functor& j : enumerate_functors(a, b)) {
            auto er = right_adjoint_bruteforce(compose(l, j));
            if (!er) continue;
            ++s.triangles;
            auto d = dubuc_right_adjoint(Triangle{j, *er, *lu});
            auto o = right_adjoint_bruteforce(j);
            if (d.adjunction && o && natural_isomorphism(d.adjunction->right, o->right)) ++s.some_some;
            else if (!d.adjunction && !o) ++s.none_none;
            else ++s.mismatches;
          }
      }
  return s;
}

}  // namespace bitri::oracle
