#include "doctest.h"

#include "bitri/corpus.hpp"
#include "bitri/enumerate.hpp"
#include "bitri/onedim.hpp"
#include "bitri/standard.hpp"
#include "oracles.hpp"

using namespace bitri;

namespace {

Adjunction identity_adjunction(const CatPtr& c) {
  auto id = identity_functor(c);
  return Adjunction{id, id, identity_nat(id), identity_nat(id)};
}

// Relabels the objects of the domain of L by the isomorphism p: B' → B.
Functor strict_inverse(const Functor& p) {
  Functor q = p;
  std::swap(q.dom, q.cod);
  for (int x = 0; x < p.dom->objects(); ++x) q.obj[p.obj[x]] = x;
  for (int f = 0; f < p.dom->morphisms(); ++f) q.mor[p.mor[f]] = f;
  return q;
}

Adjunction relabel(const Adjunction& adj, const Functor& p, const Functor& p_inv) {
  Adjunction out;
  out.left = compose(adj.left, p);
  out.right = compose(p_inv, adj.right);
  out.unit = NatTransf{identity_functor(p.dom), compose(out.right, out.left), {}};
  for (int x = 0; x < p.dom->objects(); ++x) out.unit.comp.push_back(p_inv.mor[adj.unit.comp[p.obj[x]]]);
  out.counit = NatTransf{compose(out.left, out.right), identity_functor(adj.left.cod), adj.counit.comp};
  return out;
}

}  // namespace

TEST_SUITE("onedim") {
  TEST_CASE("identity adjunction") {
    auto adj = identity_adjunction(cats::chain(3));
    CHECK(validate_adjunction(adj).ok());
    CHECK(beck_precomonadic(adj));
  }

  TEST_CASE("a Galois connection on a three-element chain") {
    // L: chain3 → 2 sends 0 ↦ 0 and 1, 2 ↦ 1; its right adjoint picks 0 and 2.
    auto c3 = cats::chain(3);
    auto two = cats::arrow();
    Functor l;
    for (auto& f : enumerate_functors(c3, two))
      if (f.obj == std::vector<int>{0, 1, 1}) l = f;
    REQUIRE(l.dom);
    auto adj = right_adjoint_bruteforce(l);
    REQUIRE(adj.has_value());
    CHECK(validate_adjunction(*adj).ok());
    CHECK(adj->right.obj == std::vector<int>{0, 2});
    // L identifies 1 and 2, which are not isomorphic.
    CHECK_FALSE(beck_precomonadic(*adj));
  }

  TEST_CASE("perturbed unit is reported") {
    auto adj = identity_adjunction(cats::cyclic_group(2));
    adj.unit.comp[0] = 1;
    Report r = validate_adjunction(adj);
    CHECK_FALSE(r.ok());
  }

  TEST_CASE("collapsing adjunction is not precomonadic") {
    auto two = cats::arrow();
    auto one = cats::terminal();
    auto adj = right_adjoint_bruteforce(constant_functor(two, one, 0));
    REQUIRE(adj.has_value());
    CHECK(adj->right.obj == std::vector<int>{1});
    CHECK_FALSE(beck_precomonadic(*adj));
  }

  TEST_CASE("precomonadicity is invariant under relabelling the domain") {
    for (auto& [name, b] : small_categories()) {
      if (b->objects() < 2) continue;
      auto isos = enumerate_functors(b, b);
      for (auto& [cname, c] : small_categories()) {
        for (auto& l : enumerate_functors(b, c)) {
          auto adj = right_adjoint_bruteforce(l);
          if (!adj) continue;
          for (auto& p : isos) {
            if (!is_isomorphism_functor(p)) continue;
            auto p_inv = strict_inverse(p);
            CAPTURE(name);
            CAPTURE(cname);
            Adjunction moved = relabel(*adj, p, p_inv);
            REQUIRE(validate_adjunction(moved).ok());
            CHECK(beck_precomonadic(moved) == beck_precomonadic(*adj));
          }
        }
      }
    }
  }

  TEST_CASE("degenerate triangle J = E, L = Id gives G ≅ R") {
    auto c3 = cats::chain(3);
    auto two = cats::arrow();
    for (auto& e : enumerate_functors(two, c3)) {
      auto er = right_adjoint_bruteforce(e);
      if (!er) continue;
      Triangle t{e, *er, identity_adjunction(c3)};
      REQUIRE(validate_triangle(t).ok());
      auto d = dubuc_right_adjoint(t);
      REQUIRE(d.adjunction.has_value());
      CHECK(validate_adjunction(*d.adjunction).ok());
      CHECK(natural_isomorphism(d.adjunction->right, er->right).has_value());
    }
  }

  TEST_CASE("triangle J = Id, E = L gives G ≅ Id") {
    auto adj = identity_adjunction(cats::iso());
    Triangle t{identity_functor(cats::iso()), adj, adj};
    auto d = dubuc_right_adjoint(t);
    REQUIRE(d.adjunction.has_value());
    CHECK(natural_isomorphism(d.adjunction->right, identity_functor(cats::iso())).has_value());
  }

  TEST_CASE("non-commuting triangle is rejected") {
    auto two = cats::arrow();
    auto adj = identity_adjunction(two);
    Triangle t{constant_functor(two, two, 0), adj, adj};
    CHECK_FALSE(validate_triangle(t).ok());
    CHECK_THROWS_AS(dubuc_right_adjoint(t), PreconditionError);
  }

  TEST_CASE("every corpus triangle agrees with the brute-force oracle") {
    auto ts = corpus_triangles();
    CHECK(ts.size() >= 20);
    for (auto& [name, t] : ts) {
      CAPTURE(name);
      REQUIRE(validate_triangle(t).ok());
      auto d = dubuc_right_adjoint(t);
      auto o = right_adjoint_bruteforce(t.j);
      REQUIRE(bool(d.adjunction) == bool(o));
      if (o) {
        CHECK(validate_adjunction(*d.adjunction).ok());
        CHECK(natural_isomorphism(d.adjunction->right, o->right).has_value());
      }
    }
  }

  TEST_CASE("precomonadic left adjoints between finite categories are fully faithful") {
    auto s = oracle::scan_triangles({cats::terminal(), cats::arrow(), cats::iso(), cats::discrete(2),
                                     cats::parallel_pair(), cats::chain(3), cats::cyclic_group(2)});
    CHECK(s.precomonadic > 0);
    CHECK(s.precomonadic_not_ff == 0);
    CHECK(s.mismatches == 0);
    CHECK(s.triangles == s.some_some);
  }
}
