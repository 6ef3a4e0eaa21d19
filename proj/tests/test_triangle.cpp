#include "doctest.h"

#include "bitri/corpus.hpp"
#include "bitri/triangle.hpp"

using namespace bitri;

namespace {

std::vector<PseudoCoalgebra> coalgebras(const std::string& name) {
  std::vector<PseudoCoalgebra> out;
  for (auto& [n, z] : corpus_pseudocoalgebras(name)) out.push_back(z);
  return out;
}

}  // namespace

TEST_SUITE("triangle") {
  TEST_CASE("A_z is a diagram of cofree coalgebras") {
    for (std::string name : {"identity", "product:2", "component-pair"}) {
      for (auto& z : coalgebras(name)) {
        // T³ of a two-object carrier is already past the cap for component-pair.
        if (name == "component-pair" && z.z->objects() > 1) continue;
        CAPTURE(name);
        CoalgDiagram a = build_A(z);
        CHECK(validate_coalg_diagram(a).ok());
        CHECK(validate_descent_diagram(a.base).ok());
      }
    }
  }

  TEST_CASE("G, counit and hom-equivalence for identity and (−)×2") {
    for (const char* name : {"identity", "product:2"}) {
      auto zs = coalgebras(name);
      for (auto& z : zs) {
        CAPTURE(name);
        CoherenceG g = coherence_G(z);
        REQUIRE_MESSAGE(g.g.has_value(), g.diagnostic);
        CHECK(g.by_t.strict);
        CHECK(g.by_t2.strict);
        CHECK(validate_strict_coalgebra(*g.g).ok());
        auto e = counit(z, g);
        CHECK(validate_pseudomorphism(e).ok());
        CHECK(counit_is_equivalence(z, g));
        CHECK(underlying_comparison_is_equivalence(z, g));
        for (auto& x : zs) {
          auto a = as_strict(x);
          if (!a) continue;
          auto phi = hom_equivalence(z, g, hom_category_strict(*a, *g.g), hom_category_direct(x, z));
          CHECK(validate_functor(phi).ok());
          CHECK(is_equivalence(phi, false).holds);
        }
      }
    }
  }

  TEST_CASE("truncating Gz breaks the counit and the underlying comparison together") {
    int truncated_cases = 0;
    for (auto& z : coalgebras("product:2")) {
      CoherenceG g = coherence_G(z);
      REQUIRE(g.g.has_value());
      auto tr = truncated(z, g);
      if (!tr) continue;
      ++truncated_cases;
      CHECK_FALSE(counit_is_equivalence(z, *tr));
      CHECK_FALSE(underlying_comparison_is_equivalence(z, *tr));
    }
    CHECK(truncated_cases == 3);
  }

  TEST_CASE("the component-pair comonad exceeds the cap on T³ of I") {
    for (auto& z : coalgebras("component-pair")) {
      if (z.z->objects() < 2 || z.z->morphisms() < 4) continue;
      CHECK_THROWS_AS(coherence_G(z), CapExceeded);
      break;
    }
  }

  TEST_CASE("unit is an equivalence on strict coalgebras") {
    for (const char* name : {"identity", "product:2"}) {
      for (auto& z : coalgebras(name)) {
        auto a = as_strict(z);
        if (!a) continue;
        CoherenceG g = coherence_G(inclusion_J(*a));
        REQUIRE(g.g.has_value());
        auto u = unit(*a, g);
        CHECK(validate_pseudomorphism(u).ok());
        CHECK(unit_is_equivalence(*a, g));
      }
    }
  }

  TEST_CASE("V_Y cones are valid and of effective descent") {
    auto t = comonad_by_name("product:2");
    auto zs = coalgebras("product:2");
    for (BiadjTag tag : {BiadjTag::StrictEM, BiadjTag::PseudoEM}) {
      Biadjunction b{tag, t};
      std::vector<PseudoCoalgebra> objects;
      for (auto& y : zs)
        if (tag == BiadjTag::PseudoEM || is_strict(y)) objects.push_back(y);
      CHECK(validate_biadjunction(b, objects, {}).ok());
      for (auto& y : zs) {
        if (tag == BiadjTag::StrictEM && !is_strict(y)) continue;
        CAPTURE(tag_name(tag));
        CoalgCone k = build_V(y, b);
        CHECK(validate_coalg_cone(k).ok());
        CHECK(validate_descent_cone(k.underlying()).ok());
        CHECK(is_effective_descent(k.underlying()));
        CHECK(lemma_absolute_LV(y, b).all_effective());
      }
    }
  }

  TEST_CASE("D cones and K agree") {
    auto t = comonad_by_name("identity");
    auto zs = coalgebras("identity");
    Biadjunction b{BiadjTag::PseudoEM, t};
    for (auto& x : zs)
      for (auto& y : zs) {
        DCone d = build_D(x, y, b);
        CHECK(validate_descent_cone(d.cone).ok());
        bool eff = is_effective_descent(d.cone);
        CHECK(eff == is_equivalence(d.k, false).holds);
        CHECK(eff);
        CHECK(is_strict_descent(d.cone) == is_isomorphism_functor(d.k));
      }
  }

  TEST_CASE("forgetful functor reflects and creates on the corpus") {
    auto t = comonad_by_name("product:2");
    auto zs = coalgebras("product:2");
    CHECK(pseudocomonadicity_probe(Biadjunction{BiadjTag::PseudoEM, t}, zs).ok());
  }
}
