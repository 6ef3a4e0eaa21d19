#include "doctest.h"

#include <algorithm>

#include "bitri/corpus.hpp"
#include "bitri/kan.hpp"
#include "bitri/standard.hpp"

using namespace bitri;

namespace {

int identity_position(const CatPtr& s, int x) {
  auto hom = s->hom(x, x);
  return static_cast<int>(std::find(hom.begin(), hom.end(), s->id(x)) - hom.begin());
}

bool discrete(const CatPtr& c) { return c->morphisms() == c->objects(); }

}  // namespace

TEST_SUITE("kan") {
  TEST_CASE("corpus diagrams and weights are valid") {
    for (auto& k : corpus_kan_cases()) {
      CAPTURE(k.name);
      CHECK(validate_cat_diagram(k.diagram).ok());
      CHECK(validate_functor(k.along).ok());
      for (auto& w : sample_weights(k.diagram.index)) CHECK(validate_cat_diagram(w).ok());
    }
  }

  TEST_CASE("every enumerated pseudonatural transformation is valid") {
    for (auto& k : corpus_kan_cases()) {
      if (k.name.find("@id") == std::string::npos) continue;
      CAPTURE(k.name);
      for (auto& w : sample_weights(k.diagram.index)) {
        PsNatCategory p = psnat_category(w, k.diagram);
        CHECK(validate_category(*p.cat).ok());
        for (std::size_t i = 0; i < p.objects.size(); ++i) {
          CHECK(validate_pseudonat(w, k.diagram, p.objects[i]).ok());
          CHECK(p.index_of(p.objects[i]) == static_cast<int>(i));
        }
        for (int m = 0; m < p.cat->morphisms(); ++m)
          CHECK(is_modification(w, k.diagram, p.objects[p.cat->src(m)], p.objects[p.cat->dst(m)], p.modification(m)));
      }
    }
  }

  TEST_CASE("extension along the identity is evaluation") {
    for (auto& k : corpus_kan_cases()) {
      if (k.name.find("@id") == std::string::npos) continue;
      for (int x = 0; x < k.diagram.index->objects(); ++x) {
        CAPTURE(k.name);
        CAPTURE(x);
        PsNatCategory p = ps_ran(k.along, k.diagram, x);
        Functor ev = evaluate(p, x, identity_position(k.diagram.index, x));
        CHECK(validate_functor(ev).ok());
        CHECK(is_equivalence(ev, false).holds);
      }
    }
  }

  TEST_CASE("extension to the point is the bilimit, a product for discrete index") {
    for (auto& k : corpus_kan_cases()) {
      if (k.name.find("@bang") == std::string::npos) continue;
      CAPTURE(k.name);
      PsNatCategory p = ps_ran(k.along, k.diagram, 0);
      PsNatCategory q = psnat_category(constant_weight(k.diagram.index, cats::terminal()), k.diagram);
      CHECK(same_category(p.cat, q.cat));
      if (discrete(k.diagram.index)) {
        CatPtr prod = cats::terminal();
        for (auto& v : k.diagram.value) prod = product_category(prod, v);
        CHECK(find_isomorphism(p.cat, prod).has_value());
      }
    }
  }

  TEST_CASE("universal property on the sample weights") {
    for (auto& k : corpus_kan_cases()) {
      CAPTURE(k.name);
      KanProbe r = ps_ran_universal_probe(k.along, k.diagram, sample_weights(k.along.cod));
      CHECK_MESSAGE(r.holds, r.note);
    }
  }

  TEST_CASE("the extension is itself a diagram") {
    for (auto& k : corpus_kan_cases()) {
      CAPTURE(k.name);
      PsRanDiagram r = ps_ran_diagram(k.along, k.diagram);
      CHECK(validate_cat_diagram(r.diagram).ok());
      CHECK(r.values.size() == static_cast<std::size_t>(k.along.cod->objects()));
    }
  }

  TEST_CASE("restriction along the identity weight map is the identity") {
    auto k = corpus_kan_cases().front();
    auto w = representable_weight(k.diagram.index, 0);
    PsNatCategory p = psnat_category(w, k.diagram);
    std::vector<Functor> r;
    for (auto& v : w.value) r.push_back(identity_functor(v));
    Functor res = restrict_along(p, p, r);
    CHECK(res == identity_functor(p.cat));
  }
}
