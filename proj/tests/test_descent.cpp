#include "doctest.h"

#include "bitri/corpus.hpp"
#include "bitri/descent.hpp"
#include "bitri/standard.hpp"
#include "oracles.hpp"

using namespace bitri;

namespace {

// Cone over the constant identity diagram on 1 with apex x.
DescentCone constant_cone_on_one(const CatPtr& x) {
  DescentDiagram a = constant_identity_diagram(cats::terminal());
  Functor d = constant_functor(x, cats::terminal(), 0);
  Functor dd = compose(a.d1, d);
  return DescentCone{a, x, d, identity_nat(dd)};
}

}  // namespace

TEST_SUITE("descent") {
  TEST_CASE("corpus diagrams are valid and enough of them are non-trivial") {
    auto ds = corpus_descent_diagrams();
    CHECK(ds.size() >= 30);
    int generated = 0, nontrivial = 0;
    for (auto& [name, a] : ds) {
      CAPTURE(name);
      CHECK(validate_descent_diagram(a).ok());
      CHECK(a.a1->objects() <= 3);
      CHECK(a.a2->morphisms() <= 8);
      if (name.rfind("gen", 0) == 0) {
        ++generated;
        if (strict_descent_object(a).desc->objects() > 0) ++nontrivial;
      }
    }
    CHECK(generated >= 20);
    CHECK(nontrivial >= 5);
  }

  TEST_CASE("corpus generation is reproducible") {
    auto a = corpus_descent_diagrams();
    auto b = corpus_descent_diagrams();
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].name == b[i].name);
      CHECK(a[i].diagram.d0 == b[i].diagram.d0);
      CHECK(a[i].diagram.sigma02 == b[i].diagram.sigma02);
    }
  }

  TEST_CASE("strict descent object matches the cone-based oracle") {
    for (auto& [name, a] : corpus_descent_diagrams()) {
      CAPTURE(name);
      DescentObject d = strict_descent_object(a);
      CatPtr o = oracle::descent_by_cones(a);
      CHECK(d.desc->objects() == o->objects());
      CHECK(d.desc->morphisms() == o->morphisms());
      CHECK(find_isomorphism(d.desc, o).has_value());
    }
  }

  TEST_CASE("every object of the descent object is a descent datum") {
    for (auto& [name, a] : corpus_descent_diagrams()) {
      CAPTURE(name);
      DescentObject d = strict_descent_object(a);
      CHECK(validate_category(*d.desc).ok());
      for (std::size_t i = 0; i < d.data.size(); ++i) {
        std::string why;
        CHECK_MESSAGE(is_descent_datum(a, d.data[i].f, d.data[i].rho, &why), why);
        CHECK(d.index_of(d.data[i].f, d.data[i].rho) == static_cast<int>(i));
      }
      CHECK(validate_descent_cone(d.cone).ok());
      CHECK(check_cone_pointwise(d.cone).ok());
      CHECK(is_strict_descent(d.cone));
    }
  }

  TEST_CASE("constant identity diagram has its own vertex as descent object") {
    for (auto& [name, c] : small_categories()) {
      CAPTURE(name);
      DescentObject d = strict_descent_object(constant_identity_diagram(c));
      CHECK(find_isomorphism(d.desc, c).has_value());
      DescentCone k = constant_identity_cone(c);
      CHECK(validate_descent_cone(k).ok());
      CHECK(is_strict_descent(k));
      CHECK(is_effective_descent(k));
    }
  }

  TEST_CASE("an isomorphic copy of a datum is effective but not strict") {
    DescentCone k = constant_cone_on_one(cats::iso());
    REQUIRE(validate_descent_cone(k).ok());
    CHECK(is_effective_descent(k));
    CHECK_FALSE(is_strict_descent(k));
  }

  TEST_CASE("a non-effective cone already fails the identity probe") {
    DescentCone k = constant_cone_on_one(cats::arrow());
    REQUIRE(validate_descent_cone(k).ok());
    CHECK_FALSE(is_effective_descent(k));
    ProbeReport r = absolute_probe(k, probes_by_names({"id"}));
    REQUIRE(r.verdicts.size() == 1);
    CHECK_FALSE(r.verdicts[0].effective);
  }

  TEST_CASE("mutated cone cell is rejected") {
    DescentDiagram a = constant_identity_diagram(cats::cyclic_group(2));
    DescentCone k = constant_identity_cone(cats::cyclic_group(2));
    k.theta.comp[0] = 1;  // the generator instead of the identity
    CHECK_FALSE(validate_descent_cone(k).ok());
    CHECK_FALSE(check_cone_pointwise(k).ok());
  }

  TEST_CASE("canonical cones survive the default probes") {
    auto probes = probes_by_names(default_probe_names());
    for (auto& [name, a] : corpus_descent_diagrams()) {
      if (name.rfind("const-", 0) != 0) continue;
      CAPTURE(name);
      DescentObject d = strict_descent_object(a);
      ProbeReport r = absolute_probe(d.cone, probes);
      CHECK(r.all_effective());
      CHECK(universal_property_probe(a, d.cone, {cats::terminal(), cats::arrow(), cats::iso()}));
    }
  }

  TEST_CASE("transport of diagrams keeps them valid") {
    auto probes = probes_by_names(default_probe_names());
    auto ds = corpus_descent_diagrams(6);
    for (auto& [name, a] : ds) {
      for (auto& p : probes) {
        CAPTURE(name);
        CAPTURE(p->name());
        CHECK(validate_descent_diagram(map_diagram(*p, a), Depth::Shallow).ok());
      }
    }
  }
}
