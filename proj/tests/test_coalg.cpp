#include "doctest.h"

#include "bitri/coalg.hpp"
#include "bitri/comonad.hpp"
#include "bitri/corpus.hpp"
#include "bitri/standard.hpp"

using namespace bitri;

namespace {

struct Counts {
  const char* comonad;
  std::vector<int> per_carrier;  // over ∅, 1, 2, I
  int strict;
};

// Frozen by exhaustive enumeration; any change here is a behaviour change.
const Counts kCounts[] = {
    {"identity", {1, 1, 1, 4}, 4},
    {"product:1", {1, 1, 1, 4}, 4},
    {"product:2", {1, 2, 3, 8}, 8},
    {"product:I", {1, 2, 4, 16}, 11},
    {"component-pair", {1, 1, 3, 16}, 8},
};

}  // namespace

TEST_SUITE("coalg") {
  TEST_CASE("built-in comonads pass the audit") {
    std::vector<CatPtr> cs;
    for (auto& [n, c] : corpus_carriers()) cs.push_back(c);
    for (const char* name : {"identity", "product:1", "product:2", "product:I"}) {
      CAPTURE(name);
      auto t = comonad_by_name(name);
      CHECK(audit_comonad(*t, AuditInputs{cs, {}, {}}).ok());
    }
    CHECK(audit_comonad(*builtin_component_pair(), AuditInputs{{cats::terminal()}, {}, {}}).ok());
    CHECK_THROWS_AS(comonad_by_name("product:Z7"), PreconditionError);
  }

  TEST_CASE("pseudocoalgebra counts") {
    for (const auto& c : kCounts) {
      CAPTURE(c.comonad);
      auto t = comonad_by_name(c.comonad);
      int strict = 0;
      auto carriers = corpus_carriers();
      for (std::size_t i = 0; i < carriers.size(); ++i) {
        auto zs = enumerate_pseudocoalgebras(t, carriers[i].second);
        CHECK(static_cast<int>(zs.size()) == c.per_carrier[i]);
        for (auto& z : zs) {
          CHECK(validate_pseudocoalgebra(z).ok());
          strict += is_strict(z);
        }
      }
      CHECK(strict == c.strict);
    }
  }

  TEST_CASE("cofree coalgebras and the unit") {
    for (auto& name : corpus_comonads()) {
      auto t = comonad_by_name(name);
      for (auto& [cn, c] : corpus_carriers()) {
        CAPTURE(name);
        CAPTURE(cn);
        auto f = cofree(t, c);
        CHECK(validate_pseudocoalgebra(f).ok());
        CHECK(is_strict(f));
        CHECK(validate_strict_coalgebra(cofree_strict(t, c)).ok());
      }
      for (auto& [zn, z] : corpus_pseudocoalgebras(t)) {
        CAPTURE(zn);
        auto e = unit_eta(z);
        CHECK(validate_pseudomorphism(e).ok());
        CHECK(e.f == z.rho);
        CHECK(validate_pseudomorphism(identity_morphism(z)).ok());
        if (auto a = as_strict(z)) {
          CHECK(validate_strict_coalgebra(*a).ok());
          CHECK(validate_pseudocoalgebra(inclusion_J(*a)).ok());
        }
      }
    }
  }

  TEST_CASE("composition of pseudomorphisms is associative and unital") {
    auto t = comonad_by_name("product:2");
    auto zs = corpus_pseudocoalgebras(t);
    int checked = 0;
    for (auto& [xn, x] : zs)
      for (auto& [yn, y] : zs) {
        auto xy = hom_category_direct(x, y, {false, true});
        if (xy.f.empty()) continue;
        auto f = xy.morphism(0);
        auto g = unit_eta(y);
        auto h = identity_morphism(cofree(t, y.z));
        auto left = compose(h, compose(g, f));
        auto right = compose(compose(h, g), f);
        CHECK(left.f == right.f);
        CHECK(left.rho_f == right.rho_f);
        auto u = compose(identity_morphism(y), f);
        CHECK(u.f == f.f);
        CHECK(u.rho_f == f.rho_f);
        CHECK(validate_pseudomorphism(left).ok());
        ++checked;
      }
    CHECK(checked > 0);
  }

  TEST_CASE("hom-categories directly and as descent objects") {
    for (auto& name : corpus_comonads()) {
      auto zs = corpus_pseudocoalgebras(name);
      for (auto& [xn, x] : zs)
        for (auto& [zn, z] : zs) {
          CAPTURE(name);
          CAPTURE(xn);
          CAPTURE(zn);
          auto direct = hom_category_direct(x, z);
          auto td = t_diagram(x, z);
          REQUIRE(validate_descent_diagram(td.diagram, Depth::Shallow).ok());
          auto desc = strict_descent_object(td.diagram);
          CHECK(is_isomorphism_functor(assignment(direct, td, desc)));
          CHECK(find_isomorphism(direct.cat, hom_via_descent(x, z).desc).has_value());
        }
    }
  }

  TEST_CASE("strict homs embed into pseudo homs") {
    auto zs = corpus_pseudocoalgebras("product:I");
    for (auto& [xn, x] : zs)
      for (auto& [zn, z] : zs) {
        auto a = as_strict(x), b = as_strict(z);
        if (!a || !b) continue;
        auto sh = hom_category_strict(*a, *b);
        auto ph = hom_category_direct(x, z);
        auto k = comparison_K(sh, ph);
        CHECK(validate_functor(k).ok());
        CHECK(sh.cat->objects() <= ph.cat->objects());
      }
  }

  TEST_CASE("internal equivalences") {
    auto t = comonad_by_name("product:I");
    for (auto& [zn, z] : corpus_pseudocoalgebras(t)) {
      CAPTURE(zn);
      CHECK(is_internal_equivalence(identity_morphism(z)).holds);
      if (is_strict(z)) CHECK(is_internal_equivalence(identity_morphism(z), true).holds);
    }
  }
}
