#include "doctest.h"

#include "bitri/corpus.hpp"
#include "bitri/enumerate.hpp"
#include "bitri/fincat.hpp"
#include "bitri/standard.hpp"

using namespace bitri;

namespace {

// Associativity and unit laws checked straight from comp().
bool lawful(const FiniteCategory& c) {
  for (int f = 0; f < c.morphisms(); ++f) {
    if (c.comp(f, c.id(c.src(f))) != f || c.comp(c.id(c.dst(f)), f) != f) return false;
    for (int g : c.out(c.dst(f)))
      for (int h : c.out(c.dst(g)))
        if (c.comp(h, c.comp(g, f)) != c.comp(c.comp(h, g), f)) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("fincat") {
  TEST_CASE("built-in categories have the expected sizes") {
    CHECK(cats::empty()->morphisms() == 0);
    CHECK(cats::terminal()->morphisms() == 1);
    CHECK(cats::arrow()->morphisms() == 3);
    CHECK(cats::iso()->morphisms() == 4);
    CHECK(cats::parallel_pair()->morphisms() == 4);
    CHECK(cats::chain(3)->morphisms() == 6);
    CHECK(cats::codiscrete(3)->morphisms() == 9);
    CHECK(cats::cyclic_group(3)->morphisms() == 3);
    for (auto& [name, c] : small_categories()) {
      CAPTURE(name);
      CHECK(validate_category(*c).ok());
      CHECK(lawful(*c));
      for (int x = 0; x < c->objects(); ++x) CHECK(c->id(x) == x);
    }
  }

  TEST_CASE("validator names the missing composite") {
    CategoryData d = cats::chain(3)->data();
    // Drop the entry for the composite 0→1→2.
    auto it = std::find_if(d.compose.begin(), d.compose.end(), [&](const std::array<int, 3>& e) {
      return !cats::chain(3)->is_identity(e[0]) && !cats::chain(3)->is_identity(e[1]);
    });
    REQUIRE(it != d.compose.end());
    const int f = (*it)[0], g = (*it)[1];
    d.compose.erase(it);
    Report r = validate_category(d);
    REQUIRE_FALSE(r.ok());
    CHECK(r.mentions("compose-missing"));
    CHECK(r.findings()[0].witness == std::vector<int>{f, g});
  }

  TEST_CASE("validator catches a non-associative table") {
    // Z3 with the power table shifted: k∘j = j+k+1 for non-identities.
    CategoryData d = cats::cyclic_group(3)->data();
    for (auto& e : d.compose)
      if (e[0] != 0 && e[1] != 0) e[2] = (e[0] + e[1] + 1) % 3;
    CHECK_FALSE(validate_category(d).ok());
  }

  TEST_CASE("equalizers by cone search") {
    auto par = cats::parallel_pair();
    CHECK_FALSE(equalizer(*par, 2, 3).has_value());
    auto eq = equalizer(*par, 2, 2);
    REQUIRE(eq.has_value());
    CHECK(par->is_iso(eq->morphism));
  }

  TEST_CASE("functor and transformation counts") {
    CHECK(enumerate_functors(cats::arrow(), cats::arrow()).size() == 3);
    CHECK(enumerate_functors(cats::iso(), cats::iso()).size() == 4);
    CHECK(enumerate_functors(cats::discrete(2), cats::arrow()).size() == 4);
    CHECK(enumerate_functors(cats::arrow(), cats::parallel_pair()).size() == 4);
    CHECK(enumerate_functors(cats::cyclic_group(2), cats::cyclic_group(3)).size() == 1);
    CHECK(enumerate_functors(cats::empty(), cats::arrow()).size() == 1);
    CHECK(enumerate_functors(cats::arrow(), cats::empty()).empty());
    auto id = identity_functor(cats::arrow());
    CHECK(enumerate_nats(id, id).size() == 1);
    auto fc = FunctorCategory::get(cats::arrow(), cats::arrow());
    CHECK(fc->size() == 3);
    CHECK(fc->cat()->morphisms() == 6);
  }

  TEST_CASE("every enumerated functor is valid and composition is associative") {
    auto cs = small_categories();
    for (std::size_t i = 1; i < cs.size(); i += 2)
      for (std::size_t j = 2; j < cs.size(); j += 3) {
        auto fs = enumerate_functors(cs[i].second, cs[j].second);
        auto gs = enumerate_functors(cs[j].second, cs[i].second);
        for (auto& f : fs) CHECK(validate_functor(f).ok());
        if (fs.empty() || gs.empty()) continue;
        const Functor& f = fs.front();
        const Functor& g = gs.back();
        CHECK(compose(f, compose(g, f)) == compose(compose(f, g), f));
        CHECK(compose(f, identity_functor(f.dom)) == f);
      }
  }

  TEST_CASE("products, opposites and isomorphism search") {
    auto p = product_category(cats::arrow(), cats::iso());
    CHECK(p->objects() == 4);
    CHECK(p->morphisms() == 12);
    CHECK(lawful(*p));
    CHECK(find_isomorphism(opposite(cats::arrow()), cats::arrow()).has_value());
    CHECK_FALSE(find_isomorphism(cats::arrow(), cats::iso()).has_value());
    for (auto& [name, c] : small_categories()) {
      CAPTURE(name);
      auto iso = find_isomorphism(opposite(opposite(c)), c);
      REQUIRE(iso.has_value());
      CHECK(is_isomorphism_functor(*iso));
    }
  }

  TEST_CASE("equivalences") {
    auto bang = constant_functor(cats::iso(), cats::terminal(), 0);
    auto eq = is_equivalence(bang);
    CHECK(eq.holds);
    REQUIRE(eq.witness.has_value());
    CHECK(validate_nattransf(eq.witness->unit).ok());
    CHECK(is_invertible(eq.witness->unit));
    CHECK_FALSE(is_equivalence(constant_functor(cats::arrow(), cats::terminal(), 0)).holds);
    CHECK_FALSE(is_isomorphism_functor(bang));
  }

  TEST_CASE("whiskering and vertical composition obey interchange") {
    auto c = cats::arrow();
    auto fs = enumerate_functors(c, c);
    for (auto& f : fs)
      for (auto& g : fs)
        for (auto& a : enumerate_nats(f, g)) {
          CHECK(validate_nattransf(a).ok());
          for (auto& h : fs) {
            CHECK(validate_nattransf(whisker(h, a)).ok());
            CHECK(validate_nattransf(whisker(a, h)).ok());
          }
          CHECK(vcompose(identity_nat(g), a) == a);
        }
  }
}
