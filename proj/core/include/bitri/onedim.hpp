#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bitri/fincat.hpp"

namespace bitri {

// left: B → C, right: C → B, unit: Id_B ⇒ right∘left, counit: left∘right ⇒ Id_C.
struct Adjunction {
  Functor left;
  Functor right;
  NatTransf unit;
  NatTransf counit;
};

Report validate_adjunction(const Adjunction& adj);

// True when (e: x → src f) is an equalizer of the parallel pair (f, g).
bool is_equalizer(const FiniteCategory& c, int f, int g, int x, int e);

// For every Y in the domain of the left adjoint, (Y, η_Y) equalizes
// (η_{ULY}, UL(η_Y)).
bool beck_precomonadic(const Adjunction& adj);

// A → B → C with E = L∘J, E ⊣ R and L ⊣ U.
struct Triangle {
  Functor j;
  Adjunction er;  // left = E
  Adjunction lu;  // left = L
};

Report validate_triangle(const Triangle& t);

struct DubucResult {
  std::optional<Adjunction> adjunction;  // J ⊣ G when every equalizer exists
  int missing_object = -1;               // first Y whose equalizer is absent
  std::vector<int> equalizer_objects;    // G(Y) per Y (-1 where missing)
};

// Right adjoint of J built from equalizers of the pair
//   RL(η_Y), RL(U(μ_LY)∘η_{JRLY})∘ρ_{RLY} : RLY ⇉ RLULY.
// Throws PreconditionError when the triangle does not commute or L is not
// precomonadic.
DubucResult dubuc_right_adjoint(const Triangle& t, const Limits& lim = default_limits());

// Brute force: all functors G: B → A, counits JG ⇒ Id, units Id ⇒ GJ,
// filtered by the triangle identities. Returns the first adjunction found.
std::optional<Adjunction> right_adjoint_bruteforce(const Functor& j, const Limits& lim = default_limits());

// An invertible natural transformation F ⇒ G if one exists.
std::optional<NatTransf> natural_isomorphism(const Functor& f, const Functor& g,
                                             const Limits& lim = default_limits());

}  // namespace bitri
