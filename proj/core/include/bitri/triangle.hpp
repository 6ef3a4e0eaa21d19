#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bitri/coalg.hpp"
#include "bitri/descent.hpp"

namespace bitri {

// The two canonical biadjunctions of a 2-comonad: E ⊣ R between strict
// coalgebras and the base (StrictEM), L ⊣ U between pseudocoalgebras and the
// base (PseudoEM).
enum class BiadjTag { StrictEM, PseudoEM };

struct Biadjunction {
  BiadjTag tag = BiadjTag::StrictEM;
  ComonadPtr t;
};

const char* tag_name(BiadjTag tag);

// Triangle conditions at the given objects: ε_{LY}∘L(η_Y) ≅ id through the
// coalgebra's sigma and U(ε_Z)∘η_{UZ} = id.
Report validate_biadjunction(const Biadjunction& b, const std::vector<PseudoCoalgebra>& objects,
                             const std::vector<CatPtr>& base_objects);

// A Δ-shaped diagram of cofree coalgebras together with its underlying
// diagram of categories.
struct CoalgDiagram {
  StrictCoalgebra a1, a2, a3;
  DescentDiagram base;
};

CoalgDiagram build_A(const PseudoCoalgebra& z);
// Typing, invertibility and the check that every functor is a strict
// morphism of the cofree coalgebras and every cell a T-transformation.
Report validate_coalg_diagram(const CoalgDiagram& a);

struct CoherenceG {
  DescentObject desc;  // strict descent object of the underlying diagram of A_z
  DescentCone cone;    // underlying cone of Gz over that diagram
  Preservation by_t;
  Preservation by_t2;
  std::optional<StrictCoalgebra> g;
  std::string diagnostic;
};

CoherenceG coherence_G(const PseudoCoalgebra& z, const Limits& lim = default_limits());

// J(Gz) → z obtained from the identity of Gz under the hom-equivalence.
PseudoMorphism counit(const PseudoCoalgebra& z, const CoherenceG& g);
bool counit_is_equivalence(const PseudoCoalgebra& z, const CoherenceG& g, const Limits& lim = default_limits());

// The hom-equivalence strict(a, Gz) → pseudo(Ja, z).
PseudoMorphism hom_equivalence_object(const PseudoCoalgebra& z, const CoherenceG& g, const PseudoMorphism& h);
Functor hom_equivalence(const PseudoCoalgebra& z, const CoherenceG& g, const CoalgHom& strict_hom,
                        const CoalgHom& pseudo_hom);

// Comparison of the underlying cone of Gz with the descent object of the
// underlying diagram of A_z (an equivalence exactly when the forgetful
// functor preserves that descent object).
bool underlying_comparison_is_equivalence(const PseudoCoalgebra& z, const CoherenceG& g,
                                          const Limits& lim = default_limits());

// Gz with the whole isomorphism class of its last object removed. Used to
// exhibit a coalgebra whose underlying cone fails to be a descent object.
std::optional<CoherenceG> truncated(const PseudoCoalgebra& z, const CoherenceG& g);

// a → G(J a): x ↦ (rho_a x, id).
PseudoMorphism unit(const StrictCoalgebra& a, const CoherenceG& gja);
bool unit_is_equivalence(const StrictCoalgebra& a, const CoherenceG& gja, const Limits& lim = default_limits());

// A cone of shape Δ̇ in a coalgebra 2-category: apex Y, cofree vertices and
// pseudomorphisms, cells as natural transformations between the underlying
// functors.
struct CoalgCone {
  BiadjTag tag = BiadjTag::StrictEM;
  PseudoCoalgebra apex;
  PseudoCoalgebra a1, a2, a3;
  PseudoMorphism d, d0, d1, s0, p0, p1, p2;
  NatTransf theta, sigma01, sigma02, sigma12, n0, n1;

  // The cone of categories obtained by forgetting the coalgebra structure.
  DescentCone underlying() const;
};

CoalgCone build_V(const PseudoCoalgebra& y, const Biadjunction& b);
Report validate_coalg_cone(const CoalgCone& k);

// Cat-valued cone hom(X, k−) (strict homs for StrictEM).
DescentCone hom_cone(const PseudoCoalgebra& x, const CoalgCone& k, const Limits& lim = default_limits());

struct ConeProbe {
  bool effective = true;
  bool strict = true;
  int failing_probe = -1;
  std::string note;
};

// Effective descent in the coalgebra 2-category, probed by the hom-cones
// from each probe object.
ConeProbe coalg_effective_descent(const CoalgCone& k, const std::vector<PseudoCoalgebra>& probes,
                                  const Limits& lim = default_limits());

struct DCone {
  DescentCone cone;
  TDiagram base;
  CoalgHom apex_hom;
  Functor k;  // K_{X,Y}
};

DCone build_D(const PseudoCoalgebra& x, const PseudoCoalgebra& y, const Biadjunction& b,
              const Limits& lim = default_limits());

ProbeReport lemma_absolute_LV(const PseudoCoalgebra& y, const Biadjunction& b,
                              const std::vector<std::string>& probes = default_probe_names(),
                              const Limits& lim = default_limits());

// Reflection and creation of absolute effective descent along the forgetful
// functor, instance by instance.
Report pseudocomonadicity_probe(const Biadjunction& b, const std::vector<PseudoCoalgebra>& corpus,
                                const std::vector<std::string>& probes = default_probe_names(),
                                const Limits& lim = default_limits());

}  // namespace bitri
