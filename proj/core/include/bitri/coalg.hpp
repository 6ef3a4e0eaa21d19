#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "bitri/comonad.hpp"
#include "bitri/descent.hpp"
#include "bitri/enumerate.hpp"

namespace bitri {

// rho: Z → TZ, sigma: Id ⇒ ε_Z∘rho, omega: ϖ_Z∘rho ⇒ T(rho)∘rho.
struct PseudoCoalgebra {
  ComonadPtr t;
  CatPtr z;
  Functor rho;
  NatTransf sigma;
  NatTransf omega;
};

struct StrictCoalgebra {
  ComonadPtr t;
  CatPtr z;
  Functor rho;
};

// rho_f: T(f)∘rho_src ⇒ rho_dst∘f.
struct PseudoMorphism {
  PseudoCoalgebra src;
  PseudoCoalgebra dst;
  Functor f;
  NatTransf rho_f;
};

struct TTransformation {
  PseudoMorphism src;
  PseudoMorphism dst;
  NatTransf m;
};

Report validate_pseudocoalgebra(const PseudoCoalgebra& z);
Report validate_strict_coalgebra(const StrictCoalgebra& a);
Report validate_pseudomorphism(const PseudoMorphism& f);
Report validate_ttransformation(const TTransformation& m);
bool is_strict(const PseudoCoalgebra& z);
bool is_strict(const PseudoMorphism& f);

PseudoCoalgebra cofree(const ComonadPtr& t, const CatPtr& z);
StrictCoalgebra cofree_strict(const ComonadPtr& t, const CatPtr& z);
PseudoCoalgebra inclusion_J(const StrictCoalgebra& a);
std::optional<StrictCoalgebra> as_strict(const PseudoCoalgebra& z);
CatPtr forgetful_L(const PseudoCoalgebra& z);
// (rho_z, omega_z⁻¹): z → cofree(T, Z)
PseudoMorphism unit_eta(const PseudoCoalgebra& z);

PseudoMorphism identity_morphism(const PseudoCoalgebra& x);
// (g, rho_g)∘(f, rho_f) = (g∘f, (rho_g∗f)∘(Tg∗rho_f))
PseudoMorphism compose(const PseudoMorphism& g, const PseudoMorphism& f);

// A hom-category of coalgebras. Object i is the morphism (f[i], cell[i]);
// a morphism is the tuple of components of a T-transformation.
struct CoalgHom {
  PseudoCoalgebra x;
  PseudoCoalgebra z;
  bool strict = false;
  std::vector<Functor> f;
  std::vector<NatTransf> cell;
  CatPtr cat;
  TupleCategory tuples;
  std::unordered_map<std::string, int> index;

  PseudoMorphism morphism(int i) const;
  NatTransf transformation(int m) const;
  int index_of(const Functor& g, const NatTransf& cell) const;  // -1 when absent
  int find(int src, int dst, const NatTransf& m) const;          // -1 when absent
};

struct HomOptions {
  bool strict = false;        // strict morphisms and their 2-cells only
  bool objects_only = false;  // skip the T-transformations
};

// Pseudomorphisms x → z ordered by (functor index, cell index), with all
// T-transformations between them.
CoalgHom hom_category_direct(const PseudoCoalgebra& x, const PseudoCoalgebra& z, HomOptions opt = {},
                             const Limits& lim = default_limits());
CoalgHom hom_category_strict(const StrictCoalgebra& a, const StrictCoalgebra& b, const Limits& lim = default_limits());

// The functor categories and the six functors and five cells of the descent
// diagram whose strict descent object is the pseudo hom x → z.
struct TDiagram {
  DescentDiagram diagram;
  std::shared_ptr<const FunctorCategory> a1, a2, a3;
};

TDiagram t_diagram(const PseudoCoalgebra& x, const PseudoCoalgebra& z, const Limits& lim = default_limits());
DescentObject hom_via_descent(const PseudoCoalgebra& x, const PseudoCoalgebra& z, const Limits& lim = default_limits());
// Sends (f, rho_f) to the datum (f, rho_f⁻¹); an isomorphism when both
// computations agree.
Functor assignment(const CoalgHom& direct, const TDiagram& t, const DescentObject& desc);

// K on homs: strict hom a → b into the pseudo hom J a → J b.
Functor comparison_K(const CoalgHom& strict_hom, const CoalgHom& pseudo_hom);
PseudoCoalgebra comparison_K(const StrictCoalgebra& y);

struct InternalEquivalence {
  bool holds = false;
  std::optional<PseudoMorphism> inverse;
};

// Searches for g: z → x and invertible T-transformations g∘f ≅ id, f∘g ≅ id.
// With strict set, g and the 2-cells must be strict and f itself strict.
InternalEquivalence is_internal_equivalence(const PseudoMorphism& f, bool strict = false,
                                            const Limits& lim = default_limits());

// All pseudocoalgebra structures on z, with strict ones flagged.
std::vector<PseudoCoalgebra> enumerate_pseudocoalgebras(const ComonadPtr& t, const CatPtr& z,
                                                        const Limits& lim = default_limits());

}  // namespace bitri
