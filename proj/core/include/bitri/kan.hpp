#pragma once

#include <map>
#include <memory>
#include <vector>

#include "bitri/enumerate.hpp"
#include "bitri/fincat.hpp"

namespace bitri {

// A strict functor from a finite 1-category into Cat.
struct CatValuedDiagram {
  CatPtr index;
  std::vector<CatPtr> value;    // per object
  std::vector<Functor> action;  // per morphism
};

Report validate_cat_diagram(const CatValuedDiagram& d);

// Components alpha_a: W(a) → D(a) and invertible cells
// alpha_g: D(g)∘alpha_a ⇒ alpha_b∘W(g) for every morphism g: a → b.
struct PseudoNat {
  std::vector<Functor> component;
  std::vector<NatTransf> cell;
};

// Identity cells at identities, and alpha_{hg} = (alpha_h∗W g)∘(D h∗alpha_g).
Report validate_pseudonat(const CatValuedDiagram& w, const CatValuedDiagram& d, const PseudoNat& a);

// Gamma_a: alpha_a ⇒ beta_a with beta_g∘(D g∗Gamma_a) = (Gamma_b∗W g)∘alpha_g.
bool is_modification(const CatValuedDiagram& w, const CatValuedDiagram& d, const PseudoNat& alpha,
                     const PseudoNat& beta, const std::vector<NatTransf>& gamma);

// The category of pseudonatural transformations W ⇒ D and modifications.
// Object i is objects[i]; a morphism is the tuple of its components, one
// natural transformation per index object.
struct PsNatCategory {
  CatValuedDiagram w;
  CatValuedDiagram d;
  std::vector<PseudoNat> objects;
  std::vector<std::shared_ptr<const FunctorCategory>> slots;  // Fun(W a, D a)
  TupleCategory tuples;
  CatPtr cat;

  std::vector<NatTransf> modification(int m) const;
  int index_of(const PseudoNat& a) const;  // -1 when absent
  int find(int src, int dst, const std::vector<NatTransf>& gamma) const;

  std::map<std::vector<int>, int> lookup;
};

PsNatCategory psnat_category(const CatValuedDiagram& w, const CatValuedDiagram& d,
                             const Limits& lim = default_limits());

// alpha ↦ (alpha_a)(e) and Gamma ↦ (Gamma_a)_e, for an object e of W(a).
Functor evaluate(const PsNatCategory& p, int a, int e);

// A strict map of weights r: W' ⇒ W (each square commuting on the nose)
// induces psnat(W, D) → psnat(W', D) by precomposition.
Functor restrict_along(const PsNatCategory& from, const PsNatCategory& to, const std::vector<Functor>& r);

// Weights built from hom-sets, valued in discrete categories.
CatValuedDiagram representable_weight(const CatPtr& s, int x);  // S(x, −)
CatValuedDiagram constant_weight(const CatPtr& s, const CatPtr& value);
CatValuedDiagram precompose(const CatValuedDiagram& w, const Functor& h);  // W∘h

// Pointwise right pseudo-Kan extension of D along h, evaluated at x.
PsNatCategory ps_ran(const Functor& h, const CatValuedDiagram& d, int x, const Limits& lim = default_limits());

// x ↦ ps_ran(h, D, x) as a diagram on the codomain of h. A morphism u: x → x'
// acts by restricting along the weight map S'(x', h−) → S'(x, h−), v ↦ v∘u.
struct PsRanDiagram {
  CatValuedDiagram diagram;
  std::vector<PsNatCategory> values;
};

PsRanDiagram ps_ran_diagram(const Functor& h, const CatValuedDiagram& d, const Limits& lim = default_limits());

struct KanProbe {
  bool holds = true;
  int failing_weight = -1;
  std::string note;
};

// For each weight W on the codomain of h, compares psnat(W, PsRan) with
// psnat(W∘h, D) through evaluation at identities.
KanProbe ps_ran_universal_probe(const Functor& h, const CatValuedDiagram& d,
                                const std::vector<CatValuedDiagram>& weights, const Limits& lim = default_limits());

// The sample weights used by default: every representable and the constant
// terminal weight.
std::vector<CatValuedDiagram> sample_weights(const CatPtr& s);

}  // namespace bitri
