#pragma once

#include <memory>
#include <string>
#include <vector>

#include "bitri/descent.hpp"
#include "bitri/fincat.hpp"
#include "bitri/transport.hpp"

namespace bitri {

// A strict 2-comonad on finite categories, applied on demand. The
// modifications default to identities, which is only well typed when the
// strict comonad laws hold; audit_comonad checks exactly that.
class TwoComonad : public Transport {
 public:
  virtual Functor counit(const CatPtr& c) const = 0;  // ε_C: TC → C
  virtual Functor comult(const CatPtr& c) const = 0;  // ϖ_C: TC → T²C

  // Λ_C: ϖ_{TC}∘ϖ_C ⇒ Tϖ_C∘ϖ_C
  virtual NatTransf lambda(const CatPtr& c) const;
  // δ_C: Id ⇒ Tε_C∘ϖ_C
  virtual NatTransf delta(const CatPtr& c) const;
  // s_C: ε_{TC}∘ϖ_C ⇒ Id
  virtual NatTransf s(const CatPtr& c) const;

  CatPtr t2(const CatPtr& c) const { return on_cat(on_cat(c)); }
  // The category D of a product comonad (−)×D, null otherwise.
  virtual CatPtr factor() const { return nullptr; }
};

using ComonadPtr = std::shared_ptr<const TwoComonad>;

ComonadPtr builtin_identity();
// T C = C×D, ε the first projection, ϖ(c, d) = ((c, d), d).
ComonadPtr builtin_product(const CatPtr& d);
// T C = pairs (x, y) in one connected component, ε(x, y) = x and
// ϖ(x, y) = ((x, y), (y, y)). Used as a carrier that does not preserve limits.
ComonadPtr builtin_component_pair();

// Names: identity, product:1, product:2, product:I, component-pair.
ComonadPtr comonad_by_name(const std::string& name);

struct AuditInputs {
  std::vector<CatPtr> categories;
  std::vector<Functor> functors;
  std::vector<NatTransf> nats;
};

Report audit_comonad(const TwoComonad& t, const AuditInputs& tests);

struct Preservation {
  bool strict = false;      // T(Desc A) → Desc(T∘A) is an isomorphism
  bool equivalence = false; // ... or at least an equivalence
  std::string note;
};

Preservation preserves_descent(const Transport& t, const DescentDiagram& a, const Limits& lim = default_limits());

// A pseudofunctor from a locally discrete finite category S into Cat given by
// explicit compositors comp[g∘f]: F(g)∘F(f) ⇒ F(g∘f) (indexed by the pair)
// and units unit[x]: Id ⇒ F(id_x).
struct PseudofunctorData {
  CatPtr index;
  std::vector<CatPtr> values;
  std::vector<Functor> arrows;
  std::vector<std::vector<NatTransf>> comp;  // comp[f][k] for the k-th g in out(dst f)
  std::vector<NatTransf> unit;
};

// Strict data: identity compositors, requires strict functoriality to type check.
PseudofunctorData strict_pseudofunctor(const CatPtr& index, std::vector<CatPtr> values, std::vector<Functor> arrows);
Report validate_pseudofunctor(const PseudofunctorData& p);

}  // namespace bitri
