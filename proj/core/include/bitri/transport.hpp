#pragma once

#include <memory>
#include <string>
#include <vector>

#include "bitri/fincat.hpp"

namespace bitri {

// A strict 2-endofunctor of finite Cat, given by its action on the cells it
// is applied to. Implementations must be pure.
class Transport {
 public:
  virtual ~Transport() = default;
  virtual std::string name() const = 0;
  virtual CatPtr on_cat(const CatPtr& c) const = 0;
  virtual Functor on_functor(const Functor& f) const = 0;
  virtual NatTransf on_nat(const NatTransf& a) const = 0;
};

using TransportPtr = std::shared_ptr<const Transport>;

TransportPtr identity_transport();
TransportPtr hom_transport(const CatPtr& x);      // Cat(X, −)
TransportPtr product_transport(const CatPtr& d);  // (−)×D
TransportPtr compose_transports(TransportPtr outer, TransportPtr inner);

// Names: id, hom1, hom2, homI, prod2, prodI.
TransportPtr probe_by_name(const std::string& name);
std::vector<std::string> default_probe_names();
std::vector<TransportPtr> probes_by_names(const std::vector<std::string>& names);

}  // namespace bitri
