#include "bitri/transport.hpp"

#include "bitri/enumerate.hpp"
#include "bitri/standard.hpp"

namespace bitri {

namespace {

class IdentityTransport : public Transport {
 public:
  std::string name() const override { return "id"; }
  CatPtr on_cat(const CatPtr& c) const override { return c; }
  Functor on_functor(const Functor& f) const override { return f; }
  NatTransf on_nat(const NatTransf& a) const override { return a; }
};

class HomTransport : public Transport {
 public:
  HomTransport(CatPtr x, std::string name) : x_(std::move(x)), name_(std::move(name)) {}
  std::string name() const override { return name_; }

  CatPtr on_cat(const CatPtr& c) const override { return FunctorCategory::get(x_, c)->cat(); }

  Functor on_functor(const Functor& f) const override {
    auto src = FunctorCategory::get(x_, f.dom);
    auto dst = FunctorCategory::get(x_, f.cod);
    Functor r{src->cat(), dst->cat(), std::vector<int>(src->size()), std::vector<int>(src->cat()->morphisms())};
    for (int i = 0; i < src->size(); ++i) r.obj[i] = dst->index_of(compose(f, src->functor(i)));
    std::vector<int> comps(x_->objects());
    const auto& cat = *src->cat();
    for (int m = 0; m < cat.morphisms(); ++m) {
      auto c = src->components(m);
      for (std::size_t a = 0; a < c.size(); ++a) comps[a] = f.mor[c[a]];
      r.mor[m] = dst->find_nat(r.obj[cat.src(m)], r.obj[cat.dst(m)], comps);
    }
    return r;
  }

  NatTransf on_nat(const NatTransf& a) const override {
    auto src = FunctorCategory::get(x_, a.src.dom);
    auto dst = FunctorCategory::get(x_, a.src.cod);
    NatTransf r{on_functor(a.src), on_functor(a.dst), std::vector<int>(src->size())};
    std::vector<int> comps(x_->objects());
    for (int i = 0; i < src->size(); ++i) {
      const auto& g = src->functor(i);
      for (int x = 0; x < x_->objects(); ++x) comps[x] = a.comp[g.obj[x]];
      r.comp[i] = dst->find_nat(r.src.obj[i], r.dst.obj[i], comps);
    }
    return r;
  }

 private:
  CatPtr x_;
  std::string name_;
};

class ProductTransport : public Transport {
 public:
  ProductTransport(CatPtr d, std::string name) : d_(std::move(d)), name_(std::move(name)) {}
  std::string name() const override { return name_; }

  CatPtr on_cat(const CatPtr& c) const override { return product_category(c, d_); }

  Functor on_functor(const Functor& f) const override {
    const int nd = d_->objects(), md = d_->morphisms();
    auto src = on_cat(f.dom), dst = on_cat(f.cod);
    Functor r{src, dst, std::vector<int>(src->objects()), std::vector<int>(src->morphisms())};
    for (int x = 0; x < src->objects(); ++x) r.obj[x] = f.obj[x / nd] * nd + x % nd;
    for (int m = 0; m < src->morphisms(); ++m) r.mor[m] = f.mor[m / md] * md + m % md;
    return r;
  }

  NatTransf on_nat(const NatTransf& a) const override {
    const int nd = d_->objects(), md = d_->morphisms();
    NatTransf r{on_functor(a.src), on_functor(a.dst), {}};
    r.comp.resize(r.src.obj.size());
    for (std::size_t x = 0; x < r.comp.size(); ++x) {
      r.comp[x] = a.comp[x / nd] * md + d_->id(static_cast<int>(x % nd));
    }
    return r;
  }

 private:
  CatPtr d_;
  std::string name_;
};

class CompositeTransport : public Transport {
 public:
  CompositeTransport(TransportPtr outer, TransportPtr inner) : outer_(std::move(outer)), inner_(std::move(inner)) {}
  std::string name() const override { return outer_->name() + "∘" + inner_->name(); }
  CatPtr on_cat(const CatPtr& c) const override { return outer_->on_cat(inner_->on_cat(c)); }
  Functor on_functor(const Functor& f) const override { return outer_->on_functor(inner_->on_functor(f)); }
  NatTransf on_nat(const NatTransf& a) const override { return outer_->on_nat(inner_->on_nat(a)); }

 private:
  TransportPtr outer_, inner_;
};

}  // namespace

TransportPtr identity_transport() { return std::make_shared<IdentityTransport>(); }

TransportPtr hom_transport(const CatPtr& x) {
  return std::make_shared<HomTransport>(x, "hom(" + std::to_string(x->objects()) + "-object)");
}

TransportPtr product_transport(const CatPtr& d) {
  return std::make_shared<ProductTransport>(d, "prod(" + std::to_string(d->objects()) + "-object)");
}

TransportPtr compose_transports(TransportPtr outer, TransportPtr inner) {
  return std::make_shared<CompositeTransport>(std::move(outer), std::move(inner));
}

TransportPtr probe_by_name(const std::string& name) {
  if (name == "id") return identity_transport();
  if (name == "hom1") return std::make_shared<HomTransport>(cats::terminal(), name);
  if (name == "hom2") return std::make_shared<HomTransport>(cats::arrow(), name);
  if (name == "homI") return std::make_shared<HomTransport>(cats::iso(), name);
  if (name == "prod2") return std::make_shared<ProductTransport>(cats::arrow(), name);
  if (name == "prodI") return std::make_shared<ProductTransport>(cats::iso(), name);
  throw PreconditionError("unknown probe '" + name + "'");
}

std::vector<std::string> default_probe_names() { return {"id", "hom1", "hom2", "prod2", "prodI"}; }

std::vector<TransportPtr> probes_by_names(const std::vector<std::string>& names) {
  std::vector<TransportPtr> out;
  for (const auto& n : names) out.push_back(probe_by_name(n));
  return out;
}

}  // namespace bitri
