#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "bitri/fincat.hpp"

namespace bitri {

// All functors C → D, ordered lexicographically by (object map, morphism map).
std::vector<Functor> enumerate_functors(const CatPtr& c, const CatPtr& d,
                                        const Limits& lim = default_limits());

// All natural transformations F ⇒ G in lexicographic component order.
std::vector<NatTransf> enumerate_nats(const Functor& f, const Functor& g, bool invertible_only = false,
                                      const Limits& lim = default_limits());

struct TupleStore;

// Categories whose morphisms are tuples of morphisms in fixed slot categories,
// composed slot by slot. Functor categories, categories of pseudonatural
// transformations and hom-categories of coalgebras are all of this form.
class TupleCategory {
 public:
  TupleCategory() = default;
  explicit TupleCategory(std::vector<CatPtr> slots);

  // Adds an object together with its identity tuple; returns the object index.
  int add_object(const std::vector<int>& identity_tuple);
  // Returns the index of the morphism, reusing an existing equal one.
  int add_morphism(int src, int dst, const std::vector<int>& tuple);
  // Freezes the structure. An empty key makes the category unique.
  CatPtr build(const std::string& key = {});

  // Index of the morphism with this source, target and tuple, or -1.
  int find(int src, int dst, std::span<const int> tuple) const;
  std::span<const int> tuple(int m) const;
  int arity() const;
  const std::vector<CatPtr>& slots() const;
  const CatPtr& cat() const { return cat_; }

 private:
  std::shared_ptr<TupleStore> store_;
  CatPtr cat_;
};

// The category of functors X → C and natural transformations between them.
// Objects follow enumerate_functors; the identity of object i is morphism i,
// the remaining morphisms follow by (source, target, component order).
class FunctorCategory {
 public:
  static std::shared_ptr<const FunctorCategory> get(const CatPtr& x, const CatPtr& c,
                                                    const Limits& lim = default_limits());

  const CatPtr& cat() const { return tuples_.cat(); }
  const CatPtr& dom() const { return x_; }
  const CatPtr& cod() const { return c_; }
  int size() const { return static_cast<int>(functors_.size()); }

  const Functor& functor(int i) const { return functors_[i]; }
  NatTransf nat(int m) const;
  std::span<const int> components(int m) const { return tuples_.tuple(m); }

  int index_of(const Functor& f) const;    // -1 when absent
  int index_of(const NatTransf& a) const;  // -1 when absent
  int find_nat(int src, int dst, std::span<const int> comps) const { return tuples_.find(src, dst, comps); }

 private:
  FunctorCategory(CatPtr x, CatPtr c);
  CatPtr x_, c_;
  std::vector<Functor> functors_;
  std::unordered_map<std::string, int> functor_index_;
  TupleCategory tuples_;
};

std::string functor_key(const Functor& f);

}  // namespace bitri
