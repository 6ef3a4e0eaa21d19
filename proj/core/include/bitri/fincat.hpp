#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bitri/error.hpp"

namespace bitri {

struct Arrow {
  int src = 0;
  int dst = 0;
};

// Raw presentation of a finite category, possibly invalid. Composition
// entries are triples [f, g, g∘f].
struct CategoryData {
  int objects = 0;
  std::vector<Arrow> morphisms;
  std::vector<int> identity;
  std::vector<std::array<int, 3>> compose;
};

// Computes g∘f for categories whose table is not stored densely
// (functor categories, products, hom-categories of coalgebras).
class Composer {
 public:
  virtual ~Composer() = default;
  virtual int compose(int g, int f) const = 0;
};

class FiniteCategory;
using CatPtr = std::shared_ptr<const FiniteCategory>;

class FiniteCategory {
 public:
  int objects() const { return n_; }
  int morphisms() const { return static_cast<int>(arrows_.size()); }
  int src(int f) const { return arrows_[f].src; }
  int dst(int f) const { return arrows_[f].dst; }
  int id(int x) const { return identity_[x]; }
  bool is_identity(int f) const { return identity_[arrows_[f].src] == f; }

  std::span<const int> hom(int a, int b) const {
    const int* lo = out_data_.data() + out_off_[a];
    const int* hi = out_data_.data() + out_off_[a + 1];
    lo = std::lower_bound(lo, hi, b, [this](int f, int v) { return arrows_[f].dst < v; });
    hi = std::upper_bound(lo, hi, b, [this](int v, int f) { return v < arrows_[f].dst; });
    return {lo, hi};
  }
  std::span<const int> out(int a) const {
    return {out_data_.data() + out_off_[a], out_data_.data() + out_off_[a + 1]};
  }

  // g∘f; requires dst(f) == src(g).
  int comp(int g, int f) const {
    if (composer_) return composer_->compose(g, f);
    return after_[after_off_[f] + out_pos_[g]];
  }

  // Two-sided inverse of f, or -1.
  int inverse(int f) const { return inverse_[f]; }
  bool is_iso(int f) const { return inverse_[f] >= 0; }
  // Lowest-index isomorphism a → b, or -1.
  int first_iso(int a, int b) const;

  std::uint64_t uid() const { return uid_; }
  bool dense() const { return !composer_; }
  CategoryData data() const;

  // Builds from a total table. Throws PreconditionError when an index is out
  // of range or a composable pair is missing or listed twice; the category
  // axioms themselves are checked by validate_category.
  static CatPtr from_data(const CategoryData& data);
  // Builds a category whose composition is computed on demand. The key must
  // determine the structure completely; equal keys give the same pointer.
  static CatPtr from_composer(int n, std::vector<Arrow> arrows, std::vector<int> identity,
                              std::shared_ptr<const Composer> composer, const std::string& key);

 private:
  FiniteCategory() = default;
  void index();
  void compute_inverses();
  static CatPtr intern(std::shared_ptr<FiniteCategory> c, const std::string& key);
  bool same_table(const FiniteCategory& other) const;

  int n_ = 0;
  std::vector<Arrow> arrows_;
  std::vector<int> identity_;
  std::vector<std::size_t> out_off_;
  std::vector<int> out_data_;
  std::vector<int> out_pos_;
  std::vector<std::size_t> after_off_;
  std::vector<int> after_;
  std::shared_ptr<const Composer> composer_;
  std::vector<int> inverse_;
  std::uint64_t uid_ = 0;
};

// Pointer equality, falling back to a full structural comparison.
bool same_category(const CatPtr& a, const CatPtr& b);

struct Functor {
  CatPtr dom;
  CatPtr cod;
  std::vector<int> obj;
  std::vector<int> mor;
};

bool operator==(const Functor& a, const Functor& b);

struct NatTransf {
  Functor src;
  Functor dst;
  std::vector<int> comp;
};

bool operator==(const NatTransf& a, const NatTransf& b);

Report validate_category(const CategoryData& data);
Report validate_category(const FiniteCategory& c);
Report validate_functor(const Functor& f);
Report validate_nattransf(const NatTransf& a);

Functor identity_functor(const CatPtr& c);
Functor compose(const Functor& g, const Functor& f);  // g∘f
Functor constant_functor(const CatPtr& dom, const CatPtr& cod, int object);

NatTransf identity_nat(const Functor& f);
NatTransf vcompose(const NatTransf& beta, const NatTransf& alpha);  // beta∘alpha
NatTransf whisker(const Functor& h, const NatTransf& a);            // h*a
NatTransf whisker(const NatTransf& a, const Functor& k);            // a*k
bool is_invertible(const NatTransf& a);
std::optional<NatTransf> invert(const NatTransf& a);

struct EquivalenceWitness {
  Functor inverse;  // G
  NatTransf unit;   // Id ⇒ G∘F
  NatTransf counit; // F∘G ⇒ Id
};

struct EquivalenceResult {
  bool holds = false;
  std::string reason;  // first failing condition when !holds
  std::optional<EquivalenceWitness> witness;
  explicit operator bool() const { return holds; }
};

EquivalenceResult is_equivalence(const Functor& f, bool want_witness = true);
bool is_isomorphism_functor(const Functor& f);

struct EqualizerCone {
  int object = 0;
  int morphism = 0;
};
std::optional<EqualizerCone> equalizer(const FiniteCategory& c, int f, int g);

// Objects of C×D are numbered c·|Ob D| + d, morphisms f·|Mor D| + g.
CatPtr product_category(const CatPtr& c, const CatPtr& d, const Limits& lim = default_limits());
Functor product_projection(const CatPtr& c, const CatPtr& d, int which);
CatPtr opposite(const CatPtr& c);

struct Subcategory {
  CatPtr cat;
  Functor inclusion;
};
// Full subcategory on the listed objects, in the listed order.
Subcategory full_subcategory(const CatPtr& c, const std::vector<int>& objects);

// Isomorphism of categories by backtracking, lowest assignment first.
std::optional<Functor> find_isomorphism(const CatPtr& c, const CatPtr& d,
                                        const Limits& lim = default_limits());

}  // namespace bitri
