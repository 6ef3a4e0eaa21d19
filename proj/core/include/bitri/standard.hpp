#pragma once

#include <functional>

#include "bitri/fincat.hpp"

// Small named categories. In all of them the identity of object x is
// morphism x.
namespace bitri::cats {

CatPtr empty();
CatPtr terminal();
CatPtr arrow();          // 2: id0, id1, a: 0→1
CatPtr iso();            // I: id0, id1, u: 0→1, v: 1→0
CatPtr parallel_pair();  // id0, id1, f, g: 0→1
CatPtr chain(int n);     // 0 → 1 → ... → n-1 as a poset
CatPtr discrete(int n);
CatPtr codiscrete(int n);
CatPtr cyclic_group(int n);  // one object, morphism k is the k-th power
CatPtr poset(int n, const std::function<bool(int, int)>& leq);

}  // namespace bitri::cats
