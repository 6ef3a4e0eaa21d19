#pragma once

#include <string>
#include <vector>

#include "bitri/descent.hpp"
#include "bitri/onedim.hpp"

namespace bitri::oracle {

// Descent object assembled from cones instead of descent data: objects are
// the valid cones with apex 1, morphisms the valid cones with apex 2, and
// composition is read off the underlying morphisms of A1. Shares no code
// with strict_descent_object beyond the enumerators and the pasting check.
CatPtr descent_by_cones(const DescentDiagram& a);

struct TriangleScan {
  int triangles = 0;
  int some_some = 0;
  int none_none = 0;
  int mismatches = 0;
  int precomonadic = 0;          // precomonadic adjunctions met
  int precomonadic_not_ff = 0;   // ... whose unit is not invertible
};

// Every triangle J: A → B, L ⊣ U: B ⇄ C over the given categories with L
// precomonadic and E = L∘J having a right adjoint; dubuc_right_adjoint is
// compared with the brute-force search on each one.
TriangleScan scan_triangles(const std::vector<CatPtr>& pool);

}  // namespace bitri::oracle
