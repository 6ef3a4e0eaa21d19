#pragma once

#include <string>
#include <vector>

#include "bitri/coalg.hpp"
#include "bitri/descent.hpp"
#include "bitri/kan.hpp"
#include "bitri/onedim.hpp"

namespace bitri {

// The fixed sample every property check and the acceptance suite runs over.
// Everything here is regenerated from a fixed seed, so two runs (and two
// machines) see the same items in the same order.

struct NamedDiagram {
  std::string name;
  DescentDiagram diagram;
};

// Categories with at most 3 objects and 8 morphisms used as vertices.
std::vector<std::pair<std::string, CatPtr>> small_categories();

// Random diagrams drawn with std::mt19937 (seed below) over small_categories,
// followed by the constant identity diagram on each small category.
inline constexpr unsigned corpus_seed = 20240611u;
std::vector<NamedDiagram> corpus_descent_diagrams(int generated = 24);

// ∅, 1, 2, I in that order, with their short names.
std::vector<std::pair<std::string, CatPtr>> corpus_carriers();
std::vector<std::string> corpus_comonads();  // identity, product:1, product:2, product:I

struct NamedCoalgebra {
  std::string name;
  PseudoCoalgebra z;
};

// All pseudocoalgebras on the corpus carriers.
std::vector<NamedCoalgebra> corpus_pseudocoalgebras(const ComonadPtr& t);
std::vector<NamedCoalgebra> corpus_pseudocoalgebras(const std::string& comonad);

struct NamedTriangle {
  std::string name;
  Triangle triangle;
};

std::vector<NamedTriangle> corpus_triangles();

struct KanCase {
  std::string name;
  Functor along;  // h: S → S'
  CatValuedDiagram diagram;
};

std::vector<KanCase> corpus_kan_cases();

// Writes every corpus item as a JSON document below dir together with a
// manifest.json naming them; returns the number of documents written.
int write_corpus(const std::string& dir);

}  // namespace bitri
