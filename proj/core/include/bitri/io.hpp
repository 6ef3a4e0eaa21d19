#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bitri/coalg.hpp"
#include "bitri/descent.hpp"
#include "bitri/kan.hpp"
#include "bitri/onedim.hpp"

namespace bitri {

// JSON documents. Every document carries a "kind"; bundles name their
// categories once under "categories" and refer to them by name (or by one of
// the built-in names empty, 1, 2, I, parallel). Emission is canonical:
// categories are named C0, C1, ... in order of first use, keys keep a fixed
// order and scalar arrays stay on one line, so emit(parse(emit(v))) is
// byte-identical to emit(v).
//
// Parse errors are SchemaError with a JSON-pointer-like path. Only the
// category parser checks semantics (a composition table must be total and
// lawful); everything else is checked for shape and index ranges so that
// violations can be reported by the validators instead.

std::string document_kind(const std::string& text);

std::string emit_category(const CatPtr& c);
CatPtr parse_category(const std::string& text);

std::string emit_functor(const Functor& f);
Functor parse_functor(const std::string& text);

std::string emit_nat(const NatTransf& a);
NatTransf parse_nat(const std::string& text);

std::string emit_descent_diagram(const DescentDiagram& a);
DescentDiagram parse_descent_diagram(const std::string& text);

std::string emit_descent_cone(const DescentCone& k);
DescentCone parse_descent_cone(const std::string& text);

std::string emit_adjunction(const Adjunction& adj);
Adjunction parse_adjunction(const std::string& text);

std::string emit_triangle(const Triangle& t);
Triangle parse_triangle(const std::string& text);

// The comonad is stored by name; a product comonad over a category without
// a built-in name stores the factor as a category reference.
std::string emit_pseudocoalgebra(const PseudoCoalgebra& z);
PseudoCoalgebra parse_pseudocoalgebra(const std::string& text);

std::string emit_cat_diagram(const CatValuedDiagram& d);
CatValuedDiagram parse_cat_diagram(const std::string& text);

struct Manifest {
  std::string comonad;  // empty when unused
  std::optional<std::size_t> cap;
  std::vector<std::string> probes;
  std::map<std::string, std::string> documents;  // name → path
};

std::string emit_manifest(const Manifest& m);
Manifest parse_manifest(const std::string& text);
// Reads every referenced document (paths relative to base_dir), parses it
// by kind and runs the matching validator.
Report check_manifest(const Manifest& m, const std::string& base_dir);

// Parses text as a document of its declared kind and emits it again.
std::string canonicalize(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

// Comonad names accepted on the command line: the built-in names, and
// product:<path> for a product with a category read from a file.
ComonadPtr comonad_from_spec(const std::string& spec);

}  // namespace bitri
