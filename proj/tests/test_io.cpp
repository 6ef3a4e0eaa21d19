#include "doctest.h"

#include <filesystem>

#include "bitri/corpus.hpp"
#include "bitri/io.hpp"
#include "bitri/standard.hpp"

using namespace bitri;
namespace fs = std::filesystem;

namespace {

const std::string& corpus_dir() {
  static const std::string dir = [] {
    fs::path p = fs::temp_directory_path() / "bitri_io_test_corpus";
    fs::remove_all(p);
    write_corpus(p.string());
    return p.string();
  }();
  return dir;
}

std::string schema_message(const std::string& text) {
  try {
    canonicalize(text);
  } catch (const SchemaError& e) {
    return e.what();
  }
  return {};
}

const char* kChain3 = R"({
  "kind": "category",
  "objects": 3,
  "morphisms": [[0, 0], [1, 1], [2, 2], [0, 1], [0, 2], [1, 2]],
  "identities": [0, 1, 2],
  "compose": [
    [0, 0, 0], [0, 3, 3], [0, 4, 4], [1, 1, 1], [1, 5, 5], [2, 2, 2],
    [3, 1, 3], [3, 5, 4], [4, 2, 4], [5, 2, 5]
  ]
})";

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("every corpus document is canonical") {
    Manifest m = parse_manifest(read_file((fs::path(corpus_dir()) / "manifest.json").string()));
    CHECK(m.documents.size() > 100);
    for (auto& [name, rel] : m.documents) {
      CAPTURE(name);
      std::string text = read_file((fs::path(corpus_dir()) / rel).string());
      CHECK(canonicalize(text) == text);
    }
    CHECK(check_manifest(m, corpus_dir()).ok());
    std::string mtext = read_file((fs::path(corpus_dir()) / "manifest.json").string());
    CHECK(emit_manifest(parse_manifest(mtext)) == mtext);
  }

  TEST_CASE("typed round trips preserve values") {
    for (auto& [name, a] : corpus_descent_diagrams(4)) {
      DescentDiagram b = parse_descent_diagram(emit_descent_diagram(a));
      CHECK(same_category(a.a1, b.a1));
      CHECK(a.d0 == b.d0);
      CHECK(a.n1 == b.n1);
    }
    for (auto& [name, z] : corpus_pseudocoalgebras("product:I")) {
      PseudoCoalgebra y = parse_pseudocoalgebra(emit_pseudocoalgebra(z));
      CHECK(y.t->name() == z.t->name());
      CHECK(y.rho == z.rho);
      CHECK(y.omega == z.omega);
    }
    for (auto& [name, t] : corpus_triangles()) {
      Triangle u = parse_triangle(emit_triangle(t));
      CHECK(u.j == t.j);
      CHECK(u.lu.unit == t.lu.unit);
      CHECK(u.er.counit == t.er.counit);
    }
    for (auto& k : corpus_kan_cases()) {
      CatValuedDiagram d = parse_cat_diagram(emit_cat_diagram(k.diagram));
      CHECK(d.action == k.diagram.action);
      CHECK(parse_functor(emit_functor(k.along)) == k.along);
    }
  }

  TEST_CASE("category documents") {
    CatPtr c = parse_category(kChain3);
    CHECK(same_category(c, cats::chain(3)));
    CHECK(parse_category(R"({"kind": "category", "objects": 0, "morphisms": [], "identities": [], "compose": []})")
              ->objects() == 0);
    CHECK(document_kind(kChain3) == "category");
  }

  TEST_CASE("a missing composite is reported with its pair") {
    std::string text = kChain3;
    const std::string entry = "[3, 5, 4], ";
    text.erase(text.find(entry), entry.size());
    std::string msg = schema_message(text);
    CHECK(msg.find("compose-missing") != std::string::npos);
    CHECK(msg.find("(3, 5)") != std::string::npos);
  }

  TEST_CASE("structural errors carry a path or a position") {
    std::string bad_range = kChain3;
    bad_range.replace(bad_range.find("[0, 2], [1, 2]"), 14, "[0, 2], [1, 7]");
    try {
      parse_category(bad_range);
      FAIL("accepted an out-of-range object");
    } catch (const SchemaError& e) {
      CHECK(e.path() == "/morphisms/5/1");
    }
    std::string msg = schema_message("{\"kind\": \"category\", \"objects\": ");
    CHECK(msg.find("byte") != std::string::npos);
    CHECK(schema_message(R"({"kind": "tesseract"})").find("unknown kind") != std::string::npos);
    CHECK(schema_message(R"({"kind": "functor", "categories": {}, "functor": {}})") != "");
  }

  TEST_CASE("built-in category names resolve") {
    const char* doc = R"({
  "kind": "functor",
  "categories": {},
  "functor": {"dom": "2", "cod": "I", "objects": [0, 1], "morphisms": [0, 1, 2]}
})";
    Functor f = parse_functor(doc);
    CHECK(same_category(f.dom, cats::arrow()));
    CHECK(same_category(f.cod, cats::iso()));
    CHECK(validate_functor(f).ok());
  }

  TEST_CASE("comonad specifications") {
    CHECK(comonad_from_spec("product:I")->name() == "product:I");
    CHECK(comonad_from_spec("identity")->name() == "identity");
    CHECK_THROWS(comonad_from_spec("product:/nonexistent/file.json"));
  }
}
