#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "bitri/corpus.hpp"
#include "bitri/io.hpp"
#include "bitri/standard.hpp"

using namespace bitri;
namespace fs = std::filesystem;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  Run r;
  std::string cmd = std::string(BITRI_CLI) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf;
  for (std::size_t n; (n = fread(buf.data(), 1, buf.size(), p)) > 0;) r.out.append(buf.data(), n);
  int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

const fs::path& work() {
  static const fs::path dir = [] {
    fs::path p = fs::temp_directory_path() / "bitri_cli_test";
    fs::remove_all(p);
    fs::create_directories(p);
    write_file((p / "const2.json").string(), emit_descent_diagram(constant_identity_diagram(cats::arrow())));
    for (auto& [n, z] : corpus_pseudocoalgebras("identity"))
      if (n == "2#0s") write_file((p / "strict.json").string(), emit_pseudocoalgebra(z));
    for (auto& [n, z] : corpus_pseudocoalgebras("product:I"))
      if (n == "I#4") write_file((p / "pseudoI.json").string(), emit_pseudocoalgebra(z));
    return p;
  }();
  return dir;
}

std::string at(const std::string& name) { return (work() / name).string(); }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("usage errors exit with 2") {
    CHECK(run("frobnicate").status == 2);
    CHECK(run("").status == 2);
    CHECK(run("descent").status == 2);
    CHECK(run("--threads 0 descent compute " + at("const2.json")).status == 2);
    CHECK(run("--help").status == 0);
  }

  TEST_CASE("descent compute on a constant identity diagram") {
    Run r = run("--json descent compute " + at("const2.json"));
    CHECK(r.status == 0);
    CHECK(r.out.find("\"operation\": \"desc_iso_a1\",\n      \"construction\": \"Desc ≅ A1\",\n      \"value\": true") !=
          std::string::npos);
    CHECK(r.out.find("\"comparison_iso\"") != std::string::npos);
  }

  TEST_CASE("coherence run on a strict coalgebra sets every flag") {
    Run r = run("--json coherence run --comonad identity " + at("strict.json"));
    CHECK(r.status == 0);
    for (const char* flag : {"g_exists", "preservation", "unit_equiv", "counit_equiv"}) {
      CAPTURE(flag);
      std::string needle = std::string("\"operation\": \"") + flag + "\"";
      auto pos = r.out.find(needle);
      REQUIRE(pos != std::string::npos);
      auto value = r.out.find("\"value\": ", pos);
      CHECK(r.out.compare(value + 9, 4, "true") == 0);
    }
    CHECK(run("coherence run --comonad product:2 " + at("strict.json")).status == 1);
    Run counit_only = run("--json coherence run --counit --coalgebra " + at("strict.json"));
    CHECK(counit_only.status == 0);
    CHECK(counit_only.out.find("\"unit_equiv\"") == std::string::npos);
    CHECK(counit_only.out.find("counit_equiv") != std::string::npos);
  }

  TEST_CASE("cap overflow exits with 3") {
    CHECK(run("--cap 2 --quiet coherence run " + at("pseudoI.json")).status == 3);
  }

  TEST_CASE("corrupt input is a violation") {
    std::ofstream(at("broken.json")) << "{\"kind\": \"category\", \"objects\": 2";
    Run r = run("fincat validate " + at("broken.json"));
    CHECK(r.status == 1);
    CHECK(r.out.find("byte") != std::string::npos);
    CHECK(run("fincat validate " + at("missing.json")).status == 1);
  }

  TEST_CASE("reports do not depend on the thread count") {
    for (const char* cmd : {"coherence run ", "descent compute "}) {
      std::string file = std::string(cmd) == "coherence run " ? at("pseudoI.json") : at("const2.json");
      Run a = run(std::string("--json --threads 1 ") + cmd + file);
      Run b = run(std::string("--json --threads 4 ") + cmd + file);
      CHECK(a.status == b.status);
      CHECK(a.out == b.out);
    }
  }
}
