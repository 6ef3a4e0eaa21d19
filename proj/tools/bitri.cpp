#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bitri/coalg.hpp"
#include "bitri/corpus.hpp"
#include "bitri/descent.hpp"
#include "bitri/io.hpp"
#include "bitri/kan.hpp"
#include "bitri/onedim.hpp"
#include "bitri/parallel.hpp"
#include "bitri/triangle.hpp"

using namespace bitri;
using ojson = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kViolation = 1, kUsage = 2, kCap = 3 };

struct Options {
  std::size_t cap = 50000;
  std::string probes = "id,hom1,hom2,prod2,prodI";
  bool json = false;
  bool quiet = false;
  unsigned threads = 1;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, sep);)
    if (!item.empty()) out.push_back(item);
  return out;
}

// One report per invocation: header, then the verdicts in the order they
// were computed. Thread count is deliberately absent from the header so
// that reports do not depend on it.
class Reporter {
 public:
  Reporter(std::string command, const Options& opt) : opt_(opt) {
    header_["command"] = std::move(command);
    header_["cap"] = opt.cap;
    header_["probes"] = split(opt.probes, ',');
  }

  void input(const std::string& path) { header_["inputs"].push_back(std::filesystem::path(path).filename().string()); }

  // A verdict that counts as a violation when false.
  void check(const std::string& op, const std::string& construction, bool value) {
    add(op, construction, value);
    if (!value) ok_ = false;
  }
  // A computed value that is informative only.
  void note(const std::string& op, const std::string& construction, ojson value) {
    add(op, construction, std::move(value));
  }
  void findings(const Report& r) {
    for (auto& f : r.findings()) {
      ojson j;
      j["rule"] = f.rule;
      j["detail"] = f.detail;
      j["witness"] = f.witness;
      findings_.push_back(std::move(j));
    }
    if (!r.ok()) ok_ = false;
  }
  void error(const std::string& what) {
    error_ = what;
    ok_ = false;
  }

  int finish(int code) {
    if (code == kOk && !ok_) code = kViolation;
    ojson j;
    j["header"] = header_;
    j["verdicts"] = verdicts_;
    if (!findings_.empty()) j["findings"] = findings_;
    if (error_) j["error"] = *error_;
    j["ok"] = ok_;
    if (opt_.quiet) return code;
    if (opt_.json) {
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << header_["command"].get<std::string>() << "  (cap " << opt_.cap << ", probes " << opt_.probes << ")\n";
      for (auto& v : verdicts_)
        std::cout << "  " << v["operation"].get<std::string>() << " = " << v["value"].dump() << "   ["
                  << v["construction"].get<std::string>() << "]\n";
      for (auto& f : findings_)
        std::cout << "  ! " << f["rule"].get<std::string>() << ": " << f["detail"].get<std::string>() << "\n";
      if (error_) std::cout << "  error: " << *error_ << "\n";
      std::cout << (ok_ ? "OK" : "VIOLATION") << "\n";
    }
    return code;
  }

 private:
  void add(const std::string& op, const std::string& construction, ojson value) {
    ojson v;
    v["operation"] = op;
    v["construction"] = construction;
    v["value"] = std::move(value);
    verdicts_.push_back(std::move(v));
  }

  const Options& opt_;
  ojson header_;
  ojson verdicts_ = ojson::array();
  ojson findings_ = ojson::array();
  std::optional<std::string> error_;
  bool ok_ = true;
};

ojson size_of(const CatPtr& c) { return ojson::array({c->objects(), c->morphisms()}); }

Limits limits(const Options& opt) { return Limits{opt.cap}; }

// Runs body and turns library exceptions into exit codes.
int guarded(Reporter& rep, const std::function<void()>& body) {
  try {
    body();
  } catch (const CapExceeded& e) {
    rep.error(e.what());
    return rep.finish(kCap);
  } catch (const SchemaError& e) {
    rep.error(e.what());
    return rep.finish(kViolation);
  } catch (const PreconditionError& e) {
    rep.error(e.what());
    return rep.finish(kViolation);
  }
  return rep.finish(kOk);
}

int fincat_validate(const Options& opt, const std::string& path) {
  Reporter rep("fincat validate", opt);
  rep.input(path);
  return guarded(rep, [&] {
    std::string text = read_file(path);
    std::string kind = document_kind(text);
    rep.note("document_kind", "parse", kind);
    Manifest m;
    std::filesystem::path p(path);
    std::string base = p.parent_path().string();
    if (kind == "manifest") {
      m = parse_manifest(text);
    } else {
      m.documents["input"] = p.filename().string();
    }
    Report r = check_manifest(m, base.empty() ? "." : base);
    rep.note("documents", "parse + validate", m.documents.size());
    rep.findings(r);
    rep.check("valid", "finite-category axioms and typing", r.ok());
  });
}

int onedim_dubuc(const Options& opt, const std::string& path) {
  Reporter rep("onedim dubuc", opt);
  rep.input(path);
  return guarded(rep, [&] {
    Triangle t = parse_triangle(read_file(path));
    Report v = validate_triangle(t);
    rep.findings(v);
    if (!v.ok()) return;
    auto lim = limits(opt);
    bool pre = beck_precomonadic(t.lu);
    rep.note("beck_precomonadic", "Beck equalizer Y → ULY ⇉ ULULY", pre);
    if (!pre) {
      rep.error("L is not precomonadic; the equalizer construction does not apply");
      return;
    }
    DubucResult d = dubuc_right_adjoint(t, lim);
    auto oracle = right_adjoint_bruteforce(t.j, lim);
    rep.note("dubuc_right_adjoint", "right adjoint of J from equalizers", bool(d.adjunction));
    if (!d.adjunction) rep.note("missing_equalizer_at", "right adjoint of J from equalizers", d.missing_object);
    rep.note("equalizer_objects", "right adjoint of J from equalizers", d.equalizer_objects);
    rep.note("bruteforce_right_adjoint", "exhaustive adjoint search", bool(oracle));
    bool agree = bool(d.adjunction) == bool(oracle);
    if (agree && oracle) agree = natural_isomorphism(d.adjunction->right, oracle->right, lim).has_value();
    rep.check("agree", "G ≅ oracle right adjoint, or both absent", agree);
  });
}

int descent_compute(const Options& opt, const std::string& path, const std::string& out) {
  Reporter rep("descent compute", opt);
  rep.input(path);
  return guarded(rep, [&] {
    DescentDiagram a = parse_descent_diagram(read_file(path));
    Report v = validate_descent_diagram(a);
    rep.findings(v);
    if (!v.ok()) return;
    auto lim = limits(opt);
    DescentObject d = strict_descent_object(a, lim);
    rep.note("strict_descent_object", "category of descent data", size_of(d.desc));
    rep.note("desc_iso_a1", "Desc ≅ A1", find_isomorphism(d.desc, a.a1, lim).has_value());
    rep.check("canonical_cone_valid", "universal cone over the diagram", validate_descent_cone(d.cone).ok());
    rep.check("comparison_iso", "comparison of the universal cone", is_isomorphism_functor(comparison(d.cone, d)));
    if (!out.empty()) write_file(out, emit_category(d.desc));
  });
}

int descent_check(const Options& opt, const std::string& path, bool probe) {
  Reporter rep("descent check", opt);
  rep.input(path);
  return guarded(rep, [&] {
    DescentCone k = parse_descent_cone(read_file(path));
    Report v = validate_descent_cone(k);
    rep.findings(v);
    if (!v.ok()) return;
    auto lim = limits(opt);
    rep.note("is_strict_descent", "comparison is an isomorphism", is_strict_descent(k, lim));
    bool eff = is_effective_descent(k, lim);
    rep.check("is_effective_descent", "comparison is an equivalence", eff);
    if (probe) {
      ProbeReport pr = absolute_probe(k, probes_by_names(split(opt.probes, ',')), lim);
      for (auto& pv : pr.verdicts) {
        ojson j;
        j["effective"] = pv.effective;
        j["strict"] = pv.strict;
        if (!pv.note.empty()) j["note"] = pv.note;
        rep.note("probe:" + pv.probe, "image of the cone under the probe", j);
      }
      rep.check("absolute_probe", "effective descent after every probe", pr.all_effective());
    }
  });
}

int coalg_hom(const Options& opt, const std::string& xp, const std::string& zp) {
  Reporter rep("coalg hom", opt);
  rep.input(xp);
  rep.input(zp);
  return guarded(rep, [&] {
    PseudoCoalgebra x = parse_pseudocoalgebra(read_file(xp));
    PseudoCoalgebra z = parse_pseudocoalgebra(read_file(zp));
    Report v = validate_pseudocoalgebra(x);
    v.absorb(validate_pseudocoalgebra(z));
    rep.findings(v);
    if (!v.ok()) return;
    auto lim = limits(opt);
    CoalgHom direct = hom_category_direct(x, z, {}, lim);
    DescentObject desc = hom_via_descent(x, z, lim);
    rep.note("hom_category_direct", "pseudomorphisms and T-transformations", size_of(direct.cat));
    rep.note("hom_via_descent", "strict descent object of the hom diagram", size_of(desc.desc));
    rep.check("isomorphic", "two computations of the pseudo hom", find_isomorphism(direct.cat, desc.desc, lim).has_value());
  });
}

struct CoherenceParts {
  bool unit = false;
  bool counit = false;
};

int coherence_run(const Options& opt, const std::string& comonad, const std::string& path, CoherenceParts parts) {
  if (!parts.unit && !parts.counit) parts = {true, true};
  Reporter rep("coherence run", opt);
  rep.input(path);
  return guarded(rep, [&] {
    PseudoCoalgebra z = parse_pseudocoalgebra(read_file(path));
    if (!comonad.empty()) {
      auto t = comonad_from_spec(comonad);
      if (t->name() != z.t->name()) throw PreconditionError("document comonad '" + z.t->name() + "' differs from --comonad");
    }
    rep.note("comonad", "2-comonad", z.t->name());
    Report v = validate_pseudocoalgebra(z);
    rep.findings(v);
    if (!v.ok()) return;
    auto lim = limits(opt);
    CoherenceG g = coherence_G(z, lim);
    rep.check("g_exists", "strict coalgebra Gz from the descent object", g.g.has_value());
    rep.check("preservation", "T and T² preserve the descent object", g.by_t.strict && g.by_t2.strict);
    if (!g.diagnostic.empty()) rep.note("diagnostic", "coherence", g.diagnostic);
    if (!g.g) return;
    if (parts.unit) {
      // Informative: the strict unit can fail even when everything else holds.
      ojson unit_equiv = nullptr;
      if (auto a = as_strict(z)) unit_equiv = unit_is_equivalence(*a, coherence_G(inclusion_J(*a), lim), lim);
      rep.note("unit_equiv", "unit a → GJa is an equivalence", unit_equiv);
    }
    if (parts.counit)
      rep.check("counit_equiv", "counit JGz → z is an equivalence", counit_is_equivalence(z, g, lim));
  });
}

int kan_ran(const Options& opt, const std::string& along, const std::string& diagram, int at, bool probe) {
  Reporter rep("kan ran", opt);
  rep.input(along);
  rep.input(diagram);
  return guarded(rep, [&] {
    Functor h = parse_functor(read_file(along));
    CatValuedDiagram d = parse_cat_diagram(read_file(diagram));
    Report v = validate_functor(h);
    v.absorb(validate_cat_diagram(d));
    if (v.ok() && !same_category(h.dom, d.index)) v.fail("typing", "h does not start at the index of D");
    if (v.ok() && (at < 0 || at >= h.cod->objects())) v.fail("range", "--at is not an object of the codomain of h");
    rep.findings(v);
    if (!v.ok()) return;
    auto lim = limits(opt);
    PsNatCategory p = ps_ran(h, d, at, lim);
    rep.note("ps_ran", "pseudonatural transformations from the representable weight", size_of(p.cat));
    rep.check("valid", "finite-category axioms", validate_category(*p.cat).ok());
    if (probe) {
      KanProbe k = ps_ran_universal_probe(h, d, sample_weights(h.cod), lim);
      if (!k.note.empty()) rep.note("probe_note", "universal property", k.note);
      rep.check("universal_probe", "psnat(W, Ran) ≃ psnat(W∘h, D) on sample weights", k.holds);
    }
  });
}

int corpus_regen(const Options& opt, const std::string& dir) {
  Reporter rep("corpus regen", opt);
  return guarded(rep, [&] {
    int n = write_corpus(dir);
    rep.note("documents", "corpus", n);
    Manifest m = parse_manifest(read_file((std::filesystem::path(dir) / "manifest.json").string()));
    Report r = check_manifest(m, dir);
    rep.findings(r);
    rep.check("valid", "every document parses and validates", r.ok());
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-category workbench for descent objects, coalgebras and adjoint triangles", "bitri"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--cap", opt.cap, "Size guard for every enumeration")->capture_default_str();
  app.add_option("--probes", opt.probes, "Probe family, comma separated (id,hom1,hom2,prod2,prodI)")->capture_default_str();
  app.add_flag("--json", opt.json, "Print the machine-readable report");
  app.add_flag("--quiet", opt.quiet, "Print nothing; rely on the exit status");
  app.add_option("--threads", opt.threads, "Worker threads")->check(CLI::Range(1u, 256u))->capture_default_str();

  auto* fincat = app.add_subcommand("fincat", "Finite categories")->require_subcommand(1);
  std::string doc;
  auto* validate = fincat->add_subcommand("validate", "Validate any document or a manifest");
  validate->add_option("document", doc)->required();

  auto* onedim = app.add_subcommand("onedim", "Adjoint triangles of ordinary categories")->require_subcommand(1);
  auto* dubuc = onedim->add_subcommand("dubuc", "Right adjoint of J by equalizers, checked against brute force");
  dubuc->add_option("triangle", doc)->required();

  auto* descent = app.add_subcommand("descent", "Descent objects")->require_subcommand(1);
  std::string out;
  bool probe = false;
  auto* compute = descent->add_subcommand("compute", "Strict descent object of a diagram");
  compute->add_option("diagram", doc)->required();
  compute->add_option("--out", out, "Write the descent object as a category document");
  auto* check = descent->add_subcommand("check", "Strict/effective descent of a cone");
  check->add_option("cone", doc)->required();
  check->add_flag("--probe", probe, "Also run the probe family");

  auto* coalg = app.add_subcommand("coalg", "Pseudocoalgebras")->require_subcommand(1);
  std::string other;
  auto* hom = coalg->add_subcommand("hom", "Hom-category computed directly and as a descent object");
  hom->add_option("x", doc)->required();
  hom->add_option("z", other)->required();

  auto* coherence = app.add_subcommand("coherence", "Coherence right adjoint")->require_subcommand(1);
  std::string comonad;
  auto* run = coherence->add_subcommand("run", "G, preservation, unit and counit for one pseudocoalgebra");
  run->add_option("--comonad", comonad, "Expected comonad (identity, product:1|2|I|<file>, component-pair)");
  run->add_option("coalgebra,--coalgebra", doc, "Pseudocoalgebra document")->required();
  CoherenceParts parts;
  auto* all = run->add_flag("--all", "Unit and counit (the default)");
  run->add_flag("--unit", parts.unit, "Only the unit")->excludes(all);
  run->add_flag("--counit", parts.counit, "Only the counit")->excludes(all);

  auto* kan = app.add_subcommand("kan", "Pointwise right pseudo-Kan extensions")->require_subcommand(1);
  int at = 0;
  auto* ran = kan->add_subcommand("ran", "PsRan_h D at one object");
  ran->add_option("--along", doc, "Functor document h: S → S'")->required();
  ran->add_option("--diagram", other, "Cat-valued diagram on S")->required();
  ran->add_option("--at", at, "Object of S'")->required();
  ran->add_flag("--probe", probe, "Check the universal property on sample weights");

  auto* corpus = app.add_subcommand("corpus", "Reference corpus")->require_subcommand(1);
  auto* regen = corpus->add_subcommand("regen", "Write the corpus and its manifest");
  regen->add_option("dir", doc)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }
  set_threads(opt.threads);
  set_default_cap(opt.cap);

  if (validate->parsed()) return fincat_validate(opt, doc);
  if (dubuc->parsed()) return onedim_dubuc(opt, doc);
  if (compute->parsed()) return descent_compute(opt, doc, out);
  if (check->parsed()) return descent_check(opt, doc, probe);
  if (hom->parsed()) return coalg_hom(opt, doc, other);
  if (run->parsed()) return coherence_run(opt, comonad, doc, parts);
  if (ran->parsed()) return kan_ran(opt, doc, other, at, probe);
  if (regen->parsed()) return corpus_regen(opt, doc);
  return kUsage;
}
