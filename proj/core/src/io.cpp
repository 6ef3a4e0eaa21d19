#include "bitri/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "bitri/comonad.hpp"
#include "bitri/standard.hpp"

namespace bitri {

namespace {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

// ---------------------------------------------------------------- output

bool scalar_array(const ojson& j) {
  for (const auto& e : j) {
    if (e.is_structured()) return false;
  }
  return true;
}

void dump(const ojson& j, int indent, std::string& out) {
  const std::string pad(indent, ' ');
  const std::string inner(indent + 2, ' ');
  if (j.is_object()) {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!first) out += ",\n";
      first = false;
      out += inner + json(it.key()).dump() + ": ";
      dump(it.value(), indent + 2, out);
    }
    out += "\n" + pad + "}";
  } else if (j.is_array()) {
    if (scalar_array(j)) {
      out += "[";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ", ";
        out += j[i].dump();
      }
      out += "]";
      return;
    }
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) out += ",\n";
      out += inner;
      dump(j[i], indent + 2, out);
    }
    out += "\n" + pad + "]";
  } else {
    out += j.dump();
  }
}

std::string render(const ojson& j) {
  std::string out;
  dump(j, 0, out);
  out += "\n";
  return out;
}

ojson category_json(const FiniteCategory& c) {
  const CategoryData d = c.data();
  ojson j;
  j["objects"] = d.objects;
  ojson mors = ojson::array();
  for (const auto& a : d.morphisms) mors.push_back(ojson::array({a.src, a.dst}));
  j["morphisms"] = mors;
  j["identities"] = d.identity;
  ojson table = ojson::array();
  for (const auto& e : d.compose) table.push_back(ojson::array({e[0], e[1], e[2]}));
  j["compose"] = table;
  return j;
}

class Writer {
 public:
  std::string ref(const CatPtr& c) {
    for (std::size_t i = 0; i < cats_.size(); ++i) {
      if (same_category(cats_[i], c)) return "C" + std::to_string(i);
    }
    cats_.push_back(c);
    return "C" + std::to_string(cats_.size() - 1);
  }

  ojson maps(const Functor& f) {
    ojson j;
    j["objects"] = f.obj;
    j["morphisms"] = f.mor;
    return j;
  }

  ojson functor(const Functor& f) {
    ojson j;
    j["dom"] = ref(f.dom);
    j["cod"] = ref(f.cod);
    j["objects"] = f.obj;
    j["morphisms"] = f.mor;
    return j;
  }

  // kind first, then the category table, then the body in insertion order.
  std::string finish(const std::string& kind, const ojson& body) {
    ojson doc;
    doc["kind"] = kind;
    ojson table = ojson::object();
    for (std::size_t i = 0; i < cats_.size(); ++i) table["C" + std::to_string(i)] = category_json(*cats_[i]);
    doc["categories"] = table;
    for (auto it = body.begin(); it != body.end(); ++it) doc[it.key()] = it.value();
    return render(doc);
  }

 private:
  std::vector<CatPtr> cats_;
};

// ---------------------------------------------------------------- input

std::string join(const std::string& path, const std::string& key) { return path + "/" + key; }

const json& field(const json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(join(path, key), "missing field");
  return *it;
}

int as_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw SchemaError(path, "expected an integer");
  return j.get<int>();
}

std::vector<int> int_array(const json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path, "expected an array");
  std::vector<int> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_int(j[i], path + "/" + std::to_string(i)));
  return out;
}

std::vector<int> ranged(const json& j, const std::string& path, std::size_t size, int bound) {
  auto v = int_array(j, path);
  if (v.size() != size) {
    throw SchemaError(path, "expected " + std::to_string(size) + " entries, found " + std::to_string(v.size()));
  }
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 0 || v[i] >= bound) throw SchemaError(path + "/" + std::to_string(i), "index out of range");
  }
  return v;
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError("", "malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

void expect_kind(const json& j, const std::string& kind) {
  const auto& k = field(j, "kind", "");
  if (!k.is_string() || k.get<std::string>() != kind) {
    throw SchemaError("/kind", "expected kind '" + kind + "'");
  }
}

CatPtr category_from(const json& j, const std::string& path) {
  CategoryData d;
  d.objects = as_int(field(j, "objects", path), join(path, "objects"));
  if (d.objects < 0) throw SchemaError(join(path, "objects"), "negative object count");
  const auto& mors = field(j, "morphisms", path);
  if (!mors.is_array()) throw SchemaError(join(path, "morphisms"), "expected an array");
  for (std::size_t i = 0; i < mors.size(); ++i) {
    const std::string p = join(path, "morphisms") + "/" + std::to_string(i);
    auto v = ranged(mors[i], p, 2, d.objects);
    d.morphisms.push_back({v[0], v[1]});
  }
  const int m = static_cast<int>(d.morphisms.size());
  d.identity = ranged(field(j, "identities", path), join(path, "identities"), d.objects, m);
  const auto& table = field(j, "compose", path);
  if (!table.is_array()) throw SchemaError(join(path, "compose"), "expected an array");
  for (std::size_t i = 0; i < table.size(); ++i) {
    auto v = ranged(table[i], join(path, "compose") + "/" + std::to_string(i), 3, m);
    d.compose.push_back({v[0], v[1], v[2]});
  }
  const Report r = validate_category(d);
  if (!r.ok()) {
    const Finding& f = r.findings().front();
    std::string where;
    for (std::size_t i = 0; i < f.witness.size(); ++i) where += (i ? ", " : "") + std::to_string(f.witness[i]);
    throw SchemaError(join(path, "compose"), f.rule + ": " + f.detail + " (" + where + ")");
  }
  return FiniteCategory::from_data(d);
}

CatPtr builtin_category(const std::string& name) {
  if (name == "empty") return cats::empty();
  if (name == "1") return cats::terminal();
  if (name == "2") return cats::arrow();
  if (name == "I") return cats::iso();
  if (name == "parallel") return cats::parallel_pair();
  return nullptr;
}

class Reader {
 public:
  explicit Reader(const json& doc) {
    auto it = doc.find("categories");
    if (it == doc.end()) return;
    if (!it->is_object()) throw SchemaError("/categories", "expected an object");
    for (auto c = it->begin(); c != it->end(); ++c) cats_[c.key()] = category_from(c.value(), "/categories/" + c.key());
  }

  CatPtr cat(const json& j, const std::string& path) const {
    if (!j.is_string()) throw SchemaError(path, "expected a category name");
    const std::string name = j.get<std::string>();
    auto it = cats_.find(name);
    if (it != cats_.end()) return it->second;
    if (auto c = builtin_category(name)) return c;
    throw SchemaError(path, "unknown category '" + name + "'");
  }

  Functor maps(const json& j, const std::string& path, const CatPtr& dom, const CatPtr& cod) const {
    Functor f{dom, cod, {}, {}};
    f.obj = ranged(field(j, "objects", path), join(path, "objects"), dom->objects(), cod->objects());
    f.mor = ranged(field(j, "morphisms", path), join(path, "morphisms"), dom->morphisms(), cod->morphisms());
    return f;
  }

  Functor functor(const json& j, const std::string& path) const {
    const CatPtr dom = cat(field(j, "dom", path), join(path, "dom"));
    const CatPtr cod = cat(field(j, "cod", path), join(path, "cod"));
    return maps(j, path, dom, cod);
  }

 private:
  std::map<std::string, CatPtr> cats_;
};

NatTransf cell(const json& j, const std::string& path, const Functor& src, const Functor& dst) {
  return NatTransf{src, dst, ranged(j, path, src.dom->objects(), src.cod->morphisms())};
}

// ---------------------------------------------------------------- descent

void put_diagram(Writer& w, ojson& j, const DescentDiagram& a) {
  j["a1"] = w.ref(a.a1);
  j["a2"] = w.ref(a.a2);
  j["a3"] = w.ref(a.a3);
  j["d0"] = w.maps(a.d0);
  j["d1"] = w.maps(a.d1);
  j["s0"] = w.maps(a.s0);
  j["p0"] = w.maps(a.p0);
  j["p1"] = w.maps(a.p1);
  j["p2"] = w.maps(a.p2);
  j["sigma01"] = a.sigma01.comp;
  j["sigma02"] = a.sigma02.comp;
  j["sigma12"] = a.sigma12.comp;
  j["n0"] = a.n0.comp;
  j["n1"] = a.n1.comp;
}

DescentDiagram get_diagram(const Reader& r, const json& j) {
  DescentDiagram a;
  a.a1 = r.cat(field(j, "a1", ""), "/a1");
  a.a2 = r.cat(field(j, "a2", ""), "/a2");
  a.a3 = r.cat(field(j, "a3", ""), "/a3");
  a.d0 = r.maps(field(j, "d0", ""), "/d0", a.a1, a.a2);
  a.d1 = r.maps(field(j, "d1", ""), "/d1", a.a1, a.a2);
  a.s0 = r.maps(field(j, "s0", ""), "/s0", a.a2, a.a1);
  a.p0 = r.maps(field(j, "p0", ""), "/p0", a.a2, a.a3);
  a.p1 = r.maps(field(j, "p1", ""), "/p1", a.a2, a.a3);
  a.p2 = r.maps(field(j, "p2", ""), "/p2", a.a2, a.a3);
  a.sigma01 = cell(field(j, "sigma01", ""), "/sigma01", compose(a.p1, a.d0), compose(a.p0, a.d0));
  a.sigma02 = cell(field(j, "sigma02", ""), "/sigma02", compose(a.p2, a.d0), compose(a.p0, a.d1));
  a.sigma12 = cell(field(j, "sigma12", ""), "/sigma12", compose(a.p2, a.d1), compose(a.p1, a.d1));
  a.n0 = cell(field(j, "n0", ""), "/n0", compose(a.s0, a.d0), identity_functor(a.a1));
  a.n1 = cell(field(j, "n1", ""), "/n1", identity_functor(a.a1), compose(a.s0, a.d1));
  return a;
}

// ---------------------------------------------------------------- adjunctions

void put_adjunction(Writer& w, ojson& j, const Adjunction& adj, const std::string& prefix) {
  j[prefix + "left"] = w.functor(adj.left);
  j[prefix + "right"] = w.functor(adj.right);
  j[prefix + "unit"] = adj.unit.comp;
  j[prefix + "counit"] = adj.counit.comp;
}

Adjunction get_adjunction(const Reader& r, const json& j, const std::string& prefix) {
  Adjunction adj;
  adj.left = r.functor(field(j, prefix + "left", ""), "/" + prefix + "left");
  adj.right = r.functor(field(j, prefix + "right", ""), "/" + prefix + "right");
  if (!same_category(adj.left.cod, adj.right.dom) || !same_category(adj.right.cod, adj.left.dom)) {
    throw SchemaError("/" + prefix + "right", "left and right adjoints are not opposed");
  }
  adj.unit = cell(field(j, prefix + "unit", ""), "/" + prefix + "unit", identity_functor(adj.left.dom),
                  compose(adj.right, adj.left));
  adj.counit = cell(field(j, prefix + "counit", ""), "/" + prefix + "counit", compose(adj.left, adj.right),
                    identity_functor(adj.left.cod));
  return adj;
}

std::string comonad_name(const TwoComonad& t) { return t.name(); }

}  // namespace

std::string document_kind(const std::string& text) {
  const json j = parse_json(text);
  const auto& k = field(j, "kind", "");
  if (!k.is_string()) throw SchemaError("/kind", "expected a string");
  return k.get<std::string>();
}

std::string emit_category(const CatPtr& c) {
  ojson doc;
  doc["kind"] = "category";
  for (auto& [k, v] : category_json(*c).items()) doc[k] = v;
  return render(doc);
}

CatPtr parse_category(const std::string& text) {
  const json j = parse_json(text);
  expect_kind(j, "category");
  return category_from(j, "");
}

std::string emit_functor(const Functor& f) {
  Writer w;
  ojson body;
  body["functor"] = w.functor(f);
  return w.finish("functor", body);
}

Functor parse_functor(const std::string& text) {
  const json j = parse_json(text);
  expect_kind(j, "functor");
  Reader r(j);
  return r.functor(field(j, "functor", ""), "/functor");
}

std::string emit_nat(const NatTransf& a) {
  Writer w;
  ojson body;
  body["src"] = w.functor(a.src);
  body["dst"] = w.functor(a.dst);
  body["components"] = a.comp;
  return w.finish("nat", body);
}

NatTransf parse_nat(const std::string& text) {
  const json j = parse_json(text);
  expect_kind(j, "nat");
  Reader r(j);
  const Functor s = r.functor(field(j, "src", ""), "/src");
  const Functor d = r.functor(field(j, "dst", ""), "/dst");
  if (!same_category(s.dom, d.dom) || !same_category(s.cod, d.cod)) {
    throw SchemaError("/dst", "source and target functors are not parallel");
  }
  return cell(field(j, "components", ""), "/components", s, d);
}

std::string emit_descent_diagram(const DescentDiagram& a) {
  Writer w;
  ojson body;
  put_diagram(w, body, a);
  return w.finish("descent_diagram", body);
}

DescentDiagram parse_descent_diagram(const std::string& text) {
  const json j = parse_json(text);
  expect_kind(j, "descent_diagram");
  return get_diagram(Reader(j), j);
}

std::string emit_descent_cone(const DescentCone& k) {
  Writer w;
  ojson body;
  put_diagram(w, body, k.base);
  body["a0"] = w.ref(k.a0);
  body["d"] = w.maps(k.d);
  body["theta"] = k.theta.comp;
  return w.finish("descent_cone", body);
}

DescentCone parse_descent_cone(const std::string& text) {
  const json j = parse_json(text);
  expect_kind(j, "descent_cone");
  Reader r(j);
  DescentCone k;
  k.base = get_diagram(r, j);
  k.a0 = r.cat(field(j, "a0", ""), "/a0");
  k.d = r.maps(field(j, "d", ""), "/d", k.a0, k.base.a1);
  k.theta = cell(field(j, "theta", ""), "/theta", compose(k.base.d1, k.d), compose(k.base.d0, k.d));
  return k;
}

std::string emit_adjunction(const Adjunction& adj) {
  Writer w;
  ojson body;
  put_adjunction(w, body, adj, "");
  return w.finish("adjunction", body);
}

Adjunction parse_adjunction(const std::string& text) {
  const json j = parse_json(text);
  expect_kind(j, "adjunction");
  return get_adjunction(Reader(j), j, "");
}

std::string emit_triangle(const Triangle& t) {
  Writer w;
  ojson body;
  body["j"] = w.functor(t.j);
  put_adjunction(w, body, t.er, "er_");
  put_adjunction(w, body, t.lu, "lu_");
  return w.finish("triangle", body);
}

Triangle parse_triangle(const std::string& text) {
  const json j = parse_json(text);
  expect_kind(j, "triangle");
  Reader r(j);
  Triangle t;
  t.j = r.functor(field(j, "j", ""), "/j");
  t.er = get_adjunction(r, j, "er_");
  t.lu = get_adjunction(r, j, "lu_");
  return t;
}

std::string emit_pseudocoalgebra(const PseudoCoalgebra& z) {
  Writer w;
  ojson body;
  body["comonad"] = comonad_name(*z.t);
  if (z.t->name() == "product") body["comonad_factor"] = w.ref(z.t->factor());
  body["carrier"] = w.ref(z.z);
  body["rho"] = w.maps(z.rho);
  body["sigma"] = z.sigma.comp;
  body["omega"] = z.omega.comp;
  return w.finish("pseudocoalgebra", body);
}

PseudoCoalgebra parse_pseudocoalgebra(const std::string& text) {
  const json j = parse_json(text);
  expect_kind(j, "pseudocoalgebra");
  Reader r(j);
  const auto& name = field(j, "comonad", "");
  if (!name.is_string()) throw SchemaError("/comonad", "expected a comonad name");
  PseudoCoalgebra z;
  if (name.get<std::string>() == "product") {
    z.t = builtin_product(r.cat(field(j, "comonad_factor", ""), "/comonad_factor"));
  } else {
    try {
      z.t = comonad_by_name(name.get<std::string>());
    } catch (const PreconditionError& e) {
      throw SchemaError("/comonad", e.what());
    }
  }
  const TwoComonad& t = *z.t;
  z.z = r.cat(field(j, "carrier", ""), "/carrier");
  const CatPtr tz = t.on_cat(z.z);
  z.rho = r.maps(field(j, "rho", ""), "/rho", z.z, tz);
  z.sigma = cell(field(j, "sigma", ""), "/sigma", identity_functor(z.z), compose(t.counit(z.z), z.rho));
  z.omega = cell(field(j, "omega", ""), "/omega", compose(t.comult(z.z), z.rho),
                 compose(t.on_functor(z.rho), z.rho));
  return z;
}

std::string emit_cat_diagram(const CatValuedDiagram& d) {
  Writer w;
  ojson body;
  body["index"] = w.ref(d.index);
  ojson values = ojson::array();
  for (const auto& v : d.value) values.push_back(w.ref(v));
  body["values"] = values;
  ojson actions = ojson::array();
  for (const auto& f : d.action) actions.push_back(w.maps(f));
  body["actions"] = actions;
  return w.finish("cat_diagram", body);
}

CatValuedDiagram parse_cat_diagram(const std::string& text) {
  const json j = parse_json(text);
  expect_kind(j, "cat_diagram");
  Reader r(j);
  CatValuedDiagram d;
  d.index = r.cat(field(j, "index", ""), "/index");
  const auto& values = field(j, "values", "");
  if (!values.is_array() || static_cast<int>(values.size()) != d.index->objects()) {
    throw SchemaError("/values", "expected one category per index object");
  }
  for (std::size_t i = 0; i < values.size(); ++i) d.value.push_back(r.cat(values[i], "/values/" + std::to_string(i)));
  const auto& actions = field(j, "actions", "");
  if (!actions.is_array() || static_cast<int>(actions.size()) != d.index->morphisms()) {
    throw SchemaError("/actions", "expected one functor per index morphism");
  }
  for (int g = 0; g < d.index->morphisms(); ++g) {
    d.action.push_back(r.maps(actions[g], "/actions/" + std::to_string(g), d.value[d.index->src(g)],
                              d.value[d.index->dst(g)]));
  }
  return d;
}

std::string emit_manifest(const Manifest& m) {
  ojson doc;
  doc["kind"] = "manifest";
  doc["comonad"] = m.comonad;
  if (m.cap) doc["cap"] = *m.cap;
  doc["probes"] = m.probes;
  ojson docs = ojson::object();
  for (const auto& [name, path] : m.documents) docs[name] = path;
  doc["documents"] = docs;
  return render(doc);
}

Manifest parse_manifest(const std::string& text) {
  const json j = parse_json(text);
  expect_kind(j, "manifest");
  Manifest m;
  if (auto it = j.find("comonad"); it != j.end()) {
    if (!it->is_string()) throw SchemaError("/comonad", "expected a string");
    m.comonad = it->get<std::string>();
  }
  if (auto it = j.find("cap"); it != j.end()) {
    if (!it->is_number_unsigned()) throw SchemaError("/cap", "expected a positive integer");
    m.cap = it->get<std::size_t>();
  }
  if (auto it = j.find("probes"); it != j.end()) {
    if (!it->is_array()) throw SchemaError("/probes", "expected an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      if (!(*it)[i].is_string()) throw SchemaError("/probes/" + std::to_string(i), "expected a string");
      m.probes.push_back((*it)[i].get<std::string>());
    }
  }
  const auto& docs = field(j, "documents", "");
  if (!docs.is_object()) throw SchemaError("/documents", "expected an object");
  for (auto it = docs.begin(); it != docs.end(); ++it) {
    if (!it->is_string()) throw SchemaError("/documents/" + it.key(), "expected a path");
    m.documents[it.key()] = it->get<std::string>();
  }
  return m;
}

Report check_manifest(const Manifest& m, const std::string& base_dir) {
  Report r("manifest");
  if (!m.comonad.empty()) {
    try {
      comonad_from_spec(m.comonad);
    } catch (const std::exception& e) {
      r.fail("comonad", e.what());
    }
  }
  for (const auto& p : m.probes) {
    try {
      probe_by_name(p);
    } catch (const std::exception& e) {
      r.fail("probes", e.what());
    }
  }
  for (const auto& [name, rel] : m.documents) {
    const std::string path = (std::filesystem::path(base_dir) / rel).string();
    try {
      const std::string text = read_file(path);
      const std::string kind = document_kind(text);
      Report v;
      if (kind == "category") {
        v = validate_category(*parse_category(text));
      } else if (kind == "functor") {
        v = validate_functor(parse_functor(text));
      } else if (kind == "nat") {
        v = validate_nattransf(parse_nat(text));
      } else if (kind == "descent_diagram") {
        v = validate_descent_diagram(parse_descent_diagram(text));
      } else if (kind == "descent_cone") {
        v = validate_descent_cone(parse_descent_cone(text));
      } else if (kind == "adjunction") {
        v = validate_adjunction(parse_adjunction(text));
      } else if (kind == "triangle") {
        v = validate_triangle(parse_triangle(text));
      } else if (kind == "pseudocoalgebra") {
        v = validate_pseudocoalgebra(parse_pseudocoalgebra(text));
      } else if (kind == "cat_diagram") {
        v = validate_cat_diagram(parse_cat_diagram(text));
      } else {
        r.fail("kind", name + ": unknown kind '" + kind + "'");
        continue;
      }
      r.absorb(v, name);
    } catch (const SchemaError& e) {
      r.fail("schema", name + ": " + e.path() + ": " + e.what());
    } catch (const std::exception& e) {
      r.fail("load", name + ": " + e.what());
    }
  }
  return r;
}

std::string canonicalize(const std::string& text) {
  const std::string kind = document_kind(text);
  if (kind == "category") return emit_category(parse_category(text));
  if (kind == "functor") return emit_functor(parse_functor(text));
  if (kind == "nat") return emit_nat(parse_nat(text));
  if (kind == "descent_diagram") return emit_descent_diagram(parse_descent_diagram(text));
  if (kind == "descent_cone") return emit_descent_cone(parse_descent_cone(text));
  if (kind == "adjunction") return emit_adjunction(parse_adjunction(text));
  if (kind == "triangle") return emit_triangle(parse_triangle(text));
  if (kind == "pseudocoalgebra") return emit_pseudocoalgebra(parse_pseudocoalgebra(text));
  if (kind == "cat_diagram") return emit_cat_diagram(parse_cat_diagram(text));
  if (kind == "manifest") return emit_manifest(parse_manifest(text));
  throw SchemaError("/kind", "unknown kind '" + kind + "'");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PreconditionError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  const auto parent = std::filesystem::path(path).parent_path();
  if (!parent.empty()) std::filesystem::create_directories(parent);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw PreconditionError("cannot write " + path);
  out << text;
}

ComonadPtr comonad_from_spec(const std::string& spec) {
  if (spec.rfind("product:", 0) == 0) {
    const std::string rest = spec.substr(8);
    if (auto c = builtin_category(rest)) return builtin_product(c);
    return builtin_product(parse_category(read_file(rest)));
  }
  return comonad_by_name(spec);
}

}  // namespace bitri
