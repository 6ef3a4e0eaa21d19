#include "bitri/descent.hpp"

#include <algorithm>

#include "bitri/parallel.hpp"

namespace bitri {

namespace {

std::uint64_t datum_key(int f, int rho) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(f)) << 32) | static_cast<std::uint32_t>(rho);
}

void check_functor(Report& r, const char* name, const Functor& f, const CatPtr& dom, const CatPtr& cod,
                   Depth depth) {
  if (!same_category(f.dom, dom) || !same_category(f.cod, cod)) {
    r.fail("typing", std::string(name) + " has the wrong domain or codomain");
    return;
  }
  if (depth == Depth::Deep) r.absorb(validate_functor(f), name);
}

void check_cell(Report& r, const char* name, const NatTransf& a, const Functor& src, const Functor& dst) {
  if (!(a.src == src) || !(a.dst == dst)) {
    r.fail("typing", std::string(name) + " does not have the required source and target functors");
    return;
  }
  const Report nat = validate_nattransf(a);
  if (!nat.ok()) {
    r.absorb(nat, name);
    return;
  }
  const auto& cod = *a.src.cod;
  for (std::size_t x = 0; x < a.comp.size(); ++x) {
    if (!cod.is_iso(a.comp[x])) {
      r.fail("invertibility", std::string(name) + " is not invertible", {static_cast<int>(x)});
      return;
    }
  }
}

}  // namespace

Report validate_descent_diagram(const DescentDiagram& a, Depth depth) {
  Report r("descent diagram");
  if (!a.a1 || !a.a2 || !a.a3) {
    r.fail("typing", "missing category");
    return r;
  }
  check_functor(r, "d0", a.d0, a.a1, a.a2, depth);
  check_functor(r, "d1", a.d1, a.a1, a.a2, depth);
  check_functor(r, "s0", a.s0, a.a2, a.a1, depth);
  check_functor(r, "p0", a.p0, a.a2, a.a3, depth);
  check_functor(r, "p1", a.p1, a.a2, a.a3, depth);
  check_functor(r, "p2", a.p2, a.a2, a.a3, depth);
  if (!r.ok()) return r;
  check_cell(r, "sigma01", a.sigma01, compose(a.p1, a.d0), compose(a.p0, a.d0));
  check_cell(r, "sigma02", a.sigma02, compose(a.p2, a.d0), compose(a.p0, a.d1));
  check_cell(r, "sigma12", a.sigma12, compose(a.p2, a.d1), compose(a.p1, a.d1));
  check_cell(r, "n0", a.n0, compose(a.s0, a.d0), identity_functor(a.a1));
  check_cell(r, "n1", a.n1, identity_functor(a.a1), compose(a.s0, a.d1));
  return r;
}

Report validate_descent_cone(const DescentCone& k, Depth depth) {
  Report r("descent cone");
  r.absorb(validate_descent_diagram(k.base, depth), "base");
  if (!r.ok()) return r;
  const auto& a = k.base;
  check_functor(r, "d", k.d, k.a0, a.a1, depth);
  if (!r.ok()) return r;
  check_cell(r, "theta", k.theta, compose(a.d1, k.d), compose(a.d0, k.d));
  if (!r.ok()) return r;

  auto s12inv = invert(a.sigma12);
  const NatTransf lhs = vcompose(vcompose(vcompose(whisker(a.p0, k.theta), whisker(a.sigma02, k.d)),
                                          whisker(a.p2, k.theta)),
                                 whisker(*s12inv, k.d));
  const NatTransf rhs = vcompose(whisker(a.sigma01, k.d), whisker(a.p1, k.theta));
  for (std::size_t x = 0; x < lhs.comp.size(); ++x) {
    if (lhs.comp[x] != rhs.comp[x]) {
      r.fail("associativity", "pasted cells differ at object " + std::to_string(x), {static_cast<int>(x)});
      break;
    }
  }
  const NatTransf unit = vcompose(vcompose(whisker(a.n0, k.d), whisker(a.s0, k.theta)), whisker(a.n1, k.d));
  for (std::size_t x = 0; x < unit.comp.size(); ++x) {
    if (!a.a1->is_identity(unit.comp[x])) {
      r.fail("identity", "unit pasting is not the identity at object " + std::to_string(x), {static_cast<int>(x)});
      break;
    }
  }
  return r;
}

Report check_cone_pointwise(const DescentCone& k) {
  Report r("descent cone (pointwise)");
  for (int x = 0; x < k.a0->objects(); ++x) {
    std::string why;
    if (!is_descent_datum(k.base, k.d.obj[x], k.theta.comp[x], &why)) {
      r.fail(why, "object " + std::to_string(x) + " is not sent to a descent datum", {x});
    }
  }
  return r;
}

bool is_descent_datum(const DescentDiagram& a, int f, int rho, std::string* why) {
  const auto& A1 = *a.a1;
  const auto& A2 = *a.a2;
  const auto& A3 = *a.a3;
  auto fail = [why](const char* rule) {
    if (why) *why = rule;
    return false;
  };
  if (A2.src(rho) != a.d1.obj[f] || A2.dst(rho) != a.d0.obj[f]) return fail("typing");
  if (!A2.is_iso(rho)) return fail("invertibility");
  const int s12inv = A3.inverse(a.sigma12.comp[f]);
  const int lhs = A3.comp(a.p0.mor[rho],
                          A3.comp(a.sigma02.comp[f], A3.comp(a.p2.mor[rho], s12inv)));
  const int rhs = A3.comp(a.sigma01.comp[f], a.p1.mor[rho]);
  if (lhs != rhs) return fail("associativity");
  const int unit = A1.comp(a.n0.comp[f], A1.comp(a.s0.mor[rho], a.n1.comp[f]));
  if (unit != A1.id(f)) return fail("identity");
  return true;
}

int DescentObject::index_of(int f, int rho) const {
  auto it = lookup.find(datum_key(f, rho));
  return it == lookup.end() ? -1 : it->second;
}

int DescentObject::morphism(int src, int dst, int m) const {
  const int t[1] = {m};
  return tuples.find(src, dst, t);
}

DescentObject strict_descent_object(const DescentDiagram& a, const Limits& lim) {
  const auto& A1 = *a.a1;
  const auto& A2 = *a.a2;
  const int n1 = A1.objects();

  std::vector<std::vector<int>> per_f(n1);
  parallel_for(static_cast<std::size_t>(n1), [&](std::size_t i) {
    const int f = static_cast<int>(i);
    for (int rho : A2.hom(a.d1.obj[f], a.d0.obj[f])) {
      if (is_descent_datum(a, f, rho)) per_f[i].push_back(rho);
    }
  });

  DescentObject out;
  for (int f = 0; f < n1; ++f) {
    for (int rho : per_f[f]) {
      out.lookup.emplace(datum_key(f, rho), static_cast<int>(out.data.size()));
      out.data.push_back({f, rho});
    }
  }
  charge(out.data.size(), lim, "descent data");

  const int n = static_cast<int>(out.data.size());
  out.tuples = TupleCategory({a.a1});
  for (const auto& x : out.data) out.tuples.add_object({A1.id(x.f)});

  std::vector<std::vector<std::pair<int, int>>> rows(n);
  parallel_for(static_cast<std::size_t>(n), [&](std::size_t i) {
    const auto& x = out.data[i];
    for (int j = 0; j < n; ++j) {
      const auto& y = out.data[j];
      for (int m : A1.hom(x.f, y.f)) {
        if (A2.comp(a.d0.mor[m], x.rho) == A2.comp(y.rho, a.d1.mor[m])) rows[i].emplace_back(j, m);
      }
    }
  });
  std::size_t count = 0;
  for (int i = 0; i < n; ++i) {
    count += rows[i].size();
    charge(count, lim, "descent morphisms");
    for (const auto& [j, m] : rows[i]) out.tuples.add_morphism(i, j, {m});
  }
  out.desc = out.tuples.build();

  const auto& D = *out.desc;
  out.underlying.resize(D.morphisms());
  for (int m = 0; m < D.morphisms(); ++m) out.underlying[m] = out.tuples.tuple(m)[0];

  Functor d{out.desc, a.a1, std::vector<int>(n), out.underlying};
  std::vector<int> rhos(n);
  for (int i = 0; i < n; ++i) {
    d.obj[i] = out.data[i].f;
    rhos[i] = out.data[i].rho;
  }
  out.cone = DescentCone{a, out.desc, d, NatTransf{compose(a.d1, d), compose(a.d0, d), std::move(rhos)}};
  return out;
}

Functor comparison(const DescentCone& k, const DescentObject& desc) {
  const auto& A0 = *k.a0;
  Functor c{k.a0, desc.desc, std::vector<int>(A0.objects()), std::vector<int>(A0.morphisms())};
  for (int x = 0; x < A0.objects(); ++x) {
    c.obj[x] = desc.index_of(k.d.obj[x], k.theta.comp[x]);
    if (c.obj[x] < 0) throw PreconditionError("cone object " + std::to_string(x) + " is not a descent datum");
  }
  for (int g = 0; g < A0.morphisms(); ++g) {
    c.mor[g] = desc.morphism(c.obj[A0.src(g)], c.obj[A0.dst(g)], k.d.mor[g]);
    if (c.mor[g] < 0) throw PreconditionError("cone morphism " + std::to_string(g) + " is not a descent morphism");
  }
  return c;
}

Functor comparison(const DescentCone& k, const Limits& lim) {
  return comparison(k, strict_descent_object(k.base, lim));
}

bool is_strict_descent(const DescentCone& k, const Limits& lim) {
  try {
    return is_isomorphism_functor(comparison(k, lim));
  } catch (const PreconditionError&) {
    return false;
  }
}

bool is_effective_descent(const DescentCone& k, const Limits& lim) {
  try {
    return is_equivalence(comparison(k, lim), false).holds;
  } catch (const PreconditionError&) {
    return false;
  }
}

DescentDiagram map_diagram(const Transport& t, const DescentDiagram& a) {
  return DescentDiagram{t.on_cat(a.a1),         t.on_cat(a.a2),         t.on_cat(a.a3),
                        t.on_functor(a.d0),     t.on_functor(a.d1),     t.on_functor(a.s0),
                        t.on_functor(a.p0),     t.on_functor(a.p1),     t.on_functor(a.p2),
                        t.on_nat(a.sigma01),    t.on_nat(a.sigma02),    t.on_nat(a.sigma12),
                        t.on_nat(a.n0),         t.on_nat(a.n1)};
}

DescentCone map_cone(const Transport& t, const DescentCone& k) {
  return DescentCone{map_diagram(t, k.base), t.on_cat(k.a0), t.on_functor(k.d), t.on_nat(k.theta)};
}

bool ProbeReport::all_effective() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const ProbeVerdict& v) { return v.effective; });
}

ProbeReport absolute_probe(const DescentCone& k, const std::vector<TransportPtr>& probes, const Limits& lim) {
  ProbeReport out;
  for (const auto& t : probes) {
    ProbeVerdict v;
    v.probe = t->name();
    try {
      const DescentCone m = map_cone(*t, k);
      const DescentObject desc = strict_descent_object(m.base, lim);
      const Functor c = comparison(m, desc);
      v.strict = is_isomorphism_functor(c);
      v.effective = v.strict || is_equivalence(c, false).holds;
    } catch (const CapExceeded& e) {
      v.note = e.what();
    } catch (const PreconditionError& e) {
      v.note = e.what();
    }
    out.verdicts.push_back(std::move(v));
  }
  return out;
}

bool universal_property_probe(const DescentDiagram& a, const DescentCone& candidate,
                              const std::vector<CatPtr>& tests, const Limits& lim) {
  if (!same_category(candidate.base.a1, a.a1) || !(candidate.base.d0 == a.d0) || !(candidate.base.d1 == a.d1)) {
    return false;
  }
  if (!validate_descent_cone(candidate, Depth::Shallow).ok()) return false;
  for (const auto& x : tests) {
    if (!is_effective_descent(map_cone(*hom_transport(x), candidate), lim)) return false;
  }
  return true;
}

DescentDiagram constant_identity_diagram(const CatPtr& c) {
  const Functor id = identity_functor(c);
  const NatTransf one = identity_nat(id);
  return DescentDiagram{c, c, c, id, id, id, id, id, id, one, one, one, one, one};
}

DescentCone constant_identity_cone(const CatPtr& c) {
  const Functor id = identity_functor(c);
  return DescentCone{constant_identity_diagram(c), c, id, identity_nat(id)};
}

}  // namespace bitri
