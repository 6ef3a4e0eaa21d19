#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "bitri/enumerate.hpp"
#include "bitri/fincat.hpp"
#include "bitri/transport.hpp"

namespace bitri {

// A1 ⇉ A2 ⇉ A3 with the degeneracy s0 and the five invertible 2-cells
//   sigma01: p1∘d0 ⇒ p0∘d0   sigma02: p2∘d0 ⇒ p0∘d1   sigma12: p2∘d1 ⇒ p1∘d1
//   n0: s0∘d0 ⇒ Id           n1: Id ⇒ s0∘d1
struct DescentDiagram {
  CatPtr a1, a2, a3;
  Functor d0, d1, s0, p0, p1, p2;
  NatTransf sigma01, sigma02, sigma12, n0, n1;
};

// Apex A0 with d: A0 → A1 and theta: d1∘d ⇒ d0∘d.
struct DescentCone {
  DescentDiagram base;
  CatPtr a0;
  Functor d;
  NatTransf theta;
};

struct DescentDatum {
  int f = 0;    // object of A1
  int rho = 0;  // invertible d1(f) → d0(f) in A2
};

enum class Depth { Shallow, Deep };

// Deep also re-checks the functor laws of every constituent, which costs a
// pass over all composable pairs; Shallow checks typing, naturality and
// invertibility only.
Report validate_descent_diagram(const DescentDiagram& a, Depth depth = Depth::Deep);
// Pasting form of the two cone equations, computed with whole 2-cells.
Report validate_descent_cone(const DescentCone& k, Depth depth = Depth::Deep);
// Pointwise form: every (d(a), theta_a) is a descent datum.
Report check_cone_pointwise(const DescentCone& k);

// Checks the cocycle and unit equations for (f, rho).
bool is_descent_datum(const DescentDiagram& a, int f, int rho, std::string* why = nullptr);

struct DescentObject {
  CatPtr desc;
  std::vector<DescentDatum> data;  // object i of desc
  std::vector<int> underlying;     // morphism of desc → morphism of A1
  DescentCone cone;

  int index_of(int f, int rho) const;  // -1 when (f, rho) is not a datum
  int morphism(int src, int dst, int m) const;

  std::unordered_map<std::uint64_t, int> lookup;
  TupleCategory tuples;
};

DescentObject strict_descent_object(const DescentDiagram& a, const Limits& lim = default_limits());

Functor comparison(const DescentCone& k, const DescentObject& desc);
Functor comparison(const DescentCone& k, const Limits& lim = default_limits());
bool is_strict_descent(const DescentCone& k, const Limits& lim = default_limits());
bool is_effective_descent(const DescentCone& k, const Limits& lim = default_limits());

DescentDiagram map_diagram(const Transport& t, const DescentDiagram& a);
DescentCone map_cone(const Transport& t, const DescentCone& k);

struct ProbeVerdict {
  std::string probe;
  bool effective = false;
  bool strict = false;
  std::string note;  // "cap exceeded" and similar
};

struct ProbeReport {
  std::vector<ProbeVerdict> verdicts;
  bool all_effective() const;
};

ProbeReport absolute_probe(const DescentCone& k, const std::vector<TransportPtr>& probes,
                           const Limits& lim = default_limits());

bool universal_property_probe(const DescentDiagram& a, const DescentCone& candidate,
                              const std::vector<CatPtr>& tests, const Limits& lim = default_limits());

// All three categories equal to c, all functors and 2-cells identities.
DescentDiagram constant_identity_diagram(const CatPtr& c);
DescentCone constant_identity_cone(const CatPtr& c);

}  // namespace bitri
