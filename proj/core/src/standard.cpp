#include "bitri/standard.hpp"

namespace bitri::cats {

namespace {

// Identities come first; ids of the other morphisms follow in listed order.
CategoryData with_identities(int n) {
  CategoryData d;
  d.objects = n;
  for (int x = 0; x < n; ++x) {
    d.morphisms.push_back({x, x});
    d.identity.push_back(x);
  }
  return d;
}

// Adds the identity laws for every morphism; callers add the rest.
void add_identity_laws(CategoryData& d) {
  for (int f = 0; f < static_cast<int>(d.morphisms.size()); ++f) {
    const int a = d.morphisms[f].src, b = d.morphisms[f].dst;
    if (f != d.identity[a]) d.compose.push_back({d.identity[a], f, f});
    if (f != d.identity[b]) d.compose.push_back({f, d.identity[b], f});
  }
  for (int x = 0; x < d.objects; ++x) d.compose.push_back({d.identity[x], d.identity[x], d.identity[x]});
}

}  // namespace

CatPtr empty() { return FiniteCategory::from_data(CategoryData{}); }

CatPtr terminal() { return discrete(1); }

CatPtr arrow() { return chain(2); }

CatPtr iso() { return codiscrete(2); }

CatPtr parallel_pair() {
  auto d = with_identities(2);
  d.morphisms.push_back({0, 1});
  d.morphisms.push_back({0, 1});
  add_identity_laws(d);
  return FiniteCategory::from_data(d);
}

CatPtr chain(int n) {
  return poset(n, [](int a, int b) { return a <= b; });
}

CatPtr discrete(int n) {
  auto d = with_identities(n);
  add_identity_laws(d);
  return FiniteCategory::from_data(d);
}

CatPtr codiscrete(int n) {
  return poset(n, [](int, int) { return true; });
}

CatPtr cyclic_group(int n) {
  CategoryData d;
  d.objects = 1;
  d.identity = {0};
  for (int k = 0; k < n; ++k) d.morphisms.push_back({0, 0});
  for (int f = 0; f < n; ++f) {
    for (int g = 0; g < n; ++g) d.compose.push_back({f, g, (f + g) % n});
  }
  return FiniteCategory::from_data(d);
}

CatPtr poset(int n, const std::function<bool(int, int)>& leq) {
  auto d = with_identities(n);
  std::vector<std::vector<int>> rel(n, std::vector<int>(n, -1));
  for (int x = 0; x < n; ++x) rel[x][x] = x;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a != b && leq(a, b)) {
        rel[a][b] = static_cast<int>(d.morphisms.size());
        d.morphisms.push_back({a, b});
      }
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (rel[a][b] < 0) continue;
      for (int c = 0; c < n; ++c) {
        if (rel[b][c] < 0) continue;
        if (rel[a][c] < 0) throw PreconditionError("poset relation is not transitive");
        d.compose.push_back({rel[a][b], rel[b][c], rel[a][c]});
      }
    }
  }
  return FiniteCategory::from_data(d);
}

}  // namespace bitri::cats
