#pragma once
// Conway polynomial from the skein relation C(L+) - C(L-) = z C(L0),
// switching crossings until the diagram is descending.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "fintype/diagram.hpp"
#include "fintype/laurent.hpp"

namespace oracle {

struct Pd {
  struct X {
    std::array<int, 4> arcs;
    int sign;
    int under_in() const { return arcs[0]; }
    int under_out() const { return arcs[2]; }
    int over_in() const { return sign > 0 ? arcs[3] : arcs[1]; }
    int over_out() const { return sign > 0 ? arcs[1] : arcs[3]; }
  };
  std::vector<X> xs;
  int free_loops = 0;
};

inline Pd from_diagram(const fintype::LinkDiagram& d) {
  Pd p;
  for (const auto& c : d.crossings) p.xs.push_back({c.arcs, c.sign});
  p.free_loops = d.free_loops;
  return p;
}

inline Pd switched(const Pd& p, std::size_t i) {
  Pd q = p;
  auto& x = q.xs[i];
  const auto a = x.arcs;
  x.arcs = x.sign > 0 ? std::array<int, 4>{a[3], a[0], a[1], a[2]} : std::array<int, 4>{a[1], a[2], a[3], a[0]};
  x.sign = -x.sign;
  return q;
}

inline Pd smoothed(const Pd& p, std::size_t i) {
  const auto& x = p.xs[i];
  std::map<int, int> parent;
  auto find = [&](int v) {
    while (parent.count(v) && parent[v] != v) v = parent[v];
    return v;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[a] = b;
  };
  unite(x.under_in(), x.over_out());
  unite(x.over_in(), x.under_out());
  Pd q;
  q.free_loops = p.free_loops;
  std::set<int> used;
  for (std::size_t j = 0; j < p.xs.size(); ++j) {
    if (j == i) continue;
    auto y = p.xs[j];
    for (auto& a : y.arcs) {
      a = find(a);
      used.insert(a);
    }
    q.xs.push_back(y);
  }
  std::set<int> touched{find(x.arcs[0]), find(x.arcs[1]), find(x.arcs[2]), find(x.arcs[3])};
  for (int r : touched) {
    if (!used.count(r)) ++q.free_loops;
  }
  return q;
}

// First crossing met from below in the ordered traversal, if any; also
// reports the number of components.
inline std::optional<std::size_t> first_bad(const Pd& p, int& components) {
  std::map<int, std::pair<std::size_t, bool>> head;  // arc -> (crossing, enters as under)
  std::set<int> arcs;
  for (std::size_t i = 0; i < p.xs.size(); ++i) {
    head[p.xs[i].under_in()] = {i, true};
    head[p.xs[i].over_in()] = {i, false};
    for (int a : p.xs[i].arcs) arcs.insert(a);
  }
  std::set<int> visited_arcs;
  std::vector<char> seen(p.xs.size(), 0);
  std::optional<std::size_t> bad;
  components = p.free_loops;
  for (int base : arcs) {
    if (visited_arcs.count(base)) continue;
    ++components;
    int a = base;
    do {
      visited_arcs.insert(a);
      const auto [ci, under] = head.at(a);
      if (!seen[ci]) {
        seen[ci] = 1;
        if (under && !bad) bad = ci;
      }
      a = under ? p.xs[ci].under_out() : p.xs[ci].over_out();
    } while (a != base);
  }
  return bad;
}

inline fintype::LaurentPoly conway(const Pd& p) {
  if (!p.xs.empty() && p.free_loops > 0) return {};  // split with an unknotted circle
  int components = 0;
  const auto bad = first_bad(p, components);
  if (!bad) return components == 1 ? fintype::LaurentPoly(1) : fintype::LaurentPoly();
  const fintype::LaurentPoly z = fintype::LaurentPoly::monomial(1);
  const fintype::LaurentPoly rest = z * conway(smoothed(p, *bad));
  fintype::LaurentPoly out = conway(switched(p, *bad));
  if (p.xs[*bad].sign > 0) {
    out += rest;
  } else {
    out -= rest;
  }
  return out;
}

inline fintype::LaurentPoly conway(const fintype::LinkDiagram& d) { return conway(from_diagram(d)); }

}  // namespace oracle
