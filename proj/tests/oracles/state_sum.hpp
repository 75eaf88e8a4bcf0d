#pragma once
// Brute-force Kauffman bracket: all 2^c smoothings of the PD code.

#include <numeric>
#include <stdexcept>
#include <vector>

#include "fintype/diagram.hpp"
#include "fintype/laurent.hpp"

namespace oracle {

inline int count_loops(const fintype::LinkDiagram& d, unsigned long long state) {
  std::vector<int> parent(static_cast<std::size_t>(d.arc_count));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  auto unite = [&](int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); };
  for (std::size_t i = 0; i < d.crossings.size(); ++i) {
    const auto& [a, b, c, e] = d.crossings[i].arcs;
    if ((state >> i) & 1ULL) {  // B
      unite(a, e);
      unite(b, c);
    } else {  // A
      unite(a, b);
      unite(c, e);
    }
  }
  int loops = d.free_loops;
  for (int x = 0; x < d.arc_count; ++x) loops += find(x) == x ? 1 : 0;
  return loops;
}

// Normalized so one crossingless circle is 1.
inline fintype::LaurentPoly bracket(const fintype::LinkDiagram& d) {
  const std::size_t c = d.crossings.size();
  if (c > 20) throw std::invalid_argument("state sum oracle limited to 20 crossings");
  const fintype::LaurentPoly delta{{2, -1}, {-2, -1}};
  fintype::LaurentPoly total;
  for (unsigned long long s = 0; s < (1ULL << c); ++s) {
    const int b = __builtin_popcountll(s);
    const int a = static_cast<int>(c) - b;
    total += delta.pow(static_cast<unsigned>(count_loops(d, s) - 1)).shifted(a - b);
  }
  return total;
}

// Jones in t^(1/2) units, t = A^4.
inline fintype::LaurentPoly jones(const fintype::LinkDiagram& d) {
  const int w = d.writhe();
  fintype::LaurentPoly f = bracket(d).shifted(-3 * w);
  if (w % 2 != 0) f = -f;
  return f.compress_exponents(2);
}

}  // namespace oracle
