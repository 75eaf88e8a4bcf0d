#pragma once

#include <array>
#include <string>
#include <vector>

#include "fintype/braid.hpp"

namespace fintype {

/// One crossing of a planar diagram.
///
/// `arcs` lists the four incident arcs counterclockwise, starting from the
/// incoming end of the under-strand (PD-code convention). The under-strand
/// runs arcs[0] -> arcs[2]. The over-strand runs arcs[3] -> arcs[1] when
/// sign = +1 and arcs[1] -> arcs[3] when sign = -1.
struct DiagramCrossing {
  int id = 0;
  int sign = 1;
  std::array<int, 4> arcs{};

  int under_in() const noexcept { return arcs[0]; }
  int under_out() const noexcept { return arcs[2]; }
  int over_in() const noexcept { return sign > 0 ? arcs[3] : arcs[1]; }
  int over_out() const noexcept { return sign > 0 ? arcs[1] : arcs[3]; }
};

/// Oriented planar diagram of a closed braid. Arcs are numbered 0..arc_count-1;
/// every arc sits in exactly two crossing slots except for crossing-free loops,
/// which are counted in `free_loops` and carry no arc id.
struct LinkDiagram {
  std::vector<DiagramCrossing> crossings;
  int arc_count = 0;
  int free_loops = 0;
  int components = 0;

  int writhe() const noexcept;
  /// {"crossings":[{"id","sign","arcs":[a,b,c,d]}], "components":k}
  std::string to_json() const;
};

/// Closes a non-singular word by joining floor point i to ceiling point i.
/// Crossing signs come from the letter and the strand orientations at that
/// height: s_i is positive when both strands run the same way.
LinkDiagram close(const BraidWord& w);

/// Traces the diagram's arcs to count link components; independent of the
/// braid permutation.
int count_components(const LinkDiagram& d);

}  // namespace fintype
