#include "fintype/diagram.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

#include "json.hpp"

namespace fintype {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n)) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      parent_[static_cast<std::size_t>(x)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
      x = parent_[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent_[static_cast<std::size_t>(find(a))] = find(b); }

 private:
  std::vector<int> parent_;
};

}  // namespace

int LinkDiagram::writhe() const noexcept {
  int w = 0;
  for (const auto& c : crossings) w += c.sign;
  return w;
}

std::string LinkDiagram::to_json() const {
  nlohmann::json j;
  j["crossings"] = nlohmann::json::array();
  for (const auto& c : crossings) {
    j["crossings"].push_back({{"id", c.id}, {"sign", c.sign}, {"arcs", c.arcs}});
  }
  j["components"] = components;
  return j.dump();
}

LinkDiagram close(const BraidWord& w) {
  if (w.is_singular()) throw std::invalid_argument("close needs a non-singular word; desingularize first");
  const int n = w.strands();
  std::vector<std::uint8_t> ori = w.orientation().bits();

  // Provisional arc ids: 0..n-1 are the floor arcs, fresh ids for every arc
  // leaving a crossing.
  std::vector<int> current(static_cast<std::size_t>(n));
  std::iota(current.begin(), current.end(), 0);
  int next_id = n;
  std::vector<DiagramCrossing> crossings;
  crossings.reserve(w.length());

  for (const auto& l : w.letters()) {
    const auto left = static_cast<std::size_t>(l.index - 1);
    const auto right = left + 1;
    const int bl = current[left];
    const int br = current[right];
    const int tl = next_id++;
    const int tr = next_id++;
    const bool positive = l.kind == LetterKind::positive;
    // Strand from bl goes to tr, strand from br goes to tl. For s_i the
    // bl-tr strand is over.
    const std::uint8_t ori_from_left = ori[left];
    const std::uint8_t ori_from_right = ori[right];
    DiagramCrossing c;
    c.id = static_cast<int>(crossings.size());
    c.sign = (positive ? 1 : -1) * (ori_from_left == ori_from_right ? 1 : -1);
    // Counterclockwise from the south-east corner: BR, TR, TL, BL.
    const std::array<int, 4> ccw{br, tr, tl, bl};
    int start = 0;
    if (positive) {
      // under strand is br -> tl (upward) or tl -> br (downward)
      start = ori_from_right == 0 ? 0 : 2;
    } else {
      // under strand is bl -> tr (upward) or tr -> bl (downward)
      start = ori_from_left == 0 ? 3 : 1;
    }
    for (int k = 0; k < 4; ++k) c.arcs[static_cast<std::size_t>(k)] = ccw[static_cast<std::size_t>((start + k) % 4)];
    crossings.push_back(c);
    current[left] = tl;
    current[right] = tr;
    std::swap(ori[left], ori[right]);
  }

  // Closure: the top arc at position p is the floor arc at position p.
  DisjointSets ds(next_id);
  for (int p = 0; p < n; ++p) ds.unite(current[static_cast<std::size_t>(p)], p);

  std::map<int, int> relabel;
  for (auto& c : crossings) {
    for (auto& a : c.arcs) {
      const int root = ds.find(a);
      auto [it, inserted] = relabel.emplace(root, static_cast<int>(relabel.size()));
      a = it->second;
    }
  }

  LinkDiagram d;
  d.crossings = std::move(crossings);
  d.arc_count = static_cast<int>(relabel.size());
  for (int p = 0; p < n; ++p) {
    const int root = ds.find(p);
    if (!relabel.contains(root)) {
      relabel.emplace(root, -1);
      ++d.free_loops;
    }
  }
  d.components = count_components(d);
  return d;
}

int count_components(const LinkDiagram& d) {
  DisjointSets ds(d.arc_count);
  for (const auto& c : d.crossings) {
    ds.unite(c.under_in(), c.under_out());
    ds.unite(c.over_in(), c.over_out());
  }
  int classes = 0;
  for (int a = 0; a < d.arc_count; ++a) {
    if (ds.find(a) == a) ++classes;
  }
  return classes + d.free_loops;
}

}  // namespace fintype
