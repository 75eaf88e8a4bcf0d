// One PASS/FAIL line per acceptance criterion; nonzero exit on any failure.
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "fintype/diagram.hpp"
#include "fintype/invariants.hpp"
#include "fintype/moves.hpp"
#include "fintype/singular.hpp"
#include "fintype/verifier.hpp"
#include "oracles/skein.hpp"
#include "oracles/state_sum.hpp"

using namespace fintype;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

std::vector<std::vector<int>> all_d(int k) {
  std::vector<std::vector<int>> out;
  for (int mask = 0; mask < (1 << (k + 1)); ++mask) {
    std::vector<int> d;
    for (int i = 0; i <= k; ++i) d.push_back((mask >> i) & 1 ? -2 : 2);
    out.push_back(d);
  }
  return out;
}

std::vector<Orientation> all_o(int n) {
  std::vector<Orientation> out;
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<std::uint8_t> bits;
    for (int i = 0; i < n; ++i) bits.push_back(static_cast<std::uint8_t>((mask >> i) & 1));
    out.emplace_back(bits);
  }
  return out;
}

BraidWord W(const char* text, const char* o) {
  const Orientation orient = Orientation::parse(o);
  return parse_braid_word(text, orient.size(), orient);
}

std::vector<BraidWord> knot_corpus(std::uint64_t seed, int count) {
  Rng rng(seed);
  std::vector<BraidWord> out;
  for (int c = 0; c < count; ++c) {
    const int n = rng.uniform(2, 5);
    out.push_back(random_knot_word(rng, n, Orientation::constant(n, static_cast<std::uint8_t>(rng.uniform(0, 1))), 1, 12));
  }
  return out;
}

// plain letter count that lets the resolved word close to a knot
int plain_letters(Rng& rng, int n, int singular) {
  int plain = rng.uniform(0, 6);
  if ((plain + singular - n + 1) % 2 != 0) ++plain;
  while (plain + singular < n - 1) plain += 2;
  return plain;
}

Outcome symbolic_identity() {
  Outcome r;
  int count = 0;
  for (int k = 1; k <= 3; ++k) {
    for (const auto& d : all_d(k)) {
      const MoveSpec spec = MoveSpec::make(k, d, Orientation::constant(k + 2));
      ++count;
      if (!check_symbolic(spec, SignConvention::additive)) {
        r.ok = false;
        r.detail += " mismatch at " + spec.describe();
      }
    }
  }
  const auto rep = symbolic_report(MoveSpec::make(1, {2, 2}, Orientation::constant(3)), SignConvention::additive);
  const std::string printed = rep.expanded.to_unicode();
  if (printed != "e + σ₁⁺σ₂⁺ − σ₂⁺σ₁⁻") {
    r.ok = false;
    r.detail += " k=1 printed " + printed;
  }
  r.detail = std::to_string(count) + " specs, k=1 prints " + printed + r.detail;
  return r;
}

Outcome sign_convention() {
  Outcome r;
  std::vector<std::string> winners;
  std::ostringstream tally;
  for (const SignConvention conv : {SignConvention::additive, SignConvention::multiplicative}) {
    bool all = true;
    int pass = 0, total = 0;
    for (int k = 1; k <= 2; ++k) {
      for (const auto& o : all_o(k + 2)) {
        for (const auto& d : all_d(k)) {
          ++total;
          if (check_symbolic(MoveSpec::make(k, d, o), conv)) ++pass;
          else all = false;
        }
      }
    }
    tally << to_string(conv) << " " << pass << "/" << total << "; ";
    if (all) winners.emplace_back(to_string(conv));
  }
  r.ok = winners.size() == 1 && winners.front() == to_string(kDefaultConvention);
  r.detail = tally.str() + "selected convention: " + std::string(to_string(kDefaultConvention));
  return r;
}

Outcome numeric_theorem() {
  Outcome r;
  Rng rng(2024);
  int k1 = 0, k2 = 0, bad = 0;
  for (int c = 0; c < 60; ++c) {
    const MoveSpec spec = random_spec(rng, 1, static_cast<std::uint8_t>(rng.uniform(0, 1)));
    const BraidWord T = random_knot_word(rng, 3, spec.o, 2, 6);
    const BraidWord x = random_matching_word(rng, T, 2, 8);
    for (const char* id : {"c2", "j2"}) {
      const auto a = check_theorem(spec, T, x, InvariantId::parse(id));
      const auto b = check_theorem(spec, T, x, InvariantId::parse(id), kDefaultConvention, WVariant::singular);
      if (!a.equal || !b.equal || a.rhs != b.rhs) ++bad;
    }
    ++k1;
  }
  for (int c = 0; c < 24; ++c) {
    const MoveSpec spec = random_spec(rng, 2, static_cast<std::uint8_t>(rng.uniform(0, 1)));
    const BraidWord T = random_knot_word(rng, 4, spec.o, 3, 6);
    const BraidWord x = random_matching_word(rng, T, 3, 8);
    for (const char* id : {"j3", "c2"}) {
      if (!check_theorem(spec, T, x, InvariantId::parse(id)).equal) ++bad;
    }
    ++k2;
  }
  const SweepResult s = sweep(SweepConfig{});
  r.ok = bad == 0 && s.failed == 0;
  r.detail = std::to_string(k1) + " k=1 cases, " + std::to_string(k2) + " k=2 cases, " + std::to_string(bad) +
             " mismatches; default sweep " + std::to_string(s.total) + " checks, " + std::to_string(s.failed) + " failed";
  return r;
}

Outcome general_two_blocks() {
  Outcome r;
  Rng rng(77);
  int bad = 0;
  const int cases = 12;
  for (int c = 0; c < cases; ++c) {
    const MoveSpec a = random_spec(rng, 1);
    const MoveSpec b = random_spec(rng, 1);
    const BlockMove move = block_words({a, b}, Orientation::constant(6));
    const BraidWord T = random_knot_word(rng, 6, Orientation::constant(6), 5, 10);
    const BraidWord x = random_matching_word(rng, T, 5, 12);
    if (!check_general(move, T, x, InvariantId::parse("c2")).equal) ++bad;
  }
  r.ok = bad == 0;
  r.detail = std::to_string(cases) + " cases on 6 strands, " + std::to_string(bad) + " mismatches";
  return r;
}

Outcome x_independence() {
  Outcome r;
  Rng rng(55);
  int bad = 0;
  const int cases = 12;
  for (int c = 0; c < cases; ++c) {
    const int k = c % 2 == 0 ? 1 : 2;
    const MoveSpec spec = random_spec(rng, k);
    const BraidWord T = random_knot_word(rng, k + 2, spec.o, 2, 6);
    std::vector<BraidWord> xs;
    std::set<std::string> seen;
    while (xs.size() < 4) {
      const BraidWord x = random_matching_word(rng, T, 2, 10);
      if (seen.insert(render(x)).second) xs.push_back(x);
    }
    if (!check_x_independence(spec, T, xs, InvariantId::parse(k == 1 ? "c2" : "j3")).equal) ++bad;
  }
  r.ok = bad == 0;
  r.detail = std::to_string(cases) + " (spec, T) cases with 4 distinct x each, " + std::to_string(bad) + " mismatches";
  return r;
}

Outcome c_equivalence() {
  Outcome r;
  Rng rng(33);
  int bad = 0, checks = 0;
  for (int c = 0; c < 10; ++c) {
    const MoveSpec spec = random_spec(rng, 2, static_cast<std::uint8_t>(rng.uniform(0, 1)));
    const BraidWord T = random_knot_word(rng, 4, spec.o, 3, 8);
    ++checks;
    if (!check_c_equivalence(spec, T, InvariantId::parse("c2")).equal) ++bad;
  }
  for (int c = 0; c < 10; ++c) {
    const MoveSpec spec = random_spec(rng, 3, static_cast<std::uint8_t>(rng.uniform(0, 1)));
    const BraidWord T = random_knot_word(rng, 5, spec.o, 4, 8);
    for (const char* id : {"c2", "j3"}) {
      ++checks;
      if (!check_c_equivalence(spec, T, InvariantId::parse(id)).equal) ++bad;
    }
  }
  r.ok = bad == 0;
  r.detail = std::to_string(checks) + " checks, " + std::to_string(bad) + " mismatches";
  return r;
}

Outcome backend_sanity() {
  Outcome r;
  const InvariantId c2 = InvariantId::parse("c2");
  const BraidWord unknot = W("s1 s2", "000");
  const BraidWord trefoil = W("s1^3", "00");
  const BraidWord eight = W("s1 s2^-1 s1 s2^-1", "000");
  auto fail = [&](const std::string& what) {
    r.ok = false;
    r.detail += " " + what;
  };
  if (evaluate(c2, unknot) != 0) fail("c2(unknot)");
  if (evaluate(c2, trefoil) != 1) fail("c2(trefoil)");
  if (evaluate(c2, eight) != -1) fail("c2(figure-eight)");
  if (conway(trefoil) != LaurentPoly({{0, 1}, {2, 1}})) fail("conway(trefoil)");
  if (format_jones(jones(trefoil)) != "-t^-4 + t^-3 + t^-1") fail("jones(trefoil)");
  // frozen values must match the brute-force oracles
  for (const auto& w : {unknot, trefoil, eight}) {
    if (jones(w) != oracle::jones(close(w))) fail("jones oracle " + render(w));
    if (conway(w) != oracle::conway(close(w))) fail("conway oracle " + render(w));
  }
  int corpus = 0;
  for (const auto& w : knot_corpus(909, 200)) {
    ++corpus;
    const LaurentPoly v = jones(w);
    if (v.value_at_one() != 1) fail("V(1) " + render(w));
    if (v != oracle::jones(close(w))) fail("jones oracle " + render(w));
    if (conway(w) != oracle::conway(close(w))) fail("conway oracle " + render(w));
  }
  r.detail = "named knots plus " + std::to_string(corpus) + " corpus knots against state-sum and skein oracles" + r.detail;
  return r;
}

Outcome finite_type() {
  Outcome r;
  Rng rng(818);
  int bad = 0, total = 0;
  for (const char* name : {"c2", "c4", "j2", "j3", "j4"}) {
    const InvariantId id = InvariantId::parse(name);
    for (int trial = 0; trial < 100; ++trial) {
      const int n = rng.uniform(2, 4);
      const BraidWord w = random_singular_word(
          rng, n, Orientation::constant(n, static_cast<std::uint8_t>(rng.uniform(0, 1))), plain_letters(rng, n, vassiliev_degree(id) + 1),
          vassiliev_degree(id) + 1);
      ++total;
      if (evaluate(id, w) != 0) ++bad;
    }
  }
  r.ok = bad == 0;
  r.detail = std::to_string(total) + " singular words over 5 invariants, " + std::to_string(bad) + " nonzero";
  return r;
}

Outcome markov() {
  Outcome r;
  Rng rng(919);
  int bad = 0, trials = 0;
  for (const auto& w : knot_corpus(920, 520)) {
    const int n = w.strands();
    const Orientation& o = w.orientation();
    LetterSeq letters;
    BraidWord moved = w;
    if (rng.coin()) {
      const int i = rng.uniform(1, n - 1);
      const Letter g{i, rng.coin() ? LetterKind::positive : LetterKind::negative};
      letters.push_back(g);
      for (const auto& l : w.letters()) letters.push_back(l);
      letters.push_back(g.inverse());
      moved = BraidWord(n, o, letters);
    } else {
      letters = w.letters();
      letters.push_back({n, rng.coin() ? LetterKind::positive : LetterKind::negative});
      moved = BraidWord(n + 1, Orientation::constant(n + 1, o(1)), letters);
    }
    ++trials;
    if (jones(moved) != jones(w) || conway(moved) != conway(w)) ++bad;
  }
  r.ok = bad == 0;
  r.detail = std::to_string(trials) + " trials, " + std::to_string(bad) + " changed";
  return r;
}


}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"symbolic identity k<=3", symbolic_identity},
      {"sign convention oracle", sign_convention},
      {"numeric move formula k=1,2", numeric_theorem},
      {"two-block formula on 6 strands", general_two_blocks},
      {"x independence", x_independence},
      {"C-equivalence consistency", c_equivalence},
      {"invariant backend sanity", backend_sanity},
      {"finite-type vanishing", finite_type},
      {"Markov invariance", markov},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.ok) ++failed;
    std::printf("%s %d %s (%.2fs): %s\n", o.ok ? "PASS" : "FAIL", index, name.c_str(), secs, o.detail.c_str());
  }
  return failed == 0 ? 0 : 1;
}
