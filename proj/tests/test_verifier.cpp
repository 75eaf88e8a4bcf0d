#include "doctest.h"
#include "fintype/verifier.hpp"

using namespace fintype;

namespace {

BraidWord W(const char* text, const char* o) {
  const Orientation orient = Orientation::parse(o);
  return parse_braid_word(text, orient.size(), orient);
}

}  // namespace

TEST_CASE("check_theorem examples") {
  const InvariantId c2 = InvariantId::parse("c2");
  const MoveSpec k1 = MoveSpec::make(1, {2, 2}, Orientation::parse("000"));
  const CheckReport r = check_theorem(k1, W("s1 s2", "000"), W("s1 s2", "000"), c2);
  CHECK(r.equal);
  CHECK(r.terms.size() == 2);
  CHECK(r.lhs == r.rhs);

  const MoveSpec k2 = MoveSpec::make(2, {2, -2, 2}, Orientation::parse("0000"));
  const CheckReport r2 = check_theorem(k2, W("s1 s2 s3", "0000"), W("s1 s2 s3", "0000"), InvariantId::parse("j3"));
  CHECK(r2.equal);
  CHECK(r2.terms.size() == 4);

  CHECK_THROWS_AS(check_theorem(k1, W("s1 s2", "000"), W("s1^2", "000"), c2), std::invalid_argument);
  CHECK_THROWS_AS(check_theorem(k1, W("s1^2", "000"), W("s1^2", "000"), c2), std::invalid_argument);
}

TEST_CASE("check_theorem json") {
  const MoveSpec k1 = MoveSpec::make(1, {2, -2}, Orientation::parse("000"));
  const auto j = check_theorem(k1, W("s1 s2", "000"), W("s1 s2", "000"), InvariantId::parse("j2")).to_json();
  CHECK(j["invariant"] == "j2");
  CHECK(j["specs"][0]["d"] == nlohmann::json::array({2, -2}));
  CHECK(j["terms"].size() == 2);
  CHECK(j["equal"] == true);
}

TEST_CASE("check_symbolic") {
  CHECK(check_symbolic(MoveSpec::make(1, {2, 2}, Orientation::parse("000"))));
  CHECK(check_symbolic(MoveSpec::make(3, {2, 2, 2, 2}, Orientation::parse("00000"))));
  CHECK(check_symbolic(MoveSpec::make(2, {2, -2, 2}, Orientation::parse("0110"))));
  CHECK_FALSE(check_symbolic(MoveSpec::make(2, {2, -2, 2}, Orientation::parse("0110")), SignConvention::multiplicative));
  CHECK_FALSE(check_symbolic(MoveSpec::make(2, {2, 2, 2}, Orientation::parse("1111")), SignConvention::multiplicative));
  const SymbolicReport r = symbolic_report(MoveSpec::make(1, {2, 2}, Orientation::parse("000")), SignConvention::additive);
  CHECK(r.expanded.to_unicode() == "e + σ₁⁺σ₂⁺ − σ₂⁺σ₁⁻");
}

TEST_CASE("block symbolic check selects the flipped right factor") {
  const Orientation o = Orientation::constant(6);
  const MoveSpec a = MoveSpec::make(1, {2, 2}, Orientation::constant(3));
  const MoveSpec b = MoveSpec::make(1, {2, -2}, Orientation::constant(3));
  const BlockMove move = block_words({a, b}, o);
  CHECK(symbolic_block_report(move, SignConvention::additive, true).equal);
  CHECK_FALSE(symbolic_block_report(move, SignConvention::additive, false).equal);
}

TEST_CASE("x independence") {
  const MoveSpec spec = MoveSpec::make(1, {2, 2}, Orientation::parse("000"));
  const BraidWord T = W("s1 s2", "000");
  const std::vector<BraidWord> xs{T, W("s1^-1 s2", "000"), W("s2 s1 s2 s1^-1", "000"), W("s1^3 s2^-1", "000")};
  for (const auto& x : xs) REQUIRE(permutation_of(x) == permutation_of(T));
  for (const char* name : {"c2", "j2"}) {
    const auto r = check_x_independence(spec, T, xs, InvariantId::parse(name));
    CHECK(r.equal);
    CHECK(r.values.size() == xs.size());
  }
  CHECK(check_x_independence(spec, T, {T}, InvariantId::parse("c2")).equal);
  CHECK_THROWS_AS(check_x_independence(spec, T, {T, W("s2 s1", "000")}, InvariantId::parse("c2")), std::invalid_argument);
}

TEST_CASE("check_general") {
  const InvariantId c2 = InvariantId::parse("c2");
  const MoveSpec a = MoveSpec::make(1, {2, 2}, Orientation::constant(3));
  const BraidWord t3 = W("s1 s2", "000");
  const CheckReport one = check_general(block_words({a}, Orientation::constant(3)), t3, t3, c2);
  const CheckReport direct = check_theorem(a, t3, t3, c2);
  CHECK(one.lhs == direct.lhs);
  CHECK(one.rhs == direct.rhs);
  CHECK(one.equal);

  const MoveSpec b = MoveSpec::make(1, {-2, 2}, Orientation::constant(3));
  const BraidWord T = W("s1 s2 s3 s4 s5", "000000");
  const BraidWord x = W("s1^-1 s2 s3 s4^-1 s5 s3^2", "000000");
  const CheckReport two = check_general(block_words({a, b}, Orientation::constant(6)), T, x, c2);
  CHECK(two.terms.size() == 4);
  CHECK(two.equal);

  const MoveSpec c = MoveSpec::make(2, {2, -2, 2}, Orientation::constant(4));
  const MoveSpec d = MoveSpec::make(2, {-2, 2, 2}, Orientation::constant(4));
  const BraidWord T8 = W("s1 s2 s3 s4 s5 s6 s7", "00000000");
  const CheckReport big = check_general(block_words({c, d}, Orientation::constant(8)), T8, T8, InvariantId::parse("j3"));
  CHECK(big.terms.size() == 8);
  CHECK(big.equal);
}

TEST_CASE("C-equivalence consistency") {
  const MoveSpec k2 = MoveSpec::make(2, {2, 2, -2}, Orientation::parse("0000"));
  CHECK(check_c_equivalence(k2, W("s1 s2 s3^-1", "0000"), InvariantId::parse("c2")).equal);
  const MoveSpec k3 = MoveSpec::make(3, {2, -2, 2, 2}, Orientation::parse("00000"));
  CHECK(check_c_equivalence(k3, W("s1 s2^3 s3 s4", "00000"), InvariantId::parse("j3")).equal);
  const MoveSpec k1 = MoveSpec::make(1, {2, 2}, Orientation::parse("000"));
  CHECK_THROWS_AS(check_c_equivalence(k1, W("s1 s2", "000"), InvariantId::parse("c2")), std::invalid_argument);
}

TEST_CASE("boundedness probe") {
  CHECK_THROWS_AS(boundedness_probe({}), std::invalid_argument);
  Rng rng(17);
  std::vector<CheckReport> corpus;
  for (int c = 0; c < 20; ++c) {
    const MoveSpec spec = random_spec(rng, 1);
    const BraidWord T = random_knot_word(rng, 3, spec.o, 2, 6);
    corpus.push_back(check_theorem(spec, T, random_matching_word(rng, T, 2, 8), InvariantId::parse("c2")));
  }
  const mpq_class m = boundedness_probe(corpus);
  CHECK(m >= 0);
  for (const auto& r : corpus) CHECK(abs(r.lhs) <= m);
}

TEST_CASE("random generation is seeded and respects Φ") {
  Rng a(99), b(99);
  for (int i = 0; i < 50; ++i) CHECK(a.uniform(-3, 7) == b.uniform(-3, 7));
  Rng rng(5);
  for (int i = 0; i < 50; ++i) {
    const int n = rng.uniform(3, 8);
    const BraidWord T = random_knot_word(rng, n, Orientation::constant(n), 2, 12);
    CHECK(is_knot_closure(T));
    const BraidWord x = random_matching_word(rng, T, 2, 12);
    CHECK(permutation_of(x) == permutation_of(T));
  }
  const BraidWord s = random_singular_word(rng, 4, Orientation::constant(4), 4, 3);
  CHECK_THROWS_AS(random_singular_word(rng, 4, Orientation::constant(4), 5, 3), std::invalid_argument);
  CHECK(s.singularity_count() == 3);
  CHECK_THROWS_AS(random_knot_word(rng, 3, Orientation::parse("001"), 2, 5), std::invalid_argument);
}

TEST_CASE("shrinking keeps Φ and the failure") {
  const BraidWord T = W("s1 s2 s1^2 s2^-2", "000");
  const BraidWord x = W("s1^-1 s2 s2^2 s1^2", "000");
  // pretend every pair with a long x fails
  const auto [t, y] = shrink_counterexample(T, x, [](const BraidWord&, const BraidWord& b) { return b.length() >= 2; });
  CHECK(permutation_of(t) == permutation_of(T));
  CHECK(permutation_of(y) == permutation_of(T));
  CHECK(t.length() == 2);
  CHECK(y.length() == 2);
}

TEST_CASE("sweep configuration") {
  const SweepConfig kv = SweepConfig::parse("# comment\nseed = 12\nk1_cases=3\nk1_invariants = c2, j2\nconv=multiplicative\nforce=true\n");
  CHECK(kv.seed == 12);
  CHECK(kv.k1_cases == 3);
  CHECK(kv.k1_invariants == std::vector<std::string>{"c2", "j2"});
  CHECK(kv.conv == SignConvention::multiplicative);
  CHECK(kv.force);
  const SweepConfig js = SweepConfig::parse(R"({"seed": 5, "k2_cases": 4, "k2_invariants": ["j3"], "singular_rhs": false})");
  CHECK(js.seed == 5);
  CHECK(js.k2_cases == 4);
  CHECK(js.k2_invariants == std::vector<std::string>{"j3"});
  CHECK_FALSE(js.singular_rhs);
  CHECK_THROWS_AS(SweepConfig::parse("bogus=1"), std::invalid_argument);
  CHECK_THROWS_AS(SweepConfig::parse("seed"), std::invalid_argument);
  CHECK_THROWS_AS(SweepConfig::parse("{bad json"), std::exception);
}

TEST_CASE("sweep determinism, warnings and failure reports") {
  SweepConfig cfg = SweepConfig::parse("k1_cases=6\nk2_cases=3\ngeneral_cases=2\nxindep_cases=2\ncequiv_cases=2\nk4_cases=1\nseed=4");
  cfg.threads = 3;
  const SweepResult a = sweep(cfg);
  cfg.threads = 1;
  const SweepResult b = sweep(cfg);
  CHECK(a.report.dump() == b.report.dump());
  CHECK(a.csv == b.csv);
  CHECK(a.failed == 0);
  REQUIRE(a.warnings.size() == 1);
  CHECK(a.warnings.front().find("exceeds desk-scale budget") != std::string::npos);

  SweepConfig bad = SweepConfig::parse(
      "k1_cases=0\nk2_cases=4\nk2_invariants=j3\ngeneral_cases=0\nxindep_cases=0\ncequiv_cases=0\nconv=multiplicative\nseed=8");
  const SweepResult r = sweep(bad, "fintype");
  CHECK(r.failed > 0);
  for (const auto& row : r.report["results"]) {
    if (row["pass"].get<bool>()) continue;
    const std::string repro = row["repro"].get<std::string>();
    CHECK(repro.find("fintype check --k 2") == 0);
    CHECK(repro.find("--seed 8") != std::string::npos);
    CHECK(repro.find("--t ") != std::string::npos);
    CHECK(repro.find("--x ") != std::string::npos);
    CHECK(row.contains("minimized"));
  }
}
