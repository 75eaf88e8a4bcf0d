#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "fintype/braid.hpp"
#include "fintype/invariants.hpp"
#include "fintype/moves.hpp"
#include "fintype/singular.hpp"
#include "json.hpp"

namespace fintype {

struct TermValue {
  int sign = 1;
  int block = 0;
  std::string word;
  mpq_class value;
};

struct CheckReport {
  std::string kind = "theorem";  // "theorem" or "general"
  std::vector<MoveSpec> blocks;  // one entry for check_theorem
  BraidWord T = BraidWord::identity(2, Orientation::constant(2));
  BraidWord x = BraidWord::identity(2, Orientation::constant(2));
  InvariantId id;
  SignConvention conv = kDefaultConvention;
  WVariant variant = WVariant::squared;
  bool flip_u = true;
  mpq_class lhs;
  mpq_class rhs;
  bool equal = false;
  std::vector<TermValue> terms;

  const MoveSpec& spec() const { return blocks.front(); }
  nlohmann::json to_json() const;
};

/// v(K) - v(J) against the signed sum over the 2^k companion words.
CheckReport check_theorem(const MoveSpec& spec, const BraidWord& T, const BraidWord& x, const InvariantId& id,
                          SignConvention conv = kDefaultConvention, WVariant variant = WVariant::squared,
                          InvariantCache* cache = &default_cache());

struct SymbolicReport {
  bool equal = false;
  FormalSum expanded = FormalSum::identity(2, Orientation::constant(2));
  FormalSum rhs = FormalSum::identity(2, Orientation::constant(2));
};

/// Expands the move word up to k+1 singular letters and compares it with
/// rhs_symbolic, identifying crossing choices inside the top-degree terms.
SymbolicReport symbolic_report(const MoveSpec& spec, SignConvention conv);
bool check_symbolic(const MoveSpec& spec, SignConvention conv = kDefaultConvention);

/// Same comparison for side-by-side blocks: the expansion against
/// e + sum over blocks of the shifted single-block sums. With flip_u = false
/// the right-hand factor uses U_u instead of U_{u+1}.
SymbolicReport symbolic_block_report(const BlockMove& move, SignConvention conv, bool flip_u = true);

struct XIndependenceReport {
  bool equal = true;
  std::vector<mpq_class> values;
};

/// RHS value for every x; all x must share Φ(T).
XIndependenceReport check_x_independence(const MoveSpec& spec, const BraidWord& T, const std::vector<BraidWord>& xs,
                                         const InvariantId& id, SignConvention conv = kDefaultConvention,
                                         InvariantCache* cache = &default_cache());

CheckReport check_general(const BlockMove& move, const BraidWord& T, const BraidWord& x, const InvariantId& id,
                          SignConvention conv = kDefaultConvention, bool flip_u = true,
                          InvariantCache* cache = &default_cache());

struct CEquivalenceReport {
  bool equal = false;
  mpq_class value_K;
  mpq_class value_J;
};

/// Invariants of degree <= k agree on the two sides of a C_{k+1} move.
/// Throws when the degree exceeds k.
CEquivalenceReport check_c_equivalence(const MoveSpec& spec, const BraidWord& T, const InvariantId& id,
                                       InvariantCache* cache = &default_cache());

/// Largest |lhs| over a corpus of reports. Throws on an empty corpus.
mpq_class boundedness_probe(const std::vector<CheckReport>& corpus);

// ---------------------------------------------------------------------------
// Random generation

/// Seeded generator with a portable bounded draw, so reports do not depend on
/// the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform in [lo, hi].
  int uniform(int lo, int hi);
  bool coin() { return uniform(0, 1) == 1; }
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// Random word of the given length over s_i^{+-1}.
BraidWord random_word(Rng& rng, int strands, const Orientation& o, int length);
/// Random word whose closure is a knot (rejection sampling).
BraidWord random_knot_word(Rng& rng, int strands, const Orientation& o, int min_len, int max_len);
/// Random word x with Φ(x) = Φ(T): rejection sampling, with a corrective
/// suffix as fallback for large strand counts.
BraidWord random_matching_word(Rng& rng, const BraidWord& T, int min_len, int max_len);
/// Random move specification with constant orientation.
MoveSpec random_spec(Rng& rng, int k, std::uint8_t orientation_bit = 0);
/// Random word with exactly `singular` singular letters x_i whose resolution
/// closes to a knot. Throws when the length cannot give a knot.
BraidWord random_singular_word(Rng& rng, int strands, const Orientation& o, int plain, int singular);

/// Deletes letters from T and x while Φ is preserved and `still_fails` holds.
std::pair<BraidWord, BraidWord> shrink_counterexample(
    const BraidWord& T, const BraidWord& x,
    const std::function<bool(const BraidWord&, const BraidWord&)>& still_fails);

// ---------------------------------------------------------------------------
// Sweep

struct SweepConfig {
  std::uint64_t seed = 1;
  int k1_cases = 50;
  int k2_cases = 20;
  int k3_cases = 0;
  int k4_cases = 0;
  int general_cases = 10;
  int general_k = 1;
  int xindep_cases = 10;
  int xindep_count = 3;
  int cequiv_cases = 10;
  std::vector<std::string> k1_invariants{"c2", "j2"};
  std::vector<std::string> k2_invariants{"j3", "c2"};
  std::vector<std::string> k3_invariants{"c4", "j4"};
  std::vector<std::string> general_invariants{"c2"};
  SignConvention conv = kDefaultConvention;
  bool singular_rhs = true;
  bool force = false;
  int t_min = 2;
  int t_max = 6;
  int x_min = 2;
  int x_max = 8;
  int threads = 0;  // 0: hardware concurrency
  std::string cache_file;

  /// Flat key=value lines or a JSON object.
  static SweepConfig parse(const std::string& text);
  static SweepConfig load(const std::filesystem::path& path);
  nlohmann::json to_json() const;
};

struct SweepResult {
  nlohmann::json report;
  std::string csv;
  std::vector<std::string> warnings;
  int total = 0;
  int failed = 0;
};

SweepResult sweep(const SweepConfig& config, const std::string& program = "fintype");
/// Writes report.json and summary.csv into `dir`.
void write_sweep(const SweepResult& result, const std::filesystem::path& dir);

/// Command line that reruns one theorem check.
std::string repro_command(const std::string& program, const CheckReport& r, std::uint64_t seed);

}  // namespace fintype
