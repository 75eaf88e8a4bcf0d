#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fintype/braid.hpp"

namespace fintype {

/// Which exponent rule builds the local sign of a double crossing:
///   additive:       s(d) * (-1)^(o(i) + o(i+1))
///   multiplicative: s(d) * (-1)^(o(i) * o(i+1))
/// The two disagree whenever o(i) = 1 or o(i+1) = 1; only the additive rule
/// matches the geometric crossing sign.
enum class SignConvention { additive, multiplicative };

inline constexpr SignConvention kDefaultConvention = SignConvention::additive;

std::string_view to_string(SignConvention c);
SignConvention parse_sign_convention(std::string_view text);

/// Local sign of the double crossing s_i^d (d = +-2) at strands i, i+1.
int so(int i, int d, const Orientation& o, SignConvention conv);

/// Identifies one move C_{k,d,o}: k >= 1, d in {+-2}^(k+1), o on k+2 strands.
struct MoveSpec {
  int k = 1;
  std::vector<int> d;
  Orientation o;

  /// Validates the dimensions; throws std::invalid_argument.
  static MoveSpec make(int k, std::vector<int> d, Orientation o);
  /// Parses {"k":K,"d":[...],"o":"0..0"} (an optional "conv" key is ignored here).
  static MoveSpec from_json(std::string_view text);

  int strands() const noexcept { return k + 2; }
  std::string to_json(SignConvention conv = kDefaultConvention) const;
  /// "k=2 d=2,2,-2 o=0000"
  std::string describe() const;

  friend bool operator==(const MoveSpec&, const MoveSpec&) = default;
};

/// Bit vector u in (Z/2)^k; u + 1 is the coordinatewise flip.
using UVector = std::vector<std::uint8_t>;

UVector flip(const UVector& u);
/// All 2^k vectors, ordered by descending binary value with u_1 as the least
/// significant bit: (1,1), (0,1), (1,0), (0,0) for k = 2.
std::vector<UVector> all_u_vectors(int k);

/// Factor choice for the companion words: s_i^2 or the fused singular p_i.
enum class WVariant { squared, singular };

/// The pure move word on k+2 strands. For k = 1 the two middle products are
/// empty and the word is s1^d1 s2^d2 s1^-d1 s2^-d2.
BraidWord bh_word(const MoveSpec& spec);

/// W_u = a_1 ... a_k (or a_k ... a_1 when reversed) with a_i = e for u_i = 0
/// and s_i^2 or p_i for u_i = 1.
LetterSeq w_letters(const UVector& u, WVariant variant, bool reversed);
BraidWord w_word(const UVector& u, WVariant variant, bool reversed, int strands, const Orientation& o);

/// U_u with signed singular letters: a_i = p_i if d_i > 0, m_i if d_i < 0.
LetterSeq u_letters(const UVector& u, const std::vector<int>& d);

/// Sign of the u-term including the s(d_{k+1}) prefactor, with the exponent
/// rule taken from `conv`.
int theorem_sign(const UVector& u, const MoveSpec& spec, SignConvention conv);

/// K = closure(bh_word * T), J = closure(T).
struct MovePair {
  MoveSpec spec;
  BraidWord T;
  BraidWord K_word;
  BraidWord J_word;
};

/// Throws when T has the wrong strand count/orientation or does not close to
/// a knot.
MovePair make_pair(const MoveSpec& spec, const BraidWord& T);

struct RhsTerm {
  int sign = 1;
  UVector u;
  int block = 0;
  BraidWord word;
};

/// 2^k terms  sign * W_u s_{k+1}^2 W_{u+1}^r x. Throws when Φ(x) != Φ(T).
std::vector<RhsTerm> rhs_terms(const MovePair& pair, const BraidWord& x, SignConvention conv,
                               WVariant variant = WVariant::squared);

/// Several move blocks placed side by side on n(k+2) strands.
struct BlockMove {
  int k = 1;
  std::vector<MoveSpec> blocks;
  std::vector<int> offsets;  // block j acts on strands offsets[j]+1 .. offsets[j]+k+2
  Orientation o;
  BraidWord word;

  int strands() const noexcept { return o.size(); }
};

/// Places the blocks on consecutive windows of k+2 strands (or at explicit
/// offsets). Each block's orientation must be the restriction of `o` to its
/// window. Throws on overlapping windows or mismatched dimensions.
BlockMove block_words(const std::vector<MoveSpec>& blocks, const Orientation& o,
                      std::optional<std::vector<int>> offsets = std::nullopt);

/// For the side-by-side word: K = closure(word * T), J = closure(T).
struct BlockPair {
  BlockMove move;
  BraidWord T;
  BraidWord K_word;
  BraidWord J_word;
};

BlockPair make_block_pair(const BlockMove& move, const BraidWord& T);

/// One group of 2^k terms per block. `flip_u` selects W_{u+1}^r on the right
/// (the single-move form); false gives W_u^r.
std::vector<RhsTerm> block_rhs_terms(const BlockPair& pair, const BraidWord& x, SignConvention conv,
                                     WVariant variant = WVariant::squared, bool flip_u = true);

}  // namespace fintype
