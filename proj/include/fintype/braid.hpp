#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace fintype {

/// Orientation function o: {1..n} -> Z/2. Bit 0 at position i means the strand
/// endpoint on the floor is incoming (the strand runs upward); bit 1 means it
/// runs downward. Position 1 is the leftmost character of the string form.
class Orientation {
 public:
  Orientation() = default;
  explicit Orientation(std::vector<std::uint8_t> bits);

  /// Parses a string over {0,1}; throws std::invalid_argument otherwise.
  static Orientation parse(std::string_view text);
  /// All strands pointing the same way.
  static Orientation constant(int n, std::uint8_t bit = 0);

  int size() const noexcept { return static_cast<int>(bits_.size()); }
  /// 1-based access, matching o(i) in the usual notation.
  std::uint8_t operator()(int i) const { return bits_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }
  bool is_constant() const noexcept;
  /// Restriction to positions first..first+count-1 (1-based).
  Orientation window(int first, int count) const;

  std::string to_string() const;

  friend bool operator==(const Orientation&, const Orientation&) = default;
  friend auto operator<=>(const Orientation&, const Orientation&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// Letter kinds. The singular-positive/negative letters are the fused forms
/// x_i s_i and x_i s_i^-1; the fused letter is the stored canonical form.
enum class LetterKind : std::uint8_t {
  positive = 0,           // s_i
  negative = 1,           // s_i^-1
  singular = 2,           // x_i
  singular_positive = 3,  // p_i
  singular_negative = 4,  // m_i
};

struct Letter {
  int index = 1;  // generator index in 1..n-1
  LetterKind kind = LetterKind::positive;

  bool is_singular() const noexcept { return kind >= LetterKind::singular; }
  /// Letters that transpose the two strands they act on (everything but p, m).
  bool swaps_strands() const noexcept {
    return kind == LetterKind::positive || kind == LetterKind::negative || kind == LetterKind::singular;
  }
  Letter inverse() const;

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

using LetterSeq = std::vector<Letter>;

/// A (possibly singular) word in the o-braid monoid on `strands` strands.
/// Letters are read bottom to top.
class BraidWord {
 public:
  BraidWord(int strands, Orientation orientation, LetterSeq letters = {});

  static BraidWord identity(int strands, Orientation orientation);

  int strands() const noexcept { return strands_; }
  const Orientation& orientation() const noexcept { return orientation_; }
  const LetterSeq& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  int singularity_count() const noexcept;
  bool is_singular() const noexcept { return singularity_count() > 0; }

  /// Same letters on a different strand count / orientation.
  BraidWord with_letters(LetterSeq letters) const;
  /// Word with every letter inverted and the order reversed.
  BraidWord inverse() const;
  /// Mirror image: s <-> s^-1, p <-> m.
  BraidWord mirror() const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_;
  Orientation orientation_;
  LetterSeq letters_;
};

/// Parses the whitespace-separated grammar
///   s<i>  s<i>^<e>  x<i>  p<i>  m<i>     (and "e" for the identity)
/// with every index in 1..n-1. Throws std::invalid_argument on malformed
/// tokens, out-of-range indices or n < 2.
BraidWord parse_braid_word(std::string_view text, int n, const Orientation& o);
LetterSeq parse_letters(std::string_view text, int n);

/// Grammar form; runs of equal s-letters are written as s<i>^<e>, and the
/// empty word as "e".
std::string render(const LetterSeq& letters);
std::string render(const BraidWord& w);
/// Typeset form using sigma notation (σ₁⁺σ₂⁻...), "e" for the empty word.
std::string render_unicode(const LetterSeq& letters);

/// A bijection on {0..n-1}; printed 1-based in cycle notation.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_.at(static_cast<std::size_t>(i)); }
  const std::vector<int>& images() const noexcept { return images_; }

  /// (this ∘ rhs)(i) = this(rhs(i)).
  Permutation compose(const Permutation& rhs) const;
  Permutation inverse() const;
  bool is_identity() const noexcept;
  /// Cycle lengths in descending order, fixed points included.
  std::vector<int> cycle_type() const;
  int cycle_count() const;
  bool is_full_cycle() const;
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// Placement map: floor position -> ceiling position of each strand. Singular
/// crossings x_i transpose like s_i; fused letters p_i, m_i do not.
Permutation strand_map(const BraidWord& w);

/// The incoming -> outgoing bijection, with each side enumerated left to right.
/// For an upward strand starting at floor position i it is the ceiling
/// position it reaches; for a downward strand entering at ceiling position i it
/// is the floor position it reaches. Rejects singular words and words whose
/// strands connect points of different orientation.
Permutation permutation_of(const BraidWord& w);

/// True iff the closure is a knot, i.e. permutation_of(w) is a single n-cycle.
bool is_knot_closure(const BraidWord& w);

/// `top` stacked above `bottom`; the letter sequences are concatenated
/// without free reduction.
BraidWord compose(const BraidWord& bottom, const BraidWord& top);

/// For each letter: +1 if the two strands it acts on carry equal orientation
/// bits at that height, -1 otherwise. This is the geometric sign a positive
/// letter s_i would have at that spot.
std::vector<int> crossing_orientation_signs(const BraidWord& w);

/// Places w on strands offset+1..offset+w.strands() of a wider word.
LetterSeq shift_letters(const LetterSeq& letters, int offset);

}  // namespace fintype
