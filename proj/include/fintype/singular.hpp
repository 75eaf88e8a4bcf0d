#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "fintype/braid.hpp"
#include "fintype/moves.hpp"

namespace fintype {

/// Canonical form of a single word: free reduction (s S -> e, x s -> p,
/// x S -> m, p S -> x, m s -> x) across far-commuting letters, then the
/// lexicographic normal form under s_i s_j = s_j s_i for |i - j| >= 2.
LetterSeq canonical_word(const LetterSeq& letters);

/// Z-linear combination of o-braid words on a fixed strand count and
/// orientation. Keys are canonical words; zero coefficients are never stored.
class FormalSum {
 public:
  using Terms = std::map<LetterSeq, std::int64_t>;

  FormalSum(int strands, Orientation o);

  static FormalSum identity(int strands, const Orientation& o);
  static FormalSum of_word(const BraidWord& w, std::int64_t coeff = 1);

  int strands() const noexcept { return strands_; }
  const Orientation& orientation() const noexcept { return o_; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::int64_t coeff(const LetterSeq& word) const;
  int max_singularity() const;

  /// Adds coeff * word after canonicalizing the word.
  void add(const LetterSeq& word, std::int64_t coeff);

  FormalSum& operator+=(const FormalSum& rhs);
  FormalSum& operator-=(const FormalSum& rhs);
  FormalSum& operator*=(std::int64_t scalar);
  friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
  friend FormalSum operator-(FormalSum a, const FormalSum& b) { return a -= b; }
  friend bool operator==(const FormalSum&, const FormalSum&) = default;

  /// Terms ordered by singularity count, then word.
  std::vector<std::pair<LetterSeq, std::int64_t>> ordered_terms() const;

  /// "e + p1 p2 - 2 [p2 m1]"-style text in the input grammar.
  std::string to_string() const;
  /// "e + σ₁⁺σ₂⁺ − σ₂⁺σ₁⁻"
  std::string to_unicode() const;
  /// [{"coeff":c,"word":"p1 p2"}, ...]
  std::string to_json() const;

 private:
  void require_compatible(const FormalSum& rhs) const;

  int strands_;
  Orientation o_;
  Terms terms_;
};

/// ε(1 + so * s_i^s), so and ε from the orientation and convention.
FormalSum expand_letter(int index, int d, int strands, const Orientation& o, SignConvention conv);

/// Concatenation product; no key reduction.
FormalSum multiply(const FormalSum& a, const FormalSum& b);

/// Rewrites p_i ... m_i and m_i ... p_i (and x_i ... x_i) pairs whose
/// separating letters all commute with index i into ε(p_i - m_i), repeated
/// until no pair is left.
FormalSum key_reduce(const FormalSum& s);

/// Drops every term with more than `max_singular` singular letters.
FormalSum truncate(const FormalSum& s, int max_singular);

/// Expands a word of double crossings block by block, truncating and then
/// key-reducing after each block. `max_singular` defaults to unlimited.
FormalSum expand_word(const BraidWord& w, SignConvention conv, std::optional<int> max_singular = std::nullopt);

/// e + sum_u so(k+1) prod_i so(i) (-1)^(u_i+1) U_u s_{k+1}^s U_{u+1}^-1.
/// With flip_u = false the right factor is U_u^-1 instead.
FormalSum rhs_symbolic(const MoveSpec& spec, SignConvention conv, bool flip_u = true);

/// Replaces x, p, m by their crossing-change differences, giving a sum of
/// non-singular words.
FormalSum desingularize(const FormalSum& s);

/// Identifies the two crossing choices inside words with exactly `degree`
/// singular letters (m -> p, S -> s). Lower-degree terms are untouched.
FormalSum collapse_top_degree(const FormalSum& s, int degree);

}  // namespace fintype
