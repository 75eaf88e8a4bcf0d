#include "fintype/singular.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "fintype/laurent.hpp"
#include "json.hpp"

namespace fintype {

namespace {

bool commutes(const Letter& a, const Letter& b) { return std::abs(a.index - b.index) >= 2; }

// Fuses or cancels two same-index letters that have been brought together.
// Returns false when the pair does not simplify.
bool fuse(const Letter& a, const Letter& b, std::optional<Letter>& out) {
  using K = LetterKind;
  const int i = a.index;
  auto is = [&](K ka, K kb) { return (a.kind == ka && b.kind == kb) || (a.kind == kb && b.kind == ka); };
  if (is(K::positive, K::negative)) {
    out.reset();
    return true;
  }
  if (is(K::singular, K::positive)) {
    out = Letter{i, K::singular_positive};
    return true;
  }
  if (is(K::singular, K::negative)) {
    out = Letter{i, K::singular_negative};
    return true;
  }
  if (is(K::singular_positive, K::negative) || is(K::singular_negative, K::positive)) {
    out = Letter{i, K::singular};
    return true;
  }
  return false;
}

bool free_reduce_once(LetterSeq& w) {
  for (std::size_t j = 0; j < w.size(); ++j) {
    for (std::size_t t = j + 1; t < w.size(); ++t) {
      if (commutes(w[j], w[t])) continue;
      if (w[t].index != w[j].index) break;
      std::optional<Letter> fused;
      if (!fuse(w[j], w[t], fused)) break;
      w.erase(w.begin() + static_cast<std::ptrdiff_t>(t));
      if (fused) {
        w[j] = *fused;
      } else {
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(j));
      }
      return true;
    }
  }
  return false;
}

LetterSeq lex_normal_form(LetterSeq w) {
  LetterSeq out;
  out.reserve(w.size());
  while (!w.empty()) {
    std::size_t best = 0;
    bool have = false;
    for (std::size_t j = 0; j < w.size(); ++j) {
      bool free_to_front = true;
      for (std::size_t t = 0; t < j; ++t) {
        if (!commutes(w[j], w[t])) {
          free_to_front = false;
          break;
        }
      }
      if (free_to_front && (!have || w[j] < w[best])) {
        best = j;
        have = true;
      }
    }
    out.push_back(w[best]);
    w.erase(w.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return out;
}

int singular_letters(const LetterSeq& w) {
  return static_cast<int>(std::count_if(w.begin(), w.end(), [](const Letter& l) { return l.is_singular(); }));
}

}  // namespace

LetterSeq canonical_word(const LetterSeq& letters) {
  LetterSeq w = letters;
  while (free_reduce_once(w)) {
  }
  return lex_normal_form(std::move(w));
}

// ---------------------------------------------------------------------------

FormalSum::FormalSum(int strands, Orientation o) : strands_(strands), o_(std::move(o)) {
  if (strands_ < 2) throw std::invalid_argument("a formal sum needs at least 2 strands");
  if (o_.size() != strands_) throw std::invalid_argument("orientation length does not match strand count");
}

FormalSum FormalSum::identity(int strands, const Orientation& o) {
  FormalSum s(strands, o);
  s.add({}, 1);
  return s;
}

FormalSum FormalSum::of_word(const BraidWord& w, std::int64_t coeff) {
  FormalSum s(w.strands(), w.orientation());
  s.add(w.letters(), coeff);
  return s;
}

std::int64_t FormalSum::coeff(const LetterSeq& word) const {
  auto it = terms_.find(canonical_word(word));
  return it == terms_.end() ? 0 : it->second;
}

int FormalSum::max_singularity() const {
  int m = 0;
  for (const auto& [w, c] : terms_) m = std::max(m, singular_letters(w));
  return m;
}

void FormalSum::add(const LetterSeq& word, std::int64_t coeff) {
  if (coeff == 0) return;
  for (const auto& l : word) {
    if (l.index < 1 || l.index >= strands_) throw std::invalid_argument("letter index out of range for this sum");
  }
  LetterSeq key = canonical_word(word);
  auto [it, inserted] = terms_.try_emplace(std::move(key), 0);
  it->second = checked_add(it->second, coeff);
  if (it->second == 0) terms_.erase(it);
}

void FormalSum::require_compatible(const FormalSum& rhs) const {
  if (strands_ != rhs.strands_ || o_ != rhs.o_) throw std::invalid_argument("formal sums live on different strand sets");
}

FormalSum& FormalSum::operator+=(const FormalSum& rhs) {
  require_compatible(rhs);
  for (const auto& [w, c] : rhs.terms_) add(w, c);
  return *this;
}

FormalSum& FormalSum::operator-=(const FormalSum& rhs) {
  require_compatible(rhs);
  for (const auto& [w, c] : rhs.terms_) add(w, checked_mul(c, -1));
  return *this;
}

FormalSum& FormalSum::operator*=(std::int64_t scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c = checked_mul(c, scalar);
  return *this;
}

std::vector<std::pair<LetterSeq, std::int64_t>> FormalSum::ordered_terms() const {
  std::vector<std::pair<LetterSeq, std::int64_t>> out(terms_.begin(), terms_.end());
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    const int sa = singular_letters(a.first);
    const int sb = singular_letters(b.first);
    if (sa != sb) return sa < sb;
    return a.first < b.first;
  });
  return out;
}

namespace {

std::string plain_word(const LetterSeq& w) {
  if (w.empty()) return "e";
  std::string s;
  for (const auto& l : w) {
    if (!s.empty()) s += ' ';
    s += render(LetterSeq{l});
  }
  return s;
}

template <typename WordFn>
std::string format_sum(const FormalSum& s, const char* minus, const char* times, WordFn word) {
  const auto terms = s.ordered_terms();
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms) {
    const std::int64_t mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) out += minus;
    } else {
      out += c < 0 ? std::string(" ") + minus + " " : std::string(" + ");
    }
    first = false;
    if (mag != 1) out += std::to_string(mag) + (w.empty() ? "" : times);
    if (mag != 1 && w.empty()) continue;
    out += word(w, mag != 1);
  }
  return out;
}

}  // namespace

std::string FormalSum::to_string() const {
  return format_sum(*this, "-", "*", [](const LetterSeq& w, bool scaled) {
    const std::string text = plain_word(w);
    return scaled && w.size() > 1 ? "(" + text + ")" : text;
  });
}

std::string FormalSum::to_unicode() const {
  return format_sum(*this, "−", "", [](const LetterSeq& w, bool) { return render_unicode(w); });
}

std::string FormalSum::to_json() const {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& [w, c] : ordered_terms()) {
    j.push_back({{"coeff", c}, {"word", plain_word(w)}});
  }
  return j.dump();
}

// ---------------------------------------------------------------------------

FormalSum expand_letter(int index, int d, int strands, const Orientation& o, SignConvention conv) {
  FormalSum s = FormalSum::identity(strands, o);
  s.add({Letter{index, d > 0 ? LetterKind::singular_positive : LetterKind::singular_negative}}, so(index, d, o, conv));
  return s;
}

FormalSum multiply(const FormalSum& a, const FormalSum& b) {
  if (a.strands() != b.strands() || a.orientation() != b.orientation()) {
    throw std::invalid_argument("cannot multiply sums on different strand sets");
  }
  FormalSum out(a.strands(), a.orientation());
  for (const auto& [wa, ca] : a.terms()) {
    for (const auto& [wb, cb] : b.terms()) {
      LetterSeq w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add(w, checked_mul(ca, cb));
    }
  }
  return out;
}

namespace {

// Orientation sign ε of the strand pair at letter position j.
int epsilon_at(const LetterSeq& w, std::size_t j, const Orientation& o) {
  std::vector<std::uint8_t> ori = o.bits();
  for (std::size_t t = 0; t < j; ++t) {
    if (w[t].swaps_strands()) std::swap(ori[static_cast<std::size_t>(w[t].index - 1)], ori[static_cast<std::size_t>(w[t].index)]);
  }
  const auto a = static_cast<std::size_t>(w[j].index - 1);
  return ori[a] == ori[a + 1] ? 1 : -1;
}

bool is_key_pair(const Letter& a, const Letter& b) {
  using K = LetterKind;
  if (a.kind == K::singular && b.kind == K::singular) return true;
  return (a.kind == K::singular_positive && b.kind == K::singular_negative) ||
         (a.kind == K::singular_negative && b.kind == K::singular_positive);
}

void reduce_into(const LetterSeq& word, std::int64_t coeff, const Orientation& o, FormalSum& out, int depth) {
  if (depth > 4096) throw std::runtime_error("key reduction did not terminate");
  const LetterSeq w = canonical_word(word);
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (!w[j].is_singular()) continue;
    for (std::size_t t = j + 1; t < w.size(); ++t) {
      if (commutes(w[j], w[t])) continue;
      if (w[t].index == w[j].index && is_key_pair(w[j], w[t])) {
        const int eps = epsilon_at(w, j, o);
        LetterSeq rest = w;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(t));
        rest[j] = Letter{w[j].index, LetterKind::singular_positive};
        reduce_into(rest, checked_mul(coeff, eps), o, out, depth + 1);
        rest[j] = Letter{w[j].index, LetterKind::singular_negative};
        reduce_into(rest, checked_mul(coeff, -eps), o, out, depth + 1);
        return;
      }
      break;
    }
  }
  out.add(w, coeff);
}

}  // namespace

FormalSum key_reduce(const FormalSum& s) {
  FormalSum out(s.strands(), s.orientation());
  for (const auto& [w, c] : s.terms()) reduce_into(w, c, s.orientation(), out, 0);
  return out;
}

FormalSum truncate(const FormalSum& s, int max_singular) {
  FormalSum out(s.strands(), s.orientation());
  for (const auto& [w, c] : s.terms()) {
    if (singular_letters(w) <= max_singular) out.add(w, c);
  }
  return out;
}

FormalSum expand_word(const BraidWord& w, SignConvention conv, std::optional<int> max_singular) {
  const auto& letters = w.letters();
  if (letters.size() % 2 != 0) throw std::invalid_argument("word is not a product of double crossings (odd length)");
  FormalSum acc = FormalSum::identity(w.strands(), w.orientation());
  for (std::size_t j = 0; j < letters.size(); j += 2) {
    const Letter& a = letters[j];
    const Letter& b = letters[j + 1];
    if (a != b || a.is_singular()) {
      throw std::invalid_argument("word is not a product of double crossings at letter " + std::to_string(j + 1));
    }
    const int d = a.kind == LetterKind::positive ? 2 : -2;
    acc = multiply(acc, expand_letter(a.index, d, w.strands(), w.orientation(), conv));
    if (max_singular) acc = truncate(acc, *max_singular);
    acc = key_reduce(acc);
  }
  return acc;
}

FormalSum rhs_symbolic(const MoveSpec& spec, SignConvention conv, bool flip_u) {
  FormalSum out = FormalSum::identity(spec.strands(), spec.o);
  const int k = spec.k;
  const int dk = spec.d[static_cast<std::size_t>(k)];
  for (const auto& u : all_u_vectors(k)) {
    LetterSeq w = u_letters(u, spec.d);
    w.push_back({k + 1, dk > 0 ? LetterKind::singular_positive : LetterKind::singular_negative});
    LetterSeq right = u_letters(flip_u ? flip(u) : u, spec.d);
    std::reverse(right.begin(), right.end());
    for (auto& l : right) l = l.inverse();
    w.insert(w.end(), right.begin(), right.end());
    out.add(w, theorem_sign(u, spec, conv));
  }
  return out;
}

FormalSum desingularize(const FormalSum& s) {
  FormalSum out(s.strands(), s.orientation());
  for (const auto& [word, coeff] : s.terms()) {
    const std::vector<int> eps = crossing_orientation_signs(BraidWord(s.strands(), s.orientation(), word));
    // Partial expansions: (letters so far, coefficient).
    std::vector<std::pair<LetterSeq, std::int64_t>> partial{{{}, coeff}};
    for (std::size_t j = 0; j < word.size(); ++j) {
      const Letter& l = word[j];
      const int i = l.index;
      const Letter sp{i, LetterKind::positive};
      const Letter sn{i, LetterKind::negative};
      std::vector<std::pair<LetterSeq, std::int64_t>> next;
      for (auto& [w, c] : partial) {
        auto push = [&](LetterSeq tail, std::int64_t sign) {
          LetterSeq nw = w;
          nw.insert(nw.end(), tail.begin(), tail.end());
          next.emplace_back(std::move(nw), checked_mul(c, sign));
        };
        switch (l.kind) {
          case LetterKind::positive:
          case LetterKind::negative: push({l}, 1); break;
          case LetterKind::singular:
            push({sp}, eps[j]);
            push({sn}, -eps[j]);
            break;
          case LetterKind::singular_positive:
            push({sp, sp}, eps[j]);
            push({}, -eps[j]);
            break;
          case LetterKind::singular_negative:
            push({}, eps[j]);
            push({sn, sn}, -eps[j]);
            break;
        }
      }
      partial = std::move(next);
    }
    for (const auto& [w, c] : partial) out.add(w, c);
  }
  return out;
}

FormalSum collapse_top_degree(const FormalSum& s, int degree) {
  FormalSum out(s.strands(), s.orientation());
  for (const auto& [w, c] : s.terms()) {
    if (singular_letters(w) != degree) {
      out.add(w, c);
      continue;
    }
    LetterSeq m = w;
    for (auto& l : m) {
      if (l.kind == LetterKind::singular_negative) l.kind = LetterKind::singular_positive;
      if (l.kind == LetterKind::negative) l.kind = LetterKind::positive;
    }
    out.add(m, c);
  }
  return out;
}

}  // namespace fintype
