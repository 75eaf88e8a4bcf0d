#include "fintype/braid.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace fintype {

// ---------------------------------------------------------------------------
// Orientation

Orientation::Orientation(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto b : bits_) {
    if (b > 1) throw std::invalid_argument("orientation bits must be 0 or 1");
  }
}

Orientation Orientation::parse(std::string_view text) {
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') throw std::invalid_argument("orientation string must be over {0,1}: '" + std::string(text) + "'");
    bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return Orientation(std::move(bits));
}

Orientation Orientation::constant(int n, std::uint8_t bit) {
  return Orientation(std::vector<std::uint8_t>(static_cast<std::size_t>(n), bit));
}

bool Orientation::is_constant() const noexcept {
  return std::adjacent_find(bits_.begin(), bits_.end(), std::not_equal_to<>()) == bits_.end();
}

Orientation Orientation::window(int first, int count) const {
  if (first < 1 || count < 0 || first - 1 + count > size()) throw std::out_of_range("orientation window out of range");
  return Orientation(std::vector<std::uint8_t>(bits_.begin() + (first - 1), bits_.begin() + (first - 1 + count)));
}

std::string Orientation::to_string() const {
  std::string s;
  for (auto b : bits_) s.push_back(static_cast<char>('0' + b));
  return s;
}

// ---------------------------------------------------------------------------
// Letters and words

Letter Letter::inverse() const {
  switch (kind) {
    case LetterKind::positive: return {index, LetterKind::negative};
    case LetterKind::negative: return {index, LetterKind::positive};
    case LetterKind::singular: return {index, LetterKind::singular};
    case LetterKind::singular_positive: return {index, LetterKind::singular_negative};
    case LetterKind::singular_negative: return {index, LetterKind::singular_positive};
  }
  return *this;
}

BraidWord::BraidWord(int strands, Orientation orientation, LetterSeq letters)
    : strands_(strands), orientation_(std::move(orientation)), letters_(std::move(letters)) {
  if (strands_ < 2) throw std::invalid_argument("a braid word needs at least 2 strands");
  if (orientation_.size() != strands_) {
    throw std::invalid_argument("orientation length " + std::to_string(orientation_.size()) +
                                " does not match strand count " + std::to_string(strands_));
  }
  for (const auto& l : letters_) {
    if (l.index < 1 || l.index >= strands_) {
      throw std::invalid_argument("generator index " + std::to_string(l.index) + " out of range for " +
                                  std::to_string(strands_) + " strands");
    }
  }
}

BraidWord BraidWord::identity(int strands, Orientation orientation) {
  return BraidWord(strands, std::move(orientation));
}

int BraidWord::singularity_count() const noexcept {
  return static_cast<int>(std::count_if(letters_.begin(), letters_.end(), [](const Letter& l) { return l.is_singular(); }));
}

BraidWord BraidWord::with_letters(LetterSeq letters) const { return BraidWord(strands_, orientation_, std::move(letters)); }

BraidWord BraidWord::inverse() const {
  LetterSeq out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(it->inverse());
  return with_letters(std::move(out));
}

BraidWord BraidWord::mirror() const {
  LetterSeq out = letters_;
  for (auto& l : out) {
    if (l.kind != LetterKind::singular) l = l.inverse();
  }
  return with_letters(std::move(out));
}

// ---------------------------------------------------------------------------
// Grammar

namespace {

int parse_int(std::string_view s, std::string_view token) {
  int value = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (!s.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw std::invalid_argument("malformed token '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

LetterSeq parse_letters(std::string_view text, int n) {
  if (n < 2) throw std::invalid_argument("a braid word needs at least 2 strands");
  LetterSeq out;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    if (token == "e") continue;
    if (token.size() < 2) throw std::invalid_argument("malformed token '" + token + "'");
    const char head = token[0];
    std::string_view rest = std::string_view(token).substr(1);
    int exponent = 1;
    if (const auto caret = rest.find('^'); caret != std::string_view::npos) {
      if (head != 's') throw std::invalid_argument("only s-letters take an exponent: '" + token + "'");
      exponent = parse_int(rest.substr(caret + 1), token);
      if (exponent == 0) throw std::invalid_argument("zero exponent in '" + token + "'");
      rest = rest.substr(0, caret);
    }
    const int index = parse_int(rest, token);
    if (index < 1 || index >= n) {
      throw std::invalid_argument("generator index " + std::to_string(index) + " out of range for " + std::to_string(n) +
                                  " strands in '" + token + "'");
    }
    switch (head) {
      case 's': {
        const LetterKind k = exponent > 0 ? LetterKind::positive : LetterKind::negative;
        for (int c = 0; c < std::abs(exponent); ++c) out.push_back({index, k});
        break;
      }
      case 'x': out.push_back({index, LetterKind::singular}); break;
      case 'p': out.push_back({index, LetterKind::singular_positive}); break;
      case 'm': out.push_back({index, LetterKind::singular_negative}); break;
      default: throw std::invalid_argument("malformed token '" + token + "'");
    }
  }
  return out;
}

BraidWord parse_braid_word(std::string_view text, int n, const Orientation& o) {
  return BraidWord(n, o, parse_letters(text, n));
}

std::string render(const LetterSeq& letters) {
  if (letters.empty()) return "e";
  std::ostringstream os;
  for (std::size_t i = 0; i < letters.size();) {
    if (i > 0) os << ' ';
    const Letter& l = letters[i];
    switch (l.kind) {
      case LetterKind::positive:
      case LetterKind::negative: {
        std::size_t run = 1;
        while (i + run < letters.size() && letters[i + run] == l) ++run;
        const long e = l.kind == LetterKind::positive ? static_cast<long>(run) : -static_cast<long>(run);
        os << 's' << l.index;
        if (e != 1) os << '^' << e;
        i += run;
        continue;
      }
      case LetterKind::singular: os << 'x' << l.index; break;
      case LetterKind::singular_positive: os << 'p' << l.index; break;
      case LetterKind::singular_negative: os << 'm' << l.index; break;
    }
    ++i;
  }
  return os.str();
}

std::string render(const BraidWord& w) { return render(w.letters()); }

std::string render_unicode(const LetterSeq& letters) {
  if (letters.empty()) return "e";
  static constexpr const char* kSub[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
  std::string out;
  for (const auto& l : letters) {
    out += "σ";
    for (char c : std::to_string(l.index)) out += kSub[c - '0'];
    switch (l.kind) {
      case LetterKind::positive: break;
      case LetterKind::negative: out += "⁻¹"; break;
      case LetterKind::singular: out += "ˣ"; break;
      case LetterKind::singular_positive: out += "⁺"; break;
      case LetterKind::singular_negative: out += "⁻"; break;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Permutations

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= size() || seen[static_cast<std::size_t>(v)]) throw std::invalid_argument("images do not form a bijection");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> im(static_cast<std::size_t>(n));
  std::iota(im.begin(), im.end(), 0);
  return Permutation(std::move(im));
}

Permutation Permutation::compose(const Permutation& rhs) const {
  if (rhs.size() != size()) throw std::invalid_argument("composing permutations of different sizes");
  std::vector<int> im(images_.size());
  for (int i = 0; i < size(); ++i) im[static_cast<std::size_t>(i)] = (*this)(rhs(i));
  return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
  std::vector<int> im(images_.size());
  for (int i = 0; i < size(); ++i) im[static_cast<std::size_t>(images_[static_cast<std::size_t>(i)])] = i;
  return Permutation(std::move(im));
}

bool Permutation::is_identity() const noexcept {
  for (int i = 0; i < size(); ++i) {
    if (images_[static_cast<std::size_t>(i)] != i) return false;
  }
  return true;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> lengths;
  std::vector<bool> seen(images_.size(), false);
  for (int i = 0; i < size(); ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    int len = 0;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = (*this)(j)) {
      seen[static_cast<std::size_t>(j)] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

int Permutation::cycle_count() const { return static_cast<int>(cycle_type().size()); }

bool Permutation::is_full_cycle() const { return cycle_count() == 1; }

std::string Permutation::to_string() const {
  std::ostringstream os;
  std::vector<bool> seen(images_.size(), false);
  bool any = false;
  for (int i = 0; i < size(); ++i) {
    if (seen[static_cast<std::size_t>(i)] || (*this)(i) == i) continue;
    any = true;
    os << '(';
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = (*this)(j)) {
      if (j != i) os << ' ';
      seen[static_cast<std::size_t>(j)] = true;
      os << j + 1;
    }
    os << ')';
  }
  return any ? os.str() : "()";
}

// ---------------------------------------------------------------------------
// Strand bookkeeping

Permutation strand_map(const BraidWord& w) {
  // occupant[p] = floor position of the strand currently at position p
  std::vector<int> occupant(static_cast<std::size_t>(w.strands()));
  std::iota(occupant.begin(), occupant.end(), 0);
  for (const auto& l : w.letters()) {
    if (l.swaps_strands()) std::swap(occupant[static_cast<std::size_t>(l.index - 1)], occupant[static_cast<std::size_t>(l.index)]);
  }
  std::vector<int> image(occupant.size());
  for (std::size_t top = 0; top < occupant.size(); ++top) image[static_cast<std::size_t>(occupant[top])] = static_cast<int>(top);
  return Permutation(std::move(image));
}

Permutation permutation_of(const BraidWord& w) {
  if (w.is_singular()) throw std::invalid_argument("permutation_of needs a non-singular word");
  const Permutation placement = strand_map(w);
  const Permutation back = placement.inverse();
  const auto& o = w.orientation();
  std::vector<int> image(static_cast<std::size_t>(w.strands()));
  for (int i = 0; i < w.strands(); ++i) {
    if (o(i + 1) != o(placement(i) + 1)) {
      throw std::invalid_argument("word is not an o-braid: strand from position " + std::to_string(i + 1) +
                                  " joins points of different orientation");
    }
    image[static_cast<std::size_t>(i)] = o(i + 1) == 0 ? placement(i) : back(i);
  }
  return Permutation(std::move(image));
}

bool is_knot_closure(const BraidWord& w) { return permutation_of(w).is_full_cycle(); }

BraidWord compose(const BraidWord& bottom, const BraidWord& top) {
  if (bottom.strands() != top.strands()) throw std::invalid_argument("compose: strand counts differ");
  if (bottom.orientation() != top.orientation()) throw std::invalid_argument("compose: orientation functions differ");
  const auto& o = bottom.orientation();
  const Permutation placement = strand_map(bottom);
  for (int i = 0; i < bottom.strands(); ++i) {
    if (o(i + 1) != o(placement(i) + 1)) throw std::invalid_argument("compose: bottom word does not preserve the orientation");
  }
  LetterSeq letters = bottom.letters();
  letters.insert(letters.end(), top.letters().begin(), top.letters().end());
  return bottom.with_letters(std::move(letters));
}

std::vector<int> crossing_orientation_signs(const BraidWord& w) {
  std::vector<std::uint8_t> ori = w.orientation().bits();
  std::vector<int> signs;
  signs.reserve(w.length());
  for (const auto& l : w.letters()) {
    const auto a = static_cast<std::size_t>(l.index - 1);
    signs.push_back(ori[a] == ori[a + 1] ? 1 : -1);
    if (l.swaps_strands()) std::swap(ori[a], ori[a + 1]);
  }
  return signs;
}

LetterSeq shift_letters(const LetterSeq& letters, int offset) {
  LetterSeq out = letters;
  for (auto& l : out) l.index += offset;
  return out;
}

}  // namespace fintype
