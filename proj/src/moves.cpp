#include "fintype/moves.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace fintype {

std::string_view to_string(SignConvention c) {
  return c == SignConvention::additive ? "additive" : "multiplicative";
}

SignConvention parse_sign_convention(std::string_view text) {
  if (text == "additive") return SignConvention::additive;
  if (text == "multiplicative") return SignConvention::multiplicative;
  throw std::invalid_argument("unknown sign convention '" + std::string(text) + "'");
}

int so(int i, int d, const Orientation& o, SignConvention conv) {
  if (d != 2 && d != -2) throw std::invalid_argument("double crossing exponent must be +-2");
  const int a = o(i);
  const int b = o(i + 1);
  const int exponent = conv == SignConvention::additive ? a + b : a * b;
  return (d > 0 ? 1 : -1) * (exponent % 2 == 0 ? 1 : -1);
}

// ---------------------------------------------------------------------------

MoveSpec MoveSpec::make(int k, std::vector<int> d, Orientation o) {
  if (k < 1) throw std::invalid_argument("move parameter k must be positive");
  if (static_cast<int>(d.size()) != k + 1) {
    throw std::invalid_argument("d must have k+1 = " + std::to_string(k + 1) + " entries, got " + std::to_string(d.size()));
  }
  for (int v : d) {
    if (v != 2 && v != -2) throw std::invalid_argument("d entries must be +-2");
  }
  if (o.size() != k + 2) {
    throw std::invalid_argument("o must have k+2 = " + std::to_string(k + 2) + " bits, got " + std::to_string(o.size()));
  }
  return MoveSpec{k, std::move(d), std::move(o)};
}

MoveSpec MoveSpec::from_json(std::string_view text) {
  const auto j = nlohmann::json::parse(text);
  return make(j.at("k").get<int>(), j.at("d").get<std::vector<int>>(), Orientation::parse(j.at("o").get<std::string>()));
}

std::string MoveSpec::to_json(SignConvention conv) const {
  nlohmann::json j{{"k", k}, {"d", d}, {"o", o.to_string()}, {"conv", std::string(fintype::to_string(conv))}};
  return j.dump();
}

std::string MoveSpec::describe() const {
  std::ostringstream os;
  os << "k=" << k << " d=";
  for (std::size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i];
  os << " o=" << o.to_string();
  return os.str();
}

UVector flip(const UVector& u) {
  UVector out = u;
  for (auto& b : out) b ^= 1U;
  return out;
}

std::vector<UVector> all_u_vectors(int k) {
  std::vector<UVector> out;
  const unsigned count = 1U << static_cast<unsigned>(k);
  for (unsigned v = count; v-- > 0;) {
    UVector u(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) u[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>((v >> static_cast<unsigned>(i)) & 1U);
    out.push_back(std::move(u));
  }
  return out;
}

namespace {

void push_power(LetterSeq& out, int index, int d) {
  const LetterKind kind = d > 0 ? LetterKind::positive : LetterKind::negative;
  for (int c = 0; c < std::abs(d); ++c) out.push_back({index, kind});
}

}  // namespace

BraidWord bh_word(const MoveSpec& spec) {
  const int k = spec.k;
  const auto d = [&](int i) { return spec.d[static_cast<std::size_t>(i - 1)]; };
  LetterSeq w;
  for (int i = 1; i <= k; ++i) push_power(w, i, d(i));
  push_power(w, k + 1, d(k + 1));
  for (int i = 1; i <= k; ++i) push_power(w, k + 1 - i, -d(k + 1 - i));
  for (int i = 2; i <= k; ++i) push_power(w, i, d(i));
  push_power(w, k + 1, -d(k + 1));
  for (int i = 2; i <= k; ++i) push_power(w, k + 2 - i, -d(k + 2 - i));
  return BraidWord(spec.strands(), spec.o, std::move(w));
}

LetterSeq w_letters(const UVector& u, WVariant variant, bool reversed) {
  LetterSeq out;
  const int k = static_cast<int>(u.size());
  for (int step = 0; step < k; ++step) {
    const int i = reversed ? k - step : step + 1;
    if (u[static_cast<std::size_t>(i - 1)] == 0) continue;
    if (variant == WVariant::squared) {
      push_power(out, i, 2);
    } else {
      out.push_back({i, LetterKind::singular_positive});
    }
  }
  return out;
}

BraidWord w_word(const UVector& u, WVariant variant, bool reversed, int strands, const Orientation& o) {
  return BraidWord(strands, o, w_letters(u, variant, reversed));
}

LetterSeq u_letters(const UVector& u, const std::vector<int>& d) {
  if (d.size() < u.size()) throw std::invalid_argument("u_letters: d shorter than u");
  LetterSeq out;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == 0) continue;
    out.push_back({static_cast<int>(i + 1), d[i] > 0 ? LetterKind::singular_positive : LetterKind::singular_negative});
  }
  return out;
}

int theorem_sign(const UVector& u, const MoveSpec& spec, SignConvention conv) {
  if (static_cast<int>(u.size()) != spec.k) throw std::invalid_argument("u must have k entries");
  int sign = so(spec.k + 1, spec.d[static_cast<std::size_t>(spec.k)], spec.o, conv);
  for (int i = 1; i <= spec.k; ++i) {
    sign *= so(i, spec.d[static_cast<std::size_t>(i - 1)], spec.o, conv);
    if (u[static_cast<std::size_t>(i - 1)] == 0) sign = -sign;  // (-1)^(u_i + 1)
  }
  return sign;
}

MovePair make_pair(const MoveSpec& spec, const BraidWord& T) {
  if (T.strands() != spec.strands()) throw std::invalid_argument("T must live on k+2 strands");
  if (T.orientation() != spec.o) throw std::invalid_argument("T must carry the move's orientation function");
  if (!is_knot_closure(T)) throw std::invalid_argument("T does not close to a knot: " + permutation_of(T).to_string());
  const BraidWord bh = bh_word(spec);
  return MovePair{spec, T, compose(bh, T), T};
}

namespace {

RhsTerm make_term(int sign, const UVector& u, int block, int offset, int generator, bool flip_u, WVariant variant,
                  const BraidWord& x) {
  LetterSeq letters = shift_letters(w_letters(u, variant, false), offset);
  if (variant == WVariant::squared) {
    push_power(letters, generator, 2);
  } else {
    letters.push_back({generator, LetterKind::singular_positive});
  }
  const LetterSeq right = shift_letters(w_letters(flip_u ? flip(u) : u, variant, true), offset);
  letters.insert(letters.end(), right.begin(), right.end());
  letters.insert(letters.end(), x.letters().begin(), x.letters().end());
  return RhsTerm{sign, u, block, x.with_letters(std::move(letters))};
}

void require_same_phi(const BraidWord& T, const BraidWord& x) {
  if (x.strands() != T.strands() || x.orientation() != T.orientation()) {
    throw std::invalid_argument("x must share T's strand count and orientation");
  }
  const Permutation pt = permutation_of(T);
  const Permutation px = permutation_of(x);
  if (pt != px) throw std::invalid_argument("x induces " + px.to_string() + " but T induces " + pt.to_string());
}

}  // namespace

std::vector<RhsTerm> rhs_terms(const MovePair& pair, const BraidWord& x, SignConvention conv, WVariant variant) {
  require_same_phi(pair.T, x);
  std::vector<RhsTerm> out;
  for (const auto& u : all_u_vectors(pair.spec.k)) {
    out.push_back(make_term(theorem_sign(u, pair.spec, conv), u, 0, 0, pair.spec.k + 1, true, variant, x));
  }
  return out;
}

BlockMove block_words(const std::vector<MoveSpec>& blocks, const Orientation& o, std::optional<std::vector<int>> offsets) {
  if (blocks.empty()) throw std::invalid_argument("block_words needs at least one block");
  const int k = blocks.front().k;
  for (const auto& b : blocks) {
    if (b.k != k) throw std::invalid_argument("all blocks must share the same k");
  }
  const int width = k + 2;
  std::vector<int> offs;
  if (offsets) {
    offs = *offsets;
    if (offs.size() != blocks.size()) throw std::invalid_argument("one offset per block required");
  } else {
    for (std::size_t j = 0; j < blocks.size(); ++j) offs.push_back(static_cast<int>(j) * width);
  }
  std::vector<int> order(offs.size());
  for (std::size_t j = 0; j < order.size(); ++j) order[j] = static_cast<int>(j);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return offs[static_cast<std::size_t>(a)] < offs[static_cast<std::size_t>(b)]; });
  for (std::size_t j = 0; j < order.size(); ++j) {
    const int off = offs[static_cast<std::size_t>(order[j])];
    if (off < 0 || off + width > o.size()) throw std::invalid_argument("block window exceeds the strand count");
    if (j > 0 && off < offs[static_cast<std::size_t>(order[j - 1])] + width) throw std::invalid_argument("block windows overlap");
  }
  LetterSeq letters;
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    if (blocks[j].o != o.window(offs[j] + 1, width)) {
      throw std::invalid_argument("block " + std::to_string(j) + " orientation is not the restriction of o to its window");
    }
    const LetterSeq shifted = shift_letters(bh_word(blocks[j]).letters(), offs[j]);
    letters.insert(letters.end(), shifted.begin(), shifted.end());
  }
  BraidWord word(o.size(), o, std::move(letters));
  return BlockMove{k, blocks, offs, o, std::move(word)};
}

BlockPair make_block_pair(const BlockMove& move, const BraidWord& T) {
  if (T.strands() != move.strands() || T.orientation() != move.o) {
    throw std::invalid_argument("T must share the block word's strand count and orientation");
  }
  if (!is_knot_closure(T)) throw std::invalid_argument("T does not close to a knot: " + permutation_of(T).to_string());
  return BlockPair{move, T, compose(move.word, T), T};
}

std::vector<RhsTerm> block_rhs_terms(const BlockPair& pair, const BraidWord& x, SignConvention conv, WVariant variant,
                                     bool flip_u) {
  require_same_phi(pair.T, x);
  const auto& move = pair.move;
  std::vector<RhsTerm> out;
  for (std::size_t j = 0; j < move.blocks.size(); ++j) {
    const int off = move.offsets[j];
    for (const auto& u : all_u_vectors(move.k)) {
      out.push_back(make_term(theorem_sign(u, move.blocks[j], conv), u, static_cast<int>(j), off, off + move.k + 1, flip_u,
                              variant, x));
    }
  }
  return out;
}

}  // namespace fintype
