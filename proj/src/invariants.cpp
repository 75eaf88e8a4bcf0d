#include "fintype/invariants.hpp"

#include <map>
#include <stdexcept>
#include <vector>

#include "json.hpp"

namespace fintype {

namespace {

// Temperley-Lieb diagrams on 2n boundary points (bottom 0..n-1, top n..2n-1),
// stored as partner indices packed 5 bits per point.
using Code = unsigned __int128;
constexpr int kBits = 5;
constexpr int kMaxStrands = 12;

int partner(Code c, int p) { return static_cast<int>((c >> (kBits * p)) & 31U); }

void set_partner(Code& c, int p, int q) {
  c &= ~(static_cast<Code>(31U) << (kBits * p));
  c |= static_cast<Code>(static_cast<unsigned>(q)) << (kBits * p);
}

void pair_up(Code& c, int p, int q) {
  set_partner(c, p, q);
  set_partner(c, q, p);
}

// Stacks e_i (0-based positions a, a+1) on top. Returns true when a closed
// loop was formed.
bool apply_cup_cap(Code& c, int n, int a) {
  const int ta = n + a;
  const int tb = n + a + 1;
  const int pa = partner(c, ta);
  const int pb = partner(c, tb);
  if (pa == tb) return true;
  pair_up(c, pa, pb);
  pair_up(c, ta, tb);
  return false;
}

int closure_loops(Code c, int n) {
  std::vector<int> seen(static_cast<std::size_t>(2 * n), 0);
  int loops = 0;
  for (int start = 0; start < n; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    ++loops;
    int p = start;
    while (!seen[static_cast<std::size_t>(p)]) {
      seen[static_cast<std::size_t>(p)] = 1;
      const int q = partner(c, p);
      seen[static_cast<std::size_t>(q)] = 1;
      // the closure joins top j to bottom j
      p = q >= n ? q - n : q + n;
    }
  }
  return loops;
}

LaurentPoly delta() { return LaurentPoly{{2, -1}, {-2, -1}}; }

}  // namespace

LaurentPoly kauffman_bracket(const BraidWord& w) {
  if (w.is_singular()) throw std::invalid_argument("kauffman_bracket needs a non-singular word");
  const int n = w.strands();
  if (n > kMaxStrands) throw std::invalid_argument("kauffman_bracket supports at most 12 strands");
  Code id = 0;
  for (int j = 0; j < n; ++j) pair_up(id, j, n + j);
  std::map<Code, LaurentPoly> state{{id, LaurentPoly(1)}};
  const LaurentPoly d = delta();
  for (const auto& l : w.letters()) {
    const int a = l.index - 1;
    const int straight = l.kind == LetterKind::positive ? 1 : -1;
    std::map<Code, LaurentPoly> next;
    for (const auto& [code, coeff] : state) {
      next[code] += coeff.shifted(straight);
      Code c = code;
      LaurentPoly term = coeff.shifted(-straight);
      if (apply_cup_cap(c, n, a)) term *= d;
      next[c] += term;
    }
    state.clear();
    for (auto& [code, coeff] : next) {
      if (!coeff.is_zero()) state.emplace(code, std::move(coeff));
    }
  }
  LaurentPoly total;
  for (const auto& [code, coeff] : state) {
    total += coeff * d.pow(static_cast<unsigned>(closure_loops(code, n) - 1));
  }
  return total;
}

LaurentPoly jones(const BraidWord& w) {
  int writhe = 0;
  const auto eps = crossing_orientation_signs(w);
  for (std::size_t j = 0; j < w.length(); ++j) {
    writhe += (w.letters()[j].kind == LetterKind::positive ? 1 : -1) * eps[j];
  }
  // f = (-A^3)^(-writhe) <D>, then t^(1/2) = A^2
  LaurentPoly f = kauffman_bracket(w).shifted(-3 * writhe);
  if (writhe % 2 != 0) f = -f;
  return f.compress_exponents(2);
}

std::string format_jones(const LaurentPoly& v) { return v.to_string("t", 2); }

namespace {

using Matrix = std::vector<std::vector<LaurentPoly>>;

Matrix burau_generator(int m, int i, bool inverse) {
  Matrix r(static_cast<std::size_t>(m), std::vector<LaurentPoly>(static_cast<std::size_t>(m)));
  for (int j = 0; j < m; ++j) r[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)] = LaurentPoly(1);
  const auto row = static_cast<std::size_t>(i - 1);
  auto& R = r[row];
  if (!inverse) {
    R[row] = LaurentPoly::monomial(1, -1);
    if (i > 1) R[row - 1] = LaurentPoly::monomial(1, 1);
    if (i < m) R[row + 1] = LaurentPoly(1);
  } else {
    R[row] = LaurentPoly::monomial(-1, -1);
    if (i > 1) R[row - 1] = LaurentPoly(1);
    if (i < m) R[row + 1] = LaurentPoly::monomial(-1, 1);
  }
  return r;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  const std::size_t m = a.size();
  Matrix out(m, std::vector<LaurentPoly>(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < m; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j) {
        if (!b[k][j].is_zero()) out[i][j] += a[i][k] * b[k][j];
      }
    }
  }
  return out;
}

// Laplace expansion along rows, memoized on the set of used columns.
LaurentPoly determinant(const Matrix& a) {
  const std::size_t m = a.size();
  if (m == 0) return LaurentPoly(1);
  std::vector<LaurentPoly> dp(std::size_t{1} << m);
  std::vector<char> known(dp.size(), 0);
  dp[0] = LaurentPoly(1);
  known[0] = 1;
  // dp[mask]: determinant of the first popcount(mask) rows on columns `mask`.
  for (std::size_t mask = 1; mask < dp.size(); ++mask) {
    const auto row = static_cast<std::size_t>(__builtin_popcountll(mask) - 1);
    LaurentPoly acc;
    int sign_parity = 0;
    // columns above j in mask determine the cofactor sign
    for (std::size_t j = m; j-- > 0;) {
      if (!(mask & (std::size_t{1} << j))) continue;
      if (!a[row][j].is_zero()) {
        LaurentPoly term = a[row][j] * dp[mask ^ (std::size_t{1} << j)];
        if (sign_parity) term = -term;
        acc += term;
      }
      sign_parity ^= 1;
    }
    dp[mask] = std::move(acc);
  }
  return dp.back();
}

}  // namespace

LaurentPoly alexander(const BraidWord& w) {
  if (w.is_singular()) throw std::invalid_argument("alexander needs a non-singular word");
  if (!is_knot_closure(w)) throw std::invalid_argument("alexander/conway require a knot closure");
  const int n = w.strands();
  if (n > 16) throw std::invalid_argument("alexander supports at most 16 strands");
  const int m = n - 1;
  Matrix rho(static_cast<std::size_t>(m), std::vector<LaurentPoly>(static_cast<std::size_t>(m)));
  for (int j = 0; j < m; ++j) rho[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)] = LaurentPoly(1);
  for (const auto& l : w.letters()) rho = multiply(rho, burau_generator(m, l.index, l.kind == LetterKind::negative));
  Matrix a = rho;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (auto& e : a[i]) e = -e;
    a[i][i] += LaurentPoly(1);
  }
  LaurentPoly geometric;
  for (int j = 0; j < n; ++j) geometric.add_term(j, 1);
  LaurentPoly delta = determinant(a).exact_divide(geometric);
  if (delta.is_zero()) throw std::runtime_error("alexander polynomial vanished for a knot");
  const int span = delta.low_degree() + delta.high_degree();
  if (span % 2 != 0) throw std::runtime_error("alexander polynomial is not symmetrizable");
  delta = delta.shifted(-span / 2);
  const std::int64_t at_one = delta.value_at_one();
  if (at_one == -1) {
    delta = -delta;
  } else if (at_one != 1) {
    throw std::runtime_error("alexander polynomial of a knot must have |Δ(1)| = 1");
  }
  return delta;
}

LaurentPoly conway(const BraidWord& w) {
  LaurentPoly delta = alexander(w);
  LaurentPoly z;
  const LaurentPoly base{{1, 1}, {0, -2}, {-1, 1}};
  while (!delta.is_zero()) {
    const int h = delta.high_degree();
    if (h < 0) throw std::runtime_error("alexander polynomial not symmetric");
    const std::int64_t c = delta.coeff(h);
    z.add_term(2 * h, c);
    delta -= base.pow(static_cast<unsigned>(h)) * c;
  }
  return z;
}

// ---------------------------------------------------------------------------

InvariantId InvariantId::parse(std::string_view name) {
  if (name.size() == 2 && (name[0] == 'c' || name[0] == 'j') && name[1] >= '0' && name[1] <= '9') {
    const int m = name[1] - '0';
    if (name[0] == 'c') {
      if (m != 2 && m != 4) throw std::invalid_argument("supported Conway coefficients are c2 and c4");
      return {InvariantKind::conway_coefficient, m};
    }
    if (m < 2 || m > 4) throw std::invalid_argument("supported Jones derivatives are j2, j3, j4");
    return {InvariantKind::jones_derivative, m};
  }
  throw std::invalid_argument("unknown invariant '" + std::string(name) + "' (expected c2, c4, j2, j3 or j4)");
}

std::string InvariantId::name() const {
  return std::string(kind == InvariantKind::conway_coefficient ? "c" : "j") + std::to_string(m);
}

int vassiliev_degree(const InvariantId& id) { return id.m; }

// ---------------------------------------------------------------------------

InvariantCache::InvariantCache(std::filesystem::path file) : file_(std::move(file)) {
  if (std::filesystem::exists(*file_)) {
    std::ifstream in(*file_);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      const auto j = nlohmann::json::parse(line, nullptr, false);
      if (j.is_discarded() || !j.contains("key") || !j.contains("value")) continue;
      values_[j["key"].get<std::string>()] = mpq_class(j["value"].get<std::string>());
    }
  }
  out_.open(*file_, std::ios::app);
  if (!out_) throw std::runtime_error("cannot open cache file " + file_->string());
}

std::optional<mpq_class> InvariantCache::get(const std::string& key) const {
  std::shared_lock lock(mutex_);
  auto it = values_.find(key);
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

void InvariantCache::put(const std::string& key, const mpq_class& value) {
  std::unique_lock lock(mutex_);
  auto [it, inserted] = values_.emplace(key, value);
  if (!inserted || !out_.is_open()) return;
  const auto bar1 = key.find('|');
  const auto bar2 = key.rfind('|');
  nlohmann::json j{{"key", key},
                   {"word", key.substr(0, bar1)},
                   {"o", key.substr(bar1 + 1, bar2 - bar1 - 1)},
                   {"invariant", key.substr(bar2 + 1)},
                   {"value", value.get_str()}};
  out_ << j.dump() << '\n';
  out_.flush();
}

std::size_t InvariantCache::size() const {
  std::shared_lock lock(mutex_);
  return values_.size();
}

void InvariantCache::clear() {
  std::unique_lock lock(mutex_);
  values_.clear();
}

std::string InvariantCache::key(const BraidWord& w, const InvariantId& id) {
  return render(w) + "|" + w.orientation().to_string() + "|" + id.name();
}

InvariantCache& default_cache() {
  static InvariantCache cache;
  return cache;
}

namespace {

mpq_class compute(const InvariantId& id, const BraidWord& w) {
  if (!is_knot_closure(w)) throw std::invalid_argument("invariant evaluation requires a knot closure");
  if (id.kind == InvariantKind::conway_coefficient) return mpq_class(conway(w).coeff(id.m));
  const LaurentPoly v = jones(w);
  mpq_class sum = 0;
  mpz_class factorial = 1;
  for (int i = 2; i <= id.m; ++i) factorial *= i;
  for (const auto& [h, a] : v.terms()) {
    // exponent h is in half units: n = h / 2
    mpq_class n(h, 2);
    mpq_class p = 1;
    for (int i = 0; i < id.m; ++i) p *= n;
    sum += mpq_class(mpz_class(std::to_string(a))) * p;
  }
  sum /= factorial;
  sum.canonicalize();
  return sum;
}

}  // namespace

mpq_class evaluate_knot(const InvariantId& id, const BraidWord& w, InvariantCache* cache) {
  if (w.is_singular()) throw std::invalid_argument("evaluate_knot needs a non-singular word");
  std::string key;
  if (cache) {
    key = InvariantCache::key(w, id);
    if (auto hit = cache->get(key)) return *hit;
  }
  mpq_class value = compute(id, w);
  if (cache) cache->put(key, value);
  return value;
}

mpq_class evaluate(const InvariantId& id, const BraidWord& w, InvariantCache* cache) {
  if (!w.is_singular()) return evaluate_knot(id, w, cache);
  return evaluate(id, FormalSum::of_word(w), cache);
}

mpq_class evaluate(const InvariantId& id, const FormalSum& s, InvariantCache* cache) {
  const FormalSum flat = s.max_singularity() > 0 ? desingularize(s) : s;
  mpq_class total = 0;
  for (const auto& [word, coeff] : flat.terms()) {
    total += mpq_class(mpz_class(std::to_string(coeff))) *
             evaluate_knot(id, BraidWord(flat.strands(), flat.orientation(), word), cache);
  }
  return total;
}

}  // namespace fintype
