#include "fintype/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace fintype {

namespace {

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::string quote(const std::string& s) { return "\"" + s + "\""; }

mpq_class abs_value(const mpq_class& q) { return q < 0 ? mpq_class(-q) : q; }

}  // namespace

nlohmann::json CheckReport::to_json() const {
  nlohmann::json j;
  j["kind"] = kind;
  j["specs"] = nlohmann::json::array();
  for (const auto& b : blocks) j["specs"].push_back(nlohmann::json::parse(b.to_json(conv)));
  j["T"] = render(T);
  j["x"] = render(x);
  j["o"] = T.orientation().to_string();
  j["invariant"] = id.name();
  j["variant"] = variant == WVariant::squared ? "squared" : "singular";
  if (kind == "general") j["flip_u"] = flip_u;
  j["lhs"] = lhs.get_str();
  j["rhs"] = rhs.get_str();
  j["equal"] = equal;
  j["terms"] = nlohmann::json::array();
  for (const auto& t : terms) {
    j["terms"].push_back({{"sign", t.sign}, {"block", t.block}, {"word", t.word}, {"value", t.value.get_str()}});
  }
  return j;
}

namespace {

void fill_rhs(CheckReport& r, const std::vector<RhsTerm>& terms, InvariantCache* cache) {
  r.rhs = 0;
  for (const auto& t : terms) {
    const mpq_class v = evaluate(r.id, t.word, cache);
    r.rhs += t.sign * v;
    r.terms.push_back({t.sign, t.block, render(t.word), v});
  }
}

}  // namespace

CheckReport check_theorem(const MoveSpec& spec, const BraidWord& T, const BraidWord& x, const InvariantId& id,
                          SignConvention conv, WVariant variant, InvariantCache* cache) {
  const MovePair pair = make_pair(spec, T);
  const auto terms = rhs_terms(pair, x, conv, variant);
  CheckReport r;
  r.kind = "theorem";
  r.blocks = {spec};
  r.T = T;
  r.x = x;
  r.id = id;
  r.conv = conv;
  r.variant = variant;
  r.lhs = evaluate_knot(id, pair.K_word, cache) - evaluate_knot(id, pair.J_word, cache);
  fill_rhs(r, terms, cache);
  r.equal = r.lhs == r.rhs;
  return r;
}

SymbolicReport symbolic_report(const MoveSpec& spec, SignConvention conv) {
  const int top = spec.k + 1;
  FormalSum expanded = expand_word(bh_word(spec), conv, top);
  FormalSum rhs = rhs_symbolic(spec, conv);
  const bool equal = collapse_top_degree(expanded, top) == collapse_top_degree(rhs, top);
  return SymbolicReport{equal, std::move(expanded), std::move(rhs)};
}

bool check_symbolic(const MoveSpec& spec, SignConvention conv) { return symbolic_report(spec, conv).equal; }

SymbolicReport symbolic_block_report(const BlockMove& move, SignConvention conv, bool flip_u) {
  const int top = move.k + 1;
  FormalSum expanded = expand_word(move.word, conv, top);
  FormalSum rhs = FormalSum::identity(move.strands(), move.o);
  for (std::size_t j = 0; j < move.blocks.size(); ++j) {
    const FormalSum local = rhs_symbolic(move.blocks[j], conv, flip_u);
    for (const auto& [w, c] : local.terms()) {
      if (w.empty()) continue;
      rhs.add(shift_letters(w, move.offsets[j]), c);
    }
  }
  const bool equal = collapse_top_degree(expanded, top) == collapse_top_degree(rhs, top);
  return SymbolicReport{equal, std::move(expanded), std::move(rhs)};
}

XIndependenceReport check_x_independence(const MoveSpec& spec, const BraidWord& T, const std::vector<BraidWord>& xs,
                                         const InvariantId& id, SignConvention conv, InvariantCache* cache) {
  const MovePair pair = make_pair(spec, T);
  XIndependenceReport out;
  for (const auto& x : xs) {
    mpq_class value = 0;
    for (const auto& t : rhs_terms(pair, x, conv)) value += t.sign * evaluate(id, t.word, cache);
    if (!out.values.empty() && value != out.values.front()) out.equal = false;
    out.values.push_back(value);
  }
  return out;
}

CheckReport check_general(const BlockMove& move, const BraidWord& T, const BraidWord& x, const InvariantId& id,
                          SignConvention conv, bool flip_u, InvariantCache* cache) {
  const BlockPair pair = make_block_pair(move, T);
  const auto terms = block_rhs_terms(pair, x, conv, WVariant::squared, flip_u);
  CheckReport r;
  r.kind = "general";
  r.blocks = move.blocks;
  r.T = T;
  r.x = x;
  r.id = id;
  r.conv = conv;
  r.flip_u = flip_u;
  r.lhs = evaluate_knot(id, pair.K_word, cache) - evaluate_knot(id, pair.J_word, cache);
  fill_rhs(r, terms, cache);
  r.equal = r.lhs == r.rhs;
  return r;
}

CEquivalenceReport check_c_equivalence(const MoveSpec& spec, const BraidWord& T, const InvariantId& id,
                                       InvariantCache* cache) {
  if (vassiliev_degree(id) > spec.k) {
    throw std::invalid_argument(id.name() + " has degree above k = " + std::to_string(spec.k));
  }
  const MovePair pair = make_pair(spec, T);
  CEquivalenceReport r;
  r.value_K = evaluate_knot(id, pair.K_word, cache);
  r.value_J = evaluate_knot(id, pair.J_word, cache);
  r.equal = r.value_K == r.value_J;
  return r;
}

mpq_class boundedness_probe(const std::vector<CheckReport>& corpus) {
  if (corpus.empty()) throw std::invalid_argument("boundedness_probe needs a non-empty corpus");
  mpq_class best = 0;
  for (const auto& r : corpus) best = std::max(best, abs_value(r.lhs));
  return best;
}

// ---------------------------------------------------------------------------

int Rng::uniform(int lo, int hi) {
  if (hi < lo) throw std::invalid_argument("Rng::uniform: empty range");
  const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t v = engine_();
  while (v >= limit) v = engine_();
  return lo + static_cast<int>(v % range);
}

BraidWord random_word(Rng& rng, int strands, const Orientation& o, int length) {
  LetterSeq letters;
  for (int j = 0; j < length; ++j) {
    letters.push_back({rng.uniform(1, strands - 1), rng.coin() ? LetterKind::positive : LetterKind::negative});
  }
  return BraidWord(strands, o, std::move(letters));
}

BraidWord random_knot_word(Rng& rng, int strands, const Orientation& o, int min_len, int max_len) {
  if (!o.is_constant()) throw std::invalid_argument("braid closures with mixed orientation are never knots");
  for (int attempt = 0; attempt < 1000000; ++attempt) {
    BraidWord w = random_word(rng, strands, o, rng.uniform(min_len, max_len));
    if (is_knot_closure(w)) return w;
  }
  throw std::runtime_error("could not sample a knot word; raise the length bounds");
}

namespace {

std::vector<int> arrangement(const LetterSeq& letters, int strands) {
  std::vector<int> arr(static_cast<std::size_t>(strands));
  for (int i = 0; i < strands; ++i) arr[static_cast<std::size_t>(i)] = i;
  for (const auto& l : letters) {
    if (l.swaps_strands()) std::swap(arr[static_cast<std::size_t>(l.index - 1)], arr[static_cast<std::size_t>(l.index)]);
  }
  return arr;
}

}  // namespace

BraidWord random_matching_word(Rng& rng, const BraidWord& T, int min_len, int max_len) {
  const Permutation target = permutation_of(T);
  const int n = T.strands();
  for (int attempt = 0; attempt < 20000; ++attempt) {
    BraidWord w = random_word(rng, n, T.orientation(), rng.uniform(min_len, max_len));
    if (permutation_of(w) == target) return w;
  }
  // Corrective suffix: bubble the prefix arrangement into T's arrangement.
  BraidWord prefix = random_word(rng, n, T.orientation(), rng.uniform(0, std::max(0, min_len)));
  LetterSeq letters = prefix.letters();
  std::vector<int> cur = arrangement(letters, n);
  const std::vector<int> goal = arrangement(T.letters(), n);
  for (int pos = 0; pos < n; ++pos) {
    int at = pos;
    while (cur[static_cast<std::size_t>(at)] != goal[static_cast<std::size_t>(pos)]) ++at;
    for (int j = at; j > pos; --j) {
      std::swap(cur[static_cast<std::size_t>(j - 1)], cur[static_cast<std::size_t>(j)]);
      letters.push_back({j, rng.coin() ? LetterKind::positive : LetterKind::negative});
    }
  }
  BraidWord w = T.with_letters(std::move(letters));
  if (permutation_of(w) != target) throw std::logic_error("corrective suffix did not reach the target permutation");
  return w;
}

MoveSpec random_spec(Rng& rng, int k, std::uint8_t orientation_bit) {
  std::vector<int> d;
  for (int i = 0; i <= k; ++i) d.push_back(rng.coin() ? 2 : -2);
  return MoveSpec::make(k, std::move(d), Orientation::constant(k + 2, orientation_bit));
}

BraidWord random_singular_word(Rng& rng, int strands, const Orientation& o, int plain, int singular) {
  const int length = plain + singular;
  // an n-cycle needs at least n-1 transpositions, with matching parity
  if (length < strands - 1 || (length - strands + 1) % 2 != 0) {
    throw std::invalid_argument("no knot closure has " + std::to_string(length) + " letters on " +
                                std::to_string(strands) + " strands");
  }
  for (int attempt = 0; attempt < 1000000; ++attempt) {
    std::vector<int> slots(static_cast<std::size_t>(length), 0);
    for (int s = 0; s < singular; ++s) slots[static_cast<std::size_t>(s)] = 1;
    for (int j = length - 1; j > 0; --j) std::swap(slots[static_cast<std::size_t>(j)], slots[static_cast<std::size_t>(rng.uniform(0, j))]);
    LetterSeq letters;
    LetterSeq resolved;
    for (int j = 0; j < length; ++j) {
      const int i = rng.uniform(1, strands - 1);
      if (slots[static_cast<std::size_t>(j)]) {
        letters.push_back({i, LetterKind::singular});
        resolved.push_back({i, LetterKind::positive});
      } else {
        const Letter l{i, rng.coin() ? LetterKind::positive : LetterKind::negative};
        letters.push_back(l);
        resolved.push_back(l);
      }
    }
    if (is_knot_closure(BraidWord(strands, o, resolved))) return BraidWord(strands, o, std::move(letters));
  }
  throw std::runtime_error("could not sample a singular knot word");
}

std::pair<BraidWord, BraidWord> shrink_counterexample(
    const BraidWord& T, const BraidWord& x, const std::function<bool(const BraidWord&, const BraidWord&)>& still_fails) {
  BraidWord t = T;
  BraidWord y = x;
  const Permutation phi = permutation_of(T);
  auto try_shrink = [&](BraidWord& w, bool is_t) {
    const auto& letters = w.letters();
    for (std::size_t a = 0; a < letters.size(); ++a) {
      for (std::size_t b = a + 1; b < letters.size(); ++b) {
        LetterSeq cand;
        for (std::size_t j = 0; j < letters.size(); ++j) {
          if (j != a && j != b) cand.push_back(letters[j]);
        }
        BraidWord c = w.with_letters(std::move(cand));
        if (permutation_of(c) != phi) continue;
        const bool fails = is_t ? still_fails(c, y) : still_fails(t, c);
        if (fails) {
          w = std::move(c);
          return true;
        }
      }
    }
    return false;
  };
  bool progress = true;
  while (progress) {
    progress = try_shrink(t, true);
    progress = try_shrink(y, false) || progress;
  }
  return {t, y};
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',' || c == ' ') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

bool parse_bool(const std::string& v) {
  if (v == "1" || v == "true" || v == "yes" || v == "on") return true;
  if (v == "0" || v == "false" || v == "no" || v == "off") return false;
  throw std::invalid_argument("not a boolean: '" + v + "'");
}

void apply_key(SweepConfig& c, const std::string& key, const std::string& value) {
  auto as_int = [&] { return std::stoi(value); };
  if (key == "seed") c.seed = std::stoull(value);
  else if (key == "k1_cases") c.k1_cases = as_int();
  else if (key == "k2_cases") c.k2_cases = as_int();
  else if (key == "k3_cases") c.k3_cases = as_int();
  else if (key == "k4_cases") c.k4_cases = as_int();
  else if (key == "general_cases") c.general_cases = as_int();
  else if (key == "general_k") c.general_k = as_int();
  else if (key == "xindep_cases") c.xindep_cases = as_int();
  else if (key == "xindep_count") c.xindep_count = as_int();
  else if (key == "cequiv_cases") c.cequiv_cases = as_int();
  else if (key == "k1_invariants") c.k1_invariants = split_list(value);
  else if (key == "k2_invariants") c.k2_invariants = split_list(value);
  else if (key == "k3_invariants") c.k3_invariants = split_list(value);
  else if (key == "general_invariants") c.general_invariants = split_list(value);
  else if (key == "conv") c.conv = parse_sign_convention(value);
  else if (key == "singular_rhs") c.singular_rhs = parse_bool(value);
  else if (key == "force") c.force = parse_bool(value);
  else if (key == "t_min") c.t_min = as_int();
  else if (key == "t_max") c.t_max = as_int();
  else if (key == "x_min") c.x_min = as_int();
  else if (key == "x_max") c.x_max = as_int();
  else if (key == "threads") c.threads = as_int();
  else if (key == "cache_file") c.cache_file = value;
  else throw std::invalid_argument("unknown sweep config key '" + key + "'");
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

SweepConfig SweepConfig::parse(const std::string& text) {
  SweepConfig c;
  const std::string body = trim(text);
  if (!body.empty() && body.front() == '{') {
    const auto j = nlohmann::json::parse(body);
    for (const auto& [key, value] : j.items()) {
      std::string v;
      if (value.is_string()) {
        v = value.get<std::string>();
      } else if (value.is_array()) {
        for (const auto& item : value) v += (v.empty() ? "" : ",") + (item.is_string() ? item.get<std::string>() : item.dump());
      } else {
        v = value.dump();
      }
      apply_key(c, key, v);
    }
    return c;
  }
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key=value");
    apply_key(c, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return c;
}

SweepConfig SweepConfig::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read config " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

nlohmann::json SweepConfig::to_json() const {
  return {{"seed", seed},
          {"k1_cases", k1_cases},
          {"k2_cases", k2_cases},
          {"k3_cases", k3_cases},
          {"k4_cases", k4_cases},
          {"general_cases", general_cases},
          {"general_k", general_k},
          {"xindep_cases", xindep_cases},
          {"xindep_count", xindep_count},
          {"cequiv_cases", cequiv_cases},
          {"k1_invariants", k1_invariants},
          {"k2_invariants", k2_invariants},
          {"k3_invariants", k3_invariants},
          {"general_invariants", general_invariants},
          {"conv", std::string(fintype::to_string(conv))},
          {"singular_rhs", singular_rhs},
          {"force", force},
          {"t_min", t_min},
          {"t_max", t_max},
          {"x_min", x_min},
          {"x_max", x_max}};
}

std::string repro_command(const std::string& program, const CheckReport& r, std::uint64_t seed) {
  std::ostringstream os;
  if (r.kind == "general") {
    os << program << " general --n " << r.blocks.size() << " --k " << r.spec().k;
    for (const auto& b : r.blocks) os << " --d " << join_ints(b.d);
    if (!r.flip_u) os << " --literal";
  } else {
    os << program << " check --k " << r.spec().k << " --d " << join_ints(r.spec().d);
  }
  os << " --o " << r.T.orientation().to_string() << " --t " << quote(render(r.T)) << " --x " << quote(render(r.x))
     << " --inv " << r.id.name() << " --conv " << fintype::to_string(r.conv);
  if (r.variant == WVariant::singular) os << " --singular-rhs";
  os << " --seed " << seed;
  return os.str();
}

namespace {

enum class CaseKind { theorem, general, xindep, cequiv };

struct SweepCase {
  CaseKind kind = CaseKind::theorem;
  int group_k = 1;
  std::vector<MoveSpec> specs;
  BraidWord T = BraidWord::identity(2, Orientation::constant(2));
  std::vector<BraidWord> xs;
  std::vector<InvariantId> ids;
};

struct CaseOutcome {
  nlohmann::json rows = nlohmann::json::array();
  std::vector<std::vector<std::string>> csv;
  int checks = 0;
  int failures = 0;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string describe_specs(const std::vector<MoveSpec>& specs) {
  std::string s;
  for (std::size_t j = 0; j < specs.size(); ++j) s += (j ? ";" : "") + join_ints(specs[j].d);
  return s;
}

CaseOutcome run_case(const SweepCase& c, std::size_t index, const SweepConfig& cfg, const std::string& program,
                     InvariantCache* cache) {
  CaseOutcome out;
  const std::string kind_name = c.kind == CaseKind::theorem   ? "theorem"
                                : c.kind == CaseKind::general ? "general"
                                : c.kind == CaseKind::xindep  ? "x-independence"
                                                              : "c-equivalence";
  auto csv_row = [&](const std::string& inv, const std::string& lhs, const std::string& rhs, bool ok,
                     const std::string& x) {
    out.csv.push_back({std::to_string(index), kind_name, std::to_string(c.group_k), describe_specs(c.specs),
                       c.T.orientation().to_string(), render(c.T), x, inv, lhs, rhs, ok ? "pass" : "FAIL"});
  };

  for (const auto& id : c.ids) {
    ++out.checks;
    nlohmann::json row;
    row["case"] = index;
    row["kind"] = kind_name;
    row["k"] = c.group_k;
    bool ok = true;
    try {
      if (c.kind == CaseKind::theorem || c.kind == CaseKind::general) {
        const BraidWord& x = c.xs.front();
        CheckReport r = c.kind == CaseKind::theorem
                            ? check_theorem(c.specs.front(), c.T, x, id, cfg.conv, WVariant::squared, cache)
                            : check_general(block_words(c.specs, c.T.orientation()), c.T, x, id, cfg.conv, true, cache);
        row["check"] = r.to_json();
        ok = r.equal;
        if (c.kind == CaseKind::theorem && cfg.singular_rhs) {
          const CheckReport s = check_theorem(c.specs.front(), c.T, x, id, cfg.conv, WVariant::singular, cache);
          row["singular_rhs"] = s.rhs.get_str();
          row["singular_rhs_agrees"] = s.rhs == r.rhs;
          ok = ok && s.rhs == r.rhs;
        }
        if (c.kind == CaseKind::theorem && id.kind == InvariantKind::conway_coefficient && id.m == 2) {
          // the Jones path must give j2 = -3 c2 on both sides
          const CheckReport j = check_theorem(c.specs.front(), c.T, x, InvariantId{InvariantKind::jones_derivative, 2},
                                              cfg.conv, WVariant::squared, cache);
          const bool agree = j.lhs == -3 * r.lhs && j.rhs == -3 * r.rhs;
          row["jones_cross_check"] = agree;
          ok = ok && agree;
        }
        row["repro"] = repro_command(program, r, cfg.seed);
        if (!ok) {
          auto fails = [&](const BraidWord& t, const BraidWord& y) {
            try {
              if (!is_knot_closure(t)) return false;
              const CheckReport q = c.kind == CaseKind::theorem
                                        ? check_theorem(c.specs.front(), t, y, id, cfg.conv, WVariant::squared, cache)
                                        : check_general(block_words(c.specs, t.orientation()), t, y, id, cfg.conv, true, cache);
              return !q.equal;
            } catch (const std::exception&) {
              return false;
            }
          };
          if (!r.equal) {
            auto [st, sx] = shrink_counterexample(c.T, x, fails);
            CheckReport m = r;
            m.T = st;
            m.x = sx;
            row["minimized"] = {{"T", render(st)}, {"x", render(sx)}, {"repro", repro_command(program, m, cfg.seed)}};
          }
        }
        csv_row(id.name(), r.lhs.get_str(), r.rhs.get_str(), ok, render(x));
      } else if (c.kind == CaseKind::xindep) {
        const XIndependenceReport r = check_x_independence(c.specs.front(), c.T, c.xs, id, cfg.conv, cache);
        row["spec"] = nlohmann::json::parse(c.specs.front().to_json(cfg.conv));
        row["T"] = render(c.T);
        row["xs"] = nlohmann::json::array();
        row["values"] = nlohmann::json::array();
        for (std::size_t j = 0; j < c.xs.size(); ++j) {
          row["xs"].push_back(render(c.xs[j]));
          row["values"].push_back(r.values[j].get_str());
        }
        row["invariant"] = id.name();
        row["equal"] = r.equal;
        ok = r.equal;
        std::string xs;
        for (const auto& x : c.xs) xs += (xs.empty() ? "" : " | ") + render(x);
        csv_row(id.name(), r.values.front().get_str(), r.values.back().get_str(), ok, xs);
      } else {
        const CEquivalenceReport r = check_c_equivalence(c.specs.front(), c.T, id, cache);
        row["spec"] = nlohmann::json::parse(c.specs.front().to_json(cfg.conv));
        row["T"] = render(c.T);
        row["invariant"] = id.name();
        row["value_K"] = r.value_K.get_str();
        row["value_J"] = r.value_J.get_str();
        row["equal"] = r.equal;
        ok = r.equal;
        csv_row(id.name(), r.value_K.get_str(), r.value_J.get_str(), ok, "");
      }
    } catch (const std::exception& e) {
      ok = false;
      row["error"] = e.what();
      csv_row(id.name(), "", "", false, "");
    }
    row["pass"] = ok;
    if (!ok) ++out.failures;
    out.rows.push_back(std::move(row));
  }
  return out;
}

std::vector<InvariantId> parse_ids(const std::vector<std::string>& names) {
  std::vector<InvariantId> ids;
  for (const auto& n : names) ids.push_back(InvariantId::parse(n));
  return ids;
}

}  // namespace

SweepResult sweep(const SweepConfig& cfg, const std::string& program) {
  SweepResult result;
  Rng rng(cfg.seed);
  std::vector<SweepCase> cases;

  auto theorem_group = [&](int k, int count, const std::vector<std::string>& names) {
    const auto ids = parse_ids(names);
    for (int c = 0; c < count; ++c) {
      SweepCase sc;
      sc.kind = CaseKind::theorem;
      sc.group_k = k;
      const auto bit = static_cast<std::uint8_t>(rng.uniform(0, 1));
      sc.specs = {random_spec(rng, k, bit)};
      sc.T = random_knot_word(rng, k + 2, sc.specs.front().o, cfg.t_min, cfg.t_max);
      sc.xs = {random_matching_word(rng, sc.T, cfg.x_min, cfg.x_max)};
      sc.ids = ids;
      cases.push_back(std::move(sc));
    }
  };

  theorem_group(1, cfg.k1_cases, cfg.k1_invariants);
  theorem_group(2, cfg.k2_cases, cfg.k2_invariants);
  theorem_group(3, cfg.k3_cases, cfg.k3_invariants);
  if (cfg.k4_cases > 0) {
    if (cfg.force) {
      theorem_group(4, cfg.k4_cases, {"c4"});
    } else {
      result.warnings.push_back("k=4 exceeds desk-scale budget; skipped (set force=true to run)");
    }
  }

  for (int c = 0; c < cfg.general_cases; ++c) {
    SweepCase sc;
    sc.kind = CaseKind::general;
    sc.group_k = cfg.general_k;
    const auto bit = static_cast<std::uint8_t>(rng.uniform(0, 1));
    sc.specs = {random_spec(rng, cfg.general_k, bit), random_spec(rng, cfg.general_k, bit)};
    const Orientation o = Orientation::constant(2 * (cfg.general_k + 2), bit);
    sc.T = random_knot_word(rng, o.size(), o, cfg.t_min + 4, cfg.t_max + 6);
    sc.xs = {random_matching_word(rng, sc.T, cfg.x_min + 4, cfg.x_max + 4)};
    sc.ids = parse_ids(cfg.general_invariants);
    cases.push_back(std::move(sc));
  }

  for (int c = 0; c < cfg.xindep_cases; ++c) {
    SweepCase sc;
    sc.kind = CaseKind::xindep;
    sc.group_k = 1;
    sc.specs = {random_spec(rng, 1, 0)};
    sc.T = random_knot_word(rng, 3, sc.specs.front().o, cfg.t_min, cfg.t_max);
    sc.xs.push_back(sc.T);
    int guard = 0;
    while (static_cast<int>(sc.xs.size()) < cfg.xindep_count && guard++ < 1000) {
      BraidWord x = random_matching_word(rng, sc.T, cfg.x_min, cfg.x_max);
      if (std::find(sc.xs.begin(), sc.xs.end(), x) == sc.xs.end()) sc.xs.push_back(std::move(x));
    }
    sc.ids = parse_ids({"c2", "j2"});
    cases.push_back(std::move(sc));
  }

  for (int k : {2, 3}) {
    for (int c = 0; c < cfg.cequiv_cases; ++c) {
      SweepCase sc;
      sc.kind = CaseKind::cequiv;
      sc.group_k = k;
      sc.specs = {random_spec(rng, k, static_cast<std::uint8_t>(rng.uniform(0, 1)))};
      sc.T = random_knot_word(rng, k + 2, sc.specs.front().o, cfg.t_min, cfg.t_max);
      sc.ids = k == 2 ? parse_ids({"c2", "j2"}) : parse_ids({"c2", "j2", "j3"});
      cases.push_back(std::move(sc));
    }
  }

  std::unique_ptr<InvariantCache> file_cache;
  if (!cfg.cache_file.empty()) file_cache = std::make_unique<InvariantCache>(cfg.cache_file);
  InvariantCache* cache = file_cache ? file_cache.get() : &default_cache();

  std::vector<CaseOutcome> outcomes(cases.size());
  std::atomic<std::size_t> next{0};
  const unsigned hw = std::max(1U, std::thread::hardware_concurrency());
  const unsigned workers = std::min<unsigned>(cfg.threads > 0 ? static_cast<unsigned>(cfg.threads) : hw,
                                              static_cast<unsigned>(std::max<std::size_t>(1, cases.size())));
  auto work = [&] {
    for (std::size_t i = next++; i < cases.size(); i = next++) outcomes[i] = run_case(cases[i], i, cfg, program, cache);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < workers; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  nlohmann::json rows = nlohmann::json::array();
  std::ostringstream csv;
  csv << "case,kind,k,d,o,T,x,invariant,lhs,rhs,result\n";
  for (const auto& o : outcomes) {
    result.total += o.checks;
    result.failed += o.failures;
    for (const auto& r : o.rows) rows.push_back(r);
    for (const auto& fields : o.csv) {
      for (std::size_t f = 0; f < fields.size(); ++f) csv << (f ? "," : "") << csv_field(fields[f]);
      csv << '\n';
    }
  }
  std::map<std::string, int> per_kind;
  for (const auto& c : cases) {
    const std::string key = c.kind == CaseKind::theorem ? "theorem_k" + std::to_string(c.group_k)
                            : c.kind == CaseKind::general ? "general"
                            : c.kind == CaseKind::xindep  ? "x_independence"
                                                          : "c_equivalence_k" + std::to_string(c.group_k);
    ++per_kind[key];
  }
  result.report = {
      {"config", cfg.to_json()},
      {"convention", std::string(fintype::to_string(cfg.conv))},
      {"cases", per_kind},
      {"notes",
       {"side-by-side blocks: one term group per block present (blocks indexed from 0); the outer sum bound "
        "n-1 vs n is ambiguous in the source formula",
        "side-by-side blocks: right factor uses the flipped vector u+1 unless --literal is given"}},
      {"warnings", result.warnings},
      {"results", rows},
      {"summary", {{"checks", result.total}, {"failed", result.failed}, {"passed", result.total - result.failed}}}};
  result.csv = csv.str();
  return result;
}

void write_sweep(const SweepResult& result, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  {
    std::ofstream out(dir / "report.json");
    if (!out) throw std::runtime_error("cannot write " + (dir / "report.json").string());
    out << result.report.dump(2) << '\n';
  }
  std::ofstream out(dir / "summary.csv");
  if (!out) throw std::runtime_error("cannot write " + (dir / "summary.csv").string());
  out << result.csv;
}

}  // namespace fintype
