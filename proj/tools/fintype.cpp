// Command line front end: move words, symbolic expansion, numeric checks,
// sweeps and single invariant evaluations.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fintype/diagram.hpp"
#include "fintype/invariants.hpp"
#include "fintype/moves.hpp"
#include "fintype/singular.hpp"
#include "fintype/verifier.hpp"

using namespace fintype;

namespace {

std::vector<int> parse_d(const std::string& text) {
  std::vector<int> d;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) d.push_back(std::stoi(item));
  return d;
}

std::string print_sum(const FormalSum& s, const std::string& format) {
  if (format == "json") return s.to_json();
  if (format == "text") return s.to_string();
  return s.to_unicode();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-type invariants under C_{k+1} moves on o-braids"};
  app.require_subcommand(1);
  std::string program = argv[0];

  // bh
  int bh_k = 1;
  std::string bh_d, bh_o;
  bool bh_json = false;
  auto* bh = app.add_subcommand("bh", "print the move word for (k, d, o)");
  bh->add_option("--k", bh_k, "move parameter")->required();
  bh->add_option("--d", bh_d, "comma separated exponents, k+1 entries of +-2")->required();
  bh->add_option("--o", bh_o, "orientation bits, k+2 characters")->required();
  bh->add_flag("--json", bh_json, "print the move specification as JSON too");

  // expand
  std::string ex_word, ex_o, ex_format = "unicode", ex_conv = "additive";
  int ex_max = -1;
  auto* expand = app.add_subcommand("expand", "expand a product of double crossings into singular words");
  expand->add_option("--word", ex_word, "word in s<i>^<+-2> blocks")->required();
  expand->add_option("--o", ex_o, "orientation bits")->required();
  expand->add_option("--max-sing", ex_max, "drop terms with more singular letters (default: keep all)");
  expand->add_option("--conv", ex_conv, "additive or multiplicative");
  expand->add_option("--format", ex_format, "unicode, text or json");

  // check
  int ck_k = 1;
  std::string ck_d, ck_o, ck_t, ck_x, ck_inv = "c2", ck_conv = "additive";
  bool ck_singular = false, ck_json = false;
  std::uint64_t ck_seed = 0;
  auto* check = app.add_subcommand("check", "compare both sides of the move formula on one case");
  check->add_option("--k", ck_k)->required();
  check->add_option("--d", ck_d)->required();
  check->add_option("--o", ck_o)->required();
  check->add_option("--t", ck_t, "the tangle T as a braid word")->required();
  check->add_option("--x", ck_x, "the word x with the same permutation as T")->required();
  check->add_option("--inv", ck_inv, "c2, c4, j2, j3 or j4");
  check->add_option("--conv", ck_conv);
  check->add_flag("--singular-rhs", ck_singular, "use p_i letters instead of s_i^2 in the companion words");
  check->add_option("--seed", ck_seed, "recorded only");
  check->add_flag("--json", ck_json);

  // symbolic
  int sy_k = 1;
  std::string sy_d, sy_o, sy_conv = "additive", sy_format = "unicode";
  auto* symbolic = app.add_subcommand("symbolic", "expand the move word and compare with the closed-form sum");
  symbolic->add_option("--k", sy_k)->required();
  symbolic->add_option("--d", sy_d)->required();
  symbolic->add_option("--o", sy_o)->required();
  symbolic->add_option("--conv", sy_conv);
  symbolic->add_option("--format", sy_format, "unicode, text or json");

  // conventions
  int cv_kmax = 2;
  auto* conventions = app.add_subcommand("conventions", "run the symbolic check over every orientation for both sign rules");
  conventions->add_option("--kmax", cv_kmax);

  // general
  int ge_n = 2, ge_k = 1;
  std::vector<std::string> ge_d;
  std::string ge_o, ge_t, ge_x, ge_inv = "c2", ge_conv = "additive";
  bool ge_literal = false;
  std::uint64_t ge_seed = 0;
  auto* general = app.add_subcommand("general", "side-by-side blocks on n(k+2) strands");
  general->add_option("--n", ge_n)->required();
  general->add_option("--k", ge_k)->required();
  general->add_option("--d", ge_d, "one --d per block")->required();
  general->add_option("--o", ge_o)->required();
  general->add_option("--t", ge_t)->required();
  general->add_option("--x", ge_x)->required();
  general->add_option("--inv", ge_inv);
  general->add_option("--conv", ge_conv);
  general->add_flag("--literal", ge_literal, "right factor W_u instead of W_{u+1}");
  general->add_option("--seed", ge_seed, "recorded only");

  // sweep
  std::string sw_config, sw_out = "sweep-out";
  std::uint64_t sw_seed = 0;
  bool sw_seed_set = false, sw_force = false;
  int sw_threads = 0;
  auto* sweep_cmd = app.add_subcommand("sweep", "seeded randomized corpus of checks");
  sweep_cmd->add_option("--config", sw_config, "key=value or JSON file");
  auto* seed_opt = sweep_cmd->add_option("--seed", sw_seed);
  sweep_cmd->add_option("--out", sw_out, "report directory");
  sweep_cmd->add_flag("--force", sw_force, "run cases above the desk-scale budget");
  sweep_cmd->add_option("--threads", sw_threads);

  // invariant
  std::string iv_word, iv_o, iv_which = "jones";
  auto* invariant = app.add_subcommand("invariant", "evaluate one invariant on a closed word");
  invariant->add_option("--word", iv_word)->required();
  invariant->add_option("--o", iv_o)->required();
  invariant->add_option("--which", iv_which, "jones, conway, alexander, bracket, diagram, c2, c4, j2, j3, j4");

  CLI11_PARSE(app, argc, argv);
  sw_seed_set = seed_opt->count() > 0;

  try {
    if (*bh) {
      const MoveSpec spec = MoveSpec::make(bh_k, parse_d(bh_d), Orientation::parse(bh_o));
      const BraidWord w = bh_word(spec);
      std::cout << render(w) << '\n';
      std::cout << "letters: " << w.length() << ", permutation: " << permutation_of(w).to_string() << '\n';
      if (bh_json) std::cout << spec.to_json() << '\n';
      return 0;
    }
    if (*expand) {
      const Orientation o = Orientation::parse(ex_o);
      const BraidWord w = parse_braid_word(ex_word, o.size(), o);
      const auto max = ex_max >= 0 ? std::optional<int>(ex_max) : std::nullopt;
      std::cout << print_sum(expand_word(w, parse_sign_convention(ex_conv), max), ex_format) << '\n';
      return 0;
    }
    if (*check) {
      const Orientation o = Orientation::parse(ck_o);
      const MoveSpec spec = MoveSpec::make(ck_k, parse_d(ck_d), o);
      const CheckReport r = check_theorem(spec, parse_braid_word(ck_t, o.size(), o), parse_braid_word(ck_x, o.size(), o),
                                          InvariantId::parse(ck_inv), parse_sign_convention(ck_conv),
                                          ck_singular ? WVariant::singular : WVariant::squared);
      if (ck_json) {
        std::cout << r.to_json().dump(2) << '\n';
      } else {
        std::cout << "lhs = " << r.lhs.get_str() << '\n';
        for (const auto& t : r.terms) {
          std::cout << "  " << (t.sign > 0 ? "+" : "-") << " " << t.value.get_str() << "   " << t.word << '\n';
        }
        std::cout << "rhs = " << r.rhs.get_str() << '\n' << (r.equal ? "equal" : "NOT EQUAL") << '\n';
      }
      return r.equal ? 0 : 1;
    }
    if (*symbolic) {
      const MoveSpec spec = MoveSpec::make(sy_k, parse_d(sy_d), Orientation::parse(sy_o));
      const SymbolicReport r = symbolic_report(spec, parse_sign_convention(sy_conv));
      std::cout << "expansion: " << print_sum(r.expanded, sy_format) << '\n';
      std::cout << "closed form: " << print_sum(r.rhs, sy_format) << '\n';
      std::cout << "convention: " << sy_conv << '\n' << (r.equal ? "equal" : "NOT EQUAL") << '\n';
      return r.equal ? 0 : 1;
    }
    if (*conventions) {
      std::vector<SignConvention> winners;
      for (auto conv : {SignConvention::additive, SignConvention::multiplicative}) {
        bool all = true;
        for (int k = 1; k <= cv_kmax; ++k) {
          int ok = 0, total = 0;
          for (unsigned dm = 0; dm < (1U << (k + 1)); ++dm) {
            for (unsigned om = 0; om < (1U << (k + 2)); ++om) {
              std::vector<int> d;
              std::vector<std::uint8_t> bits;
              for (int i = 0; i <= k; ++i) d.push_back((dm >> i) & 1U ? -2 : 2);
              for (int i = 0; i < k + 2; ++i) bits.push_back(static_cast<std::uint8_t>((om >> i) & 1U));
              ++total;
              ok += check_symbolic(MoveSpec::make(k, d, Orientation(bits)), conv) ? 1 : 0;
            }
          }
          std::cout << to_string(conv) << " k=" << k << ": " << ok << "/" << total << '\n';
          all = all && ok == total;
        }
        if (all) winners.push_back(conv);
      }
      if (winners.size() == 1) {
        std::cout << "selected convention: " << to_string(winners.front())
                  << (winners.front() == kDefaultConvention ? " (shipped default)" : " (differs from default)") << '\n';
        return winners.front() == kDefaultConvention ? 0 : 1;
      }
      std::cout << "no unique convention (" << winners.size() << " pass)\n";
      return 1;
    }
    if (*general) {
      const Orientation o = Orientation::parse(ge_o);
      if (static_cast<int>(ge_d.size()) != ge_n) throw std::invalid_argument("need one --d per block");
      std::vector<MoveSpec> blocks;
      for (int j = 0; j < ge_n; ++j) {
        blocks.push_back(MoveSpec::make(ge_k, parse_d(ge_d[static_cast<std::size_t>(j)]), o.window(j * (ge_k + 2) + 1, ge_k + 2)));
      }
      const BlockMove move = block_words(blocks, o);
      const auto conv = parse_sign_convention(ge_conv);
      const CheckReport r = check_general(move, parse_braid_word(ge_t, o.size(), o), parse_braid_word(ge_x, o.size(), o),
                                          InvariantId::parse(ge_inv), conv, !ge_literal);
      std::cout << "blocks: " << ge_n << " (one term group per block, indexed from 0)\n";
      std::cout << "symbolic check, right factor W_{u+1}: " << (symbolic_block_report(move, conv, true).equal ? "equal" : "NOT EQUAL") << '\n';
      std::cout << "symbolic check, right factor W_u: " << (symbolic_block_report(move, conv, false).equal ? "equal" : "NOT EQUAL") << '\n';
      std::cout << "lhs = " << r.lhs.get_str() << "\nrhs = " << r.rhs.get_str() << '\n' << (r.equal ? "equal" : "NOT EQUAL") << '\n';
      return r.equal ? 0 : 1;
    }
    if (*sweep_cmd) {
      SweepConfig cfg = sw_config.empty() ? SweepConfig{} : SweepConfig::load(sw_config);
      if (sw_seed_set) cfg.seed = sw_seed;
      if (sw_force) cfg.force = true;
      if (sw_threads > 0) cfg.threads = sw_threads;
      if (cfg.k4_cases > 0 && !cfg.force) std::cerr << "warning: k=4 exceeds desk-scale budget; use --force to run it\n";
      const SweepResult result = sweep(cfg, program);
      write_sweep(result, sw_out);
      std::cout << "checks: " << result.total << ", failed: " << result.failed << ", report: " << sw_out << "/report.json\n";
      for (const auto& row : result.report["results"]) {
        if (!row["pass"].get<bool>() && row.contains("repro")) std::cout << "repro: " << row["repro"].get<std::string>() << '\n';
      }
      return result.failed == 0 ? 0 : 1;
    }
    if (*invariant) {
      const Orientation o = Orientation::parse(iv_o);
      const BraidWord w = parse_braid_word(iv_word, o.size(), o);
      if (iv_which == "jones") std::cout << format_jones(jones(w)) << '\n';
      else if (iv_which == "conway") std::cout << conway(w).to_string("z") << '\n';
      else if (iv_which == "alexander") std::cout << alexander(w).to_string("t") << '\n';
      else if (iv_which == "bracket") std::cout << kauffman_bracket(w).to_string("A") << '\n';
      else if (iv_which == "diagram") std::cout << close(w).to_json() << '\n';
      else std::cout << evaluate(InvariantId::parse(iv_which), w).get_str() << '\n';
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
