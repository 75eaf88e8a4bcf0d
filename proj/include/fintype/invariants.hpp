#pragma once

#include <gmpxx.h>

#include <filesystem>
#include <fstream>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <unordered_map>

#include "fintype/braid.hpp"
#include "fintype/laurent.hpp"
#include "fintype/singular.hpp"

namespace fintype {

/// Kauffman bracket of the closure in the variable A, normalized so that a
/// single crossing-free circle has bracket 1. s_i contributes A + A^-1 e_i.
LaurentPoly kauffman_bracket(const BraidWord& w);

/// Jones polynomial of the oriented closure. Exponents are in units of t^(1/2)
/// (a knot only has even exponents). Uses t = A^4 with writhe from the
/// orientation-aware crossing signs; the right-handed trefoil s1^3 gives
/// -t^-4 + t^-3 + t^-1.
LaurentPoly jones(const BraidWord& w);
std::string format_jones(const LaurentPoly& v);

/// Alexander polynomial of a knot closure from the reduced Burau
/// representation, symmetrized with Δ(1) = 1.
LaurentPoly alexander(const BraidWord& w);

/// Conway polynomial in z of a knot closure.
LaurentPoly conway(const BraidWord& w);

enum class InvariantKind { conway_coefficient, jones_derivative };

/// c2, c4 (Conway coefficients) or j2..j4 (coefficient of x^m in V(e^x)).
struct InvariantId {
  InvariantKind kind = InvariantKind::conway_coefficient;
  int m = 2;

  static InvariantId parse(std::string_view name);
  std::string name() const;
  friend bool operator==(const InvariantId&, const InvariantId&) = default;
};

int vassiliev_degree(const InvariantId& id);

/// Thread-safe memo table keyed by (word, orientation, invariant). With a
/// backing file every new value is appended as one JSON line.
class InvariantCache {
 public:
  InvariantCache() = default;
  explicit InvariantCache(std::filesystem::path file);

  std::optional<mpq_class> get(const std::string& key) const;
  void put(const std::string& key, const mpq_class& value);
  std::size_t size() const;
  void clear();

  static std::string key(const BraidWord& w, const InvariantId& id);

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, mpq_class> values_;
  std::optional<std::filesystem::path> file_;
  std::ofstream out_;
};

/// Process-wide cache used when no explicit cache is passed.
InvariantCache& default_cache();

/// Value of the invariant on a non-singular knot word.
mpq_class evaluate_knot(const InvariantId& id, const BraidWord& w, InvariantCache* cache = &default_cache());

/// Value on a possibly singular word (through desingularization).
mpq_class evaluate(const InvariantId& id, const BraidWord& w, InvariantCache* cache = &default_cache());

/// Linear extension to formal sums.
mpq_class evaluate(const InvariantId& id, const FormalSum& s, InvariantCache* cache = &default_cache());

}  // namespace fintype
