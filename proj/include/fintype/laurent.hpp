#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fintype {

/// Overflow-checked 64-bit integer helpers. Every coefficient operation in the
/// polynomial and formal-sum code goes through these; an overflow throws
/// std::overflow_error instead of wrapping.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

/// Single-variable Laurent polynomial with exact integer coefficients.
///
/// Stored densely: coeffs_[k] is the coefficient of x^(low_ + k). The
/// representation is kept trimmed (no zero coefficient at either end), and the
/// zero polynomial has an empty coefficient vector.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(std::int64_t constant);
  LaurentPoly(std::initializer_list<std::pair<int, std::int64_t>> terms);

  static LaurentPoly monomial(int exponent, std::int64_t coeff = 1);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  int low_degree() const;
  int high_degree() const;
  std::int64_t coeff(int exponent) const noexcept;
  /// (exponent, coefficient) pairs for the nonzero terms, ascending exponent.
  std::vector<std::pair<int, std::int64_t>> terms() const;

  void add_term(int exponent, std::int64_t coeff);

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(std::int64_t scalar);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, std::int64_t s) { return a *= s; }
  friend LaurentPoly operator*(std::int64_t s, LaurentPoly a) { return a *= s; }
  LaurentPoly operator-() const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

  /// Multiply by x^k.
  LaurentPoly shifted(int k) const;
  /// Substitute x -> x^k (k may be negative).
  LaurentPoly substitute_power(int k) const;
  /// Divide all exponents by k; throws if some exponent is not a multiple.
  LaurentPoly compress_exponents(int k) const;
  /// Raise to a nonnegative integer power.
  LaurentPoly pow(unsigned e) const;
  /// Sum of coefficients (value at x = 1).
  std::int64_t value_at_one() const;

  /// Exact division by a polynomial whose leading coefficient is +-1.
  /// Throws std::domain_error when the division leaves a remainder.
  LaurentPoly exact_divide(const LaurentPoly& divisor) const;

  /// Human-readable form such as "-t^-4 + t^-3 + t^-1". `denominator` divides
  /// every printed exponent (used to print half-integer powers as t^(3/2)).
  std::string to_string(std::string_view var, int denominator = 1) const;

 private:
  void trim();

  int low_ = 0;
  std::vector<std::int64_t> coeffs_;
};

}  // namespace fintype
