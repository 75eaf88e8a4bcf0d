#include "fintype/laurent.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace fintype {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in subtraction");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
  return r;
}

LaurentPoly::LaurentPoly(std::int64_t constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

LaurentPoly::LaurentPoly(std::initializer_list<std::pair<int, std::int64_t>> terms) {
  for (const auto& [e, c] : terms) add_term(e, c);
}

LaurentPoly LaurentPoly::monomial(int exponent, std::int64_t coeff) {
  LaurentPoly p;
  p.add_term(exponent, coeff);
  return p;
}

int LaurentPoly::low_degree() const {
  if (is_zero()) throw std::domain_error("degree of zero polynomial");
  return low_;
}

int LaurentPoly::high_degree() const {
  if (is_zero()) throw std::domain_error("degree of zero polynomial");
  return low_ + static_cast<int>(coeffs_.size()) - 1;
}

std::int64_t LaurentPoly::coeff(int exponent) const noexcept {
  if (is_zero() || exponent < low_) return 0;
  const auto k = static_cast<std::size_t>(exponent - low_);
  return k < coeffs_.size() ? coeffs_[k] : 0;
}

std::vector<std::pair<int, std::int64_t>> LaurentPoly::terms() const {
  std::vector<std::pair<int, std::int64_t>> out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] != 0) out.emplace_back(low_ + static_cast<int>(k), coeffs_[k]);
  }
  return out;
}

void LaurentPoly::add_term(int exponent, std::int64_t c) {
  if (c == 0) return;
  if (is_zero()) {
    low_ = exponent;
    coeffs_.assign(1, c);
    return;
  }
  if (exponent < low_) {
    coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - exponent), 0);
    low_ = exponent;
  }
  const auto k = static_cast<std::size_t>(exponent - low_);
  if (k >= coeffs_.size()) coeffs_.resize(k + 1, 0);
  coeffs_[k] = checked_add(coeffs_[k], c);
  trim();
}

void LaurentPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead == coeffs_.size()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    low_ += static_cast<int>(lead);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  const int lo = std::min(low_, rhs.low_);
  const int hi = std::max(high_degree(), rhs.high_degree());
  std::vector<std::int64_t> out(static_cast<std::size_t>(hi - lo + 1), 0);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) out[k + static_cast<std::size_t>(low_ - lo)] = coeffs_[k];
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) {
    auto& slot = out[k + static_cast<std::size_t>(rhs.low_ - lo)];
    slot = checked_add(slot, rhs.coeffs_[k]);
  }
  low_ = lo;
  coeffs_ = std::move(out);
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) { return *this += -rhs; }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& c : out.coeffs_) c = checked_sub(0, c);
  return out;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  if (a.is_zero() || b.is_zero()) return out;
  out.low_ = a.low_ + b.low_;
  out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      auto& slot = out.coeffs_[i + j];
      slot = checked_add(slot, checked_mul(a.coeffs_[i], b.coeffs_[j]));
    }
  }
  out.trim();
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) { return *this = *this * rhs; }

LaurentPoly& LaurentPoly::operator*=(std::int64_t scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    low_ = 0;
    return *this;
  }
  for (auto& c : coeffs_) c = checked_mul(c, scalar);
  return *this;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly out = *this;
  if (!out.is_zero()) out.low_ += k;
  return out;
}

LaurentPoly LaurentPoly::substitute_power(int k) const {
  if (k == 0) return LaurentPoly(value_at_one());
  LaurentPoly out;
  for (const auto& [e, c] : terms()) out.add_term(e * k, c);
  return out;
}

LaurentPoly LaurentPoly::compress_exponents(int k) const {
  if (k == 0) throw std::invalid_argument("compress_exponents by zero");
  LaurentPoly out;
  for (const auto& [e, c] : terms()) {
    if (e % k != 0) throw std::domain_error("exponent not divisible in compress_exponents");
    out.add_term(e / k, c);
  }
  return out;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
  LaurentPoly result(1);
  LaurentPoly base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

std::int64_t LaurentPoly::value_at_one() const {
  std::int64_t s = 0;
  for (auto c : coeffs_) s = checked_add(s, c);
  return s;
}

LaurentPoly LaurentPoly::exact_divide(const LaurentPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
  const std::int64_t lead = divisor.coeffs_.back();
  if (lead != 1 && lead != -1) throw std::domain_error("exact_divide needs a unit leading coefficient");
  LaurentPoly rem = *this;
  LaurentPoly quot;
  const int dhi = divisor.high_degree();
  while (!rem.is_zero() && rem.high_degree() - rem.low_degree() >= dhi - divisor.low_degree()) {
    const int shift = rem.high_degree() - dhi;
    const std::int64_t q = checked_mul(rem.coeffs_.back(), lead);
    quot.add_term(shift, q);
    rem -= (divisor * q).shifted(shift);
  }
  if (!rem.is_zero()) throw std::domain_error("polynomial division is not exact");
  return quot;
}

std::string LaurentPoly::to_string(std::string_view var, int denominator) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms()) {
    std::int64_t mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << '*';
    os << var;
    const int g = std::gcd(e < 0 ? -e : e, denominator);
    const int num = e / g;
    const int den = denominator / g;
    if (den == 1) {
      if (num != 1) os << '^' << num;
    } else {
      os << "^(" << num << '/' << den << ')';
    }
  }
  return os.str();
}

}  // namespace fintype
