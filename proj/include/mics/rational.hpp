#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mics {

/// Exact rational number with a positive denominator in lowest terms.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0) throw std::invalid_argument("rational with zero denominator");
    normalize();
  }

  [[nodiscard]] constexpr std::int64_t num() const { return num_; }
  [[nodiscard]] constexpr std::int64_t den() const { return den_; }
  [[nodiscard]] long double to_long_double() const {
    return static_cast<long double>(num_) / static_cast<long double>(den_);
  }
  [[nodiscard]] bool is_integer() const { return den_ == 1; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    return {a.num_ * b.den_, a.den_ * b.num_};
  }
  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend auto operator<=>(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num_) * b.den_ <=> static_cast<__int128>(b.num_) * a.den_;
  }

  [[nodiscard]] std::string to_string() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }
  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

  /// Accepts "p", "p/q" or a finite decimal such as "0.5".
  static Rational parse(std::string_view text) {
    auto to_int = [&](std::string_view s) -> std::int64_t {
      if (s.empty()) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
      std::size_t used = 0;
      std::int64_t v = 0;
      try {
        v = std::stoll(std::string(s), &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
      }
      if (used != s.size()) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
      return v;
    };
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
      return {to_int(text.substr(0, slash)), to_int(text.substr(slash + 1))};
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
      std::string_view whole = text.substr(0, dot);
      std::string_view frac = text.substr(dot + 1);
      if (frac.size() > 12) throw std::invalid_argument("too many decimals in '" + std::string(text) + "'");
      bool negative = !whole.empty() && whole.front() == '-';
      std::int64_t scale = 1;
      for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
      std::int64_t w = (whole.empty() || whole == "-") ? 0 : to_int(whole);
      std::int64_t f = frac.empty() ? 0 : to_int(frac);
      if (f < 0) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
      std::int64_t magnitude = (w < 0 ? -w : w) * scale + f;
      return {negative ? -magnitude : magnitude, scale};
    }
    return {to_int(text), 1};
  }

 private:
  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

namespace detail {

// base^exp into an __int128, or -1 when the result would not fit.
inline __int128 checked_pow(__int128 base, std::int64_t exp) {
  constexpr __int128 kLimit = static_cast<__int128>(1) << 120;
  __int128 result = 1;
  for (std::int64_t i = 0; i < exp; ++i) {
    if (base != 0 && result > kLimit / base) return -1;
    result *= base;
  }
  return result;
}

// Compares (k * den)^q against (num * n^p), where the exponent is p/q >= 0.
// Returns <0, 0, >0, or nullopt-like sentinel 2 when the numbers overflow.
inline int compare_scaled_power(std::int64_t k, const Rational& coeff, std::int64_t n,
                                const Rational& exponent) {
  const std::int64_t p = exponent.num();
  const std::int64_t q = exponent.den();
  __int128 lhs = checked_pow(static_cast<__int128>(k) * coeff.den(), q);
  __int128 coeff_pow = checked_pow(coeff.num(), q);
  __int128 n_pow = checked_pow(n, p);
  if (lhs < 0 || coeff_pow < 0 || n_pow < 0) return 2;
  if (n_pow != 0 && coeff_pow > (static_cast<__int128>(1) << 120) / n_pow) return 2;
  __int128 rhs = coeff_pow * n_pow;
  return lhs < rhs ? -1 : (lhs == rhs ? 0 : 1);
}

}  // namespace detail

/// floor(coeff * n^exponent) for n >= 1, coeff >= 0, exponent >= 0.
/// Exact whenever the intermediate powers fit in 128 bits.
inline std::int64_t floor_scaled_power(const Rational& coeff, std::int64_t n, const Rational& exponent) {
  if (coeff.num() < 0 || exponent.num() < 0 || n < 1) throw std::domain_error("floor_scaled_power domain");
  long double approx = coeff.to_long_double() * std::pow(static_cast<long double>(n), exponent.to_long_double());
  auto k = static_cast<std::int64_t>(std::floor(approx));
  if (k < 0) k = 0;
  // Nudge the estimate until k is the largest integer with k <= coeff * n^e.
  for (int guard = 0; guard < 8; ++guard) {
    int c = detail::compare_scaled_power(k, coeff, n, exponent);
    if (c == 2) return k;
    if (c > 0) {
      --k;
      continue;
    }
    int next = detail::compare_scaled_power(k + 1, coeff, n, exponent);
    if (next == 2 || next > 0) return k;
    ++k;
  }
  return k;
}

/// ceil(n^exponent) for n >= 1, exponent >= 0.
inline std::int64_t ceil_power(std::int64_t n, const Rational& exponent) {
  std::int64_t k = floor_scaled_power(Rational(1), n, exponent);
  return detail::compare_scaled_power(k, Rational(1), n, exponent) == 0 ? k : k + 1;
}

}  // namespace mics
