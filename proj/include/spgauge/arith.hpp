#pragma once

// Exact integer and rational arithmetic plus the number-theoretic helpers
// used throughout the library. Nothing here touches floating point.

#include <spgauge/error.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace spgauge {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt abs_value(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }

/// Nonnegative generator of aZ + bZ. gcd_nonneg(0, 0) == 0.
inline BigInt gcd_nonneg(const BigInt& a, const BigInt& b) {
  BigInt x = abs_value(a);
  BigInt y = abs_value(b);
  while (y != 0) {
    BigInt r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

/// Nonnegative generator of aZ ∩ bZ; zero when either argument is zero.
inline BigInt lcm_nonneg(const BigInt& a, const BigInt& b) {
  if (a == 0 || b == 0) return 0;
  return abs_value(a) / gcd_nonneg(a, b) * abs_value(b);
}

inline BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

inline BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (unsigned i = 0; i < k; ++i) {
    r *= (n - i);
    r /= (i + 1);
  }
  return r;
}

inline bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  if (p < 4) return true;
  if (p % 2 == 0) return false;
  for (std::int64_t d = 3; d <= p / d; d += 2)
    if (p % d == 0) return false;
  return true;
}

inline void require_prime(std::int64_t p) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
}

/// Exponent r with p^r || a.
inline unsigned p_exponent(const BigInt& a, std::int64_t p) {
  if (a == 0) throw Error(ErrorCode::ZeroArgument, "p-adic valuation of 0");
  require_prime(p);
  BigInt x = abs_value(a);
  unsigned r = 0;
  while (x % p == 0) {
    x /= p;
    ++r;
  }
  return r;
}

/// The p-part of a: the largest power p^r dividing a (a power, not an exponent).
inline BigInt p_part(const BigInt& a, std::int64_t p) {
  return boost::multiprecision::pow(BigInt(p), p_exponent(a, p));
}

class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long v) : num_(v), den_(1) {}  // NOLINT: implicit by intent
  Rational(BigInt v) : num_(std::move(v)), den_(1) {}  // NOLINT
  Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
  }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  /// The numerator of an integral value; throws NonIntegralGenerator otherwise.
  const BigInt& as_integer() const {
    if (!is_integer())
      throw Error(ErrorCode::NonIntegralGenerator, to_string() + " is not an integer");
    return num_;
  }

  Rational operator-() const { return Rational(BigInt(-num_), den_, Normalized{}); }

  Rational& operator+=(const Rational& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
  }
  Rational& operator-=(const Rational& o) { return *this += -o; }
  Rational& operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    BigInt l = a.num_ * b.den_;
    BigInt r = b.num_ * a.den_;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// "p/q", or "p" when the denominator is 1.
  std::string to_string() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
  }

  /// Accepts "p", "-p", "p/q" with optional sign on p. Rejects anything else.
  static Rational parse(std::string_view text) {
    auto parse_int = [&](std::string_view s) -> BigInt {
      std::string_view digits = s;
      if (!digits.empty() && (digits.front() == '-' || digits.front() == '+'))
        digits.remove_prefix(1);
      if (digits.empty())
        throw Error(ErrorCode::ParseError, "bad rational '" + std::string(text) + "'");
      for (char c : digits)
        if (c < '0' || c > '9')
          throw Error(ErrorCode::ParseError, "bad rational '" + std::string(text) + "'");
      BigInt v{std::string(digits)};
      return s.front() == '-' ? BigInt(-v) : v;
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    BigInt den = parse_int(text.substr(slash + 1));
    if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
    return Rational(parse_int(text.substr(0, slash)), std::move(den));
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  struct Normalized {};
  Rational(BigInt num, BigInt den, Normalized) : num_(std::move(num)), den_(std::move(den)) {}

  void normalize() {
    if (den_ == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    BigInt g = gcd_nonneg(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  BigInt num_;
  BigInt den_;
};

/// Positive generator of the additive subgroup of Q spanned by `values`.
/// Computed as gcd of the numerators over the common denominator.
inline Rational frac_gcd(std::span<const Rational> values) {
  BigInt common = 1;
  for (const auto& v : values) common = lcm_nonneg(common, v.den());
  BigInt g = 0;
  for (const auto& v : values) g = gcd_nonneg(g, v.num() * (common / v.den()));
  if (g == 0) throw Error(ErrorCode::AllZero, "frac_gcd of all-zero values");
  return Rational(std::move(g), std::move(common));
}

inline Rational frac_gcd(std::initializer_list<Rational> values) {
  return frac_gcd(std::span<const Rational>(values.begin(), values.size()));
}

/// Surjection counts onto k-sets from an m-set, for every k in [0, k_max],
/// by inclusion-exclusion with the powers i^m shared across k.
inline std::vector<BigInt> surjection_row(unsigned m, unsigned k_max) {
  std::vector<BigInt> powers(k_max + 1);
  for (unsigned i = 0; i <= k_max; ++i) powers[i] = boost::multiprecision::pow(BigInt(i), m);
  std::vector<BigInt> row(k_max + 1);
  for (unsigned k = 0; k <= k_max; ++k) {
    // sum_{i=0..k} (-1)^(k-i) C(k,i) i^m
    BigInt sum = 0;
    BigInt c = 1;
    for (unsigned i = 0; i <= k; ++i) {
      if ((k - i) % 2 == 0)
        sum += c * powers[i];
      else
        sum -= c * powers[i];
      c *= (k - i);
      c /= (i + 1);
    }
    row[k] = std::move(sum);
  }
  return row;
}

/// Number of surjections from an m-set onto a k-set; zero when k > m.
inline BigInt surjections(unsigned m, unsigned k) {
  if (k > m) return 0;
  BigInt sum = 0;
  BigInt c = 1;  // C(k, j)
  for (unsigned j = 0; j <= k; ++j) {
    BigInt term = c * boost::multiprecision::pow(BigInt(k - j), m);
    if (j % 2 == 0)
      sum += term;
    else
      sum -= term;
    c *= (k - j);
    c /= (j + 1);
  }
  return sum;
}

}  // namespace spgauge
