#pragma once

// Truncated power series over Q, and the Chern-character coefficient data of
// powers of the reduced Hopf class, ch(eta^k) = (e^x - 1)^k.

#include <spgauge/arith.hpp>

#include <string_view>
#include <vector>

namespace spgauge {

/// Which coefficient formula feeds the top ch coefficient of the rank-n
/// generators. `series` is [x^(2n-1)](e^x - 1)^k; `printed` is the
/// composition sum  sum_{r_1+..+r_k=2n-1, r_i>=1} (2n-1)!/prod(r_i!) * prod 1/(2r_i-1)!,
/// kept only to exhibit where it disagrees.
enum class Backend { series, printed };

constexpr std::string_view to_string(Backend b) {
  return b == Backend::series ? "series" : "printed";
}

inline Backend parse_backend(std::string_view s) {
  if (s == "series") return Backend::series;
  if (s == "printed") return Backend::printed;
  throw Error(ErrorCode::BadQuery, "unknown backend '" + std::string(s) + "'");
}

class TruncatedSeries {
 public:
  explicit TruncatedSeries(unsigned max_deg) : coeffs_(max_deg + 1) {}
  TruncatedSeries(unsigned max_deg, std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    coeffs_.resize(max_deg + 1);
  }

  static TruncatedSeries one(unsigned max_deg) {
    TruncatedSeries s(max_deg);
    s.coeffs_[0] = 1;
    return s;
  }

  /// e^x - 1 truncated at max_deg.
  static TruncatedSeries exp_minus_one(unsigned max_deg) {
    TruncatedSeries s(max_deg);
    BigInt f = 1;
    for (unsigned m = 1; m <= max_deg; ++m) {
      f *= m;
      s.coeffs_[m] = Rational(1, f);
    }
    return s;
  }

  unsigned max_deg() const { return static_cast<unsigned>(coeffs_.size() - 1); }
  const Rational& operator[](unsigned m) const { return coeffs_.at(m); }
  Rational& operator[](unsigned m) { return coeffs_.at(m); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    check_same(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }

  TruncatedSeries& operator*=(const Rational& c) {
    for (auto& a : coeffs_) a *= c;
    return *this;
  }

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const Rational& c) { return a *= c; }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.check_same(b);
    const unsigned d = a.max_deg();
    TruncatedSeries out(d);
    for (unsigned i = 0; i <= d; ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (unsigned j = 0; i + j <= d; ++j) {
        if (b.coeffs_[j].is_zero()) continue;
        out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return out;
  }

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  void check_same(const TruncatedSeries& o) const {
    if (o.coeffs_.size() != coeffs_.size())
      throw Error(ErrorCode::DimensionMismatch, "series truncation degrees differ");
  }

  std::vector<Rational> coeffs_;
};

/// (e^x - 1)^k truncated at max_deg, by repeated truncated multiplication.
inline TruncatedSeries exp_minus_one_pow(unsigned k, unsigned max_deg) {
  if (k == 0) throw Error(ErrorCode::OutOfRange, "exp_minus_one_pow needs k >= 1");
  const TruncatedSeries base = TruncatedSeries::exp_minus_one(max_deg);
  TruncatedSeries acc = base;
  for (unsigned i = 1; i < k; ++i) acc = acc * base;
  return acc;
}

namespace detail {

// sum_{r>=1} x^r / (r! (2r-1)!), the per-part weight of the printed composition sum.
inline TruncatedSeries printed_part_series(unsigned max_deg) {
  TruncatedSeries g(max_deg);
  for (unsigned r = 1; r <= max_deg; ++r) g[r] = Rational(1, factorial(r) * factorial(2 * r - 1));
  return g;
}

inline void check_rank(unsigned n, unsigned k) {
  if (n == 0 || k == 0 || k > n)
    throw Error(ErrorCode::OutOfRange,
                "top coefficient needs 1 <= k <= n, got n=" + std::to_string(n) +
                    " k=" + std::to_string(k));
}

}  // namespace detail

/// Top ch coefficient of u xi_k on the triple suspension of Q_n.
inline Rational top_coeff(unsigned n, unsigned k, Backend backend = Backend::series) {
  detail::check_rank(n, k);
  const unsigned m = 2 * n - 1;
  if (backend == Backend::series) return Rational(surjections(m, k), factorial(m));
  const TruncatedSeries g = detail::printed_part_series(m);
  TruncatedSeries acc = g;
  for (unsigned i = 1; i < k; ++i) acc = acc * g;
  return acc[m] * Rational(factorial(m));
}

/// top_coeff(n, k) for k = 1..n, sharing work across k. Index 0 holds k = 1.
inline std::vector<Rational> top_coeffs(unsigned n, Backend backend = Backend::series) {
  detail::check_rank(n, 1);
  const unsigned m = 2 * n - 1;
  const BigInt mf = factorial(m);
  std::vector<Rational> out;
  out.reserve(n);
  if (backend == Backend::series) {
    const auto row = surjection_row(m, n);
    for (unsigned k = 1; k <= n; ++k) out.emplace_back(row[k], mf);
    return out;
  }
  const TruncatedSeries g = detail::printed_part_series(m);
  TruncatedSeries acc = g;
  for (unsigned k = 1; k <= n; ++k) {
    if (k > 1) acc = acc * g;
    out.push_back(acc[m] * Rational(mf));
  }
  return out;
}

}  // namespace spgauge
