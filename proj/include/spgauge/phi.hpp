#pragma once

// The map Phi: KSp^{-2}(S^3 Q_n) -> H^{4n+2}(S^3 Q_n) = Z, xi -> +-(2n+1)! ch(u^{-1} c'(xi)),
// and the order of the Samelson product <eps, iota_n> read off its cokernel.
// Signs are dropped throughout; only subgroups and orders are computed.

#include <spgauge/arith.hpp>
#include <spgauge/chdata.hpp>
#include <spgauge/lattice.hpp>
#include <spgauge/series.hpp>

#include <optional>
#include <vector>

namespace spgauge {

struct PhiResult {
  unsigned n = 0;
  BigInt lower_gen;               // image of zeta_1 alone
  std::vector<BigInt> upper_gens; // images of zeta_1, u^2 xi_2, ..., u^2 xi_n
  std::optional<BigInt> pinned_order;  // set iff gcd(upper_gens) == lower_gen
  Backend backend = Backend::series;

  BigInt upper_gcd() const {
    BigInt g = 0;
    for (const auto& x : upper_gens) g = gcd_nonneg(g, x);
    return g;
  }
};

/// 4n(2n+1).
inline BigInt samelson_order_closed_form(unsigned n) {
  return BigInt(4) * n * (2 * BigInt(n) + 1);
}

inline PhiResult phi_image(unsigned n, Backend backend = Backend::series) {
  if (n == 0) throw Error(ErrorCode::OutOfRange, "rank must be positive");
  const Rational scale(factorial(2 * n + 1));
  PhiResult res;
  res.n = n;
  res.backend = backend;
  res.lower_gen = (scale * tables::zeta1_top(n)).as_integer();
  std::size_t k = 1;
  for (const Rational& t : phi_generator_tops(n, backend)) {
    const Rational img = scale * t;
    if (!img.is_integer())
      throw Error(ErrorCode::NonIntegralGenerator,
                  "(2n+1)! * top coefficient is " + img.to_string() + " at n=" +
                      std::to_string(n) + " k=" + std::to_string(k) + " (" +
                      std::string(to_string(backend)) + " backend)");
    res.upper_gens.push_back(abs_value(img.num()));
    ++k;
  }
  const BigInt g = res.upper_gcd();
  if (g == res.lower_gen) res.pinned_order = g;
  return res;
}

/// Order of the class of S^3 y_{4n-1} in coker Phi, from the Smith form of the
/// 1 x n presentation matrix.
inline std::optional<BigInt> phi_cokernel_order(const PhiResult& r) {
  const IntMatrix a = IntMatrix::row_vector(r.upper_gens);
  return element_order_in_coker(a, {BigInt(1)});
}

/// Order of <eps, iota_n> in pi_*(Sp(n)). The lattice path and the direct gcd
/// path must agree with each other and with 4n(2n+1); any disagreement throws.
inline BigInt samelson_order_eps_iota(unsigned n) {
  const PhiResult r = phi_image(n, Backend::series);
  if (!r.pinned_order)
    throw Error(ErrorCode::Unpinned, "image of Phi not pinned at n=" + std::to_string(n));
  const auto lattice = phi_cokernel_order(r);
  if (!lattice || *lattice != *r.pinned_order)
    throw Error(ErrorCode::Internal, "lattice and gcd orders disagree at n=" + std::to_string(n));
  if (*lattice != samelson_order_closed_form(n))
    throw Error(ErrorCode::Internal, "order differs from 4n(2n+1) at n=" + std::to_string(n));
  return *lattice;
}

/// (p-1)^2 + 1 >= 2n: Sp(n) is retractible at p.
inline bool sp_guard_holds(unsigned n, std::int64_t p) {
  const BigInt lhs = BigInt(p - 1) * (p - 1) + 1;
  return lhs >= 2 * BigInt(n);
}

/// p-part of the order of <eps, 1_{Sp(n)}>, available only when Sp(n) is
/// retractible at p.
inline BigInt samelson_p_part_full(unsigned n, std::int64_t p) {
  if (n == 0) throw Error(ErrorCode::OutOfRange, "rank must be positive");
  require_prime(p);
  if (!sp_guard_holds(n, p))
    throw Error(ErrorCode::GuardFailed, "(p-1)^2+1 < 2n for n=" + std::to_string(n) +
                                            " p=" + std::to_string(p));
  return p_part(samelson_order_eps_iota(n), p);
}

}  // namespace spgauge
