#pragma once

// Homotopy invariants and p-local classification oracles for the gauge groups
// G_{k,n} of principal Sp(n)-bundles over S^4, and for Spin(2n+e) via the
// odd-primary equivalence B Spin(2n+1) ~ B Sp(n).

#include <spgauge/arith.hpp>
#include <spgauge/chdata.hpp>
#include <spgauge/phi.hpp>

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace spgauge {

struct Bundle {
  unsigned n = 1;  // rank of Sp(n)
  BigInt k = 0;    // class in pi_3(Sp(n)) = Z
};

enum class Outcome { Equivalent, Distinct, NotDetermined };

constexpr std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::Equivalent: return "Equivalent";
    case Outcome::Distinct: return "Distinct";
    case Outcome::NotDetermined: return "NotDetermined";
  }
  return "?";
}

struct GuardCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Verdict {
  Outcome outcome = Outcome::NotDetermined;
  std::string criterion;
  std::pair<BigInt, BigInt> invariant_values;
  std::vector<GuardCheck> guards;

  bool guards_passed() const {
    for (const auto& g : guards)
      if (!g.passed) return false;
    return true;
  }
};

/// A value computed from the group data next to the closed form it is
/// usually quoted as. The two need not agree.
struct ComparedValue {
  BigInt value;
  BigInt closed_form;
  bool agrees() const { return value == closed_form; }
};

namespace detail {

inline void require_rank(unsigned n) {
  if (n == 0) throw Error(ErrorCode::OutOfRange, "rank must be positive");
}

inline void require_even_rank(unsigned n) {
  require_rank(n);
  if (n % 2 != 0)
    throw Error(ErrorCode::OddRank, "n=" + std::to_string(n) + " is odd; only even ranks are covered");
}

}  // namespace detail

/// 4n(2n+1), the modulus of the refined invariant.
inline BigInt classification_modulus(unsigned n) { return samelson_order_closed_form(n); }

/// gcd(k, n(2n+1)) for n even, gcd(k, 4n(2n+1)) for n odd.
inline BigInt sutherland_invariant(const Bundle& b) {
  detail::require_rank(b.n);
  BigInt m = BigInt(b.n) * (2 * BigInt(b.n) + 1);
  if (b.n % 2 != 0) m *= 4;
  return gcd_nonneg(b.k, m);
}

/// gcd(k, 4n(2n+1)).
inline BigInt refined_invariant(const Bundle& b) {
  detail::require_rank(b.n);
  return gcd_nonneg(b.k, classification_modulus(b.n));
}

/// Order of [S^{4n-5} Q_2, Sp(n)] = coker Phi for even n. The source of Phi
/// is KSp(S^{4n-3} Q_2), which Bott periodicity identifies with the rho table;
/// Phi reads the y_7 coefficient scaled by (2n+1)!.
inline BigInt mapping_group_sp_n(unsigned n) {
  detail::require_even_rank(n);
  std::vector<Rational> y7;
  for (const auto& g : ksp_basis(Space::susp_q2(4 * n - 3))) y7.push_back(g.ch.coeff(2));
  const BigInt order = (Rational(factorial(2 * n + 1)) * frac_gcd(y7)).as_integer();
  if (order * 3 != factorial(2 * n + 1))
    throw Error(ErrorCode::Internal, "mapping group order differs from (2n+1)!/3");
  return order;
}

/// Generator of Im delta_k in H^{4n+2}(S^{4n-5} Q_2) = Z. delta_k(alpha) is
/// k times b(2n-1)! up to sign, where b is the y_7 coefficient of ch(c'(alpha))
/// for alpha in KSp(S^{4n-7} Q_2), i.e. the theta table.
inline BigInt im_delta_gen(unsigned n, const BigInt& k) {
  detail::require_even_rank(n);
  std::vector<Rational> b;
  for (const auto& g : ksp_basis(Space::susp_q2(4 * n - 7))) b.push_back(g.ch.coeff(2));
  return (Rational(abs_value(k) * factorial(2 * n - 1)) * frac_gcd(b)).as_integer();
}

/// Order of [S^{4n-8} Q_2, B G_{k,n}] = H / (Im Phi + Im delta_k), next to
/// the closed form gcd(k, 4n(2n+1)). They coincide only at n = 2.
inline ComparedValue q2_mapping_invariant(unsigned n, const BigInt& k) {
  const BigInt order = gcd_nonneg(mapping_group_sp_n(n), im_delta_gen(n, k));
  return {order, gcd_nonneg(k, classification_modulus(n))};
}

/// Order of Im (partial_k)_* as the index |coker Phi| / |coker (Phi, delta_k)|,
/// next to the closed form (2n+1)! / (3 gcd(k, 4n(2n+1))).
inline ComparedValue im_partial_order(unsigned n, const BigInt& k) {
  const BigInt whole = mapping_group_sp_n(n);
  const ComparedValue q = q2_mapping_invariant(n, k);
  return {whole / q.value, whole / gcd_nonneg(k, classification_modulus(n))};
}

inline GuardCheck retractibility_guard(unsigned n, std::int64_t p) {
  const BigInt lhs = BigInt(p - 1) * (p - 1) + 1;
  return {"(p-1)^2+1 >= 2n", sp_guard_holds(n, p),
          lhs.str() + (sp_guard_holds(n, p) ? " >= " : " < ") + std::to_string(2 * n)};
}

namespace detail {

inline Verdict compare_local(unsigned n, const BigInt& k, const BigInt& l, std::int64_t p,
                             std::string criterion, std::vector<GuardCheck> guards) {
  const BigInt modulus = classification_modulus(n);
  Verdict v;
  v.criterion = std::move(criterion);
  v.invariant_values = {p_part(gcd_nonneg(k, modulus), p), p_part(gcd_nonneg(l, modulus), p)};
  v.guards = std::move(guards);
  if (!v.guards_passed())
    v.outcome = Outcome::NotDetermined;
  else
    v.outcome = v.invariant_values.first == v.invariant_values.second ? Outcome::Equivalent
                                                                      : Outcome::Distinct;
  return v;
}

}  // namespace detail

/// p-local comparison of G_{k,n} and G_{l,n}: decided by the p-parts of
/// gcd(k, 4n(2n+1)) and gcd(l, 4n(2n+1)) whenever Sp(n) is retractible at p.
inline Verdict decide_local(unsigned n, const BigInt& k, const BigInt& l, std::int64_t p) {
  detail::require_rank(n);
  require_prime(p);
  return detail::compare_local(n, k, l, p, "Sp(n) p-local: nu_p((k,4n(2n+1))) = nu_p((l,4n(2n+1)))",
                               {retractibility_guard(n, p)});
}

/// Same criterion for Spin(m), m = 2n + e with e in {1, 2}, at odd p.
inline Verdict decide_spin(unsigned m, const BigInt& k, const BigInt& l, std::int64_t p) {
  if (m <= 6)
    throw Error(ErrorCode::BadDimension, "Spin(" + std::to_string(m) + ") needs m >= 7");
  require_prime(p);
  const unsigned n = (m - 1) / 2;
  std::vector<GuardCheck> guards;
  guards.push_back({"p odd", p != 2, "p=" + std::to_string(p)});
  guards.push_back(retractibility_guard(n, p));
  guards.push_back({"2n >= 6", 2 * n >= 6, "2n=" + std::to_string(2 * n)});
  return detail::compare_local(
      n, k, l, p,
      "Spin(" + std::to_string(m) + ") p-local via Sp(" + std::to_string(n) + ")",
      std::move(guards));
}

/// Order of pi_{4n+1}(G_{k,n}) localized at an odd prime p.
inline BigInt pi4n1_order(unsigned n, const BigInt& k, std::int64_t p) {
  detail::require_rank(n);
  require_prime(p);
  if (p == 2) throw Error(ErrorCode::EvenPrime, "pi_{4n+1} order is only available at odd primes");
  return p_part(gcd_nonneg(k, classification_modulus(n)), p);
}

enum class LieFamily { SU, Sp, SpinOdd, G2, F4, E6, E7, E8 };

constexpr std::string_view to_string(LieFamily f) {
  switch (f) {
    case LieFamily::SU: return "SU";
    case LieFamily::Sp: return "Sp";
    case LieFamily::SpinOdd: return "SpinOdd";
    case LieFamily::G2: return "G2";
    case LieFamily::F4: return "F4";
    case LieFamily::E6: return "E6";
    case LieFamily::E7: return "E7";
    case LieFamily::E8: return "E8";
  }
  return "?";
}

inline LieFamily parse_lie_family(std::string_view s) {
  for (auto f : {LieFamily::SU, LieFamily::Sp, LieFamily::SpinOdd, LieFamily::G2, LieFamily::F4,
                 LieFamily::E6, LieFamily::E7, LieFamily::E8})
    if (s == to_string(f)) return f;
  throw Error(ErrorCode::BadQuery, "unknown Lie group family '" + std::string(s) + "'");
}

/// Retractibility of G at p. rank_param is n in SU(n), Sp(n), Spin(2n+1) and
/// is ignored for the exceptional groups.
inline bool retractible(LieFamily family, std::int64_t rank_param, std::int64_t p) {
  const BigInt bound = BigInt(p - 1) * (p - 1) + 1;
  switch (family) {
    case LieFamily::SU: return bound >= rank_param;
    case LieFamily::Sp:
    case LieFamily::SpinOdd: return bound >= 2 * BigInt(rank_param);
    case LieFamily::G2:
    case LieFamily::F4:
    case LieFamily::E6: return p >= 5;
    case LieFamily::E7:
    case LieFamily::E8: return p >= 7;
  }
  return false;
}

}  // namespace spgauge
