#pragma once

// Chern-character data of the named K / KSp generators on suspended
// quasi-projective spaces.
//
// Cohomology of Sigma^s Q_n is free on Sigma^s y_{4j-1}, 1 <= j <= n, with
// Sigma^s y_{4j-1} in degree 4j-1+s. A ChVector stores ch(c'(g)) in that
// basis. For the rank-n tables only the entries pinned down exactly are
// stored (`complete == false`); for Q_2 the full vectors are known.

#include <spgauge/arith.hpp>
#include <spgauge/series.hpp>

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

namespace spgauge {

enum class Family { SuspQn, SuspQ2 };

constexpr std::string_view to_string(Family f) {
  return f == Family::SuspQn ? "SuspQn" : "SuspQ2";
}

struct Space {
  Family family = Family::SuspQ2;
  unsigned rank = 2;
  unsigned susp = 0;

  static Space susp_q2(unsigned s) { return {Family::SuspQ2, 2, s}; }
  static Space susp_qn(unsigned n, unsigned s) {
    if (n == 0) throw Error(ErrorCode::OutOfRange, "rank must be positive");
    return {Family::SuspQn, n, s};
  }

  unsigned degree(unsigned j) const {
    if (j < 1 || j > rank) throw Error(ErrorCode::OutOfRange, "basis index out of range");
    return 4 * j - 1 + susp;
  }

  std::string label() const {
    std::string base = family == Family::SuspQ2 ? "Q_2" : "Q_" + std::to_string(rank);
    if (susp == 0) return base;
    return "S^" + std::to_string(susp) + base;
  }

  friend bool operator==(const Space&, const Space&) = default;
};

struct ChVector {
  Space space;
  std::map<unsigned, Rational> coeffs;  // basis index j -> coefficient of Sigma^s y_{4j-1}
  int u_power = 0;                      // power of the Bott class carried along
  bool complete = true;                 // false: absent entries are unknown, not zero

  Rational coeff(unsigned j) const {
    space.degree(j);
    auto it = coeffs.find(j);
    if (it != coeffs.end()) return it->second;
    if (!complete)
      throw Error(ErrorCode::Unsupported,
                  "coefficient " + std::to_string(j) + " is not tabulated for " + space.label());
    return 0;
  }

  /// Multiply by u^delta. Each Bott factor shifts the suspension by 2 and
  /// leaves ch coefficients unchanged.
  ChVector shift_bott(int delta) const {
    const int s = static_cast<int>(space.susp) + 2 * delta;
    if (s < 0) throw Error(ErrorCode::OutOfRange, "negative suspension after Bott shift");
    ChVector out = *this;
    out.space.susp = static_cast<unsigned>(s);
    out.u_power += delta;
    return out;
  }

  friend bool operator==(const ChVector&, const ChVector&) = default;
};

struct NamedGenerator {
  std::string name;
  ChVector ch;
};

namespace tables {

/// ch(c'(theta_1)) = S y_3 - 1/6 S y_7 on S Q_2.
inline ChVector theta1() { return {Space::susp_q2(1), {{1, 1}, {2, Rational(-1, 6)}}, 0, true}; }
/// ch(c'(theta_2)) = 2 S y_7.
inline ChVector theta2() { return {Space::susp_q2(1), {{2, 2}}, 0, true}; }
/// ch(c'(rho_1)) = 2 S^5 y_3 + 1/3 S^5 y_7, rho_1 = q(u^2 c'(theta_1)).
inline ChVector rho1() { return {Space::susp_q2(5), {{1, 2}, {2, Rational(1, 3)}}, 2, true}; }
/// ch(c'(rho_2)) = S^5 y_7.
inline ChVector rho2() { return {Space::susp_q2(5), {{2, 1}}, 2, true}; }

/// Top coefficient of ch(u^{-1} c'(zeta_1)) on S^3 Q_n: 2/(2n-1)!.
/// zeta_1 = q(u^2 xi_1) and c'q = 1 + t doubles the coefficient of u xi_1.
inline Rational zeta1_top(unsigned n) {
  if (n == 0) throw Error(ErrorCode::OutOfRange, "rank must be positive");
  return Rational(2, factorial(2 * n - 1));
}

inline Rational xi_top(unsigned n, unsigned k, Backend backend = Backend::series) {
  return top_coeff(n, k, backend);
}

/// Leading coefficient of ch(c'(zeta_i)): 1 for i even, 2 for i odd.
inline BigInt zeta_leading(unsigned i) {
  if (i == 0) throw Error(ErrorCode::OutOfRange, "generator index starts at 1");
  return i % 2 == 0 ? 1 : 2;
}

}  // namespace tables

/// Named basis of the reduced KSp group of `space`, with ch data attached.
/// Suspensions are reduced mod 8 (Bott periodicity); the returned vectors
/// live on `space` itself, coefficients unchanged. Zero groups give {}.
inline std::vector<NamedGenerator> ksp_basis(const Space& space) {
  const unsigned s8 = space.susp % 8;
  const int bott = static_cast<int>(space.susp / 8) * 4;
  auto place = [&](ChVector v) {
    v.u_power += bott;
    v.space = space;
    return v;
  };
  if (space.family == Family::SuspQ2) {
    if (space.susp % 4 == 0) return {};
    if (s8 == 1) return {{"theta1", place(tables::theta1())}, {"theta2", place(tables::theta2())}};
    if (s8 == 5) return {{"rho1", place(tables::rho1())}, {"rho2", place(tables::rho2())}};
    throw Error(ErrorCode::Unsupported, "KSp of " + space.label() + " is not tabulated");
  }
  if (s8 == 5) {
    const unsigned n = space.rank;
    std::vector<NamedGenerator> out;
    ChVector z1{space, {{n, tables::zeta1_top(n)}}, 2 + bott, n == 1};
    out.push_back({"zeta1", std::move(z1)});
    for (unsigned i = 2; i <= n; ++i) {
      ChVector zi{space, {{i, Rational(tables::zeta_leading(i))}}, 2 + bott, false};
      out.push_back({"zeta" + std::to_string(i), std::move(zi)});
    }
    return out;
  }
  throw Error(ErrorCode::Unsupported, "KSp of " + space.label() + " is not tabulated");
}

/// Top-degree ch coefficients of a generating set for the source of Phi on
/// S^3 Q_n: zeta_1 followed by u^2 xi_k for 2 <= k <= n. Length n.
inline std::vector<Rational> phi_generator_tops(unsigned n, Backend backend = Backend::series) {
  if (n == 0) throw Error(ErrorCode::OutOfRange, "rank must be positive");
  std::vector<Rational> tops = top_coeffs(n, backend);
  tops[0] = tables::zeta1_top(n);
  return tops;
}

inline nlohmann::ordered_json to_json(const ChVector& v) {
  nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
  for (const auto& [j, c] : v.coeffs)
    coeffs.push_back({{"index", j}, {"num", c.num().str()}, {"den", c.den().str()}});
  return {{"space", {{"family", to_string(v.space.family)},
                     {"rank", v.space.rank},
                     {"susp", v.space.susp}}},
          {"u_power", v.u_power},
          {"complete", v.complete},
          {"coeffs", std::move(coeffs)}};
}

/// The tabulated generators as a JSON document. Rank-n data is included
/// for ranks 1..max_rank.
inline nlohmann::ordered_json tables_to_json(unsigned max_rank = 4) {
  nlohmann::ordered_json gens = nlohmann::ordered_json::array();
  for (unsigned s : {1u, 5u})
    for (const auto& g : ksp_basis(Space::susp_q2(s)))
      gens.push_back({{"name", g.name}, {"ch", to_json(g.ch)}});
  for (unsigned n = 1; n <= max_rank; ++n)
    for (const auto& g : ksp_basis(Space::susp_qn(n, 5)))
      gens.push_back({{"name", g.name}, {"ch", to_json(g.ch)}});
  return {{"generators", std::move(gens)}};
}

}  // namespace spgauge
