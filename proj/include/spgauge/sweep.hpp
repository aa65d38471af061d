#pragma once

// Table generation and the self-verification sweep behind the CLI.
// Work fans out over worker threads; results are merged by index so the
// output does not depend on the worker count.

#include <spgauge/arith.hpp>
#include <spgauge/gauge.hpp>
#include <spgauge/phi.hpp>
#include <spgauge/report.hpp>
#include <spgauge/series.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <thread>
#include <vector>

namespace spgauge {

/// fn(i) for i in [0, count) on up to `jobs` threads, results in index order.
template <class F>
auto parallel_map(std::size_t count, unsigned jobs, F fn) {
  using R = decltype(fn(std::size_t{}));
  std::vector<R> out(count);
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(jobs, count));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += workers) out[i] = fn(i);
    });
  for (auto& t : pool) t.join();
  return out;
}

enum class TableQuery { orders, phi_gens, classify_grid, invariants };

inline constexpr std::string_view kTableUsage =
    "table queries: orders (--min-n, --max-n [, --p]), phi-gens (--min-n, --max-n [, --backend]), "
    "classify-grid (--n or --min-n/--max-n, --p, --k-max), invariants (--n or --min-n/--max-n, --k "
    "list)";

inline TableQuery parse_table_query(std::string_view s) {
  if (s == "orders") return TableQuery::orders;
  if (s == "phi-gens") return TableQuery::phi_gens;
  if (s == "classify-grid") return TableQuery::classify_grid;
  if (s == "invariants") return TableQuery::invariants;
  throw Error(ErrorCode::BadQuery, "unknown table '" + std::string(s) + "'; " + std::string(kTableUsage));
}

constexpr std::string_view to_string(TableQuery q) {
  switch (q) {
    case TableQuery::orders: return "orders";
    case TableQuery::phi_gens: return "phi-gens";
    case TableQuery::classify_grid: return "classify-grid";
    case TableQuery::invariants: return "invariants";
  }
  return "?";
}

struct TableParams {
  unsigned min_n = 1;
  unsigned max_n = 1;
  std::vector<BigInt> ks;  // invariants
  unsigned k_max = 0;      // classify-grid: k, l range over [0, k_max]
  std::int64_t p = 0;      // 0: not given
  Backend backend = Backend::series;
  unsigned jobs = 1;
};

namespace detail {

inline std::string bool_str(bool b) { return b ? "true" : "false"; }

inline Record orders_row(unsigned n, std::int64_t p) {
  Record r{{"n", std::to_string(n)},
           {"order", samelson_order_eps_iota(n).str()},
           {"closed_form", samelson_order_closed_form(n).str()}};
  if (p != 0) {
    r.emplace_back("p", std::to_string(p));
    try {
      r.emplace_back("p_part", samelson_p_part_full(n, p).str());
    } catch (const Error& e) {
      if (e.code() != ErrorCode::GuardFailed) throw;
      r.emplace_back("p_part", "GuardFailed");
    }
  }
  return r;
}

inline std::vector<Record> phi_gen_rows(unsigned n, Backend backend) {
  const Rational scale(factorial(2 * n + 1));
  const BigInt modulus = samelson_order_closed_form(n);
  const auto tops = phi_generator_tops(n, backend);
  std::vector<Record> rows;
  for (std::size_t i = 0; i < tops.size(); ++i) {
    const Rational img = scale * tops[i];
    const bool integral = img.is_integer();
    rows.push_back({{"n", std::to_string(n)},
                    {"index", std::to_string(i + 1)},
                    {"generator", i == 0 ? "zeta1" : "u2xi" + std::to_string(i + 1)},
                    {"backend", std::string(to_string(backend))},
                    {"top_coeff", tops[i].to_string()},
                    {"image", img.to_string()},
                    {"integral", bool_str(integral)},
                    {"divisible", bool_str(integral && img.num() % modulus == 0)}});
  }
  return rows;
}

inline Record invariants_row(unsigned n, const BigInt& k, std::int64_t p) {
  const Bundle b{n, k};
  Record r{{"n", std::to_string(n)},
           {"k", k.str()},
           {"sutherland", sutherland_invariant(b).str()},
           {"refined", refined_invariant(b).str()}};
  if (n % 2 == 0) {
    const auto q = q2_mapping_invariant(n, k);
    const auto im = im_partial_order(n, k);
    r.emplace_back("q2_order", q.value.str());
    r.emplace_back("q2_closed_form", q.closed_form.str());
    r.emplace_back("q2_agrees", bool_str(q.agrees()));
    r.emplace_back("im_partial_order", im.value.str());
    r.emplace_back("im_partial_closed_form", im.closed_form.str());
    r.emplace_back("im_partial_agrees", bool_str(im.agrees()));
  } else {
    for (const char* f : {"q2_order", "q2_closed_form", "q2_agrees", "im_partial_order",
                          "im_partial_closed_form", "im_partial_agrees"})
      r.emplace_back(f, "");
  }
  if (p != 0 && p != 2) r.emplace_back("pi4n1_order", pi4n1_order(n, k, p).str());
  return r;
}

}  // namespace detail

inline Report emit_table(TableQuery q, const TableParams& params) {
  if (params.min_n == 0 || params.max_n < params.min_n)
    throw Error(ErrorCode::BadQuery, "need 1 <= min-n <= max-n; " + std::string(kTableUsage));
  Report rep;
  rep.command = "table " + std::string(to_string(q));
  rep.parameters = {{"min_n", std::to_string(params.min_n)}, {"max_n", std::to_string(params.max_n)}};
  const std::size_t count = params.max_n - params.min_n + 1;
  auto nth = [&](std::size_t i) { return params.min_n + static_cast<unsigned>(i); };

  switch (q) {
    case TableQuery::orders: {
      if (params.p != 0) {
        require_prime(params.p);
        rep.parameters.emplace_back("p", std::to_string(params.p));
      }
      auto rows = parallel_map(count, params.jobs, [&](std::size_t i) { return detail::orders_row(nth(i), params.p); });
      rep.rows = std::move(rows);
      break;
    }
    case TableQuery::phi_gens: {
      rep.parameters.emplace_back("backend", std::string(to_string(params.backend)));
      auto chunks = parallel_map(count, params.jobs, [&](std::size_t i) { return detail::phi_gen_rows(nth(i), params.backend); });
      for (auto& c : chunks) rep.rows.insert(rep.rows.end(), c.begin(), c.end());
      break;
    }
    case TableQuery::classify_grid: {
      if (params.p == 0) throw Error(ErrorCode::BadQuery, "classify-grid needs --p; " + std::string(kTableUsage));
      require_prime(params.p);
      rep.parameters.emplace_back("p", std::to_string(params.p));
      rep.parameters.emplace_back("k_max", std::to_string(params.k_max));
      auto chunks = parallel_map(count, params.jobs, [&](std::size_t i) {
        const unsigned n = nth(i);
        std::vector<Record> rows;
        for (unsigned k = 0; k <= params.k_max; ++k)
          for (unsigned l = 0; l <= params.k_max; ++l) {
            const Verdict v = decide_local(n, k, l, params.p);
            rows.push_back({{"n", std::to_string(n)},
                            {"k", std::to_string(k)},
                            {"l", std::to_string(l)},
                            {"p", std::to_string(params.p)},
                            {"outcome", std::string(to_string(v.outcome))},
                            {"equivalent", detail::bool_str(v.outcome == Outcome::Equivalent)}});
          }
        return rows;
      });
      for (auto& c : chunks) rep.rows.insert(rep.rows.end(), c.begin(), c.end());
      break;
    }
    case TableQuery::invariants: {
      if (params.ks.empty()) throw Error(ErrorCode::BadQuery, "invariants needs --k; " + std::string(kTableUsage));
      std::vector<BigInt> ks = params.ks;
      std::sort(ks.begin(), ks.end());
      std::string klist;
      for (const auto& k : ks) klist += (klist.empty() ? "" : ",") + k.str();
      rep.parameters.emplace_back("k", klist);
      if (params.p != 0) {
        require_prime(params.p);
        rep.parameters.emplace_back("p", std::to_string(params.p));
      }
      auto chunks = parallel_map(count, params.jobs, [&](std::size_t i) {
        std::vector<Record> rows;
        for (const auto& k : ks) rows.push_back(detail::invariants_row(nth(i), k, params.p));
        return rows;
      });
      for (auto& c : chunks) rep.rows.insert(rep.rows.end(), c.begin(), c.end());
      break;
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Self-verification sweep

namespace detail {

struct CheckResult {
  std::vector<Record> rows;
  std::vector<std::string> failures;

  void add(std::string check, std::string n, std::string k, std::string value,
           std::string reference, bool pass, const std::string& why = {}) {
    rows.push_back({{"check", check},
                    {"n", std::move(n)},
                    {"k", std::move(k)},
                    {"value", std::move(value)},
                    {"reference", std::move(reference)},
                    {"result", pass ? "pass" : "fail"}});
    if (!pass) failures.push_back(check + (why.empty() ? "" : ": " + why));
  }

  void fail(const std::string& check, const std::string& why) { failures.push_back(check + ": " + why); }

  void merge(CheckResult&& o) {
    rows.insert(rows.end(), std::make_move_iterator(o.rows.begin()), std::make_move_iterator(o.rows.end()));
    failures.insert(failures.end(), o.failures.begin(), o.failures.end());
  }
};

// Order of <eps, iota_n>, the divisibility of the xi images, and the
// lattice-vs-gcd agreement for one n.
inline CheckResult verify_rank(unsigned n) {
  CheckResult out;
  const std::string ns = std::to_string(n);
  const BigInt closed = samelson_order_closed_form(n);
  try {
    const PhiResult r = phi_image(n, Backend::series);
    const bool pinned = r.pinned_order && *r.pinned_order == closed;
    out.add("samelson-order", ns, "", r.pinned_order ? r.pinned_order->str() : "Unpinned",
            closed.str(), pinned, "n=" + ns);

    std::size_t bad = 0;
    for (std::size_t k = 2; k <= n; ++k)
      if (r.upper_gens[k - 1] % closed != 0) ++bad;
    if (n >= 2)
      out.add("divisibility", ns, "2.." + ns, std::to_string(n - 1 - bad) + "/" + std::to_string(n - 1),
              closed.str(), bad == 0, "n=" + ns + " has " + std::to_string(bad) + " non-divisible images");

    if (n <= 60) {
      const auto lattice = phi_cokernel_order(r);
      const bool agree = lattice && r.pinned_order && *lattice == *r.pinned_order;
      out.add("lattice-vs-gcd", ns, "", lattice ? lattice->str() : "Infinite",
              r.pinned_order ? r.pinned_order->str() : "Unpinned", agree, "n=" + ns);
    }
  } catch (const Error& e) {
    out.fail("samelson-order", "n=" + ns + " threw " + e.what());
  }

  if (n % 2 == 0 && n <= 40) {
    try {
      const BigInt m = mapping_group_sp_n(n);
      const BigInt expect = factorial(2 * n + 1) / 3;
      out.add("mapping-group", ns, "", m.str(), expect.str(), m == expect, "n=" + ns);
    } catch (const Error& e) {
      out.fail("mapping-group", "n=" + ns + " threw " + e.what());
    }
  }

  if (n % 2 == 0 && n <= 12) {
    // q2(n, .) and gcd(., B) induce the same partition of [0, B] iff the
    // correspondence between their values is a bijection.
    const BigInt modulus = classification_modulus(n);
    const unsigned bound = static_cast<unsigned>(modulus);
    std::map<BigInt, BigInt> forward, backward;
    bool ok = true;
    for (unsigned k = 0; k <= bound && ok; ++k) {
      const BigInt q = q2_mapping_invariant(n, k).value;
      const BigInt g = gcd_nonneg(k, modulus);
      auto [fi, fnew] = forward.emplace(g, q);
      auto [bi, bnew] = backward.emplace(q, g);
      ok = (fnew || fi->second == q) && (bnew || bi->second == g);
    }
    out.add("separation", ns, "0.." + modulus.str(), std::to_string(forward.size()) + " classes",
            "gcd(k," + modulus.str() + ")", ok, "n=" + ns);
  }
  return out;
}

inline CheckResult verify_printed_discrepancy() {
  CheckResult out;
  const Rational img = Rational(factorial(7)) * top_coeff(3, 2, Backend::printed);
  const BigInt modulus = samelson_order_closed_form(3);
  const bool diverges = img.is_integer() && img.num() == 150 && img.num() % modulus != 0;
  out.add("printed-discrepancy", "3", "2", img.to_string(), modulus.str(), diverges,
          "printed composition sum no longer yields 150 at (3,2)");
  const PhiResult r = phi_image(3, Backend::printed);
  out.add("printed-unpinned", "3", "", r.pinned_order ? r.pinned_order->str() : "Unpinned",
          "gcd=" + r.upper_gcd().str(), !r.pinned_order, "printed backend unexpectedly pinned at n=3");
  return out;
}

inline CheckResult verify_n2_constants() {
  CheckResult out;
  bool ok = true;
  for (unsigned k = 0; k <= 80; ++k)
    ok = ok && q2_mapping_invariant(2, k).value == gcd_nonneg(k, 40);
  out.add("n2-q2-constant", "2", "0..80", ok ? "gcd(k,40)" : "mismatch", "gcd(k,40)", ok);

  std::map<BigInt, std::vector<unsigned>> classes;
  for (unsigned k = 0; k <= 40; ++k) classes[p_part(gcd_nonneg(k, 40), 5)].push_back(k);
  bool grid_ok = classes.size() == 2 && classes.count(1) && classes.count(5);
  for (unsigned k = 0; k <= 40 && grid_ok; ++k)
    for (unsigned l = 0; l <= 40 && grid_ok; ++l) {
      const Verdict v = decide_local(2, k, l, 5);
      const bool same = p_part(gcd_nonneg(k, 40), 5) == p_part(gcd_nonneg(l, 40), 5);
      grid_ok = v.outcome == (same ? Outcome::Equivalent : Outcome::Distinct);
    }
  out.add("n2-classes-p5", "2", "0..40", std::to_string(classes.size()) + " classes", "2 classes", grid_ok);
  return out;
}

inline CheckResult verify_series_vs_surjections() {
  CheckResult out;
  bool ok = true;
  unsigned checked = 0;
  for (unsigned m = 1; m <= 12; ++m)
    for (unsigned k = 1; k <= m; ++k) {
      const Rational c = exp_minus_one_pow(k, m)[m] * Rational(factorial(m));
      ok = ok && c == Rational(surjections(m, k));
      ++checked;
    }
  out.add("series-vs-surjections", "", "m<=12", std::to_string(checked) + " pairs", "surjections(m,k)", ok);
  return out;
}

inline CheckResult verify_guards(unsigned max_n) {
  CheckResult out;
  bool ok = true;
  unsigned checked = 0;
  for (unsigned n = 1; n <= std::min(max_n, 20u); ++n)
    for (std::int64_t p : {2, 3, 5, 7, 11, 13}) {
      const bool should_fail = (p - 1) * (p - 1) + 1 < 2 * static_cast<std::int64_t>(n);
      bool threw = false;
      try {
        samelson_p_part_full(n, p);
      } catch (const Error& e) {
        threw = e.code() == ErrorCode::GuardFailed;
      }
      const bool undetermined = decide_local(n, 1, 2, p).outcome == Outcome::NotDetermined;
      ok = ok && threw == should_fail && undetermined == should_fail;
      ++checked;
    }
  out.add("guards", "", "", std::to_string(checked) + " (n,p) pairs", "(p-1)^2+1 < 2n", ok);
  return out;
}

}  // namespace detail

inline Report verify_sweep(unsigned max_n, unsigned jobs = 1) {
  if (max_n < 2) throw Error(ErrorCode::BadQuery, "verify needs --max-n >= 2");
  Report rep;
  rep.command = "verify";
  rep.parameters = {{"max_n", std::to_string(max_n)}};
  detail::CheckResult all;
  auto per_rank = parallel_map(max_n, jobs, [](std::size_t i) { return detail::verify_rank(static_cast<unsigned>(i + 1)); });
  for (auto& r : per_rank) all.merge(std::move(r));
  if (max_n >= 3) all.merge(detail::verify_printed_discrepancy());
  all.merge(detail::verify_n2_constants());
  all.merge(detail::verify_series_vs_surjections());
  all.merge(detail::verify_guards(max_n));
  rep.rows = std::move(all.rows);
  rep.failures = std::move(all.failures);
  return rep;
}

}  // namespace spgauge
