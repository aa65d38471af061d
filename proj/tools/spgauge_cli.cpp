// Command-line front end for the spgauge library.
//
// Exit codes: 0 ok, 1 verification failure, 2 usage or domain error.

#include <spgauge/spgauge.hpp>

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace spgauge;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

BigInt parse_bigint(const std::string& s) {
  if (s.find('/') != std::string::npos)
    throw Error(ErrorCode::BadQuery, "expected an integer, got '" + s + "'");
  return Rational::parse(s).as_integer();
}

std::string guard_trail(const Verdict& v) {
  std::string s;
  for (const auto& g : v.guards)
    s += (s.empty() ? "" : "; ") + g.name + ": " + (g.passed ? "pass" : "fail") + " (" + g.detail + ")";
  return s;
}

Record verdict_row(unsigned n, const std::string& k, const std::string& l, std::int64_t p, const Verdict& v) {
  return {{"n", std::to_string(n)},
          {"k", k},
          {"l", l},
          {"p", std::to_string(p)},
          {"outcome", std::string(to_string(v.outcome))},
          {"criterion", v.criterion},
          {"nu_p_k", v.invariant_values.first.str()},
          {"nu_p_l", v.invariant_values.second.str()},
          {"guards", guard_trail(v)}};
}

struct Options {
  unsigned n = 0;
  unsigned min_n = 0;
  unsigned max_n = 0;
  std::vector<std::string> k;
  std::string l = "0";
  std::int64_t p = 0;
  unsigned epsilon = 1;
  unsigned k_max = 0;
  std::string backend = "series";
  std::string format = "markdown";
  std::string group = "Sp";
  std::string query;
  unsigned jobs = 1;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Samelson products, Phi images and gauge-group invariants for Sp(n) over S^4"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--format", opt.format, "json | csv | markdown")
      ->check(CLI::IsMember({"json", "csv", "markdown"}));
  app.add_option("--jobs", opt.jobs, "worker threads for sweeps")->check(CLI::PositiveNumber);

  auto* order = app.add_subcommand("order", "order of <eps, iota_n>, optionally its p-part");
  order->add_option("--n", opt.n, "rank")->required()->check(CLI::PositiveNumber);
  order->add_option("--p", opt.p, "prime for the p-part of <eps, 1_Sp(n)>");

  auto* phigens = app.add_subcommand("phi-gens", "generators of Im Phi on S^3 Q_n");
  phigens->add_option("--n", opt.n, "rank")->required()->check(CLI::PositiveNumber);
  phigens->add_option("--backend", opt.backend, "series | printed")
      ->check(CLI::IsMember({"series", "printed"}));

  auto* classify = app.add_subcommand("classify", "p-local comparison of two gauge groups");
  classify->require_subcommand(1);
  auto* csp = classify->add_subcommand("sp", "G_k(Sp(n)) vs G_l(Sp(n))");
  auto* cspin = classify->add_subcommand("spin", "G_k(Spin(2n+e)) vs G_l(Spin(2n+e))");
  for (auto* sub : {csp, cspin}) {
    sub->add_option("--n", opt.n, "rank")->required()->check(CLI::PositiveNumber);
    sub->add_option("--k", opt.k, "first bundle class")->required()->expected(1);
    sub->add_option("--l", opt.l, "second bundle class")->required();
    sub->add_option("--p", opt.p, "prime")->required();
  }
  cspin->add_option("--epsilon", opt.epsilon, "1 | 2")->check(CLI::IsMember({1u, 2u}));

  auto* invariant = app.add_subcommand("invariant", "homotopy invariants of G_{k,n}");
  invariant->add_option("--n", opt.n, "rank")->required()->check(CLI::PositiveNumber);
  invariant->add_option("--k", opt.k, "bundle class (repeatable or comma separated)")
      ->required()
      ->delimiter(',');
  invariant->add_option("--p", opt.p, "odd prime for the order of pi_{4n+1}");

  auto* retract = app.add_subcommand("retractible", "retractibility of a Lie group at p");
  retract->add_option("--group", opt.group, "SU | Sp | SpinOdd | G2 | F4 | E6 | E7 | E8")
      ->check(CLI::IsMember({"SU", "Sp", "SpinOdd", "G2", "F4", "E6", "E7", "E8"}));
  retract->add_option("--n", opt.n, "rank parameter (ignored for exceptional groups)");
  retract->add_option("--p", opt.p, "prime")->required();

  auto* verify = app.add_subcommand("verify", "run the self-verification sweep");
  verify->add_option("--max-n", opt.max_n, "largest rank")->required();

  auto* table = app.add_subcommand("table", std::string(kTableUsage));
  table->add_option("query", opt.query, "orders | phi-gens | classify-grid | invariants")->required();
  table->add_option("--n", opt.n, "single rank");
  table->add_option("--min-n", opt.min_n, "smallest rank");
  table->add_option("--max-n", opt.max_n, "largest rank");
  table->add_option("--k", opt.k, "bundle classes")->delimiter(',');
  table->add_option("--k-max", opt.k_max, "grid bound for k and l");
  table->add_option("--p", opt.p, "prime");
  table->add_option("--backend", opt.backend, "series | printed")
      ->check(CLI::IsMember({"series", "printed"}));

  auto* chjson = app.add_subcommand("ch-tables", "export the generator ch tables as JSON");
  chjson->add_option("--max-n", opt.max_n, "largest rank for the zeta tables")->default_val(4);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    const Format format = parse_format(opt.format);
    Report rep;

    if (*order) {
      rep.command = "order";
      rep.parameters = {{"n", std::to_string(opt.n)}};
      if (opt.p != 0) {
        require_prime(opt.p);
        rep.parameters.emplace_back("p", std::to_string(opt.p));
      }
      rep.rows.push_back(detail::orders_row(opt.n, opt.p));
    } else if (*phigens) {
      const Backend backend = parse_backend(opt.backend);
      rep.command = "phi-gens";
      rep.parameters = {{"n", std::to_string(opt.n)}, {"backend", opt.backend}};
      rep.rows = detail::phi_gen_rows(opt.n, backend);
      try {
        const PhiResult r = phi_image(opt.n, backend);
        rep.parameters.emplace_back("lower_gen", r.lower_gen.str());
        rep.parameters.emplace_back("gcd", r.upper_gcd().str());
        rep.parameters.emplace_back("pinned_order", r.pinned_order ? r.pinned_order->str() : "Unpinned");
      } catch (const Error& e) {
        if (e.code() != ErrorCode::NonIntegralGenerator) throw;
        rep.parameters.emplace_back("pinned_order", "NonIntegralGenerator");
      }
    } else if (*csp || *cspin) {
      const std::string k = opt.k.at(0);
      const BigInt kv = parse_bigint(k), lv = parse_bigint(opt.l);
      Verdict v;
      if (*csp) {
        rep.command = "classify sp";
        v = decide_local(opt.n, kv, lv, opt.p);
        rep.parameters = {{"n", std::to_string(opt.n)}};
      } else {
        const unsigned m = 2 * opt.n + opt.epsilon;
        rep.command = "classify spin";
        v = decide_spin(m, kv, lv, opt.p);
        rep.parameters = {{"n", std::to_string(opt.n)},
                          {"epsilon", std::to_string(opt.epsilon)},
                          {"group", "Spin(" + std::to_string(m) + ")"}};
      }
      rep.parameters.emplace_back("k", kv.str());
      rep.parameters.emplace_back("l", lv.str());
      rep.parameters.emplace_back("p", std::to_string(opt.p));
      rep.rows.push_back(verdict_row(opt.n, kv.str(), lv.str(), opt.p, v));
    } else if (*invariant) {
      TableParams tp;
      tp.min_n = tp.max_n = opt.n;
      tp.p = opt.p;
      for (const auto& k : opt.k) tp.ks.push_back(parse_bigint(k));
      rep = emit_table(TableQuery::invariants, tp);
      rep.command = "invariant";
    } else if (*retract) {
      require_prime(opt.p);
      const LieFamily f = parse_lie_family(opt.group);
      rep.command = "retractible";
      rep.parameters = {{"group", opt.group}, {"n", std::to_string(opt.n)}, {"p", std::to_string(opt.p)}};
      rep.rows.push_back({{"group", opt.group},
                          {"n", std::to_string(opt.n)},
                          {"p", std::to_string(opt.p)},
                          {"retractible", retractible(f, opt.n, opt.p) ? "true" : "false"}});
    } else if (*verify) {
      rep = verify_sweep(opt.max_n, opt.jobs);
    } else if (*table) {
      TableParams tp;
      tp.min_n = opt.n ? opt.n : (opt.min_n ? opt.min_n : 1);
      tp.max_n = opt.n ? opt.n : (opt.max_n ? opt.max_n : tp.min_n);
      for (const auto& k : opt.k) tp.ks.push_back(parse_bigint(k));
      tp.k_max = opt.k_max;
      tp.p = opt.p;
      tp.backend = parse_backend(opt.backend);
      tp.jobs = opt.jobs;
      rep = emit_table(parse_table_query(opt.query), tp);
    } else if (*chjson) {
      std::cout << tables_to_json(opt.max_n).dump(2) << "\n";
      return kExitOk;
    }

    std::cout << render(rep, format);
    return rep.ok() ? kExitOk : kExitFailed;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (e.code() == ErrorCode::BadQuery) std::cerr << app.help();
    return e.code() == ErrorCode::Internal ? kExitFailed : kExitUsage;
  }
}
