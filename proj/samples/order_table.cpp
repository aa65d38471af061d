// Prints the order of the Samelson product for small ranks, the p-parts
// where the retractibility guard holds, and one p-local classification.

#include <spgauge/spgauge.hpp>

#include <iostream>

int main(int argc, char** argv) {
  using namespace spgauge;
  const unsigned max_n = argc > 1 ? static_cast<unsigned>(std::stoul(argv[1])) : 8;

  std::cout << "n  order  3-part  5-part  7-part\n";
  for (unsigned n = 1; n <= max_n; ++n) {
    std::cout << n << "  " << samelson_order_eps_iota(n);
    for (std::int64_t p : {3, 5, 7}) {
      std::cout << "  ";
      if (sp_guard_holds(n, p))
        std::cout << samelson_p_part_full(n, p);
      else
        std::cout << "-";
    }
    std::cout << '\n';
  }

  const Verdict v = decide_local(2, 5, 10, 5);
  std::cout << "\nG_5(Sp(2)) vs G_10(Sp(2)) at p=5: " << to_string(v.outcome) << " (invariants "
            << v.invariant_values.first << ", " << v.invariant_values.second << ")\n";
  return 0;
}
