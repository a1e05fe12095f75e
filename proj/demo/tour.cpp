// tour.cpp -- a short walk through the library API.
//
//   $ cmake --build build --target wadge_tour && ./build/demo/wadge_tour

#include <iostream>

#include "wadge/wadge.hpp"

int main() {
  using namespace wadge;

  QuasiOrder q = QuasiOrder::builtin("antichain:2");

  // The first levels of the difference hierarchy, named by alternating
  // chains.
  Term sigma1 = parse_term("0 -> 1");
  Term pi1 = parse_term("1 -> 0");
  Term delta1 = parse_term("(sum 0 1)");
  std::cout << "sigma1 vs pi1:    " << relation_symbol(relation(q, sigma1, pi1)) << "\n";
  std::cout << "delta1 vs sigma1: " << relation_symbol(relation(q, delta1, sigma1)) << "\n";

  // Evaluate the guessing process named by a term: passes and even inputs
  // keep the current guess, the first odd input 2k+1 moves into child k.
  std::cout << "eval(0 -> 1, <pass>) = "
            << eval_omega(q, sigma1, parse_stream("p")).element() << "\n";
  std::cout << "eval(0 -> 1, <1>)    = "
            << eval_omega(q, sigma1, parse_stream("1")).element() << "\n";

  // Synthesize the continuous reduction witnessing sigma1 below the
  // two-change chain, and run it.
  Term diff2 = parse_term("0 -> 1 -> 0");
  Plan plan = synth_reduction(q, sigma1, diff2);
  std::cout << "plan:\n" << print_plan(plan);
  std::cout << "translated input 1,p: " << format_stream(run_transducer(plan, parse_stream("1,p")))
            << "\n";

  // Exhaustive small corpus with its covering diagram.
  auto terms = enum_terms(q, 3);
  std::cout << "degrees with at most 3 nodes: " << terms.size() << "\n";
  auto rep = structure_report(q, terms);
  std::cout << "max antichain among irreducibles: " << rep.max_antichain_among_irreducibles
            << "\n";
  return 0;
}
