// Solve a small unit-disk instance with every solver and print the sizes.

#include <iostream>

#include "cdr/cdr.hpp"

int main() {
  cdr::GenParams params;
  params.n = 12;
  params.radius = 0.45;
  const auto g = cdr::gen_graph(cdr::Family::UnitDisk, params, 42);
  std::cout << "n=" << g.vertex_count() << " m=" << g.edge_count()
            << " couples=" << cdr::target_couples(g).size() << '\n';

  for (int alpha : {2, 5}) {
    const auto greedy = cdr::solve_greedy(g, alpha);
    const auto exact = cdr::exact_opt(g, alpha);
    std::cout << "alpha=" << alpha << " greedy=" << greedy.size() << " (" << *greedy.rounds
              << " rounds) exact=" << exact.size();
    if (alpha >= 5) std::cout << " path-augment=" << cdr::solve_path_augment(g, alpha).size();
    std::cout << " best=" << cdr::solve_best(g, alpha).size() << '\n';
  }

  const auto inst = cdr::generate_minrep(2, 2, 2, 0.5, 7);
  const auto rg = cdr::build_reduction(inst);
  std::cout << "gadget vertices=" << rg.graph.vertex_count()
            << " checks=" << (cdr::check_structure(rg).all() ? "ok" : "FAILED") << '\n';
}
