// Small tour: build a few named graphs, print their degree-based indices and
// show the closed forms agreeing with explicit construction.

#include <iostream>

#include "findex/formulas.hpp"
#include "findex/generators.hpp"
#include "findex/graph.hpp"
#include "findex/operations.hpp"

int main() {
  using namespace findex;

  const Graph nanotube = cartesian_product(path(6), cycle(8));
  std::cout << "C4 nanotube P6xC8: n=" << nanotube.vertex_count()
            << " m=" << nanotube.edge_count() << " F=" << f_index(nanotube)
            << " M1=" << first_zagreb(nanotube) << " M2=" << second_zagreb(nanotube) << '\n';
  std::cout << "  closed form: " << f_family({Family::nanotube_c4, {6, 8}}) << '\n';

  const Graph wheel = make_family({Family::wheel, {9}});
  std::cout << "wheel W9: F=" << f_index(wheel) << " (closed form "
            << f_family({Family::wheel, {9}}) << ")\n";

  const Graph bowtie = splice(RootedGraph(cycle(3), 0), RootedGraph(cycle(3), 0));
  std::cout << "bowtie C3*C3: F=" << f_index(bowtie) << " (closed form "
            << f_splice(f_index(cycle(3)), f_index(cycle(3)), RootDegreePair{2, 2}) << ")\n";

  const Graph thorny = t_thorn(cycle(6), 3);
  std::cout << "3-thorny C6: F=" << f_index(thorny) << " (closed form "
            << f_thorn(summarize(cycle(6)), 3) << ")\n";
  return 0;
}
