#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "findex/formulas.hpp"
#include "findex/generators.hpp"
#include "findex/graph.hpp"
#include "findex/operations.hpp"

namespace findex {

// One row of the `table paper-examples` output: a named instance whose
// F-index is computed twice, once by closed form and once by explicit
// construction plus the degree definition. The two columns must agree.
struct PaperTableRow {
  std::string family;
  std::string params;  // space-separated integers
  std::int64_t formula = 0;
  std::int64_t direct = 0;
  bool match() const { return formula == direct; }
};

namespace detail {

inline std::string join_params(const std::vector<std::int64_t>& params) {
  std::ostringstream out;
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) out << ' ';
    out << params[i];
  }
  return out.str();
}

inline PaperTableRow family_row(Family family, std::vector<std::int64_t> params) {
  const FamilySpec spec{family, params};
  return PaperTableRow{std::string(family_name(family)), join_params(params),
                       f_family(spec).value(), f_index(make_family(spec)).value()};
}

// Tensor-product rows: the closed form is the product of the factor closed
// forms; the direct column builds the tensor product itself.
inline PaperTableRow tensor_row(const std::string& label, Family left, std::int64_t p1,
                                Family right, std::int64_t p2) {
  const FamilySpec s1{left, {p1}}, s2{right, {p2}};
  return PaperTableRow{label, join_params({p1, p2}),
                       f_tensor(f_family(s1), f_family(s2)).value(),
                       f_index(tensor_product(make_family(s1), make_family(s2))).value()};
}

}  // namespace detail

// Every numeric instance quoted for the named families, each computed by
// both routes.
inline std::vector<PaperTableRow> paper_example_rows() {
  using detail::family_row;
  using detail::tensor_row;
  std::vector<PaperTableRow> rows;

  rows.push_back(family_row(Family::complete_multipartite, {1, 3}));  // star K(1,3)
  rows.push_back(family_row(Family::wheel, {5}));
  rows.push_back(family_row(Family::wheel, {6}));
  rows.push_back(family_row(Family::fan, {5}));
  rows.push_back(family_row(Family::windmill, {2}));
  rows.push_back(family_row(Family::cone, {3, 2}));
  rows.push_back(family_row(Family::hypercube, {3}));
  rows.push_back(family_row(Family::hypercube, {4}));
  rows.push_back(family_row(Family::hamming, {2, 3}));
  rows.push_back(family_row(Family::hamming, {3, 3}));
  rows.push_back(family_row(Family::torus, {3, 3, 3}));
  rows.push_back(family_row(Family::nanotube_c4, {4, 5}));
  rows.push_back(family_row(Family::torus, {4, 5}));  // nanotorus
  rows.push_back(family_row(Family::grid, {3, 3}));
  rows.push_back(family_row(Family::fence, {3}));
  rows.push_back(family_row(Family::closed_fence, {3}));
  rows.push_back(tensor_row("tensor_path_path", Family::path, 3, Family::path, 3));
  rows.push_back(tensor_row("tensor_cycle_cycle", Family::cycle, 4, Family::cycle, 3));
  rows.push_back(tensor_row("tensor_complete_complete", Family::complete, 3, Family::complete, 3));
  rows.push_back(tensor_row("tensor_path_cycle", Family::path, 3, Family::cycle, 3));
  rows.push_back(tensor_row("tensor_path_complete", Family::path, 3, Family::complete, 3));
  rows.push_back(tensor_row("tensor_cycle_complete", Family::cycle, 3, Family::complete, 3));
  rows.push_back(family_row(Family::thorny_cycle, {3, 2}));
  rows.push_back(family_row(Family::thorny_path, {3, 2}));

  // Bottleneck of P3: closed form in the operand summary vs corona(K2, .).
  const Graph p3 = path(3);
  rows.push_back(PaperTableRow{"bottleneck_path", "3", f_bottleneck(summarize(p3)).value(),
                               f_index(corona(complete(2), p3)).value()});

  rows.push_back(family_row(Family::bridge_b, {2}));
  rows.push_back(family_row(Family::bridge_b, {3}));
  rows.push_back(family_row(Family::bridge_t3, {2}));
  rows.push_back(family_row(Family::comb, {3}));
  rows.push_back(family_row(Family::sun, {3, 2}));
  return rows;
}

}  // namespace findex
