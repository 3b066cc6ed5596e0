#pragma once

#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "findex/checked_int.hpp"
#include "findex/generators.hpp"
#include "findex/graph.hpp"
#include "findex/operations.hpp"

namespace findex {

// Subset data the hierarchical-product formula consumes: |U| together with
// the sum and square-sum of second-operand degrees over U.
struct HierarchicalExtras {
  std::int64_t u_size = 0;
  std::int64_t degree_sum = 0;         // sum over U of d_2(v)
  std::int64_t degree_square_sum = 0;  // sum over U of d_2(v)^2
};

inline HierarchicalExtras hierarchical_extras(const Graph& g2, const VertexSubset& u) {
  HierarchicalExtras extras;
  extras.u_size = static_cast<std::int64_t>(u.size());
  CheckedInt s1 = 0, s2 = 0;
  for (std::size_t v : u.members()) {
    const CheckedInt d = detail::to_checked(g2.degree(v));
    s1 += d;
    s2 += square(d);
  }
  extras.degree_sum = s1.value();
  extras.degree_square_sum = s2.value();
  return extras;
}

// Degrees of the two distinguished vertices of a splice or link.
struct RootDegreePair {
  std::int64_t d1 = 0;
  std::int64_t d2 = 0;
};

namespace detail {

// Exact rational on checked 64-bit integers. Only what the Cartesian-product
// evaluators need: the per-factor divisions are not individually integral,
// but every aggregate is, and as_integer() enforces that.
class Rational {
 public:
  Rational() = default;
  Rational(CheckedInt num, CheckedInt den = CheckedInt(1)) : num_(num), den_(den) {
    if (den_.value() == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den_.value() < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    reduce();
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }

  bool is_integral() const { return den_.value() == 1; }

  CheckedInt as_integer() const {
    if (!is_integral()) throw std::logic_error("Rational: aggregate is not integral");
    return num_;
  }

 private:
  void reduce() {
    const std::int64_t g = std::gcd(num_.value(), den_.value());
    if (g > 1) {
      num_ = num_.value() / g;
      den_ = den_.value() / g;
    }
  }

  CheckedInt num_ = 0;
  CheckedInt den_ = 1;
};

inline void require_positive_counts(std::span<const GraphSummary> summaries, const char* what) {
  for (const GraphSummary& s : summaries)
    if (s.n < 1) throw std::invalid_argument(std::string(what) + ": every operand needs n >= 1");
}

}  // namespace detail

// Union: F of the disjoint union is the sum of the operands' F-indices.
inline CheckedInt f_union(std::span<const CheckedInt> f_values) {
  if (f_values.empty()) throw std::invalid_argument("f_union: empty operand list");
  CheckedInt total = 0;
  for (CheckedInt f : f_values) total += f;
  return total;
}

// Join of k summaries. With nc = n - n_i the value is
// sum F_i + 3 sum nc*M1_i + 6 sum nc^2*m_i + sum n_i*nc^3.
inline CheckedInt f_join(std::span<const GraphSummary> summaries) {
  if (summaries.empty()) throw std::invalid_argument("f_join: empty operand list");
  CheckedInt n = 0;
  for (const GraphSummary& s : summaries) n += s.n;
  CheckedInt total = 0;
  for (const GraphSummary& s : summaries) {
    const CheckedInt nc = n - s.n;
    total += CheckedInt(s.f) + CheckedInt(3) * nc * s.m1 + CheckedInt(6) * square(nc) * s.m +
             CheckedInt(s.n) * cube(nc);
  }
  return total;
}

// Join of p identical copies.
inline CheckedInt f_join_copies(const GraphSummary& s, std::int64_t copies) {
  if (copies < 1) throw std::invalid_argument("f_join_copies: copy count must be >= 1");
  const CheckedInt p = copies, n = s.n, m = s.m, m1 = s.m1, f = s.f;
  return p * f + CheckedInt(3) * n * p * (p - 1) * m1 +
         CheckedInt(6) * square(n) * m * p * square(p - 1) + pow(n, 4) * p * cube(p - 1);
}

// Suspension: join with a single vertex.
inline CheckedInt f_suspension(const GraphSummary& s) {
  const CheckedInt n = s.n, m = s.m;
  return CheckedInt(s.f) + CheckedInt(3) * s.m1 + cube(n) + CheckedInt(6) * m + n;
}

// First Zagreb index of a k-ary Cartesian product:
// n * sum M1_i/n_i + 4n * sum_{i!=j} (m_i/n_i)(m_j/n_j).
inline CheckedInt m1_cartesian(std::span<const GraphSummary> summaries) {
  if (summaries.empty()) throw std::invalid_argument("m1_cartesian: empty operand list");
  detail::require_positive_counts(summaries, "m1_cartesian");
  using detail::Rational;
  Rational n(1);
  for (const GraphSummary& s : summaries) n = n * Rational(s.n);
  Rational m1_terms, edge_pairs;
  for (const GraphSummary& s : summaries) m1_terms = m1_terms + Rational(s.m1, s.n);
  for (const GraphSummary& a : summaries)
    for (const GraphSummary& b : summaries)
      if (&a != &b) edge_pairs = edge_pairs + Rational(a.m, a.n) * Rational(b.m, b.n);
  const Rational total = n * m1_terms + Rational(4) * n * edge_pairs;
  return total.as_integer();
}

// F-index of a k-ary Cartesian product:
// n * sum F_i/n_i + 6n * sum_{i!=j} (M1_i/n_i)(m_j/n_j)
//   + 8n * sum over ordered distinct triples of (m/n) products.
inline CheckedInt f_cartesian(std::span<const GraphSummary> summaries) {
  if (summaries.empty()) throw std::invalid_argument("f_cartesian: empty operand list");
  detail::require_positive_counts(summaries, "f_cartesian");
  using detail::Rational;
  const std::size_t k = summaries.size();
  Rational n(1);
  for (const GraphSummary& s : summaries) n = n * Rational(s.n);
  Rational f_terms;
  for (const GraphSummary& s : summaries) f_terms = f_terms + Rational(s.f, s.n);
  Rational pair_terms;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (i != j)
        pair_terms =
            pair_terms + Rational(summaries[i].m1, summaries[i].n) * Rational(summaries[j].m, summaries[j].n);
  Rational triple_terms;
  for (std::size_t p = 0; p < k; ++p)
    for (std::size_t q = 0; q < k; ++q)
      for (std::size_t r = 0; r < k; ++r)
        if (p != q && q != r && p != r)
          triple_terms = triple_terms + Rational(summaries[p].m, summaries[p].n) *
                                            Rational(summaries[q].m, summaries[q].n) *
                                            Rational(summaries[r].m, summaries[r].n);
  const Rational total =
      n * f_terms + Rational(6) * n * pair_terms + Rational(8) * n * triple_terms;
  return total.as_integer();
}

// Composition G1[G2]; not symmetric in its arguments.
inline CheckedInt f_composition(const GraphSummary& s1, const GraphSummary& s2) {
  const CheckedInt n1 = s1.n, n2 = s2.n;
  return pow(n2, 4) * s1.f + n1 * s2.f + CheckedInt(6) * square(n2) * s2.m * s1.m1 +
         CheckedInt(6) * n2 * s1.m * s2.m1;
}

// Tensor product: F multiplies.
inline CheckedInt f_tensor(CheckedInt f1, CheckedInt f2) { return f1 * f2; }

// Strong product; symmetric in its arguments.
inline CheckedInt f_strong(const GraphSummary& s1, const GraphSummary& s2) {
  const CheckedInt f1 = s1.f, f2 = s2.f, m1 = s1.m, m2 = s2.m, z1 = s1.m1, z2 = s2.m1;
  return CheckedInt(s2.n) * f1 + CheckedInt(s1.n) * f2 + f1 * f2 + CheckedInt(6) * m2 * z1 +
         CheckedInt(6) * m1 * z2 + CheckedInt(6) * m2 * f1 + CheckedInt(6) * m1 * f2 +
         CheckedInt(3) * f2 * z1 + CheckedInt(3) * f1 * z2 + CheckedInt(6) * z1 * z2;
}

// Corona G1 (.) G2; not symmetric.
inline CheckedInt f_corona(const GraphSummary& s1, const GraphSummary& s2) {
  if (s1.n < 1) throw std::invalid_argument("f_corona: first operand needs n >= 1");
  const CheckedInt n1 = s1.n, n2 = s2.n;
  return CheckedInt(s1.f) + n1 * s2.f + CheckedInt(3) * n2 * s1.m1 + CheckedInt(3) * n1 * s2.m1 +
         CheckedInt(6) * square(n2) * s1.m + CheckedInt(6) * n1 * s2.m +
         n1 * n2 * (square(n2) + 1);
}

// t-thorny graph: corona with an edgeless operand of t vertices.
inline CheckedInt f_thorn(const GraphSummary& s, std::int64_t thorns) {
  if (thorns < 1) throw std::invalid_argument("f_thorn: thorn count must be >= 1");
  const CheckedInt t = thorns, n = s.n, m = s.m;
  return CheckedInt(s.f) + CheckedInt(3) * t * s.m1 + CheckedInt(6) * m * square(t) +
         n * cube(t) + n * t;
}

// Generalized hierarchical product. Only F of the second operand enters,
// plus the subset degree sums.
inline CheckedInt f_hierarchical(const GraphSummary& s1, CheckedInt f2,
                                 const HierarchicalExtras& extras) {
  if (extras.u_size < 1) throw std::invalid_argument("f_hierarchical: subset must be nonempty");
  return CheckedInt(extras.u_size) * s1.f + CheckedInt(s1.n) * f2 +
         CheckedInt(3) * s1.m1 * extras.degree_sum +
         CheckedInt(6) * s1.m * extras.degree_square_sum;
}

// Cluster product: hierarchical product with U = {root}.
inline CheckedInt f_cluster(const GraphSummary& s1, const GraphSummary& s2,
                            std::int64_t root_degree) {
  if (root_degree < 0) throw std::invalid_argument("f_cluster: negative root degree");
  const CheckedInt d = root_degree;
  return CheckedInt(s1.f) + CheckedInt(s1.n) * s2.f + CheckedInt(3) * s1.m1 * d +
         CheckedInt(6) * s1.m * square(d);
}

// Disjunction; symmetric. Individual terms exceed the result, so the whole
// expression stays in signed checked arithmetic and the nonnegative final
// value is enforced.
inline CheckedInt f_disjunction(const GraphSummary& s1, const GraphSummary& s2) {
  const CheckedInt n1 = s1.n, n2 = s2.n, f1 = s1.f, f2 = s2.f, m1 = s1.m, m2 = s2.m,
                   z1 = s1.m1, z2 = s2.m1;
  const CheckedInt total = pow(n2, 4) * f1 + pow(n1, 4) * f2 - f1 * f2 +
                           CheckedInt(6) * n1 * square(n2) * m2 * z1 +
                           CheckedInt(6) * square(n1) * n2 * m1 * z2 +
                           CheckedInt(3) * n2 * f1 * z2 + CheckedInt(3) * n1 * f2 * z1 -
                           CheckedInt(6) * square(n2) * m2 * f1 -
                           CheckedInt(6) * square(n1) * m1 * f2 -
                           CheckedInt(6) * n1 * n2 * z1 * z2;
  if (total < CheckedInt(0)) throw std::logic_error("f_disjunction: negative result");
  return total;
}

// Symmetric difference; symmetric, same signed-arithmetic caveat.
inline CheckedInt f_symmetric_difference(const GraphSummary& s1, const GraphSummary& s2) {
  const CheckedInt n1 = s1.n, n2 = s2.n, f1 = s1.f, f2 = s2.f, m1 = s1.m, m2 = s2.m,
                   z1 = s1.m1, z2 = s2.m1;
  const CheckedInt total = pow(n2, 4) * f1 + pow(n1, 4) * f2 - CheckedInt(8) * f1 * f2 +
                           CheckedInt(6) * n1 * square(n2) * m2 * z1 +
                           CheckedInt(6) * square(n1) * n2 * m1 * z2 +
                           CheckedInt(12) * n2 * f1 * z2 + CheckedInt(12) * n1 * f2 * z1 -
                           CheckedInt(12) * square(n2) * m2 * f1 -
                           CheckedInt(12) * square(n1) * m1 * f2 -
                           CheckedInt(12) * n1 * n2 * z1 * z2;
  if (total < CheckedInt(0)) throw std::logic_error("f_symmetric_difference: negative result");
  return total;
}

// Splice at the two roots.
inline CheckedInt f_splice(CheckedInt f1, CheckedInt f2, const RootDegreePair& roots) {
  const CheckedInt d1 = roots.d1, d2 = roots.d2;
  return f1 + f2 + CheckedInt(3) * d1 * d2 * (d1 + d2);
}

// Link at the two roots.
inline CheckedInt f_link(CheckedInt f1, CheckedInt f2, const RootDegreePair& roots) {
  const CheckedInt d1 = roots.d1, d2 = roots.d2;
  return f1 + f2 + CheckedInt(3) * (d1 + d2) + CheckedInt(3) * (square(d1) + square(d2)) +
         CheckedInt(2);
}

// Bottleneck graph of G: the corona of K2 and G, specialized to a closed
// form in G's summary.
inline CheckedInt f_bottleneck(const GraphSummary& s) {
  const CheckedInt n = s.n, m = s.m;
  return CheckedInt(2) * s.f + CheckedInt(6) * s.m1 + CheckedInt(2) * cube(n) +
         CheckedInt(6) * square(n) + CheckedInt(8) * n + CheckedInt(12) * m + CheckedInt(2);
}

namespace detail {

inline std::int64_t formula_param(const FamilySpec& spec, std::size_t index, std::int64_t min,
                                  const char* what) {
  if (index >= spec.params.size())
    throw std::invalid_argument(std::string(what) + ": missing parameter " +
                                std::to_string(index + 1));
  const std::int64_t v = spec.params[index];
  if (v < min)
    throw std::domain_error(std::string(what) + ": closed form needs parameter " +
                            std::to_string(index + 1) + " >= " + std::to_string(min));
  return v;
}

}  // namespace detail

// Closed-form F-index of a named family. Domains are the ones on which the
// closed forms hold, which can be narrower than what make_family builds
// (e.g. fan(1) is a legal graph but lies outside the fan formula's domain).
inline CheckedInt f_family(const FamilySpec& spec) {
  using detail::formula_param;
  switch (spec.family) {
    case Family::path: {
      detail::require_arity(spec, 1, "path");
      const CheckedInt n = formula_param(spec, 0, 2, "path");
      return CheckedInt(8) * n - 14;
    }
    case Family::cycle: {
      detail::require_arity(spec, 1, "cycle");
      return CheckedInt(8) * formula_param(spec, 0, 3, "cycle");
    }
    case Family::complete: {
      detail::require_arity(spec, 1, "complete");
      const CheckedInt n = formula_param(spec, 0, 0, "complete");
      return n * cube(n - 1);
    }
    case Family::empty:
      detail::require_arity(spec, 1, "empty");
      formula_param(spec, 0, 0, "empty");
      return 0;
    case Family::complete_multipartite: {
      if (spec.params.size() < 2)
        throw std::invalid_argument("complete_multipartite: needs >= 2 part sizes");
      CheckedInt total_vertices = 0;
      for (std::size_t i = 0; i < spec.params.size(); ++i)
        total_vertices += formula_param(spec, i, 1, "complete_multipartite");
      CheckedInt total = 0;
      for (const std::int64_t part : spec.params)
        total += CheckedInt(part) * cube(total_vertices - part);
      return total;
    }
    case Family::wheel: {
      detail::require_arity(spec, 1, "wheel");
      const CheckedInt n = formula_param(spec, 0, 3, "wheel");
      return cube(n) + CheckedInt(27) * n;
    }
    case Family::fan: {
      detail::require_arity(spec, 1, "fan");
      const CheckedInt n = formula_param(spec, 0, 2, "fan");
      return cube(n) + CheckedInt(27) * n - 38;
    }
    case Family::windmill: {
      detail::require_arity(spec, 1, "windmill");
      const CheckedInt m = formula_param(spec, 0, 1, "windmill");
      return CheckedInt(8) * cube(m) + CheckedInt(16) * m;
    }
    case Family::cone: {
      detail::require_arity(spec, 2, "cone");
      const CheckedInt m = formula_param(spec, 0, 3, "cone");
      const CheckedInt n = formula_param(spec, 1, 1, "cone");
      return m * cube(n) + cube(m) * n + CheckedInt(6) * m * square(n) + CheckedInt(12) * m * n +
             CheckedInt(8) * m;
    }
    case Family::hypercube: {
      detail::require_arity(spec, 1, "hypercube");
      const std::int64_t k = formula_param(spec, 0, 1, "hypercube");
      return pow(CheckedInt(2), k) * cube(CheckedInt(k));
    }
    case Family::hamming: {
      if (spec.params.empty()) throw std::invalid_argument("hamming: needs >= 1 parameter");
      CheckedInt sum = 0, product = 1;
      for (std::size_t i = 0; i < spec.params.size(); ++i) {
        const CheckedInt ni = formula_param(spec, i, 1, "hamming");
        sum += ni;
        product *= ni;
      }
      const CheckedInt k = static_cast<std::int64_t>(spec.params.size());
      return cube(sum - k) * product;
    }
    case Family::torus: {
      if (spec.params.empty()) throw std::invalid_argument("torus: needs >= 1 parameter");
      CheckedInt product = 1;
      for (std::size_t i = 0; i < spec.params.size(); ++i)
        product *= formula_param(spec, i, 3, "torus");
      const CheckedInt k = static_cast<std::int64_t>(spec.params.size());
      return CheckedInt(8) * cube(k) * product;
    }
    case Family::nanotube_c4: {
      detail::require_arity(spec, 2, "nanotube_c4");
      const CheckedInt n = formula_param(spec, 0, 2, "nanotube_c4");
      const CheckedInt m = formula_param(spec, 1, 3, "nanotube_c4");
      return CheckedInt(64) * m * n - CheckedInt(74) * m;
    }
    case Family::grid: {
      detail::require_arity(spec, 2, "grid");
      const CheckedInt n = formula_param(spec, 0, 2, "grid");
      const CheckedInt m = formula_param(spec, 1, 2, "grid");
      return CheckedInt(64) * m * n - CheckedInt(74) * m - CheckedInt(74) * n + 72;
    }
    case Family::fence: {
      detail::require_arity(spec, 1, "fence");
      return CheckedInt(250) * formula_param(spec, 0, 2, "fence") - 392;
    }
    case Family::closed_fence: {
      detail::require_arity(spec, 1, "closed_fence");
      return CheckedInt(250) * formula_param(spec, 0, 3, "closed_fence");
    }
    case Family::thorny_cycle: {
      detail::require_arity(spec, 2, "thorny_cycle");
      const CheckedInt n = formula_param(spec, 0, 3, "thorny_cycle");
      const CheckedInt t = formula_param(spec, 1, 1, "thorny_cycle");
      return n * cube(t) + CheckedInt(6) * n * square(t) + CheckedInt(13) * n * t +
             CheckedInt(8) * n;
    }
    case Family::thorny_path: {
      detail::require_arity(spec, 2, "thorny_path");
      const CheckedInt n = formula_param(spec, 0, 2, "thorny_path");
      const CheckedInt t = formula_param(spec, 1, 1, "thorny_path");
      return n * cube(t) + CheckedInt(6) * n * square(t) - CheckedInt(6) * square(t) +
             CheckedInt(13) * n * t - CheckedInt(18) * t + CheckedInt(8) * n - 14;
    }
    case Family::bottleneck:
      throw std::invalid_argument("bottleneck: takes a graph summary; use f_bottleneck");
    case Family::bridge_b: {
      detail::require_arity(spec, 1, "bridge_b");
      return CheckedInt(66) * formula_param(spec, 0, 2, "bridge_b") - 74;
    }
    case Family::bridge_t3: {
      detail::require_arity(spec, 1, "bridge_t3");
      return CheckedInt(80) * formula_param(spec, 0, 2, "bridge_t3") - 74;
    }
    case Family::comb: {
      detail::require_arity(spec, 1, "comb");
      const CheckedInt n = formula_param(spec, 0, 2, "comb");
      return CheckedInt(8) * square(n) + CheckedInt(12) * n - 38;
    }
    case Family::sun: {
      detail::require_arity(spec, 2, "sun");
      const CheckedInt m = formula_param(spec, 0, 3, "sun");
      const CheckedInt n = formula_param(spec, 1, 1, "sun");
      return CheckedInt(4) * m * (CheckedInt(2) * n + 5);
    }
  }
  throw std::logic_error("f_family: unknown family");
}

}  // namespace findex
