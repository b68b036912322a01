#pragma once

// Operator words, super brackets and the parastatistics triple relations for
// any module whose generator action is given by a callable
//   Vector apply(const Generator&, const Vector&).

#include <span>
#include <vector>

#include "parafock/generator.hpp"
#include "parafock/rational.hpp"

namespace parafock {

// Applies g_1 g_2 ... g_n to v, rightmost generator first.
template <class Vector, class Apply>
Vector apply_word(std::span<const Generator> word, Vector v, Apply&& apply) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) v = apply(*it, v);
  return v;
}

// [[a, b]] v = a b v - (-1)^{deg a deg b} b a v
template <class Vector, class Apply>
Vector super_bracket_action(const Generator& a, const Generator& b, int m, const Vector& v, Apply&& apply) {
  int sign = (grading(a.index, m) * grading(b.index, m)) % 2 == 0 ? 1 : -1;
  Vector ab = apply(a, apply(b, v));
  Vector ba = apply(b, apply(a, v));
  ba *= BigRational(sign);
  return ab - ba;
}

// [[ [[c_j^xi, c_k^eta]], c_l^eps ]] v minus the right-hand side
//   -2 d_jl d_{eps,-xi} eps^<l> (-1)^{<k><l>} c_k^eta v + 2 eps^<l> d_kl d_{eps,-eta} c_j^xi v.
// The relation holds on v iff the result is zero.
template <class Vector, class Apply>
Vector triple_relation_defect(const TripleIndex& t, int m, const Vector& v, Apply&& apply) {
  const Generator a{t.j, t.xi};
  const Generator b{t.k, t.eta};
  const Generator c{t.l, t.eps};
  const int deg_ab = (grading(t.j, m) + grading(t.k, m)) % 2;
  const int deg_c = grading(t.l, m);
  const int outer_sign = deg_ab * deg_c == 0 ? 1 : -1;

  auto inner = [&](const Vector& w) { return super_bracket_action(a, b, m, w, apply); };
  Vector lhs = inner(apply(c, v));
  Vector second = apply(c, inner(v));
  second *= BigRational(outer_sign);
  lhs -= second;

  const int eps_power = deg_c == 1 ? t.eps : 1;
  if (t.j == t.l && t.eps == -t.xi) {
    Vector term = apply(b, v);
    int sign = grading(t.k, m) * deg_c == 0 ? 1 : -1;
    term *= BigRational(-2 * eps_power * sign);
    lhs -= term;
  }
  if (t.k == t.l && t.eps == -t.eta) {
    Vector term = apply(a, v);
    term *= BigRational(2 * eps_power);
    lhs -= term;
  }
  return lhs;
}

}  // namespace parafock
