#include "parafock/defining_rep.hpp"

#include <stdexcept>

#include "parafock/exact_linalg.hpp"

namespace parafock::defrep {

namespace {

const RadicalScalar& sqrt2() {
  static const RadicalScalar value = RadicalScalar::sqrt_of(2);
  return value;
}

}  // namespace

const SuperMatrix& GeneratorSet::get(const Generator& g) const {
  if (g.index < 1 || g.index > count()) throw std::out_of_range("generator index " + std::to_string(g.index));
  const auto i = static_cast<std::size_t>(g.index - 1);
  return g.sign > 0 ? c_plus[i] : c_minus[i];
}

GeneratorSet build_generators(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("build_generators needs m >= 1 and n >= 1");
  GeneratorSet g{m, n, {}, {}};
  const int mid = 2 * m + 1;
  auto e = [&](int i, int j) { return SuperMatrix::unit(m, n, i, j); };
  for (int j = 1; j <= m; ++j) {
    g.c_plus.push_back(sqrt2() * (e(j, mid) - e(mid, j + m)));
    g.c_minus.push_back(sqrt2() * (e(mid, j) - e(j + m, mid)));
  }
  for (int j = 1; j <= n; ++j) {
    g.c_plus.push_back(sqrt2() * (e(mid, mid + n + j) + e(mid + j, mid)));
    g.c_minus.push_back(sqrt2() * (e(mid, mid + j) - e(mid + n + j, mid)));
  }
  return g;
}

SuperMatrix cartan(int m, int n, int i) {
  SuperMatrix h(m, n);
  if (i >= 1 && i <= m) {
    h.at(i, i) = RadicalScalar(1);
    h.at(i + m, i + m) = RadicalScalar(-1);
  } else if (i > m && i <= m + n) {
    const int j = i - m;
    h.at(2 * m + 1 + j, 2 * m + 1 + j) = RadicalScalar(1);
    h.at(2 * m + 1 + n + j, 2 * m + 1 + n + j) = RadicalScalar(-1);
  } else {
    throw std::out_of_range("cartan index " + std::to_string(i));
  }
  return h;
}

std::vector<TripleViolation> verify_triple_relations(const GeneratorSet& g) {
  std::vector<TripleViolation> violations;
  for (const auto& t : all_triples(g.count())) {
    const GradedMatrix a = g.graded({t.j, t.xi});
    const GradedMatrix b = g.graded({t.k, t.eta});
    const GradedMatrix c = g.graded({t.l, t.eps});
    SuperMatrix defect = super_bracket(super_bracket(a, b), c).matrix;

    const int eps_power = g.degree(t.l) == 1 ? t.eps : 1;
    if (t.j == t.l && t.eps == -t.xi) {
      const int sign = g.degree(t.k) * g.degree(t.l) == 0 ? 1 : -1;
      defect -= RadicalScalar(-2 * eps_power * sign) * b.matrix;
    }
    if (t.k == t.l && t.eps == -t.eta) defect -= RadicalScalar(2 * eps_power) * a.matrix;

    if (int nz = defect.nonzero_count(); nz != 0) violations.push_back({t, nz});
  }
  return violations;
}

std::string to_string(const TripleViolation& v) {
  return to_string(v.triple) + ": LHS-RHS has " + std::to_string(v.nonzero_entries) + " nonzero entries";
}

std::vector<GradedMatrix> build_umn_basis(const GeneratorSet& g) {
  std::vector<GradedMatrix> basis;
  const int r = g.count();
  for (int j = 1; j <= r; ++j) {
    for (int k = 1; k <= r; ++k) {
      GradedMatrix e = super_bracket(g.graded({j, 1}), g.graded({k, -1}));
      e.matrix *= RadicalScalar(make_rational(1, 2));
      basis.push_back(std::move(e));
    }
  }
  return basis;
}

std::vector<std::array<int, 4>> verify_gl_relations(const GeneratorSet& g, const std::vector<GradedMatrix>& basis) {
  const int r = g.count();
  auto at = [&](int i, int j) -> const GradedMatrix& { return basis[static_cast<std::size_t>((i - 1) * r + (j - 1))]; };
  std::vector<std::array<int, 4>> failures;
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= r; ++j)
      for (int k = 1; k <= r; ++k)
        for (int l = 1; l <= r; ++l) {
          SuperMatrix lhs = super_bracket(at(i, j), at(k, l)).matrix;
          SuperMatrix rhs(g.m, g.n);
          if (j == k) rhs += at(i, l).matrix;
          if (l == i) {
            const int deg_ij = (g.degree(i) + g.degree(j)) % 2;
            const int deg_kl = (g.degree(k) + g.degree(l)) % 2;
            if (deg_ij * deg_kl == 1) {
              rhs += at(k, j).matrix;
            } else {
              rhs -= at(k, j).matrix;
            }
          }
          if (!(lhs == rhs)) failures.push_back({i, j, k, l});
        }
  return failures;
}

std::vector<std::pair<int, Generator>> verify_weights(const GeneratorSet& g) {
  std::vector<std::pair<int, Generator>> failures;
  for (int i = 1; i <= g.count(); ++i) {
    const GradedMatrix h{cartan(g.m, g.n, i), 0};
    for (const auto& gen : all_generators(g.count())) {
      SuperMatrix lhs = super_bracket(h, g.graded(gen)).matrix;
      SuperMatrix rhs = g.get(gen) * RadicalScalar(i == gen.index ? gen.sign : 0);
      if (!(lhs == rhs)) failures.emplace_back(i, gen);
    }
  }
  return failures;
}

namespace {

// Entries of the closure basis are rational once c_l^eps is rescaled by 1/sqrt2.
std::vector<BigRational> flatten_rational(const SuperMatrix& a) {
  std::vector<BigRational> out;
  out.reserve(static_cast<std::size_t>(a.dimension() * a.dimension()));
  for (int i = 1; i <= a.dimension(); ++i)
    for (int j = 1; j <= a.dimension(); ++j) out.push_back(a.at(i, j).to_rational());
  return out;
}

}  // namespace

int verify_even_closure(const GeneratorSet& g, int* span_dimension) {
  std::vector<GradedMatrix> basis;
  const RadicalScalar inv_sqrt2 = sqrt2().reciprocal();
  for (int i = 1; i <= g.m; ++i)
    for (int k = 1; k <= g.m; ++k)
      for (int xi : {1, -1})
        for (int eta : {1, -1}) basis.push_back(super_bracket(g.graded({i, xi}), g.graded({k, eta})));
  for (int l = 1; l <= g.m; ++l)
    for (int eps : {1, -1}) basis.push_back({g.get({l, eps}) * inv_sqrt2, 0});
  for (int j = g.m + 1; j <= g.count(); ++j)
    for (int s = g.m + 1; s <= g.count(); ++s)
      for (int xi : {1, -1})
        for (int eta : {1, -1}) basis.push_back(super_bracket(g.graded({j, xi}), g.graded({s, eta})));

  linalg::RationalMatrix rows;
  for (const auto& b : basis) rows.push_back(flatten_rational(b.matrix));
  const linalg::RowSpace span(rows);
  if (span_dimension) *span_dimension = static_cast<int>(span.dimension());

  int escapes = 0;
  for (const auto& x : basis) {
    for (const auto& y : basis) {
      if (!span.contains(flatten_rational(super_bracket(x, y).matrix))) ++escapes;
    }
  }
  return escapes;
}

}  // namespace parafock::defrep
