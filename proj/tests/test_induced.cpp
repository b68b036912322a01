#include <map>

#include "doctest.h"
#include "generators.hpp"
#include "parafock/exact_linalg.hpp"
#include "parafock/gram.hpp"
#include "parafock/gz_action.hpp"
#include "parafock/induced_checks.hpp"

using namespace parafock;
using namespace parafock::induced;

namespace {

BigRational q(long a, long b = 1) { return make_rational(a, b); }

MonomialVector vec(std::initializer_list<std::pair<MonomialState, BigRational>> terms) {
  MonomialVector v;
  for (const auto& [s, c] : terms) v.add(s, c);
  return v;
}

// Oracle through the orthonormal GZ basis: |k,l,theta> is built by applying
// the GZ raising operators to the vacuum, and <a|b> is the Euclidean product
// of the coefficient vectors.
gz::GZVector gz_image(const MonomialState& s, const BigRational& p) {
  auto raise = [&p](int j, const gz::GZVector& v) { return gz::apply_c_unfiltered({j, 1}, v, p); };
  gz::GZVector v(gz::GZPattern{0, 0, 0});
  if (s.theta == 1) {
    gz::GZVector a = raise(1, raise(2, v));
    gz::GZVector b = raise(2, raise(1, v));
    v = a - b;
  }
  for (int i = 0; i < s.l; ++i) v = raise(2, v);
  for (int i = 0; i < s.k; ++i) v = raise(1, v);
  return v;
}

BigRational gz_inner(const MonomialState& a, const MonomialState& b, const BigRational& p) {
  const gz::GZVector va = gz_image(a, p);
  const gz::GZVector vb = gz_image(b, p);
  RadicalScalar sum;
  for (const auto& [mu, c] : va) sum += c * vb.coefficient(mu);
  return sum.to_rational();
}

}  // namespace

TEST_CASE("raising action examples") {
  const BigRational p = q(5, 2);
  for (const auto& s : states_up_to_level(5)) {
    CHECK(apply_generator({1, 1}, MonomialVector(s), p) == MonomialVector({s.k + 1, s.l, s.theta}));
  }
  // c2+|k,l,0> = |k,l+1,0> - (-1)^l k |k-1,l,1>
  for (int k = 0; k <= 3; ++k) {
    for (int l = 0; l <= 3; ++l) {
      MonomialVector expect({k, l + 1, 0});
      if (k > 0) expect.add({k - 1, l, 1}, BigRational(l % 2 == 0 ? -k : k));
      CHECK(apply_generator({2, 1}, MonomialVector({k, l, 0}), p) == expect);
    }
  }
}

TEST_CASE("lowering action examples") {
  const BigRational p = q(7, 3);
  CHECK(apply_generator({1, -1}, MonomialVector({1, 0, 0}), p) == MonomialVector({0, 0, 0}, p));
  CHECK(apply_generator({2, -1}, MonomialVector({0, 0, 0}), p).empty());
  CHECK(apply_generator({1, -1}, MonomialVector({0, 0, 0}), p).empty());
  // c1- |k,0,0> = k (p - k + 1) |k-1,0,0>
  CHECK(apply_generator({1, -1}, MonomialVector({3, 0, 0}), p) == MonomialVector({2, 0, 0}, 3 * (p - 2)));
  CHECK_THROWS_AS(apply_generator({1, 1}, MonomialVector({0, 0, 0}), BigRational(0)), std::invalid_argument);
}

TEST_CASE("norm examples") {
  for (int pi = 1; pi <= 6; ++pi) {
    const BigRational p(pi);
    CHECK(norm_squared_closed({1, 1, 0}, p) == p * p);
    CHECK(norm_squared_closed({0, 0, 1}, p) == 4 * p);
    CHECK(norm_squared_closed({0, 0, 0}, p) == 1);
    CHECK(inner_product_oracle({1, 1, 0}, MonomialVector({0, 0, 1}), p) == 2 * p);
  }
  CHECK(norm_squared_closed({2, 1, 0}, q(3)) == 36);
  CHECK(inner_product_oracle({2, 1, 0}, MonomialVector({2, 1, 0}), q(3)) == 36);
}

TEST_CASE("weight orthogonality") {
  const BigRational p = q(3, 2);
  const auto states = states_up_to_level(4);
  for (const auto& a : states)
    for (const auto& b : states)
      if (!(weight(a, p) == weight(b, p))) CHECK(inner_product_oracle(a, MonomialVector(b), p) == 0);
}

TEST_CASE("closed-form norms agree with the lowering oracle, rational p") {
  testgen::Source gen(11);
  for (int trial = 0; trial < 12; ++trial) {
    const BigRational p = gen.positive_rational(40, 7);
    CAPTURE(p.get_str());
    for (const auto& s : states_up_to_level(6)) CHECK(norm_squared_closed(s, p) == inner_product_oracle(s, MonomialVector(s), p));
  }
}

TEST_CASE("GZ-basis realization reproduces every Gram entry") {
  // Integer p and a rational p large enough that all raises stay real.
  for (const BigRational& p : {q(1), q(2), q(3), q(5), q(17, 2)}) {
    CAPTURE(p.get_str());
    for (int level = 0; level <= 5; ++level) {
      for (int a = 0; a <= level; ++a) {
        const auto states = states_of_weight(a, level - a);
        for (const auto& s : states)
          for (const auto& t : states) CHECK(gz_inner(s, t, p) == inner_product_oracle(s, MonomialVector(t), p));
      }
    }
  }
}

TEST_CASE("Gram matrix examples") {
  const BigRational p = q(5, 3);
  const auto g = gram_matrix(Weight11::from_offsets(1, 1, p), p);
  REQUIRE(g.states.size() == 2);
  CHECK(g.states[0] == MonomialState{1, 1, 0});
  CHECK(g.states[1] == MonomialState{0, 0, 1});
  CHECK(g.entries == linalg::RationalMatrix{{p * p, 2 * p}, {2 * p, 4 * p}});

  const auto vac = gram_matrix(Weight11::from_offsets(0, 0, p), p);
  CHECK(vac.entries == linalg::RationalMatrix{{BigRational(1)}});

  // Offsets (2|2) at p = 2: two states, rank 1, one null vector.
  const auto g2 = gram_rank_and_null(Weight11::from_offsets(2, 2, q(2)), q(2));
  REQUIRE(g2.gram.states.size() == 2);
  CHECK(g2.gram.states[0] == MonomialState{2, 2, 0});
  CHECK(g2.gram.states[1] == MonomialState{1, 1, 1});
  CHECK(g2.gram.entries == linalg::RationalMatrix{{BigRational(16), BigRational(-16)}, {BigRational(-16), BigRational(16)}});
  CHECK(g2.rank == 1);
  REQUIRE(g2.null_vectors.size() == 1);
  CHECK(g2.null_vectors[0] == vec({{{2, 2, 0}, q(1)}, {{1, 1, 1}, q(1)}}));

  CHECK_THROWS_AS(gram_matrix(Weight11{q(1, 3), q(1, 2)}, q(1)), std::invalid_argument);
}

TEST_CASE("level-2 determinant is 4p^2(p-1)") {
  for (int pi = 1; pi <= 6; ++pi) {
    const BigRational p(pi);
    CHECK(linalg::determinant(gram_matrix(Weight11::from_offsets(1, 1, p), p).entries) == 4 * p * p * (p - 1));
  }
  const BigRational p = q(7, 5);
  CHECK(linalg::determinant(gram_matrix(Weight11::from_offsets(1, 1, p), p).entries) == 4 * p * p * (p - 1));
}

TEST_CASE("rank and null vectors") {
  const auto p1 = gram_rank_and_null(Weight11::from_offsets(1, 1, q(1)), q(1));
  CHECK(p1.rank == 1);
  REQUIRE(p1.null_vectors.size() == 1);
  CHECK(p1.null_vectors[0] == vec({{{1, 1, 0}, q(2)}, {{0, 0, 1}, q(-1)}}));
  CHECK(to_string(p1.null_vectors[0]) == "2|1,1,0> - |0,0,1>");

  const auto p2 = gram_rank_and_null(Weight11::from_offsets(1, 1, q(2)), q(2));
  CHECK(p2.rank == 2);
  CHECK(p2.null_vectors.empty());

  const auto vac = gram_rank_and_null(Weight11::from_offsets(0, 0, q(1)), q(1));
  CHECK(vac.rank == 1);
  CHECK(vac.null_vectors.empty());
}

TEST_CASE("null vectors generate zero-norm states") {
  for (int pi = 1; pi <= 3; ++pi) {
    const BigRational p(pi);
    for (int level = 0; level <= 6; ++level) {
      for (int a = 0; a <= level; ++a) {
        const auto an = gram_rank_and_null(Weight11::from_offsets(a, level - a, p), p);
        for (const auto& v : an.null_vectors) {
          // <s|v> = 0 for every state of the weight
          for (const auto& s : an.gram.states) CHECK(inner_product_oracle(s, v, p) == 0);
        }
      }
    }
  }
}

TEST_CASE("module sweeps: adjointness, triple relations, cartan") {
  for (int pi = 1; pi <= 5; ++pi) {
    const BigRational p(pi);
    CHECK(check_norms(p, 8).ok());
    CHECK(check_adjointness(p, 8).ok());
    CHECK(check_cartan(p, 8).ok());
  }
  for (const BigRational& p : {q(1), q(2), q(3), q(4), q(5), q(7, 3)}) {
    const auto report = check_triple_relations(p, 6);
    CHECK(report.ok());
    CHECK(report.checked == states_up_to_level(6).size() * 64);
  }
}

TEST_CASE("positivity boundary and Gram rank against GZ count") {
  for (int p = 1; p <= 5; ++p) CHECK(check_positivity_boundary(p, 6).ok());
  for (int p = 1; p <= 3; ++p) CHECK(check_gram_rank_vs_gz(p, 6).ok());
}

TEST_CASE("Gram matrices are positive semidefinite for integer p") {
  // Leading principal minors of a PSD matrix are >= 0.
  for (int pi = 1; pi <= 4; ++pi) {
    const BigRational p(pi);
    for (int level = 0; level <= 6; ++level) {
      for (int a = 0; a <= level; ++a) {
        const auto g = gram_matrix(Weight11::from_offsets(a, level - a, p), p);
        for (std::size_t size = 1; size <= g.entries.size(); ++size) {
          linalg::RationalMatrix minor;
          for (std::size_t i = 0; i < size; ++i) minor.emplace_back(g.entries[i].begin(), g.entries[i].begin() + static_cast<long>(size));
          CHECK(sgn(linalg::determinant(minor)) >= 0);
        }
      }
    }
  }
}

TEST_CASE("exact linear algebra") {
  const linalg::RationalMatrix a{{q(2), q(1), q(1)}, {q(4), q(3), q(3)}, {q(8), q(7), q(9)}};
  CHECK(linalg::determinant(a) == 4);
  CHECK(linalg::rank(a) == 3);
  const linalg::RationalMatrix singular{{q(1, 2), q(1)}, {q(1), q(2)}};
  CHECK(linalg::rank(singular) == 1);
  CHECK(linalg::determinant(singular) == 0);
  const auto kernel = linalg::null_space(singular);
  REQUIRE(kernel.size() == 1);
  CHECK(kernel[0] == linalg::IntegerVector{BigInt(2), BigInt(-1)});
  CHECK_THROWS_AS(linalg::determinant({{q(1), q(2)}}), std::invalid_argument);

  const linalg::RowSpace span({{q(1), q(0), q(1)}, {q(0), q(1), q(1)}, {q(1), q(1), q(2)}});
  CHECK(span.dimension() == 2);
  CHECK(span.contains({q(3), q(-1), q(2)}));
  CHECK_FALSE(span.contains({q(0), q(0), q(1)}));
}

TEST_CASE("Bareiss rank matches a floating-point elimination on random matrices") {
  testgen::Source gen(12);
  for (int trial = 0; trial < 200; ++trial) {
    const auto rows = static_cast<std::size_t>(gen.integer(1, 5));
    const auto cols = static_cast<std::size_t>(gen.integer(1, 5));
    linalg::RationalMatrix a(rows, std::vector<BigRational>(cols));
    // Low-rank structure: rows are small combinations of two seeds.
    std::vector<BigRational> u(cols), w(cols);
    for (auto& x : u) x = gen.rational(5, 3);
    for (auto& x : w) x = gen.rational(5, 3);
    for (auto& row : a) {
      const BigRational s = gen.integer(-2, 2), t = gen.integer(-2, 2);
      for (std::size_t c = 0; c < cols; ++c) row[c] = s * u[c] + t * w[c];
    }
    // Partial-pivot elimination in double.
    std::vector<std::vector<double>> f(rows, std::vector<double>(cols));
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t c = 0; c < cols; ++c) f[i][c] = a[i][c].get_d();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
      std::size_t best = r;
      for (std::size_t i = r; i < rows; ++i)
        if (std::abs(f[i][c]) > std::abs(f[best][c])) best = i;
      if (std::abs(f[best][c]) < 1e-9) continue;
      std::swap(f[best], f[r]);
      for (std::size_t i = r + 1; i < rows; ++i) {
        const double factor = f[i][c] / f[r][c];
        for (std::size_t k = c; k < cols; ++k) f[i][k] -= factor * f[r][k];
      }
      ++r;
    }
    CHECK(linalg::rank(a) == r);
    for (const auto& v : linalg::null_space(a)) {
      for (const auto& row : a) {
        BigRational dot(0);
        for (std::size_t c = 0; c < cols; ++c) dot += row[c] * v[c];
        CHECK(dot == 0);
      }
    }
  }
}
