#include <cmath>
#include <map>

#include "doctest.h"
#include "generators.hpp"
#include "parafock/character.hpp"
#include "parafock/gz_general.hpp"
#include "parafock/schur.hpp"

using namespace parafock;
using namespace parafock::characters;

namespace {

BigRational q(long a, long b = 1) { return make_rational(a, b); }

double evaluate(const Polynomial& poly, const std::vector<double>& point) {
  double sum = 0;
  for (const auto& [e, c] : poly.terms()) {
    double term = static_cast<double>(c);
    for (std::size_t i = 0; i < e.size(); ++i) term *= std::pow(point[i], e[i]);
    sum += term;
  }
  return sum;
}

double det(std::vector<std::vector<double>> a) {
  const std::size_t n = a.size();
  double d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t best = c;
    for (std::size_t i = c; i < n; ++i)
      if (std::abs(a[i][c]) > std::abs(a[best][c])) best = i;
    if (a[best][c] == 0) return 0;
    if (best != c) {
      std::swap(a[best], a[c]);
      d = -d;
    }
    d *= a[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      const double f = a[i][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[i][k] -= f * a[c][k];
    }
  }
  return d;
}

// Bialternant a_{lambda+delta} / a_delta at distinct points.
double schur_bialternant(const Partition& lambda, const std::vector<double>& x) {
  const std::size_t k = x.size();
  std::vector<std::vector<double>> num(k, std::vector<double>(k)), den(k, std::vector<double>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const int shift = static_cast<int>(k - 1 - j);
      num[i][j] = std::pow(x[i], lambda.part(static_cast<int>(j) + 1) + shift);
      den[i][j] = std::pow(x[i], shift);
    }
  }
  return det(num) / det(den);
}

}  // namespace

TEST_CASE("conjugate and hook condition") {
  CHECK(conjugate(Partition({3, 1})) == Partition({2, 1, 1}));
  CHECK(conjugate(Partition()) == Partition());
  CHECK(conjugate(Partition({2, 2})) == Partition({2, 2}));
  CHECK(hook_ok(Partition({5}), 1, 1));
  CHECK_FALSE(hook_ok(Partition({2, 2}), 1, 1));
  CHECK(hook_ok(Partition({3, 1, 1}), 1, 1));
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK(to_string(Partition({3, 1})) == "(3,1)");
  CHECK(to_string(Partition()) == "()");
}

TEST_CASE("partition counts and conjugation is an involution") {
  const std::vector<std::size_t> p_of_n{1, 1, 2, 3, 5, 7, 11, 15, 22};
  for (int n = 0; n <= 8; ++n) {
    const auto parts = partitions_of(n);
    CHECK(parts.size() == p_of_n[static_cast<std::size_t>(n)]);
    for (const auto& lambda : parts) {
      CHECK(lambda.size() == n);
      CHECK(conjugate(conjugate(lambda)) == lambda);
    }
  }
}

TEST_CASE("ordinary Schur polynomials match the bialternant formula") {
  testgen::Source gen(31);
  for (int k = 1; k <= 3; ++k) {
    for (const auto& lambda : partitions_up_to(5)) {
      if (lambda.length() > k) {
        CHECK(schur(lambda, k).is_zero());
        continue;
      }
      std::vector<double> x;
      for (int i = 0; i < k; ++i) x.push_back(0.3 + 0.4 * i + 0.01 * static_cast<double>(gen.integer(0, 9)));
      CHECK(evaluate(schur(lambda, k), x) == doctest::Approx(schur_bialternant(lambda, x)).epsilon(1e-9));
    }
  }
}

TEST_CASE("super-Schur examples") {
  CHECK(super_schur(Partition({1}), 1, 1) == Polynomial::monomial({1, 0}) + Polynomial::monomial({0, 1}));
  CHECK(super_schur(Partition({1, 1}), 1, 1) == Polynomial::monomial({1, 1}) + Polynomial::monomial({0, 2}));
  // x^2 + xy: a row of two y's is not semistandard, and the skew sum agrees.
  CHECK(super_schur(Partition({2}), 1, 1).evaluate_at_ones() == 2);
  CHECK(super_schur(Partition({2, 2}), 1, 1).is_zero());
}

TEST_CASE("(1|1) hooks: s_(a,1^b)(x|y) = x^(a-1) y^b (x + y)") {
  for (int a = 1; a <= 5; ++a) {
    for (int b = 0; a + b <= 7; ++b) {
      std::vector<int> parts{a};
      parts.insert(parts.end(), static_cast<std::size_t>(b), 1);
      const Polynomial expect = Polynomial::monomial({a, b}) + Polynomial::monomial({a - 1, b + 1});
      CHECK(super_schur(Partition(parts), 1, 1) == expect);
    }
  }
}

TEST_CASE("tableaux and skew sum agree for hook partitions up to size 6") {
  for (auto [m, n] : {std::pair{1, 1}, {2, 1}, {2, 2}}) {
    for (const auto& lambda : hook_partitions_up_to(6, m, n)) {
      CAPTURE(to_string(lambda));
      CHECK(super_schur_tableaux(lambda, m, n) == super_schur_skew_sum(lambda, m, n));
    }
  }
}

TEST_CASE("super-Schur functions are symmetric in x and in y") {
  for (const auto& lambda : hook_partitions_up_to(5, 2, 2)) {
    const Polynomial s = super_schur(lambda, 2, 2);
    for (const auto& [e, c] : s.terms()) {
      CHECK(s.coefficient({e[1], e[0], e[2], e[3]}) == c);
      CHECK(s.coefficient({e[0], e[1], e[3], e[2]}) == c);
    }
  }
}

TEST_CASE("character series examples") {
  const auto s11 = character_series(1, 1, q(3, 2), 2);
  const std::map<Exponents, std::int64_t> expect{{{0, 0}, 1}, {{1, 0}, 1}, {{0, 1}, 1},
                                                 {{2, 0}, 1}, {{1, 1}, 2}, {{0, 2}, 1}};
  CHECK(s11.terms == expect);
  CHECK(s11.prefactor() == "(-3/4|3/4)");
  CHECK(character_series(1, 1, q(1), 0).terms == std::map<Exponents, std::int64_t>{{{0, 0}, 1}});
  CHECK(character_series(2, 2, q(1), 2).multiplicity({1, 0, 1, 0}) == 2);
}

TEST_CASE("character equals the PBW count") {
  for (auto [m, n] : {std::pair{1, 1}, {2, 1}, {1, 2}, {2, 2}}) {
    const int degree = m + n <= 3 ? 8 : 6;
    CHECK(character_series(m, n, q(2), degree) == pbw_multiplicities(m, n, q(2), degree));
  }
  CHECK(pbw_multiplicities(2, 2, q(1), 0).terms.size() == 1);
}

TEST_CASE("character matches the product formula numerically") {
  const std::vector<double> point{0.11, 0.07, 0.09};  // x1, x2, y1
  const auto series = character_series(2, 1, q(1), 14).as_polynomial();
  const double x1 = point[0], x2 = point[1], y1 = point[2];
  const double product = (1 + x1 * y1) * (1 + x2 * y1) / ((1 - x1) * (1 - x2) * (1 - x1 * x2) * (1 - y1));
  CHECK(evaluate(series, point) == doctest::Approx(product).epsilon(1e-10));
}

TEST_CASE("Cummins-King identity") {
  CHECK(king_identity_check(1, 1, 6).status);
  CHECK(king_identity_check(2, 1, 5).status);
  const auto trivial = king_identity_check(1, 1, 0);
  CHECK(trivial.status);
  CHECK(trivial.mismatched_terms == 0);
  CHECK(character_product(1, 1, 0) == Polynomial::one(2));
}

TEST_CASE("highest weights from partitions") {
  CHECK(to_string(hw_from_partition(Partition({3, 1}), 1, 1)) == "[3|1]");
  CHECK(to_string(hw_from_partition(Partition({1}), 1, 1)) == "[1|0]");
  CHECK(to_string(hw_from_partition(Partition({2, 2, 1}), 2, 2)) == "[2,2|1,0]");
  CHECK_THROWS_AS(hw_from_partition(Partition({2, 2}), 1, 1), std::invalid_argument);
  for (auto [m, n] : {std::pair{1, 1}, {2, 1}, {1, 2}, {2, 2}})
    for (const auto& lambda : hook_partitions_up_to(7, m, n)) CHECK(partition_from_hw(hw_from_partition(lambda, m, n)) == lambda);
}

TEST_CASE("general GZ enumeration") {
  CHECK(enumerate_gz_general({{1}, {0}}, 1, 1).count == 2);
  CHECK(enumerate_gz_general({{0}, {0}}, 1, 1).count == 1);
  const auto hw21 = hw_from_partition(Partition({2, 1}), 1, 1);
  CHECK(to_string(hw21) == "[2|1]");
  CHECK(static_cast<std::int64_t>(enumerate_gz_general(hw21, 1, 1).count) ==
        super_schur(Partition({2, 1}), 1, 1).evaluate_at_ones());
  CHECK_THROWS_AS(enumerate_gz_general({{0}, {1}}, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_gz_general({{1, 0}, {0}}, 1, 1), std::invalid_argument);
  for (const auto& pattern : enumerate_gz_general(hw21, 1, 1).patterns) CHECK(pattern.rows[1] == std::vector<int>{2, 1});
}

TEST_CASE("GZ counts equal super-Schur dimensions") {
  for (auto [m, n] : {std::pair{1, 1}, {2, 1}, {1, 2}, {2, 2}}) {
    for (const auto& lambda : hook_partitions_up_to(m + n <= 3 ? 6 : 5, m, n)) {
      CAPTURE(to_string(lambda));
      const auto count = enumerate_gz_general(hw_from_partition(lambda, m, n), m, n).count;
      CHECK(static_cast<std::int64_t>(count) == super_schur(lambda, m, n).evaluate_at_ones());
    }
  }
}

TEST_CASE("GZ patterns have the weights of the super-Schur monomials") {
  // Weight of a pattern: x_i exponent = row-sum difference at the even levels,
  // y_j at the odd levels. Compared as a histogram against s_lambda.
  for (auto [m, n] : {std::pair{1, 1}, {2, 1}, {2, 2}}) {
    for (const auto& lambda : hook_partitions_up_to(4, m, n)) {
      const auto gz = enumerate_gz_general(hw_from_partition(lambda, m, n), m, n);
      Polynomial histogram(m + n);
      for (const auto& pattern : gz.patterns) {
        Exponents e;
        int previous = 0;
        for (const auto& row : pattern.rows) {
          int sum = 0;
          for (int x : row) sum += x;
          e.push_back(sum - previous);
          previous = sum;
        }
        histogram.add(e, 1);
      }
      CAPTURE(to_string(lambda));
      CHECK(histogram == super_schur(lambda, m, n));
    }
  }
}

TEST_CASE("branching is exact and multiplicity-free") {
  for (auto [m, n] : {std::pair{1, 1}, {2, 1}, {1, 2}, {2, 2}}) {
    const int degree = 5;
    const auto report = decompose_branching(character_series(m, n, q(1), degree));
    CHECK(report.exact);
    CHECK(report.multiplicity_free);
    std::vector<Partition> seen;
    for (const auto& t : report.terms) {
      CHECK(t.highest_weight == hw_from_partition(t.lambda, m, n));
      CHECK(t.dimension == super_schur(t.lambda, m, n).evaluate_at_ones());
      seen.push_back(t.lambda);
    }
    CHECK(seen.size() == hook_partitions_up_to(degree, m, n).size());
  }
}
