#include "parafock/character.hpp"

#include <functional>
#include <stdexcept>

#include "parafock/schur.hpp"

namespace parafock::characters {

namespace {

Exponents unit(int variables, std::initializer_list<int> positions) {
  Exponents e(static_cast<std::size_t>(variables), 0);
  for (int i : positions) ++e[static_cast<std::size_t>(i)];
  return e;
}

// 1 + u + u^2 + ... up to total degree `degree`.
Polynomial geometric(const Exponents& u, int degree) {
  const int variables = static_cast<int>(u.size());
  Polynomial out(variables);
  const int step = total_degree(u);
  Exponents power(u.size(), 0);
  for (int d = 0; d <= degree; d += step) {
    out.add(power, 1);
    for (std::size_t i = 0; i < u.size(); ++i) power[i] += u[i];
  }
  return out;
}

WeightSeries to_series(const Polynomial& poly, int m, int n, const BigRational& p, int degree) {
  WeightSeries s{m, n, degree, p, {}};
  for (const auto& [e, c] : poly.terms()) s.terms.emplace(e, c);
  return s;
}

}  // namespace

std::string WeightSeries::prefactor() const {
  const std::string half = BigRational(-p / 2).get_str();
  const std::string pos = BigRational(p / 2).get_str();
  std::string out = "(";
  for (int i = 0; i < m; ++i) out += (i ? "," : "") + half;
  out += "|";
  for (int j = 0; j < n; ++j) out += (j ? "," : "") + pos;
  return out + ")";
}

std::int64_t WeightSeries::multiplicity(const Exponents& offset) const {
  auto it = terms.find(offset);
  return it == terms.end() ? 0 : it->second;
}

Polynomial WeightSeries::as_polynomial() const {
  Polynomial out(m + n);
  for (const auto& [e, c] : terms) out.add(e, c);
  return out;
}

Polynomial character_product(int m, int n, int degree) {
  if (m < 1 || n < 1 || degree < 0) throw std::invalid_argument("character needs m, n >= 1 and degree >= 0");
  const int r = m + n;
  Polynomial result = Polynomial::one(r);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      Polynomial factor = Polynomial::one(r);
      factor.add(unit(r, {i, m + j}), 1);
      result = result.multiply(factor, degree);
    }
  }
  for (int i = 0; i < m; ++i) result = result.multiply(geometric(unit(r, {i}), degree), degree);
  for (int i = 0; i < m; ++i)
    for (int k = i + 1; k < m; ++k) result = result.multiply(geometric(unit(r, {i, k}), degree), degree);
  for (int j = 0; j < n; ++j) result = result.multiply(geometric(unit(r, {m + j}), degree), degree);
  for (int j = 0; j < n; ++j)
    for (int l = j + 1; l < n; ++l)
      result = result.multiply(geometric(unit(r, {m + j, m + l}), degree), degree);
  return result;
}

WeightSeries character_series(int m, int n, const BigRational& p, int degree) {
  return to_series(character_product(m, n, degree), m, n, p, degree);
}

WeightSeries pbw_multiplicities(int m, int n, const BigRational& p, int degree) {
  if (m < 1 || n < 1 || degree < 0) throw std::invalid_argument("PBW enumeration needs m, n >= 1 and degree >= 0");
  const int r = m + n;
  struct Factor {
    Exponents weight;
    int max_power;  // -1 for unbounded
  };
  std::vector<Factor> factors;
  for (int i = 0; i < r; ++i) factors.push_back({unit(r, {i}), -1});
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < r; ++j) {
      const bool mixed = (i < m) != (j < m);
      factors.push_back({unit(r, {i, j}), mixed ? 1 : -1});
    }
  }
  WeightSeries s{m, n, degree, p, {}};
  Exponents weight(static_cast<std::size_t>(r), 0);
  std::function<void(std::size_t, int)> choose = [&](std::size_t f, int used) {
    if (f == factors.size()) {
      ++s.terms[weight];
      return;
    }
    const auto& factor = factors[f];
    const int step = total_degree(factor.weight);
    int power = 0;
    while (used + power * step <= degree && (factor.max_power < 0 || power <= factor.max_power)) {
      choose(f + 1, used + power * step);
      for (std::size_t i = 0; i < weight.size(); ++i) weight[i] += factor.weight[i];
      ++power;
    }
    for (std::size_t i = 0; i < weight.size(); ++i) weight[i] -= power * factor.weight[i];
  };
  choose(0, 0);
  return s;
}

IdentityReport king_identity_check(int m, int n, int degree) {
  IdentityReport report{"character product = sum of hook super-Schur functions", m, n, degree, false, 0};
  const Polynomial lhs = character_product(m, n, degree);
  Polynomial rhs(m + n);
  for (const auto& lambda : hook_partitions_up_to(degree, m, n)) rhs += super_schur(lambda, m, n);
  const Polynomial diff = lhs - rhs;
  report.mismatched_terms = diff.terms().size();
  report.status = diff.is_zero();
  return report;
}

std::vector<int> HighestWeightMN::top_row() const {
  std::vector<int> row = even;
  row.insert(row.end(), odd.begin(), odd.end());
  return row;
}

std::string to_string(const HighestWeightMN& w) {
  std::string out = "[";
  for (std::size_t i = 0; i < w.even.size(); ++i) out += (i ? "," : "") + std::to_string(w.even[i]);
  out += "|";
  for (std::size_t i = 0; i < w.odd.size(); ++i) out += (i ? "," : "") + std::to_string(w.odd[i]);
  return out + "]";
}

HighestWeightMN hw_from_partition(const Partition& lambda, int m, int n) {
  if (!hook_ok(lambda, m, n)) throw std::invalid_argument(to_string(lambda) + " violates the hook condition");
  const Partition conj = conjugate(lambda);
  HighestWeightMN w;
  for (int i = 1; i <= m; ++i) w.even.push_back(lambda.part(i));
  for (int i = 1; i <= n; ++i) w.odd.push_back(std::max(0, conj.part(i) - m));
  return w;
}

Partition partition_from_hw(const HighestWeightMN& w) {
  const int m = static_cast<int>(w.even.size());
  int nonzero_odd = 0;
  for (std::size_t i = 0; i < w.odd.size(); ++i) {
    if (w.odd[i] < 0 || (i > 0 && w.odd[i] > w.odd[i - 1]))
      throw std::invalid_argument("odd part of " + to_string(w) + " is not a partition");
    if (w.odd[i] > 0) ++nonzero_odd;
  }
  if (m > 0 && w.even.back() < nonzero_odd)
    throw std::invalid_argument(to_string(w) + " is not a covariant highest weight");
  std::vector<int> parts = w.even;
  const Partition lower_rows = conjugate(Partition(w.odd));
  parts.insert(parts.end(), lower_rows.parts().begin(), lower_rows.parts().end());
  return Partition(parts);  // validates that the even part is decreasing
}

BranchingReport decompose_branching(const WeightSeries& series) {
  BranchingReport report;
  Polynomial rest = series.as_polynomial();
  const int m = series.m;
  const int n = series.n;
  for (int d = 0; d <= series.degree; ++d) {
    Polynomial part = rest.homogeneous_part(d);
    while (!part.is_zero()) {
      // std::map orders exponent vectors lexicographically with x_1 first.
      const auto [leading, coefficient] = *part.terms().rbegin();
      HighestWeightMN w;
      w.even.assign(leading.begin(), leading.begin() + m);
      w.odd.assign(leading.begin() + m, leading.end());
      Partition lambda;
      try {
        lambda = partition_from_hw(w);
      } catch (const std::invalid_argument&) {
        return report;  // leading term is not a covariant highest weight
      }
      Polynomial s = super_schur_tableaux(lambda, m, n);
      Polynomial scaled(m + n);
      for (const auto& [e, c] : s.terms()) scaled.add(e, c * coefficient);
      part -= scaled;
      rest -= scaled;
      report.terms.push_back({lambda, w, coefficient, s.evaluate_at_ones()});
    }
  }
  report.exact = rest.is_zero();
  report.multiplicity_free = report.exact;
  for (const auto& t : report.terms) {
    if (t.multiplicity != 1) report.multiplicity_free = false;
  }
  return report;
}

}  // namespace parafock::characters
