#include "parafock/induced_checks.hpp"

#include "parafock/gz_pattern.hpp"
#include "parafock/operator_algebra.hpp"

namespace parafock::induced {

namespace {

std::string describe(const MonomialVector& v) { return to_string(v); }

// <v|b> for a vector v with real coefficients.
BigRational inner(const MonomialVector& v, const MonomialState& b, const BigRational& p) {
  BigRational sum(0);
  const MonomialVector target(b);
  for (const auto& [s, c] : v) sum += c * inner_product_oracle(s, target, p);
  return sum;
}

}  // namespace

CheckReport check_norms(const BigRational& p, int max_level) {
  CheckReport report{"closed-form norms", 0, {}};
  for (const auto& s : states_up_to_level(max_level)) {
    ++report.checked;
    const BigRational closed = norm_squared_closed(s, p);
    const BigRational oracle = inner_product_oracle(s, MonomialVector(s), p);
    if (closed != oracle)
      report.failures.push_back(to_string(s) + ": closed " + closed.get_str() + ", oracle " + oracle.get_str());
  }
  return report;
}

CheckReport check_adjointness(const BigRational& p, int max_level) {
  CheckReport report{"adjointness", 0, {}};
  for (const auto& a : states_up_to_level(max_level)) {
    for (int j : {1, 2}) {
      const MonomialVector raised = apply_generator({j, 1}, MonomialVector(a), p);
      const int de = j == 1 ? 1 : 0;
      // b must have the weight of c_j^+ a; other pairs vanish on both sides.
      for (const auto& b : states_of_weight(a.epsilon_offset() + de, a.delta_offset() + 1 - de)) {
        if (b.level() > max_level) continue;
        ++report.checked;
        const BigRational lhs = inner(raised, b, p);
        const BigRational rhs = inner_product_oracle(a, apply_generator({j, -1}, MonomialVector(b), p), p);
        if (lhs != rhs)
          report.failures.push_back("c" + std::to_string(j) + " between " + to_string(a) + " and " + to_string(b));
      }
    }
  }
  return report;
}

CheckReport check_triple_relations(const BigRational& p, int max_level) {
  CheckReport report{"triple relations", 0, {}};
  auto apply = [&p](const Generator& g, const MonomialVector& v) { return apply_generator(g, v, p); };
  const auto triples = all_triples(2);
  for (const auto& s : states_up_to_level(max_level)) {
    const MonomialVector v(s);
    for (const auto& t : triples) {
      ++report.checked;
      MonomialVector defect = triple_relation_defect(t, 1, v, apply);
      if (!defect.empty()) report.failures.push_back(to_string(s) + " " + to_string(t) + ": " + describe(defect));
    }
  }
  return report;
}

CheckReport check_cartan(const BigRational& p, int max_level) {
  CheckReport report{"cartan action", 0, {}};
  auto apply = [&p](const Generator& g, const MonomialVector& v) { return apply_generator(g, v, p); };
  for (const auto& s : states_up_to_level(max_level)) {
    const MonomialVector v(s);
    const MonomialVector c1 = super_bracket_action(Generator{1, -1}, Generator{1, 1}, 1, v, apply);
    const MonomialVector c2 = super_bracket_action(Generator{2, -1}, Generator{2, 1}, 1, v, apply);
    report.checked += 2;
    if (!(c1 == MonomialVector(s, p - 2 * (s.k + s.theta))))
      report.failures.push_back("[c1-,c1+] on " + to_string(s) + ": " + describe(c1));
    if (!(c2 == MonomialVector(s, p + 2 * (s.l + s.theta))))
      report.failures.push_back("{c2-,c2+} on " + to_string(s) + ": " + describe(c2));
  }
  return report;
}

CheckReport check_positivity_boundary(int p, int max_l) {
  CheckReport report{"positivity boundary", 0, {}};
  const BigRational order(p);
  for (int theta : {0, 1}) {
    for (int l = 0; l <= max_l; ++l) {
      for (int k = 0; k <= p - theta + 1; ++k) {
        ++report.checked;
        const MonomialState s{k, l, theta};
        const BigRational norm = norm_squared_closed(s, order);
        const bool ok = k == p - theta + 1 ? sgn(norm) == 0 : sgn(norm) >= 0;
        if (!ok) report.failures.push_back(to_string(s) + " has norm " + norm.get_str());
      }
    }
  }
  return report;
}

CheckReport check_gram_rank_vs_gz(int p, int max_level) {
  CheckReport report{"gram rank vs GZ count", 0, {}};
  const BigRational order(p);
  const auto patterns = gz::enumerate_patterns(p, max_level);
  for (int level = 0; level <= max_level; ++level) {
    for (int a = 0; a <= level; ++a) {
      const int b = level - a;
      std::size_t gz_count = 0;
      for (const auto& mu : patterns) {
        if (mu.epsilon_offset() == a && mu.delta_offset() == b) ++gz_count;
      }
      const auto analysis = gram_rank_and_null(Weight11::from_offsets(a, b, order), order);
      ++report.checked;
      if (analysis.rank != gz_count)
        report.failures.push_back("weight offset (" + std::to_string(a) + "|" + std::to_string(b) + "): rank " +
                                  std::to_string(analysis.rank) + ", GZ count " + std::to_string(gz_count));
    }
  }
  return report;
}

}  // namespace parafock::induced
