#include "parafock/gz_checks.hpp"

#include <map>
#include <optional>

#include "parafock/operator_algebra.hpp"

namespace parafock::gz {

std::vector<GZPattern> module_patterns(const BigRational& p, int max_level, FockModule mode) {
  if (mode == FockModule::Irreducible) {
    if (!is_integer(p) || sgn(p) <= 0) throw std::invalid_argument("V(p) needs a positive integer p");
    return enumerate_patterns(static_cast<int>(p.get_num().get_si()), max_level);
  }
  // Raising from mu12 > p is imaginary. At integer p the raise from mu12 = p
  // vanishes; otherwise the three factors of a triple may climb two rows, so
  // sources stop two rows below floor(p).
  BigInt floor_p;
  mpz_fdiv_q(floor_p.get_mpz_t(), p.get_num_mpz_t(), p.get_den_mpz_t());
  const int bound = static_cast<int>(floor_p.get_si()) - (is_integer(p) ? 0 : 2);
  if (bound < 0) return {};
  return enumerate_patterns(bound, max_level);
}

namespace {

std::string describe(const GZVector& v) {
  std::string out;
  for (const auto& [mu, c] : v) {
    if (!out.empty()) out += " ";
    out += "[" + to_string(mu) + " " + c.to_string() + "]";
  }
  return out.empty() ? "0" : out;
}

}  // namespace

CheckReport check_triple_relations(const BigRational& p, int max_level, FockModule mode) {
  CheckReport report{"triple relations", 0, {}};
  auto apply = [&](const Generator& g, const GZVector& v) { return apply_c(g, v, p, mode); };
  const auto triples = all_triples(2);
  for (const auto& mu : module_patterns(p, max_level, mode)) {
    const GZVector v(mu);
    for (const auto& t : triples) {
      ++report.checked;
      GZVector defect = triple_relation_defect(t, 1, v, apply);
      if (!defect.empty()) report.failures.push_back(to_string(mu) + " " + to_string(t) + ": " + describe(defect));
    }
  }
  return report;
}

CheckReport check_cartan(const BigRational& p, int max_level, FockModule mode) {
  CheckReport report{"cartan identities", 0, {}};
  auto apply = [&](const Generator& g, const GZVector& v) { return apply_c(g, v, p, mode); };
  for (const auto& mu : module_patterns(p, max_level, mode)) {
    const GZVector v(mu);
    GZVector c1 = super_bracket_action(Generator{1, -1}, Generator{1, 1}, 1, v, apply);
    GZVector c2 = super_bracket_action(Generator{2, -1}, Generator{2, 1}, 1, v, apply);
    const GZVector expect1(mu, RadicalScalar(-2 * h1_eigenvalue(mu, p)));
    const GZVector expect2(mu, RadicalScalar(2 * h2_eigenvalue(mu, p)));
    report.checked += 2;
    if (!(c1 == expect1)) report.failures.push_back("[c1-,c1+] on " + to_string(mu) + ": " + describe(c1));
    if (!(c2 == expect2)) report.failures.push_back("{c2-,c2+} on " + to_string(mu) + ": " + describe(c2));
  }
  return report;
}

CheckReport check_adjoint_symmetry(const BigRational& p, int max_level, FockModule mode) {
  CheckReport report{"adjoint symmetry", 0, {}};
  const auto patterns = module_patterns(p, max_level, mode);
  for (const auto& mu : patterns) {
    for (int j : {1, 2}) {
      const GZVector raised = apply_c({j, 1}, GZVector(mu), p, mode);
      const GZVector lowered_from = apply_c({j, -1}, GZVector(mu), p, mode);
      // (mu'|c-|mu) against (mu|c+|mu') for every mu' reachable either way.
      for (const auto& [target, c] : lowered_from) {
        ++report.checked;
        const RadicalScalar back = apply_c({j, 1}, GZVector(target), p, mode).coefficient(mu);
        if (!(back == c))
          report.failures.push_back("c" + std::to_string(j) + " between " + to_string(mu) + " and " + to_string(target));
      }
      for (const auto& [target, c] : raised) {
        ++report.checked;
        const RadicalScalar back = apply_c({j, -1}, GZVector(target), p, mode).coefficient(mu);
        if (!(back == c))
          report.failures.push_back("c" + std::to_string(j) + " between " + to_string(target) + " and " + to_string(mu));
      }
    }
  }
  return report;
}

CheckReport check_lowest_weight(const BigRational& p) {
  CheckReport report{"lowest weight", 0, {}};
  const GZPattern vacuum{0, 0, 0};
  for (int j : {1, 2}) {
    ++report.checked;
    GZVector image = apply_c_unfiltered({j, -1}, GZVector(vacuum), p);
    if (!image.empty()) report.failures.push_back("c" + std::to_string(j) + "- does not annihilate the vacuum");
  }
  ++report.checked;
  if (h1_eigenvalue(vacuum, p) != -p / 2 || h2_eigenvalue(vacuum, p) != p / 2)
    report.failures.push_back("vacuum weight is not (-p/2 | p/2)");
  return report;
}

CheckReport check_truncation_closure(int p, int max_level) {
  CheckReport report{"truncation closure", 0, {}};
  const BigRational order(p);
  for (const auto& mu : enumerate_patterns(p, max_level)) {
    if (mu.mu12 != p) continue;
    for (const auto& g : all_generators(2)) {
      ++report.checked;
      GZVector image = apply_c_unfiltered(g, GZVector(mu), order);
      for (const auto& [target, c] : image) {
        if (target.mu12 > p)
          report.failures.push_back(to_string(g) + to_string(mu) + " -> " + to_string(target) + " : " + c.to_string());
      }
    }
  }
  return report;
}

CheckReport check_cgc_orthogonality(int max_level) {
  CheckReport report{"cgc orthogonality", 0, {}};
  using enum TensorComponent;
  using enum TargetShift;
  using enum SourceRow;
  for (int level = 1; level <= max_level; ++level) {
    for (int mu12 = 1; mu12 <= level; ++mu12) {
      const int mu22 = level - mu12;
      // Rows: source couplings with total inner label mu12; columns: targets.
      const RadicalScalar block[2][2] = {
          {cgc({C2, Mu12, Upper}, mu12, mu22), cgc({C2, Mu22, Upper}, mu12, mu22)},
          {cgc({C1, Mu12, Lower}, mu12, mu22), cgc({C1, Mu22, Lower}, mu12, mu22)},
      };
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
          const RadicalScalar expected(i == j ? 1 : 0);
          RadicalScalar rows = block[i][0] * block[j][0] + block[i][1] * block[j][1];
          RadicalScalar cols = block[0][i] * block[0][j] + block[1][i] * block[1][j];
          report.checked += 2;
          if (!(rows == expected) || !(cols == expected))
            report.failures.push_back("block (" + std::to_string(mu12) + "," + std::to_string(mu22) + ") entry " +
                                      std::to_string(i) + std::to_string(j));
        }
      }
    }
  }
  // The 1x1 blocks: (mu12,mu22;mu12) x c1+ -> (mu12+1,mu22;mu12+1) and
  // (mu12,mu22;mu12-1) x c2+ -> (mu12,mu22+1;mu12-1).
  for (int level = 0; level <= max_level; ++level) {
    for (int mu12 = 0; mu12 <= level; ++mu12) {
      report.checked += 1;
      if (!(cgc({C1, Mu12, Upper}, mu12, level - mu12) == RadicalScalar(1)))
        report.failures.push_back("unit coefficient c1+ at mu12=" + std::to_string(mu12));
      if (mu12 >= 1) {
        report.checked += 1;
        if (!(cgc({C2, Mu22, Lower}, mu12, level - mu12) == RadicalScalar(1)))
          report.failures.push_back("unit coefficient c2+ at mu12=" + std::to_string(mu12));
      }
    }
  }
  return report;
}

namespace {

using enum ReducedElement;

// Squared reduced element with the boundary convention G2(., -1) = 0.
BigRational sq(ReducedElement which, int mu12, int mu22, const BigRational& p) {
  if (mu22 < 0 || mu12 < 0) return BigRational(0);
  return reduced_me_squared(which, mu12, mu22, p);
}

// Signed real value of a reduced element, with G1 evaluated on |p - mu12|.
// Both sides of a bilinear recurrence contain exactly one G1 factor at the
// same mu12, so a common factor i drops out.
RadicalScalar real_part(ReducedElement which, int mu12, int mu22, const BigRational& p) {
  if (mu22 < 0 || mu12 < 0) return {};
  BigRational squared = reduced_me_squared(which, mu12, mu22, p);
  RadicalScalar value = sqrt_rational(abs(squared));
  return reduced_me_sign(which, mu22) < 0 ? -value : value;
}

RadicalScalar sqrt_q(long num, long den) { return sqrt_rational(make_rational(num, den)); }

}  // namespace

CheckReport check_recurrences(const BigRational& p, int max_label) {
  CheckReport report{"recurrences", 0, {}};
  auto record = [&](bool ok, const std::string& what, int a, int b) {
    ++report.checked;
    if (!ok) report.failures.push_back(what + " at mu12=" + std::to_string(a) + " mu22=" + std::to_string(b));
  };
  for (int a = 0; a <= max_label; ++a) {
    for (int b = 0; b <= max_label; ++b) {
      const long n = a + b;
      const bool upper_exists = GZPattern{a, b, a}.valid();
      const bool lower_exists = GZPattern{a, b, a - 1}.valid();

      // Off-diagonal parts between (a,b;a) and (a+1,b-1;a).
      if (b >= 1 && a >= 1) {
        for (bool with_tilde : {false, true}) {
          const auto g1 = with_tilde ? G1Tilde : G1;
          const auto g2 = with_tilde ? G2Tilde : G2;
          RadicalScalar lhs = real_part(g1, a, b, p) * real_part(g2, a + 1, b - 1, p) * sqrt_q(1, n + 1);
          RadicalScalar rhs =
              real_part(g1, a, b - 1, p) * real_part(g2, a, b - 1, p) * sqrt_q(n - 1, 1) * make_rational(1, n);
          RadicalScalar total = with_tilde ? lhs - rhs : lhs + rhs;
          record(total.is_zero(), with_tilde ? "c1 off-diagonal" : "c2 off-diagonal", a, b);
        }
      }
      if (upper_exists) {
        // On (a,b;a): eigenvalue p + 2b of {c2-,c2+}.
        BigRational r2 = sq(G1, a, b, p) / (n + 1) + sq(G2, a, b, p) * make_rational(n, n + 1);
        if (b >= 1) r2 += sq(G2, a, b - 1, p) * make_rational(n - 1, n);
        record(r2 == p + 2 * b, b == 0 ? "c2 diagonal, mu11=mu12 [boundary G2(mu12,-1)=0]" : "c2 diagonal, mu11=mu12", a, b);
        // On (a,b;a): eigenvalue p - 2a of [c1-,c1+].
        BigRational rr3 = sq(G1Tilde, a, b, p) - sq(G1Tilde, a - 1, b, p);
        if (b >= 1) rr3 -= sq(G2Tilde, a, b - 1, p) / n;
        record(rr3 == p - 2 * a, b == 0 ? "c1 diagonal, mu11=mu12 [boundary G~2(mu12,-1)=0]" : "c1 diagonal, mu11=mu12", a, b);
      }
      if (lower_exists) {
        // On (a,b;a-1): eigenvalue p + 2b + 2 of {c2-,c2+}.
        BigRational r3 = sq(G1, a - 1, b, p) / n + sq(G2, a, b - 1, p) + sq(G2, a, b, p);
        record(r3 == p + 2 * b + 2, b == 0 ? "c2 diagonal, mu11=mu12-1 [boundary G2(mu12,-1)=0]" : "c2 diagonal, mu11=mu12-1", a, b);
        // On (a,b;a-1): eigenvalue p - 2a + 2 of [c1-,c1+].
        BigRational rr2 = sq(G1Tilde, a, b, p) * make_rational(n, n + 1) + sq(G2Tilde, a, b, p) / (n + 1);
        rr2 -= sq(G1Tilde, a - 1, b, p) * make_rational(n - 1, n);
        record(rr2 == p - 2 * a + 2, "c1 diagonal, mu11=mu12-1", a, b);
      }
    }
  }
  return report;
}

namespace {

// Basis |theta, k> of the fermion-boson Fock space, theta = 0, 1.
struct FermionBosonState {
  int theta;
  int k;
  friend auto operator<=>(const FermionBosonState&, const FermionBosonState&) = default;
};

std::optional<std::pair<FermionBosonState, RadicalScalar>> fermion_boson_action(const Generator& g,
                                                                                const FermionBosonState& s) {
  const RadicalScalar boson_sign(s.theta == 0 ? 1 : -1);
  if (g.index == 1) {
    if (g.sign > 0 && s.theta == 0) return std::pair{FermionBosonState{1, s.k}, RadicalScalar(1)};
    if (g.sign < 0 && s.theta == 1) return std::pair{FermionBosonState{0, s.k}, RadicalScalar(1)};
    return std::nullopt;
  }
  if (g.sign > 0) return std::pair{FermionBosonState{s.theta, s.k + 1}, boson_sign * RadicalScalar::sqrt_of(s.k + 1)};
  if (s.k == 0) return std::nullopt;
  return std::pair{FermionBosonState{s.theta, s.k - 1}, boson_sign * RadicalScalar::sqrt_of(s.k)};
}

}  // namespace

CheckReport p1_oracle_compare(int max_level) {
  CheckReport report{"p=1 fermion-boson oracle", 0, {}};
  const BigRational one(1);
  // Weight offsets (theta | k) on the Fock side, (mu11 | mu12+mu22-mu11) on the GZ side.
  std::map<std::pair<int, int>, std::vector<GZPattern>> gz_by_weight;
  for (const auto& mu : enumerate_patterns(1, max_level + 1))
    gz_by_weight[{mu.epsilon_offset(), mu.delta_offset()}].push_back(mu);
  std::map<std::pair<int, int>, std::vector<FermionBosonState>> fb_by_weight;
  for (int theta : {0, 1})
    for (int k = 0; theta + k <= max_level + 1; ++k) fb_by_weight[{theta, k}].push_back({theta, k});

  for (const auto& [w, states] : fb_by_weight) {
    if (w.first + w.second > max_level) continue;
    ++report.checked;
    auto it = gz_by_weight.find(w);
    if (states.size() != 1 || it == gz_by_weight.end() || it->second.size() != 1)
      report.failures.push_back("weight (" + std::to_string(w.first) + "|" + std::to_string(w.second) +
                                ") is not one-dimensional on both sides");
  }
  for (const auto& [w, gz_states] : gz_by_weight) {
    if (w.first + w.second > max_level) continue;
    ++report.checked;
    if (gz_states.size() != 1 || !fb_by_weight.contains(w))
      report.failures.push_back("GZ weight (" + std::to_string(w.first) + "|" + std::to_string(w.second) +
                                ") has no single Fock partner");
  }
  if (!report.ok()) return report;

  for (const auto& [w, states] : fb_by_weight) {
    if (w.first + w.second > max_level) continue;
    const FermionBosonState s = states.front();
    const GZPattern mu = gz_by_weight.at(w).front();
    for (const auto& g : all_generators(2)) {
      ++report.checked;
      GZVector gz_image = apply_c(g, GZVector(mu), one, FockModule::Irreducible);
      auto fb_image = fermion_boson_action(g, s);
      if (!fb_image) {
        if (!gz_image.empty())
          report.failures.push_back(to_string(g) + " on " + to_string(mu) + ": GZ nonzero, Fock zero");
        continue;
      }
      const auto [target, value] = *fb_image;
      const GZPattern gz_target = gz_by_weight.at({target.theta, target.k}).front();
      const RadicalScalar gz_value = gz_image.coefficient(gz_target);
      if (gz_image.size() > 1 || !(gz_value * gz_value == value * value))
        report.failures.push_back(to_string(g) + " on " + to_string(mu) + ": |" + gz_value.to_string() + "| vs |" +
                                  value.to_string() + "|");
    }
  }
  return report;
}

}  // namespace parafock::gz
