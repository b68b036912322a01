#include "parafock/gz_pattern.hpp"

#include <algorithm>
#include <stdexcept>

namespace parafock::gz {

bool GZPattern::valid() const {
  if (mu12 < 0 || mu22 < 0) return false;
  if (mu11 != mu12 && mu11 != mu12 - 1) return false;
  if (mu12 == 0 && mu11 != 0) return false;
  if (mu22 > 0 && mu12 < 1) return false;
  return true;
}

std::string to_string(const GZPattern& mu) {
  return "(" + std::to_string(mu.mu12) + "," + std::to_string(mu.mu22) + "," + std::to_string(mu.mu11) + ")";
}

std::vector<GZPattern> enumerate_patterns(std::optional<int> mu12_bound, int max_level) {
  if (max_level < 0) throw std::invalid_argument("max_level must be nonnegative");
  std::vector<GZPattern> out;
  for (int level = 0; level <= max_level; ++level) {
    for (int mu12 = 0; mu12 <= level; ++mu12) {
      if (mu12_bound && mu12 > *mu12_bound) break;
      for (int mu11 : {mu12 - 1, mu12}) {
        GZPattern mu{mu12, level - mu12, mu11};
        if (mu.valid()) out.push_back(mu);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

RadicalScalar cgc(const CGCKey& key, int mu12, int mu22) {
  const long n = mu12 + mu22;
  if (n < 0) throw std::domain_error("cgc: negative mu12 + mu22");
  const RadicalScalar small = sqrt_rational(make_rational(1, n + 1));  // sqrt(1/(N+1))
  const RadicalScalar large = sqrt_rational(make_rational(n, n + 1));  // sqrt(N/(N+1))
  using enum TensorComponent;
  using enum TargetShift;
  using enum SourceRow;
  if (key.component == C1) {
    if (key.row == Upper) return key.shift == Mu12 ? RadicalScalar(1) : RadicalScalar();
    return key.shift == Mu12 ? large : -small;
  }
  if (key.row == Upper) return key.shift == Mu12 ? small : large;
  return key.shift == Mu12 ? RadicalScalar() : RadicalScalar(1);
}

std::optional<GZPattern> cgc_target(const CGCKey& key, const GZPattern& source) {
  const int inner = source.mu11 + (key.component == TensorComponent::C1 ? 1 : 0);
  GZPattern target = key.shift == TargetShift::Mu12 ? GZPattern{source.mu12 + 1, source.mu22, inner}
                                                    : GZPattern{source.mu12, source.mu22 + 1, inner};
  if (!target.valid()) return std::nullopt;
  return target;
}

}  // namespace parafock::gz
