#pragma once

#include <compare>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "parafock/radical.hpp"
#include "parafock/sparse_vector.hpp"

namespace parafock::gz {

// GZ pattern | mu12, mu22 ; mu11 ) of a covariant u(1|1) module inside the
// Fock space, m = n = 1.
struct GZPattern {
  int mu12 = 0;
  int mu22 = 0;
  int mu11 = 0;

  int level() const { return mu12 + mu22; }
  // Weight offsets from the lowest weight (-p/2 | p/2).
  int epsilon_offset() const { return mu11; }
  int delta_offset() const { return mu12 + mu22 - mu11; }

  // mu11 in {mu12, mu12-1}; mu12 = 0 forces mu11 = 0; mu22 > 0 forces mu12 >= 1.
  bool valid() const;

  // Canonical order: (level, mu12, mu11).
  friend bool operator==(const GZPattern&, const GZPattern&) = default;
  friend auto operator<=>(const GZPattern& a, const GZPattern& b) {
    return std::tuple(a.level(), a.mu12, a.mu11) <=> std::tuple(b.level(), b.mu12, b.mu11);
  }
};

std::string to_string(const GZPattern& mu);  // "(mu12,mu22,mu11)"

using GZVector = SparseVector<GZPattern, RadicalScalar>;

// All valid patterns with mu12 + mu22 <= max_level and, when a bound is
// given, mu12 <= bound. Sorted canonically.
std::vector<GZPattern> enumerate_patterns(std::optional<int> mu12_bound, int max_level);

// ---------------------------------------------------------------------------
// u(1|1) Clebsch-Gordan coefficients for coupling (1,0) to (mu12, mu22).

// Inner label of the (1,0) tensor component: c1+ ~ |1 0; 1), c2+ ~ |1 0; 0).
enum class TensorComponent { C1, C2 };
// Target representation (mu12+1, mu22) or (mu12, mu22+1).
enum class TargetShift { Mu12, Mu22 };
// Source inner label mu11 = mu12 (Upper) or mu12 - 1 (Lower).
enum class SourceRow { Upper, Lower };

struct CGCKey {
  TensorComponent component;
  TargetShift shift;
  SourceRow row;
  friend auto operator<=>(const CGCKey&, const CGCKey&) = default;
};

// The six nonzero coefficients; zero for the two weight-forbidden couplings.
// Requires mu12 + mu22 >= 0.
RadicalScalar cgc(const CGCKey& key, int mu12, int mu22);

// Target pattern of a coupling, or nullopt when the coupling is forbidden.
std::optional<GZPattern> cgc_target(const CGCKey& key, const GZPattern& source);

}  // namespace parafock::gz
