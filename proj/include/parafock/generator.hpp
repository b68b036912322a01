#pragma once

#include <compare>
#include <string>
#include <vector>

namespace parafock {

// c_j^+ (sign = +1) or c_j^- (sign = -1), j = 1..m+n. Indices 1..m are
// parafermions (even), m+1..m+n parabosons (odd).
struct Generator {
  int index;
  int sign;

  Generator dagger() const { return {index, -sign}; }
  friend auto operator<=>(const Generator&, const Generator&) = default;
};

inline int grading(int index, int m) { return index <= m ? 0 : 1; }

// "c1+", "c2-"
std::string to_string(const Generator& g);

// All c_j^+ then all c_j^- for j = 1..count.
std::vector<Generator> all_generators(int count);

// One signed triple ((j,xi), (k,eta), (l,eps)) of the parastatistics relations.
struct TripleIndex {
  int j, k, l;
  int xi, eta, eps;

  friend auto operator<=>(const TripleIndex&, const TripleIndex&) = default;
};

// The 8 (m+n)^3 signed triples in lexicographic order.
std::vector<TripleIndex> all_triples(int count);

// "(1,2,1,+,-,+)"
std::string to_string(const TripleIndex& t);

}  // namespace parafock
