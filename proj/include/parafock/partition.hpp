#pragma once

#include <compare>
#include <string>
#include <vector>

namespace parafock::characters {

class Partition {
 public:
  Partition() = default;
  // Trailing zeros are dropped. Throws std::invalid_argument unless the parts
  // are nonnegative and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;
  // lambda_i for i >= 1, zero past the length.
  int part(int i) const { return i >= 1 && i <= length() ? parts_[static_cast<std::size_t>(i - 1)] : 0; }
  bool contains(const Partition& inner) const;

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

std::string to_string(const Partition& lambda);  // "(3,1)", "()"

Partition conjugate(const Partition& lambda);

// lambda_{m+1} <= n
bool hook_ok(const Partition& lambda, int m, int n);

// All partitions of `size`, in reverse lexicographic order.
std::vector<Partition> partitions_of(int size);
// All partitions with |lambda| <= max_size, by size then reverse lex.
std::vector<Partition> partitions_up_to(int max_size);
// Hook partitions for (m, n) with |lambda| <= max_size.
std::vector<Partition> hook_partitions_up_to(int max_size, int m, int n);
// All tau contained in lambda.
std::vector<Partition> sub_partitions(const Partition& lambda);

}  // namespace parafock::characters
