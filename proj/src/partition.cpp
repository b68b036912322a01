#include "parafock/partition.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace parafock::characters {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0 || (i > 0 && parts_[i] > parts_[i - 1]))
      throw std::invalid_argument("parts must be nonnegative and weakly decreasing");
  }
}

int Partition::size() const {
  int total = 0;
  for (int x : parts_) total += x;
  return total;
}

bool Partition::contains(const Partition& inner) const {
  if (inner.length() > length()) return false;
  for (int i = 1; i <= inner.length(); ++i) {
    if (inner.part(i) > part(i)) return false;
  }
  return true;
}

std::string to_string(const Partition& lambda) {
  std::string out = "(";
  for (int i = 1; i <= lambda.length(); ++i) {
    if (i > 1) out += ",";
    out += std::to_string(lambda.part(i));
  }
  return out + ")";
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> parts;
  for (int j = 1; j <= lambda.part(1); ++j) {
    int column = 0;
    while (lambda.part(column + 1) >= j) ++column;
    parts.push_back(column);
  }
  return Partition(std::move(parts));
}

bool hook_ok(const Partition& lambda, int m, int n) { return lambda.part(m + 1) <= n; }

std::vector<Partition> partitions_of(int size) {
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> extend = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      extend(remaining - part, part);
      current.pop_back();
    }
  };
  extend(size, size);
  return out;
}

std::vector<Partition> partitions_up_to(int max_size) {
  std::vector<Partition> out;
  for (int s = 0; s <= max_size; ++s) {
    for (auto& lambda : partitions_of(s)) out.push_back(std::move(lambda));
  }
  return out;
}

std::vector<Partition> hook_partitions_up_to(int max_size, int m, int n) {
  std::vector<Partition> out;
  for (auto& lambda : partitions_up_to(max_size)) {
    if (hook_ok(lambda, m, n)) out.push_back(std::move(lambda));
  }
  return out;
}

std::vector<Partition> sub_partitions(const Partition& lambda) {
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int)> extend = [&](int row) {
    if (row > lambda.length()) {
      out.emplace_back(current);
      return;
    }
    const int cap = std::min(lambda.part(row), current.empty() ? lambda.part(row) : current.back());
    for (int x = cap; x >= 0; --x) {
      current.push_back(x);
      extend(row + 1);
      current.pop_back();
    }
  };
  extend(1);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace parafock::characters
