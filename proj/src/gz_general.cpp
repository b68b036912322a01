#include "parafock/gz_general.hpp"

#include <functional>
#include <stdexcept>

namespace parafock::characters {

std::string to_string(const GeneralPattern& pattern) {
  std::string out;
  for (auto row = pattern.rows.rbegin(); row != pattern.rows.rend(); ++row) {
    if (!out.empty()) out += "; ";
    for (std::size_t i = 0; i < row->size(); ++i) out += (i ? "," : "") + std::to_string((*row)[i]);
  }
  return "(" + out + ")";
}

bool is_covariant_highest_weight(const HighestWeightMN& w) {
  const auto top = w.top_row();
  const int m = static_cast<int>(w.even.size());
  const int r = static_cast<int>(top.size());
  for (int j = 1; j <= r; ++j) {
    if (top[static_cast<std::size_t>(j - 1)] < 0) return false;
    if (j < r && j != m && top[static_cast<std::size_t>(j - 1)] < top[static_cast<std::size_t>(j)]) return false;
  }
  int positive_odd = 0;
  for (int x : w.odd) positive_odd += x > 0 ? 1 : 0;
  return m == 0 || w.even.back() >= positive_odd;
}

GZEnumeration enumerate_gz_general(const HighestWeightMN& lambda, int m, int n) {
  if (static_cast<int>(lambda.even.size()) != m || static_cast<int>(lambda.odd.size()) != n)
    throw std::invalid_argument("highest weight " + to_string(lambda) + " does not match (m|n)");
  if (!is_covariant_highest_weight(lambda))
    throw std::invalid_argument(to_string(lambda) + " is not a covariant highest weight");
  const int r = m + n;
  GZEnumeration result;
  // rows indexed by q - 1; filled from the top (q = r) down.
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(r));
  rows[static_cast<std::size_t>(r - 1)] = lambda.top_row();

  auto at = [&](int i, int q) { return rows[static_cast<std::size_t>(q - 1)][static_cast<std::size_t>(i - 1)]; };

  auto row_ok = [&](int q) {
    if (q > m) {
      int positive = 0;
      for (int i = m + 1; i <= q; ++i) positive += at(i, q) > 0 ? 1 : 0;
      if (at(m, q) < positive) return false;
      for (int i = 1; i <= m - 1; ++i) {
        if (at(i, q) < at(i + 1, q)) return false;
      }
    }
    if (q == m && at(m, m + 1) == 0 && at(m, m) != at(m, m + 1)) return false;
    return true;
  };

  std::function<void(int, int)> fill = [&](int q, int i) {
    if (q == 0) {
      ++result.count;
      result.patterns.push_back({rows});
      return;
    }
    if (i > q) {
      if (row_ok(q)) fill(q - 1, 1);
      return;
    }
    int lo = 0;
    int hi = 0;
    if (i <= m && q >= m) {
      hi = at(i, q + 1);
      lo = hi - 1;
    } else {
      hi = at(i, q + 1);
      lo = at(i + 1, q + 1);
    }
    for (int v = std::max(lo, 0); v <= hi; ++v) {
      rows[static_cast<std::size_t>(q - 1)][static_cast<std::size_t>(i - 1)] = v;
      fill(q, i + 1);
    }
  };
  for (int q = 1; q < r; ++q) rows[static_cast<std::size_t>(q - 1)].assign(static_cast<std::size_t>(q), 0);
  fill(r - 1, 1);
  return result;
}

}  // namespace parafock::characters
