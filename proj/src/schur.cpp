#include "parafock/schur.hpp"

#include <functional>
#include <stdexcept>

namespace parafock::characters {

namespace {

struct Cell {
  int row;
  int col;
};

// Cells of outer/inner in row-major order.
std::vector<Cell> skew_cells(const Partition& outer, const Partition& inner) {
  std::vector<Cell> cells;
  for (int r = 1; r <= outer.length(); ++r)
    for (int c = inner.part(r) + 1; c <= outer.part(r); ++c) cells.push_back({r, c});
  return cells;
}

// Fills the cells with letters 1..letters subject to `allowed(value, left, above)`
// (left/above are 0 when the neighbour is outside the shape) and accumulates
// the weight monomial of every filling.
Polynomial enumerate_fillings(const Partition& outer, const Partition& inner, int letters,
                              const std::function<bool(int, int, int)>& allowed) {
  const auto cells = skew_cells(outer, inner);
  Polynomial result(letters);
  if (letters == 0) {
    if (cells.empty()) result.add({}, 1);
    return result;
  }
  std::map<std::pair<int, int>, int> filled;
  Exponents weight(static_cast<std::size_t>(letters), 0);
  std::function<void(std::size_t)> fill = [&](std::size_t i) {
    if (i == cells.size()) {
      result.add(weight, 1);
      return;
    }
    const auto [r, c] = cells[i];
    auto left_it = filled.find({r, c - 1});
    auto above_it = filled.find({r - 1, c});
    const int left = left_it == filled.end() ? 0 : left_it->second;
    const int above = above_it == filled.end() ? 0 : above_it->second;
    for (int v = 1; v <= letters; ++v) {
      if (!allowed(v, left, above)) continue;
      filled[{r, c}] = v;
      ++weight[static_cast<std::size_t>(v - 1)];
      fill(i + 1);
      --weight[static_cast<std::size_t>(v - 1)];
      filled.erase({r, c});
    }
  };
  fill(0);
  return result;
}

// Places a polynomial in `source.variables()` variables at an offset of a
// larger variable set.
Polynomial embed(const Polynomial& source, int total, int offset) {
  Polynomial out(total);
  Exponents e(static_cast<std::size_t>(total), 0);
  for (const auto& [se, c] : source.terms()) {
    std::fill(e.begin(), e.end(), 0);
    for (std::size_t i = 0; i < se.size(); ++i) e[static_cast<std::size_t>(offset) + i] = se[i];
    out.add(e, c);
  }
  return out;
}

}  // namespace

Polynomial skew_schur(const Partition& outer, const Partition& inner, int variables) {
  if (!outer.contains(inner)) return Polynomial(variables);
  return enumerate_fillings(outer, inner, variables, [](int v, int left, int above) {
    return v >= left && v > above;
  });
}

Polynomial super_schur_tableaux(const Partition& lambda, int m, int n) {
  auto is_x = [m](int v) { return v <= m; };
  return enumerate_fillings(lambda, Partition(), m + n, [&](int v, int left, int above) {
    if (left != 0 && (v < left || (v == left && !is_x(v)))) return false;
    if (above != 0 && (v < above || (v == above && is_x(v)))) return false;
    return true;
  });
}

Polynomial super_schur_skew_sum(const Partition& lambda, int m, int n) {
  Polynomial total(m + n);
  for (const auto& tau : sub_partitions(lambda)) {
    Polynomial x_part = embed(skew_schur(lambda, tau, m), m + n, 0);
    if (x_part.is_zero()) continue;
    Polynomial y_part = embed(schur(conjugate(tau), n), m + n, m);
    total += x_part * y_part;
  }
  return total;
}

Polynomial super_schur(const Partition& lambda, int m, int n) {
  Polynomial tableaux = super_schur_tableaux(lambda, m, n);
  if (!(tableaux == super_schur_skew_sum(lambda, m, n)))
    throw std::logic_error("super-Schur routes disagree for " + to_string(lambda));
  return tableaux;
}

}  // namespace parafock::characters
