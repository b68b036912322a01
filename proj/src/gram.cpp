#include "parafock/gram.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace parafock::induced {

namespace {

int offset_of(const BigRational& q, const char* what) {
  if (!is_integer(q) || sgn(q) < 0 || !q.get_num().fits_sint_p())
    throw std::invalid_argument(std::string("weight is not reachable from the lowest weight: ") + what +
                                " offset " + q.get_str());
  return static_cast<int>(q.get_num().get_si());
}

}  // namespace

GramMatrix gram_matrix(const Weight11& w, const BigRational& p) {
  const int a = offset_of(w.w1 + p / 2, "epsilon");
  const int b = offset_of(w.w2 - p / 2, "delta");
  GramMatrix g{w, states_of_weight(a, b), {}};
  for (const auto& row : g.states) {
    std::vector<BigRational> r;
    for (const auto& col : g.states) r.push_back(inner_product_oracle(row, MonomialVector(col), p));
    g.entries.push_back(std::move(r));
  }
  return g;
}

GramAnalysis gram_rank_and_null(const Weight11& w, const BigRational& p) {
  GramAnalysis out{gram_matrix(w, p), 0, {}};
  out.rank = linalg::rank(out.gram.entries);
  for (const auto& v : linalg::null_space(out.gram.entries)) {
    MonomialVector u;
    for (std::size_t i = 0; i < v.size(); ++i) u.add(out.gram.states[i], BigRational(v[i]));
    out.null_vectors.push_back(std::move(u));
  }
  return out;
}

std::string to_string(const MonomialVector& v) {
  if (v.empty()) return "0";
  // Theta ascending, matching the Gram state order.
  std::vector<std::pair<MonomialState, BigRational>> terms(v.begin(), v.end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) {
    return std::tie(x.first.theta, x.first.k, x.first.l) < std::tie(y.first.theta, y.first.k, y.first.l);
  });
  std::string out;
  bool first = true;
  for (const auto& [s, c] : terms) {
    BigRational magnitude = abs(c);
    if (first) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    if (magnitude != 1) out += magnitude.get_str();
    out += to_string(s);
    first = false;
  }
  return out;
}

}  // namespace parafock::induced
