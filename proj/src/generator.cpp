#include "parafock/generator.hpp"

namespace parafock {

std::string to_string(const Generator& g) {
  return "c" + std::to_string(g.index) + (g.sign > 0 ? "+" : "-");
}

std::vector<Generator> all_generators(int count) {
  std::vector<Generator> out;
  for (int sign : {1, -1}) {
    for (int j = 1; j <= count; ++j) out.push_back({j, sign});
  }
  return out;
}

std::vector<TripleIndex> all_triples(int count) {
  std::vector<TripleIndex> out;
  out.reserve(static_cast<std::size_t>(8 * count * count * count));
  for (int j = 1; j <= count; ++j)
    for (int k = 1; k <= count; ++k)
      for (int l = 1; l <= count; ++l)
        for (int xi : {1, -1})
          for (int eta : {1, -1})
            for (int eps : {1, -1}) out.push_back({j, k, l, xi, eta, eps});
  return out;
}

std::string to_string(const TripleIndex& t) {
  auto s = [](int x) { return x > 0 ? "+" : "-"; };
  return "(" + std::to_string(t.j) + "," + std::to_string(t.k) + "," + std::to_string(t.l) + "," + s(t.xi) + "," +
         s(t.eta) + "," + s(t.eps) + ")";
}

}  // namespace parafock
