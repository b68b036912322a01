#include "parafock/monomial.hpp"

#include <algorithm>
#include <stdexcept>

#include "parafock/operator_algebra.hpp"

namespace parafock::induced {

std::string to_string(const MonomialState& s) {
  return "|" + std::to_string(s.k) + "," + std::to_string(s.l) + "," + std::to_string(s.theta) + ">";
}

Weight11 Weight11::from_offsets(int epsilon_offset, int delta_offset, const BigRational& p) {
  return {-p / 2 + epsilon_offset, p / 2 + delta_offset};
}

Weight11 weight(const MonomialState& s, const BigRational& p) {
  return Weight11::from_offsets(s.epsilon_offset(), s.delta_offset(), p);
}

namespace {

int parity_sign(int n) { return n % 2 == 0 ? 1 : -1; }

void apply_to_state(const Generator& g, const MonomialState& s, const BigRational& c, const BigRational& p,
                    MonomialVector& out) {
  const int k = s.k;
  const int l = s.l;
  auto emit = [&](int k2, int l2, int theta2, const BigRational& factor) {
    if (sgn(factor) == 0) return;
    out.add({k2, l2, theta2}, c * factor);
  };

  if (g.index == 1 && g.sign > 0) {
    emit(k + 1, l, s.theta, 1);
  } else if (g.index == 2 && g.sign > 0) {
    if (s.theta == 0) {
      emit(k, l + 1, 0, 1);
      if (k > 0) emit(k - 1, l, 1, BigRational(-parity_sign(l) * k));
    } else {
      emit(k, l + 1, 1, 1);
    }
  } else if (g.index == 1 && g.sign < 0) {
    if (s.theta == 0) {
      if (k > 0) emit(k - 1, l, 0, k * (p - k + 1));
    } else {
      if (k > 0) emit(k - 1, l, 1, k * (p - k - 1));
      emit(k, l + 1, 0, BigRational(2 * parity_sign(l)));
    }
  } else if (g.index == 2 && g.sign < 0) {
    const int half = l / 2;
    if (l % 2 == 0) {
      if (s.theta == 0) {
        if (half > 0 && k > 0) emit(k - 1, l - 2, 1, BigRational(-2 * k * half));
        if (half > 0) emit(k, l - 1, 0, BigRational(2 * half));
      } else {
        if (half > 0) emit(k, l - 1, 1, BigRational(2 * half));
        emit(k + 1, l, 0, BigRational(-2));
      }
    } else {
      if (s.theta == 0) {
        if (half > 0 && k > 0) emit(k - 1, l - 2, 1, BigRational(2 * k * half));
        emit(k, l - 1, 0, p + 2 * half - 2 * k);
      } else {
        emit(k, l - 1, 1, p + 2 * half - 2 * k);
        emit(k + 1, l, 0, BigRational(2));
      }
    }
  } else {
    throw std::invalid_argument("the monomial module has generators c1, c2 only, got " + to_string(g));
  }
}

}  // namespace

MonomialVector apply_generator(const Generator& g, const MonomialVector& v, const BigRational& p) {
  if (sgn(p) <= 0) throw std::invalid_argument("order p must be positive");
  MonomialVector out;
  for (const auto& [state, c] : v) apply_to_state(g, state, c, p, out);
  return out;
}

BigRational norm_squared_closed(const MonomialState& s, const BigRational& p) {
  if (!s.valid()) throw std::invalid_argument("invalid monomial state " + to_string(s));
  const unsigned k = static_cast<unsigned>(s.k);
  const unsigned half = static_cast<unsigned>(s.l / 2);
  const BigRational kfact(factorial(k));
  const BigRational half_fact(factorial(half));
  BigRational pow4(1);
  for (unsigned i = 0; i < half; ++i) pow4 *= 4;

  if (s.theta == 0) {
    BigRational base = kfact * pochhammer(p - s.k + 1, k) * pow4 * half_fact;
    if (s.l % 2 == 0) return base * pochhammer(p / 2, half);
    return base * 2 * pochhammer(p / 2, half + 1);
  }
  BigRational base = 4 * kfact * pochhammer(p - s.k, k + 1) * pow4 * half_fact * pochhammer(p / 2 + 1, half);
  if (s.l % 2 == 0) return base;
  return base * (p - s.k + 2 * static_cast<long>(half) + 1);
}

BigRational inner_product_oracle(const MonomialState& a, const MonomialVector& v, const BigRational& p) {
  auto apply = [&p](const Generator& g, const MonomialVector& w) { return apply_generator(g, w, p); };
  MonomialVector w = v;
  for (int i = 0; i < a.k; ++i) w = apply({1, -1}, w);
  for (int i = 0; i < a.l; ++i) w = apply({2, -1}, w);
  if (a.theta == 1) w = super_bracket_action(Generator{2, -1}, Generator{1, -1}, 1, w, apply);
  return w.coefficient({0, 0, 0});
}

std::vector<MonomialState> states_of_weight(int epsilon_offset, int delta_offset) {
  std::vector<MonomialState> out;
  for (int theta : {0, 1}) {
    MonomialState s{epsilon_offset - theta, delta_offset - theta, theta};
    if (s.valid()) out.push_back(s);
  }
  return out;
}

std::vector<MonomialState> states_up_to_level(int max_level) {
  std::vector<MonomialState> out;
  for (int level = 0; level <= max_level; ++level)
    for (int theta : {0, 1})
      for (int k = 0; k + 2 * theta <= level; ++k) out.push_back({k, level - k - 2 * theta, theta});
  return out;
}

}  // namespace parafock::induced
