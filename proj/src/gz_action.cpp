#include "parafock/gz_action.hpp"

#include <stdexcept>

namespace parafock::gz {

namespace {

int parity_sign(int n) { return n % 2 == 0 ? 1 : -1; }

bool tilde(ReducedElement which) { return which == ReducedElement::G1Tilde || which == ReducedElement::G2Tilde; }

bool first(ReducedElement which) { return which == ReducedElement::G1 || which == ReducedElement::G1Tilde; }

void check_positive_integer(const BigRational& p) {
  if (!is_integer(p) || sgn(p) <= 0) throw std::invalid_argument("V(p) needs a positive integer p, got " + p.get_str());
}

}  // namespace

BigRational reduced_me_squared(ReducedElement which, int mu12, int mu22, const BigRational& p) {
  if (mu12 < 0 || mu22 < 0) throw std::domain_error("reduced matrix element at negative labels");
  const long n = mu12 + mu22;
  if (first(which)) {
    if (mu22 % 2 == 0) {
      if (n == 0) return p;
      return BigRational(mu12) * (n + 1) * (p - mu12) / n;
    }
    return BigRational(mu12) * (p - mu12);
  }
  if (mu22 % 2 == 0) return BigRational(n + 1);
  return BigRational(mu22 + 1) * (p + mu22 + 1) / n;
}

int reduced_me_sign(ReducedElement which, int mu22) {
  const int base = mu22 % 2 == 0 ? 1 : -1;
  return tilde(which) ? base * parity_sign(mu22) : base;
}

RadicalScalar reduced_me(ReducedElement which, int mu12, int mu22, const BigRational& p) {
  BigRational squared = reduced_me_squared(which, mu12, mu22, p);
  if (sgn(squared) < 0)
    throw std::domain_error("reduced matrix element outside V(p): mu12=" + std::to_string(mu12) +
                            " mu22=" + std::to_string(mu22) + " p=" + p.get_str());
  RadicalScalar value = sqrt_rational(squared);
  return reduced_me_sign(which, mu22) < 0 ? -value : value;
}

BigRational h1_eigenvalue(const GZPattern& mu, const BigRational& p) { return -p / 2 + mu.mu11; }

BigRational h2_eigenvalue(const GZPattern& mu, const BigRational& p) {
  return p / 2 + mu.mu12 + mu.mu22 - mu.mu11;
}

namespace {

// c_j^+ through the Wigner-Eckart factorization: CGC times reduced element.
void raise(int index, const GZPattern& mu, const RadicalScalar& c, const BigRational& p, GZVector& out) {
  const TensorComponent component = index == 1 ? TensorComponent::C1 : TensorComponent::C2;
  const SourceRow row = mu.mu11 == mu.mu12 ? SourceRow::Upper : SourceRow::Lower;
  for (TargetShift shift : {TargetShift::Mu12, TargetShift::Mu22}) {
    const CGCKey key{component, shift, row};
    auto target = cgc_target(key, mu);
    if (!target) continue;
    RadicalScalar coefficient = cgc(key, mu.mu12, mu.mu22);
    if (coefficient.is_zero()) continue;
    ReducedElement which = shift == TargetShift::Mu12 ? ReducedElement::G1 : ReducedElement::G2;
    if (index == 1) which = which == ReducedElement::G1 ? ReducedElement::G1Tilde : ReducedElement::G2Tilde;
    // G1 vanishes at mu12 = p; skip the evaluation so no radicand is formed.
    if (sgn(reduced_me_squared(which, mu.mu12, mu.mu22, p)) == 0) continue;
    out.add(*target, c * coefficient * reduced_me(which, mu.mu12, mu.mu22, p));
  }
}

// c_j^- from the explicit lowering rules.
void lower(int index, const GZPattern& mu, const RadicalScalar& c, const BigRational& p, GZVector& out) {
  const int a = mu.mu12;
  const int b = mu.mu22;
  const long n = a + b;
  const bool upper = mu.mu11 == a;
  auto emit = [&](GZPattern target, const RadicalScalar& factor, ReducedElement which, int g12, int g22) {
    if (!target.valid()) return;
    if (sgn(reduced_me_squared(which, g12, g22, p)) == 0) return;
    out.add(target, c * factor * reduced_me(which, g12, g22, p));
  };
  const RadicalScalar sign_b(parity_sign(b));
  if (index == 1) {
    if (upper) {
      emit({a - 1, b, a - 1}, sign_b, ReducedElement::G1, a - 1, b);
      if (b > 0) emit({a, b - 1, a - 1}, sqrt_rational(make_rational(1, n)) * sign_b, ReducedElement::G2, a, b - 1);
    } else {
      emit({a - 1, b, a - 2}, sqrt_rational(make_rational(n - 1, n)) * sign_b, ReducedElement::G1, a - 1, b);
    }
  } else {
    if (upper) {
      if (b > 0) emit({a, b - 1, a}, sqrt_rational(make_rational(n - 1, n)), ReducedElement::G2, a, b - 1);
    } else {
      emit({a - 1, b, a - 1}, sqrt_rational(make_rational(1, n)), ReducedElement::G1, a - 1, b);
      if (b > 0) emit({a, b - 1, a - 1}, RadicalScalar(1), ReducedElement::G2, a, b - 1);
    }
  }
}

}  // namespace

GZVector apply_c_unfiltered(const Generator& g, const GZVector& v, const BigRational& p) {
  if (g.index != 1 && g.index != 2) throw std::invalid_argument("GZ action is for m = n = 1, got " + to_string(g));
  GZVector out;
  for (const auto& [mu, c] : v) {
    if (!mu.valid()) throw std::invalid_argument("invalid GZ pattern " + to_string(mu));
    if (g.sign > 0) {
      raise(g.index, mu, c, p, out);
    } else {
      lower(g.index, mu, c, p, out);
    }
  }
  return out;
}

GZVector apply_c(const Generator& g, const GZVector& v, const BigRational& p, FockModule mode) {
  if (sgn(p) <= 0) throw std::invalid_argument("order p must be positive");
  if (mode == FockModule::Induced) return apply_c_unfiltered(g, v, p);
  check_positive_integer(p);
  for (const auto& [mu, c] : v) {
    if (p < mu.mu12) throw std::invalid_argument("pattern " + to_string(mu) + " is not in V(" + p.get_str() + ")");
  }
  GZVector out = apply_c_unfiltered(g, v, p);
  for (const auto& [mu, c] : out) {
    if (p < mu.mu12)
      throw std::logic_error(to_string(g) + " leaves V(" + p.get_str() + ") at " + to_string(mu) + " with coefficient " +
                             c.to_string());
  }
  return out;
}

}  // namespace parafock::gz
