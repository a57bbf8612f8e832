// Shared helpers for the unit tests.
#pragma once

#include <random>
#include <string>
#include <vector>

#include "lgfan/problem.hpp"
#include "naive_gb.hpp"

namespace testing_support {

using namespace lgfan;

inline Ring poly_ring(int n) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return make_ring(n, RingKind::commutative, Homogenization::none, names);
}

inline Ring xy_ring() { return make_ring(2, RingKind::commutative, Homogenization::none, {"x", "y"}); }

inline WeylElement P(const Ring& r, const std::string& s) { return parse_polynomial(r, s); }

inline QVec Q(std::initializer_list<long> xs) {
  QVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline oracle::Poly to_oracle(const WeylElement& p) {
  oracle::Poly r;
  for (auto& [e, c] : p.terms()) r[e] = c;
  return r;
}

inline WeylElement from_oracle(const Ring& r, const oracle::Poly& p) {
  WeylElement out(r);
  for (auto& [e, c] : p) out.add_term(e, c);
  return out;
}

// Random polynomial with `terms` terms of total degree <= deg and small coefficients.
inline WeylElement random_poly(const Ring& r, std::mt19937& rng, int terms, int deg, bool constant = false) {
  const int slots = r->slots();
  std::uniform_int_distribution<int> coef(-3, 3), slot(0, slots - 1), total(0, deg);
  WeylElement p(r);
  if (constant) p.add_term(Exponent(slots, 0), 1);
  for (int t = 0; t < terms; ++t) {
    Exponent e(slots, 0);
    int d = total(rng);
    for (int k = 0; k < d; ++k) ++e[slot(rng)];
    int c = coef(rng);
    if (c == 0) c = 1;
    p.add_term(e, c);
  }
  if (p.is_zero()) p = WeylElement::variable(r, 0);
  return p;
}

// Random alpha-homogeneous polynomial of alpha-degree `deg` (may be zero if no monomial exists).
inline WeylElement random_quasi_homogeneous(const Ring& r, const std::vector<int>& alpha, int deg, std::mt19937& rng,
                                            int terms) {
  const int n = r->n;
  std::vector<Exponent> monos;
  Exponent e(n, 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == n) {
      if (left == 0) monos.push_back(e);
      return;
    }
    for (int k = 0; k * alpha[i] <= left; ++k) {
      e[i] = k;
      self(self, i + 1, left - k * alpha[i]);
    }
    e[i] = 0;
  };
  rec(rec, 0, deg);
  WeylElement p(r);
  if (monos.empty()) return p;
  std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
  std::uniform_int_distribution<int> coef(1, 3);
  for (int t = 0; t < terms; ++t) p.add_term(monos[pick(rng)], coef(rng) * (t % 2 ? -1 : 1));
  return p;
}

inline QVec random_vec(std::mt19937& rng, int d, int lo, int hi) {
  std::uniform_int_distribution<int> u(lo, hi);
  QVec v;
  for (int i = 0; i < d; ++i) v.emplace_back(u(rng));
  return v;
}

}  // namespace testing_support
