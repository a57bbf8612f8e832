#include "lgfan/groebner.hpp"

#include <algorithm>

namespace lgfan {

Ideal::Ideal(Ring r, std::vector<WeylElement> gens) : ring(std::move(r)) {
  for (auto& g : gens) {
    if (!g.ring()->same_ring(*ring)) throw SignatureMismatch("generator ring");
    if (!g.is_zero()) generators.push_back(std::move(g));
  }
}

namespace {

// Working representation: terms sorted by decreasing order.
struct Term {
  Exponent e;
  Scalar c;
};
using Poly = std::vector<Term>;

class Engine {
 public:
  Engine(Ring ring, const MatrixOrder& order) : ring_(std::move(ring)), order_(order) {}

  Poly from(const WeylElement& p) const {
    Poly out;
    out.reserve(p.size());
    for (auto& [e, c] : p.terms()) out.push_back({e, c});
    sort_desc(out);
    return out;
  }

  WeylElement to(const Poly& p) const {
    WeylElement r(ring_);
    for (auto& t : p) r.add_term(t.e, t.c);
    return r;
  }

  void sort_desc(Poly& p) const {
    std::sort(p.begin(), p.end(), [&](const Term& a, const Term& b) { return order_.less(b.e, a.e); });
  }

  // c * x^m * g, sorted.
  Poly mul_left(const Exponent& m, const Scalar& c, const Poly& g) const {
    Poly out;
    if (!ring_->weyl()) {
      out.reserve(g.size());
      for (auto& t : g) {
        Exponent e = t.e;
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += m[i];
        out.push_back({std::move(e), c * t.c});
      }
      return out;
    }
    WeylElement::TermMap acc;
    for (auto& t : g) multiply_monomials(*ring_, m, t.e, c * t.c, acc);
    out.reserve(acc.size());
    for (auto& [e, v] : acc) out.push_back({e, v});
    sort_desc(out);
    return out;
  }

  // f[from..] -= g, both sorted; prefix kept.
  void subtract_suffix(Poly& f, std::size_t from, const Poly& g) const {
    Poly out;
    out.reserve(f.size() + g.size());
    for (std::size_t i = 0; i < from; ++i) out.push_back(std::move(f[i]));
    std::size_t i = from, j = 0;
    while (i < f.size() || j < g.size()) {
      if (j == g.size()) {
        out.push_back(std::move(f[i++]));
      } else if (i == f.size()) {
        out.push_back({g[j].e, -g[j].c});
        ++j;
      } else {
        int cmp = order_.compare(f[i].e, g[j].e);
        if (cmp > 0) {
          out.push_back(std::move(f[i++]));
        } else if (cmp < 0) {
          out.push_back({g[j].e, -g[j].c});
          ++j;
        } else {
          Scalar v = f[i].c - g[j].c;
          if (v != 0) out.push_back({std::move(f[i].e), std::move(v)});
          ++i;
          ++j;
        }
      }
    }
    f.swap(out);
  }

  const std::vector<Poly>* basis = nullptr;
  std::vector<char>* alive = nullptr;

  int find_reducer(const Exponent& e, int skip = -1) const {
    for (std::size_t k = 0; k < basis->size(); ++k) {
      if (static_cast<int>(k) == skip || (alive && !(*alive)[k])) continue;
      if (divides((*basis)[k][0].e, e)) return static_cast<int>(k);
    }
    return -1;
  }

  // Reduces terms from position `pos` on; top_only stops at the first irreducible term.
  void reduce(Poly& f, bool top_only, int skip = -1, std::size_t pos = 0) const {
    while (pos < f.size()) {
      int k = find_reducer(f[pos].e, skip);
      if (k < 0) {
        if (top_only) return;
        ++pos;
        continue;
      }
      const Poly& g = (*basis)[k];
      Exponent m = exponent_difference(f[pos].e, g[0].e);
      Scalar c = f[pos].c / g[0].c;
      subtract_suffix(f, pos, mul_left(m, c, g));
    }
  }

  void make_monic(Poly& f) const {
    if (f.empty()) return;
    Scalar lc = f[0].c;
    if (lc == 1) return;
    for (auto& t : f) t.c /= lc;
  }

  const Ring& ring() const { return ring_; }
  const MatrixOrder& order() const { return order_; }

 private:
  Ring ring_;
  const MatrixOrder& order_;
};

Exponent lcm(const Exponent& a, const Exponent& b) {
  Exponent l(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) l[i] = std::max(a[i], b[i]);
  return l;
}

bool coprime(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) return false;
  return true;
}

struct Pair {
  int i, j;
  Exponent lcm;
  mpz_class degree;
};

mpz_class first_row_value(const MatrixOrder& o, const Exponent& e) {
  mpz_class s = 0;
  const auto& r = o.rows()[0];
  for (std::size_t i = 0; i < e.size(); ++i) s += r[i] * e[i];
  return s;
}

std::vector<WeylElement> finish(Engine& eng, std::vector<Poly> polys) {
  // minimalize
  std::vector<char> keep(polys.size(), 1);
  for (std::size_t a = 0; a < polys.size(); ++a) {
    if (polys[a].empty()) keep[a] = 0;
  }
  for (std::size_t a = 0; a < polys.size(); ++a) {
    if (!keep[a]) continue;
    for (std::size_t b = 0; b < polys.size(); ++b) {
      if (a == b || !keep[b]) continue;
      if (divides(polys[b][0].e, polys[a][0].e)) {
        if (polys[b][0].e != polys[a][0].e || b < a) {
          keep[a] = 0;
          break;
        }
      }
    }
  }
  std::vector<Poly> minimal;
  for (std::size_t a = 0; a < polys.size(); ++a)
    if (keep[a]) minimal.push_back(std::move(polys[a]));
  eng.basis = &minimal;
  eng.alive = nullptr;
  for (std::size_t a = 0; a < minimal.size(); ++a) {
    eng.reduce(minimal[a], false, static_cast<int>(a), 1);
    eng.make_monic(minimal[a]);
  }
  std::sort(minimal.begin(), minimal.end(),
            [&](const Poly& x, const Poly& y) { return eng.order().less(x[0].e, y[0].e); });
  std::vector<WeylElement> out;
  for (auto& p : minimal) out.push_back(eng.to(p));
  return out;
}

}  // namespace

WeylElement s_pair(const WeylElement& g1, const WeylElement& g2, const MatrixOrder& order) {
  LeadingData a = leading_data(g1, order), b = leading_data(g2, order);
  Exponent l = lcm(a.exp, b.exp);
  WeylElement s = multiply_monomial_left(exponent_difference(l, a.exp), b.coeff, g1);
  s -= multiply_monomial_left(exponent_difference(l, b.exp), a.coeff, g2);
  return s;
}

ReducedBasis buchberger(const Ideal& ideal, const MatrixOrder& order) {
  if (!order.is_well_order()) throw std::invalid_argument("buchberger needs a well order");
  if (order.slots() != ideal.ring->slots()) throw SignatureMismatch("order arity");
  Engine eng(ideal.ring, order);
  std::vector<Poly> G;
  std::vector<char> alive;
  eng.basis = &G;
  eng.alive = &alive;
  std::vector<Pair> pairs;
  // processed[k] holds the partners j < k whose pair has been treated or discarded
  std::vector<std::vector<char>> pending;

  const bool commutative = !ideal.ring->weyl();

  auto add = [&](Poly p) {
    eng.make_monic(p);
    int k = static_cast<int>(G.size());
    G.push_back(std::move(p));
    alive.push_back(1);
    pending.emplace_back(k, 0);
    for (int i = 0; i < k; ++i) {
      if (!alive[i]) continue;
      Exponent l = lcm(G[i][0].e, G[k][0].e);
      mpz_class d = first_row_value(order, l);
      pairs.push_back({i, k, std::move(l), std::move(d)});
      pending[k][i] = 1;
    }
  };

  std::vector<Poly> gens;
  for (auto& g : ideal.generators) gens.push_back(eng.from(g));
  std::sort(gens.begin(), gens.end(), [&](const Poly& a, const Poly& b) {
    mpz_class da = first_row_value(order, a[0].e), db = first_row_value(order, b[0].e);
    if (da != db) return da < db;
    return order.less(a[0].e, b[0].e);
  });
  for (auto& g : gens) {
    eng.reduce(g, true);
    if (!g.empty()) add(std::move(g));
  }

  auto is_pending = [&](int a, int b) {
    if (a < b) std::swap(a, b);
    return pending[a][b] != 0;
  };

  while (!pairs.empty()) {
    std::size_t best = 0;
    for (std::size_t t = 1; t < pairs.size(); ++t) {
      const Pair& x = pairs[t];
      const Pair& y = pairs[best];
      if (x.degree != y.degree) {
        if (x.degree < y.degree) best = t;
        continue;
      }
      int c = order.compare(x.lcm, y.lcm);
      if (c < 0 || (c == 0 && std::make_pair(x.j, x.i) < std::make_pair(y.j, y.i))) best = t;
    }
    Pair pr = pairs[best];
    pairs.erase(pairs.begin() + static_cast<long>(best));
    pending[pr.j][pr.i] = 0;
    if (!alive[pr.i] || !alive[pr.j]) continue;
    if (commutative && coprime(G[pr.i][0].e, G[pr.j][0].e)) continue;
    bool chain = false;
    for (int k = 0; k < static_cast<int>(G.size()) && !chain; ++k) {
      if (k == pr.i || k == pr.j || !alive[k]) continue;
      if (!divides(G[k][0].e, pr.lcm)) continue;
      if (!is_pending(pr.i, k) && !is_pending(pr.j, k)) chain = true;
    }
    if (chain) continue;
    const Poly& a = G[pr.i];
    const Poly& b = G[pr.j];
    Poly s = eng.mul_left(exponent_difference(pr.lcm, a[0].e), b[0].c, a);
    eng.subtract_suffix(s, 0, eng.mul_left(exponent_difference(pr.lcm, b[0].e), a[0].c, b));
    eng.reduce(s, true);
    if (!s.empty()) {
      eng.reduce(s, false, -1, 1);
      add(std::move(s));
    }
  }

  ReducedBasis out;
  out.order = order;
  std::vector<Poly> live;
  for (std::size_t k = 0; k < G.size(); ++k)
    if (alive[k]) live.push_back(std::move(G[k]));
  out.elements = finish(eng, std::move(live));
  out.homogeneous = std::all_of(out.elements.begin(), out.elements.end(),
                                [](const WeylElement& g) { return is_homogeneous(g); });
  return out;
}

std::vector<WeylElement> initial_ideal(const ReducedBasis& basis, const Weight& w) {
  std::vector<WeylElement> out;
  for (auto& g : basis.elements) out.push_back(initial_form(g, w));
  return out;
}

bool membership(const WeylElement& p, const ReducedBasis& basis) {
  return divide(p, basis.elements, basis.order).remainder.is_zero();
}

Ideal homogenize_ideal(const Ideal& ideal, Homogenization mode, std::vector<int> alpha) {
  std::vector<WeylElement> gens;
  for (auto& g : ideal.generators) gens.push_back(homogenize(g, mode, alpha));
  Ring r = gens.empty() ? with_homogenization(ideal.ring, mode, alpha) : gens.front().ring();
  return Ideal(r, std::move(gens));
}

namespace {

WeylElement strip_h(const WeylElement& g) {
  const int hs = g.ring()->h_slot();
  int low = -1;
  for (auto& [e, c] : g.terms()) low = (low < 0) ? e[hs] : std::min(low, e[hs]);
  if (low <= 0) return g;
  WeylElement r(g.ring());
  for (auto& [e, c] : g.terms()) {
    Exponent f = e;
    f[hs] -= low;
    r.add_term(f, c);
  }
  return r;
}

}  // namespace

Ideal h01_ideal(const Ideal& d_ideal) {
  const RingSignature& sig = *d_ideal.ring;
  if (!sig.weyl() || sig.hom != Homogenization::none) throw SignatureMismatch("h01_ideal expects an ideal of D");
  Ideal h = homogenize_ideal(d_ideal, Homogenization::h01);
  const RingSignature& hs = *h.ring;
  QVec beta(hs.slots(), 0);
  for (int i = 0; i < hs.n; ++i) beta[hs.n + i] = 1;
  MatrixOrder o = from_rows(hs, {h01_degree_row(hs), beta});
  ReducedBasis gb = buchberger(h, o);
  std::vector<WeylElement> gens;
  for (auto& g : gb.elements) gens.push_back(strip_h(g));
  return Ideal(h.ring, std::move(gens));
}

LocalBasis local_standard_basis_from_homogenized(const Ideal& homogenized, const Weight& w) {
  const RingSignature& sig = *homogenized.ring;
  MatrixOrder order = lifted_order(sig, w);
  ReducedBasis gb = buchberger(homogenized, order);
  LocalBasis out;
  int slot;
  QVec grading;
  if (sig.hom == Homogenization::alphaH) {
    slot = sig.h_slot();
    grading = alpha_degree_row(sig);
  } else if (sig.hom == Homogenization::doubleH) {
    slot = sig.hprime_slot();
    grading = total_degree_row(sig);
  } else {
    throw SignatureMismatch("local standard bases come from alpha- or h'-homogenized ideals");
  }
  out.order = dehomogenize_order(order, grading, slot);
  for (auto& g : gb.elements) {
    WeylElement d = dehomogenize(g, slot);
    if (std::find(out.elements.begin(), out.elements.end(), d) == out.elements.end())
      out.elements.push_back(std::move(d));
  }
  return out;
}

LocalBasis local_standard_basis(const Ideal& ideal, const Weight& w) {
  const RingSignature& sig = *ideal.ring;
  if (!sig.weyl()) {
    if (sig.hom != Homogenization::none) throw SignatureMismatch("expected an ideal of k[x]");
    if (!in_uloc(w)) throw std::invalid_argument("weight outside Uloc");
    return local_standard_basis_from_homogenized(homogenize_ideal(ideal, Homogenization::alphaH), w);
  }
  if (!in_wloc(sig.n, w)) throw std::invalid_argument("weight outside Wloc");
  Ideal h01 = sig.hom == Homogenization::h01 ? ideal : h01_ideal(ideal);
  return local_standard_basis_from_homogenized(homogenize_ideal(h01, Homogenization::doubleH), w);
}

namespace {

std::vector<WeylElement> interreduce(const Ring& ring, const MatrixOrder& order,
                                     std::vector<WeylElement> elems) {
  Engine eng(ring, order);
  std::vector<Poly> polys;
  for (auto& e : elems)
    if (!e.is_zero()) polys.push_back(eng.from(e));
  return finish(eng, std::move(polys));
}

}  // namespace

ReducedBasis global_basis(const Ideal& ideal) {
  const RingSignature& sig = *ideal.ring;
  ReducedBasis out;
  if (sig.hom != Homogenization::none) {
    return buchberger(ideal, degrevlex(sig));
  }
  Ideal h = sig.weyl() ? homogenize_ideal(ideal, Homogenization::h11)
                       : homogenize_ideal(ideal, Homogenization::alphaH);
  const RingSignature& hs = *h.ring;
  QVec grading = sig.weyl() ? total_degree_row(hs) : alpha_degree_row(hs);
  MatrixOrder o = from_rows(hs, {grading});
  ReducedBasis gb = buchberger(h, o);
  out.order = dehomogenize_order(o, grading, hs.h_slot());
  std::vector<WeylElement> d;
  for (auto& g : gb.elements) d.push_back(dehomogenize_h(g));
  out.elements = interreduce(ideal.ring, out.order, std::move(d));
  return out;
}

bool same_ideal(const Ideal& a, const Ideal& b) {
  ReducedBasis ga = global_basis(a), gb = global_basis(b);
  for (auto& g : b.generators)
    if (!membership(g, ga)) return false;
  for (auto& g : a.generators)
    if (!membership(g, gb)) return false;
  return true;
}

}  // namespace lgfan
