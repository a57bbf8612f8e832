#include "lgfan/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace lgfan {

int RingSignature::slots() const {
  int s = weyl() ? 2 * n : n;
  if (has_h()) ++s;
  if (has_hprime()) ++s;
  return s;
}

std::string RingSignature::slot_name(int s) const {
  auto xname = [&](int i) {
    return i < static_cast<int>(names.size()) ? names[i] : "x" + std::to_string(i + 1);
  };
  if (s < n) return xname(s);
  if (weyl() && s < 2 * n) return "d" + xname(s - n);
  if (has_h() && s == h_slot()) return "h";
  if (has_hprime() && s == hprime_slot()) return "hp";
  throw std::out_of_range("slot index");
}

bool RingSignature::same_ring(const RingSignature& o) const {
  auto mask = [](const std::vector<char>& m, int n) {
    std::vector<char> r(m);
    r.resize(n, 0);
    return r;
  };
  return n == o.n && kind == o.kind && hom == o.hom && alpha == o.alpha &&
         mask(commuting, n) == mask(o.commuting, o.n);
}

Ring make_ring(int n, RingKind kind, Homogenization hom, std::vector<std::string> names,
               std::vector<int> alpha) {
  if (n < 0) throw std::invalid_argument("negative variable count");
  if (hom == Homogenization::doubleH || hom == Homogenization::h01 || hom == Homogenization::h11) {
    if (kind != RingKind::weyl) throw SignatureMismatch("differential homogenization needs a Weyl ring");
  }
  if (hom == Homogenization::alphaH) {
    if (kind != RingKind::commutative) throw SignatureMismatch("alpha homogenization needs a polynomial ring");
    if (alpha.empty()) alpha.assign(n, 1);
    if (static_cast<int>(alpha.size()) != n) throw std::invalid_argument("alpha arity");
    for (int a : alpha)
      if (a <= 0) throw std::invalid_argument("alpha entries must be positive");
  } else {
    alpha.clear();
  }
  auto r = std::make_shared<RingSignature>();
  r->n = n;
  r->kind = kind;
  r->hom = hom;
  r->alpha = std::move(alpha);
  r->names = std::move(names);
  return r;
}

Ring with_homogenization(const Ring& r, Homogenization hom, std::vector<int> alpha) {
  auto out = make_ring(r->n, r->kind, hom, r->names, std::move(alpha));
  auto m = std::const_pointer_cast<RingSignature>(out);
  m->commuting = r->commuting;
  return out;
}

Ring with_commuting(const Ring& r, std::vector<char> mask) {
  auto m = std::make_shared<RingSignature>(*r);
  bool any = std::any_of(mask.begin(), mask.end(), [](char c) { return c != 0; });
  if (any) {
    mask.resize(r->n, 0);
    m->commuting = std::move(mask);
  } else {
    m->commuting.clear();
  }
  return m;
}

// ---------------------------------------------------------------------------

WeylElement::WeylElement(Ring r, TermMap terms) : ring_(std::move(r)) {
  for (auto& [e, c] : terms) {
    if (static_cast<int>(e.size()) != ring_->slots()) throw SignatureMismatch("exponent arity");
    if (c != 0) terms_.emplace(e, c);
  }
}

WeylElement WeylElement::constant(Ring r, const Scalar& c) {
  WeylElement p(r);
  if (c != 0) p.terms_.emplace(Exponent(r->slots(), 0), c);
  return p;
}

WeylElement WeylElement::monomial(Ring r, Exponent e, const Scalar& c) {
  WeylElement p(r);
  p.add_term(e, c);
  return p;
}

WeylElement WeylElement::variable(Ring r, int slot) {
  Exponent e(r->slots(), 0);
  e.at(slot) = 1;
  return monomial(r, e);
}

Scalar WeylElement::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void WeylElement::add_term(const Exponent& e, const Scalar& c) {
  if (c == 0) return;
  if (static_cast<int>(e.size()) != ring_->slots()) throw SignatureMismatch("exponent arity");
  for (int v : e)
    if (v < 0) throw std::invalid_argument("negative exponent");
  auto [it, fresh] = terms_.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

WeylElement WeylElement::operator-() const {
  WeylElement r(*this);
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

static void check_same(const WeylElement& a, const WeylElement& b) {
  if (!a.ring() || !b.ring() || !a.ring()->same_ring(*b.ring()))
    throw SignatureMismatch("elements live in different rings");
}

WeylElement& WeylElement::operator+=(const WeylElement& o) {
  check_same(*this, o);
  for (auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

WeylElement& WeylElement::operator-=(const WeylElement& o) {
  check_same(*this, o);
  for (auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

WeylElement& WeylElement::operator*=(const Scalar& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

std::vector<Exponent> WeylElement::support() const {
  std::vector<Exponent> s;
  s.reserve(terms_.size());
  for (auto& [e, c] : terms_) s.push_back(e);
  return s;
}

WeylElement WeylElement::recast(Ring r) const {
  if (r->slots() != ring_->slots()) throw SignatureMismatch("recast arity");
  WeylElement p(std::move(r));
  p.terms_ = terms_;
  return p;
}

std::string scalar_to_string(const Scalar& c) { return c.get_str(); }

Scalar parse_scalar(const std::string& s) {
  Scalar q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("not a rational: " + s);
  q.canonicalize();
  return q;
}

std::string WeylElement::to_string() const {
  if (terms_.empty()) return "0";
  // Print by decreasing total degree, then decreasing exponent.
  std::vector<const std::pair<const Exponent, Scalar>*> order;
  for (auto& t : terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(), [](auto* a, auto* b) {
    int da = total_degree(a->first), db = total_degree(b->first);
    if (da != db) return da > db;
    return a->first > b->first;
  });
  std::ostringstream os;
  bool first = true;
  for (auto* t : order) {
    const Scalar& c = t->second;
    bool neg = c < 0;
    Scalar a = neg ? Scalar(-c) : c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    std::vector<std::string> factors;
    for (int s = 0; s < static_cast<int>(t->first.size()); ++s) {
      int k = t->first[s];
      if (k == 0) continue;
      std::string f = ring_->slot_name(s);
      if (k > 1) f += "^" + std::to_string(k);
      factors.push_back(f);
    }
    bool unit = (a == 1);
    if (!unit || factors.empty()) {
      os << scalar_to_string(a);
      if (!factors.empty()) os << "*";
    }
    for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
  }
  return os.str();
}

WeylElement add(const WeylElement& p, const WeylElement& q) {
  WeylElement r(p);
  r += q;
  return r;
}
WeylElement operator+(const WeylElement& p, const WeylElement& q) { return add(p, q); }
WeylElement operator-(const WeylElement& p, const WeylElement& q) {
  WeylElement r(p);
  r -= q;
  return r;
}
WeylElement operator*(const Scalar& c, const WeylElement& p) {
  WeylElement r(p);
  r *= c;
  return r;
}

// ---------------------------------------------------------------------------

void multiply_monomials(const RingSignature& sig, const Exponent& a, const Exponent& b,
                        const Scalar& c, WeylElement::TermMap& out) {
  const int s = static_cast<int>(a.size());
  Exponent base(s);
  for (int i = 0; i < s; ++i) base[i] = a[i] + b[i];
  auto emit = [&](const Exponent& e, const Scalar& v) {
    auto [it, fresh] = out.emplace(e, v);
    if (!fresh) {
      it->second += v;
      if (it->second == 0) out.erase(it);
    }
  };
  if (!sig.weyl() || c == 0) {
    emit(base, c);
    return;
  }
  const int n = sig.n;
  // pairs where d_i^{a} meets x_i^{b}
  std::vector<int> idx, lim;
  for (int i = 0; i < n; ++i) {
    if (sig.pair_commutes(i)) continue;
    int m = std::min(a[n + i], b[i]);
    if (m > 0) {
      idx.push_back(i);
      lim.push_back(m);
    }
  }
  if (idx.empty()) {
    emit(base, c);
    return;
  }
  std::vector<int> j(idx.size(), 0);
  while (true) {
    Exponent e = base;
    mpz_class coef = 1;
    int total = 0;
    for (std::size_t t = 0; t < idx.size(); ++t) {
      int i = idx[t], jj = j[t];
      if (jj == 0) continue;
      int bd = a[n + i], ax = b[i];
      mpz_class binom;
      mpz_bin_uiui(binom.get_mpz_t(), bd, jj);
      mpz_class fall = 1;
      for (int r = 0; r < jj; ++r) fall *= (ax - r);
      coef *= binom * fall;
      e[i] -= jj;
      e[n + i] -= jj;
      total += jj;
    }
    if (total > 0) {
      switch (sig.hom) {
        case Homogenization::none: break;
        case Homogenization::h01: e[sig.h_slot()] += total; break;
        case Homogenization::h11: e[sig.h_slot()] += 2 * total; break;
        case Homogenization::doubleH:
          e[sig.h_slot()] += total;
          e[sig.hprime_slot()] += total;
          break;
        case Homogenization::alphaH: break;
      }
    }
    emit(e, c * Scalar(coef));
    std::size_t t = 0;
    while (t < j.size() && j[t] == lim[t]) j[t++] = 0;
    if (t == j.size()) break;
    ++j[t];
  }
}

WeylElement multiply(const WeylElement& p, const WeylElement& q) {
  check_same(p, q);
  WeylElement::TermMap out;
  const RingSignature& sig = *p.ring();
  for (auto& [ea, ca] : p.terms())
    for (auto& [eb, cb] : q.terms()) multiply_monomials(sig, ea, eb, ca * cb, out);
  return WeylElement(p.ring(), std::move(out));
}

WeylElement operator*(const WeylElement& p, const WeylElement& q) { return multiply(p, q); }

WeylElement power(const WeylElement& p, unsigned k) {
  WeylElement r = WeylElement::constant(p.ring(), 1);
  for (unsigned i = 0; i < k; ++i) r = multiply(r, p);
  return r;
}

WeylElement multiply_monomial_left(const Exponent& m, const Scalar& c, const WeylElement& q) {
  WeylElement::TermMap out;
  for (auto& [e, v] : q.terms()) multiply_monomials(*q.ring(), m, e, c * v, out);
  return WeylElement(q.ring(), std::move(out));
}

int total_degree(const Exponent& e) {
  int d = 0;
  for (int v : e) d += v;
  return d;
}

int total_degree(const WeylElement& p) {
  int d = -1;
  for (auto& [e, c] : p.terms()) d = std::max(d, total_degree(e));
  return d;
}

// ---------------------------------------------------------------------------

namespace {

int beta_degree(const RingSignature& sig, const Exponent& e) {
  int d = 0;
  for (int i = 0; i < sig.n; ++i) d += e[sig.n + i];
  return d;
}

int alpha_degree(const RingSignature& sig, const Exponent& e) {
  int d = 0;
  for (int i = 0; i < sig.n; ++i) d += e[i];
  return d;
}

}  // namespace

WeylElement homogenize(const WeylElement& p, Homogenization mode, std::vector<int> alpha) {
  const RingSignature& sig = *p.ring();
  auto grade = [&](const Exponent& e) -> long {
    switch (mode) {
      case Homogenization::h01: return beta_degree(sig, e);
      case Homogenization::h11: return alpha_degree(sig, e) + beta_degree(sig, e);
      case Homogenization::doubleH: return total_degree(e);
      case Homogenization::alphaH: {
        long d = 0;
        for (int i = 0; i < sig.n; ++i) d += static_cast<long>(alpha[i]) * e[i];
        return d;
      }
      default: return 0;
    }
  };
  switch (mode) {
    case Homogenization::h01:
    case Homogenization::h11:
      if (!sig.weyl() || sig.hom != Homogenization::none)
        throw SignatureMismatch("h01/h11 homogenization expects an element of D");
      break;
    case Homogenization::doubleH:
      if (!sig.weyl() || sig.hom != Homogenization::h01)
        throw SignatureMismatch("h' homogenization expects an element of h01(D)");
      break;
    case Homogenization::alphaH:
      if (sig.weyl() || sig.hom != Homogenization::none)
        throw SignatureMismatch("alpha homogenization expects a polynomial");
      if (alpha.empty()) alpha.assign(sig.n, 1);
      if (static_cast<int>(alpha.size()) != sig.n) throw std::invalid_argument("alpha arity");
      break;
    default: throw SignatureMismatch("unsupported homogenization");
  }
  Ring target = with_homogenization(p.ring(), mode, alpha);
  WeylElement r(target);
  long top = 0;
  for (auto& [e, c] : p.terms()) top = std::max(top, grade(e));
  for (auto& [e, c] : p.terms()) {
    Exponent f = e;
    f.push_back(static_cast<int>(top - grade(e)));
    r.add_term(f, c);
  }
  return r;
}

WeylElement dehomogenize(const WeylElement& p, int slot) {
  const RingSignature& sig = *p.ring();
  Ring target;
  if (sig.has_hprime() && slot == sig.hprime_slot()) {
    target = with_homogenization(p.ring(), Homogenization::h01);
  } else if (sig.has_h() && !sig.has_hprime() && slot == sig.h_slot()) {
    target = with_homogenization(p.ring(), Homogenization::none);
  } else {
    throw SignatureMismatch("no homogenizing variable at that slot");
  }
  WeylElement r(target);
  for (auto& [e, c] : p.terms()) {
    Exponent f = e;
    f.erase(f.begin() + slot);
    r.add_term(f, c);
  }
  return r;
}

WeylElement dehomogenize_h(const WeylElement& p) { return dehomogenize(p, p.ring()->h_slot()); }
WeylElement dehomogenize_hprime(const WeylElement& p) {
  return dehomogenize(p, p.ring()->hprime_slot());
}

bool is_homogeneous(const WeylElement& p) {
  const RingSignature& sig = *p.ring();
  bool first = true;
  long deg = 0;
  for (auto& [e, c] : p.terms()) {
    long d = 0;
    switch (sig.hom) {
      case Homogenization::h01: d = beta_degree(sig, e) + e[sig.h_slot()]; break;
      case Homogenization::alphaH:
        for (int i = 0; i < sig.n; ++i) d += static_cast<long>(sig.alpha[i]) * e[i];
        d += e[sig.h_slot()];
        break;
      default: d = total_degree(e);
    }
    if (first) {
      deg = d;
      first = false;
    } else if (d != deg) {
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------

Scalar weight_dot(const RingSignature& sig, const Weight& w, const Exponent& e) {
  const int d = sig.weight_dim();
  if (static_cast<int>(w.size()) != d) throw std::invalid_argument("weight arity");
  Scalar s = 0;
  for (int i = 0; i < d; ++i)
    if (e[i] != 0) s += w[i] * e[i];
  return s;
}

Scalar weight_order_of(const WeylElement& p, const Weight& w) {
  if (p.is_zero()) throw std::invalid_argument("weight order of zero");
  bool first = true;
  Scalar best;
  for (auto& [e, c] : p.terms()) {
    Scalar s = weight_dot(*p.ring(), w, e);
    if (first || s > best) best = s;
    first = false;
  }
  return best;
}

WeylElement initial_form(const WeylElement& p, const Weight& w) {
  if (p.is_zero()) return p;
  Scalar top = weight_order_of(p, w);
  WeylElement r(p.ring());
  for (auto& [e, c] : p.terms())
    if (weight_dot(*p.ring(), w, e) == top) r.add_term(e, c);
  return r;
}

std::vector<WeylElement> weight_components(const WeylElement& p, const Weight& w) {
  std::map<Scalar, WeylElement> parts;
  for (auto& [e, c] : p.terms()) {
    Scalar s = weight_dot(*p.ring(), w, e);
    auto it = parts.find(s);
    if (it == parts.end()) it = parts.emplace(s, WeylElement(p.ring())).first;
    it->second.add_term(e, c);
  }
  std::vector<WeylElement> out;
  for (auto& [s, q] : parts) out.push_back(std::move(q));
  return out;
}

QVec project_exponent(const RingSignature& sig, const Exponent& e) {
  QVec v(sig.weight_dim());
  for (int i = 0; i < sig.weight_dim(); ++i) v[i] = e[i];
  return v;
}

bool in_uloc(const Weight& u) {
  return std::all_of(u.begin(), u.end(), [](const Scalar& s) { return s <= 0; });
}
bool in_uloc_strict(const Weight& u) {
  return std::all_of(u.begin(), u.end(), [](const Scalar& s) { return s < 0; });
}
bool in_wloc(int n, const Weight& w) {
  for (int i = 0; i < n; ++i)
    if (w[i] > 0 || w[i] + w[n + i] < 0) return false;
  return true;
}
bool in_wloc_strict(int n, const Weight& w) {
  for (int i = 0; i < n; ++i)
    if (w[i] >= 0 || w[i] + w[n + i] <= 0) return false;
  return true;
}

WeylElement translate(const WeylElement& p, const QVec& x0) {
  const RingSignature& sig = *p.ring();
  if (static_cast<int>(x0.size()) != sig.n) throw std::invalid_argument("base point arity");
  WeylElement r(p.ring());
  for (auto& [e, c] : p.terms()) {
    // expand prod_i (x_i + x0_i)^{e_i}
    std::vector<std::pair<Exponent, Scalar>> acc{{e, c}};
    for (int i = 0; i < sig.n; ++i) {
      if (e[i] == 0 || x0[i] == 0) continue;
      std::vector<std::pair<Exponent, Scalar>> next;
      for (auto& [f, v] : acc) {
        for (int j = 0; j <= e[i]; ++j) {
          mpz_class b;
          mpz_bin_uiui(b.get_mpz_t(), e[i], j);
          Scalar pw = 1;
          for (int k = 0; k < e[i] - j; ++k) pw *= x0[i];
          Exponent g = f;
          g[i] = j;
          next.emplace_back(g, v * Scalar(b) * pw);
        }
      }
      acc.swap(next);
    }
    for (auto& [f, v] : acc) r.add_term(f, v);
  }
  return r;
}

}  // namespace lgfan
