#include "lgfan/order.hpp"

#include <limits>
#include <numeric>

namespace lgfan {

QVec primitive(const QVec& v) {
  mpz_class l = 1, g = 0;
  for (auto& x : v) {
    if (x == 0) continue;
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  }
  std::vector<mpz_class> ints(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    ints[i] = Scalar(v[i] * Scalar(l)).get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
  }
  QVec out(v.size());
  if (g == 0) return out;
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Scalar(ints[i] / g);
  return out;
}

namespace {

// Row reduction helper: returns true if `row` is independent of `basis`,
// appending its reduced form.
bool independent(std::vector<QVec>& basis, std::vector<int>& pivots, QVec row) {
  for (std::size_t b = 0; b < basis.size(); ++b) {
    int p = pivots[b];
    if (row[p] == 0) continue;
    Scalar f = row[p] / basis[b][p];
    for (std::size_t j = 0; j < row.size(); ++j) row[j] -= f * basis[b][j];
  }
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (row[j] != 0) {
      basis.push_back(row);
      pivots.push_back(static_cast<int>(j));
      return true;
    }
  }
  return false;
}

}  // namespace

MatrixOrder::MatrixOrder(int slots, const std::vector<QVec>& rows) : slots_(slots) {
  std::vector<QVec> basis;
  std::vector<int> pivots;
  for (auto& r : rows) {
    if (static_cast<int>(r.size()) != slots) throw std::invalid_argument("order row arity");
    if (!independent(basis, pivots, r)) continue;
    QVec p = primitive(r);
    std::vector<mpz_class> z(slots);
    for (int i = 0; i < slots; ++i) z[i] = p[i].get_num();
    rows_.push_back(std::move(z));
  }
  if (static_cast<int>(rows_.size()) != slots)
    throw std::invalid_argument("order rows do not determine a total order");
  fast_ = true;
  const mpz_class lim = mpz_class(1) << 31;
  for (auto& r : rows_)
    for (auto& x : r)
      if (abs(x) >= lim) fast_ = false;
  if (fast_) {
    for (auto& r : rows_) {
      std::vector<long long> s(slots);
      for (int i = 0; i < slots; ++i) s[i] = r[i].get_si();
      small_.push_back(std::move(s));
    }
  }
}

std::vector<QVec> MatrixOrder::rational_rows() const {
  std::vector<QVec> out;
  for (auto& r : rows_) {
    QVec q(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) q[i] = Scalar(r[i]);
    out.push_back(std::move(q));
  }
  return out;
}

int MatrixOrder::compare(const Exponent& a, const Exponent& b) const {
  if (static_cast<int>(a.size()) != slots_ || static_cast<int>(b.size()) != slots_)
    throw std::invalid_argument("exponent arity does not match order");
  if (a == b) return 0;
  if (fast_) {
    for (auto& r : small_) {
      long long s = 0;
      for (int i = 0; i < slots_; ++i) s += r[i] * (a[i] - b[i]);
      if (s != 0) return s < 0 ? -1 : 1;
    }
    return 0;
  }
  for (auto& r : rows_) {
    mpz_class s = 0;
    for (int i = 0; i < slots_; ++i)
      if (a[i] != b[i]) s += r[i] * (a[i] - b[i]);
    if (s != 0) return s < 0 ? -1 : 1;
  }
  return 0;
}

namespace {

int first_sign(const std::vector<std::vector<mpz_class>>& rows, const std::vector<int>& vec) {
  for (auto& r : rows) {
    mpz_class s = 0;
    for (std::size_t i = 0; i < vec.size(); ++i) s += r[i] * vec[i];
    if (s != 0) return sgn(s);
  }
  return 0;
}

}  // namespace

bool MatrixOrder::is_well_order() const {
  for (int j = 0; j < slots_; ++j) {
    std::vector<int> e(slots_, 0);
    e[j] = 1;
    if (first_sign(rows_, e) <= 0) return false;
  }
  return true;
}

bool MatrixOrder::is_local(const RingSignature& sig) const {
  for (int j = 0; j < sig.n; ++j) {
    std::vector<int> e(slots_, 0);
    e[j] = 1;
    if (first_sign(rows_, e) >= 0) return false;
  }
  return true;
}

bool MatrixOrder::is_admissible(const RingSignature& sig) const {
  if (!is_local(sig)) return false;
  if (!sig.weyl()) return true;
  for (int j = 0; j < sig.n; ++j) {
    std::vector<int> e(slots_, 0);
    e[j] = 1;
    e[sig.n + j] = 1;
    if (first_sign(rows_, e) <= 0) return false;
  }
  return true;
}

bool MatrixOrder::is_block_on_hprime(const RingSignature& sig) const {
  if (!sig.has_hprime() || rows_.empty()) return false;
  for (auto& x : rows_[0])
    if (x != 1) return false;
  return true;
}

// ---------------------------------------------------------------------------

QVec weight_row(const RingSignature& sig, const Weight& w) {
  if (static_cast<int>(w.size()) != sig.weight_dim()) throw std::invalid_argument("weight arity");
  QVec r(sig.slots(), 0);
  for (int i = 0; i < sig.weight_dim(); ++i) r[i] = w[i];
  return r;
}

QVec total_degree_row(const RingSignature& sig) { return QVec(sig.slots(), 1); }

QVec h01_degree_row(const RingSignature& sig) {
  QVec r(sig.slots(), 0);
  for (int i = 0; i < sig.n; ++i) r[sig.n + i] = 1;
  if (sig.has_h()) r[sig.h_slot()] = 1;
  return r;
}

QVec alpha_degree_row(const RingSignature& sig) {
  QVec r(sig.slots(), 0);
  for (int i = 0; i < sig.n; ++i) r[i] = sig.alpha.empty() ? 1 : sig.alpha[i];
  if (sig.has_h()) r[sig.h_slot()] = 1;
  return r;
}

std::vector<QVec> degrevlex_rows(int slots) {
  std::vector<QVec> rows;
  rows.emplace_back(slots, 1);
  for (int j = slots - 1; j >= 1; --j) {
    QVec r(slots, 0);
    r[j] = -1;
    rows.push_back(std::move(r));
  }
  return rows;
}

MatrixOrder from_rows(const RingSignature& sig, std::vector<QVec> rows) {
  for (auto& r : degrevlex_rows(sig.slots())) rows.push_back(std::move(r));
  return MatrixOrder(sig.slots(), rows);
}

MatrixOrder degrevlex(const RingSignature& sig) { return from_rows(sig, {}); }

MatrixOrder local_degrevlex(const RingSignature& sig) {
  return from_rows(sig, {QVec(sig.slots(), -1)});
}

namespace {

QVec admissible_row(const RingSignature& sig) {
  QVec r(sig.slots(), 0);
  for (int i = 0; i < sig.n; ++i) {
    r[i] = -1;
    if (sig.weyl()) r[sig.n + i] = 2;
  }
  return r;
}

QVec negative_x_degree_row(const RingSignature& sig) {
  QVec r(sig.slots(), 0);
  for (int i = 0; i < sig.n; ++i) r[i] = -1;
  return r;
}

}  // namespace

MatrixOrder admissible_base(const RingSignature& sig) { return from_rows(sig, {admissible_row(sig)}); }

MatrixOrder refine_by_weight(const RingSignature& sig, const Weight& w, const MatrixOrder& base) {
  std::vector<QVec> rows{weight_row(sig, w)};
  for (auto& r : base.rational_rows()) rows.push_back(std::move(r));
  return MatrixOrder(sig.slots(), rows);
}

namespace {

QVec extend_row(const QVec& r, int slots) {
  QVec out(r);
  out.resize(slots, 0);
  return out;
}

}  // namespace

MatrixOrder lift_to_h(const RingSignature& sig, const MatrixOrder& base) {
  if (!sig.has_h()) throw SignatureMismatch("lift_to_h needs a homogenized ring");
  QVec first;
  switch (sig.hom) {
    case Homogenization::alphaH: first = alpha_degree_row(sig); break;
    case Homogenization::h01: first = h01_degree_row(sig); break;
    default: first = total_degree_row(sig);
  }
  std::vector<QVec> rows{first};
  for (auto& r : base.rational_rows()) rows.push_back(extend_row(r, sig.slots()));
  for (auto& r : degrevlex_rows(sig.slots())) rows.push_back(std::move(r));
  return MatrixOrder(sig.slots(), rows);
}

MatrixOrder block_order_hprime(const RingSignature& sig, const MatrixOrder& base1) {
  if (!sig.has_hprime()) throw SignatureMismatch("block order needs h'");
  std::vector<QVec> rows{total_degree_row(sig)};
  for (auto& r : base1.rational_rows()) rows.push_back(extend_row(r, sig.slots()));
  return MatrixOrder(sig.slots(), rows);
}

MatrixOrder lifted_order(const RingSignature& sig, const Weight& w) {
  QVec wr = weight_row(sig, w);
  switch (sig.hom) {
    case Homogenization::alphaH:
      return from_rows(sig, {alpha_degree_row(sig), wr, negative_x_degree_row(sig)});
    case Homogenization::h11: return from_rows(sig, {total_degree_row(sig), wr});
    case Homogenization::doubleH:
      return from_rows(sig, {total_degree_row(sig), h01_degree_row(sig), wr, admissible_row(sig)});
    case Homogenization::h01: return from_rows(sig, {h01_degree_row(sig), wr, admissible_row(sig)});
    case Homogenization::none:
      if (sig.weyl()) return from_rows(sig, {wr, admissible_row(sig)});
      return from_rows(sig, {wr, negative_x_degree_row(sig)});
  }
  throw std::logic_error("unreachable");
}

MatrixOrder dehomogenize_order(const MatrixOrder& o, const QVec& grading, int slot) {
  if (grading.at(slot) != 1) throw std::invalid_argument("grading must weigh the slot by 1");
  std::vector<QVec> rows;
  for (auto& r : o.rational_rows()) {
    QVec t(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) t[i] = r[i] - r[slot] * grading[i];
    t.erase(t.begin() + slot);
    rows.push_back(std::move(t));
  }
  return MatrixOrder(o.slots() - 1, rows);
}

LeadingData leading_data(const WeylElement& p, const MatrixOrder& order) {
  if (p.is_zero()) throw std::invalid_argument("leading data of zero");
  auto it = p.terms().begin();
  auto best = it;
  for (++it; it != p.terms().end(); ++it)
    if (order.compare(it->first, best->first) > 0) best = it;
  return {best->first, best->second};
}

Exponent leading_exponent(const WeylElement& p, const MatrixOrder& order) {
  return leading_data(p, order).exp;
}

}  // namespace lgfan
