#include "lgfan/polyhedra.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <unordered_set>

#include "lgfan/order.hpp"

namespace lgfan {

Scalar dot(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch");
  Scalar s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  return s;
}

int compare_lex(const QVec& a, const QVec& b) {
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

namespace {

bool lex_less(const QVec& a, const QVec& b) { return compare_lex(a, b) < 0; }

bool is_zero(const QVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s == 0; });
}

// Reduced row echelon form; returns pivot columns.
std::vector<int> rref(std::vector<QVec>& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[r], m[p]);
    Scalar inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      Scalar f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  m.resize(r);
  return pivots;
}

int rank_of(std::vector<QVec> rows) { return static_cast<int>(rref(rows).size()); }

// Canonical coset representative modulo span(basis) (basis in rref with `pivots`).
QVec reduce_mod(QVec v, const std::vector<QVec>& basis, const std::vector<int>& pivots) {
  for (std::size_t b = 0; b < basis.size(); ++b) {
    int p = pivots[b];
    if (v[p] == 0) continue;
    Scalar f = v[p] / basis[b][p];
    for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * basis[b][j];
  }
  return v;
}

class Bits {
 public:
  explicit Bits(std::size_t n = 0) : w_((n + 63) / 64, 0) {}
  void set(std::size_t i) { w_[i / 64] |= (1ULL << (i % 64)); }
  bool subset_of(const Bits& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }
  Bits operator&(const Bits& o) const {
    Bits r;
    r.w_.resize(w_.size());
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & o.w_[i];
    return r;
  }

 private:
  std::vector<unsigned long long> w_;
};

std::vector<QVec> clean_rows(const std::vector<QVec>& rows, int dim) {
  std::set<QVec, decltype(&lex_less)> seen(&lex_less);
  std::vector<QVec> out;
  for (auto& r : rows) {
    if (static_cast<int>(r.size()) != dim) throw std::invalid_argument("constraint dimension mismatch");
    if (is_zero(r)) continue;
    QVec p = primitive(r);
    if (seen.insert(p).second) out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

std::vector<QVec> row_space_basis(const std::vector<QVec>& rows) {
  std::vector<QVec> m;
  for (auto& r : rows)
    if (!is_zero(r)) m.push_back(r);
  rref(m);
  for (auto& r : m) r = primitive(r);
  return m;
}

VRep double_description(int dim, const std::vector<QVec>& ineqs_in, const std::vector<QVec>& eqs_in) {
  std::vector<QVec> eqs = clean_rows(eqs_in, dim);
  std::vector<QVec> ineqs = clean_rows(ineqs_in, dim);
  const std::size_t total = ineqs.size();

  struct Ray {
    QVec v;
    Bits tight;
  };
  std::vector<QVec> lin;
  for (int i = 0; i < dim; ++i) {
    QVec e(dim, 0);
    e[i] = 1;
    lin.push_back(std::move(e));
  }
  std::vector<Ray> rays;

  // Equations first (tight index not tracked), then inequalities.
  auto process = [&](const QVec& a, bool equality, std::size_t index) {
    std::size_t li = lin.size();
    for (std::size_t k = 0; k < lin.size(); ++k) {
      if (dot(a, lin[k]) != 0) {
        li = k;
        break;
      }
    }
    if (li < lin.size()) {
      QVec l0 = lin[li];
      lin.erase(lin.begin() + static_cast<long>(li));
      Scalar s0 = dot(a, l0);
      for (auto& l : lin) {
        Scalar s = dot(a, l);
        if (s == 0) continue;
        Scalar f = s / s0;
        for (int j = 0; j < dim; ++j) l[j] -= f * l0[j];
      }
      for (auto& r : rays) {
        Scalar s = dot(a, r.v);
        if (s != 0) {
          Scalar f = s / s0;
          for (int j = 0; j < dim; ++j) r.v[j] -= f * l0[j];
          r.v = primitive(r.v);
        }
        if (!equality) r.tight.set(index);
      }
      if (!equality) {
        if (s0 < 0)
          for (auto& x : l0) x = -x;
        Bits t(total);
        for (std::size_t c = 0; c < index; ++c) t.set(c);
        rays.push_back({primitive(l0), t});
      }
      return;
    }
    std::vector<Scalar> s(rays.size());
    std::vector<std::size_t> pos, neg;
    std::vector<Ray> next;
    for (std::size_t k = 0; k < rays.size(); ++k) {
      s[k] = dot(a, rays[k].v);
      if (s[k] > 0)
        pos.push_back(k);
      else if (s[k] < 0)
        neg.push_back(k);
    }
    for (std::size_t k = 0; k < rays.size(); ++k) {
      if (s[k] == 0) {
        Ray r = rays[k];
        if (!equality) r.tight.set(index);
        next.push_back(std::move(r));
      } else if (s[k] > 0 && !equality) {
        next.push_back(rays[k]);
      }
    }
    for (std::size_t p : pos) {
      for (std::size_t q : neg) {
        Bits z = rays[p].tight & rays[q].tight;
        bool adjacent = true;
        for (std::size_t k = 0; k < rays.size() && adjacent; ++k) {
          if (k == p || k == q) continue;
          if (z.subset_of(rays[k].tight)) adjacent = false;
        }
        if (!adjacent) continue;
        QVec v(dim);
        for (int j = 0; j < dim; ++j) v[j] = s[p] * rays[q].v[j] - s[q] * rays[p].v[j];
        if (!equality) z.set(index);
        next.push_back({primitive(v), z});
      }
    }
    rays.swap(next);
  };

  for (auto& a : eqs) process(a, true, 0);
  for (std::size_t i = 0; i < ineqs.size(); ++i) process(ineqs[i], false, i);

  VRep out;
  out.lineality = lin;
  std::set<QVec, decltype(&lex_less)> seen(&lex_less);
  for (auto& r : rays) {
    if (is_zero(r.v)) continue;
    if (seen.insert(r.v).second) out.rays.push_back(r.v);
  }
  return out;
}

// ---------------------------------------------------------------------------

HCone::HCone(int ambient, const std::vector<QVec>& ineqs, const std::vector<QVec>& eqs)
    : ambient_(ambient) {
  canonicalize(ineqs, eqs);
}

HCone HCone::origin(int ambient) {
  std::vector<QVec> eqs;
  for (int i = 0; i < ambient; ++i) {
    QVec e(ambient, 0);
    e[i] = 1;
    eqs.push_back(std::move(e));
  }
  return HCone(ambient, {}, eqs);
}

HCone HCone::from_rays(int ambient, const std::vector<QVec>& rays, const std::vector<QVec>& lineality) {
  VRep dual = double_description(ambient, rays, lineality);
  return HCone(ambient, dual.rays, dual.lineality);
}

void HCone::canonicalize(const std::vector<QVec>& ineqs, const std::vector<QVec>& eqs) {
  VRep v = double_description(ambient_, ineqs, eqs);
  std::vector<QVec> gens = v.lineality;
  gens.insert(gens.end(), v.rays.begin(), v.rays.end());
  dim_ = rank_of(gens);

  VRep dual = double_description(ambient_, v.rays, v.lineality);
  equations_ = row_space_basis(dual.lineality);
  std::vector<QVec> eq_basis = equations_;
  std::vector<int> eq_piv = rref(eq_basis);
  std::set<QVec, decltype(&lex_less)> fs(&lex_less);
  for (auto& y : dual.rays) {
    QVec r = reduce_mod(y, eq_basis, eq_piv);
    if (!is_zero(r)) fs.insert(primitive(r));
  }
  facets_.assign(fs.begin(), fs.end());

  lineality_ = row_space_basis(v.lineality);
  std::vector<QVec> lin_basis = lineality_;
  std::vector<int> lin_piv = rref(lin_basis);
  std::set<QVec, decltype(&lex_less)> rs(&lex_less);
  for (auto& r : v.rays) {
    QVec q = reduce_mod(r, lin_basis, lin_piv);
    if (!is_zero(q)) rs.insert(primitive(q));
  }
  rays_.assign(rs.begin(), rs.end());

  interior_.assign(ambient_, 0);
  for (auto& r : rays_)
    for (int j = 0; j < ambient_; ++j) interior_[j] += r[j];

  std::ostringstream os;
  os << ambient_ << "|E";
  for (auto& e : equations_) os << vec_to_string(e);
  os << "|F";
  for (auto& f : facets_) os << vec_to_string(f);
  key_ = os.str();
}

bool HCone::contains(const QVec& p) const {
  for (auto& e : equations_)
    if (dot(e, p) != 0) return false;
  for (auto& f : facets_)
    if (dot(f, p) < 0) return false;
  return true;
}

bool HCone::relint_contains(const QVec& p) const {
  for (auto& e : equations_)
    if (dot(e, p) != 0) return false;
  for (auto& f : facets_)
    if (dot(f, p) <= 0) return false;
  return true;
}

bool HCone::contains(const HCone& o) const {
  for (auto& r : o.rays_)
    if (!contains(r)) return false;
  for (auto& l : o.lineality_) {
    if (!contains(l)) return false;
    QVec m(l);
    for (auto& x : m) x = -x;
    if (!contains(m)) return false;
  }
  return true;
}

HCone HCone::facet_face(const QVec& f) const {
  std::vector<QVec> eqs = equations_;
  eqs.push_back(f);
  return HCone(ambient_, facets_, eqs);
}

HCone HCone::smallest_face_containing(const QVec& p) const {
  std::vector<QVec> eqs = equations_;
  for (auto& f : facets_)
    if (dot(f, p) == 0) eqs.push_back(f);
  return HCone(ambient_, facets_, eqs);
}

bool canonical_less(const HCone& a, const HCone& b) {
  if (a.dim() != b.dim()) return a.dim() > b.dim();
  auto cmp_list = [](const std::vector<QVec>& x, const std::vector<QVec>& y) {
    for (std::size_t i = 0; i < std::min(x.size(), y.size()); ++i) {
      int c = compare_lex(x[i], y[i]);
      if (c != 0) return c;
    }
    if (x.size() != y.size()) return x.size() < y.size() ? -1 : 1;
    return 0;
  };
  int c = cmp_list(a.equations(), b.equations());
  if (c != 0) return c < 0;
  return cmp_list(a.facets(), b.facets()) < 0;
}

HCone intersect(const HCone& a, const HCone& b) {
  if (a.ambient() != b.ambient()) throw std::invalid_argument("dimension mismatch");
  std::vector<QVec> ineqs = a.facets(), eqs = a.equations();
  ineqs.insert(ineqs.end(), b.facets().begin(), b.facets().end());
  eqs.insert(eqs.end(), b.equations().begin(), b.equations().end());
  return HCone(a.ambient(), ineqs, eqs);
}

bool is_face(const HCone& f, const HCone& c) {
  if (f.ambient() != c.ambient()) throw std::invalid_argument("dimension mismatch");
  if (!c.contains(f)) return false;
  return c.smallest_face_containing(f.interior_point()) == f;
}

std::vector<HCone> faces(const HCone& c) {
  std::vector<HCone> out;
  std::unordered_set<std::string> seen;
  std::deque<HCone> queue{c};
  seen.insert(c.key());
  while (!queue.empty()) {
    HCone f = queue.front();
    queue.pop_front();
    for (auto& y : f.facets()) {
      HCone g = f.facet_face(y);
      if (seen.insert(g.key()).second) queue.push_back(g);
    }
    out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

LinealityQuotient lineality_quotient(const HCone& c) {
  std::vector<QVec> eqs = c.equations();
  eqs.insert(eqs.end(), c.lineality().begin(), c.lineality().end());
  return {c.lineality(), HCone(c.ambient(), c.facets(), eqs)};
}

// ---------------------------------------------------------------------------

std::vector<QVec> recession_generators(int dim, Recession rec) {
  std::vector<QVec> out;
  if (rec == Recession::orthant) {
    for (int i = 0; i < dim; ++i) {
      QVec e(dim, 0);
      e[i] = 1;
      out.push_back(std::move(e));
    }
    return out;
  }
  if (dim % 2) throw std::invalid_argument("Wloc* lives in an even dimension");
  int n = dim / 2;
  for (int i = 0; i < n; ++i) {
    QVec e(dim, 0);
    e[i] = 1;
    out.push_back(std::move(e));
  }
  for (int i = 0; i < n; ++i) {
    QVec e(dim, 0);
    e[i] = -1;
    e[n + i] = -1;
    out.push_back(std::move(e));
  }
  return out;
}

namespace {

bool in_recession(const QVec& d, Recession rec) {
  if (rec == Recession::orthant) {
    return std::all_of(d.begin(), d.end(), [](const Scalar& s) { return s >= 0; });
  }
  const std::size_t n = d.size() / 2;
  for (std::size_t i = 0; i < n; ++i) {
    if (d[n + i] > 0) return false;
    if (d[i] - d[n + i] < 0) return false;
  }
  return true;
}

}  // namespace

std::vector<QVec> minimal_points(const std::vector<QVec>& pts_in, Recession rec) {
  std::vector<QVec> pts = pts_in;
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<QVec> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < pts.size() && !redundant; ++j) {
      if (i == j) continue;
      QVec d(pts[i].size());
      for (std::size_t k = 0; k < d.size(); ++k) d[k] = pts[i][k] - pts[j][k];
      if (in_recession(d, rec)) redundant = true;
    }
    if (!redundant) out.push_back(pts[i]);
  }
  return out;
}

RationalPolyhedron::RationalPolyhedron(int dim, Recession rec, std::vector<QVec> points, bool minimize)
    : dim_(dim), rec_(rec), rec_gens_(lgfan::recession_generators(dim, rec)) {
  for (auto& p : points)
    if (static_cast<int>(p.size()) != dim) throw std::invalid_argument("point dimension mismatch");
  if (minimize) {
    points_ = minimal_points(points, rec);
  } else {
    std::sort(points.begin(), points.end(), lex_less);
    points.erase(std::unique(points.begin(), points.end()), points.end());
    points_ = std::move(points);
  }
}

bool RationalPolyhedron::operator==(const RationalPolyhedron& o) const {
  return dim_ == o.dim_ && rec_ == o.rec_ && points_ == o.points_ && rec_gens_ == o.rec_gens_;
}

RationalPolyhedron newton_polyhedron(const WeylElement& g, Recession rec) {
  if (g.is_zero()) throw std::invalid_argument("Newton polyhedron of zero");
  const RingSignature& sig = *g.ring();
  if (rec == Recession::wloc_star && !sig.weyl()) throw SignatureMismatch("Wloc* needs a Weyl ring");
  std::vector<QVec> pts;
  for (auto& [e, c] : g.terms()) pts.push_back(project_exponent(sig, e));
  return RationalPolyhedron(sig.weight_dim(), rec, pts);
}

RationalPolyhedron face_of(const RationalPolyhedron& p, const QVec& w) {
  if (static_cast<int>(w.size()) != p.dim()) throw std::invalid_argument("weight dimension mismatch");
  for (auto& r : p.recession_generators())
    if (dot(w, r) > 0) throw std::invalid_argument("weight outside the dual of the recession cone");
  RationalPolyhedron out;
  out.dim_ = p.dim_;
  out.rec_ = p.rec_;
  Scalar best;
  bool first = true;
  for (auto& e : p.points()) {
    Scalar s = dot(w, e);
    if (first || s > best) best = s;
    first = false;
  }
  for (auto& e : p.points())
    if (dot(w, e) == best) out.points_.push_back(e);
  for (auto& r : p.recession_generators())
    if (dot(w, r) == 0) out.rec_gens_.push_back(r);
  return out;
}

HCone normal_cone(const RationalPolyhedron& p, const QVec& w, const HCone& region) {
  if (!region.contains(w)) throw std::invalid_argument("weight outside the region");
  RationalPolyhedron f = face_of(p, w);
  std::vector<QVec> ineqs = region.facets(), eqs = region.equations();
  const QVec& e0 = f.points().front();
  auto diff = [](const QVec& a, const QVec& b) {
    QVec d(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
    return d;
  };
  for (auto& e : f.points())
    if (e != e0) eqs.push_back(diff(e, e0));
  for (auto& a : p.points())
    if (std::find(f.points().begin(), f.points().end(), a) == f.points().end()) ineqs.push_back(diff(e0, a));
  for (auto& r : p.recession_generators()) {
    if (dot(w, r) == 0) {
      eqs.push_back(r);
    } else {
      QVec m(r);
      for (auto& x : m) x = -x;
      ineqs.push_back(m);
    }
  }
  return HCone(p.dim(), ineqs, eqs);
}

RationalPolyhedron minkowski_sum(const RationalPolyhedron& a, const RationalPolyhedron& b) {
  if (a.dim() != b.dim() || a.recession() != b.recession()) throw std::invalid_argument("polyhedra mismatch");
  std::vector<QVec> pts;
  for (auto& x : a.points())
    for (auto& y : b.points()) {
      QVec s(x.size());
      for (std::size_t i = 0; i < s.size(); ++i) s[i] = x[i] + y[i];
      pts.push_back(std::move(s));
    }
  return RationalPolyhedron(a.dim(), a.recession(), pts);
}

// ---------------------------------------------------------------------------

std::vector<int> Fan::maximal() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < cones.size(); ++i) {
    bool covered = false;
    for (std::size_t j = 0; j < cones.size() && !covered; ++j)
      if (i != j && cones[j].dim() > cones[i].dim() && cones[j].contains(cones[i])) covered = true;
    if (!covered) out.push_back(static_cast<int>(i));
  }
  return out;
}

int Fan::count_dim(int d) const {
  return static_cast<int>(std::count_if(cones.begin(), cones.end(), [d](const HCone& c) { return c.dim() == d; }));
}

Fan make_fan(std::vector<HCone> cones) {
  std::sort(cones.begin(), cones.end(), canonical_less);
  cones.erase(std::unique(cones.begin(), cones.end()), cones.end());
  Fan f;
  f.cones = std::move(cones);
  for (std::size_t i = 0; i < f.cones.size(); ++i)
    for (std::size_t j = 0; j < f.cones.size(); ++j)
      if (f.cones[i].dim() + 1 == f.cones[j].dim() && is_face(f.cones[i], f.cones[j]))
        f.incidence.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return f;
}

Fan closure_fan(const std::vector<HCone>& cones) {
  std::vector<HCone> all;
  std::unordered_set<std::string> seen;
  for (auto& c : cones)
    for (auto& f : faces(c))
      if (seen.insert(f.key()).second) all.push_back(f);
  return make_fan(std::move(all));
}

FanReport validate_fan(const Fan& fan) {
  FanReport rep;
  std::unordered_set<std::string> keys;
  for (auto& c : fan.cones) keys.insert(c.key());
  for (std::size_t i = 0; i < fan.cones.size(); ++i) {
    for (auto& f : faces(fan.cones[i])) {
      if (!keys.count(f.key())) {
        rep.ok = false;
        rep.axiom = 1;
        rep.message = "cone " + std::to_string(i) + " has a face of dimension " + std::to_string(f.dim()) +
                      " that is not in the fan";
        return rep;
      }
    }
  }
  for (std::size_t i = 0; i < fan.cones.size(); ++i) {
    for (std::size_t j = i + 1; j < fan.cones.size(); ++j) {
      HCone m = intersect(fan.cones[i], fan.cones[j]);
      if (!is_face(m, fan.cones[i]) || !is_face(m, fan.cones[j])) {
        rep.ok = false;
        rep.axiom = 2;
        rep.message = "intersection of cones " + std::to_string(i) + " and " + std::to_string(j) +
                      " is not a face of both";
        return rep;
      }
    }
  }
  std::vector<int> mx = fan.maximal();
  for (std::size_t a = 0; a < mx.size(); ++a) {
    for (std::size_t b = a + 1; b < mx.size(); ++b) {
      const HCone& x = fan.cones[mx[a]];
      const HCone& y = fan.cones[mx[b]];
      HCone m = intersect(x, y);
      if (m == x || m == y || x.relint_contains(y.interior_point()) || y.relint_contains(x.interior_point())) {
        rep.ok = false;
        rep.axiom = 3;
        rep.message = "maximal cones " + std::to_string(mx[a]) + " and " + std::to_string(mx[b]) +
                      " have overlapping relative interiors";
        return rep;
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------

HCone uloc_cone(int n) {
  std::vector<QVec> ineqs;
  for (int i = 0; i < n; ++i) {
    QVec e(n, 0);
    e[i] = -1;
    ineqs.push_back(std::move(e));
  }
  return HCone(n, ineqs);
}

HCone wloc_cone(int n) {
  std::vector<QVec> ineqs;
  for (int i = 0; i < n; ++i) {
    QVec e(2 * n, 0);
    e[i] = -1;
    ineqs.push_back(e);
    e[i] = 1;
    e[n + i] = 1;
    ineqs.push_back(e);
  }
  return HCone(2 * n, ineqs);
}

HCone wglob_cone(int n) {
  std::vector<QVec> ineqs;
  for (int i = 0; i < n; ++i) {
    QVec e(2 * n, 0);
    e[i] = 1;
    e[n + i] = 1;
    ineqs.push_back(std::move(e));
  }
  return HCone(2 * n, ineqs);
}

HCone positive_cone(int d) {
  std::vector<QVec> ineqs;
  for (int i = 0; i < d; ++i) {
    QVec e(d, 0);
    e[i] = 1;
    ineqs.push_back(std::move(e));
  }
  return HCone(d, ineqs);
}

std::string vec_to_string(const QVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

}  // namespace lgfan
