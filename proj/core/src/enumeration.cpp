#include "lgfan/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

namespace lgfan {

Region parse_region(const std::string& s) {
  if (s == "uloc") return Region::uloc;
  if (s == "wloc") return Region::wloc;
  if (s == "wglob") return Region::wglob;
  if (s == "positive") return Region::positive;
  if (s == "full") return Region::full;
  throw std::invalid_argument("unknown region '" + s + "'");
}

std::string region_name(Region r) {
  switch (r) {
    case Region::uloc: return "uloc";
    case Region::wloc: return "wloc";
    case Region::wglob: return "wglob";
    case Region::positive: return "positive";
    case Region::full: return "full";
  }
  return "?";
}

Weight WeightSubspace::to_ambient(const QVec& q) const {
  if (static_cast<int>(q.size()) != param_dim()) throw std::invalid_argument("parameter dimension mismatch");
  Weight w(ambient, 0);
  for (int j = 0; j < param_dim(); ++j) {
    if (q[j] == 0) continue;
    for (int i = 0; i < ambient; ++i) w[i] += q[j] * columns[j][i];
  }
  return w;
}

QVec WeightSubspace::pull_back(const QVec& r) const {
  QVec out(param_dim());
  for (int j = 0; j < param_dim(); ++j) out[j] = dot(r, columns[j]);
  return out;
}

HCone region_cone(const RingSignature& sig, Region region) {
  const int dim = sig.weight_dim();
  switch (region) {
    case Region::full: return HCone::whole_space(dim);
    case Region::positive: return positive_cone(dim);
    case Region::uloc: {
      std::vector<QVec> ineqs;
      for (int i = 0; i < sig.n; ++i) {
        QVec e(dim, 0);
        e[i] = -1;
        ineqs.push_back(std::move(e));
      }
      return HCone(dim, ineqs);
    }
    case Region::wloc:
    case Region::wglob:
      if (!sig.weyl()) throw SignatureMismatch("differential weight regions need a Weyl ring");
      return region == Region::wloc ? wloc_cone(sig.n) : wglob_cone(sig.n);
  }
  throw std::logic_error("unreachable");
}

WeightSubspace make_subspace(const RingSignature& sig, Region region, std::vector<QVec> columns) {
  WeightSubspace s;
  s.ambient = sig.weight_dim();
  if (columns.empty()) {
    for (int i = 0; i < s.ambient; ++i) {
      QVec e(s.ambient, 0);
      e[i] = 1;
      columns.push_back(std::move(e));
    }
  }
  for (auto& c : columns)
    if (static_cast<int>(c.size()) != s.ambient)
      throw std::invalid_argument("subspace column has length " + std::to_string(c.size()) + ", expected " +
                                  std::to_string(s.ambient));
  if (row_space_basis(columns).size() != columns.size())
    throw std::invalid_argument("subspace columns are linearly dependent");
  s.columns = std::move(columns);
  HCone amb = region_cone(sig, region);
  std::vector<QVec> ineqs, eqs;
  for (auto& f : amb.facets()) ineqs.push_back(s.pull_back(f));
  for (auto& e : amb.equations()) eqs.push_back(s.pull_back(e));
  s.region = HCone(s.param_dim(), ineqs, eqs);
  return s;
}

namespace {

void require_homogenized(const Ideal& ideal) {
  Homogenization h = ideal.ring->hom;
  if (h != Homogenization::alphaH && h != Homogenization::h11 && h != Homogenization::doubleH)
    throw SignatureMismatch("Groebner cones need an alpha-, (1,1)- or doubly homogenized ideal");
}

QVec diff(const QVec& a, const QVec& b) {
  QVec d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
  return d;
}

const std::vector<Scalar>& primes() {
  static const std::vector<Scalar> p = [] {
    std::vector<Scalar> out;
    for (int k = 2; out.size() < 256; ++k) {
      bool prime = true;
      for (int d = 2; d * d <= k; ++d)
        if (k % d == 0) prime = false;
      if (prime) out.emplace_back(k);
    }
    return out;
  }();
  return p;
}

}  // namespace

GroebnerCone groebner_cone(const Ideal& ideal, const QVec& q, const WeightSubspace& s) {
  require_homogenized(ideal);
  if (!s.region.contains(q)) throw std::invalid_argument("weight " + vec_to_string(q) + " outside the region");
  const RingSignature& sig = *ideal.ring;
  if (sig.weight_dim() != s.ambient) throw SignatureMismatch("subspace does not match the ring");
  Weight w = s.to_ambient(q);
  GroebnerCone out;
  out.basis = buchberger(ideal, lifted_order(sig, w));

  std::vector<QVec> ineqs = s.region.facets(), eqs = s.region.equations();
  for (auto& g : out.basis.elements) {
    WeylElement in = initial_form(g, w);
    QVec e0 = project_exponent(sig, leading_exponent(g, out.basis.order));
    for (auto& [e, c] : g.terms()) {
      QVec a = project_exponent(sig, e);
      if (a == e0) continue;
      if (in.coeff(e) != 0)
        eqs.push_back(s.pull_back(diff(a, e0)));
      else
        ineqs.push_back(s.pull_back(diff(e0, a)));
    }
  }
  out.cone = HCone(s.param_dim(), ineqs, eqs);
  out.witness = out.cone.interior_point();
  out.witness_ambient = s.to_ambient(out.witness);
  for (auto& g : out.basis.elements) out.initial.push_back(initial_form(g, out.witness_ambient));
  return out;
}

bool is_border_facet(const GroebnerCone& c, const QVec& facet, const WeightSubspace& s) {
  HCone f = c.cone.facet_face(facet);
  return !s.region.relint_contains(f.interior_point());
}

GroebnerCone flip(const GroebnerCone& c, const QVec& facet, const Ideal& ideal, const WeightSubspace& s) {
  HCone f = c.cone.facet_face(facet);
  const QVec& q = f.interior_point();
  if (!s.region.relint_contains(q)) throw std::invalid_argument("facet lies on the region border");
  const int full = s.region.dim();
  Scalar eps = 1;
  for (int attempt = 0; attempt <= 64; ++attempt, eps /= 2) {
    QVec p(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) p[i] = q[i] - eps * facet[i];
    if (!s.region.relint_contains(p)) continue;
    GroebnerCone next = groebner_cone(ideal, p, s);
    if (next.cone.dim() != full || next.cone == c.cone) continue;
    if (intersect(c.cone, next.cone) == f) return next;
  }
  throw std::runtime_error("flip across " + vec_to_string(facet) + " failed after 64 halvings");
}

GroebnerCone start_cone(const Ideal& ideal, const WeightSubspace& s) {
  const int full = s.region.dim();
  const auto& rays = s.region.rays();
  const auto& lin = s.region.lineality();
  const auto& p = primes();
  for (std::size_t k = 0; k < 64; ++k) {
    QVec q(s.param_dim(), 0);
    std::size_t idx = k;
    for (auto& r : rays) {
      Scalar c = p[idx++ % p.size()];
      for (int j = 0; j < s.param_dim(); ++j) q[j] += c * r[j];
    }
    for (std::size_t l = 0; l < lin.size(); ++l) {
      Scalar c = p[idx++ % p.size()];
      if (l % 2) c = -c;
      for (int j = 0; j < s.param_dim(); ++j) q[j] += c * lin[l][j];
    }
    GroebnerCone g = groebner_cone(ideal, q, s);
    if (g.cone.dim() == full) return g;
  }
  throw std::runtime_error("no full-dimensional starting cone within 64 candidate weights");
}

namespace {

template <class F>
void parallel_for(std::size_t n, int threads, F&& body) {
  std::size_t workers = std::min<std::size_t>(n, static_cast<std::size_t>(std::max(1, threads)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < workers; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = next++; i < n; i = next++) body(i);
      } catch (...) {
        errors[t] = std::current_exception();
        next = n;
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace

Enumeration enumerate(const Ideal& ideal, const WeightSubspace& s, const EnumerationOptions& opt) {
  Enumeration out;
  std::vector<GroebnerCone> known;
  std::map<std::string, std::size_t> index;
  known.push_back(start_cone(ideal, s));
  index[known.back().cone.key()] = 0;
  std::vector<std::size_t> frontier{0};

  while (!frontier.empty()) {
    struct Task {
      std::size_t cone;
      QVec facet;
    };
    std::vector<Task> tasks;
    for (std::size_t ci : frontier) {
      const GroebnerCone& c = known[ci];
      for (auto& f : c.cone.facets()) {
        HCone face = c.cone.facet_face(f);
        const QVec& q = face.interior_point();
        if (!s.region.relint_contains(q)) continue;
        bool seen = false;
        for (std::size_t k = 0; k < known.size() && !seen; ++k)
          if (k != ci && known[k].cone.contains(q)) seen = true;
        if (!seen) tasks.push_back({ci, f});
      }
    }
    std::vector<GroebnerCone> results(tasks.size());
    parallel_for(tasks.size(), opt.threads,
                 [&](std::size_t i) { results[i] = flip(known[tasks[i].cone], tasks[i].facet, ideal, s); });
    frontier.clear();
    for (auto& r : results) {
      if (index.count(r.cone.key())) continue;
      index[r.cone.key()] = known.size();
      frontier.push_back(known.size());
      known.push_back(std::move(r));
      if (opt.max_cones && known.size() >= opt.max_cones)
        throw std::runtime_error("enumeration exceeded " + std::to_string(opt.max_cones) + " cones");
    }
  }

  std::sort(known.begin(), known.end(),
            [](const GroebnerCone& a, const GroebnerCone& b) { return canonical_less(a.cone, b.cone); });
  out.lineality = known.front().cone.lineality();
  out.cones = std::move(known);
  return out;
}

}  // namespace lgfan
