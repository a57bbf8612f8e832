#include "lgfan/local_fan.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <numeric>
#include <thread>

namespace lgfan {

std::string Stratum::to_string() const {
  auto list = [](const std::vector<int>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i] + 1);
    return s + "}";
  };
  return p.empty() ? list(m) : list(m) + "x" + list(p);
}

Stratum stratum_of(const RingSignature& sig, const Weight& w) {
  if (static_cast<int>(w.size()) != sig.weight_dim()) throw std::invalid_argument("weight dimension mismatch");
  Stratum s;
  for (int i = 0; i < sig.n; ++i) {
    if (w[i] < 0) s.m.push_back(i);
    if (sig.weyl() && w[i] + w[sig.n + i] > 0) s.p.push_back(i);
  }
  return s;
}

Ideal local_homogenization(const Ideal& ideal) {
  const RingSignature& sig = *ideal.ring;
  switch (sig.hom) {
    case Homogenization::alphaH:
    case Homogenization::doubleH: return ideal;
    case Homogenization::h01: return homogenize_ideal(ideal, Homogenization::doubleH);
    case Homogenization::none:
      if (sig.weyl()) return homogenize_ideal(h01_ideal(ideal), Homogenization::doubleH);
      return homogenize_ideal(ideal, Homogenization::alphaH);
    case Homogenization::h11: break;
  }
  throw SignatureMismatch("no local fan for (1,1)-homogenized ideals");
}

LocalContext::LocalContext(Ideal homogenized) : ideal_(std::move(homogenized)) {
  switch (ideal_.ring->hom) {
    case Homogenization::alphaH: base_ = with_homogenization(ideal_.ring, Homogenization::none); break;
    case Homogenization::doubleH: base_ = with_homogenization(ideal_.ring, Homogenization::h01); break;
    default: throw SignatureMismatch("local context expects an alpha- or doubly homogenized ideal");
  }
}

LocalBasis LocalContext::basis(const Weight& w) {
  const std::string key = vec_to_string(w);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  LocalBasis b = local_standard_basis_from_homogenized(ideal_, w);
  std::lock_guard<std::mutex> lock(mu_);
  return cache_.emplace(key, std::move(b)).first->second;
}

bool LocalContext::contained(const LocalBasis& a, const Weight& wa, const LocalBasis& b, const Weight& wb,
                             const Ring& gr) {
  std::vector<WeylElement> divisors;
  for (auto& g : b.elements) divisors.push_back(initial_form(g, wb).recast(gr));
  std::vector<int> allowed = allowed_unit_block(*gr, wa);
  for (auto& g : a.elements) {
    WeylElement f = initial_form(g, wa).recast(gr);
    for (auto& part : weight_components(f, wb))
      if (!mora_divide(part, divisors, b.order, allowed).remainder.is_zero()) return false;
  }
  return true;
}

bool LocalContext::initials_equal(const Weight& w1, const Weight& w2) {
  const RingSignature& sig = *base_;
  Stratum s1 = stratum_of(sig, w1), s2 = stratum_of(sig, w2);
  if (s1 != s2) throw std::invalid_argument("weights lie in different strata " + s1.to_string() + " and " +
                                            s2.to_string());
  if (w1 == w2) return true;
  Ring gr = base_;
  if (sig.weyl()) {
    std::vector<char> mask(sig.n, 0);
    for (int i : s1.p) mask[i] = 1;
    gr = with_commuting(base_, mask);
  }
  LocalBasis b1 = basis(w1), b2 = basis(w2);
  return contained(b1, w1, b2, w2, gr) && contained(b2, w2, b1, w1, gr);
}

bool local_initials_equal(const Ideal& ideal, const Weight& w1, const Weight& w2) {
  LocalContext ctx(local_homogenization(ideal));
  return ctx.initials_equal(w1, w2);
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

template <class F>
void run_parallel(std::size_t n, int threads, F&& body) {
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

using Equivalence = std::function<bool(const GroebnerCone&, const GroebnerCone&)>;

std::vector<LocalFanClass> glue(const std::vector<GroebnerCone>& cones, const WeightSubspace& s,
                                const RingSignature& base, const Equivalence& same, int threads) {
  const int full = s.region.dim();
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t i = 0; i < cones.size(); ++i)
    for (std::size_t j = i + 1; j < cones.size(); ++j) {
      if (stratum_of(base, cones[i].witness_ambient) != stratum_of(base, cones[j].witness_ambient)) continue;
      if (intersect(cones[i].cone, cones[j].cone).dim() == full - 1)
        pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  std::vector<char> equal(pairs.size(), 0);
  run_parallel(pairs.size(), threads,
               [&](std::size_t k) { equal[k] = same(cones[pairs[k].first], cones[pairs[k].second]); });
  UnionFind uf(cones.size());
  for (std::size_t k = 0; k < pairs.size(); ++k)
    if (equal[k]) uf.unite(pairs[k].first, pairs[k].second);

  std::vector<LocalFanClass> out;
  std::vector<int> slot(cones.size(), -1);
  for (std::size_t i = 0; i < cones.size(); ++i) {
    int r = uf.find(static_cast<int>(i));
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[slot[r]].members.push_back(static_cast<int>(i));
  }

  for (auto& cls : out) {
    std::vector<QVec> rays;
    for (int m : cls.members) rays.insert(rays.end(), cones[m].cone.rays().begin(), cones[m].cone.rays().end());
    cls.hull = cls.members.size() == 1 ? cones[cls.members[0]].cone
                                       : HCone::from_rays(s.param_dim(), rays, cones[cls.members[0]].cone.lineality());
    for (int m : cls.members) {
      for (auto& f : cones[m].cone.facets()) {
        QVec q = cones[m].cone.facet_face(f).interior_point();
        if (!cls.hull.relint_contains(q)) continue;
        bool shared = std::any_of(cls.members.begin(), cls.members.end(),
                                  [&](int o) { return o != m && cones[o].cone.contains(q); });
        if (!shared)
          throw std::logic_error("glued class is not convex: facet " + vec_to_string(f) + " of cone " +
                                 std::to_string(m) + " is interior to the hull but not shared");
      }
    }
    int best = cls.members[0];
    for (int m : cls.members)
      if (compare_lex(cones[m].witness, cones[best].witness) < 0) best = m;
    cls.witness = cones[best].witness;
    cls.witness_ambient = cones[best].witness_ambient;
    cls.stratum = stratum_of(base, cls.witness_ambient);
  }
  return out;
}

}  // namespace

std::vector<LocalFanClass> merge_classes(const std::vector<GroebnerCone>& cones, const WeightSubspace& s,
                                         LocalContext& ctx, int threads) {
  return glue(cones, s, *ctx.base_ring(),
              [&](const GroebnerCone& a, const GroebnerCone& b) {
                return ctx.initials_equal(a.witness_ambient, b.witness_ambient);
              },
              threads);
}

std::vector<LocalFanClass> merge_global_classes(const std::vector<GroebnerCone>& cones, const WeightSubspace& s,
                                                const Ring& base, int threads) {
  auto dehom = [&](const GroebnerCone& c) {
    Stratum st = stratum_of(*base, c.witness_ambient);
    Ring gr = base;
    if (base->weyl()) {
      std::vector<char> mask(base->n, 0);
      for (int i : st.p) mask[i] = 1;
      gr = with_commuting(base, mask);
    }
    std::vector<WeylElement> gens;
    for (auto& g : c.initial) {
      const RingSignature& sig = *g.ring();
      WeylElement d = g;
      if (sig.has_hprime()) d = dehomogenize_hprime(d);
      if (d.ring()->has_h() && !base->has_h()) d = dehomogenize_h(d);
      gens.push_back(d.recast(gr));
    }
    return Ideal(gr, std::move(gens));
  };
  return glue(cones, s, *base,
              [&](const GroebnerCone& a, const GroebnerCone& b) { return same_ideal(dehom(a), dehom(b)); },
              threads);
}

LocalFan assemble_local_fan(std::vector<LocalFanClass> classes, const WeightSubspace& s, LocalContext* ctx,
                            bool cross_check) {
  LocalFan out;
  std::vector<HCone> hulls;
  for (auto& c : classes) hulls.push_back(c.hull);
  out.classes = std::move(classes);
  out.fan = closure_fan(hulls);
  out.report = validate_fan(out.fan);
  if (!out.report.ok || !cross_check || !ctx) return out;
  const RingSignature& base = *ctx->base_ring();
  for (auto [i, j] : out.fan.incidence) {
    Weight wi = s.to_ambient(out.fan.cones[i].interior_point());
    Weight wj = s.to_ambient(out.fan.cones[j].interior_point());
    if (stratum_of(base, wi) != stratum_of(base, wj)) continue;
    if (ctx->initials_equal(wi, wj)) {
      out.report.ok = false;
      out.report.axiom = 4;
      out.report.message = "cone " + std::to_string(i) + " and its facet cone " + std::to_string(j) +
                           " have equal local initial ideals";
      break;
    }
  }
  return out;
}

Ideal translate_base_point(const Ideal& ideal, const QVec& x0) {
  if (static_cast<int>(x0.size()) != ideal.ring->n)
    throw std::invalid_argument("base point has " + std::to_string(x0.size()) + " coordinates, expected " +
                                std::to_string(ideal.ring->n));
  std::vector<WeylElement> gens;
  for (auto& g : ideal.generators) gens.push_back(translate(g, x0));
  return Ideal(ideal.ring, std::move(gens));
}

}  // namespace lgfan
