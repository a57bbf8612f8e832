// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include "support.hpp"

using namespace lgfan;
using namespace testing_support;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (cond) return;
    ok = false;
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

bool division_check_failed = false;
int failures = 0;

void criterion(const std::string& id, const std::string& desc, double limit_s, const std::function<Outcome()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::logic_error& e) {
    std::string what = e.what();
    if (what.find("division") != std::string::npos) division_check_failed = true;
    o.require(false, "exception: " + what);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs > limit_s) {
    std::ostringstream os;
    os << "took longer than " << limit_s << " s";
    o.require(false, os.str());
  }
  if (!o.ok) ++failures;
  std::cout << (o.ok ? "PASS " : "FAIL ") << id << " " << desc << " (" << std::fixed << std::setprecision(2) << secs
            << " s)";
  if (!o.detail.empty()) std::cout << ": " << o.detail;
  std::cout << std::endl;
}

struct LocalRun {
  Enumeration enumeration;
  std::vector<LocalFanClass> classes;
  LocalFan fan;
};

LocalRun local_run(const Ideal& ideal, Region region, std::vector<QVec> columns = {}) {
  Ideal J = local_homogenization(ideal);
  WeightSubspace s = make_subspace(*ideal.ring, region, std::move(columns));
  LocalRun r;
  r.enumeration = enumerate(J, s);
  LocalContext ctx(J);
  r.classes = merge_classes(r.enumeration.cones, s, ctx);
  r.fan = assemble_local_fan(r.classes, s, &ctx);
  return r;
}

std::vector<HCone> cones_of(const Enumeration& e) {
  std::vector<HCone> v;
  for (auto& g : e.cones) v.push_back(g.cone);
  return v;
}

std::string count(std::size_t got, std::size_t want) {
  return std::to_string(got) + " (expected " + std::to_string(want) + ")";
}

Ring bs_ring() { return make_ring(4, RingKind::weyl, Homogenization::none, {"t1", "t2", "x", "y"}); }

Ideal bs_ideal() {
  Ring d = bs_ring();
  return Ideal(d, {P(d, "t1 - y"), P(d, "t2 - (y - (x-1)^2)"), P(d, "(-2x+2)*dt2 + dx"), P(d, "dt1 + dt2 + dy")});
}

// The weight plane (-w1, -w2, 0, 0, w1, w2, 0, 0).
std::vector<QVec> bs_plane() { return {Q({-1, 0, 0, 0, 1, 0, 0, 0}), Q({0, -1, 0, 0, 0, 1, 0, 0})}; }

Ideal lauricella(int n) {
  Ring d = make_ring(n, RingKind::weyl);
  std::string theta;
  for (int i = 1; i <= n; ++i) theta += (i > 1 ? " + " : "") + ("x" + std::to_string(i)) + "*dx" + std::to_string(i);
  std::vector<WeylElement> gens;
  for (int k = 1; k <= n; ++k) {
    std::string xk = "x" + std::to_string(k);
    gens.push_back(P(d, "dx" + std::to_string(k) + " - (" + theta + " + 1/2)*(" + xk + "*d" + xk + " + 1/" +
                            std::to_string(2 * k + 1) + ")"));
  }
  return homogenize_ideal(Ideal(d, gens), Homogenization::h11);
}

// Mutual membership of two ideals of the same homogeneous ring.
bool same_homogeneous_ideal(const Ideal& a, const Ideal& b, const MatrixOrder& order) {
  ReducedBasis ga = buchberger(a, order), gb = buchberger(b, order);
  for (auto& g : a.generators)
    if (!membership(g, gb)) return false;
  for (auto& g : b.generators)
    if (!membership(g, ga)) return false;
  return true;
}

// Global initial ideal at an interior weight, from the initial forms of the homogenized ideal.
Ideal global_initial(const GroebnerCone& c, const Ring& base) {
  Stratum st = stratum_of(*base, c.witness_ambient);
  Ring gr = base;
  if (base->weyl()) {
    std::vector<char> mask(base->n, 0);
    for (int i : st.p) mask[i] = 1;
    gr = with_commuting(base, mask);
  }
  std::vector<WeylElement> gens;
  for (auto& g : c.initial) {
    WeylElement d = g;
    if (d.ring()->has_hprime()) d = dehomogenize_hprime(d);
    if (d.ring()->has_h() && !base->has_h()) d = dehomogenize_h(d);
    gens.push_back(d.recast(gr));
  }
  return Ideal(gr, std::move(gens));
}

Ideal random_ideal(std::mt19937& rng) {
  const int n = 2 + static_cast<int>(rng() % 2);
  Ring r = poly_ring(n);
  const int k = 1 + static_cast<int>(rng() % 3);
  std::vector<WeylElement> gens;
  for (int i = 0; i < k; ++i) gens.push_back(random_poly(r, rng, 2, 4, rng() % 2 == 0));
  return Ideal(r, std::move(gens));
}

RationalPolyhedron random_newton(std::mt19937& rng, int n, Recession rec) {
  Ring r = rec == Recession::orthant ? poly_ring(n) : make_ring(n / 2, RingKind::weyl);
  return newton_polyhedron(random_poly(r, rng, 4, 4, rng() % 2), rec);
}

}  // namespace

int main() {
  checks::enable(true);

  criterion("1", "cusp local fan: 2 maximal cones, rays (-1,0) (-2,-3) (0,-1)", 1.0, [] {
    Outcome o;
    Ring r = xy_ring();
    LocalRun c = local_run(Ideal(r, {P(r, "x^3 - y^2")}), Region::uloc);
    const Fan& f = c.fan.fan;
    o.require(f.maximal().size() == 2, "maximal cones " + count(f.maximal().size(), 2));
    std::set<QVec> rays;
    for (auto& k : f.cones)
      if (k.dim() == 1) rays.insert(primitive(k.rays()[0]));
    o.require(rays == std::set<QVec>{Q({-1, 0}), Q({-2, -3}), Q({0, -1})}, "ray set differs");
    o.require(c.fan.report.ok, "fan invalid: " + c.fan.report.message);
    return o;
  });

  criterion("2", "<1-x3, x1+x2> on the (u1,u2) plane: global fan has 6 cones, local fan 4", 5.0, [] {
    Outcome o;
    Ring r = poly_ring(3);
    LocalRun c = local_run(Ideal(r, {P(r, "1 - x3"), P(r, "x1 + x2")}), Region::uloc, {Q({1, 0, 0}), Q({0, 1, 0})});
    std::size_t global = closure_fan(cones_of(c.enumeration)).cones.size();
    o.require(global == 6, "global cones " + count(global, 6));
    o.require(c.fan.fan.cones.size() == 4, "local cones " + count(c.fan.fan.cones.size(), 4));
    o.require(c.fan.report.ok, "fan invalid: " + c.fan.report.message);
    return o;
  });

  criterion("3", "1+x1+x2: 4 local cones at (1/3,5), 6 at (-1/2,-1/2)", 5.0, [] {
    Outcome o;
    Ring r = poly_ring(2);
    Ideal I(r, {P(r, "1 + x1 + x2")});
    LocalRun generic = local_run(translate_base_point(I, {Scalar(1, 3), Scalar(5)}), Region::uloc);
    LocalRun line = local_run(translate_base_point(I, {Scalar(-1, 2), Scalar(-1, 2)}), Region::uloc);
    o.require(generic.fan.fan.cones.size() == 4, "generic point " + count(generic.fan.fan.cones.size(), 4));
    o.require(line.fan.fan.cones.size() == 6, "point on the zero set " + count(line.fan.fan.cones.size(), 6));
    o.require(generic.fan.report.ok && line.fan.report.ok, "fan invalid");
    return o;
  });

  criterion("4a", "Bernstein-Sato ideal, h(1,1) fan on the weight plane: F1, F2 meeting in w1=w2", 60.0, [] {
    Outcome o;
    Ring d = bs_ring();
    Ideal I = homogenize_ideal(bs_ideal(), Homogenization::h11);
    WeightSubspace s = make_subspace(*d, Region::wloc, bs_plane());
    Enumeration e = enumerate(I, s);
    o.require(e.cones.size() == 2, "maximal cones " + count(e.cones.size(), 2));
    if (e.cones.size() != 2) return o;
    std::set<std::string> keys{e.cones[0].cone.key(), e.cones[1].cone.key()};
    HCone f1(2, {Q({1, -1}), Q({0, 1})}), f2(2, {Q({-1, 1}), Q({1, 0})});
    o.require(keys == std::set<std::string>{f1.key(), f2.key()}, "cones are not {w1>=w2} and {w1<=w2}");
    o.require(intersect(e.cones[0].cone, e.cones[1].cone) == HCone(2, {Q({1, 0})}, {Q({1, -1})}),
              "shared facet is not the ray (1,1)");
    return o;
  });

  criterion("4b", "Bernstein-Sato ideal: initial ideals on F1, F2, L12 match the reference generators", 60.0, [] {
    Outcome o;
    Ring d = bs_ring();
    Ideal I = homogenize_ideal(bs_ideal(), Homogenization::h11);
    const Ring& hr = I.ring;
    WeightSubspace s = make_subspace(*d, Region::wloc, bs_plane());
    struct Face {
      std::string name;
      QVec q;
      std::vector<std::string> reference;
    };
    std::vector<Face> faces{
        {"F1", Q({2, 1}), {"-y", "-x^2+2h*x-h^2", "2h*t2*dt2+(h*x-h^2)*dx+2h^3", "(-2x+2h)*dt2", "dt1"}},
        {"F2", Q({1, 2}), {"-y", "-x^2+2h*x-h^2", "2h*t1*dt1+(h*x-h^2)*dx+2h^3", "(-2x+2h)*dt1", "dt2"}},
        {"L12",
         Q({1, 1}),
         {"-y", "-x^2+2h*x-h^2", "2h*(t1*dt2-t2*dt2)-(h*x-h^2)*dx-2h^3", "-2*(x*dt2-h*dt2)", "dt1+dt2"}},
    };
    const MatrixOrder degree_first = lifted_order(*hr, Weight(8, 0));
    for (auto& f : faces) {
      Weight w = s.to_ambient(f.q);
      std::vector<WeylElement> computed = initial_ideal(buchberger(I, lifted_order(*hr, w)), w);
      std::vector<WeylElement> ref;
      for (auto& g : f.reference) ref.push_back(P(hr, g));
      o.require(same_homogeneous_ideal(Ideal(hr, computed), Ideal(hr, ref), degree_first),
                "in_" + f.name + " differs from the reference");
    }
    return o;
  });

  criterion("4c", "Bernstein-Sato ideal, h' route: F1 and F2 glue into one maximal cone", 60.0, [] {
    Outcome o;
    LocalRun c = local_run(bs_ideal(), Region::wloc, bs_plane());
    o.require(c.classes.size() == 1, "classes " + count(c.classes.size(), 1));
    if (c.classes.size() == 1) o.require(c.classes[0].members.size() == 2, "members " + count(c.classes[0].members.size(), 2));
    o.require(c.fan.fan.maximal().size() == 1, "maximal cones " + count(c.fan.fan.maximal().size(), 1));
    o.require(c.fan.fan.cones.size() == 4, "cones " + count(c.fan.fan.cones.size(), 4));
    o.require(c.fan.report.ok, "fan invalid: " + c.fan.report.message);
    return o;
  });

  for (auto [n, want, limit] : {std::tuple{1, 2, 5.0}, std::tuple{2, 39, 1800.0}}) {
    criterion("5." + std::to_string(n), "Lauricella n=" + std::to_string(n) + ": " + std::to_string(want) +
                                            " maximal cones of the h(1,1) fan over u+v>=0",
              limit, [n = n, want = want] {
                Outcome o;
                Ideal I = lauricella(n);
                WeightSubspace s = make_subspace(*with_homogenization(I.ring, Homogenization::none), Region::wglob);
                Enumeration e = enumerate(I, s);
                o.require(e.cones.size() == static_cast<std::size_t>(want),
                          "maximal cones " + count(e.cones.size(), want));
                return o;
              });
  }

  criterion("6", "g and 1+g: equal global fans, different local fans", 10.0, [] {
    Outcome o;
    Ring r = poly_ring(2);
    Ideal g(r, {P(r, "x1 + x2 + x1*x2^2 + x1^2*x2")});
    Ideal g1(r, {P(r, "1 + x1 + x2 + x1*x2^2 + x1^2*x2")});
    auto global_fan = [&](const Ideal& I) {
      Ideal J = homogenize_ideal(I, Homogenization::alphaH, {1, 1});
      WeightSubspace s = make_subspace(*r, Region::positive);
      Enumeration e = enumerate(J, s);
      std::vector<HCone> hulls;
      for (auto& c : merge_global_classes(e.cones, s, r)) hulls.push_back(c.hull);
      return closure_fan(hulls).cones;
    };
    o.require(global_fan(g) == global_fan(g1), "global fans differ");
    LocalRun a = local_run(g, Region::uloc), b = local_run(g1, Region::uloc);
    o.require(a.fan.fan.cones != b.fan.fan.cones, "local fans coincide");
    o.require(a.fan.report.ok && b.fan.report.ok, "fan invalid");
    return o;
  });

  criterion("7a", "closed local fans of 60 random ideals are valid fans", 300.0, [] {
    Outcome o;
    std::mt19937 rng(20261018);
    for (int t = 0; t < 60; ++t) {
      Ideal I = random_ideal(rng);
      LocalRun c = local_run(I, Region::uloc);
      o.require(c.fan.report.ok, "ideal " + std::to_string(t) + ": " + c.fan.report.message);
    }
    return o;
  });

  criterion("7b", "normal cone of a Minkowski sum is the intersection (150 pairs)", 120.0, [] {
    Outcome o;
    std::mt19937 rng(4242);
    for (int t = 0; t < 150; ++t) {
      const bool weyl = t % 3 == 2;
      const int n = weyl ? 2 : 2 + t % 2;
      const Recession rec = weyl ? Recession::wloc_star : Recession::orthant;
      RationalPolyhedron a = random_newton(rng, n, rec), b = random_newton(rng, n, rec);
      RationalPolyhedron sum = minkowski_sum(a, b);
      HCone region = weyl ? wloc_cone(1) : uloc_cone(n);
      QVec w = region.interior_point();
      std::uniform_int_distribution<int> k(0, 4);
      for (auto& r : region.rays()) {
        const int c = k(rng);
        for (std::size_t i = 0; i < w.size(); ++i) w[i] += c * r[i];
      }
      HCone lhs = normal_cone(sum, w, region);
      HCone rhs = intersect(normal_cone(a, w, region), normal_cone(b, w, region));
      o.require(lhs == rhs, "pair " + std::to_string(t) + " at " + vec_to_string(w));
      RationalPolyhedron face = face_of(sum, w);
      std::set<QVec> fs(face.points().begin(), face.points().end());
      RationalPolyhedron fab = minkowski_sum(face_of(a, w), face_of(b, w));
      o.require(fs == std::set<QVec>(fab.points().begin(), fab.points().end()),
                "face of the sum at pair " + std::to_string(t));
    }
    return o;
  });

  criterion("7c", "interior weights: local and global initial ideals partition the cones alike (>=100 weights)", 300.0,
            [] {
              Outcome o;
              std::mt19937 rng(777);
              std::vector<Ideal> ideals;
              Ring r2 = poly_ring(2);
              ideals.push_back(Ideal(r2, {P(r2, "1 + x1 + x2 + x1*x2^2 + x1^2*x2")}));
              ideals.push_back(Ideal(r2, {P(r2, "x1^2 + x2^3 + x1*x2"), P(r2, "x1 - x2^2 + x1^2*x2")}));
              Ring d1 = make_ring(1, RingKind::weyl);
              ideals.push_back(Ideal(d1, {P(d1, "dx1 - (x1*dx1 + 1/2)*(x1*dx1 + 1/3)")}));
              while (ideals.size() < 10) ideals.push_back(random_ideal(rng));
              int weights = 0;
              for (std::size_t t = 0; t < ideals.size(); ++t) {
                const Ideal& I = ideals[t];
                const Region region = I.ring->weyl() ? Region::wloc : Region::uloc;
                Ideal J = local_homogenization(I);
                WeightSubspace s = make_subspace(*I.ring, region);
                Enumeration e = enumerate(J, s);
                LocalContext ctx(J);
                std::vector<LocalFanClass> local = merge_classes(e.cones, s, ctx);
                std::vector<LocalFanClass> global = merge_global_classes(e.cones, s, I.ring);
                auto members = [](const std::vector<LocalFanClass>& cl) {
                  std::set<std::vector<int>> m;
                  for (auto& c : cl) m.insert(c.members);
                  return m;
                };
                o.require(members(local) == members(global), "ideal " + std::to_string(t) + ": classes differ");
                std::vector<Ideal> global_initials;
                for (auto& c : e.cones) global_initials.push_back(global_initial(c, I.ring));
                for (int k = 0; k < 16; ++k) {
                  QVec w = s.region.interior_point();
                  std::uniform_int_distribution<int> coef(0, 5);
                  for (auto& ray : s.region.rays()) {
                    const int c = coef(rng);
                    for (std::size_t i = 0; i < w.size(); ++i) w[i] += c * ray[i];
                  }
                  GroebnerCone at = groebner_cone(J, w, s);
                  if (at.cone.dim() != s.param_dim() || !at.cone.relint_contains(w)) continue;
                  int owner = -1;
                  for (std::size_t c = 0; c < e.cones.size(); ++c)
                    if (e.cones[c].cone == at.cone) owner = static_cast<int>(c);
                  o.require(owner >= 0, "weight " + vec_to_string(w) + " is not in an enumerated cone");
                  if (owner < 0) continue;
                  const LocalFanClass* cls = nullptr;
                  for (auto& c : local)
                    if (std::find(c.members.begin(), c.members.end(), owner) != c.members.end()) cls = &c;
                  Ideal gw = global_initial(at, I.ring);
                  for (std::size_t c = 0; c < e.cones.size(); ++c) {
                    bool member = std::find(cls->members.begin(), cls->members.end(), static_cast<int>(c)) !=
                                  cls->members.end();
                    bool loc = ctx.initials_equal(w, e.cones[c].witness_ambient);
                    bool glob = same_ideal(gw, global_initials[c]);
                    o.require(loc == member, "local equality disagrees with the class at " + vec_to_string(w));
                    o.require(loc == glob, "local and global equality differ at " + vec_to_string(w));
                  }
                  ++weights;
                }
              }
              o.require(weights >= 100, "only " + std::to_string(weights) + " interior weights tested");
              return o;
            });

  criterion("7d", "alpha-homogeneous ideals need no gluing (25 ideals)", 300.0, [] {
    Outcome o;
    std::mt19937 rng(99);
    int tested = 0;
    while (tested < 25) {
      const int n = 2 + static_cast<int>(rng() % 2);
      Ring r = poly_ring(n);
      std::vector<int> alpha;
      for (int i = 0; i < n; ++i) alpha.push_back(1 + static_cast<int>(rng() % 3));
      std::vector<WeylElement> gens;
      const int k = 1 + static_cast<int>(rng() % 2);
      for (int i = 0; i < k; ++i) {
        WeylElement f = random_quasi_homogeneous(r, alpha, 3 + static_cast<int>(rng() % 4), rng, 3);
        if (!f.is_zero()) gens.push_back(f);
      }
      if (gens.empty()) continue;
      LocalRun c = local_run(Ideal(r, gens), Region::uloc);
      o.require(c.classes.size() == c.enumeration.cones.size(),
                "ideal " + std::to_string(tested) + " glued " + std::to_string(c.enumeration.cones.size()) +
                    " cones into " + std::to_string(c.classes.size()));
      o.require(c.fan.report.ok, "fan invalid: " + c.fan.report.message);
      ++tested;
    }
    return o;
  });

  criterion("7e", "every division in the suite satisfied its identity and support conditions", 1.0, [] {
    Outcome o;
    o.require(checks::divisions_checked() > 0, "no division was checked");
    o.require(!division_check_failed, "a division check failed");
    std::cout << "  divisions checked: " << checks::divisions_checked() << "\n";
    return o;
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
