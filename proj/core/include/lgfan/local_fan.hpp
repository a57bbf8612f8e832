/**
 * @file local_fan.hpp
 * Support strata, comparison of local initial ideals by ecart division, gluing
 * of enumerated cones into local classes and assembly of the closed local fan.
 */
#pragma once

#include <mutex>
#include <unordered_map>

#include "lgfan/enumeration.hpp"

namespace lgfan {

// m: x-slots with u_i < 0. p (Weyl only): pairs with u_i + v_i > 0.
struct Stratum {
  std::vector<int> m, p;
  bool operator==(const Stratum& o) const { return m == o.m && p == o.p; }
  bool operator!=(const Stratum& o) const { return !(*this == o); }
  std::string to_string() const;
};

// `sig` is the un-homogenized ring (k[x], D or h01(D)).
Stratum stratum_of(const RingSignature& sig, const Weight& w);

/**
 * Local standard bases of one ideal at many weights, cached per weight.
 * The ideal is given homogenized: alphaH for k[x], doubleH for h01(D).
 * Thread-safe.
 */
class LocalContext {
 public:
  explicit LocalContext(Ideal homogenized);

  // k[x] or h01(D)
  const Ring& base_ring() const { return base_; }
  const Ideal& homogenized() const { return ideal_; }

  LocalBasis basis(const Weight& w);
  // in_w(I) == in_w'(I) in the graded ring of their common stratum.
  bool initials_equal(const Weight& w1, const Weight& w2);

 private:
  bool contained(const LocalBasis& a, const Weight& wa, const LocalBasis& b, const Weight& wb, const Ring& gr);

  Ideal ideal_;
  Ring base_;
  std::mutex mu_;
  std::unordered_map<std::string, LocalBasis> cache_;
};

/// Homogenized ideal for the local computations: alphaH(1..1) for k[x], doubleH of
/// generators of h01(I) for D, doubleH directly for an ideal of h01(D).
Ideal local_homogenization(const Ideal& ideal);

bool local_initials_equal(const Ideal& ideal, const Weight& w1, const Weight& w2);

struct LocalFanClass {
  std::vector<int> members;  // indices into the enumerated cones
  HCone hull;
  QVec witness;              // smallest member witness
  Weight witness_ambient;
  Stratum stratum;
};

/// Union-find over adjacent cones with equal local initial ideals; each class
/// is checked to be convex (std::logic_error otherwise).
std::vector<LocalFanClass> merge_classes(const std::vector<GroebnerCone>& cones, const WeightSubspace& s,
                                         LocalContext& ctx, int threads = 1);

/// Same gluing using equality of global (dehomogenized) initial ideals.
std::vector<LocalFanClass> merge_global_classes(const std::vector<GroebnerCone>& cones,
                                                const WeightSubspace& s, const Ring& base, int threads = 1);

struct LocalFan {
  std::vector<LocalFanClass> classes;
  Fan fan;
  FanReport report;
};

/// Closed fan of the class hulls and all their faces, validated. With `cross_check`,
/// a face and a cone containing it in the same stratum must have different local
/// initial ideals (axiom 4 in the report otherwise).
LocalFan assemble_local_fan(std::vector<LocalFanClass> classes, const WeightSubspace& s, LocalContext* ctx,
                            bool cross_check = true);

/// x -> x + x0 on every generator.
Ideal translate_base_point(const Ideal& ideal, const QVec& x0);

}  // namespace lgfan
