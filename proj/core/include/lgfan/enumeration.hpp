/**
 * @file enumeration.hpp
 * Groebner cones of homogeneous ideals on a linear weight subspace and the
 * facet-flipping enumeration of all maximal cones.
 */
#pragma once

#include "lgfan/groebner.hpp"
#include "lgfan/polyhedra.hpp"

namespace lgfan {

enum class Region { uloc, wloc, wglob, positive, full };

Region parse_region(const std::string& s);
std::string region_name(Region r);

/**
 * A weight subspace: parameter vectors q map to ambient weights sum_j q_j columns[j].
 * The region is pulled back to parameter space.
 */
struct WeightSubspace {
  int ambient = 0;
  std::vector<QVec> columns;
  HCone region;

  int param_dim() const { return static_cast<int>(columns.size()); }
  Weight to_ambient(const QVec& q) const;
  // Ambient covector r -> parameter covector (r . columns[j])_j.
  QVec pull_back(const QVec& r) const;
};

// Region cone in the ambient weight space of an un-homogenized ring.
HCone region_cone(const RingSignature& sig, Region region);

// `columns` empty means the identity. Throws if the columns are not independent.
WeightSubspace make_subspace(const RingSignature& sig, Region region, std::vector<QVec> columns = {});

struct GroebnerCone {
  HCone cone;                        // parameter space
  QVec witness;                      // canonical relative interior point (parameters)
  Weight witness_ambient;
  ReducedBasis basis;
  std::vector<WeylElement> initial;  // initial forms at the witness
};

/// The closed Groebner cone of `ideal` (homogeneous, in an alphaH, h11 or doubleH ring)
/// containing the parameter point q, intersected with the region.
GroebnerCone groebner_cone(const Ideal& ideal, const QVec& q, const WeightSubspace& s);

/// The maximal cone on the other side of `facet`, a facet covector of `c.cone`.
GroebnerCone flip(const GroebnerCone& c, const QVec& facet, const Ideal& ideal, const WeightSubspace& s);

// True when the facet lies on the boundary of the region.
bool is_border_facet(const GroebnerCone& c, const QVec& facet, const WeightSubspace& s);

/// A deterministic full-dimensional starting cone; throws after 64 candidates.
GroebnerCone start_cone(const Ideal& ideal, const WeightSubspace& s);

struct EnumerationOptions {
  int threads = 1;
  std::size_t max_cones = 0;  // 0: unbounded
};

struct Enumeration {
  std::vector<GroebnerCone> cones;  // canonical order
  std::vector<QVec> lineality;
};

Enumeration enumerate(const Ideal& ideal, const WeightSubspace& s, const EnumerationOptions& opt = {});

}  // namespace lgfan
