/**
 * @file polyhedra.hpp
 * Exact rational polyhedral cones, Newton polyhedra with a recession cone,
 * normal cones and polyhedral fans.
 *
 * An HCone is canonicalized on construction: every accessor is cheap and two
 * cones are equal exactly when their canonical H-forms agree.
 */
#pragma once

#include <optional>
#include <string>

#include "lgfan/algebra.hpp"

namespace lgfan {

Scalar dot(const QVec& a, const QVec& b);
int compare_lex(const QVec& a, const QVec& b);
std::vector<QVec> row_space_basis(const std::vector<QVec>& rows);  // reduced echelon, primitive

struct VRep {
  std::vector<QVec> lineality;
  std::vector<QVec> rays;
};

/// Double description: generators of {x : A x >= 0, B x = 0}.
VRep double_description(int dim, const std::vector<QVec>& ineqs, const std::vector<QVec>& eqs);

class HCone {
 public:
  HCone() = default;
  HCone(int ambient, const std::vector<QVec>& ineqs, const std::vector<QVec>& eqs = {});
  static HCone from_rays(int ambient, const std::vector<QVec>& rays,
                         const std::vector<QVec>& lineality = {});
  static HCone whole_space(int ambient) { return HCone(ambient, {}); }
  static HCone origin(int ambient);

  int ambient() const { return ambient_; }
  int dim() const { return dim_; }
  // inward primitive covectors reduced modulo the equations, sorted
  const std::vector<QVec>& facets() const { return facets_; }
  // reduced echelon basis of the orthogonal complement of the span
  const std::vector<QVec>& equations() const { return equations_; }
  const std::vector<QVec>& lineality() const { return lineality_; }
  // extreme rays modulo the lineality space (reduced against its echelon basis)
  const std::vector<QVec>& rays() const { return rays_; }
  const QVec& interior_point() const { return interior_; }
  bool has_interior_point() const { return dim_ > 0; }
  bool is_pointed() const { return lineality_.empty(); }

  bool contains(const QVec& p) const;
  bool relint_contains(const QVec& p) const;
  bool contains(const HCone& other) const;

  const std::string& key() const { return key_; }
  bool operator==(const HCone& o) const { return key_ == o.key_; }
  bool operator!=(const HCone& o) const { return key_ != o.key_; }

  // The face of this cone cut out by the facet `f` (an entry of facets()).
  HCone facet_face(const QVec& f) const;
  // Smallest face containing p (p must lie in the cone).
  HCone smallest_face_containing(const QVec& p) const;

 private:
  void canonicalize(const std::vector<QVec>& ineqs, const std::vector<QVec>& eqs);

  int ambient_ = 0;
  int dim_ = 0;
  std::vector<QVec> facets_, equations_, lineality_, rays_;
  QVec interior_;
  std::string key_;
};

/// Orders cones by (dim desc, equations lex, facets lex).
bool canonical_less(const HCone& a, const HCone& b);

HCone intersect(const HCone& a, const HCone& b);
bool is_face(const HCone& f, const HCone& c);
std::vector<HCone> faces(const HCone& c);

struct LinealityQuotient {
  std::vector<QVec> basis;
  HCone projected;
};
LinealityQuotient lineality_quotient(const HCone& c);

// ---------------------------------------------------------------------------

enum class Recession { orthant, wloc_star };

class RationalPolyhedron {
 public:
  RationalPolyhedron() = default;
  RationalPolyhedron(int dim, Recession rec, std::vector<QVec> points, bool minimize = true);

  int dim() const { return dim_; }
  Recession recession() const { return rec_; }
  const std::vector<QVec>& points() const { return points_; }
  // generators of the recession cone (restricted for faces)
  const std::vector<QVec>& recession_generators() const { return rec_gens_; }

  bool operator==(const RationalPolyhedron& o) const;

  friend RationalPolyhedron face_of(const RationalPolyhedron& p, const QVec& w);

 private:
  int dim_ = 0;
  Recession rec_ = Recession::orthant;
  std::vector<QVec> points_;
  std::vector<QVec> rec_gens_;
};

std::vector<QVec> recession_generators(int dim, Recession rec);
/// Dickson-minimal points under the recession monoid.
std::vector<QVec> minimal_points(const std::vector<QVec>& pts, Recession rec);

RationalPolyhedron newton_polyhedron(const WeylElement& g, Recession rec);
RationalPolyhedron face_of(const RationalPolyhedron& p, const QVec& w);
HCone normal_cone(const RationalPolyhedron& p, const QVec& w, const HCone& region);
RationalPolyhedron minkowski_sum(const RationalPolyhedron& a, const RationalPolyhedron& b);

// ---------------------------------------------------------------------------

struct Fan {
  std::vector<HCone> cones;                    // canonical order
  std::vector<std::pair<int, int>> incidence;  // (facet index, cone index)

  std::vector<int> maximal() const;
  int count_dim(int d) const;
};

/// Deduplicates, sorts canonically and computes facet incidences.
Fan make_fan(std::vector<HCone> cones);
/// The cones plus all their faces.
Fan closure_fan(const std::vector<HCone>& cones);

struct FanReport {
  bool ok = true;
  int axiom = 0;  // 1: face missing, 2: bad intersection, 3: overlapping interiors
  std::string message;
};
FanReport validate_fan(const Fan& f);

// Weight regions as cones.
HCone uloc_cone(int n);
HCone wloc_cone(int n);
HCone wglob_cone(int n);
HCone positive_cone(int d);

std::string vec_to_string(const QVec& v);

}  // namespace lgfan
