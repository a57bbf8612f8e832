/**
 * @file groebner.hpp
 * Buchberger completion for left ideals, reduced bases, initial ideals,
 * local standard bases obtained by dehomogenization, and membership.
 */
#pragma once

#include "lgfan/division.hpp"

namespace lgfan {

struct Ideal {
  Ring ring;
  std::vector<WeylElement> generators;

  Ideal() = default;
  Ideal(Ring r, std::vector<WeylElement> gens);
};

struct ReducedBasis {
  MatrixOrder order;
  std::vector<WeylElement> elements;  // sorted by increasing leading exponent
  bool homogeneous = false;
};

WeylElement s_pair(const WeylElement& g1, const WeylElement& g2, const MatrixOrder& order);

/// Reduced basis for a well order. Throws std::invalid_argument otherwise.
ReducedBasis buchberger(const Ideal& ideal, const MatrixOrder& order);

std::vector<WeylElement> initial_ideal(const ReducedBasis& basis, const Weight& w);

bool membership(const WeylElement& p, const ReducedBasis& basis);

Ideal homogenize_ideal(const Ideal& ideal, Homogenization mode, std::vector<int> alpha = {});

/**
 * Generators of h01(I) for I in D: homogenize a basis for an order refining
 * the (0,1)-weight, computed in h01(D) and cleared of h-powers.
 */
Ideal h01_ideal(const Ideal& d_ideal);

/**
 * Local standard basis of an un-homogenized ideal (a polynomial ideal, or an ideal of
 * h01(D) given by generators of h01(I)), for a weight in Uloc (resp. Wloc).
 * `order` is the induced local order on the un-homogenized ring.
 */
struct LocalBasis {
  std::vector<WeylElement> elements;
  MatrixOrder order;
};
LocalBasis local_standard_basis(const Ideal& ideal, const Weight& w);
// Same, starting from the homogenized ideal (alphaH or doubleH).
LocalBasis local_standard_basis_from_homogenized(const Ideal& homogenized, const Weight& w);

/// Global reduced basis of an ideal of k[x] or D, computed through a homogenization
/// with a degree order and dehomogenized. The returned order lives on the input ring.
ReducedBasis global_basis(const Ideal& ideal);

/// Mutual membership test of two ideals given by generators (global, homogenized route).
bool same_ideal(const Ideal& a, const Ideal& b);

}  // namespace lgfan
