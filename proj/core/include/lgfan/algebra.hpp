/**
 * @file algebra.hpp
 * Exact scalars, ring signatures and normally ordered elements of the
 * polynomial rings and (homogenized) Weyl algebras used throughout.
 *
 * Slot layout of an exponent vector: x_1..x_n, then d_1..d_n (Weyl only),
 * then h, then h' (doubly homogenized only).
 */
#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace lgfan {

using Scalar = mpq_class;
using Exponent = std::vector<int>;
using QVec = std::vector<Scalar>;

enum class RingKind { commutative, weyl };
enum class Homogenization { none, h01, h11, doubleH, alphaH };

struct RingSignature {
  int n = 0;
  RingKind kind = RingKind::commutative;
  Homogenization hom = Homogenization::none;
  std::vector<int> alpha;      // alphaH weights, one per x
  std::vector<char> commuting; // weyl only: pairs (x_i, d_i) that commute (graded rings)
  std::vector<std::string> names;

  int slots() const;
  bool weyl() const { return kind == RingKind::weyl; }
  bool has_h() const { return hom != Homogenization::none; }
  bool has_hprime() const { return hom == Homogenization::doubleH; }
  int h_slot() const { return weyl() ? 2 * n : n; }
  int hprime_slot() const { return 2 * n + 1; }
  int weight_dim() const { return weyl() ? 2 * n : n; }
  bool pair_commutes(int i) const { return !commuting.empty() && commuting[i]; }

  // names for every slot, x names first
  std::string slot_name(int s) const;
  // structural equality (names ignored)
  bool same_ring(const RingSignature& o) const;
};

using Ring = std::shared_ptr<const RingSignature>;

Ring make_ring(int n, RingKind kind, Homogenization hom = Homogenization::none,
               std::vector<std::string> names = {}, std::vector<int> alpha = {});
// Same ring with a different homogenization (names and alpha kept).
Ring with_homogenization(const Ring& r, Homogenization hom, std::vector<int> alpha = {});
// Weyl ring whose pairs listed in `mask` commute: the associated graded ring of a stratum.
Ring with_commuting(const Ring& r, std::vector<char> mask);

class SignatureMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ExponentLess {
  bool operator()(const Exponent& a, const Exponent& b) const { return a < b; }
};

/** Normally ordered element: finite map exponent -> nonzero rational coefficient. */
class WeylElement {
 public:
  using TermMap = std::map<Exponent, Scalar, ExponentLess>;

  WeylElement() = default;
  explicit WeylElement(Ring r) : ring_(std::move(r)) {}
  WeylElement(Ring r, TermMap terms);

  static WeylElement constant(Ring r, const Scalar& c);
  static WeylElement monomial(Ring r, Exponent e, const Scalar& c = 1);
  static WeylElement variable(Ring r, int slot);

  const Ring& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Scalar coeff(const Exponent& e) const;

  void add_term(const Exponent& e, const Scalar& c);

  WeylElement operator-() const;
  WeylElement& operator+=(const WeylElement& o);
  WeylElement& operator-=(const WeylElement& o);
  WeylElement& operator*=(const Scalar& c);
  bool operator==(const WeylElement& o) const { return terms_ == o.terms_; }
  bool operator!=(const WeylElement& o) const { return !(*this == o); }

  std::vector<Exponent> support() const;
  // Same terms, different ring (e.g. moving into an associated graded ring).
  WeylElement recast(Ring r) const;

  std::string to_string() const;

 private:
  Ring ring_;
  TermMap terms_;
};

WeylElement add(const WeylElement& p, const WeylElement& q);
WeylElement operator+(const WeylElement& p, const WeylElement& q);
WeylElement operator-(const WeylElement& p, const WeylElement& q);
WeylElement operator*(const Scalar& c, const WeylElement& p);
WeylElement multiply(const WeylElement& p, const WeylElement& q);
WeylElement operator*(const WeylElement& p, const WeylElement& q);
WeylElement power(const WeylElement& p, unsigned k);

// Product of the monomial x^a d^b h^k h'^l (coefficient c) with q from the left.
WeylElement multiply_monomial_left(const Exponent& m, const Scalar& c, const WeylElement& q);
// Raw normal ordering of a product of two monomials.
void multiply_monomials(const RingSignature& sig, const Exponent& a, const Exponent& b,
                        const Scalar& c, WeylElement::TermMap& out);

int total_degree(const Exponent& e);
int total_degree(const WeylElement& p);

WeylElement homogenize(const WeylElement& p, Homogenization mode, std::vector<int> alpha = {});
// variable: the slot to set to 1 (h_slot() or hprime_slot())
WeylElement dehomogenize(const WeylElement& p, int slot);
WeylElement dehomogenize_h(const WeylElement& p);
WeylElement dehomogenize_hprime(const WeylElement& p);

bool is_homogeneous(const WeylElement& p);

// Weights live on the x-slots (and d-slots for Weyl); h and h' weigh 0.
using Weight = QVec;
Scalar weight_dot(const RingSignature& sig, const Weight& w, const Exponent& e);
Scalar weight_order_of(const WeylElement& p, const Weight& w);
WeylElement initial_form(const WeylElement& p, const Weight& w);
// Splits p into its w-homogeneous parts, ordered by increasing weight.
std::vector<WeylElement> weight_components(const WeylElement& p, const Weight& w);
// The projection of an exponent to the weighted slots (drops h, h').
QVec project_exponent(const RingSignature& sig, const Exponent& e);

// Weight regions.
bool in_uloc(const Weight& u);
bool in_uloc_strict(const Weight& u);
bool in_wloc(int n, const Weight& w);
bool in_wloc_strict(int n, const Weight& w);

// x_i -> x_i + x0_i
WeylElement translate(const WeylElement& p, const QVec& x0);

std::string scalar_to_string(const Scalar& c);
Scalar parse_scalar(const std::string& s);

}  // namespace lgfan
