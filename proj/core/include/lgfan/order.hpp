/**
 * @file order.hpp
 * Matrix term orders over the exponent slots of a ring signature.
 *
 * Rows are compared lexicographically; every factory appends a
 * degree-reverse-lexicographic tail so the order is total.
 */
#pragma once

#include "lgfan/algebra.hpp"

namespace lgfan {

class MatrixOrder {
 public:
  MatrixOrder() = default;
  // Rows are rescaled to primitive integer vectors. They must span the slot space.
  MatrixOrder(int slots, const std::vector<QVec>& rows);

  int slots() const { return slots_; }
  const std::vector<std::vector<mpz_class>>& rows() const { return rows_; }
  std::vector<QVec> rational_rows() const;

  // -1, 0, 1
  int compare(const Exponent& a, const Exponent& b) const;
  bool less(const Exponent& a, const Exponent& b) const { return compare(a, b) < 0; }

  // 1 < x for every slot x
  bool is_well_order() const;
  // x_i < 1 for every x-slot
  bool is_local(const RingSignature& sig) const;
  // x_i < 1 and x_i d_i > 1
  bool is_admissible(const RingSignature& sig) const;
  bool is_block_on_hprime(const RingSignature& sig) const;

  bool operator==(const MatrixOrder& o) const { return slots_ == o.slots_ && rows_ == o.rows_; }

 private:
  int slots_ = 0;
  std::vector<std::vector<mpz_class>> rows_;
  std::vector<std::vector<long long>> small_;
  bool fast_ = false;
};

struct OrderLess {
  const MatrixOrder* order;
  bool operator()(const Exponent& a, const Exponent& b) const { return order->less(a, b); }
};

// Row helpers over the slots of `sig`.
QVec weight_row(const RingSignature& sig, const Weight& w);
QVec total_degree_row(const RingSignature& sig);
// |beta| + k
QVec h01_degree_row(const RingSignature& sig);
// alpha.a + k
QVec alpha_degree_row(const RingSignature& sig);
std::vector<QVec> degrevlex_rows(int slots);

MatrixOrder degrevlex(const RingSignature& sig);
MatrixOrder from_rows(const RingSignature& sig, std::vector<QVec> rows);
// Negative degree first: local on every slot.
MatrixOrder local_degrevlex(const RingSignature& sig);
// -|a| + 2|b| first: x_i < 1 and x_i d_i > 1 (Weyl rings).
MatrixOrder admissible_base(const RingSignature& sig);

MatrixOrder refine_by_weight(const RingSignature& sig, const Weight& w, const MatrixOrder& base);
// The h-lift of an order on the un-homogenized slots: compare the homogenizing
// grading first, then `base` (extended by zero on h, h').
MatrixOrder lift_to_h(const RingSignature& homogenized, const MatrixOrder& base);
// Total degree (all slots, h' included), then `base1` on (alpha, beta, k).
MatrixOrder block_order_hprime(const RingSignature& sig, const MatrixOrder& base1);

// The w-refined well order used for Groebner cones and local standard bases of a
// homogeneous ideal in the given homogenized ring.
MatrixOrder lifted_order(const RingSignature& sig, const Weight& w);

// Order induced on the ring without the slot `slot`, where that slot is determined
// by the homogeneous grading row (`grading[slot]` must be 1).
MatrixOrder dehomogenize_order(const MatrixOrder& o, const QVec& grading, int slot);

// Leading data of a nonzero element.
struct LeadingData {
  Exponent exp;
  Scalar coeff;
};
LeadingData leading_data(const WeylElement& p, const MatrixOrder& order);
Exponent leading_exponent(const WeylElement& p, const MatrixOrder& order);

// Primitive integer vector proportional to v (positive multiple).
QVec primitive(const QVec& v);

}  // namespace lgfan
