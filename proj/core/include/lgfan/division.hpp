/**
 * @file division.hpp
 * Division with remainder (full reduction along the Delta-partition) and
 * Mora's ecart division for local orders with a restricted unit block.
 */
#pragma once

#include <atomic>
#include <cstdint>

#include "lgfan/order.hpp"

namespace lgfan {

/// Delta_j = (e_j + N^m) minus the earlier regions; `region` returns -1 for the complement.
class DeltaPartition {
 public:
  explicit DeltaPartition(std::vector<Exponent> leading) : leading_(std::move(leading)) {}
  int region(const Exponent& e) const;
  const std::vector<Exponent>& leading() const { return leading_; }

 private:
  std::vector<Exponent> leading_;
};

bool divides(const Exponent& a, const Exponent& b);
Exponent exponent_difference(const Exponent& b, const Exponent& a);

struct DivisionResult {
  std::vector<WeylElement> quotients;
  WeylElement remainder;
};

/**
 * P = sum Q_j P_j + R with ND(Q_j) + exp(P_j) in Delta_j and ND(R) in the
 * complement. Terminates for well orders; other orders get a step budget and
 * throw std::runtime_error when it is exhausted.
 */
DivisionResult divide(const WeylElement& p, const std::vector<WeylElement>& divisors,
                      const MatrixOrder& order);

struct MoraResult {
  WeylElement unit;
  std::vector<WeylElement> quotients;
  WeylElement remainder;
};

/**
 * Ecart division: unit * f = sum q_j g_j + remainder. Intermediate remainders may be
 * reused as reducers only with a multiplier monomial supported on `allowed_unit_slots`.
 * The remainder is zero or has a leading exponent divisible by no usable reducer.
 */
MoraResult mora_divide(const WeylElement& f, const std::vector<WeylElement>& divisors,
                       const MatrixOrder& order, const std::vector<int>& allowed_unit_slots);

// Allowed unit block for a weight: the x-slots of weight zero.
std::vector<int> allowed_unit_block(const RingSignature& sig, const Weight& w);

// Checking hooks: when enabled every divide/mora_divide call re-expands its
// output and checks the support conditions, throwing std::logic_error on failure.
namespace checks {
void enable(bool on);
bool enabled();
std::uint64_t divisions_checked();
}  // namespace checks

}  // namespace lgfan
