#include "lgfan/division.hpp"

#include <algorithm>
#include <limits>

namespace lgfan {

namespace checks {
namespace {
std::atomic<bool> g_on{false};
std::atomic<std::uint64_t> g_count{0};
}  // namespace
void enable(bool on) { g_on = on; }
bool enabled() { return g_on.load(); }
std::uint64_t divisions_checked() { return g_count.load(); }
void count() { ++g_count; }
}  // namespace checks

bool divides(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exponent exponent_difference(const Exponent& b, const Exponent& a) {
  Exponent d(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) d[i] = b[i] - a[i];
  return d;
}

int DeltaPartition::region(const Exponent& e) const {
  for (std::size_t j = 0; j < leading_.size(); ++j)
    if (divides(leading_[j], e)) return static_cast<int>(j);
  return -1;
}

namespace {

constexpr long kLocalStepBudget = 200000;

void verify_division(const WeylElement& p, const std::vector<WeylElement>& divisors,
                     const DivisionResult& r, const MatrixOrder& order) {
  std::vector<Exponent> leads;
  for (auto& d : divisors) leads.push_back(leading_exponent(d, order));
  DeltaPartition delta(leads);
  WeylElement sum = r.remainder;
  for (std::size_t j = 0; j < divisors.size(); ++j) {
    sum += multiply(r.quotients[j], divisors[j]);
    for (auto& [e, c] : r.quotients[j].terms()) {
      Exponent s = e;
      for (std::size_t i = 0; i < s.size(); ++i) s[i] += leads[j][i];
      if (delta.region(s) != static_cast<int>(j))
        throw std::logic_error("division: quotient support leaves its Delta region");
    }
  }
  if (sum != p) throw std::logic_error("division: identity P = sum Q_j P_j + R fails");
  for (auto& [e, c] : r.remainder.terms())
    if (delta.region(e) != -1) throw std::logic_error("division: remainder support not in complement");
  checks::count();
}

}  // namespace

DivisionResult divide(const WeylElement& p, const std::vector<WeylElement>& divisors,
                      const MatrixOrder& order) {
  DivisionResult out;
  out.remainder = WeylElement(p.ring());
  std::vector<LeadingData> leads;
  for (auto& d : divisors) {
    if (d.is_zero()) throw std::invalid_argument("zero divisor");
    if (!d.ring()->same_ring(*p.ring())) throw SignatureMismatch("divisor ring");
    leads.push_back(leading_data(d, order));
    out.quotients.emplace_back(p.ring());
  }
  const bool bounded = !order.is_well_order();
  long steps = 0;
  WeylElement work = p;
  while (!work.is_zero()) {
    if (bounded && ++steps > kLocalStepBudget)
      throw std::runtime_error("division did not terminate within the step budget");
    LeadingData lt = leading_data(work, order);
    int j = -1;
    for (std::size_t k = 0; k < leads.size(); ++k) {
      if (divides(leads[k].exp, lt.exp)) {
        j = static_cast<int>(k);
        break;
      }
    }
    if (j < 0) {
      out.remainder.add_term(lt.exp, lt.coeff);
      work.add_term(lt.exp, -lt.coeff);
      continue;
    }
    Exponent m = exponent_difference(lt.exp, leads[j].exp);
    Scalar c = lt.coeff / leads[j].coeff;
    out.quotients[j].add_term(m, c);
    work -= multiply_monomial_left(m, c, divisors[j]);
  }
  if (checks::enabled()) verify_division(p, divisors, out, order);
  return out;
}

std::vector<int> allowed_unit_block(const RingSignature& sig, const Weight& w) {
  std::vector<int> out;
  for (int i = 0; i < sig.n; ++i)
    if (w.at(i) == 0) out.push_back(i);
  return out;
}

namespace {

int ecart(const WeylElement& p, const Exponent& lead) {
  return total_degree(p) - total_degree(lead);
}

struct Reducer {
  WeylElement poly;
  LeadingData lead;
  int ecart;
  bool original;
  std::size_t index;  // divisor index, or slot in the history
};

struct History {
  WeylElement unit;
  std::vector<WeylElement> quotients;
};

}  // namespace

MoraResult mora_divide(const WeylElement& f, const std::vector<WeylElement>& divisors,
                       const MatrixOrder& order, const std::vector<int>& allowed_unit_slots) {
  const Ring& ring = f.ring();
  const int slots = ring->slots();
  std::vector<char> allowed(slots, 0);
  for (int s : allowed_unit_slots) allowed.at(s) = 1;

  std::vector<Reducer> reducers;
  for (std::size_t j = 0; j < divisors.size(); ++j) {
    if (divisors[j].is_zero()) throw std::invalid_argument("zero divisor");
    LeadingData ld = leading_data(divisors[j], order);
    reducers.push_back({divisors[j], ld, ecart(divisors[j], ld.exp), true, j});
  }
  std::vector<History> history;

  MoraResult out;
  out.unit = WeylElement::constant(ring, 1);
  out.quotients.assign(divisors.size(), WeylElement(ring));
  WeylElement h = f;
  long steps = 0;
  while (!h.is_zero()) {
    if (++steps > kLocalStepBudget) throw std::runtime_error("ecart division exceeded its step budget");
    LeadingData lt = leading_data(h, order);
    int eh = ecart(h, lt.exp);
    int best = -1;
    for (std::size_t k = 0; k < reducers.size(); ++k) {
      const Reducer& r = reducers[k];
      if (!divides(r.lead.exp, lt.exp)) continue;
      if (!r.original) {
        Exponent m = exponent_difference(lt.exp, r.lead.exp);
        bool ok = true;
        for (int s = 0; s < slots; ++s)
          if (m[s] != 0 && !allowed[s]) ok = false;
        if (!ok) continue;
      }
      if (best < 0 || r.ecart < reducers[best].ecart) best = static_cast<int>(k);
    }
    if (best < 0) break;
    Reducer chosen = reducers[best];
    if (chosen.ecart > eh) {
      history.push_back({out.unit, out.quotients});
      reducers.push_back({h, lt, eh, false, history.size() - 1});
    }
    Exponent m = exponent_difference(lt.exp, chosen.lead.exp);
    Scalar c = lt.coeff / chosen.lead.coeff;
    h -= multiply_monomial_left(m, c, chosen.poly);
    if (chosen.original) {
      out.quotients[chosen.index].add_term(m, c);
    } else {
      const History& hist = history[chosen.index];
      out.unit -= multiply_monomial_left(m, c, hist.unit);
      for (std::size_t j = 0; j < divisors.size(); ++j)
        out.quotients[j] -= multiply_monomial_left(m, c, hist.quotients[j]);
    }
  }
  out.remainder = h;
  if (checks::enabled()) {
    WeylElement lhs = multiply(out.unit, f);
    WeylElement rhs = out.remainder;
    for (std::size_t j = 0; j < divisors.size(); ++j) rhs += multiply(out.quotients[j], divisors[j]);
    if (lhs != rhs) throw std::logic_error("ecart division: unit*f = sum q_j g_j + r fails");
    for (auto& [e, c] : out.unit.terms()) {
      for (int s = 0; s < slots; ++s)
        if (e[s] != 0 && !allowed[s]) throw std::logic_error("ecart division: unit leaves the allowed block");
    }
    if (out.unit.coeff(Exponent(slots, 0)) == 0) throw std::logic_error("ecart division: unit has no constant term");
    checks::count();
  }
  return out;
}

}  // namespace lgfan
