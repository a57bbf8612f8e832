#include <algorithm>

#include "doctest.h"
#include "support.hpp"

using namespace lgfan;
using namespace testing_support;

namespace {

std::vector<oracle::Poly> as_oracle(const std::vector<WeylElement>& v) {
  std::vector<oracle::Poly> out;
  for (auto& p : v) out.push_back(to_oracle(p));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Exponent> leading_set(const ReducedBasis& b) {
  std::vector<Exponent> out;
  for (auto& g : b.elements) out.push_back(leading_exponent(g, b.order));
  std::sort(out.begin(), out.end());
  return out;
}

MatrixOrder lex(const RingSignature& sig) {
  std::vector<QVec> rows;
  for (int i = 0; i < sig.slots(); ++i) {
    QVec r(sig.slots(), 0);
    r[i] = 1;
    rows.push_back(r);
  }
  return from_rows(sig, rows);
}

}  // namespace

TEST_CASE("S-pairs") {
  Ring r = xy_ring();
  MatrixOrder o = lex(*r);
  CHECK(s_pair(P(r, "x"), P(r, "y"), o).is_zero());
  WeylElement g = P(r, "x^2 + y");
  CHECK(s_pair(g, g, o).is_zero());
  WeylElement s = s_pair(P(r, "x^2"), P(r, "x + y"), o);
  CHECK(s == P(r, "-x*y"));
  auto red = divide(s, {P(r, "x^2"), P(r, "x + y")}, o);
  CHECK(red.remainder == P(r, "y^2"));
}

TEST_CASE("reduced bases of principal and monomial ideals") {
  Ring r = xy_ring();
  ReducedBasis b = buchberger(Ideal(r, {P(r, "3x")}), degrevlex(*r));
  REQUIRE(b.elements.size() == 1);
  CHECK(b.elements[0] == P(r, "x"));
  for (const Weight& w : {Q({1, 1}), Q({2, 3}), Q({0, 0})}) {
    ReducedBasis c = buchberger(Ideal(r, {P(r, "x^3 - y^2")}), refine_by_weight(*r, w, degrevlex(*r)));
    REQUIRE(c.elements.size() == 1);
    CHECK((c.elements[0] == P(r, "x^3 - y^2") || c.elements[0] == P(r, "y^2 - x^3")));
  }
  CHECK_THROWS_AS(buchberger(Ideal(r, {P(r, "x")}), local_degrevlex(*r)), std::invalid_argument);
}

TEST_CASE("reduced bases agree with the naive Buchberger oracle") {
  std::mt19937 rng(17);
  Ring r = poly_ring(3);
  oracle::MonoLess grevlex = oracle::degrevlex_less(), plex = oracle::lex_less();
  for (int t = 0; t < 30; ++t) {
    std::vector<WeylElement> gens;
    int k = 2 + t % 2;
    for (int i = 0; i < k; ++i) gens.push_back(random_poly(r, rng, 3, 2, i == 0 && t % 4 == 0));
    Ideal I(r, gens);
    ReducedBasis a = buchberger(I, degrevlex(*r));
    std::vector<oracle::Poly> og;
    for (auto& g : gens) og.push_back(to_oracle(g));
    auto expect = oracle::reduced_basis(og, grevlex);
    std::sort(expect.begin(), expect.end());
    CHECK(as_oracle(a.elements) == expect);
    if (t < 10) {
      ReducedBasis l = buchberger(I, lex(*r));
      auto el = oracle::reduced_basis(og, plex);
      std::sort(el.begin(), el.end());
      CHECK(as_oracle(l.elements) == el);
    }
  }
}

TEST_CASE("reduced bases are unique, closed under S-pairs and preserve homogeneity") {
  std::mt19937 rng(23);
  Ring r = poly_ring(3);
  for (int t = 0; t < 15; ++t) {
    std::vector<WeylElement> gens;
    for (int i = 0; i < 3; ++i) gens.push_back(random_quasi_homogeneous(r, {1, 1, 1}, 2 + i % 2, rng, 3));
    gens.erase(std::remove_if(gens.begin(), gens.end(), [](auto& g) { return g.is_zero(); }), gens.end());
    if (gens.empty()) continue;
    MatrixOrder o = degrevlex(*r);
    ReducedBasis a = buchberger(Ideal(r, gens), o);
    std::vector<WeylElement> shuffled = gens;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    shuffled.push_back(gens[0] * P(r, "x1 - 2x3"));
    CHECK(buchberger(Ideal(r, shuffled), o).elements == a.elements);
    for (auto& g : a.elements) {
      CHECK(is_homogeneous(homogenize(g, Homogenization::alphaH, {1, 1, 1})));
      CHECK(leading_data(g, o).coeff == 1);
    }
    for (std::size_t i = 0; i < a.elements.size(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        CHECK(divide(s_pair(a.elements[i], a.elements[j], o), a.elements, o).remainder.is_zero());
  }
}

TEST_CASE("Weyl bases are closed under S-pairs") {
  Ring d = make_ring(2, RingKind::weyl, Homogenization::h11);
  std::mt19937 rng(29);
  for (int t = 0; t < 6; ++t) {
    Ring base = make_ring(2, RingKind::weyl);
    Ideal I = homogenize_ideal(Ideal(base, {random_poly(base, rng, 3, 2), random_poly(base, rng, 3, 2)}),
                               Homogenization::h11);
    MatrixOrder o = lifted_order(*I.ring, Q({1, 2, 0, 1}));
    ReducedBasis b = buchberger(I, o);
    CHECK(b.homogeneous);
    for (auto& g : I.generators) CHECK(membership(g, b));
    for (std::size_t i = 0; i < b.elements.size(); ++i)
      for (std::size_t j = 0; j < b.elements.size(); ++j)
        if (i != j) CHECK(divide(s_pair(b.elements[i], b.elements[j], o), b.elements, o).remainder.is_zero());
  }
}

TEST_CASE("leading exponents of a refined order are those of the initial ideal") {
  std::mt19937 rng(31);
  Ring r = poly_ring(3);
  for (int t = 0; t < 12; ++t) {
    std::vector<WeylElement> gens;
    for (int i = 0; i < 2; ++i) gens.push_back(random_quasi_homogeneous(r, {1, 1, 1}, 2 + i, rng, 4));
    if (gens[0].is_zero() || gens[1].is_zero()) continue;
    Weight w = random_vec(rng, 3, 0, 4);
    MatrixOrder base = degrevlex(*r);
    ReducedBasis refined = buchberger(Ideal(r, gens), refine_by_weight(*r, w, base));
    ReducedBasis in = buchberger(Ideal(r, initial_ideal(refined, w)), base);
    CHECK(leading_set(refined) == leading_set(in));
  }
}

TEST_CASE("initial ideal of a principal ideal") {
  Ring r = xy_ring();
  ReducedBasis b = buchberger(Ideal(r, {P(r, "x^3 - y^2")}), refine_by_weight(*r, Q({2, 3}), degrevlex(*r)));
  auto in = initial_ideal(b, Q({2, 1}));
  REQUIRE(in.size() == 1);
  CHECK((in[0] == P(r, "x^3") || in[0] == P(r, "-x^3")));
}

TEST_CASE("membership") {
  Ring r = poly_ring(2);
  Ideal I(r, {P(r, "x1^2"), P(r, "x1*x2 - x2^2")});
  ReducedBasis b = buchberger(I, degrevlex(*r));
  for (auto& g : I.generators) CHECK(membership(g, b));
  CHECK_FALSE(membership(P(r, "1"), b));
  CHECK(membership(P(r, "x2^3"), b));
  CHECK_FALSE(membership(P(r, "x2^2"), b));
}

TEST_CASE("local standard bases of the border example contain a unit") {
  Ring r = poly_ring(3);
  Ideal I(r, {P(r, "1 - x3"), P(r, "x1 + x2")});
  LocalBasis b = local_standard_basis(I, Q({-1, -2, 0}));
  bool unit = false;
  for (auto& g : b.elements) unit |= g.coeff(Exponent(3, 0)) != 0 && leading_exponent(g, b.order) == Exponent(3, 0);
  CHECK(unit);
  CHECK_THROWS(local_standard_basis(I, Q({1, -2, 0})));
}

TEST_CASE("global bases of ideals of k[x] and D") {
  Ring r = xy_ring();
  ReducedBasis b = global_basis(Ideal(r, {P(r, "x^2 - 1"), P(r, "x*y - 1")}));
  CHECK(membership(P(r, "y - x"), b));
  Ring d = make_ring(1, RingKind::weyl, Homogenization::none, {"x"});
  // dx (x dx - 2) = x dx^2 - dx, so dx and then 2 lie in <x dx - 2, dx^2>
  CHECK(membership(P(d, "1"), global_basis(Ideal(d, {P(d, "x*dx - 2"), P(d, "dx^2")}))));
  // x^2 is annihilated by both generators
  ReducedBasis db = global_basis(Ideal(d, {P(d, "x*dx - 2"), P(d, "dx^3")}));
  CHECK_FALSE(membership(P(d, "1"), db));
  CHECK(membership(P(d, "x*dx^3"), db));
  CHECK_FALSE(membership(P(d, "dx^2"), db));
}

TEST_CASE("same_ideal by mutual membership") {
  Ring r = xy_ring();
  CHECK(same_ideal(Ideal(r, {P(r, "x + y"), P(r, "x - y")}), Ideal(r, {P(r, "x"), P(r, "y")})));
  CHECK_FALSE(same_ideal(Ideal(r, {P(r, "x")}), Ideal(r, {P(r, "x"), P(r, "y")})));
}

TEST_CASE("h01 generators do not depend on the standard basis used") {
  Ring d = make_ring(2, RingKind::weyl, Homogenization::none, {"x", "y"});
  Ideal I(d, {P(d, "x*dx + y*dy + 1"), P(d, "dx^2 - dy"), P(d, "y*dx - x")});
  Ideal A = h01_ideal(I);
  // a second standard basis for a different (0,1)-refining order
  QVec beta{0, 0, 1, 1};
  std::vector<QVec> rows{beta, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}};
  ReducedBasis other = buchberger(I, from_rows(*d, rows));
  std::vector<WeylElement> hb;
  for (auto& g : other.elements) hb.push_back(homogenize(g, Homogenization::h01));
  MatrixOrder o = from_rows(*A.ring, {h01_degree_row(*A.ring)});
  ReducedBasis ga = buchberger(A, o), gb = buchberger(Ideal(A.ring, hb), o);
  for (auto& g : hb) CHECK(membership(g, ga));
  for (auto& g : A.generators) CHECK(membership(g, gb));
}
