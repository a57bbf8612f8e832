#include "doctest.h"
#include "support.hpp"

using namespace lgfan;
using namespace testing_support;

namespace {
Exponent E(std::initializer_list<int> e) { return Exponent(e); }
}  // namespace

TEST_CASE("rows are made primitive and must determine a total order") {
  MatrixOrder o(2, {{Scalar(1, 2), Scalar(1, 3)}, {0, -2}});
  CHECK(o.rows()[0] == std::vector<mpz_class>{3, 2});
  CHECK(o.rows()[1] == std::vector<mpz_class>{0, -1});
  CHECK_THROWS(MatrixOrder(2, {{1, 1}}));
}

TEST_CASE("degrevlex is a well order and breaks ties on the last slot") {
  Ring r = poly_ring(3);
  MatrixOrder o = degrevlex(*r);
  CHECK(o.is_well_order());
  CHECK_FALSE(o.is_local(*r));
  CHECK(o.less(E({0, 0, 0}), E({0, 0, 1})));
  // x1 x3 < x2^2 in degrevlex
  CHECK(o.less(E({1, 0, 1}), E({0, 2, 0})));
  CHECK(o.compare(E({1, 1, 0}), E({1, 1, 0})) == 0);
}

TEST_CASE("local orders put every variable below 1") {
  Ring r = xy_ring();
  MatrixOrder o = local_degrevlex(*r);
  CHECK(o.is_local(*r));
  CHECK_FALSE(o.is_well_order());
  CHECK(o.compare(E({1, 0}), E({0, 0})) < 0);
}

TEST_CASE("weight refinement") {
  Ring r = xy_ring();
  MatrixOrder base = degrevlex(*r);
  MatrixOrder a = refine_by_weight(*r, Q({-1, -1}), base);
  CHECK(a.compare(E({3, 0}), E({0, 2})) < 0);
  // the tie at weight -6 falls through to degrevlex, where x^3 has the larger degree
  MatrixOrder b = refine_by_weight(*r, Q({-2, -3}), base);
  CHECK(b.compare(E({3, 0}), E({0, 2})) > 0);
  MatrixOrder z = refine_by_weight(*r, Q({0, 0}), base);
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> u(0, 4);
  for (int t = 0; t < 200; ++t) {
    Exponent e{u(rng), u(rng)}, f{u(rng), u(rng)};
    CHECK(z.compare(e, f) == base.compare(e, f));
  }
}

TEST_CASE("leading data") {
  Ring r = xy_ring();
  MatrixOrder o = refine_by_weight(*r, Q({-1, -1}), degrevlex(*r));
  LeadingData ld = leading_data(P(r, "x^3 - y^2"), o);
  CHECK(ld.exp == E({0, 2}));
  CHECK(ld.coeff == -1);
  LeadingData one = leading_data(P(r, "5x"), o);
  CHECK(one.exp == E({1, 0}));
  CHECK(one.coeff == 5);
  CHECK_THROWS(leading_data(WeylElement(r), o));
}

TEST_CASE("h-lift compares the homogenizing grading first") {
  Ring d = make_ring(1, RingKind::weyl, Homogenization::h01);
  MatrixOrder o = lifted_order(*d, Q({0, 0}));
  // slots (x, dx, h): |beta| + k decides
  CHECK(o.compare(E({0, 0, 1}), E({0, 0, 0})) > 0);
  CHECK(o.compare(E({0, 1, 0}), E({5, 0, 0})) > 0);
  // (0,0,2) vs (0,1,0): grading 2 vs 1
  CHECK(o.compare(E({0, 0, 2}), E({0, 1, 0})) > 0);
  // equal grading: the admissible tail gives x < 1 < x dx
  CHECK(o.compare(E({1, 0, 1}), E({0, 0, 1})) < 0);
  CHECK(o.compare(E({1, 1, 0}), E({0, 0, 1})) > 0);
  Ring plain = make_ring(1, RingKind::weyl);
  MatrixOrder base = admissible_base(*plain);
  CHECK(base.is_admissible(*plain));
  MatrixOrder lifted = lift_to_h(*d, base);
  CHECK(lifted.compare(E({0, 0, 1}), E({0, 0, 0})) > 0);
}

TEST_CASE("lifted orders are well orders on every homogenized ring") {
  Ring x = make_ring(2, RingKind::commutative, Homogenization::alphaH, {}, {1, 2});
  CHECK(lifted_order(*x, Q({-1, -3})).is_well_order());
  Ring d = make_ring(2, RingKind::weyl);
  CHECK(lifted_order(*with_homogenization(d, Homogenization::h11), Q({-1, -2, 1, 3})).is_well_order());
  // in h01(D) the x-slots carry no degree, so only weights with u >= 0 give well orders
  Ring h01 = with_homogenization(d, Homogenization::h01);
  CHECK(lifted_order(*h01, Q({1, 2, 1, 3})).is_well_order());
  CHECK_FALSE(lifted_order(*h01, Q({-1, -2, 1, 3})).is_well_order());
  Ring dh = with_homogenization(with_homogenization(d, Homogenization::h01), Homogenization::doubleH);
  MatrixOrder o = lifted_order(*dh, Q({-1, -2, 1, 3}));
  CHECK(o.is_well_order());
  CHECK(o.is_block_on_hprime(*dh));
  MatrixOrder blk = block_order_hprime(*dh, lifted_order(*with_homogenization(d, Homogenization::h01), Q({0, 0, 0, 0})));
  CHECK(blk.is_block_on_hprime(*dh));
}

TEST_CASE("dehomogenized order agrees with the homogeneous one on equal degrees") {
  Ring x = make_ring(2, RingKind::commutative, Homogenization::alphaH, {}, {1, 1});
  Weight w = Q({-1, -2});
  MatrixOrder o = lifted_order(*x, w);
  MatrixOrder d = dehomogenize_order(o, alpha_degree_row(*x), x->h_slot());
  CHECK(d.is_local(*with_homogenization(x, Homogenization::none)));
  std::mt19937 rng(9);
  std::uniform_int_distribution<int> u(0, 4);
  for (int t = 0; t < 200; ++t) {
    Exponent e{u(rng), u(rng)}, f{u(rng), u(rng)};
    int deg = std::max(e[0] + e[1], f[0] + f[1]);
    Exponent eh{e[0], e[1], deg - e[0] - e[1]}, fh{f[0], f[1], deg - f[0] - f[1]};
    CHECK(d.compare(e, f) == o.compare(eh, fh));
  }
  CHECK_THROWS(dehomogenize_order(o, QVec{1, 1, 2}, 2));
}

TEST_CASE("primitive") {
  CHECK(primitive({Scalar(2, 3), Scalar(-4, 3)}) == Q({1, -2}));
  CHECK(primitive(Q({0, 6, 9})) == Q({0, 2, 3}));
}
