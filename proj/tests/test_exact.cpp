#include "doctest.h"

#include "gkp/error.hpp"
#include "gkp/triangle.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace gkp;

namespace {

ParamTuple P(const char* s) { return parse_params(s); }

std::vector<Rational> R(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

std::vector<Rational> to_row(const std::vector<long>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("triangle examples") {
  const Triangle eul = triangle(P("0,1,1,1,-1,0"), 4);
  CHECK(eul.row(4) == R({1, 11, 11, 1, 0}));
  CHECK(triangle(P("0,1,0,0,0,1"), 4).row(4) == R({0, 1, 7, 6, 1}));
  const Triangle trivial = triangle(P("2,3,-2,5,7,-12"), 8);
  for (int n = 0; n <= 8; ++n) {
    for (int k = 0; k <= n; ++k) CHECK(trivial.at(n, k) == (n == 0 && k == 0 ? 1 : 0));
  }
}

TEST_CASE("Triangle::at is zero outside the stored range") {
  const Triangle t = triangle(P("0,0,1,0,0,1"), 3);
  CHECK(t.at(2, 3) == 0);
  CHECK(t.at(-1, 0) == 0);
  CHECK(t.at(2, -1) == 0);
  CHECK(t.at(4, 1) == 0);
  CHECK_THROWS_AS(t.row(4), Error);
}

TEST_CASE("brute force: descents, partitions, cycles, subsets, injections for n <= 8") {
  const Triangle eul = triangle(P("0,1,1,1,-1,0"), 8);
  const Triangle sub = triangle(P("0,1,0,0,0,1"), 8);
  const Triangle cyc = triangle(P("1,0,-1,0,0,1"), 8);
  const Triangle pas = triangle(P("0,0,1,0,0,1"), 8);
  const Triangle inj = triangle(P("0,0,1,0,1,0"), 8);
  for (int n = 0; n <= 8; ++n) {
    CAPTURE(n);
    CHECK(eul.row(n) == to_row(oracle::permutation_row(n, oracle::descents)));
    CHECK(sub.row(n) == to_row(oracle::set_partition_row(n)));
    CHECK(cyc.row(n) == to_row(oracle::permutation_row(n, oracle::cycles)));
    CHECK(pas.row(n) == to_row(oracle::subset_row(n)));
    CHECK(inj.row(n) == to_row(oracle::injection_row(n)));
  }
}

TEST_CASE("row_poly examples") {
  CHECK(row_poly(triangle(P("0,1,1,1,-1,0"), 3), 3) == Poly(R({1, 4, 1})));
  CHECK(row_poly(triangle(P("3/2,-1,2,0,1,1"), 0), 0) == Poly::constant(1));
  CHECK(row_poly(triangle(P("1,0,-1,0,0,1"), 2), 2) == Poly(R({0, 1, 1})));
  CHECK_THROWS_AS(row_poly(triangle(P("1,0,-1,0,0,1"), 2), 3), Error);
}

TEST_CASE("Type IV product and double sum examples") {
  CHECK(row_poly_product_type_iv(P("1,0,-1,0,0,1"), 2) == Poly(R({0, 1, 1})));
  CHECK(row_poly_product_type_iv(P("0,0,1,0,0,1"), 3) == Poly(R({1, 3, 3, 1})));
  CHECK(row_poly_product_type_iv(P("2,0,5,1,0,-3"), 0) == Poly::constant(1));
  CHECK(coeff_type_iv(P("1,0,-1,0,0,1"), 4, 2) == 11);
  CHECK(coeff_type_iv(P("0,0,1,0,0,1"), 5, 2) == 10);
  CHECK(coeff_type_iv(P("2,0,5,1,0,-3"), 0, 0) == 1);
  try {
    row_poly_product_type_iv(P("0,1,0,0,0,1"), 2);
    FAIL("expected NotTypeIV");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotTypeIV);
  }
  CHECK_THROWS_AS(coeff_type_iv(P("0,1,0,0,0,1"), 2, 1), Error);
  CHECK_THROWS_AS(coeff_type_iv(P("1,0,-1,0,0,1"), 2, 3), Error);
}

TEST_CASE("stirling_cycle examples") {
  CHECK(stirling_cycle(4, 2) == 11);
  for (int n = 0; n <= 6; ++n) CHECK(stirling_cycle(n, n) == 1);
  CHECK(stirling_cycle(3, 0) == 0);
  CHECK(stirling_cycle(3, 5) == 0);
}

TEST_CASE("property: recurrence residual is zero") {
  testing::Gen gen(21);
  for (int i = 0; i < 100; ++i) CHECK(satisfies_recurrence(triangle(gen.tuple(), 8)));
  Triangle t = triangle(P("0,1,1,1,-1,0"), 4);
  auto rows = t.rows();
  rows[3][1] += 1;
  CHECK_FALSE(satisfies_recurrence(Triangle(t.params(), rows)));
}

TEST_CASE("property: triangle-level identities of the tabulated maps") {
  testing::Gen gen(22);
  for (int i = 0; i < 100; ++i) {
    const ParamTuple p = gen.tuple();
    const Triangle t = triangle(p, 8);
    for (InvolutionKind k : kAllInvolutions) {
      CAPTURE(to_string(k));
      CHECK(triangle(apply_involution(k, p), 8).same_values(transform(k, t)));
    }
  }
}

TEST_CASE("property: Type IV triple agreement") {
  testing::Gen gen(23);
  for (int i = 0; i < 60; ++i) {
    const ParamTuple p = gen.tuple_of_type(RecType::IV);
    const Triangle t = triangle(p, 8);
    for (int n = 0; n <= 8; ++n) {
      CHECK(row_poly(t, n) == row_poly_product_type_iv(p, n));
      for (int k = 0; k <= n; ++k) CHECK(coeff_type_iv(p, n, k) == t.at(n, k));
    }
  }
}

TEST_CASE("property: self-dual rows are palindromic") {
  testing::Gen gen(24);
  for (int i = 0; i < 60; ++i) {
    const Rational a = gen.rational(), b = gen.rational(), c = gen.rational();
    const Triangle t = triangle({a, b, c, a + b, -b, c}, 8);
    for (int n = 0; n <= 8; ++n) {
      for (int k = 0; k <= n; ++k) CHECK(t.at(n, k) == t.at(n, n - k));
    }
  }
}

TEST_CASE("property: trivial kernel gives the delta triangle") {
  testing::Gen gen(25);
  for (int i = 0; i < 60; ++i) {
    const Rational a = gen.rational(), b = gen.rational(), ap = gen.rational(), bp = gen.rational();
    const Triangle t = triangle({a, b, -a, ap, bp, -ap - bp}, 8);
    for (int n = 1; n <= 8; ++n) {
      for (int k = 0; k <= n; ++k) CHECK(t.at(n, k) == 0);
    }
  }
}

TEST_CASE("parallel and serial triangle kernels agree") {
  testing::Gen gen(26);
  for (int i = 0; i < 20; ++i) {
    const ParamTuple p = gen.tuple();
    const Triangle s = triangle_serial(p, 40);
    CHECK(triangle_parallel(p, 40).same_values(s));
    CHECK(triangle(p, 40).same_values(s));
  }
}

TEST_CASE("Poly arithmetic") {
  const Poly a(R({1, 1}));
  const Poly b(R({-1, 1}));
  CHECK(a * b == Poly(R({-1, 0, 1})));
  CHECK((a + b) == Poly(R({0, 2})));
  CHECK((a - a).is_zero());
  CHECK((a - a).degree() == -1);
  CHECK(Poly(R({3, 0, 0})).degree() == 0);
  CHECK(Poly(R({1, 4, 1})).derivative() == Poly(R({4, 2})));
  CHECK(Poly(R({1, 4, 1}))(Rational(1, 2)) == Rational(13, 4));
  CHECK(Poly(R({1, 4, 1})).to_string() == "1 + 4*x + x^2");
}
