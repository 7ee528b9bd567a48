#include "doctest.h"

#include "gkp/degeneracy.hpp"
#include "gkp/error.hpp"
#include "gkp/triangle.hpp"
#include "support.hpp"

using namespace gkp;

namespace {

ParamTuple P(const char* s) { return parse_params(s); }

constexpr DegTag kFamilies[] = {DegTag::TrivialKernel, DegTag::BinomialScaled, DegTag::DiagonalProduct,
                                DegTag::LeftColumn};

}  // namespace

TEST_CASE("degeneracy_class examples") {
  CHECK(degeneracy_class(P("2,3,-2,5,7,-12")).tag == DegTag::TrivialKernel);
  const DegClass b = degeneracy_class(P("0,1,1,-1,1,1"));
  CHECK(b.tag == DegTag::BinomialScaled);
  CHECK(b.alpha == 0);
  CHECK(b.G == 1);
  CHECK(b.H == 1);
  CHECK(degeneracy_class(P("1,0,-1,0,0,1")).tag == DegTag::NonDegenerate);
  const DegClass d = degeneracy_class(P("1,-1,-1,2,1,0"));
  CHECK(d.tag == DegTag::DiagonalProduct);
  CHECK(d.L == 3);
  const DegClass l = degeneracy_class(P("1,5,2,0,3,-3"));
  CHECK(l.tag == DegTag::LeftColumn);
  CHECK(l.M == 3);
  CHECK(l.alpha == 1);
}

TEST_CASE("same_numbers examples") {
  CHECK(same_numbers(P("0,0,1,0,0,1"), P("0,1,1,-1,1,1"), 8));
  CHECK(same_numbers(P("1,2,-1,3,4,-7"), P("5,6,-5,7,8,-15"), 8));
  CHECK_FALSE(same_numbers(P("0,1,1,1,-1,0"), P("0,1,0,0,0,1"), 4));
}

TEST_CASE("degenerate_value examples") {
  DegClass b{DegTag::BinomialScaled, 0, 1, 1, 0, 0, 0};
  CHECK(degenerate_value(b, 5, 2) == 10);
  DegClass d;
  d.tag = DegTag::DiagonalProduct;
  d.L = 1;
  CHECK(degenerate_value(d, 3, 3) == 6);
  CHECK(degenerate_value(d, 3, 2) == 0);
  DegClass t;
  t.tag = DegTag::TrivialKernel;
  CHECK(degenerate_value(t, 0, 0) == 1);
  CHECK(degenerate_value(t, 3, 0) == 0);
  try {
    degenerate_value(DegClass{}, 1, 1);
    FAIL("expected NotDegenerate");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotDegenerate);
  }
}

TEST_CASE("property: family members with equal invariants share the triangle and the closed form") {
  testing::Gen gen(61);
  for (DegTag tag : kFamilies) {
    CAPTURE(to_string(tag));
    int done = 0;
    while (done < 20) {
      const DegClass inv = gen.invariants(tag);
      const ParamTuple p1 = gen.family_member(inv);
      const ParamTuple p2 = gen.family_member(inv);
      if (p1 == p2 || degeneracy_class(p1).tag != tag || degeneracy_class(p2).tag != tag) continue;
      CAPTURE(to_string(p1));
      CAPTURE(to_string(p2));
      CHECK(degeneracy_class(p1) == degeneracy_class(p2));
      CHECK(same_numbers(p1, p2, 10));
      const Triangle t = triangle(p1, 10);
      const DegClass c = degeneracy_class(p1);
      for (int n = 0; n <= 10; ++n) {
        for (int k = 0; k <= n; ++k) CHECK(degenerate_value(c, n, k) == t.at(n, k));
      }
      ++done;
    }
  }
}

TEST_CASE("property: non-degenerate controls differ") {
  testing::Gen gen(62);
  int done = 0;
  while (done < 20) {
    const ParamTuple p = gen.tuple();
    if (degeneracy_class(p).tag != DegTag::NonDegenerate) continue;
    ParamTuple q = p;
    q.gamma += 1;
    CHECK_FALSE(same_numbers(p, q, 10));
    ++done;
  }
}

TEST_CASE("property: soundness of equal classes over random tuples") {
  testing::Gen gen(63);
  for (int i = 0; i < 200; ++i) {
    const ParamTuple p = gen.tuple();
    const DegClass c = degeneracy_class(p);
    if (c.tag == DegTag::NonDegenerate) continue;
    const ParamTuple q = gen.family_member(c);
    if (degeneracy_class(q) != c) continue;
    CHECK(same_numbers(p, q, 8));
  }
}

TEST_CASE("BinomialScaled can change the type while keeping the numbers") {
  DegClass inv{DegTag::BinomialScaled, 0, 1, 1, 0, 0, 0};
  const ParamTuple rho0{0, 0, 1, 0, 0, 1};
  const ParamTuple rho1{0, 1, 1, -1, 1, 1};
  CHECK(degeneracy_class(rho0) == inv);
  CHECK(degeneracy_class(rho1) == inv);
  CHECK(classify(rho0) == RecType::IV);
  CHECK(classify(rho1) == RecType::I);
  CHECK(same_numbers(rho0, rho1, 10));
}

TEST_CASE("overlapping patterns give the same closed form") {
  // H = 0 puts a BinomialScaled tuple into the LeftColumn pattern as well.
  testing::Gen gen(64);
  for (int i = 0; i < 20; ++i) {
    DegClass inv = gen.invariants(DegTag::BinomialScaled);
    inv.H = 0;
    const ParamTuple p = gen.family_member(inv);
    const DegClass first = degeneracy_class(p);
    REQUIRE(first.tag == DegTag::BinomialScaled);
    DegClass left;
    left.tag = DegTag::LeftColumn;
    left.M = p.alpha + p.gamma;
    left.alpha = p.alpha;
    for (int n = 0; n <= 8; ++n) {
      for (int k = 0; k <= n; ++k) CHECK(degenerate_value(first, n, k) == degenerate_value(left, n, k));
    }
  }
}
