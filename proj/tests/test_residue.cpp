#include "doctest.h"

#include "gkp/error.hpp"
#include "gkp/residue.hpp"
#include "gkp/triangle.hpp"
#include "support.hpp"

using namespace gkp;

namespace {

ParamTuple P(const char* s) { return parse_params(s); }

Real rel_error(const ResidueResult& r, const ParamTuple& p, int n, const Rational& x0) {
  const Real exact = to_real(row_poly(triangle(p, n), n)(x0));
  return abs(r.value - exact) / max(Real(1), Real(abs(exact)));
}

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return Errc::ParseError;
}

}  // namespace

TEST_CASE("residue examples") {
  PrecisionScope scope(120);
  const ResidueResult sub = row_poly_residue({P("0,1,0,0,0,1"), 3, Rational(1, 2)});
  CHECK(abs(sub.value - to_real(Rational(11, 8))) < Real("1e-30"));
  const ResidueResult eul = row_poly_residue({P("0,1,1,1,-1,0"), 4, Rational(1, 3)});
  const Rational want = 1 + Rational(11, 3) + Rational(11, 9) + Rational(1, 27);
  CHECK(abs(eul.value - to_real(want)) < Real("1e-30"));
  for (const char* t : {"0,1,1,1,-1,0", "0,1,0,0,0,1", "1,0,0,1,1,0"}) {
    CHECK(abs(row_poly_residue({P(t), 0, Rational(1, 4)}).value - 1) < Real("1e-30"));
  }
}

TEST_CASE("residue errors") {
  CHECK(code_of([] { (void)row_poly_residue({P("1,0,-1,0,0,1"), 3, Rational(1, 2)}); }) == Errc::NotApplicable);
  CHECK(code_of([] { (void)row_poly_residue({P("0,1,0,0,0,1"), 3, Rational(3, 2)}); }) == Errc::DomainError);
  CHECK(code_of([] { (void)row_poly_residue({P("0,1,0,0,0,1"), 3, Rational(0)}); }) == Errc::DomainError);
  CHECK(code_of([] { (void)row_poly_residue({P("0,1,0,0,0,1"), 3, Rational(1, 2), 30}); }) == Errc::DomainError);
  CHECK(code_of([] { (void)row_poly_residue({P("0,1,0,0,0,1"), -1, Rational(1, 2)}); }) == Errc::IndexOutOfRange);
  CHECK(code_of([] { (void)row_poly_residue_alt({P("1/2,1,0,1,-1,0"), 2, Rational(1, 2)}); }) ==
        Errc::NotApplicable);
}

TEST_CASE("q0_series examples") {
  CHECK(q0_series(TypeIDerived{0, -1, 1, 0, -1}, 10).terms.empty());
  const GenSeries nu2 = q0_series(TypeIDerived{0, -2, 0, 0, -1}, 10);
  REQUIRE(nu2.terms.size() == 1);
  CHECK(nu2.terms[0] == GenTerm{Rational(1), Rational(-1)});
  const GenSeries r1 = q0_series(TypeIDerived{1, 0, 0, 0, 1}, 10);
  REQUIRE(r1.terms.size() == 1);
  CHECK(r1.terms[0] == GenTerm{Rational(-1), Rational(-1)});
  CHECK(r1.log_coeff == 0);
  CHECK(code_of([] { (void)q0_series(TypeIDerived{Rational(1, 2), 0, 0, 0, 1}, 10); }) == Errc::NotApplicable);
}

TEST_CASE("property: residue agrees with exact row polynomials for each type") {
  testing::Gen gen(51);
  const Rational xs[] = {Rational(1, 4), Rational(1, 3), Rational(1, 2)};
  std::vector<ResidueJob> jobs;
  for (int i = 0; i < 45; ++i) {
    jobs.push_back({gen.tuple_of_type(static_cast<RecType>(i % 3)), gen.integer(0, 8), xs[i % 3]});
  }
  const auto out = row_poly_residue_batch(jobs);
  PrecisionScope scope(120);
  int ok = 0;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    CAPTURE(to_string(jobs[i].params));
    if (out[i].error) {
      CHECK(out[i].error->code() == Errc::DomainError);  // X0 outside (0,1)
      continue;
    }
    CHECK(rel_error(*out[i].result, jobs[i].params, jobs[i].n, jobs[i].x0) < Real("1e-30"));
    ++ok;
  }
  CHECK(ok >= 30);
}

TEST_CASE("property: alternative form agrees when r is a non-negative integer") {
  testing::Gen gen(52);
  int ok = 0;
  for (int i = 0; i < 20; ++i) {
    ParamTuple p = gen.tuple_of_type(RecType::I);
    p.alpha = gen.integer(0, 2) * p.beta;
    const ResidueJob job{p, gen.integer(1, 6), Rational(1, 3)};
    CAPTURE(to_string(p));
    try {
      const ResidueResult a = row_poly_residue_alt(job);
      const ResidueResult m = row_poly_residue(job);
      PrecisionScope scope(120);
      CHECK(abs(a.value - m.value) / max(Real(1), Real(abs(m.value))) < Real("1e-30"));
      CHECK(rel_error(a, p, job.n, job.x0) < Real("1e-30"));
      ++ok;
    } catch (const Error& e) {
      CHECK((e.code() == Errc::DomainError || e.code() == Errc::NotApplicable));
    }
  }
  CHECK(ok >= 10);
}

TEST_CASE("batch reports per-job errors and matches single calls") {
  const std::vector<ResidueJob> jobs = {{P("0,1,0,0,0,1"), 3, Rational(1, 2)},
                                        {P("1,0,-1,0,0,1"), 3, Rational(1, 2)},
                                        {P("0,1,1,1,-1,0"), 5, Rational(1, 4)}};
  const auto out = row_poly_residue_batch(jobs);
  REQUIRE(out.size() == 3);
  CHECK(out[0].result);
  CHECK(out[1].error);
  CHECK(out[1].error->code() == Errc::NotApplicable);
  const ResidueResult single = row_poly_residue(jobs[2]);
  PrecisionScope scope(120);
  CHECK(abs(out[2].result->value - single.value) < Real("1e-50"));
}
