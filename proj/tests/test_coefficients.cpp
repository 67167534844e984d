#include <doctest.h>

#include <sstream>

#include "ximl/coefficients.hpp"
#include "ximl/errors.hpp"

using namespace ximl;
namespace mp = boost::multiprecision;

namespace {

// mpmath Taylor coefficients of xi at 1/2 (tools/gen_oracles.py).
const char* kA0 = "0.49712077818831410991277373968539772";
const char* kA2 = "0.011485972157572718767624938248816085";
const char* kA4 = "0.00012345201807031800689034579149485114";
const char* kA8 = "0.000000003992226551344137174725270263031874";

// c_n^2 - c_{n-1} c_{n+1} on the fixture c column, mpmath at 50 digits.
const char* kMargin1 = "0.000036745719282967369424632";
const char* kMargin2 = "0.000000014396527025460591875161";

Real rel(const Real& a, const Real& b) { return mp::abs(a - b) / mp::abs(b); }

}  // namespace

TEST_CASE("builtin fixture strings are kept verbatim") {
  const CoefficientTable& t = builtin_table();
  REQUIRE(t.rows.size() == 21);
  CHECK(t.rows[0].bhat.text == "6.214009727353926e-2");
  CHECK(t.rows[0].bhat.digits == 16);
  CHECK(t.rows[0].c.text == "0.994241556376");
  CHECK(t.rows[0].c.digits == 12);
  CHECK(t.rows[1].a.text == "1.14859721576e-2");
  CHECK(t.provenance == Provenance::builtin_fixture);
  CHECK(t.complete(Family::bhat));
  CHECK(t.complete(Family::c));
  CHECK(t.complete(Family::a));
}

TEST_CASE("fixture a column agrees with independent Taylor coefficients") {
  PrecisionContext ctx(30);
  PrecisionGuard guard(ctx);
  const auto a = values(builtin_table(), Family::a, ctx);
  CHECK(rel(a[0], Real(kA0)) < Real("1e-11"));
  CHECK(rel(a[1], Real(kA2)) < Real("1e-11"));
  CHECK(rel(a[2], Real(kA4)) < Real("1e-11"));
  CHECK(rel(a[4], Real(kA8)) < Real("1e-11"));
}

TEST_CASE("conversion examples") {
  PrecisionContext ctx(30);
  PrecisionGuard guard(ctx);
  const CoefficientTable from_b = convert(project(builtin_table(), Family::bhat), Family::bhat, ctx);
  // The fixture c and a columns carry 12 digits and are not always correctly rounded.
  CHECK(mp::abs(parse_real(from_b.rows[0].c.text) - Real("0.994241556376")) < Real("1e-12"));
  CHECK(rel(parse_real(from_b.rows[2].a.text), Real("1.23452018071e-4")) < Real("1e-11"));
  const CoefficientTable from_a = convert(project(builtin_table(), Family::a), Family::a, ctx);
  CHECK(to_scientific(parse_real(from_a.rows[1].c.text), 12) == "-2.29719443152e-02");
  CHECK(from_a.rows[1].a.text == "1.14859721576e-2");
  CHECK(a_over_bhat(2, ctx) == Real(8 * 16) / 24);
  CHECK(c_over_a(3, ctx) == -12);
  CHECK_THROWS_AS(convert(CoefficientTable{}, Family::a, ctx), DomainError);
}

TEST_CASE("projection clears the other columns") {
  const CoefficientTable p = project(builtin_table(), Family::c);
  CHECK(p.complete(Family::c));
  CHECK_FALSE(p.complete(Family::a));
  CHECK_FALSE(p.complete(Family::bhat));
  PrecisionContext ctx(30);
  CHECK_THROWS_AS(values(p, Family::a, ctx), DomainError);
}

TEST_CASE("round trip through c and back to bhat") {
  PrecisionContext ctx(40);
  PrecisionGuard guard(ctx);
  const CoefficientTable b = project(builtin_table(), Family::bhat);
  const CoefficientTable via_c = convert(project(convert(b, Family::bhat, ctx), Family::c), Family::c, ctx);
  const auto original = values(b, Family::bhat, ctx);
  const auto back = values(via_c, Family::bhat, ctx);
  for (std::size_t i = 0; i < original.size(); ++i) {
    CHECK(rel(back[i], original[i]) < pow(Real(10), -ctx.digits() + 2));
  }
}

TEST_CASE("even derivatives agree across the three families") {
  PrecisionContext ctx(30);
  PrecisionGuard guard(ctx);
  for (int n = 0; n <= 20; ++n) {
    const Real b = even_derivative(n, builtin_table(), Family::bhat, ctx);
    const Real c = even_derivative(n, builtin_table(), Family::c, ctx);
    const Real a = even_derivative(n, builtin_table(), Family::a, ctx);
    CHECK(b > 0);
    CHECK(rel(b, a) < Real("1e-9"));
    CHECK(rel(c, a) < Real("1e-9"));
  }
  CHECK(to_fixed_significant(even_derivative(0, builtin_table(), Family::a, ctx), 12) == "0.497120778188");
  CHECK_THROWS_AS(even_derivative(21, builtin_table(), Family::a, ctx), DomainError);
}

TEST_CASE("Turan margins") {
  PrecisionContext ctx(30);
  PrecisionGuard guard(ctx);
  for (int n = 1; n <= 19; ++n) {
    const TuranResult t = turan_inequality(n, builtin_table(), ctx);
    CHECK(t.holds);
    CHECK(t.moment_margin > 0);
  }
  CHECK(rel(turan_inequality(1, builtin_table(), ctx).margin, Real(kMargin1)) < Real("1e-25"));
  CHECK(rel(turan_inequality(2, builtin_table(), ctx).margin, Real(kMargin2)) < Real("1e-25"));
  CHECK_THROWS_AS(turan_inequality(0, builtin_table(), ctx), DomainError);
  CHECK_THROWS_AS(turan_inequality(20, builtin_table(), ctx), DomainError);
}

TEST_CASE("Sturm root counting") {
  PrecisionContext ctx(30);
  PrecisionGuard guard(ctx);
  // x^2 + 1
  CHECK(count_real_roots({Real(1), Real(0), Real(1)}, ctx).real_root_count == 0);
  // (x - 1)(x - 2)(x - 3)
  const auto cubic = count_real_roots({Real(-6), Real(11), Real(-6), Real(1)}, ctx);
  CHECK(cubic.real_root_count == 3);
  CHECK(cubic.hyperbolic);
  // (x^2 + 1)(x - 5)
  const auto mixed = count_real_roots({Real(-5), Real(1), Real(-5), Real(1)}, ctx);
  CHECK(mixed.real_root_count == 1);
  CHECK_FALSE(mixed.hyperbolic);
  // (x - 1)^2 (x + 2) counts distinct roots and is not hyperbolic under strict counting
  CHECK(count_real_roots({Real(2), Real(-3), Real(0), Real(1)}, ctx).real_root_count >= 2);
  CHECK_THROWS_AS(count_real_roots({Real(1), Real(2), Real(0)}, ctx), DegeneracyError);
}

TEST_CASE("Jensen polynomials are hyperbolic") {
  PrecisionContext ctx(40);
  PrecisionGuard guard(ctx);
  for (int d = 1; d <= 10; ++d) {
    const JensenPolynomial p = jensen_polynomial(d, builtin_table(), ctx);
    CHECK(p.coefficients.size() == static_cast<std::size_t>(d + 1));
    const HyperbolicityResult h = hyperbolicity_check(p, ctx);
    CHECK(h.real_root_count == d);
    CHECK(h.hyperbolic);
  }
  // numpy roots of the degree-3 polynomial: 28.755, 49.195, 70.366.
  const JensenPolynomial p3 = jensen_polynomial(3, builtin_table(), ctx);
  for (const char* root : {"28.755082375526243", "49.19539485225468", "70.36598230352945"}) {
    const Real x(root);
    Real value(0);
    for (auto it = p3.coefficients.rbegin(); it != p3.coefficients.rend(); ++it) value = value * x + *it;
    CHECK(mp::abs(value) < Real("1e-12"));
  }
  CHECK_THROWS_AS(jensen_polynomial(21, builtin_table(), ctx), DomainError);
}

TEST_CASE("table I/O round trip is byte identical") {
  std::stringstream ss;
  write_table(ss, builtin_table());
  const std::string text = ss.str();
  const CoefficientTable back = read_table(ss, "mem");
  std::stringstream again;
  write_table(again, back);
  CHECK(again.str() == text);
  CHECK(back.provenance == Provenance::file);

  PrecisionContext ctx(60);
  const CoefficientTable full = convert(project(builtin_table(), Family::bhat), Family::bhat, ctx);
  std::stringstream s60;
  write_table(s60, full);
  const CoefficientTable full_back = read_table(s60, "mem");
  for (std::size_t i = 0; i < full.rows.size(); ++i) CHECK(full_back.rows[i].a.text == full.rows[i].a.text);
}

TEST_CASE("tampered tables report the line") {
  std::stringstream bad("# n\tbhat\tc\ta\n0\t6.2e-2\t-\t-\n1\t7.1e-4\tx1\t-\n");
  try {
    read_table(bad, "mem");
    FAIL("expected a format error");
  } catch (const FormatError& e) {
    CHECK(e.line() == 3);
  }
  std::stringstream gap("0\t1\t-\t-\n2\t1\t-\t-\n");
  CHECK_THROWS_AS(read_table(gap, "mem"), FormatError);
  std::stringstream short_row("0\t1\t-\n");
  CHECK_THROWS_AS(read_table(short_row, "mem"), FormatError);
  CHECK_THROWS_AS(load_table("/nonexistent/table.tsv"), IoError);
}

TEST_CASE("family names") {
  CHECK(parse_family("b") == Family::bhat);
  CHECK(parse_family("bhat") == Family::bhat);
  CHECK(parse_family("c") == Family::c);
  CHECK(parse_family("a") == Family::a);
  CHECK_THROWS_AS(parse_family("z"), FormatError);
}
