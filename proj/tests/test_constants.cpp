#include <doctest.h>

#include "ximl/coefficients.hpp"
#include "ximl/constants.hpp"
#include "ximl/errors.hpp"
#include "ximl/moments.hpp"
#include "ximl/numerics.hpp"

using namespace ximl;
namespace mp = boost::multiprecision;

namespace {

const char* kEuler = "0.57721566490153286060651209008240243104215933593992";
// mpmath zeta(1/2).
const char* kZetaHalf = "-1.46035450880958681288949915252";

Real rel(const Real& a, const Real& b) { return mp::abs(a - b) / mp::abs(b); }

const std::vector<Method> kMethods = {Method::a_series, Method::b_series, Method::c_series};

const CoefficientTable& quadrature_table() {
  static const CoefficientTable t = [] {
    PrecisionContext ctx(60);
    return moment_table(20, QuadratureConfig::defaults(ctx), ctx);
  }();
  return t;
}

}  // namespace

TEST_CASE("gamma series on the fixture") {
  PrecisionContext ctx(40);
  PrecisionGuard guard(ctx);
  std::vector<Real> values;
  for (Method m : kMethods) {
    const GammaDecomposition g = gamma_series(m, builtin_table(), 20, ctx);
    CHECK(to_fixed_significant(g.value(), 12) == "0.577215664902");
    CHECK(g.method == m);
    values.push_back(g.value());
  }
  CHECK(mp::abs(values[0] - values[1]) < Real("1e-11"));
  CHECK(mp::abs(values[1] - values[2]) < Real("1e-11"));
  CHECK(mp::abs(values[0] - values[2]) < Real("1e-11"));
  const GammaDecomposition a = gamma_series(Method::a_series, builtin_table(), 20, ctx);
  CHECK(mp::abs(a.inner_sum - Real("2.88696362077e-3")) < Real("1e-12"));
  const GammaDecomposition b = gamma_series(Method::b_series, builtin_table(), 20, ctx);
  CHECK(mp::abs(b.inner_sum - Real("3.60870452595e-4")) < Real("1e-12"));
}

TEST_CASE("gamma series constant part and empty series") {
  PrecisionContext ctx(40);
  PrecisionGuard guard(ctx);
  const GammaDecomposition g = gamma_series(Method::a_series, builtin_table(), 0, ctx);
  CHECK(to_fixed_significant(g.constant_part, 11) == "0.53102424697");
  CHECK(g.value() == g.constant_part);
  CHECK(rel(g.constant_part, mp::log(4 * pi(ctx)) - 2) < ctx.eps());
  CHECK_THROWS_AS(gamma_series(Method::a_series, builtin_table(), -1, ctx), DomainError);
  CHECK_THROWS_AS(gamma_series(Method::a_series, builtin_table(), 21, ctx), DomainError);
}

TEST_CASE("gamma series from the quadrature table matches the reference") {
  PrecisionContext ctx(60);
  PrecisionGuard guard(ctx);
  for (Method m : kMethods) {
    const Real g = gamma_series(m, quadrature_table(), 20, ctx).value();
    CHECK(mp::abs(g - Real(kEuler)) < Real("2e-12"));
  }
}

TEST_CASE("Lugo constant") {
  PrecisionContext ctx(40);
  PrecisionGuard guard(ctx);
  for (Method m : kMethods) {
    const Real l = lugo(m, builtin_table(), 20, ctx).value;
    CHECK(mp::abs(l - Real("-0.384068484342")) < Real("1e-11"));
    const Real g = gamma_series(m, builtin_table(), 20, ctx).value();
    CHECK(mp::abs(l + g - (ln2(ctx) - Real(1) / 2)) < ctx.eps() * 10);
  }
  CHECK(to_fixed_significant(lugo(Method::b_series, builtin_table(), 0, ctx).value, 11) == "-0.33787706641");
}

TEST_CASE("direct Lugo double sum") {
  PrecisionContext ctx(30);
  PrecisionGuard guard(ctx);
  CHECK(rel(lugo_direct(1, ctx), Real(1) / 2 - 2 * ln2(ctx)) < ctx.eps());
  // Brute-force double loop for small n.
  for (long n : {2L, 5L, 9L}) {
    Real sum(0);
    for (long i = 1; i <= n; ++i) {
      for (long j = 1; j <= n; ++j) sum += Real(1) / (i + j);
    }
    CHECK(rel(lugo_direct(n, ctx), sum - 2 * n * ln2(ctx) + mp::log(Real(n))) < ctx.eps() * 10);
  }
  const Real target = Real("-0.384068484342");
  CHECK(mp::abs(lugo_direct(10000, ctx) - target) < Real("1e-3"));
  for (long n : {100L, 400L, 1600L}) {
    CHECK(mp::abs(lugo_direct(2 * n, ctx) - target) < mp::abs(lugo_direct(n, ctx) - target));
  }
  CHECK_THROWS_AS(lugo_direct(0, ctx), DomainError);
}

TEST_CASE("Gamma(1/4) zeta(1/2)") {
  PrecisionContext ctx(40);
  PrecisionGuard guard(ctx);
  const Real v = gamma_quarter_zeta_half(builtin_table(), ctx);
  CHECK(mp::abs(v - Real("-5.29467577665")) < Real("1e-10"));
  CHECK(mp::abs(zeta_half(builtin_table(), ctx) - Real(kZetaHalf)) < Real("1e-12"));
  CHECK(mp::abs(gamma_quarter_zeta_half_series(builtin_table(), 20, ctx) - v) < Real("1e-10"));
  const Real q = gamma_quarter_zeta_half(quadrature_table(), ctx);
  CHECK(rel(q / gamma_quarter(ctx), Real(kZetaHalf)) < Real("1e-14"));
}

TEST_CASE("exact Bernoulli numbers") {
  CHECK(bernoulli_exact(0) == 1);
  CHECK(bernoulli_exact(1) == Rational(-1, 2));
  CHECK(bernoulli_exact(2) == Rational(1, 6));
  CHECK(bernoulli_exact(3) == 0);
  CHECK(bernoulli_exact(4) == Rational(-1, 30));
  CHECK(bernoulli_exact(12) == Rational(-691, 2730));
  CHECK(bernoulli_exact(20) == Rational(-174611, 330));
  for (int k = 2; k <= 40; k += 2) {
    CHECK(denominator(bernoulli_exact(k)) == von_staudt_denominator(k));
  }
  CHECK(von_staudt_denominator(12) == 2730);
  CHECK_THROWS_AS(bernoulli_exact(-1), DomainError);
}

TEST_CASE("Bernoulli numbers from the series") {
  PrecisionContext ctx(40);
  PrecisionGuard guard(ctx);
  for (Method m : kMethods) {
    const auto b0 = bernoulli_series(0, m, builtin_table(), 20, ctx);
    CHECK(b0.index == 0);
    CHECK(mp::abs(b0.series_value.value - 1) < Real("1e-11"));
    const auto b2 = bernoulli_series(1, m, builtin_table(), 20, ctx);
    CHECK(mp::abs(b2.series_value.value - Real(1) / 6) < Real("1e-10"));
    const auto b4 = bernoulli_series(2, m, builtin_table(), 20, ctx);
    CHECK(rel(b4.series_value.value, Real(-1) / 30) < Real("1e-3"));
    const auto b6 = bernoulli_series(3, m, builtin_table(), 20, ctx);
    CHECK(rel(b6.series_value.value, Real(1) / 42) < Real("5e-4"));
    CHECK(b6.exact_value == Rational(1, 42));
  }
  CHECK(to_fixed_significant(bernoulli_series(0, Method::a_series, builtin_table(), 20, ctx).series_value.value, 12) ==
        "0.999999999999");
}

TEST_CASE("Bernoulli series converges with N on the quadrature table") {
  PrecisionContext ctx(60);
  PrecisionGuard guard(ctx);
  for (int r = 0; r <= 6; ++r) {
    Real previous(1e300);
    for (int N = 8; N <= 20; N += 4) {
      const auto b = bernoulli_series(r, Method::a_series, quadrature_table(), N, ctx);
      const Real err = mp::abs(b.series_value.value - to_real(b.exact_value, ctx));
      CHECK(err < previous);
      previous = err;
    }
  }
}

TEST_CASE("Gregory coefficients") {
  CHECK(gregory_coefficient(0) == 1);
  CHECK(gregory_coefficient(1) == Rational(1, 2));
  CHECK(gregory_coefficient(2) == Rational(-1, 12));
  CHECK(gregory_coefficient(3) == Rational(1, 24));
  CHECK(gregory_coefficient(4) == Rational(-19, 720));
  CHECK(gregory_coefficient(5) == Rational(3, 160));
  CHECK(gregory_coefficient(6) == Rational(-863, 60480));
}

TEST_CASE("Gregory bridge holds at r = 1 only") {
  PrecisionContext ctx(40);
  PrecisionGuard guard(ctx);
  const GregoryBridge b1 = gregory_bridge(1, builtin_table(), 20, ctx);
  CHECK(b1.rhs == Real(1) / 6);
  CHECK(mp::abs(b1.residual) < Real("1e-10"));
  const GregoryBridge b2 = gregory_bridge(2, builtin_table(), 20, ctx);
  CHECK(rel(b2.rhs, mp::cbrt(Real(19) / 10)) < ctx.eps());
  CHECK(mp::abs(b2.residual) > Real("0.1"));
  const GregoryBridge b3 = gregory_bridge(3, builtin_table(), 20, ctx);
  CHECK(b3.residual == b3.lhs - b3.rhs);
  CHECK_THROWS_AS(gregory_bridge(0, builtin_table(), 20, ctx), DomainError);
}

TEST_CASE("Bernoulli partial sums for gamma diverge") {
  const BernoulliPartialSums s = gamma_bernoulli_partial(12);
  REQUIRE(s.partial_sums.size() == 12);
  CHECK(s.partial_sums[0] == Rational(7, 12));
  CHECK(s.partial_sums[2] == Rational(1, 2) + Rational(1, 12) - Rational(1, 120) + Rational(1, 252));
  CHECK(s.argmin == 3);
  CHECK(s.smallest_term == Rational(1, 252));
  const Rational last = mp::abs(s.partial_sums[11] - s.partial_sums[10]);
  CHECK(last > 1);
  CHECK_THROWS_AS(gamma_bernoulli_partial(0), DomainError);
}

TEST_CASE("zeta at even integers") {
  PrecisionContext ctx(40);
  PrecisionGuard guard(ctx);
  const Real p = pi(ctx);
  CHECK(rel(zeta_even_exact(1, ctx), p * p / 6) < ctx.eps());
  CHECK(rel(zeta_even_exact(2, ctx), mp::pow(p, 4) / 90) < ctx.eps());
  CHECK(rel(zeta_even_exact(3, ctx), mp::pow(p, 6) / 945) < ctx.eps());
  for (Method m : kMethods) {
    CHECK(rel(zeta_even(1, builtin_table(), 20, ctx, m).value, zeta_even_exact(1, ctx)) < Real("1e-8"));
    CHECK(rel(zeta_even(2, builtin_table(), 20, ctx, m).value, zeta_even_exact(2, ctx)) < Real("1e-6"));
    CHECK(rel(zeta_even(3, builtin_table(), 20, ctx, m).value, zeta_even_exact(3, ctx)) < Real("1e-4"));
  }
  CHECK_THROWS_AS(zeta_even(0, builtin_table(), 20, ctx), DomainError);
}

TEST_CASE("method names") {
  CHECK(parse_method("a") == Method::a_series);
  CHECK(parse_method("b") == Method::b_series);
  CHECK(parse_method("c") == Method::c_series);
  CHECK(family_of(Method::b_series) == Family::bhat);
  CHECK_THROWS_AS(parse_method("q"), FormatError);
}
