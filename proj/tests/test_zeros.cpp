#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ximl/coefficients.hpp"
#include "ximl/errors.hpp"
#include "ximl/zeros.hpp"

using namespace ximl;
namespace mp = boost::multiprecision;

namespace {

const std::string kZeros = std::string(XIML_DATA_DIR) + "/zeros100.txt";

ZeroTable from_text(const std::string& text, const PrecisionContext& ctx, long max_count = -1) {
  std::istringstream in(text);
  return read_zeros(in, "mem", max_count, ctx);
}

// Nested loops over i < j (< k).
template <class T>
std::vector<T> brute_elementary(const std::vector<T>& x) {
  std::vector<T> e(4, T(0));
  e[0] = 1;
  const std::size_t m = x.size();
  for (std::size_t i = 0; i < m; ++i) {
    e[1] += x[i];
    for (std::size_t j = i + 1; j < m; ++j) {
      e[2] += x[i] * x[j];
      for (std::size_t k = j + 1; k < m; ++k) e[3] += x[i] * x[j] * x[k];
    }
  }
  return e;
}

}  // namespace

TEST_CASE("bundled zero table") {
  PrecisionContext ctx(40);
  const ZeroTable zt = load_zeros(kZeros, -1, ctx);
  PrecisionGuard guard(ctx);
  REQUIRE(zt.count() == 100);
  CHECK(zt.warnings.empty());
  CHECK(mp::abs(zt.values[0] - Real("14.134725141734693790457251983562")) < Real("1e-28"));
  for (int i = 1; i < zt.count(); ++i) CHECK(zt.values[i] > zt.values[i - 1]);
  CHECK(load_zeros(kZeros, 10, ctx).count() == 10);
  CHECK(first_zeros(zt, 8).texts.size() == 8);
  CHECK_THROWS_AS(first_zeros(zt, 101), DomainError);
}

TEST_CASE("zero file errors") {
  PrecisionContext ctx(30);
  CHECK_THROWS_AS(from_text("", ctx), FormatError);
  CHECK_THROWS_AS(from_text("# comment only\n", ctx), FormatError);
  try {
    from_text("14.134725\n21.022039\nabc\n", ctx);
    FAIL("expected a format error");
  } catch (const FormatError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(from_text("14.134725\n-3\n", ctx), DomainError);
  CHECK_THROWS_AS(from_text("0\n", ctx), DomainError);
  CHECK_THROWS_AS(load_zeros("/nonexistent/zeros.txt", -1, ctx), IoError);
}

TEST_CASE("unsorted and non-genuine files warn") {
  PrecisionContext ctx(30);
  const ZeroTable unsorted = from_text("21.022039\n14.134725\n", ctx);
  REQUIRE(unsorted.warnings.size() == 1);
  CHECK(unsorted.texts[0] == "14.134725");
  const ZeroTable toy = from_text("1\n2\n3\n", ctx);
  CHECK(toy.warnings.size() == 1);
  CHECK(toy.count() == 3);
}

TEST_CASE("Newton identities on a toy set") {
  PrecisionContext ctx(30);
  const ZeroTable toy = from_text("1\n2\n3\n", ctx);
  const SymmetricSums s = symmetric_sums(toy, 3, ctx);
  PrecisionGuard guard(ctx);
  CHECK(s.M == 3);
  CHECK(s.p[0] == 3);
  CHECK(mp::abs(s.e[1] - (1 + Real(1) / 4 + Real(1) / 9)) < ctx.eps());
  CHECK(to_fixed_significant(s.e[2], 5) == "0.38889");
  CHECK(mp::abs(s.e[2] - (s.p[1] * s.p[1] - s.p[2]) / 2) < ctx.eps());
  CHECK(mp::abs(s.e[3] - Real(1) / 36) < ctx.eps());
  CHECK_THROWS_AS(symmetric_sums(toy, 4, ctx), DomainError);
  CHECK_THROWS_AS(symmetric_sums(toy, 0, ctx), DomainError);

  const std::vector<Rational> x = {1, Rational(1, 4), Rational(1, 9)};
  std::vector<Rational> power(4, Rational(0));
  power[0] = 3;
  for (const auto& v : x) {
    power[1] += v;
    power[2] += v * v;
    power[3] += v * v * v;
  }
  CHECK(newton_elementary(power) == brute_elementary(x));
}

TEST_CASE("Newton identities equal nested loops for genuine zeros") {
  PrecisionContext ctx(40);
  const ZeroTable zt = load_zeros(kZeros, 8, ctx);
  PrecisionGuard guard(ctx);
  for (int m = 3; m <= 8; ++m) {
    const ZeroTable sub = first_zeros(zt, m);
    const std::vector<Rational> x = inverse_squares_exact(sub);
    std::vector<Rational> power(4, Rational(0));
    power[0] = m;
    for (const auto& v : x) {
      power[1] += v;
      power[2] += v * v;
      power[3] += v * v * v;
    }
    CHECK(newton_elementary(power) == brute_elementary(x));

    const SymmetricSums s = symmetric_sums(sub, 3, ctx);
    std::vector<Real> xr;
    for (const auto& t : sub.values) xr.push_back(1 / (t * t));
    const std::vector<Real> brute = brute_elementary(xr);
    for (int k = 1; k <= 3; ++k) {
      CHECK(mp::abs(s.e[k] - brute[k]) <= 100 * ctx.eps() * mp::abs(brute[k]));
    }
  }
}

TEST_CASE("power sums and the tail bound bracket") {
  PrecisionContext ctx(40);
  const ZeroTable zt = load_zeros(kZeros, -1, ctx);
  PrecisionGuard guard(ctx);
  const SymmetricSums s = symmetric_sums(zt, 2, ctx);
  CHECK(to_fixed_significant(s.p[1], 3) == "0.0200");
  // Over all zeros sum 1/t^2 = 0.02310499...
  CHECK(s.p[1] < Real("0.0231"));
  CHECK(s.p[1] + s.tail_bound > Real("0.0231"));
  Real previous(0);
  for (int m = 10; m <= 100; m += 10) {
    const SymmetricSums sm = symmetric_sums(first_zeros(zt, m), 1, ctx);
    CHECK(sm.p[1] > previous);
    previous = sm.p[1];
    CHECK(sm.p[1] + sm.tail_bound >= s.p[1]);
  }
  CHECK(mp::abs(zero_tail_bound(zt.values.back(), ctx) - s.tail_bound) == 0);
}

TEST_CASE("Jensen coefficients from zeros") {
  PrecisionContext ctx(40);
  const ZeroTable zt = load_zeros(kZeros, -1, ctx);
  PrecisionGuard guard(ctx);
  const Real c0 = jensen_from_zeros(zt, 0, builtin_table(), ctx);
  CHECK(mp::abs(c0 - 16 * parse_real(builtin_table().rows[0].bhat.text)) < ctx.eps());
  CHECK(to_fixed_significant(c0, 4) == "0.9942");
  const SymmetricSums s = symmetric_sums(zt, 3, ctx);
  for (int m : {20, 50, 100}) {
    const ZeroTable sub = first_zeros(zt, m);
    const Real c1 = jensen_from_zeros(sub, 1, builtin_table(), ctx);
    const Real bound = 2 * mp::abs(c0) * symmetric_sums(sub, 1, ctx).tail_bound;
    CHECK(mp::abs(c1 - parse_real(builtin_table().rows[1].c.text)) <= bound);
    CHECK(c1 < 0);
  }
  CHECK(jensen_from_zeros(zt, 2, builtin_table(), ctx) > 0);
  CHECK(jensen_from_zeros(zt, 3, builtin_table(), ctx) < 0);
  CHECK(mp::abs(jensen_from_zeros(zt, 2, builtin_table(), ctx) - c0 * 2 * s.e[2]) < ctx.eps());
  CHECK_THROWS_AS(jensen_from_zeros(zt, 4, builtin_table(), ctx), UnsupportedOrderError);
  CHECK_THROWS_AS(jensen_from_zeros(zt, -1, builtin_table(), ctx), DomainError);
}

TEST_CASE("sum over zeros of 1/rho") {
  PrecisionContext ctx(40);
  const ZeroTable zt = load_zeros(kZeros, -1, ctx);
  PrecisionGuard guard(ctx);
  const RhoSum r = rho_sum(zt, ctx);
  CHECK(to_fixed_significant(r.identity_rhs, 6) == "0.0230957");
  CHECK(r.value < r.identity_rhs);
  CHECK(rho_sum(first_zeros(zt, 50), ctx).value < r.value);
  const Real inner = gamma_series(Method::a_series, builtin_table(), 20, ctx).inner_sum;
  CHECK(mp::abs(8 * inner - r.identity_rhs) < Real("1e-11"));
}

TEST_CASE("Hadamard partial product at s = 1/2") {
  PrecisionContext ctx(40);
  const ZeroTable zt = load_zeros(kZeros, -1, ctx);
  PrecisionGuard guard(ctx);
  CHECK(hadamard_c0(first_zeros(zt, 0), ctx).value == 1);
  Real previous(1);
  for (int m = 1; m <= 100; ++m) {
    const Real v = hadamard_c0(first_zeros(zt, m), ctx).value;
    CHECK(v < previous);
    previous = v;
  }
  const SeriesResult<Real> h = hadamard_c0(zt, ctx);
  const Real c0 = parse_real(builtin_table().rows[0].c.text);
  CHECK(h.value > c0);
  CHECK(h.value - c0 <= h.error_bound + Real("1e-12"));
  const SymmetricSums s = symmetric_sums(zt, 2, ctx);
  CHECK(mp::abs(mp::log(h.value) + s.p[1] / 4) <= s.p[2] / 32);
}
